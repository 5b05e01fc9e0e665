//! The boundedness gate `r_g ≤ b_k`, small-module candidate lists and the
//! rank-two table of bounded pairs.

use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::root_data::{
    b_k, enumerate_dominant_dim_at_most, is_self_dual, r_g, so_datum, weyl_dim, Family, RootDatum,
    WeightVector,
};
use crate::series::{q, Q};

/// A reductive subalgebra `k`, described by its simple summands and the
/// dimension of its center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubalgebraDescriptor {
    pub summands: Vec<(Family, usize)>,
    pub central_dim: usize,
    pub embedding_tag: String,
}

impl SubalgebraDescriptor {
    pub fn new(summands: Vec<(Family, usize)>, central_dim: usize, tag: &str) -> Self {
        let k = Self { summands, central_dim, embedding_tag: tag.to_string() };
        assert!(k.dim() > 0, "a subalgebra must be nonzero");
        k
    }

    /// `sl(2)` with the given embedding label.
    pub fn sl2(tag: &str) -> Self {
        Self::new(vec![(Family::A, 1)], 0, tag)
    }

    /// `gl(2)`.
    pub fn gl2(tag: &str) -> Self {
        Self::new(vec![(Family::A, 1)], 1, tag)
    }

    /// A toral subalgebra of the given dimension.
    pub fn toral(dim: usize, tag: &str) -> Self {
        Self::new(vec![], dim, tag)
    }

    /// `so(n)`, `n ≥ 3`.
    pub fn so(n: usize) -> Self {
        match n {
            4 => Self::new(vec![(Family::A, 1), (Family::A, 1)], 0, "so"),
            _ => {
                let d = so_datum(n).expect("so(n) with n ≥ 3");
                Self::new(vec![(d.family(), d.rank())], 0, "so")
            }
        }
    }

    /// `sp(n)`, `n` even.
    pub fn sp(n: usize) -> Self {
        assert!(n >= 2 && n.is_multiple_of(2), "sp(n) needs even n");
        if n == 2 {
            Self::new(vec![(Family::A, 1)], 0, "sp")
        } else {
            Self::new(vec![(Family::C, n / 2)], 0, "sp")
        }
    }

    /// `sl(r) ⊕ sl(s)` acting on `ℂ^r ⊗ ℂ^s`.
    pub fn sl_pair(r: usize, s: usize) -> Self {
        Self::new(vec![(Family::A, r - 1), (Family::A, s - 1)], 0, "tensor")
    }

    fn data(&self) -> Vec<RootDatum> {
        self.summands.iter().map(|(f, n)| RootDatum::new(*f, *n).expect("valid summand")).collect()
    }

    pub fn dim(&self) -> u64 {
        self.data().iter().map(|d| d.dim() as u64).sum::<u64>() + self.central_dim as u64
    }

    pub fn rank(&self) -> u64 {
        self.summands.iter().map(|(_, n)| *n as u64).sum::<u64>() + self.central_dim as u64
    }

    pub fn b(&self) -> Q {
        b_k(self.dim(), self.rank())
    }
}

impl fmt::Display for SubalgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.summands.iter().map(|(fam, n)| format!("{fam:?}{n}")).collect();
        if self.central_dim > 0 {
            parts.push(format!("t{}", self.central_dim));
        }
        write!(f, "{} [{}]", parts.join("+"), self.embedding_tag)
    }
}

/// `r_g ≤ b_k`.  With `strict`, uses the summed bound
/// `r_{g_1} + … + r_{g_s} ≤ b_k`; otherwise `r_g` is the minimum over the
/// simple ideals.
pub fn necessary_condition(g: &[RootDatum], k: &SubalgebraDescriptor, strict: bool) -> bool {
    assert!(!g.is_empty(), "g must have at least one simple ideal");
    let lhs: u64 = if strict { g.iter().map(r_g).sum() } else { g.iter().map(r_g).min().expect("nonempty") };
    q(lhs as i64) <= k.b()
}

/// Nontrivial simple `k`-modules `V` with `dim V − 1 ≤ b_k`.
pub fn tha_candidates(k: &RootDatum) -> Vec<WeightVector> {
    let b = b_k(k.dim() as u64, k.rank() as u64);
    let cap = b.floor().to_integer().to_u64().expect("small") + 1;
    enumerate_dominant_dim_at_most(k, cap).into_iter().filter(|w| !w.is_zero()).collect()
}

/// The candidates admitting no invariant bilinear form.
pub fn le52_filter(k: &RootDatum, candidates: &[WeightVector]) -> Vec<WeightVector> {
    candidates.iter().filter(|w| !is_self_dual(k, w)).cloned().collect()
}

/// For a maximal reductive `k ⊂ sl(n)`: bounded iff `b_k ≥ n − 1`.
pub fn sl_n_maximal_bounded(k: &SubalgebraDescriptor, n: u64) -> bool {
    k.b() >= q(n as i64 - 1)
}

/// Semisimple `g` (as multisets of simple ideals, total rank ≤ `max_rank`)
/// passing the summed gate for `k = sl(2)`, excluding `g ≅ k` itself.
pub fn sl2_admissible_algebras(max_rank: usize) -> Vec<Vec<RootDatum>> {
    let k = SubalgebraDescriptor::sl2("any");
    let mut simple: Vec<RootDatum> = Vec::new();
    for n in 1..=max_rank {
        for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(d) = RootDatum::new(f, n) {
                // B2 = C2 and D3 = A3 are listed once
                let dup = (f == Family::B && n == 2) || (f == Family::D && n == 3);
                if !dup {
                    simple.push(d);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn go(
        simple: &[RootDatum],
        start: usize,
        left: usize,
        cur: &mut Vec<usize>,
        k: &SubalgebraDescriptor,
        out: &mut Vec<Vec<RootDatum>>,
    ) {
        if !cur.is_empty() {
            let g: Vec<RootDatum> = cur.iter().map(|i| simple[*i].clone()).collect();
            let is_k = g.len() == 1 && g[0].family() == Family::A && g[0].rank() == 1;
            if !is_k && necessary_condition(&g, k, true) {
                out.push(g);
            }
        }
        for i in start..simple.len() {
            if simple[i].rank() <= left {
                cur.push(i);
                go(simple, i, left - simple[i].rank(), cur, k, out);
                cur.pop();
            }
        }
    }
    go(&simple, 0, max_rank, &mut cur, &k, &mut out);
    out
}

/// One row of the rank-two bounded-pair table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub g: &'static str,
    pub k: &'static str,
    pub bounded: bool,
    /// `"list"` for rows of the classification list, `"excluded"` for the
    /// embeddings ruled out in its proof.
    pub source: &'static str,
}

const fn row(g: &'static str, k: &'static str, bounded: bool) -> PairRecord {
    PairRecord { g, k, bounded, source: if bounded { "list" } else { "excluded" } }
}

/// Reductive bounded pairs `(g, k)` with `g` semisimple of rank 2, plus the
/// excluded embeddings named alongside them.
pub fn rank2_bounded_pairs() -> &'static [PairRecord] {
    const TABLE: &[PairRecord] = &[
        row("sl2+sl2", "gl2", true),
        row("sl2+sl2", "sl2-diagonal", true),
        row("sl2+sl2", "toral", true),
        row("sl3", "sl2-root", true),
        row("sl3", "gl2-root", true),
        row("sl3", "sl2-principal", true),
        row("sl3", "cartan", true),
        row("sp4", "sl2+sl2", true),
        row("sp4", "gl2", true),
        row("sp4", "sl2-short-root", true),
        row("sp4", "sl2-principal", true),
        row("sp4", "cartan", true),
        row("g2", "sl3", true),
        row("g2", "sl2+sl2", true),
        row("g2", "gl2", true),
        row("sl2+sl2", "sl2-ideal", false),
        row("sl3", "toral-1", false),
        row("sp4", "toral-1", false),
        row("sp4", "sl2-long-root", false),
        row("g2", "toral-1", false),
        row("g2", "cartan", false),
        row("g2", "sl2", false),
    ];
    TABLE
}

/// Looks up a pair in [`rank2_bounded_pairs`]; `None` if not recorded.
pub fn query_rank2_pair(g: &str, k: &str) -> Option<bool> {
    rank2_bounded_pairs().iter().find(|r| r.g == g && r.k == k).map(|r| r.bounded)
}

/// Dimension of each weight in `ws`, for reporting.
pub fn with_dims(d: &RootDatum, ws: &[WeightVector]) -> Vec<(WeightVector, u64)> {
    ws.iter().map(|w| (w.clone(), weyl_dim(d, w).expect("dominant"))).collect()
}
