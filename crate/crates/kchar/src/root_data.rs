//! Root systems of simple Lie algebras and the Weyl dimension formula.
//!
//! Simple roots are numbered as in Bourbaki's tables.  The invariant form is
//! normalized so that long roots have square length 2; `d_i = (α_i, α_i)/2`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{q, qr, Q};

/// Cartan type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A dominant weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `k · ω_i` (1-based `i`).
    pub fn fundamental(rank: usize, i: usize, k: i64) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = k;
        Self(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|x| *x >= 0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| if *c == 1 { format!("ω{}", i + 1) } else { format!("{c}ω{}", i + 1) })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Root datum of a simple Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    /// `cartan[i][j] = ⟨α_i^∨, α_j⟩`.
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)/2`.
    half_norms: Vec<Q>,
    /// Positive roots in simple-root coordinates.
    positive_roots: Vec<Vec<i64>>,
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

impl RootDatum {
    /// Builds the datum for `family` and `rank`; rejects non-existent or
    /// non-simple combinations (e.g. `D2`, `E5`).
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |why: &str| Error::InvalidParameter { case: "root datum", condition: why.to_string() };
        let n = rank;
        let (cartan, half_norms) = match family {
            Family::A => {
                if n < 1 {
                    return Err(bad("A_n needs n ≥ 1"));
                }
                (chain(n), vec![q(1); n])
            }
            Family::B => {
                if n < 2 {
                    return Err(bad("B_n needs n ≥ 2"));
                }
                let mut c = chain(n);
                c[n - 1][n - 2] = -2;
                let mut d = vec![q(1); n];
                d[n - 1] = qr(1, 2);
                (c, d)
            }
            Family::C => {
                if n < 2 {
                    return Err(bad("C_n needs n ≥ 2"));
                }
                let mut c = chain(n);
                c[n - 2][n - 1] = -2;
                let mut d = vec![qr(1, 2); n];
                d[n - 1] = q(1);
                (c, d)
            }
            Family::D => {
                if n < 3 {
                    return Err(bad("D_n needs n ≥ 3"));
                }
                let mut c = chain(n);
                c[n - 2][n - 1] = 0;
                c[n - 1][n - 2] = 0;
                c[n - 3][n - 1] = -1;
                c[n - 1][n - 3] = -1;
                (c, vec![q(1); n])
            }
            Family::E => {
                if !(6..=8).contains(&n) {
                    return Err(bad("E_n needs 6 ≤ n ≤ 8"));
                }
                let mut c = vec![vec![0; n]; n];
                for (i, row) in c.iter_mut().enumerate() {
                    row[i] = 2;
                }
                let mut link = |a: usize, b: usize| {
                    c[a - 1][b - 1] = -1;
                    c[b - 1][a - 1] = -1;
                };
                link(1, 3);
                link(2, 4);
                for i in 3..n {
                    link(i, i + 1);
                }
                (c, vec![q(1); n])
            }
            Family::F => {
                if n != 4 {
                    return Err(bad("F only exists in rank 4"));
                }
                let mut c = chain(4);
                c[2][1] = -2;
                (c, vec![q(1), q(1), qr(1, 2), qr(1, 2)])
            }
            Family::G => {
                if n != 2 {
                    return Err(bad("G only exists in rank 2"));
                }
                (vec![vec![2, -3], vec![-1, 2]], vec![qr(1, 3), q(1)])
            }
        };
        for i in 0..n {
            for j in 0..n {
                debug_assert_eq!(&half_norms[i] * q(cartan[i][j]), &half_norms[j] * q(cartan[j][i]));
            }
        }
        let positive_roots = positive_roots(&cartan);
        Ok(Self { family, rank, cartan, half_norms, positive_roots })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// `ρ` in the fundamental-weight basis.
    pub fn rho(&self) -> WeightVector {
        WeightVector(vec![1; self.rank])
    }

    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    /// `(α_i, α_j)`.
    pub fn simple_pairing(&self, i: usize, j: usize) -> Q {
        &self.half_norms[i] * q(self.cartan[i][j])
    }

    /// `(α, β)` for roots in simple-root coordinates.
    pub fn root_pairing(&self, a: &[i64], b: &[i64]) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| **y != 0) {
                s += self.simple_pairing(i, j) * q(x * y);
            }
        }
        s
    }

    /// `(λ, α^∨)` for `λ` in fundamental-weight coordinates.
    pub fn coroot_pairing(&self, lambda: &[Q], alpha: &[i64]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank {
            if alpha[i] != 0 {
                s += &self.half_norms[i] * &lambda[i] * q(alpha[i]);
            }
        }
        s * q(2) / self.root_pairing(alpha, alpha)
    }

    /// The highest root: the positive root of maximal height.
    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.iter().max_by_key(|r| r.iter().sum::<i64>()).expect("nonempty")
    }

    /// Display name such as `A2` or `E6`.
    pub fn name(&self) -> String {
        format!("{:?}{}", self.family, self.rank)
    }
}

/// Positive roots from a Cartan matrix via root strings.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut level_start = 0;
    loop {
        let level_end = roots.len();
        for r in level_start..level_end {
            for i in 0..n {
                let beta = roots[r].clone();
                // ⟨β, α_i^∨⟩
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] >= 0 && roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !roots.contains(&up) {
                        roots.push(up);
                    }
                }
            }
        }
        if roots.len() == level_end {
            break;
        }
        level_start = level_end;
    }
    roots
}

impl FromStr for RootDatum {
    type Err = Error;

    /// Accepts Cartan names (`A2`, `C3`, `G2`, `E6`) and classical names
    /// (`sl3`, `so9`, `sp4`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace(['(', ')', '_'], "");
        let bad = || Error::Parse { input: s.to_string(), reason: "unknown simple Lie algebra".into() };
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = t.strip_prefix("sl") {
            let m = num(rest)?;
            return if m >= 2 { RootDatum::new(Family::A, m - 1) } else { Err(bad()) };
        }
        if let Some(rest) = t.strip_prefix("so") {
            return so_datum(num(rest)?);
        }
        if let Some(rest) = t.strip_prefix("sp") {
            let m = num(rest)?;
            return match m {
                2 => RootDatum::new(Family::A, 1),
                m if m >= 4 && m.is_even() => RootDatum::new(Family::C, m / 2),
                _ => Err(bad()),
            };
        }
        let (head, tail) = t.split_at(1);
        let family = match head {
            "a" => Family::A,
            "b" => Family::B,
            "c" => Family::C,
            "d" => Family::D,
            "e" => Family::E,
            "f" => Family::F,
            "g" => Family::G,
            _ => return Err(bad()),
        };
        RootDatum::new(family, num(tail)?)
    }
}

/// `so(m)` for `m = 3` or `m ≥ 5`.
pub fn so_datum(m: usize) -> Result<RootDatum> {
    match m {
        3 => RootDatum::new(Family::A, 1),
        m if m >= 5 && m.is_odd() => RootDatum::new(Family::B, (m - 1) / 2),
        m if m >= 6 => RootDatum::new(Family::D, m / 2),
        _ => Err(Error::InvalidParameter {
            case: "so(m)",
            condition: format!("so({m}) is not simple"),
        }),
    }
}

/// Exact dimension of the simple module with highest weight `λ`:
/// `Π_{α>0} (λ+ρ, α^∨) / (ρ, α^∨)`.
pub fn weyl_dim(d: &RootDatum, lambda: &WeightVector) -> Result<u64> {
    if lambda.0.len() != d.rank || !lambda.is_dominant() {
        return Err(Error::InvalidParameter {
            case: "weyl_dim",
            condition: format!("{lambda:?} is not a dominant integral weight of {}", d.name()),
        });
    }
    let lr: Vec<Q> = lambda.0.iter().map(|x| q(x + 1)).collect();
    let rho: Vec<Q> = vec![Q::one(); d.rank];
    let mut num = Q::one();
    for a in &d.positive_roots {
        num *= d.coroot_pairing(&lr, a) / d.coroot_pairing(&rho, a);
    }
    debug_assert!(num.is_integer());
    Ok(num.to_integer().try_into().expect("dimension fits in u64"))
}

/// All dominant integral `λ` with `weyl_dim(λ) ≤ c`, sorted by dimension
/// then weight.
///
/// The dimension is strictly increasing in every coordinate, so a depth
/// first search that stops as soon as the bound is exceeded is complete;
/// each coordinate is also bounded by `c − 1` since `(λ+ρ, α_i^∨) ≤ c`.
pub fn enumerate_dominant_dim_at_most(d: &RootDatum, c: u64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; d.rank];
    fn go(d: &RootDatum, c: u64, pos: usize, cur: &mut Vec<i64>, out: &mut Vec<(u64, WeightVector)>) {
        if pos == d.rank {
            let w = WeightVector(cur.clone());
            let dim = weyl_dim(d, &w).expect("dominant");
            if dim <= c {
                out.push((dim, w));
            }
            return;
        }
        let mut k = 0;
        loop {
            cur[pos] = k;
            // probe with the remaining coordinates at zero
            let mut probe = cur.clone();
            for x in probe.iter_mut().skip(pos + 1) {
                *x = 0;
            }
            if weyl_dim(d, &WeightVector(probe)).expect("dominant") > c || k as u64 >= c.max(1) {
                break;
            }
            go(d, c, pos + 1, cur, out);
            k += 1;
        }
        cur[pos] = 0;
    }
    go(d, c, 0, &mut cur, &mut out);
    out.sort();
    out.into_iter().map(|(_, w)| w).collect()
}

/// Half the dimension of the minimal nilpotent orbit.
pub fn r_g(d: &RootDatum) -> u64 {
    let n = d.rank as u64;
    match d.family {
        Family::A => n,
        Family::C => n,
        Family::B => 2 * n - 2,
        Family::D => 2 * n - 3,
        Family::G => 3,
        Family::F => 8,
        Family::E => match n {
            6 => 11,
            7 => 17,
            _ => 29,
        },
    }
}

/// `b_k = (dim k + rk k)/2`, the dimension of a Borel subalgebra.
pub fn b_k(dim_k: u64, rank_k: u64) -> Q {
    Q::new((dim_k + rank_k).into(), 2u32.into())
}

/// The permutation of simple roots induced by `−w₀`.
pub fn duality_involution(d: &RootDatum) -> Vec<usize> {
    let n = d.rank;
    let mut p: Vec<usize> = (0..n).collect();
    match d.family {
        Family::A => p.reverse(),
        Family::D if n.is_odd() => p.swap(n - 2, n - 1),
        Family::E if n == 6 => {
            // Bourbaki labels: 1↔6, 3↔5, 2 and 4 fixed
            p = vec![5, 1, 4, 3, 2, 0];
        }
        _ => {}
    }
    p
}

/// True iff `−w₀(λ) = λ`, i.e. the module is isomorphic to its dual.
pub fn is_self_dual(d: &RootDatum, lambda: &WeightVector) -> bool {
    let p = duality_involution(d);
    (0..d.rank).all(|i| lambda.0[i] == lambda.0[p[i]])
}
