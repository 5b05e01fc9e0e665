//! `g = sp(4)` with `k` a short-root `sl(2)`: the modules `L_{a,b}` and
//! their lowest-weight partners `L'_{−a,−b}`.
//!
//! The closed form is `((a+b)/2) · z^{a−b−1} ⊗ 1/(1 − z²)`. The oracle
//! expands the two-variable Weyl character level by level in `y` and
//! decomposes each level under `k`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::show_doubled;
use crate::series::{q, qr, weight_char, KCharacter, LaurentPoly, RationalChar, Q};

/// `(a, b)` stored doubled; `dual` selects `L'_{−a,−b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Sp4RootParams {
    pub a2: i64,
    pub b2: i64,
    pub dual: bool,
}

impl Sp4RootParams {
    pub fn new(a2: i64, b2: i64) -> Self {
        Self { a2, b2, dual: false }
    }

    pub fn dual(self) -> Self {
        Self { dual: !self.dual, ..self }
    }

    /// `a − b`.
    fn p(&self) -> i64 {
        (self.a2 - self.b2) / 2
    }

    /// `a + b`.
    fn q(&self) -> i64 {
        (self.a2 + self.b2) / 2
    }
}

impl fmt::Display for Sp4RootParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dual {
            write!(f, "L'_{{{},{}}}", show_doubled(-self.a2), show_doubled(-self.b2))
        } else {
            write!(f, "L_{{{},{}}}", show_doubled(self.a2), show_doubled(self.b2))
        }
    }
}

/// `a > |b|` with `a, b ∈ ½ + ℤ`.
pub fn sp4_root_valid(p: &Sp4RootParams) -> bool {
    p.a2 % 2 != 0 && p.b2 % 2 != 0 && p.a2 > p.b2.abs()
}

fn check(p: &Sp4RootParams) -> Result<()> {
    if sp4_root_valid(p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            case: "sp4-root",
            condition: format!(
                "need a > |b| with a, b ∈ 1/2 + ℤ (got a = {}, b = {})",
                show_doubled(p.a2),
                show_doubled(p.b2)
            ),
        })
    }
}

/// `c(L_{a,b}) = c(L'_{−a,−b}) = ((a+b)/2) · π(χ_{a−b−1} / (1 − z²))`.
pub fn sp4_root_char(p: &Sp4RootParams) -> Result<RationalChar> {
    check(p)?;
    let m = (p.p() - 1) as u32;
    let base = RationalChar::with_factors(weight_char(m), [2]).pi_project();
    Ok(base.scale(&qr(p.q(), 2)))
}

/// The two-variable Weyl character grouped by `y`-exponent, keeping the
/// levels fed only by `i + j ≤ depth` in the geometric expansion.
///
/// Level `e` is the `x`-polynomial multiplying `y^e` in
/// `X(x) Y(y) y^{−2} Σ_{i,j ≥ 0} x^{2j−2i} y^{−2(i+j)}`, where
/// `X = (x^{a−b} − x^{b−a})/(x − x^{−1})` and `Y` likewise with `a + b`.
pub fn weyl_h_char_levels(a2: i64, b2: i64, depth: i64) -> BTreeMap<i64, LaurentPoly> {
    let p = (a2 - b2) / 2;
    let qq = (a2 + b2) / 2;
    let x_part = weight_char((p - 1) as u32);
    let mut levels: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    // level e collects (t, k) with e = q − 3 − 2t − 2k, 0 ≤ t < q
    let e_top = qq - 3;
    let mut e = e_top;
    loop {
        let kmax = (e_top - e) / 2;
        if kmax > depth {
            break;
        }
        let mut s = LaurentPoly::zero();
        for t in 0..qq {
            let k = kmax - t;
            if k < 0 {
                break;
            }
            for j in 0..=k {
                s.add_term(4 * j - 2 * k, q(1));
            }
        }
        levels.insert(e, &s * &x_part);
        e -= 2;
    }
    levels
}

/// `y → 1` specialization of [`weyl_h_char_levels`] as a k-character.
///
/// Each level is decomposed on its own (`[V_j] = m_j − m_{j+2}`) and the
/// results are summed; `depth = order + 2(a+b) + (a−b) + 4` levels suffice.
pub fn weyl_h_char_oracle(a2: i64, b2: i64, order: usize) -> Result<KCharacter> {
    let p = Sp4RootParams::new(a2, b2);
    check(&p)?;
    let depth = order as i64 + 2 * p.q() + p.p() + 4;
    Ok(specialize(&weyl_h_char_levels(a2, b2, depth), order))
}

/// Sums the per-level k-decompositions up to `order`.
pub fn specialize(levels: &BTreeMap<i64, LaurentPoly>, order: usize) -> KCharacter {
    let mut acc = vec![Q::zero(); order + 1];
    for w in levels.values() {
        for (j, slot) in acc.iter_mut().enumerate() {
            let j = j as i64;
            let m = w.coeff(j) - w.coeff(j + 2);
            if !m.is_zero() {
                *slot += m;
            }
        }
    }
    KCharacter::from_coeffs(acc)
}

/// `(1, a+b)` when `a − b` is even, `(0, (a+b)/2)` when it is odd.
pub fn sp4_root_minimal_type(p: &Sp4RootParams) -> Result<(usize, Q)> {
    check(p)?;
    Ok(if p.p() % 2 == 0 { (1, q(p.q())) } else { (0, qr(p.q(), 2)) })
}

/// Multiplicity free iff `a = 3/2`.
pub fn sp4_root_mfree(p: &Sp4RootParams) -> Result<bool> {
    check(p)?;
    Ok(p.a2 == 3)
}

/// Eventual multiplicity `(a² − b²)/2` on exponents `i ≡ a − b − 1 (mod 2)`.
pub fn sp4_root_plateau(p: &Sp4RootParams) -> Result<(usize, Q)> {
    check(p)?;
    Ok((((p.p() - 1) % 2) as usize, qr(p.a2 * p.a2 - p.b2 * p.b2, 8)))
}

/// Both modules with central character `χ(a, b)`: `L_{a,b}` and `L'_{−a,−b}`.
pub fn classify(a2: i64, b2: i64) -> Result<Vec<Sp4RootParams>> {
    let p = Sp4RootParams::new(a2, b2);
    check(&p)?;
    Ok(vec![p, p.dual()])
}
