//! `g = sl(3)` with `k` a root `sl(2)`: the modules `L^±_{a,b}`.
//!
//! Characters are of the form `N(z) / (1 − z)` with a polynomial numerator
//! whose coefficients are all 1, so multiplicities grow by one per step
//! until they reach a plateau.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{classify_rational, ser_q, RatKind};
use crate::series::{cg_product, q, KCharacter, LaurentPoly, RationalChar, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Parameters of `L^±_{a,b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootCaseParams {
    pub sign: Sign,
    pub a: u32,
    #[serde(serialize_with = "ser_q")]
    pub b: Q,
}

impl RootCaseParams {
    pub fn new(sign: Sign, a: u32, b: Q) -> Self {
        Self { sign, a, b }
    }

    /// The `b` seen by the `+` machinery: `b` itself for `+`, `−a−b` for `−`.
    fn effective_b(&self) -> Q {
        match self.sign {
            Sign::Plus => self.b.clone(),
            Sign::Minus => -(q(self.a as i64) + &self.b),
        }
    }
}

impl fmt::Display for RootCaseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}_{{{},{}}}", self.sign, self.a, self.b)
    }
}

/// Which closed form applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootBranch {
    /// `(1 + z + … + z^a)/(1 − z)`.
    Generic,
    /// The quotient branch: `(z^{−b'−1} + … + z^a)/(1 − z)` with `b'` the
    /// effective parameter.
    Quotient,
}

/// Infinite-dimensionality: `b ∉ ℤ_{≥0}` for `+`, `−a−b ∉ ℤ_{≥0}` for `−`.
pub fn is_infinite_dimensional(p: &RootCaseParams) -> bool {
    !matches!(classify_rational(&p.effective_b()), RatKind::Integer(n) if n >= 0)
}

fn check(p: &RootCaseParams) -> Result<()> {
    if is_infinite_dimensional(p) {
        Ok(())
    } else {
        let what = match p.sign {
            Sign::Plus => format!("b = {} lies in ℤ_{{≥0}}", p.b),
            Sign::Minus => format!("−a−b = {} lies in ℤ_{{≥0}}", p.effective_b()),
        };
        Err(Error::InvalidParameter { case: "sl3-root", condition: format!("{what}: module is finite dimensional") })
    }
}

/// Branch selection on the effective parameter `b'`: the quotient form
/// applies when `−b' ∈ ℤ_{≥2}` and `a + b' ∈ ℤ_{≥−1}`.
pub fn branch(p: &RootCaseParams) -> RootBranch {
    match classify_rational(&p.effective_b()) {
        RatKind::Integer(b) if -b >= 2 && p.a as i64 + b >= -1 => RootBranch::Quotient,
        _ => RootBranch::Generic,
    }
}

/// `Σ_i min(i+1, a+1) z^i = (1 + z + … + z^a)/(1 − z)`.
pub fn generic_form(a: u32) -> RationalChar {
    RationalChar::with_factors(LaurentPoly::from_int_terms((0..=a as i64).map(|e| (e, 1))), [1])
}

/// `c(L^±_{a,b})` in closed form.
pub fn root_char(p: &RootCaseParams) -> Result<RationalChar> {
    check(p)?;
    match branch(p) {
        RootBranch::Generic => Ok(generic_form(p.a)),
        RootBranch::Quotient => {
            let b = crate::series::q_to_i64(&p.effective_b()).expect("integral in this branch");
            let lo = -b - 1;
            let num = LaurentPoly::from_int_terms((lo..=p.a as i64).map(|e| (e, 1)));
            Ok(RationalChar::with_factors(num, [1]))
        }
    }
}

/// `c(S^•(V_1) ⊗ V_a) = Σ_n z^n ⊗ z^a`, summed directly to `order`.
///
/// `z^n ⊗ z^a` has lowest exponent `|n − a|`, so `n ≤ order + a` suffices.
pub fn induced_char_oracle(a: u32, order: usize) -> KCharacter {
    let mut acc = LaurentPoly::zero();
    for n in 0..=(order as i64 + a as i64) {
        acc = &acc + &cg_product(n, a as i64).expect("nonnegative");
    }
    KCharacter::from_poly(&acc, order)
}

/// Minimal k-type, its multiplicity, and whether the module is
/// multiplicity free (the plateau value is 1).
pub fn root_minimal_type_and_mfree(p: &RootCaseParams) -> Result<(usize, Q, bool)> {
    let r = root_char(p)?;
    let num = r.numerator();
    let lo = num.min_exp().expect("nonzero numerator");
    let plateau = num.len();
    Ok((lo as usize, num.coeff(lo), plateau == 1))
}

/// Membership in the four multiplicity-free families: `L^±_{0,b}`,
/// `L^+_{a,b}` with `a+b = −1, −b ∈ ℤ_{≥2}`, and `L^−_{a,b}` with
/// `b = 1, a+b ∈ ℤ_{≥2}`.
pub fn in_mfree_families(p: &RootCaseParams) -> bool {
    if p.a == 0 {
        return true;
    }
    let a = q(p.a as i64);
    match p.sign {
        Sign::Plus => {
            (&a + &p.b) == q(-1) && matches!(classify_rational(&p.b), RatKind::Integer(b) if b <= -2)
        }
        Sign::Minus => p.b == q(1) && matches!(classify_rational(&(&a + &p.b)), RatKind::Integer(s) if s >= 2),
    }
}

/// Eventual multiplicity: `a+1` in the generic branch, `a+b'+2` in the
/// quotient branch.
pub fn plateau(p: &RootCaseParams) -> Result<Q> {
    Ok(q(root_char(p)?.numerator().len() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qr;

    fn p(sign: Sign, a: u32, b: Q) -> RootCaseParams {
        RootCaseParams::new(sign, a, b)
    }

    #[test]
    fn generic_examples() {
        let c = root_char(&p(Sign::Plus, 0, qr(1, 2))).unwrap();
        assert_eq!(c, RationalChar::geometric(0, 1));
        let c = root_char(&p(Sign::Plus, 2, qr(-1, 2))).unwrap().expand(5).unwrap();
        assert_eq!(c, KCharacter::from_ints(&[1, 2, 3, 3, 3, 3]));
    }

    #[test]
    fn quotient_example() {
        let x = p(Sign::Plus, 1, q(-2));
        assert_eq!(branch(&x), RootBranch::Quotient);
        let c = root_char(&x).unwrap().expand(5).unwrap();
        assert_eq!(c, KCharacter::from_ints(&[0, 1, 1, 1, 1, 1]));
        let diff = generic_form(1).sub(&generic_form(0));
        assert_eq!(root_char(&x).unwrap(), diff);
    }

    #[test]
    fn minus_sign_substitutes() {
        // L^-_{a,b} uses b' = −a−b: a = 3, b = 1 gives b' = −4, quotient branch
        let x = p(Sign::Minus, 3, q(1));
        assert_eq!(branch(&x), RootBranch::Quotient);
        let (t, m, mf) = root_minimal_type_and_mfree(&x).unwrap();
        assert_eq!((t, m, mf), (3, q(1), true));
    }

    #[test]
    fn finite_dimensional_rejected() {
        assert!(root_char(&p(Sign::Plus, 2, q(3))).is_err());
        assert!(root_char(&p(Sign::Minus, 2, q(-2))).is_err());
        assert!(root_char(&p(Sign::Minus, 2, q(-3))).is_err());
        assert!(root_char(&p(Sign::Minus, 2, q(1))).is_ok());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(induced_char_oracle(0, 5), KCharacter::from_ints(&[1; 6]));
        assert_eq!(induced_char_oracle(1, 4), KCharacter::from_ints(&[1, 2, 2, 2, 2]));
    }

    #[test]
    fn minimal_type_examples() {
        assert_eq!(root_minimal_type_and_mfree(&p(Sign::Plus, 0, qr(1, 2))).unwrap(), (0, q(1), true));
        assert_eq!(root_minimal_type_and_mfree(&p(Sign::Plus, 2, qr(-1, 2))).unwrap(), (0, q(1), false));
        assert_eq!(root_minimal_type_and_mfree(&p(Sign::Plus, 3, q(-4))).unwrap(), (3, q(1), true));
        assert!(in_mfree_families(&p(Sign::Plus, 3, q(-4))));
        assert!(!in_mfree_families(&p(Sign::Plus, 2, qr(-1, 2))));
    }
}
