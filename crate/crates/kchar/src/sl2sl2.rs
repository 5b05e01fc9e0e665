//! `g = sl(2) ⊕ sl(2)` with `k` the diagonal `sl(2)`.
//!
//! Every simple infinite-dimensional module here is bounded and
//! multiplicity free; its character depends only on the offset `n`.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{classify_rational, RatKind};
use crate::series::{cg_product, LaurentPoly, RationalChar, Q};

/// Parameters of `W_{a, a−n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SctParams {
    #[serde(serialize_with = "crate::params::ser_q")]
    pub a: Q,
    pub n: u32,
}

impl SctParams {
    pub fn new(a: Q, n: u32) -> Self {
        Self { a, n }
    }
}

/// `a ∉ ℤ_{<0}`, and `a − n ≤ 0` when `a` is an integer.
pub fn sct_is_valid(p: &SctParams) -> bool {
    match classify_rational(&p.a) {
        RatKind::Integer(a) => a >= 0 && a - p.n as i64 <= 0,
        _ => true,
    }
}

/// Rejects parameters failing [`sct_is_valid`], naming the condition.
pub fn check(p: &SctParams) -> Result<()> {
    if sct_is_valid(p) {
        return Ok(());
    }
    let condition = if p.a.is_negative() {
        format!("a = {} is a negative integer", p.a)
    } else {
        format!("a = {} is an integer with a − n = {} > 0", p.a, &p.a - Q::from_integer(p.n.into()))
    };
    Err(Error::InvalidParameter { case: "sl2sl2", condition })
}

/// `c(W_{a,a−n}) = z^n / (1 − z²)`.
pub fn sct_char(n: u32) -> RationalChar {
    RationalChar::geometric(n as i64, 2)
}

/// Character of the finite-dimensional quotient `V_{a−1} ⊠ V_{n−a−1}`
/// restricted to the diagonal, i.e. `z^{a−1} ⊗ z^{n−a−1}`.
///
/// For `n = a` the second factor is `V_{−1} = 0` and the result is zero.
pub fn finite_dim_char(a: i64, n: i64) -> Result<LaurentPoly> {
    if a < 1 || n < a {
        return Err(Error::InvalidParameter {
            case: "sl2sl2 finite quotient",
            condition: format!("need 1 ≤ a ≤ n (got a = {a}, n = {n})"),
        });
    }
    if n == a {
        return Ok(LaurentPoly::zero());
    }
    cg_product(a - 1, n - a - 1)
}

/// The exponent range `z^{n−2} + z^{n−4} + … + z^{|n−2a−2|}` exactly as
/// written in the classification proof; kept to compare against
/// [`finite_dim_char`].
pub fn finite_dim_char_as_printed(a: i64, n: i64) -> LaurentPoly {
    let lo = (n - 2 * a - 2).abs();
    let mut p = LaurentPoly::zero();
    let mut e = n - 2;
    while e >= lo {
        p.add_term(e, Q::from_integer(1.into()));
        e -= 2;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q, qr, KCharacter};

    #[test]
    fn validity_examples() {
        assert!(sct_is_valid(&SctParams::new(qr(1, 2), 0)));
        assert!(!sct_is_valid(&SctParams::new(q(2), 1)));
        assert!(sct_is_valid(&SctParams::new(q(0), 3)));
        assert!(!sct_is_valid(&SctParams::new(q(-1), 3)));
        assert!(check(&SctParams::new(q(-1), 3)).is_err());
    }

    #[test]
    fn char_examples() {
        let c = sct_char(5).expand(9).unwrap();
        assert_eq!(c, KCharacter::from_ints(&[0, 0, 0, 0, 0, 1, 0, 1, 0, 1]));
        assert_eq!(sct_char(0), RationalChar::geometric(0, 2));
    }

    #[test]
    fn finite_quotient() {
        assert_eq!(finite_dim_char(1, 2).unwrap(), LaurentPoly::one());
        assert_eq!(finite_dim_char(2, 4).unwrap(), LaurentPoly::from_int_terms([(2, 1), (0, 1)]));
        assert!(finite_dim_char(1, 1).unwrap().is_zero());
        assert!(finite_dim_char(0, 1).is_err());
    }

    #[test]
    fn printed_range_disagrees_with_clebsch_gordan() {
        // lowest exponent is |n − 2a|, not |n − 2a − 2|
        assert_eq!(finite_dim_char(2, 4).unwrap(), LaurentPoly::from_int_terms([(2, 1), (0, 1)]));
        assert_eq!(finite_dim_char_as_printed(2, 4), LaurentPoly::from_int_terms([(2, 1)]));
        assert_eq!(finite_dim_char(1, 4).unwrap(), LaurentPoly::from_int_terms([(2, 1)]));
        assert_eq!(finite_dim_char_as_printed(1, 4), LaurentPoly::from_int_terms([(2, 1), (0, 1)]));
    }
}
