//! `g = sl(3)` with `k` a principal `sl(2)`: the modules `I^±_{u,n}`,
//! `J_{u,n}` and the twisted `(I^±_{−2,n})^τ`.
//!
//! Closed forms are assembled from the building blocks `κ_n(a)` and
//! `μ_n(a)`; [`recursion_oracle`] recomputes every character from the
//! `n = 0` table by tensoring with `S^n(V_2)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{classify_rational, ser_q, RatKind};
use crate::series::{q, tensor_char, KCharacter, LaurentPoly, RationalChar, Q};

/// Module family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sl3Family {
    #[serde(rename = "I+")]
    IPlus,
    #[serde(rename = "I-")]
    IMinus,
    J,
    #[serde(rename = "I+tau")]
    IPlusTau,
    #[serde(rename = "I-tau")]
    IMinusTau,
}

impl Sl3Family {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "I+" => Self::IPlus,
            "I-" => Self::IMinus,
            "J" => Self::J,
            "I+tau" | "I+τ" => Self::IPlusTau,
            "I-tau" | "I-τ" => Self::IMinusTau,
            _ => {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "expected one of I+, I-, J, I+tau, I-tau".into(),
                })
            }
        })
    }

    /// The family with the twist removed.
    pub fn untwisted(self) -> Self {
        match self {
            Self::IPlusTau => Self::IPlus,
            Self::IMinusTau => Self::IMinus,
            f => f,
        }
    }

    pub fn is_twisted(self) -> bool {
        matches!(self, Self::IPlusTau | Self::IMinusTau)
    }

    /// `I^± ↦ I^∓`, `J ↦ J`; the partner used one step up in `u`.
    fn partner(self) -> Self {
        match self.untwisted() {
            Self::IPlus => Self::IMinus,
            Self::IMinus => Self::IPlus,
            f => f,
        }
    }
}

impl fmt::Display for Sl3Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::IPlus => "I+",
            Self::IMinus => "I-",
            Self::J => "J",
            Self::IPlusTau => "I+tau",
            Self::IMinusTau => "I-tau",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrincipalSl3Id {
    pub family: Sl3Family,
    #[serde(serialize_with = "ser_q")]
    pub u: Q,
    pub n: u32,
}

impl PrincipalSl3Id {
    pub fn new(family: Sl3Family, u: Q, n: u32) -> Self {
        Self { family, u, n }
    }
}

impl fmt::Display for PrincipalSl3Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_twisted() {
            write!(f, "({}_{{{},{}}})^tau", self.family.untwisted(), self.u, self.n)
        } else {
            write!(f, "{}_{{{},{}}}", self.family, self.u, self.n)
        }
    }
}

fn bad(condition: String) -> Error {
    Error::InvalidParameter { case: "sl3-principal", condition }
}

/// Validity of an id: `J` needs `u ∈ ½ + ℤ`; twisted modules need
/// `u = −2`; integral `u` must avoid `{−1, 0, …, n−1}`.
pub fn check(id: &PrincipalSl3Id) -> Result<()> {
    let kind = classify_rational(&id.u);
    if id.family == Sl3Family::J && !matches!(kind, RatKind::HalfOdd(_)) {
        return Err(bad(format!("J requires u ∈ 1/2 + ℤ (got u = {})", id.u)));
    }
    if id.family.is_twisted() && kind != RatKind::Integer(-2) {
        return Err(bad(format!("twisted modules exist only for u = −2 (got u = {})", id.u)));
    }
    if let RatKind::Integer(k) = kind {
        if -1 <= k && k < id.n as i64 {
            return Err(bad(format!("integral u = {k} lies in {{−1, …, n−1}} with n = {}", id.n)));
        }
    }
    Ok(())
}

pub fn is_valid(id: &PrincipalSl3Id) -> bool {
    check(id).is_ok()
}

/// Weights of `S^n(V_2)`, built by peeling off the top weight:
/// `W_n = z²·W_{n−1} + (1 + z^{−2} + … + z^{−2n})`.
pub fn sym_v2_weights(n: u32) -> LaurentPoly {
    let mut w = LaurentPoly::one();
    for m in 1..=n as i64 {
        let tail = LaurentPoly::from_int_terms((0..=m).map(|k| (-2 * k, 1)));
        w = &w.shift(2) + &tail;
    }
    w
}

/// Multiplicities of a symmetric weight polynomial: `[V_j] = m_j − m_{j+2}`.
pub fn decompose_weights(w: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in w.terms() {
        if e >= 0 {
            out.add_term(e, c - w.coeff(e + 2));
        }
    }
    out
}

/// `c(S^n(V_2))`, the k-character of `V_{n,0}`.
pub fn restrict_sym_v2(n: u32) -> LaurentPoly {
    decompose_weights(&sym_v2_weights(n))
}

fn over_four(num: LaurentPoly) -> RationalChar {
    RationalChar::with_factors(num, [4])
}

/// `z^e / (1 − z²)` written over `(1 − z⁴)`.
fn add_half_period(num: &mut LaurentPoly, e: i64) {
    num.add_term(e, Q::one());
    num.add_term(e + 2, Q::one());
}

/// `κ_n(a)`, `a ≥ 0`, in closed form.
pub fn kappa(n: u32, a: i64) -> Result<RationalChar> {
    if a < 0 {
        return Err(bad(format!("κ_n(a) needs a ≥ 0 (got {a})")));
    }
    let p = (n / 2) as i64;
    let mut num = LaurentPoly::zero();
    if n.is_multiple_of(2) {
        num.add_term(a, Q::one());
        for j in 1..=p {
            add_half_period(&mut num, (a - 4 * j).abs());
        }
    } else {
        for j in 0..=p {
            add_half_period(&mut num, (a - 4 * j - 2).abs());
        }
    }
    Ok(over_four(num))
}

/// `μ_n(a)`, `a ≥ 2`, in closed form.
pub fn mu(n: u32, a: i64) -> Result<RationalChar> {
    if a < 2 {
        return Err(bad(format!("μ_n(a) needs a ≥ 2 (got {a})")));
    }
    let p = (n / 2) as i64;
    let mut num = LaurentPoly::zero();
    if n.is_multiple_of(2) {
        num.add_term(a, Q::one());
        for j in 1..=p {
            add_half_period(&mut num, a - 2 + 4 * j);
        }
    } else {
        for j in 0..=p {
            add_half_period(&mut num, a + 4 * j);
        }
    }
    Ok(over_four(num))
}

/// `X ⊗ c` for a rational character `X` and a finite k-character `c`.
fn tensor_rational(x: &RationalChar, c: &LaurentPoly) -> RationalChar {
    let mut acc = RationalChar::zero();
    for (j, m) in c.terms() {
        acc = acc.add(&x.tensor_v(j as u32).scale(m));
    }
    acc
}

/// `z^a/(1−z⁴) ⊗ c(V_{n,0}) − z^{a+shift}/(1−z⁴) ⊗ c(V_{n−1,0})`.
fn defining(n: u32, a: i64, shift: i64) -> RationalChar {
    let first = tensor_rational(&RationalChar::geometric(a, 4), &restrict_sym_v2(n));
    if n == 0 {
        return first;
    }
    let second = tensor_rational(&RationalChar::geometric(a + shift, 4), &restrict_sym_v2(n - 1));
    first.sub(&second)
}

/// `κ_n(a)` from its defining tensor expression.
pub fn kappa_defining(n: u32, a: i64) -> RationalChar {
    defining(n, a, 2)
}

/// `μ_n(a)` from its defining tensor expression.
pub fn mu_defining(n: u32, a: i64) -> RationalChar {
    defining(n, a, -2)
}

/// The `n = 0` characters. `u = −1` is accepted since it appears one step
/// up from `u = −2` in the recursion.
pub fn base_char(family: Sl3Family, u: &Q) -> Result<RationalChar> {
    let kind = classify_rational(u);
    let g = |e: i64| Ok(RationalChar::geometric(e, 4));
    match family.untwisted() {
        Sl3Family::J => match kind {
            RatKind::HalfOdd(d) if d > 0 => g(4 + d),
            RatKind::HalfOdd(d) => g(2 - d),
            _ => Err(bad(format!("J requires u ∈ 1/2 + ℤ (got u = {u})"))),
        },
        Sl3Family::IPlus => match kind {
            RatKind::Integer(k) if k >= 0 && k % 2 == 0 => g(2 * k + 4),
            RatKind::Integer(k) if k <= -3 && k % 2 != 0 => g(-2 - 2 * k),
            _ => g(0),
        },
        _ => match kind {
            RatKind::Integer(k) if k >= 1 && k % 2 != 0 => g(2 * k + 4),
            RatKind::Integer(k) if k <= -2 && k % 2 == 0 => g(-2 - 2 * k),
            _ => g(2),
        },
    }
}

/// Which building block gives the character, as `(is_kappa, a)`.
pub fn dispatch(id: &PrincipalSl3Id) -> Result<(bool, i64)> {
    check(id)?;
    const K: bool = true;
    const M: bool = false;
    let plus = id.family.untwisted() == Sl3Family::IPlus;
    Ok(match (id.family, classify_rational(&id.u)) {
        (Sl3Family::J, RatKind::HalfOdd(d)) if d >= -1 => (K, 4 + d),
        (Sl3Family::J, RatKind::HalfOdd(d)) => (M, 2 - d),
        (_, RatKind::Integer(k)) if k >= 0 && k % 2 == 0 => {
            if plus {
                (K, 2 * k + 4)
            } else {
                (M, 2)
            }
        }
        (_, RatKind::Integer(k)) if k >= 1 => {
            if plus {
                (K, 0)
            } else {
                (K, 2 * k + 4)
            }
        }
        (_, RatKind::Integer(k)) if k <= -4 && k % 2 == 0 => {
            if plus {
                (K, 0)
            } else {
                (M, -2 - 2 * k)
            }
        }
        (_, RatKind::Integer(k)) if k <= -3 => {
            if plus {
                (M, -2 - 2 * k)
            } else {
                (M, 2)
            }
        }
        // u = −2 (twisted or not) and non-integral u
        _ => {
            if plus {
                (K, 0)
            } else {
                (M, 2)
            }
        }
    })
}

/// `c(id)` in closed form.
pub fn principal_char(id: &PrincipalSl3Id) -> Result<RationalChar> {
    let (is_kappa, a) = dispatch(id)?;
    if is_kappa {
        kappa(id.n, a)
    } else {
        mu(id.n, a)
    }
}

/// `c(X_{u,0} ⊗ V_{n,0}) − c(X'_{u+1,0} ⊗ V_{n−1,0})` evaluated on
/// truncated expansions, with `X' = I^∓` for `X = I^±` and `X' = J` for `J`.
pub fn recursion_oracle(id: &PrincipalSl3Id, order: usize) -> Result<KCharacter> {
    check(id)?;
    let n = id.n;
    let work = order + 2 * n as usize + 2;
    let tensor_sum = |base: &RationalChar, sym: &LaurentPoly| -> Result<KCharacter> {
        let ex = base.expand(work)?;
        let mut acc = KCharacter::zero(order);
        for (j, m) in sym.terms() {
            acc = acc.add(&tensor_char(&ex, j as usize)?.scale(m));
        }
        Ok(acc)
    };
    let mut out = tensor_sum(&base_char(id.family, &id.u)?, &restrict_sym_v2(n))?;
    if n > 0 {
        let up = &id.u + Q::one();
        let second = tensor_sum(&base_char(id.family.partner(), &up)?, &restrict_sym_v2(n - 1))?;
        out = out.sub(&second);
    }
    Ok(out.truncate(order))
}

/// All simple bounded modules with central character `χ(u+1−n, n+1)`.
pub fn classify_chi(u: &Q, n: u32) -> Result<Vec<PrincipalSl3Id>> {
    use Sl3Family::*;
    let pm = |u: Q, n: u32| vec![PrincipalSl3Id::new(IPlus, u.clone(), n), PrincipalSl3Id::new(IMinus, u, n)];
    let ni = n as i64;
    let out = match classify_rational(u) {
        RatKind::HalfOdd(_) => {
            let mut v = pm(u.clone(), n);
            v.push(PrincipalSl3Id::new(J, u.clone(), n));
            v
        }
        RatKind::Generic => pm(u.clone(), n),
        RatKind::Integer(k) if k >= ni => {
            let mut v = pm(u.clone(), n);
            v.extend(pm(q(-ni - 3), (k - ni) as u32));
            v
        }
        RatKind::Integer(-2) => pm(q(-2), n),
        RatKind::Integer(k) if k == ni - 1 => {
            vec![PrincipalSl3Id::new(IPlusTau, q(-2), n), PrincipalSl3Id::new(IMinusTau, q(-2), n)]
        }
        RatKind::Integer(k) if k <= -3 => {
            let mut v = pm(u.clone(), n);
            v.extend(pm(q(ni - k - 3), (-k - 3) as u32));
            v
        }
        RatKind::Integer(k) => {
            return Err(Error::Inadmissible(format!(
                "χ(u+1−n, n+1) with integral u = {k} ∈ {{−1, …, n−2}}, n = {n}"
            )))
        }
    };
    Ok(out)
}

/// Eventual multiplicities `c_i` for `i` large, indexed by `i mod 4`.
pub fn asymptotic_mults(id: &PrincipalSl3Id) -> Result<[i64; 4]> {
    check(id)?;
    let p = (id.n / 2) as i64;
    let odd = id.n % 2 == 1;
    let mut t = [0i64; 4];
    match (id.family.untwisted(), odd) {
        (Sl3Family::J, true) => {
            t[1] = p + 1;
            t[3] = p + 1;
        }
        (Sl3Family::J, false) => {
            let d = match classify_rational(&id.u) {
                RatKind::HalfOdd(d) => d,
                _ => unreachable!("checked"),
            };
            t[d.rem_euclid(4) as usize] = p + 1;
            t[(d + 2).rem_euclid(4) as usize] = p;
        }
        (_, true) => {
            t[0] = p + 1;
            t[2] = p + 1;
        }
        (Sl3Family::IPlus, false) => {
            t[0] = p + 1;
            t[2] = p;
        }
        (_, false) => {
            t[0] = p;
            t[2] = p + 1;
        }
    }
    Ok(t)
}

/// Multiplicity freeness: exactly the modules with `n ≤ 1`.
pub fn sl3_principal_mfree(id: &PrincipalSl3Id) -> Result<bool> {
    check(id)?;
    Ok(id.n <= 1)
}

/// Smallest exponent with nonzero multiplicity, and that multiplicity.
pub fn minimal_type(id: &PrincipalSl3Id) -> Result<(usize, Q)> {
    let r = principal_char(id)?;
    let lo = r.numerator().min_exp().unwrap_or(0).max(0) as usize;
    let c = r.expand(lo + 8)?;
    c.minimal_type().ok_or_else(|| bad("zero character".into()))
}

/// True if every coefficient is `0` or `1` up to `order`.
pub fn is_mfree_to(c: &KCharacter) -> bool {
    c.coeffs().iter().all(|x| x.is_zero() || x.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qr;
    use Sl3Family::*;

    fn id(f: Sl3Family, u: Q, n: u32) -> PrincipalSl3Id {
        PrincipalSl3Id::new(f, u, n)
    }

    #[test]
    fn sym_powers() {
        assert_eq!(restrict_sym_v2(0), LaurentPoly::one());
        assert_eq!(restrict_sym_v2(2), LaurentPoly::from_int_terms([(0, 1), (4, 1)]));
        assert_eq!(restrict_sym_v2(3), LaurentPoly::from_int_terms([(2, 1), (6, 1)]));
        assert_eq!(restrict_sym_v2(4), LaurentPoly::from_int_terms([(0, 1), (4, 1), (8, 1)]));
    }

    #[test]
    fn building_blocks() {
        assert_eq!(mu(1, 2).unwrap(), RationalChar::geometric(2, 2));
        assert_eq!(kappa(0, 0).unwrap(), RationalChar::geometric(0, 4));
        let want = RationalChar::geometric(0, 4)
            .add(&RationalChar::geometric(4, 2))
            .add(&RationalChar::geometric(8, 2));
        assert_eq!(kappa(4, 0).unwrap(), want);
        assert_eq!(kappa(2, 0).unwrap(), kappa_defining(2, 0));
        assert!(mu(1, 1).is_err());
    }

    #[test]
    fn base_examples() {
        assert_eq!(base_char(IPlus, &qr(1, 3)).unwrap(), RationalChar::geometric(0, 4));
        assert_eq!(base_char(J, &qr(3, 2)).unwrap(), RationalChar::geometric(7, 4));
        assert_eq!(base_char(IMinus, &q(2)).unwrap(), RationalChar::geometric(2, 4));
    }

    #[test]
    fn dispatch_examples() {
        assert_eq!(principal_char(&id(IPlus, qr(1, 3), 2)).unwrap(), kappa(2, 0).unwrap());
        assert_eq!(principal_char(&id(J, qr(-3, 2), 1)).unwrap(), mu(1, 5).unwrap());
        assert_eq!(principal_char(&id(IMinus, q(-2), 3)).unwrap(), mu(3, 2).unwrap());
    }

    #[test]
    fn recursion_examples() {
        let x = id(IPlus, qr(1, 3), 0);
        assert_eq!(recursion_oracle(&x, 20).unwrap(), base_char(IPlus, &x.u).unwrap().expand(20).unwrap());
        let x = id(J, qr(1, 2), 1);
        assert_eq!(recursion_oracle(&x, 30).unwrap(), kappa(1, 5).unwrap().expand(30).unwrap());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_chi(&qr(1, 3), 2).unwrap().len(), 2);
        let v = classify_chi(&qr(1, 2), 0).unwrap();
        assert_eq!(v.iter().map(|x| x.family).collect::<Vec<_>>(), vec![IPlus, IMinus, J]);
        let v = classify_chi(&q(5), 1).unwrap();
        assert_eq!(v, vec![id(IPlus, q(5), 1), id(IMinus, q(5), 1), id(IPlus, q(-4), 4), id(IMinus, q(-4), 4)]);
        assert!(classify_chi(&q(0), 2).is_err());
        assert_eq!(classify_chi(&q(1), 2).unwrap()[0].family, IPlusTau);
    }

    #[test]
    fn validity() {
        assert!(check(&id(IPlus, q(0), 1)).is_err());
        assert!(check(&id(J, q(1), 1)).is_err());
        assert!(check(&id(IPlusTau, q(3), 0)).is_err());
        assert!(check(&id(IPlusTau, q(-2), 5)).is_ok());
    }

    #[test]
    fn asymptotic_examples() {
        assert_eq!(asymptotic_mults(&id(IPlus, qr(1, 3), 3)).unwrap(), [2, 0, 2, 0]);
        assert_eq!(asymptotic_mults(&id(IPlus, qr(1, 3), 4)).unwrap(), [3, 0, 2, 0]);
        // J_{1/2,2}: residue 2u = 1 carries p + 1
        assert_eq!(asymptotic_mults(&id(J, qr(1, 2), 2)).unwrap(), [0, 2, 0, 1]);
    }

    #[test]
    fn mfree_examples() {
        assert!(sl3_principal_mfree(&id(IPlus, qr(1, 3), 1)).unwrap());
        assert!(!sl3_principal_mfree(&id(IPlus, qr(1, 3), 2)).unwrap());
        assert!(sl3_principal_mfree(&id(IMinusTau, q(-2), 1)).unwrap());
        // the twisted modules at n = 0 are multiplicity free too
        let c = principal_char(&id(IPlusTau, q(-2), 0)).unwrap().expand(40).unwrap();
        assert!(is_mfree_to(&c));
    }
}
