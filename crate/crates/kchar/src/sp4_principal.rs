//! `g = sp(4)` with `k` a principal `sl(2)`: the modules `M^s_{a,b}`,
//! `a > |b|`, `a, b ∈ ½ + ℤ`, `s ∈ {0, 1}`.
//!
//! The generating function `ψ^s_{a,b}` is a rational function over
//! `(1 − z²)²(1 − z⁴)(1 − z⁶)`, and `c(M^s_{a,b}) = φ^s_{a,b} = π(ψ^s_{a,b})`.
//! Coefficients are also available in closed form through the quasi-
//! polynomial `γ`, which is what the residue tables and the minimal-type
//! predictors are built from.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::show_doubled;
use crate::series::{q, qr, tensor_char, KCharacter, LaurentPoly, RationalChar, Q};

/// Denominator factors of `ψ`.
pub const PSI_DENOMINATOR: [u32; 4] = [2, 2, 4, 6];

/// `(a, b)` stored doubled, plus the parity label `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Sp4PrincipalId {
    pub a2: i64,
    pub b2: i64,
    pub s: u8,
}

impl Sp4PrincipalId {
    pub fn new(a2: i64, b2: i64, s: u8) -> Self {
        assert!(s <= 1, "s must be 0 or 1");
        Self { a2, b2, s }
    }

    /// `a > |b|`: the id names an actual module rather than a formal value.
    pub fn is_module(&self) -> bool {
        self.a2 > self.b2.abs()
    }

    /// `a + b + s` even.
    pub fn is_even(&self) -> bool {
        ((self.a2 + self.b2) / 2 + self.s as i64) % 2 == 0
    }

    fn sgn_s(&self) -> i64 {
        if self.s == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Sp4PrincipalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M^{}_{{{},{}}}", self.s, show_doubled(self.a2), show_doubled(self.b2))
    }
}

fn check_odd(id: &Sp4PrincipalId) -> Result<()> {
    if id.a2 % 2 == 0 || id.b2 % 2 == 0 {
        return Err(Error::InvalidParameter {
            case: "sp4-principal",
            condition: format!("a, b must lie in 1/2 + ℤ (got doubled values {}, {})", id.a2, id.b2),
        });
    }
    Ok(())
}

/// Rejects anything that is not an actual module.
pub fn check_module(id: &Sp4PrincipalId) -> Result<()> {
    check_odd(id)?;
    if !id.is_module() {
        return Err(Error::InvalidParameter {
            case: "sp4-principal",
            condition: format!("need a > |b| (got a = {}, b = {})", show_doubled(id.a2), show_doubled(id.b2)),
        });
    }
    Ok(())
}

/// Numerator of `ψ`:
/// `z^{5+s}(z^{3a+b} − z^{a+3b} − z^{−a−3b} + z^{−3a−b})
///  − z^{6+s}(z^{3a−b} − z^{−a+3b} − z^{a−3b} + z^{−3a+b})`.
pub fn psi_numerator(id: &Sp4PrincipalId) -> LaurentPoly {
    let (a, b, s) = (id.a2, id.b2, id.s as i64);
    let h = |x2: i64| x2 / 2;
    LaurentPoly::from_int_terms([
        (5 + s + h(3 * a + b), 1),
        (5 + s + h(a + 3 * b), -1),
        (5 + s + h(-a - 3 * b), -1),
        (5 + s + h(-3 * a - b), 1),
        (6 + s + h(3 * a - b), -1),
        (6 + s + h(-a + 3 * b), 1),
        (6 + s + h(a - 3 * b), 1),
        (6 + s + h(-3 * a + b), -1),
    ])
}

/// `ψ^s_{a,b}` in closed form; formal values for `a ≤ |b|` included.
pub fn psi_closed(id: &Sp4PrincipalId) -> Result<RationalChar> {
    check_odd(id)?;
    Ok(RationalChar::with_factors(psi_numerator(id), PSI_DENOMINATOR))
}

/// `z³ + z + z^{−1} + z^{−3}`, the weights of `V_3`.
pub fn p1() -> LaurentPoly {
    LaurentPoly::from_int_terms([(3, 1), (1, 1), (-1, 1), (-3, 1)])
}

/// `z⁴ + z² + 1 + z^{−2} + z^{−4}`, the weights of `V_4`.
pub fn p2() -> LaurentPoly {
    LaurentPoly::from_int_terms([(4, 1), (2, 1), (0, 1), (-2, 1), (-4, 1)])
}

/// Maps `(a, b)` into `a ≥ |b|` using
/// `ψ_{a,b} = −ψ_{b,a} = −ψ_{−b,−a} = ψ_{−a,−b}`; returns the sign.
pub fn reflect(a2: i64, b2: i64) -> (i64, i64, i64) {
    for (x, y, sg) in [(a2, b2, 1), (b2, a2, -1), (-b2, -a2, -1), (-a2, -b2, 1)] {
        if x >= y.abs() {
            return (x, y, sg);
        }
    }
    unreachable!("one of the four images has x ≥ |y|")
}

/// `ψ^s` built by induction on `a` from the two base values, using
/// the four-term relation for interior `b` and the five-term relation for
/// the two new boundary values at each level.
#[derive(Debug, Clone)]
pub struct PsiTable {
    s: u8,
    a2_max: i64,
    values: HashMap<(i64, i64), RationalChar>,
}

impl PsiTable {
    pub fn build(s: u8, a2_max: i64) -> Self {
        assert!(s <= 1);
        let mut t = Self { s, a2_max: a2_max.max(3), values: HashMap::new() };
        let s = s as i64;
        t.values.insert((3, 1), RationalChar::geometric(s, 6));
        t.values.insert((3, -1), RationalChar::geometric(3 + s, 6));
        let (w1, w2) = (p1(), p2());
        let mut a0 = 3;
        while a0 + 2 <= t.a2_max {
            let mut b = -a0 + 2;
            while b <= a0 - 2 {
                let v = t.get(a0, b).mul_poly(&w1).sub(&t.get(a0 - 2, b)).sub(&t.get(a0, b + 2)).sub(&t.get(a0, b - 2));
                t.values.insert((a0 + 2, b), v.simplified());
                b += 2;
            }
            let w2m = &w2 - &LaurentPoly::one();
            let top = t
                .get(a0, a0 - 2)
                .mul_poly(&w2m)
                .sub(&t.get(a0 + 2, a0 - 4))
                .sub(&t.get(a0 - 2, a0))
                .sub(&t.get(a0 - 2, a0 - 4));
            t.values.insert((a0 + 2, a0), top.simplified());
            let bottom = t
                .get(a0, -a0 + 2)
                .mul_poly(&w2m)
                .sub(&t.get(a0 + 2, -a0 + 4))
                .sub(&t.get(a0 - 2, -a0 + 4))
                .sub(&t.get(a0 - 2, -a0));
            t.values.insert((a0 + 2, -a0), bottom.simplified());
            a0 += 2;
        }
        t
    }

    pub fn s(&self) -> u8 {
        self.s
    }

    /// `ψ^s_{a,b}` for any odd `a2, b2` with `max(|a2|, |b2|) ≤ a2_max`.
    pub fn get(&self, a2: i64, b2: i64) -> RationalChar {
        let (x, y, sg) = reflect(a2, b2);
        if x == y.abs() {
            return RationalChar::zero();
        }
        assert!(x <= self.a2_max, "table built only to a = {}", show_doubled(self.a2_max));
        let v = self.values.get(&(x, y)).expect("filled during build");
        if sg == 1 {
            v.clone()
        } else {
            v.neg()
        }
    }
}

/// `ψ^s_{a,b}` from the recursion.
pub fn psi_recursive(id: &Sp4PrincipalId) -> Result<RationalChar> {
    check_odd(id)?;
    let t = PsiTable::build(id.s, id.a2.abs().max(id.b2.abs()));
    Ok(t.get(id.a2, id.b2))
}

/// `φ = π(ψ)` in closed form.
pub fn phi_closed(id: &Sp4PrincipalId) -> Result<RationalChar> {
    Ok(psi_closed(id)?.pi_project())
}

/// `c_0..=c_order` of `φ^s_{a,b}`, by expanding `ψ` and projecting.
pub fn phi(id: &Sp4PrincipalId, order: usize) -> Result<KCharacter> {
    psi_closed(id)?.expand_laurent(order as i64).pi_project()
}

/// `144 · γ(n)` for integral `n ≥ 0`.
fn gamma_times_144(n: i64) -> i128 {
    let n = n as i128;
    let c3 = |m: i128| m * (m - 1) * (m - 2) / 6;
    let beta = match n.rem_euclid(3) {
        0 => 1,
        1 => 0,
        _ => -1,
    };
    let sign = if n % 2 == 0 { 1 } else { -1 };
    119 * c3(n + 3) - 179 * c3(n + 2) + 109 * c3(n + 1) - 25 * c3(n) + 9 * sign + 16 * beta
}

/// `γ(n)`, the coefficient of `z^{2n}` in `1/((1−z²)²(1−z⁴)(1−z⁶))`;
/// zero at negative arguments.
pub fn gamma_int(n: i64) -> Q {
    if n < 0 {
        return Q::zero();
    }
    Q::new(gamma_times_144(n).into(), 144.into())
}

/// `γ` at a rational argument; zero unless it is a nonnegative integer.
pub fn gamma(n: &Q) -> Q {
    match crate::series::q_to_i64(n) {
        Some(k) => gamma_int(k),
        None => Q::zero(),
    }
}

/// The eight shifts `2E` in `δ` with their signs: each term is
/// `±γ((n − E − s)/2)`.
fn delta_shifts(id: &Sp4PrincipalId) -> [(i64, i64); 8] {
    let (a, b) = (id.a2, id.b2);
    [
        (3 * a + b + 10, 1),
        (a + 3 * b + 10, -1),
        (-a - 3 * b + 10, -1),
        (-3 * a - b + 10, 1),
        (3 * a - b + 12, -1),
        (-a + 3 * b + 12, 1),
        (a - 3 * b + 12, 1),
        (-3 * a + b + 12, -1),
    ]
}

/// `δ^s_{a,b}(n)`.
pub fn delta(id: &Sp4PrincipalId, n: i64) -> Q {
    let mut acc: i128 = 0;
    for (e2, sg) in delta_shifts(id) {
        let num = n - e2 / 2 - id.s as i64;
        if num >= 0 && num % 2 == 0 {
            acc += sg as i128 * gamma_times_144(num / 2);
        }
    }
    Q::new(acc.into(), 144.into())
}

/// `c_i(M^s_{a,b}) = δ(i) − δ(−i−2)`.
pub fn coeff_c(id: &Sp4PrincipalId, i: i64) -> Q {
    delta(id, i) - delta(id, -i - 2)
}

/// Eventual multiplicities indexed by `i mod 6`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueTable6 {
    #[serde(serialize_with = "ser_q6")]
    pub entries: [Q; 6],
}

fn ser_q6<S: serde::Serializer>(v: &[Q; 6], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(6))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl ResidueTable6 {
    pub fn at(&self, i: i64) -> &Q {
        &self.entries[i.rem_euclid(6) as usize]
    }

    pub fn max(&self) -> Q {
        self.entries.iter().cloned().max().expect("six entries")
    }
}

/// `σ_{a,b}`: `1` if `3 | 2a` and `3 ∤ 2b`, `−1` if `3 | 2b` and `3 ∤ 2a`,
/// else `0`.
pub fn sigma(a2: i64, b2: i64) -> i64 {
    match (a2 % 3 == 0, b2 % 3 == 0) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

/// The residue table: with `e = (a² − b²)/2` and `ε = (−1)^{a+b}`,
/// residues `s, s±1, s±2, s+3` carry
/// `(1+ε)(e+2σ)/6`, `(1−ε)(e−σ)/6`, `(1+ε)(e−σ)/6`, `(1−ε)(e+2σ)/6`.
pub fn asymptotic_c6(id: &Sp4PrincipalId) -> Result<ResidueTable6> {
    check_module(id)?;
    let eps = if ((id.a2 + id.b2) / 2) % 2 == 0 { 1 } else { -1 };
    let e = qr(id.a2 * id.a2 - id.b2 * id.b2, 8);
    let sg = q(sigma(id.a2, id.b2));
    let six = q(6);
    let plus = q(1 + eps);
    let minus = q(1 - eps);
    let r0 = &plus * (&e + q(2) * &sg) / &six;
    let r1 = &minus * (&e - &sg) / &six;
    let r2 = &plus * (&e - &sg) / &six;
    let r3 = &minus * (&e + q(2) * &sg) / &six;
    let s = id.s as usize;
    let mut entries: [Q; 6] = Default::default();
    entries[s % 6] = r0;
    entries[(1 + s) % 6] = r1.clone();
    entries[(5 + s) % 6] = r1;
    entries[(2 + s) % 6] = r2.clone();
    entries[(4 + s) % 6] = r2;
    entries[(3 + s) % 6] = r3;
    Ok(ResidueTable6 { entries })
}

/// First index from which `c_i` agrees with the residue table:
/// `3a + |b| + 6`.
pub fn plateau_threshold(id: &Sp4PrincipalId) -> i64 {
    (3 * id.a2 + id.b2.abs()) / 2 + 6
}

/// `c_1 + c_3` for odd modules: `(a − (−1)^s b)/2` if `a + (−1)^s 3b ≥ 0`,
/// else `a + (−1)^s b`.
pub fn dval(id: &Sp4PrincipalId) -> Q {
    let sg = id.sgn_s();
    if id.a2 + sg * 3 * id.b2 >= 0 {
        qr(id.a2 - sg * id.b2, 4)
    } else {
        qr(id.a2 + sg * id.b2, 2)
    }
}

/// `c_0 + c_2 + c_4` for even modules: with `m = a − (−1)^s b`,
/// `3m/4 + (−1)^{(m−1)/2}/4` if `a + (−1)^s 3b ≥ 0`, else `3(a + (−1)^s b)/2`.
pub fn eval_e(id: &Sp4PrincipalId) -> Q {
    let sg = id.sgn_s();
    if id.a2 + sg * 3 * id.b2 >= 0 {
        let m = (id.a2 - sg * id.b2) / 2;
        let tail = if ((m - 1) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        qr(3 * m, 4) + qr(tail, 4)
    } else {
        qr(3 * (id.a2 + sg * id.b2), 4)
    }
}

/// Sum of `±f((X − s)/2)` over the eight characteristic linear forms
/// `X ∈ {∓3a∓b, ∓a∓3b, ±3a∓b, ∓a±3b}` with the offsets `o1` (first four)
/// and `o2` (last four), matching the layout of `δ`.
fn eight_term(id: &Sp4PrincipalId, o1: i64, o2: i64, f: impl Fn(&Q) -> Q) -> Q {
    let (a, b, s) = (id.a2, id.b2, id.s as i64);
    let terms: [(i64, i64, i64); 8] = [
        (-3 * a - b, o1, 1),
        (-a - 3 * b, o1, -1),
        (a + 3 * b, o1, -1),
        (3 * a + b, o1, 1),
        (3 * a - b, o2, -1),
        (-a + 3 * b, o2, 1),
        (a - 3 * b, o2, 1),
        (-3 * a + b, o2, -1),
    ];
    let mut acc = Q::zero();
    for (x2, off, sg) in terms {
        // argument (x + off − s)/2 with x = x2/2
        let arg = Q::new((x2 + 2 * off - 2 * s).into(), 4.into());
        acc += f(&arg) * q(sg);
    }
    acc
}

fn as_nonneg_int(n: &Q) -> Option<i64> {
    crate::series::q_to_i64(n).filter(|k| *k >= 0)
}

/// `θ(n) = 3n²/4 + 3n/2 + 7/8 + (−1)^n/8` on `ℤ_{≥0}`, zero elsewhere.
pub fn theta(n: &Q) -> Q {
    match as_nonneg_int(n) {
        Some(k) => qr(3 * k * k, 4) + qr(3 * k, 2) + qr(7, 8) + qr(if k % 2 == 0 { 1 } else { -1 }, 8),
        None => Q::zero(),
    }
}

/// `binom(l, 2)` on `ℤ_{≥0}`, zero elsewhere.
pub fn binom2(l: &Q) -> Q {
    match as_nonneg_int(l) {
        Some(k) => qr(k * (k - 1), 2),
        None => Q::zero(),
    }
}

/// `γ'(n) = n²/12 + n/2 + 94/144 + (−1)^n/8 + σ'(n)/9`, `σ' = 2` on
/// multiples of 3 and `−1` otherwise.
pub fn gamma_prime(n: &Q) -> Q {
    match as_nonneg_int(n) {
        Some(k) => {
            let sp = if k % 3 == 0 { 2 } else { -1 };
            qr(k * k, 12) + qr(k, 2) + qr(94, 144) + qr(if k % 2 == 0 { 1 } else { -1 }, 8) + qr(sp, 9)
        }
        None => Q::zero(),
    }
}

/// `γ''(n) = n²/6 + 5n/6 + 8/9 + σ''(n)/9`, `σ'' = −2` for `n ≡ −1 (mod 3)`
/// and `1` otherwise.
pub fn gamma_double_prime(n: &Q) -> Q {
    match as_nonneg_int(n) {
        Some(k) => {
            let spp = if k % 3 == 2 { -2 } else { 1 };
            qr(k * k, 6) + qr(5 * k, 6) + qr(8, 9) + qr(spp, 9)
        }
        None => Q::zero(),
    }
}

/// `c_1 + c_3` via the `binom(·, 2)` expansion.
pub fn d_binomial_sum(id: &Sp4PrincipalId) -> Q {
    eight_term(id, 2, 1, binom2)
}

/// `c_0 + c_2 + c_4` via `θ`.
pub fn e_theta_sum(id: &Sp4PrincipalId) -> Q {
    eight_term(id, -1, -2, theta)
}

/// `c_0` via `γ'`.
pub fn c0_formula(id: &Sp4PrincipalId) -> Q {
    eight_term(id, -5, -6, gamma_prime)
}

/// `c_1` via `γ''`.
pub fn c1_formula(id: &Sp4PrincipalId) -> Q {
    eight_term(id, -4, -5, gamma_double_prime)
}

/// Leading-order estimate of `c_0`: `(a + (−1)^s b)/6` if
/// `a + (−1)^s 3b < 0`, else `(a − (−1)^s b)/12`.
pub fn predict_c0(id: &Sp4PrincipalId) -> Q {
    let sg = id.sgn_s();
    if id.a2 + sg * 3 * id.b2 < 0 {
        qr(id.a2 + sg * id.b2, 12)
    } else {
        qr(id.a2 - sg * id.b2, 24)
    }
}

/// Leading-order estimate of `c_1`: `(a − (−1)^s b)/6` if
/// `a + (−1)^s 3b > 0`, else `(a + (−1)^s b)/3`.
pub fn predict_c1(id: &Sp4PrincipalId) -> Q {
    let sg = id.sgn_s();
    if id.a2 + sg * 3 * id.b2 > 0 {
        qr(id.a2 - sg * id.b2, 12)
    } else {
        qr(id.a2 + sg * id.b2, 6)
    }
}

/// Smallest `i` with `c_i > 0`.
pub fn minimal_type(id: &Sp4PrincipalId) -> Result<i64> {
    check_module(id)?;
    let limit = plateau_threshold(id) + 6;
    (0..=limit)
        .find(|i| coeff_c(id, *i).is_positive())
        .ok_or_else(|| Error::Inadmissible(format!("{id} has no k-type up to {limit}")))
}

/// The finite-dimensional factor in [`tensor_decomp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiniteFactor {
    /// The 4-dimensional module, `V_3` over `k`.
    V10,
    /// The 5-dimensional module, `V_4` over `k`.
    V11,
}

impl FiniteFactor {
    /// Its k-type index.
    pub fn k_type(self) -> usize {
        match self {
            Self::V10 => 3,
            Self::V11 => 4,
        }
    }
}

/// One summand of a tensor decomposition; `nonzero` is false for
/// `a ≤ |b|`, where `M^s_{a,b} := 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TensorSummand {
    pub id: Sp4PrincipalId,
    pub nonzero: bool,
}

/// Summands of `V ⊗ M^s_{a,b}`, including the two boundary variants for
/// `V_{1,1}` (`a = b + 1, b > 0` and `a = −b + 1, b < 0`).
pub fn tensor_decomp(which: FiniteFactor, id: &Sp4PrincipalId) -> Result<Vec<TensorSummand>> {
    check_module(id)?;
    let (a, b) = (id.a2, id.b2);
    let shifts: Vec<(i64, i64)> = match which {
        FiniteFactor::V10 => vec![(2, 0), (0, 2), (-2, 0), (0, -2)],
        FiniteFactor::V11 if a == b + 2 && b > 0 => vec![(2, 2), (2, -2), (-2, -2)],
        FiniteFactor::V11 if a == -b + 2 && b < 0 => vec![(2, 2), (2, -2), (-2, 2)],
        FiniteFactor::V11 => vec![(2, 2), (0, 0), (-2, 2), (2, -2), (-2, -2)],
    };
    Ok(shifts
        .into_iter()
        .map(|(da, db)| {
            let t = Sp4PrincipalId::new(a + da, b + db, id.s);
            TensorSummand { id: t, nonzero: t.is_module() }
        })
        .collect())
}

/// Checks a decomposition on characters: `c(V ⊗ M)` against the sum of
/// the nonzero summands, to `order`.
pub fn tensor_identity_holds(which: FiniteFactor, id: &Sp4PrincipalId, order: usize) -> Result<bool> {
    let k = which.k_type();
    let lhs = tensor_char(&phi(id, order + k)?, k)?;
    let mut rhs = KCharacter::zero(order);
    for t in tensor_decomp(which, id)? {
        if t.nonzero {
            rhs = rhs.add(&phi(&t.id, order)?);
        }
    }
    Ok(lhs == rhs)
}

/// All valid ids with `a ≤ a_max`.
pub fn module_grid(a2_max: i64) -> Vec<Sp4PrincipalId> {
    let mut out = Vec::new();
    let mut a2 = 3;
    while a2 <= a2_max {
        let mut b2 = -a2 + 2;
        while b2 < a2 {
            for s in 0..=1 {
                out.push(Sp4PrincipalId::new(a2, b2, s));
            }
            b2 += 2;
        }
        a2 += 2;
    }
    out
}

/// Multiplicity-free modules with `a ≤ a_max`: residue table entries all
/// `≤ 1`, then every coefficient below the plateau checked directly.
pub fn sp4_principal_mfree_scan(a2_max: i64) -> Vec<Sp4PrincipalId> {
    let mut out: Vec<Sp4PrincipalId> = module_grid(a2_max)
        .into_par_iter()
        .filter(|id| {
            let t = asymptotic_c6(id).expect("grid ids are modules");
            if t.max() > Q::one() {
                return false;
            }
            (0..=plateau_threshold(id) + 6).all(|i| coeff_c(id, i) <= Q::one())
        })
        .collect();
    out.sort();
    out
}

/// The modules with central character `χ(a, b)`, i.e. `M^s_{a,±b}` after
/// normalizing `(a, b)` by sign changes and the swap.
pub fn classify(a2: i64, b2: i64) -> Result<Vec<Sp4PrincipalId>> {
    check_odd(&Sp4PrincipalId::new(a2, b2, 0))?;
    let (x, y) = (a2.abs().max(b2.abs()), a2.abs().min(b2.abs()));
    if x == y {
        return Err(Error::Inadmissible(format!(
            "χ({}, {}) is singular: no bounded simple module",
            show_doubled(a2),
            show_doubled(b2)
        )));
    }
    let mut v = Vec::new();
    for s in 0..=1 {
        v.push(Sp4PrincipalId::new(x, y, s));
        v.push(Sp4PrincipalId::new(x, -y, s));
    }
    Ok(v)
}
