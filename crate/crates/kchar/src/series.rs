//! Exact Laurent polynomials, rational characters and truncated k-characters.
//!
//! Every character in this crate is a formal series in one variable `z`
//! whose coefficient at `z^m` is the multiplicity of the simple
//! (m+1)-dimensional sl(2)-module `V_m`.  Three carriers are used:
//!
//! * [`LaurentPoly`]: finite sums `Σ c_e z^e`, `e ∈ ℤ`, `c_e ∈ ℚ`;
//! * [`RationalChar`]: a Laurent numerator over a product of `(1 − z^m)`;
//! * [`KCharacter`]: the coefficients `c_0..=c_N` of a power series.
//!
//! The projection `π` and the Clebsch–Gordan product `⊗` live here too.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient type.
pub type Q = BigRational;

/// Default truncation order for expansions.
pub const DEFAULT_ORDER: usize = 128;

/// Builds a rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Builds the rational `n / d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the value as `i64` if it is an integer that fits.
pub fn q_to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// A finite Laurent polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    /// `c · z^e`.
    pub fn monomial(e: i64, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `z^e` with coefficient 1.
    pub fn z(e: i64) -> Self {
        Self::monomial(e, Q::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        Self::from_terms(terms.into_iter().map(|(e, c)| (e, q(c))))
    }

    /// Adds `c · z^e` in place.
    pub fn add_term(&mut self, e: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// The substitution `z ↦ z^{-1}`.
    pub fn reflect(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Keeps only the terms with exponent in `lo..=hi`.
    pub fn restrict(&self, lo: i64, hi: i64) -> Self {
        Self {
            terms: self.terms.range(lo..=hi).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Multiplies by `(1 − z^m)`.
    pub fn mul_one_minus(&self, m: u32) -> Self {
        self - &self.shift(m as i64)
    }

    /// Exact division by `(1 − z^m)`; `None` if it leaves a remainder.
    pub fn div_one_minus(&self, m: u32) -> Option<Self> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(Self::zero()),
        };
        let m = m as i64;
        if hi - lo < m {
            return None;
        }
        // q_e = p_e + q_{e-m}, running over lo..=hi-m
        let mut quo: BTreeMap<i64, Q> = BTreeMap::new();
        for e in lo..=hi - m {
            let mut v = self.coeff(e);
            if let Some(prev) = quo.get(&(e - m)) {
                v += prev;
            }
            if !v.is_zero() {
                quo.insert(e, v);
            }
        }
        for e in hi - m + 1..=hi {
            let mut v = self.coeff(e);
            if let Some(prev) = quo.get(&(e - m)) {
                v += prev;
            }
            if !v.is_zero() {
                return None;
            }
        }
        Some(Self { terms: quo })
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        let (dlo, dlc) = match d.terms().next() {
            Some((e, c)) => (e, c.clone()),
            None => return None,
        };
        let dhi = d.max_exp().expect("nonzero");
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some((e, c)) = rem.terms.iter().next().map(|(e, c)| (*e, c.clone())) {
            let t = e - dlo;
            if rem.max_exp().expect("nonzero") < t + dhi {
                return None;
            }
            let k = c / &dlc;
            rem = &rem - &d.shift(t).scale(&k);
            quo.add_term(t, k);
        }
        Some(quo)
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Q::one())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(LaurentPoly, Add, add);
forward_owned!(LaurentPoly, Sub, sub);
forward_owned!(LaurentPoly, Mul, mul);

fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, first: bool, e: i64, c: &Q) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let unit = a.is_one();
    match (e, unit) {
        (0, _) => write!(f, "{}", a),
        (1, true) => write!(f, "z"),
        (1, false) => write!(f, "{}z", a),
        (_, true) => write!(f, "z^{}", e),
        (_, false) => write!(f, "{}z^{}", a, e),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            fmt_coeff_term(f, i == 0, e, c)?;
        }
        Ok(())
    }
}

/// Character of `V_i` as a weight polynomial: `z^i + z^{i-2} + … + z^{-i}`.
pub fn weight_char(i: u32) -> LaurentPoly {
    let i = i as i64;
    LaurentPoly::from_int_terms((0..=i).map(|k| (i - 2 * k, 1)))
}

/// The projection `π`: `z^j ↦ z^j` for `j ≥ 0`, `z^{-1} ↦ 0`,
/// `z^j ↦ −z^{−j−2}` for `j ≤ −2`.
pub fn pi_project(f: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in f.terms() {
        if e >= 0 {
            out.add_term(e, c.clone());
        } else if e <= -2 {
            out.add_term(-e - 2, -c.clone());
        }
    }
    out
}

/// Clebsch–Gordan product `z^p ⊗ z^q = Σ_{k=0}^{min(p,q)} z^{p+q−2k}`.
pub fn cg_product(p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 0 || q < 0 {
        return Err(Error::InvalidParameter {
            case: "cg_product",
            condition: format!("p, q must be nonnegative (got {p}, {q})"),
        });
    }
    let m = p.min(q);
    Ok(LaurentPoly::from_int_terms((0..=m).map(|k| (p + q - 2 * k, 1))))
}

/// A finite multiset of cyclotomic-style factors `(1 − z^m)`, `m ≥ 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Denominator {
    counts: BTreeMap<u32, u32>,
}

impl Denominator {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors<I: IntoIterator<Item = u32>>(factors: I) -> Self {
        let mut d = Self::one();
        for m in factors {
            d.push(m);
        }
        d
    }

    /// Appends one factor `(1 − z^m)`.
    pub fn push(&mut self, m: u32) {
        assert!(m >= 1, "denominator factor (1 - z^0) is not allowed");
        *self.counts.entry(m).or_insert(0) += 1;
    }

    fn remove(&mut self, m: u32) {
        if let Some(c) = self.counts.get_mut(&m) {
            *c -= 1;
            if *c == 0 {
                self.counts.remove(&m);
            }
        }
    }

    /// Factors as a sorted list with repetition, e.g. `[2, 2, 4, 6]`.
    pub fn factors(&self) -> Vec<u32> {
        self.counts
            .iter()
            .flat_map(|(m, c)| std::iter::repeat_n(*m, *c as usize))
            .collect()
    }

    pub fn is_one(&self) -> bool {
        self.counts.is_empty()
    }

    /// The product `Π (1 − z^m)` as a polynomial.
    pub fn poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::one();
        for m in self.factors() {
            p = p.mul_one_minus(m);
        }
        p
    }

    /// Smallest multiset divisible by both (factorwise maximum).
    fn join(&self, other: &Self) -> Self {
        let mut counts = self.counts.clone();
        for (m, c) in &other.counts {
            let slot = counts.entry(*m).or_insert(0);
            *slot = (*slot).max(*c);
        }
        Self { counts }
    }

    /// Factors of `self` missing from `sub` (assumes `sub ⊆ self`).
    fn minus(&self, sub: &Self) -> Self {
        let mut out = self.clone();
        for m in sub.factors() {
            out.remove(m);
        }
        out
    }

    fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for m in other.factors() {
            out.push(m);
        }
        out
    }

    /// Coefficients `0..=len` of `1 / Π (1 − z^m)`.
    pub fn inverse_series(&self, len: usize) -> Vec<Q> {
        let mut g = vec![Q::zero(); len + 1];
        g[0] = Q::one();
        for m in self.factors() {
            let m = m as usize;
            for i in m..=len {
                let prev = g[i - m].clone();
                g[i] += prev;
            }
        }
        g
    }
}

impl fmt::Display for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (m, c) in &self.counts {
            if *c == 1 {
                write!(f, "(1 - z^{m})")?;
            } else {
                write!(f, "(1 - z^{m})^{c}")?;
            }
        }
        Ok(())
    }
}

/// A closed-form character `numerator / Π (1 − z^m)`.
///
/// Equality is decided by cross-multiplication, so two different
/// presentations of the same rational function compare equal.
#[derive(Clone, Debug)]
pub struct RationalChar {
    num: LaurentPoly,
    den: Denominator,
}

impl RationalChar {
    pub fn new(num: LaurentPoly, den: Denominator) -> Self {
        Self { num, den }
    }

    /// `num / Π (1 − z^m)` for the listed `m`.
    pub fn with_factors<I: IntoIterator<Item = u32>>(num: LaurentPoly, factors: I) -> Self {
        Self::new(num, Denominator::from_factors(factors))
    }

    pub fn zero() -> Self {
        Self::new(LaurentPoly::zero(), Denominator::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, Denominator::one())
    }

    /// `c · z^e / (1 − z^m)`.
    pub fn geometric(e: i64, m: u32) -> Self {
        Self::with_factors(LaurentPoly::z(e), [m])
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &Denominator {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn lifted(&self, target: &Denominator) -> LaurentPoly {
        &self.num * &target.minus(&self.den).poly()
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = self.den.join(&other.den);
        Self::new(&self.lifted(&den) + &other.lifted(&den), den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let den = self.den.join(&other.den);
        Self::new(&self.lifted(&den) - &other.lifted(&den), den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, self.den.union(&other.den))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.num.shift(k), self.den.clone())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    /// Cancels common factors: a factor `(1 − z^m)` is dropped when it
    /// divides the numerator, or lowered to `(1 − z^d)` for `d | m` when
    /// `1 + z^d + … + z^{m−d}` does.
    pub fn simplified(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        if num.is_zero() {
            return Self::zero();
        }
        'outer: loop {
            for m in den.factors().into_iter().rev() {
                if let Some(quo) = num.div_one_minus(m) {
                    num = quo;
                    den.remove(m);
                    continue 'outer;
                }
                for d in (1..m).filter(|d| m % d == 0) {
                    let cyc = LaurentPoly::from_int_terms((0..m / d).map(|j| ((j * d) as i64, 1)));
                    if let Some(quo) = num.div_exact(&cyc) {
                        num = quo;
                        den.remove(m);
                        den.push(d);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        Self::new(num, den)
    }

    /// Truncated Laurent expansion keeping every exponent `≤ order`,
    /// including the (finite) negative part.
    pub fn expand_laurent(&self, order: i64) -> TruncatedSeries {
        let mut out = LaurentPoly::zero();
        if let Some(lo) = self.num.min_exp() {
            if lo <= order {
                let len = (order - lo) as usize;
                let g = self.den.inverse_series(len);
                for (e, c) in self.num.terms() {
                    if e > order {
                        break;
                    }
                    for (i, gi) in g.iter().enumerate().take((order - e) as usize + 1) {
                        if !gi.is_zero() {
                            out.add_term(e + i as i64, c * gi);
                        }
                    }
                }
            }
        }
        TruncatedSeries { poly: out, order }
    }

    /// Power-series expansion `c_0..=c_order`.
    ///
    /// Fails with [`Error::NegativeSupport`] if the expansion has a term
    /// with negative exponent; apply [`RationalChar::pi_project`] first for
    /// such inputs.
    pub fn expand(&self, order: usize) -> Result<KCharacter> {
        let t = self.expand_laurent(order as i64);
        if let Some(e) = t.poly.min_exp() {
            if e < 0 {
                return Err(Error::NegativeSupport(e));
            }
        }
        Ok(t.to_kchar_unchecked())
    }

    /// Exact closed form of `π` applied to this character.
    ///
    /// The negative part of the expansion is finite, so `π(r)` differs from
    /// `r` by a Laurent polynomial, which is folded into the numerator.
    pub fn pi_project(&self) -> Self {
        let neg = self.expand_laurent(-1).poly;
        if neg.is_zero() {
            return self.clone();
        }
        // π(r) = r − P₋ − Σ_{j≤−2} c_j z^{−j−2}
        let mut corr = neg.clone();
        for (e, c) in neg.terms() {
            if e <= -2 {
                corr.add_term(-e - 2, c.clone());
            }
        }
        Self::new(&self.num - &(&corr * &self.den.poly()), self.den.clone())
    }

    /// Closed form of `c(M ⊗ V_i) = π(c(M) · (z^i + … + z^{−i}))`.
    pub fn tensor_v(&self, i: u32) -> Self {
        self.mul_poly(&weight_char(i)).pi_project()
    }
}

impl PartialEq for RationalChar {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den.poly() == &other.num * &self.den.poly()
    }
}

impl Eq for RationalChar {}

impl fmt::Display for RationalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den)
        }
    }
}

/// A Laurent series known exactly at every exponent `≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub poly: LaurentPoly,
    pub order: i64,
}

impl TruncatedSeries {
    /// Applies `π`; the result is exact to `order` as long as the whole
    /// negative part is known, which requires `order ≥ −1`.
    pub fn pi_project(&self) -> Result<KCharacter> {
        if self.order < -1 {
            return Err(Error::OrderUnderflow { have: self.order, need: -1 });
        }
        let p = pi_project(&self.poly);
        Ok(KCharacter::from_poly(&p, self.order.max(0) as usize))
    }

    fn to_kchar_unchecked(&self) -> KCharacter {
        KCharacter::from_poly(&self.poly, self.order.max(0) as usize)
    }
}

/// Truncated k-character `c_0, c_1, …, c_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCharacter {
    coeffs: Vec<Q>,
}

impl KCharacter {
    /// All-zero character valid to `order`.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Q::zero(); order + 1] }
    }

    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        assert!(!coeffs.is_empty(), "a KCharacter needs at least c_0");
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| q(*c)).collect())
    }

    /// Reads `c_0..=order` off a polynomial; negative exponents are ignored.
    pub fn from_poly(p: &LaurentPoly, order: usize) -> Self {
        let mut c = vec![Q::zero(); order + 1];
        for (e, v) in p.terms() {
            if e >= 0 && (e as usize) <= order {
                c[e as usize] = v.clone();
            }
        }
        Self { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// `c_i`, or `None` past the valid order.
    pub fn get(&self, i: usize) -> Option<&Q> {
        self.coeffs.get(i)
    }

    /// `c_i`; panics past the valid order.
    pub fn c(&self, i: usize) -> &Q {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated character");
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }

    /// Index of the first nonzero coefficient and its value.
    pub fn minimal_type(&self) -> Option<(usize, Q)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone()))
    }

    pub fn max_coeff(&self) -> Q {
        self.coeffs.iter().cloned().max().unwrap_or_else(Q::zero)
    }

    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Coefficients as `i64`; `None` if any is fractional or too large.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(q_to_i64).collect()
    }
}

impl fmt::Display for KCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] (to order {})", self.order())
    }
}

/// `c(M ⊗ V_i) = π(c(M) · Σ_k z^{i−2k})`, valid to order `N − i`.
pub fn tensor_char(c: &KCharacter, i: usize) -> Result<KCharacter> {
    let n = c.order();
    if n < i {
        return Err(Error::OrderUnderflow { have: n as i64, need: i as i64 });
    }
    let prod = &c.to_poly() * &weight_char(i as u32);
    Ok(KCharacter::from_poly(&pi_project(&prod), n - i))
}
