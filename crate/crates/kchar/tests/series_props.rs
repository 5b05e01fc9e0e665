use kchar::series::{cg_product, pi_project, tensor_char, weight_char, KCharacter, LaurentPoly, RationalChar};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-12i64..12, -5i64..6), 0..8).prop_map(LaurentPoly::from_int_terms)
}

/// Linear extension of the Clebsch-Gordan rule to sums of highest weights.
fn cg_lin(f: &LaurentPoly, r: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in f.terms() {
        out = &out + &cg_product(e, r).unwrap().scale(c);
    }
    out
}

/// Weighted dimension `Σ c_e (e + 1)`.
fn dim(f: &LaurentPoly) -> i64 {
    f.terms().map(|(e, c)| (e + 1) * c.to_integer().to_string().parse::<i64>().unwrap()).sum()
}

fn geometric_series(e: i64, m: u32, order: usize) -> KCharacter {
    let v = (0..=order as i64).map(|i| i64::from(i >= e && (i - e) % m as i64 == 0)).collect::<Vec<_>>();
    KCharacter::from_ints(&v)
}

proptest! {
    #[test]
    fn pi_is_idempotent(f in poly()) {
        let once = pi_project(&f);
        prop_assert_eq!(pi_project(&once), once.clone());
        prop_assert!(once.min_exp().is_none_or(|e| e >= 0));
    }

    #[test]
    fn pi_kills_reflected_pairs(f in poly()) {
        // z^j and -z^{-j-2} have the same image
        let mut g = LaurentPoly::zero();
        for (e, c) in f.terms() {
            g.add_term(e, c.clone());
            g.add_term(-e - 2, c.clone());
        }
        prop_assert!(pi_project(&g).is_zero());
    }

    #[test]
    fn cg_dimension(p in 0i64..=30, r in 0i64..=30) {
        let v = cg_product(p, r).unwrap();
        prop_assert_eq!(dim(&v), (p + 1) * (r + 1));
        prop_assert_eq!(v.min_exp(), Some((p - r).abs()));
    }

    #[test]
    fn cg_is_associative_and_commutative(p in 0i64..=12, s in 0i64..=12, r in 0i64..=12) {
        let left = cg_lin(&cg_product(p, s).unwrap(), r);
        let right = cg_lin(&cg_product(s, r).unwrap(), p);
        prop_assert_eq!(left, right);
        prop_assert_eq!(cg_product(p, s).unwrap(), cg_product(s, p).unwrap());
    }

    #[test]
    fn cg_matches_weight_product(p in 0u32..=10, r in 0u32..=10) {
        let prod = &weight_char(p) * &weight_char(r);
        prop_assert_eq!(pi_project(&prod), cg_product(p.into(), r.into()).unwrap());
    }

    #[test]
    fn expand_is_linear(e1 in -4i64..6, m1 in 1u32..5, e2 in -4i64..6, m2 in 1u32..5) {
        let a = RationalChar::geometric(e1, m1);
        let b = RationalChar::geometric(e2, m2);
        let n = 30;
        let sum = a.add(&b).expand_laurent(n);
        let sep = &a.expand_laurent(n).poly + &b.expand_laurent(n).poly;
        prop_assert_eq!(sum.poly.restrict(i64::MIN, n), sep.restrict(i64::MIN, n));
        let prod = a.mul(&b).expand_laurent(n);
        // the factors start no lower than -4, so 4 extra terms cover order n
        let direct = &a.expand_laurent(n + 4).poly * &b.expand_laurent(n + 4).poly;
        prop_assert_eq!(prod.poly.restrict(i64::MIN, n), direct.restrict(i64::MIN, n));
    }

    #[test]
    fn geometric_expansion(e in 0i64..10, m in 1u32..7) {
        prop_assert_eq!(RationalChar::geometric(e, m).expand(40).unwrap(), geometric_series(e, m, 40));
    }

    #[test]
    fn tensor_matches_clebsch_gordan(cs in prop::collection::vec(0i64..4, 12..30), i in 0usize..8) {
        let c = KCharacter::from_ints(&cs);
        let n = c.order();
        prop_assume!(i <= n);
        let got = tensor_char(&c, i).unwrap();
        let mut want = vec![0i64; n - i + 1];
        for (j, m) in cs.iter().enumerate() {
            for k in 0..=i.min(j) {
                let t = j + i - 2 * k;
                if t <= n - i {
                    want[t] += m;
                }
            }
        }
        prop_assert_eq!(got, KCharacter::from_ints(&want));
    }

    #[test]
    fn tensor_closed_form_agrees(e in 0i64..6, m in 1u32..5, i in 0u32..6) {
        let r = RationalChar::geometric(e, m);
        let closed = r.tensor_v(i).expand(30).unwrap();
        let series = tensor_char(&r.expand(30 + i as usize).unwrap(), i as usize).unwrap();
        prop_assert_eq!(closed, series);
    }
}
