use deltasq::qt::{poly_gcd, poly_gcd_prs, q_binomial, q_int, q_multinomial, t_binomial, QTPoly, QTRat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = QTPoly> {
    prop::collection::vec((0u32..4, 0u32..4, -3i64..4), 0..5).prop_map(|terms| {
        QTPoly::from_terms(terms.into_iter().map(|(a, b, c)| (a, b, Rational::from_integer(BigInt::from(c)))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = QTPoly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

fn rat_strategy() -> impl Strategy<Value = QTRat> {
    (poly_strategy(), nonzero_poly()).prop_map(|(n, d)| QTRat::new(n, d).unwrap())
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn polynomial_division_and_cancellation() {
    let one = QTPoly::one();
    let q = QTPoly::q();
    let num = &one - &q.pow(3);
    let den = &one - &q;
    let r = QTRat::new(num, den).unwrap();
    assert_eq!(r.is_polynomial().unwrap(), q_int(3));

    let t2 = QTRat::from_poly(q_int(2).swap_qt());
    let t4 = QTRat::from_poly(q_int(4).swap_qt());
    assert_eq!(&(&t2 / &t4) * &t4, t2);

    let qt2 = QTPoly::qt_pow(1, 2);
    assert_eq!(qt2.swap_qt(), QTPoly::qt_pow(2, 1));
}

#[test]
fn non_polynomial_and_zero_division_are_errors() {
    let r = QTRat::new(QTPoly::one(), &QTPoly::one() - &QTPoly::q()).unwrap();
    assert!(r.is_polynomial().is_err());
    assert!(QTRat::new(QTPoly::one(), QTPoly::zero()).is_err());
    assert!(QTRat::zero().inv().is_err());
    let pole = QTRat::new(QTPoly::one(), QTPoly::q()).unwrap();
    assert!(pole.subs_q0().is_err());
    assert_eq!(pole.subs_t0().unwrap(), pole);
}

#[test]
fn canonical_denominator_sign() {
    let r = QTRat::new(QTPoly::one(), &QTPoly::q() - &QTPoly::one()).unwrap();
    let (_, _, c) = r.den().terms().next().unwrap();
    assert!(c > Rational::zero());
    assert_eq!(r.to_string(), "(-1)/(1 - q)");
}

#[test]
fn text_and_json_forms() {
    let p = &(&QTPoly::one() + &QTPoly::q()) + &QTPoly::qt_pow(1, 2);
    assert_eq!(p.to_string(), "1 + q + q*t^2");
    let r = QTRat::new(p.scale(&Rational::new(3.into(), 2.into())), &QTPoly::one() - &QTPoly::t()).unwrap();
    let js = serde_json::to_string(&r).unwrap();
    assert_eq!(js, r#"{"den":[[0,0,"1"],[0,1,"-1"]],"num":[[0,0,"3/2"],[1,0,"3/2"],[1,2,"3/2"]]}"#);
    let back: QTRat = serde_json::from_str(&js).unwrap();
    assert_eq!(back, r);
}

#[test]
fn q_binomial_properties() {
    for n in 0..9i64 {
        for k in 0..=n {
            let b = q_binomial(n, k);
            assert_eq!(b.eval_one(), Rational::from_integer(binom(n, k).into()));
            assert_eq!(b, q_binomial(n, n - k));
            if n >= 1 {
                let pascal = &q_binomial(n - 1, k).shift(k as u32, 0) + &q_binomial(n - 1, k - 1);
                assert_eq!(pascal, b, "Pascal recurrence at ({n},{k})");
            }
        }
    }
}

#[test]
fn q_vandermonde_instance() {
    // qbinom(L+j-1, n-k-1) = Σ_{m>=1} t^{(m-n+k+j)(m-1)} qbinom(j, n-k-m) qbinom(L-1, m-1), in t
    for j in 1..=6i64 {
        for nk in 1..=6i64 {
            for l in 1..=6i64 {
                let lhs = t_binomial(l + j - 1, nk - 1);
                let mut rhs = QTPoly::zero();
                for m in 1..=(nk + l) {
                    let e = (m - nk + j) * (m - 1);
                    let term = &t_binomial(j, nk - m) * &t_binomial(l - 1, m - 1);
                    if term.is_zero() {
                        continue;
                    }
                    assert!(e >= 0, "negative exponent with a nonzero term");
                    rhs = &rhs + &term.shift(0, e as u32);
                }
                assert_eq!(lhs, rhs, "j={j} n-k={nk} L={l}");
            }
        }
    }
}

#[test]
fn multinomial_examples() {
    assert_eq!(q_multinomial(3, &[2, 1]).unwrap(), q_int(3));
    assert!(q_multinomial(3, &[2, 2]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn field_axioms(a in rat_strategy(), b in rat_strategy(), c in rat_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn equality_matches_cross_multiplication(a in rat_strategy(), b in rat_strategy()) {
        let cross = &(a.num() * &b.den()) - &(b.num() * &a.den());
        prop_assert_eq!(a == b, cross.is_zero());
    }

    #[test]
    fn sum_all_matches_fold(xs in prop::collection::vec(rat_strategy(), 0..6)) {
        let folded = xs.iter().fold(QTRat::zero(), |acc, x| &acc + x);
        prop_assert_eq!(QTRat::sum_all(xs.iter()), folded);
    }

    #[test]
    fn heuristic_gcd_matches_prs(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let (x, y) = (&a * &c, &b * &c);
        prop_assume!(!x.is_constant() && !y.is_constant());
        prop_assert_eq!(poly_gcd(&x, &y), poly_gcd_prs(&x, &y));
    }

    #[test]
    fn substitutions_are_homomorphisms(a in poly_strategy(), b in poly_strategy()) {
        prop_assert_eq!((&a * &b).subs_q0(), &a.subs_q0() * &b.subs_q0());
        prop_assert_eq!((&a * &b).subs_t0(), &a.subs_t0() * &b.subs_t0());
        prop_assert_eq!((&a * &b).swap_qt(), &a.swap_qt() * &b.swap_qt());
        prop_assert_eq!(a.swap_qt().swap_qt(), a.clone());
    }

    #[test]
    fn exact_division_roundtrip(a in poly_strategy(), b in nonzero_poly()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), Some(a.clone()));
        let one_more = &prod + &QTPoly::one();
        if let Some(qq) = one_more.div_exact(&b).unwrap() {
            prop_assert_eq!(&qq * &b, one_more);
        }
    }
}

#[test]
fn rational_constants() {
    let half = QTRat::from_rational(Rational::new(BigInt::one(), 2.into()));
    assert_eq!(&half + &half, QTRat::one());
}
