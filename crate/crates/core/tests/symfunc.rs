use deltasq::partition::enumerate_partitions;
use deltasq::qt::{choose2, q_binomial, q_int, QTPoly, QTRat, Rational};
use deltasq::symfunc::{
    addition_formula_check, eval_alphabet, hall_inner, hall_inner_power_sums, omega, pleth_transform, skew_h, Basis,
    PowerSumTransform, SymFunc, VirtualAlphabet,
};
use deltasq::Partition;
use num_bigint::BigInt;
use proptest::prelude::*;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn m(v: &[u32]) -> SymFunc {
    SymFunc::monomial(&p(v))
}

fn int(c: i64) -> QTRat {
    QTRat::from_int(c)
}

#[test]
fn basis_element_examples() {
    assert_eq!(SymFunc::e(1), m(&[1]));
    assert_eq!(SymFunc::h(2), &m(&[2]) + &m(&[1, 1]));
    assert_eq!(SymFunc::s(&p(&[2, 1])), &m(&[2, 1]) + &m(&[1, 1, 1]).scale(&int(2)));
}

#[test]
fn products() {
    let e1 = SymFunc::e(1);
    assert_eq!(e1.multiply(&e1), &m(&[2]) + &m(&[1, 1]).scale(&int(2)));
    assert_eq!(e1.multiply(&SymFunc::one()), e1);
    let h1 = SymFunc::h(1);
    assert_eq!(&h1.multiply(&h1) - &SymFunc::h(2), SymFunc::e(2));
}

#[test]
fn hall_inner_examples() {
    for n in 1..=5 {
        let parts = enumerate_partitions(n);
        for a in &parts {
            for b in &parts {
                let v = hall_inner(&SymFunc::s(a), &SymFunc::s(b)).unwrap();
                assert_eq!(v, int((a == b) as i64), "<s{a}, s{b}>");
            }
        }
    }
    assert_eq!(hall_inner(&SymFunc::h(2), &m(&[2])).unwrap(), int(1));
    assert_eq!(hall_inner(&SymFunc::e(2), &SymFunc::e(2)).unwrap(), int(1));
    assert!(hall_inner(&SymFunc::e(2), &SymFunc::e(3)).is_err());
}

#[test]
fn hall_inner_agrees_with_power_sum_formula() {
    for n in 1..=5 {
        for a in enumerate_partitions(n) {
            for b in enumerate_partitions(n) {
                let f = SymFunc::basis_element(Basis::E, &a);
                let g = SymFunc::basis_element(Basis::P, &b);
                assert_eq!(hall_inner(&f, &g).unwrap(), hall_inner_power_sums(&f, &g).unwrap());
            }
        }
    }
}

#[test]
fn omega_rules() {
    assert_eq!(omega(&SymFunc::e(3)), SymFunc::h(3));
    assert_eq!(omega(&SymFunc::p(2)), -&SymFunc::p(2));
    for lam in enumerate_partitions(5) {
        assert_eq!(omega(&SymFunc::s(&lam)), SymFunc::s(&lam.conjugate()));
    }
}

#[test]
fn skew_examples() {
    for n in 1..=5 {
        assert_eq!(skew_h(1, &SymFunc::e(n)).unwrap(), SymFunc::e(n - 1));
    }
    let f = &SymFunc::s(&p(&[2, 1])).scale(&QTRat::q()) + &SymFunc::h(3);
    let scalar = hall_inner(&f, &SymFunc::h(3)).unwrap();
    assert_eq!(skew_h(3, &f).unwrap(), SymFunc::constant(scalar));
    assert_eq!(skew_h(1, &SymFunc::p(1)).unwrap(), SymFunc::one());
    assert!(skew_h(4, &SymFunc::e(3)).is_err());
    assert!(skew_h(0, &SymFunc::e(3)).is_err());
}

/// `h_j^⊥ f` recovered by solving `⟨X, g⟩ = ⟨f, h_j g⟩` for all `g = h_μ`,
/// using that `⟨X, h_μ⟩` is the `m_μ` coefficient of `X`.
fn skew_by_adjointness(j: u32, f: &SymFunc) -> SymFunc {
    let n = f.degree() - j;
    let terms = enumerate_partitions(n).into_iter().map(|mu| {
        let g = SymFunc::basis_element(Basis::H, &mu);
        let c = hall_inner(f, &SymFunc::h(j).multiply(&g)).unwrap();
        (mu, c)
    });
    SymFunc::from_terms(n, terms).unwrap()
}

#[test]
fn skew_matches_adjointness_oracle() {
    for n in 1..=6 {
        for lam in enumerate_partitions(n) {
            for b in [Basis::E, Basis::S, Basis::P] {
                let f = SymFunc::basis_element(b, &lam);
                for j in 1..=n {
                    assert_eq!(skew_h(j, &f).unwrap(), skew_by_adjointness(j, &f), "h_{j}^perp {b:?}{lam}");
                }
            }
        }
    }
}

#[test]
fn basis_round_trips() {
    for n in 0..=6 {
        for lam in enumerate_partitions(n) {
            for b in [Basis::E, Basis::H, Basis::P, Basis::S, Basis::M] {
                let f = SymFunc::basis_element(b, &lam);
                let coords = f.coords(b);
                assert_eq!(coords.len(), 1, "{b:?}{lam}");
                assert_eq!(coords[&lam], QTRat::one());
                assert_eq!(SymFunc::from_coords(n, b, &coords).unwrap(), f);
            }
        }
    }
}

#[test]
fn alphabet_evaluations() {
    for n in 0..=5u32 {
        let a = VirtualAlphabet::from_poly(&q_int(n)).unwrap();
        for k in 1..=5u32 {
            let e = eval_alphabet(&SymFunc::e(k), &a);
            let expect = q_binomial(n as i64, k as i64).shift(choose2(k as i64) as u32, 0);
            assert_eq!(e, QTRat::from_poly(expect));
            let h = eval_alphabet(&SymFunc::h(k), &a);
            assert_eq!(h, QTRat::from_poly(q_binomial((n + k) as i64 - 1, k as i64)));
        }
    }
    // s_μ[1 - t]
    let one_minus_t = VirtualAlphabet::from_monomials(&[(1, 0, 0), (-1, 0, 1)]);
    for n in 1..=5 {
        for mu in enumerate_partitions(n) {
            let v = eval_alphabet(&SymFunc::s(&mu), &one_minus_t);
            let expect = if mu.is_hook() {
                let r = mu.len() as u32 - 1;
                let sign = if r.is_multiple_of(2) { 1 } else { -1 };
                (&QTPoly::one() - &QTPoly::t()).shift(0, r).scale(&Rational::from_integer(sign.into()))
            } else {
                QTPoly::zero()
            };
            assert_eq!(v, QTRat::from_poly(expect), "s{mu}[1-t]");
        }
    }
    // e_n[B_μ - t] = 0 when μ has a second row
    for n in 2..=6 {
        for mu in enumerate_partitions(n) {
            if mu.len() < 2 {
                continue;
            }
            let a = VirtualAlphabet::from_poly(&(&mu.b() - &QTPoly::t())).unwrap();
            assert!(eval_alphabet(&SymFunc::e(n), &a).is_zero(), "e_n[B{mu} - t]");
        }
    }
}

#[test]
fn plethystic_transforms() {
    let f = &SymFunc::s(&p(&[2, 1])).scale(&QTRat::t()) + &SymFunc::p(3);
    assert_eq!(pleth_transform(&f, &PowerSumTransform::identity()).unwrap(), f);
    for g in [SymFunc::e(3), SymFunc::p(3), SymFunc::p(2), SymFunc::s(&p(&[2, 1])), f.clone()] {
        assert_eq!(pleth_transform(&g, &PowerSumTransform::minus_eps()).unwrap(), omega(&g));
    }
    let got = pleth_transform(&SymFunc::e(2), &PowerSumTransform::times_q_int(2)).unwrap();
    // over {x_i, q x_i}: x_1^2 only from (x_1, q x_1); x_1 x_2 from four pairs
    let expect = &m(&[2]).scale(&QTRat::q()) + &m(&[1, 1]).scale(&QTRat::from_poly(q_int(2).pow(2)));
    assert_eq!(got, expect);
    let round = PowerSumTransform::x_over_m().then(&PowerSumTransform::times_m());
    assert_eq!(pleth_transform(&f, &round).unwrap(), f);
}

#[test]
fn addition_and_cauchy_identities() {
    for n in 1..=4 {
        assert!(addition_formula_check(n), "n = {n}");
    }
}

#[test]
fn json_round_trip() {
    let f = &SymFunc::s(&p(&[2, 1])).scale(&QTRat::new(QTPoly::one(), &QTPoly::one() - &QTPoly::q()).unwrap())
        + &SymFunc::e(3);
    let v = f.to_json_value();
    assert_eq!(v["basis"], "m");
    assert_eq!(SymFunc::from_json_value(&v).unwrap(), f);
}

fn sym_strategy(n: u32) -> impl Strategy<Value = SymFunc> {
    let parts = enumerate_partitions(n);
    let len = parts.len();
    prop::collection::vec((0..len, -3i64..4, 0u32..3, 0u32..3), 1..4).prop_map(move |terms| {
        let items = terms.into_iter().map(|(i, c, a, b)| {
            let coeff = QTPoly::monomial(Rational::from_integer(BigInt::from(c)), a, b);
            (parts[i].clone(), QTRat::from_poly(&coeff + &QTPoly::one()))
        });
        SymFunc::from_terms(n, items).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn inner_product_symmetry_and_omega_isometry(
        (f, g) in (1u32..=5).prop_flat_map(|n| (sym_strategy(n), sym_strategy(n)))
    ) {
        prop_assert_eq!(hall_inner(&f, &g).unwrap(), hall_inner(&g, &f).unwrap());
        prop_assert_eq!(hall_inner(&omega(&f), &omega(&g)).unwrap(), hall_inner(&f, &g).unwrap());
        prop_assert_eq!(omega(&omega(&f)), f.clone());
        let a = VirtualAlphabet::from_monomials(&[(1, 1, 0), (1, 0, 2), (-1, 1, 1)]);
        let prod = eval_alphabet(&f.multiply(&g), &a);
        prop_assert_eq!(prod, &eval_alphabet(&f, &a) * &eval_alphabet(&g, &a));
    }
}
