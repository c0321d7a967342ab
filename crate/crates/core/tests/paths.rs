use deltasq::paths::*;
use deltasq::qt::{q_binomial, q_int, t_binomial, QTPoly};
use deltasq::symfunc::{skew_h, SymFunc};
use deltasq::{Partition, QTRat};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn lp(area: &[i32], labels: &[u32], drises: &[usize]) -> LabelledPath {
    LabelledPath::new(SquarePath::new(area.to_vec()).unwrap(), labels.to_vec(), drises.to_vec()).unwrap()
}

fn sq(area: &[i32], drises: &[usize], dpeaks: &[usize], zvals: &[usize]) -> SchroederPath {
    SchroederPath::new(SquarePath::new(area.to_vec()).unwrap(), drises.to_vec(), dpeaks.to_vec(), zvals.to_vec())
        .unwrap()
}

#[test]
fn decorated_dyck_example() {
    let d = lp(&[0, 1, 0, 1, 2, 1, 2, 3], &[1, 3, 0, 4, 6, 0, 2, 6], &[4, 7]);
    assert_eq!((d.m(), d.n(), d.k()), (2, 6, 2));
    assert_eq!(d.area(), 7);
    let parts = d.dinv_parts();
    assert_eq!((parts.primary, parts.secondary, parts.bonus), (1, 2, 0));
    assert_eq!(d.dinv(), 3);
}

#[test]
fn labelled_square_example() {
    let p = lp(&[0, -3, -3, -2, -2, -1, 0, 0], &[2, 0, 2, 4, 0, 1, 3, 1], &[6]);
    assert_eq!(p.path().shift(), 3);
    assert_eq!(p.area(), 11);
    let parts = p.dinv_parts();
    assert_eq!((parts.primary, parts.secondary, parts.bonus), (2, 1, 3));
    assert_eq!(p.dinv(), 6);
}

#[test]
fn schroeder_example_and_its_labelling() {
    let s = sq(&[0, -3, -3, -2, -2, -1, 0, 0], &[6], &[7], &[2, 5]);
    let parts = s.dinv_parts();
    assert_eq!((parts.primary, parts.secondary, parts.bonus), (3, 1, 3));
    assert_eq!(s.dinv(), 7);
    let l = s.canonical_labelling();
    assert_eq!(l.labels(), &[4, 0, 1, 2, 0, 3, 6, 5]);
    assert_eq!(l.reading_word(), vec![0, 1, 2, 0, 3, 4, 6, 5]);
    assert_eq!(l.dinv(), 7);
}

#[test]
fn reading_word_on_area_zero_paths() {
    for d in enumerate(Family::Pld, 0, 4, 0).unwrap().into_iter().filter(|d| d.area() == 0) {
        assert_eq!(d.reading_word(), d.labels().to_vec());
    }
    assert_eq!(lp(&[0], &[3], &[]).reading_word(), vec![3]);
}

#[test]
fn invalid_objects_rejected() {
    let path = SquarePath::new(vec![0, 1]).unwrap();
    assert!(LabelledPath::new(path.clone(), vec![2, 1], vec![]).is_err());
    assert!(LabelledPath::new(path.clone(), vec![0, 1], vec![]).is_err());
    assert!(LabelledPath::new(path.clone(), vec![1, 2], vec![1]).is_err());
    let square = SquarePath::new(vec![-1, 0]).unwrap();
    assert!(LabelledPath::new(square.clone(), vec![0, 1], vec![]).is_err());
    assert!(SchroederPath::new(square.clone(), vec![], vec![], vec![1]).is_err());
    assert!(SchroederPath::new(square, vec![], vec![2], vec![2]).is_err());
}

/// Column-strict labellings of Dyck paths counted straight from step words.
fn brute_labelled_dyck(n: usize) -> usize {
    let mut count = 0;
    for mask in 0u32..(1 << (2 * n)) {
        let steps: Vec<bool> = (0..2 * n).map(|b| mask >> b & 1 == 1).collect();
        let (mut x, mut y, mut ok) = (0i32, 0i32, true);
        let mut cols = Vec::new();
        for &north in &steps {
            if north {
                cols.push(x);
                y += 1;
            } else {
                x += 1;
            }
            ok &= y >= x;
        }
        if !ok || x != y {
            continue;
        }
        let total = (n as u32).pow(n as u32);
        for code in 0..total {
            let labels: Vec<u32> = (0..n).map(|i| code / (n as u32).pow(i as u32) % n as u32).collect();
            if (1..n).all(|i| cols[i] != cols[i - 1] || labels[i] > labels[i - 1]) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn enumeration_counts() {
    let single = enumerate(Family::Plsqe, 0, 1, 0).unwrap();
    assert_eq!(single.len(), 1);
    assert_eq!(single[0].labels(), &[1]);
    for n in 1..=4 {
        assert_eq!(enumerate(Family::Pld, 0, n, 0).unwrap().len(), brute_labelled_dyck(n));
    }
    assert!(enumerate(Family::Plsqe, 0, 3, 3).is_err());
}

#[test]
fn dyck_family_inside_square_family() {
    for (m, n) in [(0, 3), (1, 3), (2, 2), (1, 4)] {
        for k in 0..n {
            let square: BTreeSet<_> = enumerate(Family::Plsqe, m, n, k).unwrap().into_iter().collect();
            let dyck = enumerate(Family::Pld, m, n, k).unwrap();
            assert!(dyck.iter().all(|d| square.contains(d)));
            assert_eq!(square.iter().filter(|p| p.is_dyck()).count(), dyck.len());
        }
    }
}

#[test]
fn dyck_statistics_agree_with_dyck_definitions() {
    for (m, n) in [(0, 5), (1, 4), (2, 3), (3, 2)] {
        let content = vec![1; n];
        for k in 0..n {
            for d in enumerate_with_content(Family::Pld, m, k, &content).unwrap() {
                let a = d.path().area_word();
                let area: i32 = (1..=d.size()).filter(|i| !d.drises().contains(i)).map(|i| a[i - 1]).sum();
                assert_eq!(d.area() as i32, area);
                let mut dinv = 0;
                for j in 0..a.len() {
                    for i in 0..j {
                        let (li, lj) = (d.labels()[i], d.labels()[j]);
                        dinv += u32::from((a[i] == a[j] && li < lj) || (a[i] == a[j] + 1 && li > lj));
                    }
                }
                assert_eq!(d.dinv(), dinv);
            }
        }
    }
}

#[test]
fn enumeration_matches_generating_function() {
    let f = gen_function(Family::Plsqe, 1, 2, 1).unwrap();
    let all = enumerate(Family::Plsqe, 1, 2, 1).unwrap();
    for (lambda, c) in f.terms() {
        let mut content = lambda.parts().to_vec();
        content.resize(2, 0);
        let direct: QTPoly = all
            .iter()
            .filter(|p| {
                let mut pc = p.content();
                pc.resize(2, 0);
                pc == content
            })
            .map(|p| QTPoly::qt_pow(p.dinv(), p.area()))
            .fold(QTPoly::zero(), |a, b| a + b);
        assert_eq!(c.is_polynomial().unwrap(), direct);
    }
}

#[test]
fn top_decorated_square_paths_give_qint_times_e() {
    for n in 1..=4 {
        let f = gen_function(Family::Plsqe, 0, n, n - 1).unwrap();
        let expected = SymFunc::e(n as u32).scale_poly(&q_int(n as u32));
        assert_eq!(f, expected, "n={n}");
    }
    assert_eq!(gen_function(Family::Pld, 0, 1, 0).unwrap(), SymFunc::monomial(&Partition::row(1)));
}

#[test]
fn square_and_dyck_agree_at_q_zero() {
    for n in 1..=5 {
        for k in 0..n {
            let a = gen_function(Family::Plsqe, 0, n, k).unwrap().subs_q0().unwrap();
            let b = gen_function(Family::Pld, 0, n, k).unwrap().subs_q0().unwrap();
            assert_eq!(a, b, "n={n} k={k}");
        }
    }
}

#[test]
fn schroeder_dinv_matches_canonical_labelling() {
    for total in 1..=6 {
        for p in 0..total {
            let n = total - p;
            for d in 0..=n {
                for l in 0..n {
                    for s in enumerate_schroeder(SchroederFamily::All, p, n, l, d).unwrap() {
                        let lab = s.canonical_labelling();
                        let checked =
                            LabelledPath::new(lab.path().clone(), lab.labels().to_vec(), lab.drises().to_vec());
                        assert!(checked.is_ok(), "{s:?}");
                        assert_eq!(s.dinv(), lab.dinv(), "{s:?}");
                        assert_eq!(s.area(), lab.area());
                    }
                }
            }
        }
    }
}

#[test]
fn refined_schroeder_families() {
    for total in 1..=6 {
        for p in 0..total {
            let n = total - p;
            for d in 0..=n {
                for l in 0..n {
                    let all = qt_polynomial(SchroederFamily::All, p, n, l, d).unwrap();
                    let mut sum = QTPoly::zero();
                    for k in 1..=n {
                        sum = sum + qt_polynomial(SchroederFamily::Refined(k), p, n, l, d).unwrap();
                        let sqe: BTreeSet<_> =
                            enumerate_schroeder(SchroederFamily::Refined(k), p, n, l, d).unwrap().into_iter().collect();
                        for x in enumerate_schroeder(SchroederFamily::DyckRefined(k), p, n, l, d).unwrap() {
                            assert!(sqe.contains(&x));
                        }
                    }
                    assert_eq!(sum, all, "p={p} n={n} l={l} d={d}");
                }
            }
        }
    }
}

#[test]
fn fully_refined_closed_form() {
    for n in 1..=4i64 {
        for p in 0..=2i64 {
            for d in 0..=n {
                let got =
                    qt_polynomial(SchroederFamily::Refined(n as usize), p as usize, n as usize, 0, d as usize).unwrap();
                let c = (n - d) * (n - d - 1) / 2;
                let expected = QTPoly::qt_pow(c as u32, 0) * q_binomial(n, n - d) * q_binomial(n + p - 1, p);
                assert_eq!(got, expected, "n={n} p={p} d={d}");
            }
        }
    }
    assert!(qt_polynomial(SchroederFamily::All, 0, 2, 2, 0).unwrap().is_zero());
}

#[test]
fn involution_properties() {
    for (m, n) in [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (2, 3), (3, 2)] {
        let content = vec![1; n];
        for k in 0..n {
            for p in enumerate_with_content(Family::Plsqe, m, k, &content).unwrap() {
                let f = phi(&p);
                assert_eq!(phi(&f), p);
                if p.path().rises().is_empty() {
                    assert_eq!(f, p);
                    continue;
                }
                assert_ne!(f, p);
                assert_eq!(f.dinv(), p.dinv());
                assert_eq!(f.labels(), p.labels());
                assert_eq!((f.k() as i64 - p.k() as i64).abs(), 1);
                assert_eq!(f.area() as i64 - p.area() as i64, p.k() as i64 - f.k() as i64);
                assert_eq!(weight(&f), -weight(&p));
                assert_eq!(f.is_dyck(), p.is_dyck());
            }
        }
    }
}

#[test]
fn alternating_sums_collapse() {
    for (m, n) in [(0, 1), (0, 3), (1, 2), (1, 3), (2, 2)] {
        let target = gen_function(Family::Pld, m, n, 0).unwrap().subs_t0().unwrap();
        for family in [Family::Plsqe, Family::Pld] {
            let mut sum = SymFunc::zero(n as u32);
            for s in 0..n {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                let c = QTRat::from_poly(QTPoly::qt_pow(0, s as u32) * QTPoly::from_int(sign));
                sum = &sum + &gen_function(family, m, n, s).unwrap().scale(&c);
            }
            assert_eq!(sum, target, "{family:?} m={m} n={n}");
        }
    }
}

#[test]
fn removal_figure_example() {
    let d = lp(&[0, 1, 1, 2, 3, 3, 4, 4], &[2, 8, 1, 3, 7, 4, 6, 5], &[2, 5]);
    assert_eq!(d.dinv(), 0);
    assert!(is_contractible(&d, 5) && is_contractible(&d, 7));
    assert!(!is_contractible(&d, 2) && !is_contractible(&d, 8));
    let run = remove_big_cars(&d, 2).unwrap();
    assert_eq!(
        run.steps,
        vec![
            RemovalRecord { label: 7, loss: 1, mode: RemovalMode::RiseKilling },
            RemovalRecord { label: 8, loss: 5, mode: RemovalMode::RisePreserving },
        ]
    );
    let first = removal_step(&d, 5).unwrap();
    assert_eq!(first.path, lp(&[0, 1, 1, 2, 3, 4, 4], &[2, 8, 1, 3, 4, 6, 5], &[4]));
    assert_eq!(run.result, lp(&[0, 0, 1, 2, 3, 3], &[2, 1, 3, 4, 6, 5], &[3]));
    assert_eq!(reinsert_all(&run).unwrap(), d);
}

#[test]
fn removal_edge_cases() {
    let one = lp(&[0], &[1], &[]);
    let step = removal_step(&one, 1).unwrap();
    assert_eq!(step.path.size(), 0);
    assert_eq!(step.loss, 0);
    assert!(removal_step(&lp(&[0, 1], &[1, 2], &[]), 1).is_err());
    assert!(hperp_combinatorial(4, 3, 0).is_err());
}

#[test]
fn loss_formula_matches_area_difference() {
    for n in 1..=5 {
        for j in 1..=n.min(3) {
            for k in 0..n {
                for lambda in deltasq::partition::enumerate_partitions((n - j) as u32) {
                    for d in big_car_paths(lambda.parts(), j, k).unwrap() {
                        let run = remove_big_cars(&d, j).unwrap();
                        let mut cur = d.clone();
                        for rec in &run.steps {
                            let i = (1..=cur.size()).find(|&i| cur.label(i) == rec.label).unwrap();
                            let step = removal_step(&cur, i).unwrap();
                            let size = cur.size();
                            let und = |rows: Vec<usize>| {
                                rows.into_iter().filter(|r| !cur.drises().contains(r)).count() as u32
                            };
                            let mut formula = und(cur.path().rises().into_iter().filter(|&r| r <= i).collect());
                            if !step.contractible {
                                formula += und((i + 1..=size).collect());
                            }
                            assert_eq!(step.loss, formula, "{cur:?} row {i}");
                            assert_eq!(step.loss, rec.loss);
                            assert_eq!(step.path.dinv(), 0);
                            cur = step.path;
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn removal_is_a_bijection_and_reversible() {
    for n in 1..=5 {
        for j in 1..=n.min(2) {
            for k in 0..n {
                check_removal_bijection(j, n, k, true).unwrap();
            }
        }
    }
    for n in 3..=5 {
        for k in 0..n {
            check_removal_bijection(3, n, k, false).unwrap();
        }
    }
}

#[test]
fn hperp_two_ways() {
    for n in 1..=5 {
        for k in 0..n {
            let gf = gen_function(Family::Pld, 0, n, k).unwrap().subs_q0().unwrap();
            for j in 1..=n {
                let comb = hperp_combinatorial(j, n, k).unwrap();
                assert_eq!(comb, skew_h(j as u32, &gf).unwrap(), "n={n} j={j} k={k}");
                let mut rhs = SymFunc::zero((n - j) as u32);
                for r in 0..=j {
                    let kk = k as i64 - j as i64 + r as i64;
                    if kk < 0 {
                        continue;
                    }
                    let smaller = if n == j {
                        if kk == 0 {
                            SymFunc::one()
                        } else {
                            continue;
                        }
                    } else if kk as usize >= n - j {
                        continue;
                    } else {
                        gen_function(Family::Pld, 0, n - j, kk as usize).unwrap().subs_q0().unwrap()
                    };
                    let (nk, jr) = ((n - k) as i64, (j - r) as i64);
                    let c = QTPoly::qt_pow(0, (jr * (jr - 1) / 2) as u32)
                        * t_binomial(nk, r as i64)
                        * t_binomial(nk - r as i64, jr);
                    rhs = &rhs + &smaller.scale_poly(&c);
                }
                assert_eq!(comb, rhs, "n={n} j={j} k={k}");
            }
        }
    }
}

#[test]
fn json_round_trip() {
    let d = lp(&[0, -3, -3, -2, -2, -1, 0, 0], &[2, 0, 2, 4, 0, 1, 3, 1], &[6]);
    let v = d.to_json();
    assert_eq!(v["start"], "N");
    assert_eq!(LabelledPath::from_json(&v).unwrap(), d);
    assert_eq!(d.to_csv_row(), "11,6,\"(2,2,1,1)\"");
    let s = sq(&[0, -3, -3, -2, -2, -1, 0, 0], &[6], &[7], &[2, 5]);
    assert_eq!(s.to_json()["dpeaks"], serde_json::json!([7]));
}

fn area_words() -> impl Strategy<Value = SquarePath> {
    (1usize..=7).prop_flat_map(|n| {
        let all = SquarePath::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn steps_round_trip(p in area_words()) {
        prop_assert_eq!(SquarePath::from_steps(&p.steps()).unwrap(), p.clone());
        prop_assert!(p.peaks().contains(&p.size()));
    }

    #[test]
    fn phi_is_an_involution(p in area_words(), seed in any::<u64>()) {
        let rises = p.rises();
        let drises: Vec<usize> = rises.iter().copied().filter(|r| seed >> (r % 64) & 1 == 1).collect();
        let labels: Vec<u32> = (1..=p.size() as u32).collect();
        let mut sorted = labels.clone();
        sorted.sort_by_key(|&l| (p.a(l as usize), l));
        let mut lab = vec![0; p.size()];
        for (v, &i) in sorted.iter().enumerate() {
            lab[i as usize - 1] = v as u32 + 1;
        }
        let x = LabelledPath::new(p, lab, drises).unwrap();
        prop_assert_eq!(phi(&phi(&x)), x);
    }
}
