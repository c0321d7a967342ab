use deltasq::conjectures::*;
use deltasq::macdonald::nabla;
use deltasq::partition::enumerate_partitions;
use deltasq::paths::{self, Family, SchroederFamily, SquarePath};
use deltasq::qt::{choose2, q_binomial, q_int, q_multinomial, t_binomial, QTPoly};
use deltasq::symfunc::{skew_h, SymFunc};
use deltasq::{Partition, QTRat};
use proptest::prelude::*;

fn part(xs: &[u32]) -> Partition {
    Partition::new(xs.to_vec()).unwrap()
}

/// `q^{C(n-d,2)} [n, n-d]_q [n+p-1, p]_q`, built from q-binomials alone.
fn top_closed_form(n: i64, p: i64, d: i64) -> QTPoly {
    let lead = QTPoly::qt_pow(choose2(n - d) as u32, 0);
    &(&lead * &q_binomial(n, n - d)) * &q_binomial(n + p - 1, p)
}

fn macmahon(n: u32) -> SymFunc {
    let terms = enumerate_partitions(n).into_iter().map(|lam| {
        let parts: Vec<i64> = lam.parts().iter().map(|&x| x as i64).collect();
        (lam, QTRat::from_poly(q_multinomial(n as i64, &parts).unwrap()))
    });
    SymFunc::from_terms(n, terms).unwrap()
}

#[test]
fn gen_delta_at_k0_is_nabla() {
    for n in 1..=4 {
        assert_eq!(sf_gen_delta(0, n, 0).unwrap(), nabla(&SymFunc::e(n)).unwrap(), "n={n}");
    }
}

#[test]
fn gen_delta_at_t0_is_a_macmahon_sum() {
    for n in 1..=4 {
        for m in 0..=2 {
            let expected = macmahon(n).scale_poly(&q_binomial((n + m) as i64 - 1, m as i64));
            assert_eq!(sf_gen_delta(m, n, 0).unwrap().subs_t0().unwrap(), expected, "m={m} n={n}");
        }
    }
}

#[test]
fn gen_delta_at_q0_is_the_pld_series() {
    for n in 1..=5 {
        for k in 0..n {
            let comb = paths::gen_function(Family::Pld, 0, n as usize, k as usize).unwrap();
            assert_eq!(sf_gen_delta(0, n, k).unwrap().subs_q0().unwrap(), comb.subs_q0().unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn gen_delta_square_top_k() {
    for n in 1..=4 {
        assert_eq!(sf_gen_delta_square(0, n, n - 1).unwrap(), SymFunc::e(n).scale_poly(&q_int(n)), "n={n}");
    }
}

#[test]
fn gen_delta_square_at_q0_agrees_with_gen_delta() {
    for n in 1..=5 {
        for k in 0..n {
            assert_eq!(
                sf_gen_delta_square(0, n, k).unwrap().subs_q0().unwrap(),
                sf_gen_delta(0, n, k).unwrap().subs_q0().unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn conjecture_holds_at_desk_scale() {
    for m in 0..=1 {
        for n in 1..=4 {
            for k in 0..n {
                for r in [verify_gen_delta(m, n, k), verify_gen_delta_square(m, n, k)] {
                    assert!(r.is_equal(), "{}", r.to_jsonl());
                }
            }
        }
    }
}

#[test]
fn sf_sides_reject_bad_parameters() {
    assert!(sf_gen_delta(0, 3, 3).is_err());
    assert!(sf_gen_delta_square(0, 0, 0).is_err());
}

#[test]
fn f_top_rows_match_the_closed_form() {
    for n in 1..=5u32 {
        for p in 0..=(6 - n).min(2) {
            for d in 0..=n {
                let want = top_closed_form(n as i64, p as i64, d as i64);
                assert_eq!(f_recursive(n, n, p, d, 0).unwrap(), want, "F n={n} p={p} d={d}");
                assert_eq!(f_direct(n, n, p, d, 0).unwrap(), want, "F direct n={n} p={p} d={d}");
                assert_eq!(s_recursive(n, n, p, d, 0).unwrap(), want, "S n={n} p={p} d={d}");
            }
        }
    }
    assert_eq!(f_recursive(3, 3, 0, 0, 0).unwrap(), QTPoly::qt_pow(3, 0));
}

#[test]
fn f_table_zero_conventions() {
    let mut table = FTable::new();
    table.fill(4, 1).unwrap();
    assert!(table.f(3, 3, 0, 0, 1).is_zero());
    assert!(table.f(3, 1, 0, -1, 0).is_zero());
    assert!(table.f(2, 1, 0, 4, 0).is_zero());
    assert!(table.s(2, 1, 1, 3, 0).is_zero());
    assert!(table.f(0, 0, 0, 0, 0).is_one());
    assert!(table.f(3, 0, 0, 0, 0).is_zero());
    assert!(f_direct(3, 3, 0, 0, 1).is_err());
    assert!(f_direct(2, 1, 0, 4, 0).is_err());
}

#[test]
fn f_definition_matches_recursion() {
    for n in 1..=6u32 {
        for p in 0..=6 - n {
            for k in 0..=n {
                for l in 0..=n - k {
                    for d in 0..=n + p {
                        assert_eq!(
                            f_direct(n, k, p, d, l).unwrap(),
                            f_recursive(n, k, p, d, l).unwrap(),
                            "(n,k,p,d,l)=({n},{k},{p},{d},{l})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn nabla_formula_matches_away_from_the_empty_partition() {
    assert!(f_via_nabla_enk(1, 1, 0, 0, 0).unwrap().is_one());
    for n in 1..=5u32 {
        for p in 0..=5 - n {
            for k in 0..=n {
                for l in 0..=n - k {
                    for d in 0..n + p {
                        assert_eq!(
                            f_via_nabla_enk(n, k, p, d, l).unwrap(),
                            f_direct(n, k, p, d, l).unwrap(),
                            "(n,k,p,d,l)=({n},{k},{p},{d},{l})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn nabla_formula_vanishes_at_d_equal_n_plus_p() {
    // only γ = ∅ contributes there, and a positive-degree function vanishes at X = 0
    for n in 1..=5u32 {
        assert!(f_via_nabla_enk(n, n, 0, n, 0).unwrap().is_zero());
        assert!(f_direct(n, n, 0, n, 0).unwrap().is_one());
    }
}

#[test]
fn f_sum_theorem() {
    for n in 1..=5u32 {
        for p in 0..=1 {
            for l in 0..n {
                for d in 0..=n {
                    let sum = (1..=n - l).fold(QTPoly::zero(), |acc, k| &acc + &f_recursive(n, k, p, d, l).unwrap());
                    assert_eq!(sum, f_sum_closed(n, p, d, l).unwrap(), "(n,p,d,l)=({n},{p},{d},{l})");
                }
            }
        }
    }
}

#[test]
fn s_is_a_polynomial_multiple_of_f() {
    for n in 1..=6u32 {
        for p in 0..=6 - n {
            for k in 1..=n {
                for l in 0..=n - k {
                    for d in 0..=n {
                        assert_eq!(
                            s_recursive(n, k, p, d, l).unwrap(),
                            s_from_f(n, k, p, d, l).unwrap(),
                            "(n,k,p,d,l)=({n},{k},{p},{d},{l})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn s_sum_theorem() {
    for n in 1..=5u32 {
        for l in 0..n {
            for d in 0..=n {
                let sum = (1..=n - l).fold(QTPoly::zero(), |acc, k| &acc + &s_recursive(n, k, 0, d, l).unwrap());
                assert_eq!(sum, s_sum_closed(n, 0, d, l).unwrap(), "(n,d,l)=({n},{d},{l})");
            }
        }
    }
}

#[test]
fn schroeder_three_way() {
    for n in 1..=4u32 {
        for p in 0..=1 {
            for l in 0..n {
                for d in 0..=n {
                    for r in verify_schroeder_square(p, n, l, d).unwrap() {
                        assert!(r.is_equal(), "{}", r.to_jsonl());
                    }
                }
            }
        }
    }
}

#[test]
fn qt_square_special_case() {
    for n in 1..=5 {
        let comb = paths::qt_polynomial(SchroederFamily::All, 0, n, 0, 0).unwrap();
        let sf = s_sum_closed(n as u32, 0, 0, 0).unwrap();
        assert_eq!(comb, sf, "n={n}");
    }
}

#[test]
fn schroeder_all_peaks_decorated() {
    for n in 1..=4usize {
        let objects = paths::enumerate_schroeder(SchroederFamily::All, 0, n, 0, n).unwrap();
        for s in &objects {
            assert_eq!(s.dpeaks().to_vec(), s.path().peaks(), "{}", s.to_json());
        }
        let brute = SquarePath::all(n).into_iter().filter(|p| p.peaks().len() == n).count();
        assert_eq!(objects.len(), brute, "n={n}");
        let comb = paths::qt_polynomial(SchroederFamily::All, 0, n, 0, n).unwrap();
        assert_eq!(comb, s_sum_closed(n as u32, 0, n as u32, 0).unwrap(), "n={n}");
    }
}

#[test]
fn schroeder_with_l_equal_n_is_empty() {
    for n in 1..=4 {
        assert!(paths::qt_polynomial(SchroederFamily::All, 0, n, n, 0).unwrap().is_zero());
        assert!(s_sum_closed(n as u32, 0, 0, n as u32).is_err());
    }
}

#[test]
fn main_theorem_dichotomy() {
    for n in 1..=5 {
        for r in verify_main_thm(0, n).unwrap() {
            assert!(r.is_equal(), "{}", r.to_jsonl());
        }
    }
    let non_hook = verify_main_thm(0, 4).unwrap();
    assert!(non_hook.iter().any(|r| r.params["lambda"] == "(2,2)" && r.is_equal()));
}

#[test]
fn main_theorem_with_h_m() {
    for m in 1..=2 {
        for n in 1..=4 {
            for r in verify_main_thm(m, n).unwrap() {
                assert!(r.is_equal(), "{}", r.to_jsonl());
            }
        }
    }
}

#[test]
fn alternating_sums() {
    for m in 0..=2 {
        for n in 1..=(6 - m).min(4) {
            for r in verify_alternating_sums(m, n).unwrap() {
                assert!(r.is_equal(), "{}", r.to_jsonl());
            }
        }
    }
}

#[test]
fn smallest_alternating_sum() {
    let one = sf_gen_delta(0, 1, 0).unwrap();
    assert_eq!(one, SymFunc::e(1));
    assert_eq!(sf_gen_delta_square(0, 1, 0).unwrap(), SymFunc::e(1));
}

#[test]
fn specializations() {
    for n in 1..=5 {
        for k in 0..n {
            let r = verify_q0_delta_square(n, k);
            assert!(r.is_equal(), "{}", r.to_jsonl());
        }
        for m in 0..=2 {
            let r = verify_t0_k0(m, n);
            assert!(r.is_equal(), "{}", r.to_jsonl());
        }
    }
}

#[test]
fn tech_lemma_smallest_case() {
    let nu = part(&[1]);
    for k in 0..2 {
        let lhs = tech_lemma_lhs(&nu, 1, k).unwrap();
        let (a, b) = tech_lemma_rhs(&nu, 1, k);
        assert_eq!(lhs, a, "k={k}");
        assert_eq!(a, b, "k={k}");
    }
}

#[test]
fn tech_lemma_empty_partition_is_outside_its_scope() {
    let lhs = tech_lemma_lhs(&Partition::empty(), 1, 0);
    assert!(lhs.is_err());
    assert!(tech_lemma_rhs(&Partition::empty(), 1, 0).0.is_zero());
}

#[test]
fn hperp_recursion_at_j_equal_n() {
    for n in 1..=5 {
        for k in 0..n {
            let reports = verify_appendix_q0(n, n, k).unwrap();
            let sf = reports.iter().find(|r| r.statement == "appendix-q0.sf").unwrap();
            assert!(sf.is_equal(), "{}", sf.to_jsonl());
            let value = skew_h(n, &sf_gen_delta(0, n, k).unwrap().subs_q0().unwrap()).unwrap();
            assert_eq!(value.degree(), 0);
        }
    }
}

#[test]
fn appendix_checks() {
    for n in 1..=5 {
        for j in 1..=n {
            for k in 0..n {
                for r in verify_appendix_q0(n, j, k).unwrap() {
                    assert!(r.is_equal(), "{}", r.to_jsonl());
                }
            }
        }
    }
}

#[test]
fn spec_formula_small_cases() {
    // μ = (1): the coefficient is e_{-k}[0] M B Π / w = 1 at k = 0
    assert_eq!(spec_delta_q0_coefficient(&part(&[1]), 0).unwrap(), QTRat::one());
    assert_eq!(spec_delta_q0_formula(&part(&[1]), 0).unwrap(), QTRat::one());
    for mu in enumerate_partitions(4) {
        for k in 0..4 {
            assert_eq!(
                spec_delta_q0_coefficient(&mu, k).unwrap(),
                spec_delta_q0_formula(&mu, k).unwrap(),
                "mu={mu} k={k}"
            );
        }
    }
}

#[test]
fn lem52_and_haglund() {
    for n in 2..=5 {
        for beta in enumerate_partitions(n) {
            for k in 1..n {
                let (a, b) = lem52_check(&beta, k).unwrap();
                assert_eq!(a, b, "beta={beta} k={k}");
            }
        }
    }
    for nu in enumerate_partitions(3) {
        for a in 1..=2 {
            for r in 0..=3 {
                let (x, y) = haglund_instance(&nu, a, r).unwrap();
                assert_eq!(x, y, "nu={nu} a={a} r={r}");
            }
        }
    }
}

#[test]
fn reports_serialize() {
    let ok = verify_gen_delta(0, 2, 0);
    assert!(ok.is_equal() && ok.witness.is_none());
    let back: VerificationReport = serde_json::from_str(&ok.to_jsonl()).unwrap();
    assert_eq!(back.statement, "gen-delta");
    assert_eq!(back.params, ok.params);
    assert_eq!(ok.to_csv_row().split(',').count(), VerificationReport::CSV_HEADER.split(',').count());
    let bad = verify_f_triple(2, 0, 2, 0, None).unwrap();
    let mismatch = bad.iter().find(|r| !r.is_equal()).unwrap();
    assert!(mismatch.witness.as_deref().unwrap().contains("nabla E formula"));
    assert!(mismatch.to_jsonl().contains("\"status\":\"mismatch\""));
}

#[test]
fn positivity_scan() {
    let f = &SymFunc::e(2) - &SymFunc::h(2);
    assert!(!negative_schur_terms(&f).is_empty());
    assert!(negative_schur_terms(&sf_gen_delta_square(1, 3, 1).unwrap()).is_empty());
    assert_eq!(verify_gen_delta_square(0, 3, 0).schur_positive, Some(true));
}

#[test]
fn registry() {
    assert_eq!(STATEMENTS.len(), 10);
    assert!(run_statement("unknown-id", &Grid { n: 2, ..Default::default() }).is_err());
    let grid = Grid { n: 3, m: 1, ..Default::default() };
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    for s in STATEMENTS {
        let a = one.install(|| run_statement(s, &grid)).unwrap();
        let b = many.install(|| run_statement(s, &grid)).unwrap();
        let key = |r: &Vec<VerificationReport>| {
            r.iter().map(|x| (x.statement.clone(), x.params_string())).collect::<Vec<_>>()
        };
        assert_eq!(key(&a), key(&b), "{s}");
        assert!(!a.is_empty(), "{s}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_division(n in 1u32..=5, p in 0u32..=1, k0 in 0u32..5, l0 in 0u32..5, d0 in 0u32..6) {
        let k = 1 + k0 % n;
        let l = l0 % (n - k + 1);
        let d = d0 % (n + 1);
        let f = f_recursive(n, k, p, d, l).unwrap();
        let prod = &q_int(n) * &f;
        prop_assert!(prod.div_exact(&q_int(k)).unwrap().is_some());
    }

    #[test]
    fn vandermonde(len in 1u32..7, j in 1u32..5, n in 1u32..8, k0 in 0u32..8) {
        let k = k0 % n;
        let (a, b) = q_vandermonde_check(len, j, n, k);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn t_binomial_symmetry(a in 0i64..8, b in 0i64..8) {
        prop_assert_eq!(t_binomial(a, b), t_binomial(a, a - b));
    }
}
