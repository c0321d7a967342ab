//! Verification of the symmetric-function identities against their
//! combinatorial and recursive counterparts.

use super::families::{f_direct, f_recursive, f_sum_closed, f_via_nabla_enk, s_from_f, s_recursive, s_sum_closed};
use super::{params, run_check, sf_gen_delta, sf_gen_delta_square, Outcome, VerificationReport};
use crate::error::Result;
use crate::macdonald;
use crate::partition::{enumerate_partitions, Partition};
use crate::paths::{self, Family, SchroederFamily};
use crate::qt::{q_binomial, q_multinomial, QTPoly, QTRat};
use crate::symfunc::{sum_all, SymFunc};

fn minus_t_pow(s: u32) -> QTPoly {
    let sign = if s.is_multiple_of(2) { 1 } else { -1 };
    &QTPoly::from_int(sign) * &QTPoly::qt_pow(0, s)
}

fn alternating<F: Fn(u32) -> Result<SymFunc>>(n: u32, term: F) -> Result<SymFunc> {
    let parts = (0..n).map(|s| Ok(term(s)?.scale_poly(&minus_t_pow(s)))).collect::<Result<Vec<_>>>()?;
    Ok(sum_all(n, &parts))
}

/// `∇ e_n |_{t=0}`.
fn nabla_e_t0(n: u32) -> Result<SymFunc> {
    macdonald::nabla(&SymFunc::e(n))?.subs_t0()
}

fn family_for(square: bool) -> Family {
    if square {
        Family::Plsqe
    } else {
        Family::Pld
    }
}

pub fn verify_gen_delta(m: u32, n: u32, k: u32) -> VerificationReport {
    run_check("gen-delta", params([("m", m as i64), ("n", n as i64), ("k", k as i64)]), |o| {
        let comb = paths::gen_function(Family::Pld, m as usize, n as usize, k as usize)?;
        let sf = sf_gen_delta(m, n, k)?;
        o.compare("PLD vs Delta side", &comb, &sf).positivity(&sf);
        Ok(())
    })
}

pub fn verify_gen_delta_square(m: u32, n: u32, k: u32) -> VerificationReport {
    run_check("gen-delta-square", params([("m", m as i64), ("n", n as i64), ("k", k as i64)]), |o| {
        let comb = paths::gen_function(Family::Plsqe, m as usize, n as usize, k as usize)?;
        let sf = sf_gen_delta_square(m, n, k)?;
        o.compare("PLSQE vs Delta square side", &comb, &sf).positivity(&sf);
        Ok(())
    })
}

/// The refined Schröder identity `SQE(p, n\k)^{*ℓ,∘d} = S_{n,k;p}^{(d,ℓ)}` for
/// every `1 <= k <= n`, then the sum over `k` against the scalar product.
pub fn verify_schroeder_square(p: u32, n: u32, l: u32, d: u32) -> Result<Vec<VerificationReport>> {
    let (pu, nu, lu, du) = (p as usize, n as usize, l as usize, d as usize);
    let mut out = Vec::new();
    for k in 1..=n {
        let ps = params([("p", p as i64), ("n", n as i64), ("l", l as i64), ("d", d as i64), ("k", k as i64)]);
        out.push(run_check("schroeder.refined", ps, |o| {
            let comb = paths::qt_polynomial(SchroederFamily::Refined(k as usize), pu, nu, lu, du)?;
            let rec = if n >= k + l { s_recursive(n, k, p, d, l)? } else { QTPoly::zero() };
            o.compare("paths vs S recursion", &comb, &rec);
            Ok(())
        }));
    }
    let ps = params([("p", p as i64), ("n", n as i64), ("l", l as i64), ("d", d as i64)]);
    out.push(run_check("schroeder.sum", ps, |o| {
        let comb = paths::qt_polynomial(SchroederFamily::All, pu, nu, lu, du)?;
        let rec = (1..=n - l)
            .try_fold(QTPoly::zero(), |acc, k| Ok::<_, crate::Error>(&acc + &s_recursive(n, k, p, d, l)?))?;
        let sf = s_sum_closed(n, p, d, l)?;
        o.compare("paths vs sum of S", &comb, &rec).compare("sum of S vs scalar product", &rec, &sf);
        Ok(())
    }));
    Ok(out)
}

/// Definition, recursion and `Π^{-1} ∇ E_{n-ℓ,k}` evaluation of `F` for each
/// `k <= min(n-ℓ, k_max)`, then `Σ_k F` against the scalar product when `d <= n`.
pub fn verify_f_triple(n: u32, p: u32, d: u32, l: u32, k_max: Option<u32>) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for k in 0..=(n - l).min(k_max.unwrap_or(u32::MAX)) {
        let ps = params([("n", n as i64), ("k", k as i64), ("p", p as i64), ("d", d as i64), ("l", l as i64)]);
        out.push(run_check("f-triple", ps, |o| {
            let direct = f_direct(n, k, p, d, l)?;
            let rec = f_recursive(n, k, p, d, l)?;
            let via = f_via_nabla_enk(n, k, p, d, l)?;
            o.compare("definition vs recursion", &direct, &rec).compare("definition vs nabla E formula", &direct, &via);
            Ok(())
        }));
    }
    if d <= n && k_max.is_none() {
        let ps = params([("n", n as i64), ("p", p as i64), ("d", d as i64), ("l", l as i64)]);
        out.push(run_check("f-triple.sum", ps, |o| {
            let sum = (1..=n - l)
                .try_fold(QTPoly::zero(), |acc, k| Ok::<_, crate::Error>(&acc + &f_recursive(n, k, p, d, l)?))?;
            o.compare("sum of F vs scalar product", &sum, &f_sum_closed(n, p, d, l)?);
            Ok(())
        }));
    }
    Ok(out)
}

/// `S` recursion against `[n]_q F / [k]_q` for each `k`, then `Σ_k S` against
/// the scalar product.
pub fn verify_s_sum(n: u32, p: u32, d: u32, l: u32) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for k in 1..=n - l {
        let ps = params([("n", n as i64), ("k", k as i64), ("p", p as i64), ("d", d as i64), ("l", l as i64)]);
        out.push(run_check("s-sum.division", ps, |o| {
            o.compare("S recursion vs [n]/[k] F", &s_recursive(n, k, p, d, l)?, &s_from_f(n, k, p, d, l)?);
            Ok(())
        }));
    }
    let ps = params([("n", n as i64), ("p", p as i64), ("d", d as i64), ("l", l as i64)]);
    out.push(run_check("s-sum", ps, |o| {
        let sum = (1..=n - l)
            .try_fold(QTPoly::zero(), |acc, k| Ok::<_, crate::Error>(&acc + &s_recursive(n, k, p, d, l)?))?;
        o.compare("sum of S vs scalar product", &sum, &s_sum_closed(n, p, d, l)?);
        Ok(())
    }));
    Ok(out)
}

/// `Σ_s (-t)^s Δ_{h_m} Δ'_{e_{n-s-1}} s_λ` for every `λ ⊢ n`: a multiple of
/// `∇e_n|_{t=0}` on hooks and zero elsewhere. With `m = 0` the plain statement
/// is reported as well.
pub fn verify_main_thm(m: u32, n: u32) -> Result<Vec<VerificationReport>> {
    let base = nabla_e_t0(n)?;
    let qb = q_binomial((m + n) as i64 - 1, m as i64);
    let mut out = Vec::new();
    for lam in enumerate_partitions(n) {
        let lhs = || -> Result<SymFunc> {
            let s_lam = SymFunc::s(&lam);
            let hm = SymFunc::h(m);
            alternating(n, |s| {
                let e = SymFunc::e(n - s - 1);
                macdonald::apply_diagonal(&s_lam, |mu| {
                    Ok(&macdonald::eigenvalue(&hm, mu, false) * &macdonald::eigenvalue(&e, mu, true))
                })
            })
        };
        let expected =
            if lam.is_hook() { base.scale_poly(&(&qb * &minus_t_pow(lam.part(0) - 1))) } else { SymFunc::zero(n) };
        let statement = if m == 0 { "main-thm" } else { "main-thm.cor" };
        let mut ps = params([("m", m as i64), ("n", n as i64)]);
        ps.push(("lambda", lam.to_string().into()));
        out.push(run_check(statement, ps, |o| {
            o.compare("alternating sum vs hook value", &lhs()?, &expected);
            Ok(())
        }));
    }
    Ok(out)
}

/// Both symmetric-function alternating sums, both combinatorial ones, the
/// linear relation among per-`k` differences, and the sign-reversing
/// involution on every object whose content is a partition of `n`.
pub fn verify_alternating_sums(m: u32, n: u32) -> Result<Vec<VerificationReport>> {
    let target = nabla_e_t0(n)?.scale_poly(&q_binomial((m + n) as i64 - 1, m as i64));
    let mut out = Vec::new();
    for square in [false, true] {
        let tag = if square { "square" } else { "delta" };
        let ps = params([("m", m as i64), ("n", n as i64)]);
        out.push(run_check(&format!("invo-sums.sf-{tag}"), ps.clone(), |o| {
            let lhs = alternating(n, |s| if square { sf_gen_delta_square(m, n, s) } else { sf_gen_delta(m, n, s) })?;
            o.compare("alternating sum vs q-binomial times nabla e_n at t=0", &lhs, &target);
            Ok(())
        }));
        out.push(run_check(&format!("invo-sums.paths-{tag}"), ps.clone(), |o| {
            let fam = family_for(square);
            let lhs = alternating(n, |s| paths::gen_function(fam, m as usize, n as usize, s as usize))?;
            let pld0 = paths::gen_function(Family::Pld, m as usize, n as usize, 0)?.subs_t0()?;
            o.compare("alternating sum vs PLD at t=0", &lhs, &pld0).compare(
                "PLD at t=0 vs q-binomial times nabla e_n at t=0",
                &pld0,
                &target,
            );
            Ok(())
        }));
        out.push(run_check(&format!("invo-sums.linear-{tag}"), ps.clone(), |o| {
            let fam = family_for(square);
            let diffs = alternating(n, |s| {
                let comb = paths::gen_function(fam, m as usize, n as usize, s as usize)?;
                let sf = if square { sf_gen_delta_square(m, n, s)? } else { sf_gen_delta(m, n, s)? };
                Ok(&comb - &sf)
            })?;
            o.compare("alternating sum of differences", &diffs, &SymFunc::zero(n));
            Ok(())
        }));
        out.push(run_check(&format!("invo-sums.phi-{tag}"), ps, |o| involution_check(o, family_for(square), m, n)));
    }
    Ok(out)
}

fn involution_check(o: &mut Outcome, fam: Family, m: u32, n: u32) -> Result<()> {
    let (mu, nu) = (m as usize, n as usize);
    for lam in enumerate_partitions(n) {
        let mut fixed = QTPoly::zero();
        for k in 0..nu {
            for p in paths::enumerate_with_content(fam, mu, k, lam.parts())? {
                let image = paths::phi(&p);
                if paths::phi(&image) != p {
                    o.fail(format!("phi is not an involution at {}", p.to_json()));
                    return Ok(());
                }
                if image == p {
                    fixed = &fixed + &paths::weight(&p);
                    continue;
                }
                if paths::weight(&image) != -&paths::weight(&p) {
                    o.fail(format!("phi does not negate the weight at {}", p.to_json()));
                    return Ok(());
                }
                if image.is_dyck() != p.is_dyck() {
                    o.fail(format!("phi leaves the Dyck subfamily at {}", p.to_json()));
                    return Ok(());
                }
            }
        }
        let pld0 = paths::gen_function(Family::Pld, mu, nu, 0)?.subs_t0()?;
        let expected = pld0.coeff(&lam).is_polynomial()?;
        o.compare(&format!("fixed points with content {lam}"), &fixed, &expected);
    }
    Ok(())
}

/// At `q = 0` the Delta square side, the Delta side and both path families agree.
pub fn verify_q0_delta_square(n: u32, k: u32) -> VerificationReport {
    run_check("q0-delta-square", params([("n", n as i64), ("k", k as i64)]), |o| {
        let sq = sf_gen_delta_square(0, n, k)?.subs_q0()?;
        let de = sf_gen_delta(0, n, k)?.subs_q0()?;
        let pld = paths::gen_function(Family::Pld, 0, n as usize, k as usize)?.subs_q0()?;
        let plsqe = paths::gen_function(Family::Plsqe, 0, n as usize, k as usize)?.subs_q0()?;
        o.compare("Delta square vs Delta", &sq, &de).compare("Delta vs PLD", &de, &pld).compare(
            "PLD vs PLSQE",
            &pld,
            &plsqe,
        );
        Ok(())
    })
}

/// `Σ_λ [n; λ]_q m_λ`.
fn macmahon(n: u32) -> Result<SymFunc> {
    let terms = enumerate_partitions(n)
        .into_iter()
        .map(|lam: Partition| {
            let parts: Vec<i64> = lam.parts().iter().map(|&x| x as i64).collect();
            Ok((lam, QTRat::from_poly(q_multinomial(n as i64, &parts)?)))
        })
        .collect::<Result<Vec<_>>>()?;
    SymFunc::from_terms(n, terms)
}

/// At `t = 0`: `Δ_{h_m} Δ'_{e_{n-1}} e_n`, `Δ_{h_m} ∇ e_n`, `PLD(m,n)^{*0}` and
/// the q-multinomial sum all agree.
pub fn verify_t0_k0(m: u32, n: u32) -> VerificationReport {
    run_check("t0-k0", params([("m", m as i64), ("n", n as i64)]), |o| {
        let de = sf_gen_delta(m, n, 0)?.subs_t0()?;
        let hm = SymFunc::h(m);
        let nab =
            macdonald::apply_diagonal(
                &SymFunc::e(n),
                |mu| Ok(macdonald::eigenvalue(&hm, mu, false).mul_poly(&mu.t())),
            )?
            .subs_t0()?;
        let pld = paths::gen_function(Family::Pld, m as usize, n as usize, 0)?.subs_t0()?;
        let mm = macmahon(n)?.scale_poly(&q_binomial((n + m) as i64 - 1, m as i64));
        o.compare("Delta' vs Delta_h nabla", &de, &nab).compare("Delta_h nabla vs PLD", &nab, &pld).compare(
            "PLD vs q-multinomial sum",
            &pld,
            &mm,
        );
        Ok(())
    })
}
