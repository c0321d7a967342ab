//! Both sides of the Delta and Delta-square identities, assembled and compared
//! exactly, with one [`VerificationReport`] per parameter tuple and check.

mod appendix;
mod families;
mod verify;

pub use appendix::{
    haglund_instance, lem52_check, q_vandermonde_check, spec_delta_q0_coefficient, spec_delta_q0_formula,
    tech_lemma_lhs, tech_lemma_rhs, verify_appendix_q0,
};
pub use families::{
    f_direct, f_recursive, f_sum_closed, f_via_nabla_enk, s_from_f, s_recursive, s_sum_closed, FTable, Key,
};
pub use verify::{
    verify_alternating_sums, verify_f_triple, verify_gen_delta, verify_gen_delta_square, verify_main_thm,
    verify_q0_delta_square, verify_s_sum, verify_schroeder_square, verify_t0_k0,
};

use crate::error::{Error, Result};
use crate::macdonald;
use crate::qt::{t_int, QTPoly, QTRat};
use crate::symfunc::{omega, Basis, SymFunc};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub status: Status,
    pub witness: Option<String>,
    pub ms: u64,
    /// Whether every Schur coefficient of the symmetric-function side lies in
    /// `ℕ[q,t]`; only set by checks that scan for it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schur_positive: Option<bool>,
}

impl VerificationReport {
    pub fn is_equal(&self) -> bool {
        self.status == Status::Equal
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                serde_json::Value::String(s) => format!("{k}={s}"),
                v => format!("{k}={v}"),
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub const CSV_HEADER: &'static str = "statement,params,status,ms";

    pub fn to_csv_row(&self) -> String {
        let status = match self.status {
            Status::Equal => "equal",
            Status::Mismatch => "mismatch",
        };
        format!("{},{},{},{}", self.statement, self.params_string(), status, self.ms)
    }
}

/// Things that can be compared with a human-readable witness of the first difference.
pub trait Witness {
    fn witness(&self, other: &Self) -> Option<String>;
}

impl Witness for SymFunc {
    fn witness(&self, other: &Self) -> Option<String> {
        self.first_difference(other).map(|(lam, a, b)| format!("coefficient of m{lam}: {a} vs {b}"))
    }
}

impl Witness for QTPoly {
    fn witness(&self, other: &Self) -> Option<String> {
        let diff = self - other;
        let first = diff.terms().next().map(|(a, b, _)| (a, b));
        first.map(|(a, b)| format!("coefficient of q^{a} t^{b}: {} vs {}", self.coeff(a, b), other.coeff(a, b)))
    }
}

impl Witness for QTRat {
    fn witness(&self, other: &Self) -> Option<String> {
        (self != other).then(|| format!("{self} vs {other}"))
    }
}

/// Chains comparisons and keeps the first failure.
pub(crate) struct Outcome {
    witness: Option<String>,
    schur_positive: Option<bool>,
}

impl Outcome {
    pub(crate) fn new() -> Self {
        Outcome { witness: None, schur_positive: None }
    }

    pub(crate) fn compare<T: Witness>(&mut self, what: &str, lhs: &T, rhs: &T) -> &mut Self {
        if self.witness.is_none() {
            if let Some(w) = lhs.witness(rhs) {
                self.witness = Some(format!("{what}: {w}"));
            }
        }
        self
    }

    pub(crate) fn fail(&mut self, what: String) -> &mut Self {
        if self.witness.is_none() {
            self.witness = Some(what);
        }
        self
    }

    pub(crate) fn positivity(&mut self, f: &SymFunc) -> &mut Self {
        self.schur_positive = Some(negative_schur_terms(f).is_empty());
        self
    }
}

pub(crate) type Params = Vec<(&'static str, serde_json::Value)>;

pub(crate) fn params<const N: usize>(xs: [(&'static str, i64); N]) -> Params {
    xs.into_iter().map(|(k, v)| (k, v.into())).collect()
}

/// Runs one check, turning library errors into mismatches that carry the error text.
pub(crate) fn run_check(
    statement: &str,
    params: Params,
    body: impl FnOnce(&mut Outcome) -> Result<()>,
) -> VerificationReport {
    let start = Instant::now();
    let mut out = Outcome::new();
    if let Err(e) = body(&mut out) {
        out.fail(format!("error: {e}"));
    }
    VerificationReport {
        statement: statement.to_string(),
        params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        status: if out.witness.is_none() { Status::Equal } else { Status::Mismatch },
        witness: out.witness,
        ms: start.elapsed().as_millis() as u64,
        schur_positive: out.schur_positive,
    }
}

/// Schur and monomial coefficients having a negative `q^a t^b` term.
pub fn negative_schur_terms(f: &SymFunc) -> Vec<String> {
    let mut out = Vec::new();
    for (basis, name) in [(Basis::S, "s"), (Basis::M, "m")] {
        for (lam, c) in f.coords(basis) {
            let negative = match c.is_polynomial() {
                Ok(p) => p.terms().any(|(_, _, x)| x < crate::qt::Rational::from_integer(0.into())),
                Err(_) => true,
            };
            if negative {
                let mut s = String::new();
                let _ = write!(s, "{name}{lam}: {c}");
                out.push(s);
            }
        }
    }
    out
}

type SfMemo = HashMap<(u8, u32, u32, u32), SymFunc>;

fn memo_sf(kind: u8, m: u32, n: u32, k: u32, build: impl FnOnce() -> Result<SymFunc>) -> Result<SymFunc> {
    static MEMO: OnceLock<Mutex<SfMemo>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(f) = memo.lock().unwrap().get(&(kind, m, n, k)) {
        return Ok(f.clone());
    }
    let f = build()?;
    memo.lock().unwrap().insert((kind, m, n, k), f.clone());
    Ok(f)
}

fn check_nk(n: u32, k: u32) -> Result<()> {
    if n == 0 || k >= n {
        return Err(Error::Domain(format!("(n,k) = ({n},{k}) needs n > k >= 0")));
    }
    Ok(())
}

/// `Δ_{h_m} Δ'_{e_{n-k-1}} e_n`, with every coefficient checked to be a polynomial.
pub fn sf_gen_delta(m: u32, n: u32, k: u32) -> Result<SymFunc> {
    check_nk(n, k)?;
    memo_sf(0, m, n, k, || {
        let (hm, e) = (SymFunc::h(m), SymFunc::e(n - k - 1));
        let f = macdonald::apply_diagonal(&SymFunc::e(n), |mu| {
            Ok(&macdonald::eigenvalue(&hm, mu, false) * &macdonald::eigenvalue(&e, mu, true))
        })?;
        require_polynomial(f, "generalized Delta side")
    })
}

/// `[n-k]_t / [n]_t Δ_{h_m} Δ_{e_{n-k}} ω(p_n)`, with every coefficient checked
/// to be a polynomial after the division.
pub fn sf_gen_delta_square(m: u32, n: u32, k: u32) -> Result<SymFunc> {
    check_nk(n, k)?;
    memo_sf(1, m, n, k, || {
        let (hm, e) = (SymFunc::h(m), SymFunc::e(n - k));
        let f = macdonald::apply_diagonal(&omega(&SymFunc::p(n)), |mu| {
            Ok(&macdonald::eigenvalue(&hm, mu, false) * &macdonald::eigenvalue(&e, mu, false))
        })?;
        let f = f.scale(&QTRat::new(t_int(n - k), t_int(n))?);
        require_polynomial(f, "generalized Delta square side")
    })
}

fn require_polynomial(f: SymFunc, what: &str) -> Result<SymFunc> {
    if let Some((lam, c)) = f.terms().find(|(_, c)| !c.is_poly()) {
        return Err(Error::NotPolynomial(format!("{what}: coefficient of m{lam} is {c}")));
    }
    Ok(f)
}

/// Registered statement identifiers, in the order `verify all` runs them.
pub const STATEMENTS: &[&str] = &[
    "gen-delta",
    "gen-delta-square",
    "schroeder",
    "f-triple",
    "s-sum",
    "main-thm",
    "invo-sums",
    "appendix-q0",
    "q0-delta-square",
    "t0-k0",
];

/// Upper bounds for a verification campaign. Unset bounds cover every
/// admissible value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub k: Option<u32>,
    pub d: Option<u32>,
    pub l: Option<u32>,
    pub j: Option<u32>,
}

impl Grid {
    fn upto(bound: Option<u32>, max: u32) -> std::ops::RangeInclusive<u32> {
        0..=bound.map_or(max, |b| b.min(max))
    }
}

/// Runs `statement` over every tuple of `grid`; reports come back in parameter order.
pub fn run_statement(statement: &str, grid: &Grid) -> Result<Vec<VerificationReport>> {
    let g = *grid;
    let ns = 1..=g.n;
    let jobs: Vec<Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>> = match statement {
        "gen-delta" | "gen-delta-square" => {
            let square = statement == "gen-delta-square";
            let mut v: Vec<Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>> = Vec::new();
            for m in 0..=g.m {
                for n in ns.clone() {
                    for k in Grid::upto(g.k, n - 1) {
                        v.push(Box::new(move || {
                            Ok(vec![if square { verify_gen_delta_square(m, n, k) } else { verify_gen_delta(m, n, k) }])
                        }));
                    }
                }
            }
            v
        }
        "schroeder" | "s-sum" => {
            let mut v: Vec<Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>> = Vec::new();
            let schroeder = statement == "schroeder";
            for p in 0..=g.p {
                for n in ns.clone() {
                    for l in Grid::upto(g.l, n - 1) {
                        for d in Grid::upto(g.d, n) {
                            v.push(Box::new(move || {
                                if schroeder {
                                    verify_schroeder_square(p, n, l, d)
                                } else {
                                    verify_s_sum(n, p, d, l)
                                }
                            }));
                        }
                    }
                }
            }
            v
        }
        "f-triple" => {
            let mut v: Vec<Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>> = Vec::new();
            for p in 0..=g.p {
                for n in ns.clone() {
                    for l in Grid::upto(g.l, n - 1) {
                        for d in Grid::upto(g.d, n + p) {
                            v.push(Box::new(move || verify_f_triple(n, p, d, l, g.k)));
                        }
                    }
                }
            }
            v
        }
        "main-thm" | "invo-sums" | "t0-k0" => {
            let mut v: Vec<Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>> = Vec::new();
            let which = statement.to_string();
            for m in 0..=g.m {
                for n in ns.clone() {
                    let which = which.clone();
                    v.push(Box::new(move || match which.as_str() {
                        "main-thm" => verify_main_thm(m, n),
                        "invo-sums" => verify_alternating_sums(m, n),
                        _ => Ok(vec![verify_t0_k0(m, n)]),
                    }));
                }
            }
            v
        }
        "q0-delta-square" => {
            let mut v: Vec<Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>> = Vec::new();
            for n in ns.clone() {
                for k in Grid::upto(g.k, n - 1) {
                    v.push(Box::new(move || Ok(vec![verify_q0_delta_square(n, k)])));
                }
            }
            v
        }
        "appendix-q0" => {
            let mut v: Vec<Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>> = Vec::new();
            for n in ns.clone() {
                for j in Grid::upto(g.j, n).filter(|&j| j >= 1) {
                    for k in Grid::upto(g.k, n - 1) {
                        v.push(Box::new(move || verify_appendix_q0(n, j, k)));
                    }
                }
            }
            v
        }
        other => return Err(Error::Domain(format!("unknown statement '{other}'; known: {}", STATEMENTS.join(", ")))),
    };
    let results: Vec<Result<Vec<VerificationReport>>> = jobs.par_iter().map(|job| job()).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
