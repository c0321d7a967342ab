//! Homogeneous symmetric functions with coefficients in `Q(q,t)`.
//!
//! Storage is always the monomial basis. The other classical bases, the Hall
//! scalar product and `ω` go through cached per-degree transition matrices;
//! plethysm goes through power sums.

mod alphabet;
pub mod finite;
pub(crate) mod tables;

pub use alphabet::{PowerSumTransform, VirtualAlphabet};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::qt::{common_denominator, QTPoly, QTRat, Rational};
use serde::de::Error as _;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use tables::{tables, QMat};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    E,
    H,
    P,
    S,
    M,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
            Basis::M => 'm',
        }
    }
}

/// A homogeneous symmetric function in monomial coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    degree: u32,
    coeffs: BTreeMap<Partition, QTRat>,
}

/// Coordinates over all partitions of `n` with one shared denominator.
#[derive(Clone)]
pub(crate) struct Dense {
    n: u32,
    nums: Vec<QTPoly>,
    den: QTPoly,
}

impl Dense {
    fn from_sym(f: &SymFunc) -> Dense {
        let tb = tables(f.degree);
        let mut vals = vec![QTRat::zero(); tb.parts.len()];
        for (p, c) in &f.coeffs {
            vals[tb.index[p]] = c.clone();
        }
        let (nums, den) = common_denominator(&vals);
        Dense { n: f.degree, nums, den }
    }

    /// Row vector times matrix.
    fn map(&self, m: &QMat) -> Dense {
        let size = self.nums.len();
        let mut out = vec![QTPoly::zero(); size];
        for (i, x) in self.nums.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let c = &m[i][j];
                if !num_traits::Zero::is_zero(c) {
                    *o = &*o + &x.scale(c);
                }
            }
        }
        Dense { n: self.n, nums: out, den: self.den.clone() }
    }

    fn into_coords(self) -> BTreeMap<Partition, QTRat> {
        let tb = tables(self.n);
        self.nums
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (tb.parts[i].clone(), QTRat::new(x, self.den.clone()).unwrap()))
            .collect()
    }

    fn into_sym(self) -> SymFunc {
        let n = self.n;
        SymFunc { degree: n, coeffs: self.into_coords() }
    }
}

fn matrix_for(n: u32, b: Basis, to_monomial: bool) -> Option<&'static QMat> {
    let tb = tables(n);
    Some(match (b, to_monomial) {
        (Basis::M, _) => return None,
        (Basis::P, true) => &tb.p2m,
        (Basis::P, false) => &tb.m2p,
        (Basis::H, true) => &tb.h2m,
        (Basis::H, false) => &tb.m_inner,
        (Basis::E, true) => &tb.e2m,
        (Basis::E, false) => &tb.m2e,
        (Basis::S, true) => &tb.s2m,
        (Basis::S, false) => &tb.m2s,
    })
}

impl SymFunc {
    pub fn zero(degree: u32) -> Self {
        SymFunc { degree, coeffs: BTreeMap::new() }
    }

    /// The constant `1` of degree 0.
    pub fn one() -> Self {
        Self::constant(QTRat::one())
    }

    pub fn constant(c: QTRat) -> Self {
        let mut f = Self::zero(0);
        if !c.is_zero() {
            f.coeffs.insert(Partition::empty(), c);
        }
        f
    }

    /// Builds `Σ c_λ m_λ`; every key must be a partition of `degree`.
    pub fn from_terms<I: IntoIterator<Item = (Partition, QTRat)>>(degree: u32, terms: I) -> Result<Self> {
        let mut f = Self::zero(degree);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::DegreeMismatch(p.size() as usize, degree as usize));
            }
            f.add_term(p, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, p: Partition, c: QTRat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&p) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.coeffs.remove(&p);
                }
            }
            None => {
                self.coeffs.insert(p, c);
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> QTRat {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    /// Nonzero monomial coefficients in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QTRat)> {
        self.coeffs.iter()
    }

    pub fn basis_element(b: Basis, lambda: &Partition) -> SymFunc {
        let n = lambda.size();
        let Some(m) = matrix_for(n, b, true) else {
            return Self::monomial(lambda);
        };
        let tb = tables(n);
        let row = &m[tb.index[lambda]];
        SymFunc {
            degree: n,
            coeffs: tb
                .parts
                .iter()
                .zip(row)
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(p, c)| (p.clone(), QTRat::from_rational(c.clone())))
                .collect(),
        }
    }

    pub fn monomial(lambda: &Partition) -> SymFunc {
        let mut f = Self::zero(lambda.size());
        f.coeffs.insert(lambda.clone(), QTRat::one());
        f
    }

    pub fn e(n: u32) -> SymFunc {
        Self::basis_element(Basis::E, &Partition::row(n))
    }

    pub fn h(n: u32) -> SymFunc {
        Self::basis_element(Basis::H, &Partition::row(n))
    }

    pub fn p(n: u32) -> SymFunc {
        Self::basis_element(Basis::P, &Partition::row(n))
    }

    pub fn s(lambda: &Partition) -> SymFunc {
        Self::basis_element(Basis::S, lambda)
    }

    /// Coordinates in basis `b`.
    pub fn coords(&self, b: Basis) -> BTreeMap<Partition, QTRat> {
        match matrix_for(self.degree, b, false) {
            None => self.coeffs.clone(),
            Some(m) => Dense::from_sym(self).map(m).into_coords(),
        }
    }

    /// `Σ c_λ b_λ` expanded in monomials.
    pub fn from_coords(degree: u32, b: Basis, coords: &BTreeMap<Partition, QTRat>) -> Result<SymFunc> {
        let f = Self::from_terms(degree, coords.iter().map(|(p, c)| (p.clone(), c.clone())))?;
        Ok(match matrix_for(degree, b, true) {
            None => f,
            Some(m) => Dense::from_sym(&f).map(m).into_sym(),
        })
    }

    pub(crate) fn p_dense(&self) -> (Vec<QTPoly>, QTPoly) {
        let d = Dense::from_sym(self).map(&tables(self.degree).m2p);
        (d.nums, d.den)
    }

    /// Monomial coordinates over all partitions of the degree, canonical order.
    pub(crate) fn m_dense(&self) -> (Vec<QTPoly>, QTPoly) {
        let d = Dense::from_sym(self);
        (d.nums, d.den)
    }

    /// The vector `v` with `⟨self, g⟩ = Σ v_λ g_λ` for `g` in monomial coordinates.
    pub(crate) fn inner_dense(&self) -> (Vec<QTPoly>, QTPoly) {
        let d = Dense::from_sym(self).map(&tables(self.degree).m_inner);
        (d.nums, d.den)
    }

    pub(crate) fn from_m_dense(n: u32, nums: Vec<QTPoly>, den: QTPoly) -> SymFunc {
        Dense { n, nums, den }.into_sym()
    }

    /// From power-sum coordinates `nums / den`, dense over partitions of `n`.
    pub(crate) fn from_p_dense(n: u32, nums: Vec<QTPoly>, den: QTPoly) -> SymFunc {
        Dense { n, nums, den }.map(&tables(n).p2m).into_sym()
    }

    pub fn scale(&self, c: &QTRat) -> SymFunc {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        SymFunc { degree: self.degree, coeffs: self.coeffs.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    pub fn scale_poly(&self, c: &QTPoly) -> SymFunc {
        self.scale(&QTRat::from_poly(c.clone()))
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTRat) -> Result<QTRat>) -> Result<SymFunc> {
        let mut out = Self::zero(self.degree);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn subs_q0(&self) -> Result<SymFunc> {
        self.map_coeffs(QTRat::subs_q0)
    }

    pub fn subs_t0(&self) -> Result<SymFunc> {
        self.map_coeffs(QTRat::subs_t0)
    }

    pub fn swap_qt(&self) -> SymFunc {
        self.map_coeffs(|c| Ok(c.swap_qt())).unwrap()
    }

    /// All coefficients are polynomials in `q, t`.
    pub fn is_polynomial(&self) -> bool {
        self.coeffs.values().all(QTRat::is_poly)
    }

    /// Polynomial coefficients, or an error naming the first offending term.
    pub fn polynomial_coeffs(&self) -> Result<BTreeMap<Partition, QTPoly>> {
        self.coeffs
            .iter()
            .map(|(p, c)| {
                c.is_polynomial()
                    .map(|x| (p.clone(), x))
                    .map_err(|_| Error::NotPolynomial(format!("coefficient of m{p} is {c}")))
            })
            .collect()
    }

    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        if self.degree == 0 {
            return other.scale(&self.coeff(&Partition::empty()));
        }
        if other.degree == 0 {
            return self.scale(&other.coeff(&Partition::empty()));
        }
        let (fa, fd) = self.p_dense();
        let (ga, gd) = other.p_dense();
        let (ta, tb, tc) = (tables(self.degree), tables(other.degree), tables(self.degree + other.degree));
        let mut nums = vec![QTPoly::zero(); tc.parts.len()];
        for (i, x) in fa.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in ga.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = tc.index[&ta.parts[i].union(&tb.parts[j])];
                nums[k] = &nums[k] + &(x * y);
            }
        }
        Self::from_p_dense(self.degree + other.degree, nums, &fd * &gd)
    }

    /// Difference witness: the first partition whose coefficients differ.
    pub fn first_difference(&self, other: &SymFunc) -> Option<(Partition, QTRat, QTRat)> {
        let keys: std::collections::BTreeSet<&Partition> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().map(|p| (p.clone(), self.coeff(p), other.coeff(p))).find(|(_, a, b)| a != b).or_else(|| {
            (self.degree != other.degree && !(self.is_zero() && other.is_zero()))
                .then(|| (Partition::empty(), QTRat::zero(), QTRat::zero()))
        })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> =
            self.coeffs.iter().map(|(p, c)| serde_json::json!({"partition": p, "coeff": c.to_json_value()})).collect();
        serde_json::json!({"degree": self.degree, "basis": "m", "terms": terms})
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<SymFunc> {
        let bad = |m: &str| Error::Json(serde_json::Error::custom(m.to_string()));
        let degree = v.get("degree").and_then(|d| d.as_u64()).ok_or_else(|| bad("missing degree"))? as u32;
        if v.get("basis").and_then(|b| b.as_str()) != Some("m") {
            return Err(bad("only the monomial basis is supported"));
        }
        let terms = v.get("terms").and_then(|t| t.as_array()).ok_or_else(|| bad("missing terms"))?;
        let mut out = Vec::new();
        for t in terms {
            let p: Partition =
                serde_json::from_value(t.get("partition").cloned().ok_or_else(|| bad("missing partition"))?)?;
            let c = QTRat::from_json_value(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
            out.push((p, c));
        }
        Self::from_terms(degree, out)
    }
}

impl<'a> Add<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding symmetric functions of different degrees");
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc { degree: self.degree, coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(p, c)| format!("({c})*m{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sum of symmetric functions of degree `n`, with one reduction per coefficient.
pub fn sum_all<'a, I: IntoIterator<Item = &'a SymFunc>>(n: u32, items: I) -> SymFunc {
    let mut acc: BTreeMap<Partition, crate::qt::RatSum> = BTreeMap::new();
    for f in items {
        if f.is_zero() {
            continue;
        }
        assert_eq!(f.degree, n, "degree mismatch in sum");
        for (p, c) in &f.coeffs {
            acc.entry(p.clone()).or_default().add(c);
        }
    }
    let mut out = SymFunc::zero(n);
    for (p, s) in acc {
        out.add_term(p, s.finish());
    }
    out
}

/// `⟨f, g⟩` with `⟨h_λ, m_μ⟩ = δ_{λμ}`.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<QTRat> {
    if f.is_zero() || g.is_zero() {
        return Ok(QTRat::zero());
    }
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch(f.degree as usize, g.degree as usize));
    }
    let df = Dense::from_sym(f);
    let dg = Dense::from_sym(g).map(&tables(g.degree).m_inner);
    let mut acc = QTPoly::zero();
    for (x, y) in df.nums.iter().zip(&dg.nums) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    QTRat::new(acc, &df.den * &dg.den)
}

/// The involution `ω`.
pub fn omega(f: &SymFunc) -> SymFunc {
    if f.degree == 0 || f.is_zero() {
        return f.clone();
    }
    Dense::from_sym(f).map(&tables(f.degree).omega).into_sym()
}

/// `h_j^⊥ f`: the coefficient of `y^j` in `f[X + y]`, which sends `m_λ` to
/// `m_{λ minus one part j}`.
pub fn skew_h(j: u32, f: &SymFunc) -> Result<SymFunc> {
    if j == 0 {
        return Err(Error::Domain("skewing index must be at least 1".into()));
    }
    if j > f.degree {
        return Err(Error::Domain(format!("cannot skew h_{j} from a degree-{} function", f.degree)));
    }
    let mut out = SymFunc::zero(f.degree - j);
    for (p, c) in &f.coeffs {
        if let Some(rest) = p.remove_part(j) {
            out.add_term(rest, c.clone());
        }
    }
    Ok(out)
}

/// `f[A]`.
pub fn eval_alphabet(f: &SymFunc, a: &VirtualAlphabet) -> QTRat {
    if f.degree == 0 {
        return f.coeff(&Partition::empty());
    }
    let (nums, den) = f.p_dense();
    let tb = tables(f.degree);
    let powers: Vec<QTPoly> = (1..=f.degree).map(|k| a.power_sum(k)).collect();
    let mut acc = QTPoly::zero();
    for (i, x) in nums.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let pl = tb.parts[i].parts().iter().fold(QTPoly::one(), |acc, &k| &acc * &powers[k as usize - 1]);
        acc = &acc + &(x * &pl);
    }
    QTRat::new(acc, den).unwrap()
}

/// `f` with `p_k` replaced by `r_k p_k`.
pub fn pleth_transform(f: &SymFunc, t: &PowerSumTransform) -> Result<SymFunc> {
    if f.degree == 0 || f.is_zero() {
        return Ok(f.clone());
    }
    let (nums, den) = f.p_dense();
    let tb = tables(f.degree);
    let mults: Vec<QTRat> = tb
        .parts
        .iter()
        .zip(&nums)
        .map(|(p, x)| if x.is_zero() { Ok(QTRat::zero()) } else { t.multiplier_for(p.parts()) })
        .collect::<Result<_>>()?;
    let (mnums, mden) = common_denominator(&mults);
    let nums = nums.iter().zip(&mnums).map(|(x, y)| x * y).collect();
    Ok(SymFunc::from_p_dense(f.degree, nums, &den * &mden))
}

/// Partitions of `n` in canonical order.
pub fn partitions(n: u32) -> Vec<Partition> {
    enumerate_partitions(n)
}

/// Checks `e_n[X+Y] = Σ e_{n-i}[X] e_i[Y]` and `h_n[XY] = Σ s_λ[X] s_λ[Y]` by
/// expanding both sides in `n + n` explicit variables.
pub fn addition_formula_check(n: u32) -> bool {
    finite::check_addition(n) && finite::check_cauchy(n)
}

/// The Hall inner product computed from `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
pub fn hall_inner_power_sums(f: &SymFunc, g: &SymFunc) -> Result<QTRat> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch(f.degree as usize, g.degree as usize));
    }
    if f.degree == 0 {
        return Ok(&f.coeff(&Partition::empty()) * &g.coeff(&Partition::empty()));
    }
    let (fa, fd) = f.p_dense();
    let (ga, gd) = g.p_dense();
    let tb = tables(f.degree);
    let mut acc = QTPoly::zero();
    for (i, (x, y)) in fa.iter().zip(&ga).enumerate() {
        acc = &acc + &(x * y).scale(&Rational::from_integer(tb.parts[i].z()));
    }
    QTRat::new(acc, &fd * &gd)
}
