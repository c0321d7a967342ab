//! Virtual alphabets and power-sum multipliers: the two forms of plethysm used
//! throughout.

use crate::error::{Error, Result};
use crate::qt::{QTPoly, QTRat};
use num_traits::ToPrimitive;
use std::fmt;
use std::sync::Arc;

/// A signed multiset of monomials `q^a t^b`, stored as the polynomial `Σ ± q^a t^b`.
///
/// Evaluation follows `p_k[A] = A(q^k, t^k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualAlphabet {
    poly: QTPoly,
}

impl VirtualAlphabet {
    pub fn empty() -> Self {
        VirtualAlphabet { poly: QTPoly::zero() }
    }

    /// Requires integer coefficients; each coefficient is a signed multiplicity.
    pub fn from_poly(p: &QTPoly) -> Result<Self> {
        if p.terms().any(|(_, _, c)| !c.is_integer()) {
            return Err(Error::Domain(format!("alphabet {p} has non-integer multiplicities")));
        }
        Ok(VirtualAlphabet { poly: p.clone() })
    }

    pub fn from_monomials(monos: &[(i8, u32, u32)]) -> Self {
        let p = QTPoly::from_terms(
            monos.iter().map(|&(s, a, b)| (a, b, crate::qt::Rational::from_integer((s as i64).into()))),
        );
        VirtualAlphabet { poly: p }
    }

    /// Canonical list of `(sign, q-exp, t-exp)`, repeated by multiplicity.
    pub fn monomials(&self) -> Vec<(i8, u32, u32)> {
        let mut out = Vec::new();
        for (a, b, c) in self.poly.terms() {
            let k = c.to_integer().to_i64().unwrap();
            let s = if k < 0 { -1 } else { 1 };
            for _ in 0..k.abs() {
                out.push((s, a, b));
            }
        }
        out
    }

    pub fn as_poly(&self) -> &QTPoly {
        &self.poly
    }

    /// `p_k[A]`.
    pub fn power_sum(&self, k: u32) -> QTPoly {
        self.poly.pow_vars(k)
    }
}

impl fmt::Display for VirtualAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

type Rule = Arc<dyn Fn(u32) -> Option<QTRat> + Send + Sync>;

/// A plethystic substitution `p_k -> r_k p_k`.
#[derive(Clone)]
pub struct PowerSumTransform {
    rule: Rule,
}

impl fmt::Debug for PowerSumTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> =
            (1..=3).map(|k| self.multiplier(k).map(|r| r.to_string()).unwrap_or_else(|_| "?".into())).collect();
        write!(f, "PowerSumTransform[{}, ...]", shown.join(", "))
    }
}

fn one_minus(a: u32, b: u32) -> QTPoly {
    &QTPoly::one() - &QTPoly::qt_pow(a, b)
}

impl PowerSumTransform {
    pub fn new(rule: impl Fn(u32) -> Option<QTRat> + Send + Sync + 'static) -> Self {
        PowerSumTransform { rule: Arc::new(rule) }
    }

    pub fn multiplier(&self, k: u32) -> Result<QTRat> {
        (self.rule)(k).ok_or_else(|| Error::Domain(format!("power-sum multiplier r_{k} is undefined")))
    }

    pub fn identity() -> Self {
        Self::new(|_| Some(QTRat::one()))
    }

    /// `f -> f[X A]`.
    pub fn alphabet(a: VirtualAlphabet) -> Self {
        Self::new(move |k| Some(QTRat::from_poly(a.power_sum(k))))
    }

    /// `f -> f[X / M]` with `M = (1-q)(1-t)`.
    pub fn x_over_m() -> Self {
        Self::new(|k| QTRat::new(QTPoly::one(), &one_minus(k, 0) * &one_minus(0, k)).ok())
    }

    /// `f -> f[M X]`.
    pub fn times_m() -> Self {
        Self::new(|k| Some(QTRat::from_poly(&one_minus(k, 0) * &one_minus(0, k))))
    }

    /// `f -> f[X / (1-q)]`.
    pub fn x_over_one_minus_q() -> Self {
        Self::new(|k| QTRat::new(QTPoly::one(), one_minus(k, 0)).ok())
    }

    /// `f -> f[X (1-q^m)/(1-q)]`, i.e. `f[X [m]_q]`.
    pub fn times_q_int(m: u32) -> Self {
        Self::alphabet(VirtualAlphabet::from_poly(&crate::qt::q_int(m)).unwrap())
    }

    /// `f -> f[-εX]`, which is `ω f`.
    pub fn minus_eps() -> Self {
        Self::new(|k| Some(QTRat::from_int(if k % 2 == 1 { 1 } else { -1 })))
    }

    /// `f -> f[εX]`.
    pub fn eps() -> Self {
        Self::new(|k| Some(QTRat::from_int(if k % 2 == 0 { 1 } else { -1 })))
    }

    /// Apply `self` then `other`; multipliers multiply.
    pub fn then(&self, other: &PowerSumTransform) -> Self {
        let (a, b) = (self.rule.clone(), other.rule.clone());
        Self::new(move |k| Some(&a(k)? * &b(k)?))
    }

    /// Multiplier for `p_λ`: the product of `r_{λ_i}`.
    pub(crate) fn multiplier_for(&self, parts: &[u32]) -> Result<QTRat> {
        let mut acc = QTRat::one();
        for &k in parts {
            acc = &acc * &self.multiplier(k)?;
        }
        Ok(acc)
    }
}

impl Default for PowerSumTransform {
    fn default() -> Self {
        Self::identity()
    }
}
