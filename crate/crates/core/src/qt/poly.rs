use super::zpoly::{self, ZPoly};
use super::Rational;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `q` and `t` with rational coefficients.
///
/// Stored as integer numerators over one positive common denominator, reduced so
/// that the representation (and hence `==` and `Hash`) is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QTPoly {
    terms: ZPoly,
    den: BigInt,
}

impl Default for QTPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl QTPoly {
    pub(crate) fn from_parts(terms: ZPoly, den: BigInt) -> Self {
        let mut p = QTPoly { terms, den };
        p.reduce();
        p
    }

    pub(crate) fn from_z(terms: ZPoly) -> Self {
        QTPoly { terms, den: BigInt::one() }
    }

    fn reduce(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            self.terms = zpoly::neg(&self.terms);
        }
        if self.terms.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let g = zpoly::content(&self.terms).gcd(&self.den);
        if !g.is_one() {
            self.terms = zpoly::div_scalar(&self.terms, &g);
            self.den = &self.den / &g;
        }
    }

    pub(crate) fn numer(&self) -> &ZPoly {
        &self.terms
    }

    pub(crate) fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn zero() -> Self {
        QTPoly { terms: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_z(zpoly::constant(BigInt::from(c)))
    }

    pub fn constant(c: Rational) -> Self {
        let (n, d) = c.into_raw();
        Self::from_parts(zpoly::constant(n), d)
    }

    pub fn monomial(c: Rational, qe: u32, te: u32) -> Self {
        let (n, d) = c.into_raw();
        let terms = if n.is_zero() { Vec::new() } else { vec![((qe, te), n)] };
        Self::from_parts(terms, d)
    }

    pub fn q() -> Self {
        Self::qt_pow(1, 0)
    }

    pub fn t() -> Self {
        Self::qt_pow(0, 1)
    }

    /// The monomial `q^a t^b`.
    pub fn qt_pow(a: u32, b: u32) -> Self {
        Self::from_z(vec![((a, b), BigInt::one())])
    }

    /// Builds a polynomial from `(q-exp, t-exp, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rational)>>(terms: I) -> Self {
        let mut acc: std::collections::BTreeMap<(u32, u32), Rational> = Default::default();
        for (a, b, c) in terms {
            *acc.entry((a, b)).or_insert_with(Rational::zero) += c;
        }
        let den = acc.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let z =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e, c.numer() * (&den / c.denom()))).collect();
        Self::from_parts(z, den)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && zpoly::is_one(&self.terms)
    }

    pub fn is_constant(&self) -> bool {
        zpoly::is_constant(&self.terms)
    }

    /// Coefficient of `q^a t^b`.
    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        match self.terms.binary_search_by(|(e, _)| e.cmp(&(a, b))) {
            Ok(i) => Rational::new(self.terms[i].1.clone(), self.den.clone()),
            Err(_) => Rational::zero(),
        }
    }

    /// Terms in ascending lex order of `(q-exp, t-exp)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, Rational)> + '_ {
        self.terms.iter().map(move |((a, b), c)| (*a, *b, Rational::new(c.clone(), self.den.clone())))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_q(&self) -> u32 {
        zpoly::max_exps(&self.terms).0
    }

    pub fn degree_t(&self) -> u32 {
        zpoly::max_exps(&self.terms).1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_parts(zpoly::scale(&self.terms, c.numer()), &self.den * c.denom())
    }

    pub fn pow(&self, k: u32) -> Self {
        let den = num_traits::pow(self.den.clone(), k as usize);
        QTPoly { terms: zpoly::pow(&self.terms, k), den }
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        QTPoly { terms: zpoly::shift(&self.terms, (a, b)), den: self.den.clone() }
    }

    /// Substitutes `q -> q^k`, `t -> t^k`.
    pub fn pow_vars(&self, k: u32) -> Self {
        QTPoly {
            terms: self.terms.iter().map(|((a, b), c)| ((a * k, b * k), c.clone())).collect(),
            den: self.den.clone(),
        }
    }

    pub fn subs_q0(&self) -> Self {
        Self::from_parts(zpoly::subs_q0(&self.terms), self.den.clone())
    }

    pub fn subs_t0(&self) -> Self {
        Self::from_parts(zpoly::subs_t0(&self.terms), self.den.clone())
    }

    pub fn swap_qt(&self) -> Self {
        QTPoly { terms: zpoly::swap(&self.terms), den: self.den.clone() }
    }

    /// Value at `q = t = 1`.
    pub fn eval_one(&self) -> Rational {
        let s: BigInt = self.terms.iter().map(|(_, c)| c).sum();
        Rational::new(s, self.den.clone())
    }

    /// Value at integer points `q = x`, `t = y`.
    pub fn eval_int(&self, x: i64, y: i64) -> Rational {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        let s: BigInt = self
            .terms
            .iter()
            .map(|((a, b), c)| c * num_traits::pow(x.clone(), *a as usize) * num_traits::pow(y.clone(), *b as usize))
            .sum();
        Rational::new(s, self.den.clone())
    }

    /// Exact quotient, if `other` divides `self` in `Q[q,t]`.
    pub fn div_exact(&self, other: &QTPoly) -> Result<Option<QTPoly>> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = zpoly::content(&other.terms);
        let prim = zpoly::div_scalar(&other.terms, &c);
        Ok(zpoly::div_exact(&self.terms, &prim)
            .map(|quo| Self::from_parts(quo, &self.den * &c).scale(&Rational::from(other.den.clone()))))
    }

    /// Whether every coefficient is a non-negative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.den.is_one() && self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(self.terms().map(|(a, b, c)| serde_json::json!([a, b, c.to_string()])).collect())
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Json(serde_json::Error::custom("malformed polynomial term"));
        let arr = v.as_array().ok_or_else(bad)?;
        let mut out = Vec::new();
        for term in arr {
            let t = term.as_array().ok_or_else(bad)?;
            if t.len() != 3 {
                return Err(bad());
            }
            let a = t[0].as_u64().ok_or_else(bad)? as u32;
            let b = t[1].as_u64().ok_or_else(bad)? as u32;
            let c: Rational = t[2].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            out.push((a, b, c));
        }
        Ok(Self::from_terms(out))
    }
}

impl From<i64> for QTPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<Rational> for QTPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

fn common(a: &QTPoly, b: &QTPoly) -> (ZPoly, ZPoly, BigInt) {
    if a.den == b.den {
        return (a.terms.clone(), b.terms.clone(), a.den.clone());
    }
    let l = a.den.lcm(&b.den);
    let sa = &l / &a.den;
    let sb = &l / &b.den;
    (zpoly::scale(&a.terms, &sa), zpoly::scale(&b.terms, &sb), l)
}

impl<'a> Add<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        if self.den.is_one() && rhs.den.is_one() {
            return QTPoly::from_z(zpoly::add(&self.terms, &rhs.terms));
        }
        let (x, y, d) = common(self, rhs);
        QTPoly::from_parts(zpoly::add(&x, &y), d)
    }
}

impl<'a> Sub<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        if self.den.is_one() && rhs.den.is_one() {
            return QTPoly::from_z(zpoly::sub(&self.terms, &rhs.terms));
        }
        let (x, y, d) = common(self, rhs);
        QTPoly::from_parts(zpoly::sub(&x, &y), d)
    }
}

impl<'a> Mul<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let terms = zpoly::mul(&self.terms, &rhs.terms);
        if self.den.is_one() && rhs.den.is_one() {
            return QTPoly::from_z(terms);
        }
        QTPoly::from_parts(terms, &self.den * &rhs.den)
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly { terms: zpoly::neg(&self.terms), den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;
owned_ops!(QTPoly);

fn write_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("t".to_string()),
        _ => parts.push(format!("t^{b}")),
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, b, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if a == 0 && b == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, a, b)?;
            }
        }
        Ok(())
    }
}

impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QTPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        QTPoly::from_json_value(&v).map_err(D::Error::custom)
    }
}
