use super::poly::{owned_ops, QTPoly};
use super::zpoly::{self, ZPoly};
use super::Rational;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rational function in `q` and `t` over `Q`, kept in lowest terms.
///
/// The denominator is a primitive integer polynomial whose lex-least term is
/// positive; all scalar factors live in the numerator. The form is canonical, so
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QTRat {
    num: QTPoly,
    den: ZPoly,
}

impl Default for QTRat {
    fn default() -> Self {
        Self::zero()
    }
}

fn one_z() -> ZPoly {
    zpoly::constant(BigInt::one())
}

/// Lowest terms for the integer fraction `n / d`.
fn reduce(n: ZPoly, d: ZPoly) -> QTRat {
    debug_assert!(!d.is_empty());
    if n.is_empty() {
        return QTRat::zero();
    }
    let mut c = zpoly::content(&d);
    if d[0].1.is_negative() {
        c = -c;
    }
    if zpoly::is_constant(&d) {
        return QTRat { num: QTPoly::from_parts(n, c), den: one_z() };
    }
    let d = zpoly::div_scalar(&d, &c);
    if let Some(quo) = zpoly::div_exact(&n, &d) {
        return QTRat { num: QTPoly::from_parts(quo, c), den: one_z() };
    }
    let g = zpoly::gcd(&n, &d);
    if zpoly::is_one(&g) {
        return QTRat { num: QTPoly::from_parts(n, c), den: d };
    }
    let n = zpoly::div_exact(&n, &g).expect("gcd divides numerator");
    let d = zpoly::div_exact(&d, &g).expect("gcd divides denominator");
    QTRat { num: QTPoly::from_parts(n, c), den: d }
}

impl QTRat {
    pub fn zero() -> Self {
        QTRat { num: QTPoly::zero(), den: one_z() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        QTRat { num: QTPoly::from_int(c), den: one_z() }
    }

    pub fn from_rational(c: Rational) -> Self {
        QTRat { num: QTPoly::constant(c), den: one_z() }
    }

    pub fn from_poly(p: QTPoly) -> Self {
        QTRat { num: p, den: one_z() }
    }

    pub fn q() -> Self {
        Self::from_poly(QTPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QTPoly::t())
    }

    /// `num / den` in lowest terms.
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let n = zpoly::scale(num.numer(), den.denom());
        let d = zpoly::scale(den.numer(), num.denom());
        Ok(reduce(n, d))
    }

    pub fn num(&self) -> &QTPoly {
        &self.num
    }

    pub fn den(&self) -> QTPoly {
        QTPoly::from_z(self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && zpoly::is_one(&self.den)
    }

    pub fn is_poly(&self) -> bool {
        zpoly::is_one(&self.den)
    }

    /// The polynomial value, or an error if the denominator does not cancel.
    pub fn is_polynomial(&self) -> Result<QTPoly> {
        if self.is_poly() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    fn int_num(&self) -> (ZPoly, BigInt) {
        (self.num.numer().clone(), self.num.denom().clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (s, c) = self.int_num();
        let mut k = zpoly::content(&s);
        if s[0].1.is_negative() {
            k = -k;
        }
        Ok(QTRat { num: QTPoly::from_parts(zpoly::scale(&self.den, &c), k.clone()), den: zpoly::div_scalar(&s, &k) })
    }

    pub fn div(&self, other: &QTRat) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QTRat { num: self.num.scale(c), den: if c.is_zero() { one_z() } else { self.den.clone() } }
    }

    pub fn mul_poly(&self, p: &QTPoly) -> Self {
        self * &QTRat::from_poly(p.clone())
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        Ok(QTRat { num: self.num.pow(k as u32), den: zpoly::pow(&self.den, k as u32) })
    }

    fn apply(&self, f: impl Fn(&QTPoly) -> QTPoly) -> Result<Self> {
        let den = f(&self.den());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QTRat::new(f(&self.num), den)
    }

    pub fn subs_q0(&self) -> Result<Self> {
        self.apply(QTPoly::subs_q0)
    }

    pub fn subs_t0(&self) -> Result<Self> {
        self.apply(QTPoly::subs_t0)
    }

    pub fn swap_qt(&self) -> Self {
        let mut den = zpoly::swap(&self.den);
        let mut num = self.num.swap_qt();
        if den[0].1.is_negative() {
            den = zpoly::neg(&den);
            num = -num;
        }
        QTRat { num, den }
    }

    /// Sum with a running common denominator, reducing once at the end.
    pub fn sum_all<'a, I: IntoIterator<Item = &'a QTRat>>(items: I) -> QTRat {
        let mut acc = RatSum::new();
        for x in items {
            acc.add(x);
        }
        acc.finish()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({"num": self.num.to_json_value(), "den": self.den().to_json_value()})
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Json(serde_json::Error::custom("expected {num, den}"));
        let num = QTPoly::from_json_value(v.get("num").ok_or_else(bad)?)?;
        let den = QTPoly::from_json_value(v.get("den").ok_or_else(bad)?)?;
        QTRat::new(num, den)
    }
}

impl From<QTPoly> for QTRat {
    fn from(p: QTPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QTRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<Rational> for QTRat {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl<'a> Add<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn add(self, rhs: &QTRat) -> QTRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let s = &self.num + &rhs.num;
            if zpoly::is_one(&self.den) {
                return QTRat::from_poly(s);
            }
            let c = s.denom().clone();
            return reduce(zpoly::scale(s.numer(), &BigInt::one()), zpoly::scale(&self.den, &c));
        }
        if zpoly::is_one(&self.den) {
            return QTRat { num: &(&self.num * &rhs.den()) + &rhs.num, den: rhs.den.clone() };
        }
        if zpoly::is_one(&rhs.den) {
            return QTRat { num: &self.num + &(&rhs.num * &self.den()), den: self.den.clone() };
        }
        let g = zpoly::gcd(&self.den, &rhs.den);
        if zpoly::is_one(&g) {
            let num = &(&self.num * &rhs.den()) + &(&rhs.num * &self.den());
            if num.is_zero() {
                return QTRat::zero();
            }
            return QTRat { num, den: zpoly::mul(&self.den, &rhs.den) };
        }
        let d1 = zpoly::div_exact(&self.den, &g).unwrap();
        let d2 = zpoly::div_exact(&rhs.den, &g).unwrap();
        let num = &(&self.num * &QTPoly::from_z(d2.clone())) + &(&rhs.num * &QTPoly::from_z(d1.clone()));
        if num.is_zero() {
            return QTRat::zero();
        }
        let den = zpoly::mul(&zpoly::mul(&g, &d1), &d2);
        let h = zpoly::gcd(num.numer(), &g);
        if zpoly::is_one(&h) {
            return QTRat { num, den };
        }
        let nn = zpoly::div_exact(num.numer(), &h).unwrap();
        QTRat { num: QTPoly::from_parts(nn, num.denom().clone()), den: zpoly::div_exact(&den, &h).unwrap() }
    }
}

impl<'a> Sub<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn sub(self, rhs: &QTRat) -> QTRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn mul(self, rhs: &QTRat) -> QTRat {
        if self.is_zero() || rhs.is_zero() {
            return QTRat::zero();
        }
        let (p1, p2) = (zpoly::is_one(&self.den), zpoly::is_one(&rhs.den));
        if p1 && p2 {
            return QTRat::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel: gcd(n1, d2) and gcd(n2, d1)
        let (mut n1, c1) = self.int_num();
        let (mut n2, c2) = rhs.int_num();
        let (mut d1, mut d2) = (self.den.clone(), rhs.den.clone());
        if !p2 && !zpoly::is_constant(&n1) {
            let g = zpoly::gcd(&n1, &d2);
            if !zpoly::is_one(&g) {
                n1 = zpoly::div_exact(&n1, &g).unwrap();
                d2 = zpoly::div_exact(&d2, &g).unwrap();
            }
        }
        if !p1 && !zpoly::is_constant(&n2) {
            let g = zpoly::gcd(&n2, &d1);
            if !zpoly::is_one(&g) {
                n2 = zpoly::div_exact(&n2, &g).unwrap();
                d1 = zpoly::div_exact(&d1, &g).unwrap();
            }
        }
        QTRat { num: QTPoly::from_parts(zpoly::mul(&n1, &n2), c1 * c2), den: zpoly::mul(&d1, &d2) }
    }
}

impl<'a> Div<&'a QTRat> for &'a QTRat {
    type Output = QTRat;
    fn div(self, rhs: &QTRat) -> QTRat {
        QTRat::div(self, rhs).expect("division by zero")
    }
}

impl Neg for &QTRat {
    type Output = QTRat;
    fn neg(self) -> QTRat {
        QTRat { num: -&self.num, den: self.den.clone() }
    }
}

owned_ops!(QTRat);

impl Div for QTRat {
    type Output = QTRat;
    fn div(self, rhs: QTRat) -> QTRat {
        &self / &rhs
    }
}

impl std::iter::Sum for QTRat {
    fn sum<I: Iterator<Item = QTRat>>(iter: I) -> QTRat {
        let items: Vec<QTRat> = iter.collect();
        QTRat::sum_all(items.iter())
    }
}

impl fmt::Display for QTRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den())
        }
    }
}

impl Serialize for QTRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QTRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        QTRat::from_json_value(&v).map_err(D::Error::custom)
    }
}

/// Accumulator for sums of rational functions.
///
/// Terms are brought to a running common denominator without reducing each
/// partial sum; the single gcd happens in [`RatSum::finish`].
#[derive(Clone, Debug)]
pub struct RatSum {
    acc: QTPoly,
    l: ZPoly,
}

impl Default for RatSum {
    fn default() -> Self {
        Self::new()
    }
}

impl RatSum {
    pub fn new() -> Self {
        RatSum { acc: QTPoly::zero(), l: one_z() }
    }

    /// Adds `num / den` where `den` is a normalized denominator.
    fn push(&mut self, num: QTPoly, den: &ZPoly) {
        if num.is_zero() {
            return;
        }
        if *den == self.l {
            self.acc = &self.acc + &num;
        } else if zpoly::is_one(den) {
            self.acc = &self.acc + &(&num * &QTPoly::from_z(self.l.clone()));
        } else if let Some(e) = zpoly::div_exact(&self.l, den) {
            self.acc = &self.acc + &(&num * &QTPoly::from_z(e));
        } else {
            let g = zpoly::gcd(&self.l, den);
            let a = zpoly::div_exact(den, &g).unwrap();
            let b = zpoly::div_exact(&self.l, &g).unwrap();
            self.acc = &(&self.acc * &QTPoly::from_z(a.clone())) + &(&num * &QTPoly::from_z(b));
            self.l = zpoly::mul(&self.l, &a);
        }
    }

    pub fn add(&mut self, x: &QTRat) {
        self.push(x.num.clone(), &x.den);
    }

    /// Adds `x * p` without reducing the product.
    pub fn add_mul_poly(&mut self, x: &QTRat, p: &QTPoly) {
        self.push(&x.num * p, &x.den);
    }

    /// Adds `x * c` for a rational scalar `c`.
    pub fn add_scaled(&mut self, x: &QTRat, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.push(x.num.scale(c), &x.den);
    }

    pub fn add_poly(&mut self, p: &QTPoly) {
        self.push(p.clone(), &one_z());
    }

    pub fn finish(self) -> QTRat {
        if zpoly::is_one(&self.l) {
            return QTRat::from_poly(self.acc);
        }
        QTRat::new(self.acc, QTPoly::from_z(self.l)).expect("nonzero denominator")
    }
}

/// Brings `xs` over one denominator: returns numerators `n_i` and `L` with
/// `xs[i] = n_i / L`.
pub fn common_denominator(xs: &[QTRat]) -> (Vec<QTPoly>, QTPoly) {
    let mut l = one_z();
    for x in xs {
        if x.den == l || zpoly::is_one(&x.den) || zpoly::div_exact(&l, &x.den).is_some() {
            continue;
        }
        let g = zpoly::gcd(&l, &x.den);
        l = zpoly::mul(&l, &zpoly::div_exact(&x.den, &g).unwrap());
    }
    let nums =
        xs.iter()
            .map(|x| {
                if x.den == l {
                    x.num.clone()
                } else {
                    &x.num * &QTPoly::from_z(zpoly::div_exact(&l, &x.den).unwrap())
                }
            })
            .collect();
    (nums, QTPoly::from_z(l))
}
