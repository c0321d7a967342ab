//! Exact arithmetic over `Q`, `Q[q,t]` and `Q(q,t)`, plus q-analogues.

mod gcd;
mod poly;
pub mod qanalog;
mod rat;
pub(crate) mod zpoly;

pub use poly::QTPoly;
pub use qanalog::{choose2, m_poly, q_binomial, q_factorial, q_int, q_multinomial, q_rising, t_binomial, t_int};
pub use rat::{common_denominator, QTRat, RatSum};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Gcd of two polynomials with integer coefficients, by primitive remainder
/// sequences only. Exposed for cross-checking the default gcd.
pub fn poly_gcd_prs(a: &QTPoly, b: &QTPoly) -> QTPoly {
    let ca = zpoly::normalize(a.numer());
    let cb = zpoly::normalize(b.numer());
    QTPoly::from_z(gcd::gcd_prs(&ca, &cb))
}

/// Primitive gcd of the integer numerators of two polynomials.
pub fn poly_gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    let ca = zpoly::normalize(a.numer());
    let cb = zpoly::normalize(b.numer());
    QTPoly::from_z(zpoly::gcd(&ca, &cb))
}
