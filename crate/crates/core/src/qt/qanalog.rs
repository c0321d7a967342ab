//! q-integers, Gaussian binomials, q-multinomials and q-rising factorials.

use super::QTPoly;
use crate::error::{Error, Result};

/// `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_int(n: u32) -> QTPoly {
    QTPoly::from_terms((0..n).map(|i| (i, 0, super::Rational::from_integer(1.into()))))
}

/// `[n]_t`.
pub fn t_int(n: u32) -> QTPoly {
    q_int(n).swap_qt()
}

pub fn q_factorial(n: u32) -> QTPoly {
    (1..=n).fold(QTPoly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial coefficient; zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> QTPoly {
    if k < 0 || n < k {
        return QTPoly::zero();
    }
    let k = k.min(n - k) as u32;
    let base = (n as u32) - k;
    // each partial product is again a Gaussian binomial, so every division is exact
    let mut acc = QTPoly::one();
    for i in 1..=k {
        let top = &QTPoly::one() - &QTPoly::qt_pow(base + i, 0);
        let bottom = &QTPoly::one() - &QTPoly::qt_pow(i, 0);
        acc = (&acc * &top).div_exact(&bottom).expect("nonzero divisor").expect("Gaussian binomials are polynomials");
    }
    acc
}

/// `t`-analogue of [`q_binomial`].
pub fn t_binomial(n: i64, k: i64) -> QTPoly {
    q_binomial(n, k).swap_qt()
}

/// `[n]_q! / prod [parts_i]_q!`.
pub fn q_multinomial(n: i64, parts: &[i64]) -> Result<QTPoly> {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return Err(Error::Domain(format!("multinomial parts {parts:?} must be non-negative and sum to {n}")));
    }
    let mut acc = QTPoly::one();
    let mut left = n;
    for &p in parts {
        acc = &acc * &q_binomial(left, p);
        left -= p;
    }
    Ok(acc)
}

/// `(a; q)_s = (1 - a)(1 - q a) ... (1 - q^{s-1} a)`.
pub fn q_rising(a: &QTPoly, s: u32) -> QTPoly {
    (0..s).fold(QTPoly::one(), |acc, i| &acc * &(&QTPoly::one() - &a.shift(i, 0)))
}

/// `M = (1 - q)(1 - t)`.
pub fn m_poly() -> QTPoly {
    &(&QTPoly::one() - &QTPoly::q()) * &(&QTPoly::one() - &QTPoly::t())
}

/// `C(n, 2)` as an exponent.
pub fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> String {
        s.to_string()
    }

    #[test]
    fn q_integers() {
        assert!(q_int(0).is_zero());
        assert!(q_int(1).is_one());
        assert_eq!(q_int(3).to_string(), p("1 + q + q^2"));
    }

    #[test]
    fn binomials() {
        assert!(q_binomial(2, 3).is_zero());
        assert!(q_binomial(5, 0).is_one());
        assert!(q_binomial(3, -1).is_zero());
        assert_eq!(q_binomial(2, 1).to_string(), p("1 + q"));
        assert_eq!(q_binomial(4, 2).to_string(), p("1 + q + 2*q^2 + q^3 + q^4"));
    }

    #[test]
    fn multinomials() {
        assert_eq!(q_multinomial(2, &[1, 1]).unwrap(), q_binomial(2, 1));
        assert!(q_multinomial(4, &[4]).unwrap().is_one());
        assert_eq!(q_multinomial(3, &[2, 1]).unwrap().to_string(), p("1 + q + q^2"));
        assert!(q_multinomial(3, &[1, 1]).is_err());
    }

    #[test]
    fn rising() {
        assert!(q_rising(&QTPoly::t(), 0).is_one());
        assert_eq!(q_rising(&QTPoly::t(), 1).to_string(), p("1 - t"));
        let expect = &(&QTPoly::one() - &QTPoly::q()) * &(&QTPoly::one() - &QTPoly::qt_pow(2, 0));
        assert_eq!(q_rising(&QTPoly::q(), 2), expect);
    }
}
