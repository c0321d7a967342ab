//! Expansion of integer-coefficient symmetric functions in explicit finite
//! variable sets, used to test alphabet identities independently of the
//! power-sum machinery.

use super::{Basis, SymFunc};
use crate::partition::{enumerate_partitions, Partition};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Polynomial in finitely many commuting variables, keyed by exponent vector.
pub type MPoly = BTreeMap<Vec<u16>, BigInt>;

pub fn var(i: usize, nvars: usize) -> MPoly {
    let mut e = vec![0; nvars];
    e[i] = 1;
    MPoly::from([(e, BigInt::from(1))])
}

pub fn mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn add_into(acc: &mut MPoly, b: &MPoly, scale: &BigInt) {
    for (e, c) in b {
        *acc.entry(e.clone()).or_default() += c * scale;
    }
    acc.retain(|_, c| !c.is_zero());
}

fn pow(a: &MPoly, k: u32, nvars: usize) -> MPoly {
    let mut acc = MPoly::from([(vec![0; nvars], BigInt::from(1))]);
    for _ in 0..k {
        acc = mul(&acc, a);
    }
    acc
}

/// `m_λ(z_1, ..., z_N)` for monomials `z_i`.
fn monomial_at(lambda: &Partition, z: &[MPoly], nvars: usize) -> MPoly {
    let mut values: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in lambda.parts() {
        *values.entry(p).or_default() += 1;
    }
    if lambda.len() > z.len() {
        return MPoly::new();
    }
    *values.entry(0).or_default() += z.len() - lambda.len();
    let mut out = MPoly::new();
    let one = BigInt::from(1);
    fn rec(
        pos: usize,
        values: &mut BTreeMap<u32, usize>,
        cur: MPoly,
        z: &[MPoly],
        nvars: usize,
        out: &mut MPoly,
        one: &BigInt,
    ) {
        if pos == z.len() {
            add_into(out, &cur, one);
            return;
        }
        let keys: Vec<u32> = values.iter().filter(|(_, &m)| m > 0).map(|(&v, _)| v).collect();
        for v in keys {
            *values.get_mut(&v).unwrap() -= 1;
            let next = if v == 0 { cur.clone() } else { mul(&cur, &pow(&z[pos], v, nvars)) };
            rec(pos + 1, values, next, z, nvars, out, one);
            *values.get_mut(&v).unwrap() += 1;
        }
    }
    let start = MPoly::from([(vec![0; nvars], BigInt::from(1))]);
    rec(0, &mut values, start, z, nvars, &mut out, &one);
    out
}

/// `f(z_1, ..., z_N)` for `f` with integer coefficients.
pub fn evaluate(f: &SymFunc, z: &[MPoly], nvars: usize) -> MPoly {
    let mut out = MPoly::new();
    for (p, c) in f.terms() {
        let c = c.num().coeff(0, 0);
        assert!(c.is_integer(), "finite expansion needs integer coefficients");
        add_into(&mut out, &monomial_at(p, z, nvars), &c.to_integer());
    }
    out
}

fn vars(n: usize) -> (Vec<MPoly>, Vec<MPoly>) {
    let x = (0..n).map(|i| var(i, 2 * n)).collect();
    let y = (0..n).map(|i| var(n + i, 2 * n)).collect();
    (x, y)
}

/// `e_n[X+Y] = Σ_i e_{n-i}[X] e_i[Y]` in `n + n` variables.
pub fn check_addition(n: u32) -> bool {
    let nv = 2 * n as usize;
    let (x, y) = vars(n as usize);
    let both: Vec<MPoly> = x.iter().chain(&y).cloned().collect();
    let lhs = evaluate(&SymFunc::e(n), &both, nv);
    let mut rhs = MPoly::new();
    for i in 0..=n {
        let a = evaluate(&SymFunc::e(n - i), &x, nv);
        let b = evaluate(&SymFunc::e(i), &y, nv);
        add_into(&mut rhs, &mul(&a, &b), &BigInt::from(1));
    }
    lhs == rhs
}

/// Both Cauchy identities `h_n[XY] = Σ s_λ[X] s_λ[Y] = Σ h_λ[X] m_λ[Y]` in `n + n` variables.
pub fn check_cauchy(n: u32) -> bool {
    let nv = 2 * n as usize;
    let (x, y) = vars(n as usize);
    let prod: Vec<MPoly> = x.iter().flat_map(|a| y.iter().map(move |b| mul(a, b))).collect();
    let lhs = evaluate(&SymFunc::h(n), &prod, nv);
    let mut schur = MPoly::new();
    let mut hm = MPoly::new();
    for lam in enumerate_partitions(n) {
        let s = SymFunc::s(&lam);
        add_into(&mut schur, &mul(&evaluate(&s, &x, nv), &evaluate(&s, &y, nv)), &BigInt::from(1));
        let h = SymFunc::basis_element(Basis::H, &lam);
        let m = SymFunc::monomial(&lam);
        add_into(&mut hm, &mul(&evaluate(&h, &x, nv), &evaluate(&m, &y, nv)), &BigInt::from(1));
    }
    lhs == schur && lhs == hm
}
