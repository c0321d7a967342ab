//! `E_{n,k}` from `e_n[X (1-z)/(1-q)] = Σ_{k=1}^n (z;q)_k / (q;q)_k E_{n,k}`.
//!
//! Both sides are expanded as polynomials in `z`. The coefficient of `z^j` on
//! the right involves only `k ≥ j`, with leading term `(-1)^j q^{C(j,2)}`, so
//! the system is solved from `k = n` downwards.

use crate::error::{Error, Result};
use crate::qt::{q_rising, QTPoly, QTRat, Rational};
use crate::symfunc::{Basis, SymFunc};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// `(z; q)_k` as coefficients of `z^0, ..., z^k`.
fn z_rising(k: u32) -> Vec<QTPoly> {
    let mut acc = vec![QTPoly::one()];
    for i in 0..k {
        let mut next = acc.clone();
        next.push(QTPoly::zero());
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] = &next[j + 1] - &c.shift(i, 0);
        }
        acc = next;
    }
    acc
}

/// Coefficients of `z^j` in `e_n[X (1-z)/(1-q)]`, for `j = 0..=n`.
fn z_coefficients(n: u32) -> Result<Vec<SymFunc>> {
    let e = SymFunc::e(n).coords(Basis::P);
    let mut by_j: Vec<BTreeMap<_, QTRat>> = vec![BTreeMap::new(); n as usize + 1];
    for (lam, c) in &e {
        let mut zp = vec![0i64; n as usize + 1];
        zp[0] = 1;
        let mut den = QTPoly::one();
        for &part in lam.parts() {
            for j in (part as usize..=n as usize).rev() {
                zp[j] -= zp[j - part as usize];
            }
            den = &den * &(&QTPoly::one() - &QTPoly::qt_pow(part, 0));
        }
        let base = c.div(&QTRat::from_poly(den))?;
        for (j, &z) in zp.iter().enumerate() {
            if z != 0 {
                by_j[j].insert(lam.clone(), base.scale(&Rational::from_integer(z.into())));
            }
        }
    }
    by_j.iter().map(|m| SymFunc::from_coords(n, Basis::P, m)).collect()
}

fn solve(n: u32) -> Result<Vec<SymFunc>> {
    let g = z_coefficients(n)?;
    let rising: Vec<Vec<QTPoly>> = (0..=n).map(z_rising).collect();
    let qq: Vec<QTPoly> = (0..=n).map(|k| q_rising(&QTPoly::q(), k)).collect();
    let mut e: Vec<SymFunc> = vec![SymFunc::zero(n); n as usize + 1];
    for j in (1..=n as usize).rev() {
        let mut acc = g[j].clone();
        for k in j + 1..=n as usize {
            let c = QTRat::new(rising[k][j].clone(), qq[k].clone())?;
            acc = &acc - &e[k].scale(&c);
        }
        let c = QTRat::new(qq[j].clone(), rising[j][j].clone())?;
        e[j] = acc.scale(&c);
    }
    let check = (1..=n as usize)
        .fold(SymFunc::zero(n), |acc, k| &acc + &e[k].scale(&QTRat::new(QTPoly::one(), qq[k].clone()).unwrap()));
    assert_eq!(check, g[0], "z^0 coefficient of the E_(n,k) system is inconsistent");
    e.remove(0);
    Ok(e)
}

/// `[E_{n,1}, ..., E_{n,n}]`, computed once per `n`.
pub fn enk_all(n: u32) -> Result<Arc<Vec<SymFunc>>> {
    if n == 0 {
        return Err(Error::Domain("E_{n,k} needs n >= 1".into()));
    }
    static MEMO: OnceLock<Mutex<HashMap<u32, Arc<Vec<SymFunc>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.lock().unwrap().get(&n) {
        return Ok(v.clone());
    }
    let v = Arc::new(solve(n)?);
    memo.lock().unwrap().insert(n, v.clone());
    Ok(v)
}

pub fn enk(n: u32, k: u32) -> Result<SymFunc> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("E_({n},{k}) needs 1 <= k <= n")));
    }
    Ok(enk_all(n)?[k as usize - 1].clone())
}
