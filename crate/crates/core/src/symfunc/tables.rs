//! Per-degree transition matrices between the monomial basis and the
//! e, h, p, s bases. Each degree is computed once and shared for the life of
//! the process.

use crate::partition::{enumerate_partitions, Partition};
use crate::qt::Rational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub(crate) type QMat = Vec<Vec<Rational>>;

pub(crate) struct Tables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// Row `λ`: monomial coefficients of `p_λ`.
    pub p2m: QMat,
    pub m2p: QMat,
    pub h2m: QMat,
    /// `⟨m_λ, m_μ⟩`, the inverse of `h2m`.
    pub m_inner: QMat,
    pub e2m: QMat,
    pub m2e: QMat,
    pub s2m: QMat,
    pub m2s: QMat,
    /// `ω` acting on monomial coordinates.
    pub omega: QMat,
}

static CACHE: OnceLock<Mutex<HashMap<u32, &'static OnceLock<Tables>>>> = OnceLock::new();

pub(crate) fn tables(n: u32) -> &'static Tables {
    let cell = {
        let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
        *map.entry(n).or_insert_with(|| Box::leak(Box::new(OnceLock::new())))
    };
    cell.get_or_init(|| Tables::build(n))
}

fn count_assignments(parts: &[u32], bins: &mut [u32]) -> u64 {
    let Some((&first, rest)) = parts.split_first() else {
        return bins.iter().all(|&b| b == 0) as u64;
    };
    let mut total = 0;
    for j in 0..bins.len() {
        if bins[j] >= first {
            bins[j] -= first;
            total += count_assignments(rest, bins);
            bins[j] += first;
        }
    }
    total
}

/// Number of matrices with row sums `rows`, column sums `cols`, entries in `0..=cap`.
fn count_matrices(rows: &[u32], cols: &mut [u32], cap: u32) -> u64 {
    let Some((&first, rest)) = rows.split_first() else {
        return cols.iter().all(|&c| c == 0) as u64;
    };
    fn fill(left: u32, j: usize, rest: &[u32], cols: &mut [u32], cap: u32) -> u64 {
        if j == cols.len() {
            return if left == 0 { count_matrices(rest, cols, cap) } else { 0 };
        }
        let mut total = 0;
        for v in 0..=left.min(cols[j]).min(cap) {
            cols[j] -= v;
            total += fill(left - v, j + 1, rest, cols, cap);
            cols[j] += v;
        }
        total
    }
    fill(first, 0, rest, cols, cap)
}

/// Semistandard tableaux of shape `shape` and content `content`.
pub(crate) fn kostka(shape: &[u32], content: &[u32]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return shape.iter().all(|&p| p == 0) as u64;
    };
    // remove a horizontal strip of size `last`
    fn strips(shape: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, rest: &[u32]) -> u64 {
        if i == shape.len() {
            return if left == 0 { kostka(cur, rest) } else { 0 };
        }
        let below = shape.get(i + 1).copied().unwrap_or(0);
        let mut total = 0;
        for take in 0..=(shape[i] - below).min(left) {
            cur.push(shape[i] - take);
            total += strips(shape, i + 1, left - take, cur, rest);
            cur.pop();
        }
        total
    }
    let mut cur = Vec::new();
    strips(shape, 0, last, &mut cur, rest)
}

pub(crate) fn invert(m: &QMat) -> QMat {
    let n = m.len();
    let mut a: QMat = m.clone();
    let mut inv: QMat =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible transition matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

pub(crate) fn matmul(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

fn int_matrix(parts: &[Partition], f: impl Fn(&Partition, &Partition) -> u64) -> QMat {
    parts.iter().map(|l| parts.iter().map(|m| Rational::from_integer(f(l, m).into())).collect()).collect()
}

impl Tables {
    fn build(n: u32) -> Tables {
        let parts = enumerate_partitions(n);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let p2m = int_matrix(&parts, |l, m| count_assignments(l.parts(), &mut m.parts().to_vec()));
        let h2m = int_matrix(&parts, |l, m| count_matrices(l.parts(), &mut m.parts().to_vec(), u32::MAX));
        let e2m = int_matrix(&parts, |l, m| count_matrices(l.parts(), &mut m.parts().to_vec(), 1));
        let s2m = int_matrix(&parts, |l, m| kostka(l.parts(), m.parts()));
        let m2p = invert(&p2m);
        let sign: QMat = parts
            .iter()
            .enumerate()
            .map(|(i, l)| {
                (0..parts.len())
                    .map(|j| {
                        if i != j {
                            Rational::zero()
                        } else if (n as usize - l.len()).is_multiple_of(2) {
                            Rational::one()
                        } else {
                            -Rational::one()
                        }
                    })
                    .collect()
            })
            .collect();
        let omega = matmul(&matmul(&m2p, &sign), &p2m);
        Tables {
            index,
            m_inner: invert(&h2m),
            m2e: invert(&e2m),
            m2s: invert(&s2m),
            parts,
            p2m,
            m2p,
            h2m,
            e2m,
            s2m,
            omega,
        }
    }
}
