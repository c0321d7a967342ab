//! Integer partitions, cells and the partition-indexed scalars `B`, `T`, `Π`, `w`.

use crate::error::{Error, Result};
use crate::qt::{QTPoly, Rational};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A weakly decreasing list of positive parts.
///
/// Ordered by size first, then reverse-lexicographically, so partitions of `n`
/// iterate as `(n), (n-1,1), ..., (1^n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// A cell of a Ferrers diagram: `col` is the co-arm, `row` the co-leg.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    pub col: u32,
    pub row: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CellStats {
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not a weakly decreasing list of positive parts")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)` (empty for `n = 0`).
    pub fn row(n: u32) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let w = self.part(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count() as u32).collect())
    }

    pub fn is_hook(&self) -> bool {
        self.part(1) <= 1
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| Cell { col: c, row: r as u32 }))
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.col < self.part(c.row as usize)
    }

    pub fn cell_stats(&self, c: Cell) -> Result<CellStats> {
        if !self.contains_cell(c) {
            return Err(Error::Domain(format!("cell {c:?} is outside {self}")));
        }
        let height = self.0.iter().filter(|&&p| p > c.col).count() as u32;
        Ok(CellStats {
            arm: self.part(c.row as usize) - c.col - 1,
            leg: height - c.row - 1,
            coarm: c.col,
            coleg: c.row,
        })
    }

    fn stats(&self) -> impl Iterator<Item = CellStats> + '_ {
        self.cells().map(|c| self.cell_stats(c).unwrap())
    }

    /// `B_μ = Σ q^{a'} t^{l'}`.
    pub fn b(&self) -> QTPoly {
        QTPoly::from_terms(self.cells().map(|c| (c.col, c.row, Rational::one())))
    }

    /// `T_μ = Π q^{a'} t^{l'}`.
    pub fn t(&self) -> QTPoly {
        let (a, b) = self.cells().fold((0, 0), |(a, b), c| (a + c.col, b + c.row));
        QTPoly::qt_pow(a, b)
    }

    /// `Π_μ = Π (1 - q^{a'} t^{l'})` over the cells other than the corner.
    pub fn pi(&self) -> QTPoly {
        self.cells()
            .filter(|c| c.col != 0 || c.row != 0)
            .fold(QTPoly::one(), |acc, c| &acc * &(&QTPoly::one() - &QTPoly::qt_pow(c.col, c.row)))
    }

    /// `w_μ = Π (q^{a} - t^{l+1})(t^{l} - q^{a+1})`.
    pub fn w(&self) -> QTPoly {
        self.stats().fold(QTPoly::one(), |acc, s| {
            let x = &QTPoly::qt_pow(s.arm, 0) - &QTPoly::qt_pow(0, s.leg + 1);
            let y = &QTPoly::qt_pow(0, s.leg) - &QTPoly::qt_pow(s.arm + 1, 0);
            &(&acc * &x) * &y
        })
    }

    /// `n(μ) = Σ μ_i (i - 1)`.
    pub fn n_stat(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &p)| p as i64 * i as i64).sum()
    }

    /// `m_i(μ)`, indexed from `i = 1` (entry 0 is unused and zero).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.part(0) as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `g(μ) = -2 n(μ) - |μ| + Σ_i C(m_i + 1, 2)`.
    pub fn g_stat(&self) -> i64 {
        let s: i64 = self.multiplicities().iter().skip(1).map(|&m| (m as i64 + 1) * m as i64 / 2).sum();
        -2 * self.n_stat() - self.size() as i64 + s
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> num_bigint::BigInt {
        let mut acc = num_bigint::BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                acc *= i as u64 * k as u64;
            }
        }
        acc
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::from_unsorted(v)
    }

    /// Removes one part equal to `j`, if present.
    pub fn remove_part(&self, j: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == j)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n` in canonical order `(n), ..., (1^n)`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `(n(μ), g(μ), m(μ))`.
pub fn appendix_stats(mu: &Partition) -> (i64, i64, Vec<u32>) {
    (mu.n_stat(), mu.g_stat(), mu.multiplicities())
}

/// All `μ ⊃_k ν`: partitions containing `ν` with `k` more cells.
pub fn covers(nu: &Partition, k: u32) -> Vec<Partition> {
    enumerate_partitions(nu.size() + k).into_iter().filter(|mu| mu.contains(nu)).collect()
}

/// All `ν ⊂_k μ`: partitions contained in `μ` with `k` fewer cells.
pub fn contained(mu: &Partition, k: u32) -> Vec<Partition> {
    if k > mu.size() {
        return Vec::new();
    }
    enumerate_partitions(mu.size() - k).into_iter().filter(|nu| mu.contains(nu)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::{q_int, QTPoly};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(5).len(), 7);
        let mut sorted = enumerate_partitions(6);
        sorted.sort();
        assert_eq!(sorted, enumerate_partitions(6));
    }

    #[test]
    fn cell_statistics() {
        let s = p(&[1]).cell_stats(Cell { col: 0, row: 0 }).unwrap();
        assert_eq!((s.arm, s.leg, s.coarm, s.coleg), (0, 0, 0, 0));
        let s = p(&[2, 1]).cell_stats(Cell { col: 0, row: 0 }).unwrap();
        assert_eq!((s.arm, s.leg), (1, 1));
        let s = p(&[3]).cell_stats(Cell { col: 2, row: 0 }).unwrap();
        assert_eq!((s.arm, s.leg, s.coarm, s.coleg), (0, 0, 2, 0));
        assert!(p(&[2, 1]).cell_stats(Cell { col: 1, row: 1 }).is_err());
    }

    #[test]
    fn scalars() {
        assert_eq!(p(&[4]).b(), q_int(4));
        assert_eq!(p(&[4]).t(), QTPoly::qt_pow(6, 0));
        assert_eq!(p(&[2, 1]).b().to_string(), "1 + t + q");
        let m = &(&QTPoly::one() - &QTPoly::q()) * &(&QTPoly::one() - &QTPoly::t());
        assert_eq!(p(&[1]).w(), m);
        assert!(Partition::empty().pi().is_one());
        assert!(p(&[1]).pi().is_one());
    }

    #[test]
    fn pi_of_one_row_follows_the_cell_definition() {
        let expect = (1..3).fold(QTPoly::one(), |acc, i| &acc * &(&QTPoly::one() - &QTPoly::qt_pow(i, 0)));
        assert_eq!(p(&[3]).pi(), expect);
    }

    #[test]
    fn appendix_statistics() {
        assert_eq!(p(&[5]).n_stat(), 0);
        assert_eq!(p(&[2, 1]).n_stat(), 1);
        let (_, g, m) = appendix_stats(&p(&[1, 1]));
        assert_eq!(m[1], 2);
        assert_eq!(g, -1);
    }

    #[test]
    fn covering_relations() {
        assert_eq!(covers(&p(&[1]), 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(contained(&p(&[2, 1]), 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(covers(&Partition::empty(), 2), vec![p(&[2]), p(&[1, 1])]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&p(&[3, 1, 1])).unwrap(), "[3,1,1]");
        let back: Partition = serde_json::from_str("[2,2]").unwrap();
        assert_eq!(back, p(&[2, 2]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
