//! Partially labelled decorated square paths and their Dyck subfamily.

use super::square::{subsets, SquarePath};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::qt::{QTPoly, QTRat, Rational};
use crate::symfunc::SymFunc;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    /// Partially labelled decorated Dyck paths.
    Pld,
    /// Partially labelled decorated square paths ending east.
    Plsqe,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Pld => "PLD",
            Family::Plsqe => "PLSQE",
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct LabelledPath {
    path: SquarePath,
    labels: Vec<u32>,
    drises: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct DinvParts {
    pub primary: u32,
    pub secondary: u32,
    pub bonus: u32,
}

impl DinvParts {
    pub fn total(&self) -> u32 {
        self.primary + self.secondary + self.bonus
    }
}

impl LabelledPath {
    pub fn new(path: SquarePath, labels: Vec<u32>, mut drises: Vec<usize>) -> Result<Self> {
        let n = path.size();
        if labels.len() != n {
            return Err(Error::Domain(format!("{} labels for a path of size {n}", labels.len())));
        }
        drises.sort_unstable();
        drises.dedup();
        if let Some(&i) = drises.iter().find(|&&i| !(1..=n).contains(&i) || !path.is_rise(i)) {
            return Err(Error::Domain(format!("row {i} is not a rise")));
        }
        for i in 2..=n {
            if path.is_rise(i) && labels[i - 1] <= labels[i - 2] {
                return Err(Error::Domain(format!("labels not increasing up the column at row {i}")));
            }
        }
        if path.starts_north() && labels[0] == 0 {
            return Err(Error::Domain("first step is north but carries label 0".into()));
        }
        if n > 0 && path.base_rows().iter().all(|&i| labels[i - 1] == 0) {
            return Err(Error::Domain("no nonzero label on the base diagonal".into()));
        }
        Ok(LabelledPath { path, labels, drises })
    }

    pub fn path(&self) -> &SquarePath {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> u32 {
        self.labels[i - 1]
    }

    pub fn drises(&self) -> &[usize] {
        &self.drises
    }

    pub fn size(&self) -> usize {
        self.path.size()
    }

    /// Number of zero labels.
    pub fn m(&self) -> usize {
        self.labels.iter().filter(|&&l| l == 0).count()
    }

    /// Number of nonzero labels.
    pub fn n(&self) -> usize {
        self.size() - self.m()
    }

    pub fn k(&self) -> usize {
        self.drises.len()
    }

    pub fn is_dyck(&self) -> bool {
        self.path.is_dyck()
    }

    pub fn area(&self) -> u32 {
        area_of(&self.path, &self.drises)
    }

    pub fn dinv_parts(&self) -> DinvParts {
        let a = self.path.area_word();
        let l = &self.labels;
        let mut d = DinvParts::default();
        for j in 0..a.len() {
            for i in 0..j {
                if a[i] == a[j] && l[i] < l[j] {
                    d.primary += 1;
                } else if a[i] == a[j] + 1 && l[i] > l[j] {
                    d.secondary += 1;
                }
            }
            if a[j] < 0 && l[j] != 0 {
                d.bonus += 1;
            }
        }
        d
    }

    pub fn dinv(&self) -> u32 {
        self.dinv_parts().total()
    }

    /// Labels read diagonal by diagonal from the base one up, each diagonal bottom to top.
    pub fn reading_word(&self) -> Vec<u32> {
        reading_order(&self.path).into_iter().map(|i| self.label(i)).collect()
    }

    /// Multiplicity of each nonzero label value, indexed from label 1.
    pub fn content(&self) -> Vec<u32> {
        let top = self.labels.iter().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0; top];
        for &l in self.labels.iter().filter(|&&l| l > 0) {
            c[l as usize - 1] += 1;
        }
        c
    }

    /// Exponent type of `x^P`.
    pub fn monomial_type(&self) -> Partition {
        Partition::from_unsorted(self.content().into_iter().filter(|&c| c > 0).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "area_word": self.path.area_word(),
            "start": if self.path.starts_north() { "N" } else { "E" },
            "drises": self.drises,
            "dpeaks": [],
            "labels": self.labels,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let area: Vec<i32> = serde_json::from_value(v["area_word"].clone())?;
        let labels: Vec<u32> = serde_json::from_value(v["labels"].clone())?;
        let drises: Vec<usize> = serde_json::from_value(v["drises"].clone())?;
        Self::new(SquarePath::new(area)?, labels, drises)
    }

    pub const CSV_HEADER: &'static str = "area,dinv,type";

    pub fn to_csv_row(&self) -> String {
        format!("{},{},\"{}\"", self.area(), self.dinv(), self.monomial_type())
    }

    pub(crate) fn from_parts_unchecked(path: SquarePath, labels: Vec<u32>, drises: Vec<usize>) -> Self {
        LabelledPath { path, labels, drises }
    }
}

pub(crate) fn area_of(path: &SquarePath, drises: &[usize]) -> u32 {
    let s = path.shift() as i32;
    (1..=path.size()).filter(|i| !drises.contains(i)).map(|i| (path.a(i) + s) as u32).sum()
}

/// Rows in reading order.
pub(crate) fn reading_order(path: &SquarePath) -> Vec<usize> {
    let mut rows: Vec<usize> = (1..=path.size()).collect();
    rows.sort_by_key(|&i| (path.a(i), i));
    rows
}

/// Labellings of a fixed path with fixed zero rows, each paired with its dinv.
struct Labeller<'a> {
    a: &'a [i32],
    rise: Vec<bool>,
    zero: Vec<bool>,
    base: i32,
    /// Remaining multiplicities per label value, or `None` for free values in `1..=top`.
    content: Option<Vec<u32>>,
    top: u32,
}

impl<'a> Labeller<'a> {
    fn new(path: &'a SquarePath, zeros: &[usize], content: Option<Vec<u32>>, top: u32) -> Self {
        let n = path.size();
        Labeller {
            a: path.area_word(),
            rise: (1..=n).map(|i| path.is_rise(i)).collect(),
            zero: (1..=n).map(|i| zeros.contains(&i)).collect(),
            base: -(path.shift() as i32),
            content,
            top,
        }
    }

    fn run(&mut self, f: &mut impl FnMut(&[u32], u32)) {
        let mut labels = Vec::with_capacity(self.a.len());
        self.rec(&mut labels, 0, false, f);
    }

    fn gain(&self, labels: &[u32], v: u32) -> u32 {
        let j = labels.len();
        let aj = self.a[j];
        let mut g = 0;
        for (&ai, &li) in self.a.iter().zip(labels) {
            if (ai == aj && li < v) || (ai == aj + 1 && li > v) {
                g += 1;
            }
        }
        if aj < 0 && v != 0 {
            g += 1;
        }
        g
    }

    fn rec(&mut self, labels: &mut Vec<u32>, dinv: u32, based: bool, f: &mut impl FnMut(&[u32], u32)) {
        let j = labels.len();
        if j == self.a.len() {
            if based {
                f(labels, dinv);
            }
            return;
        }
        if self.zero[j] {
            let g = self.gain(labels, 0);
            labels.push(0);
            self.rec(labels, dinv + g, based, f);
            labels.pop();
            return;
        }
        let lo = if self.rise[j] { labels[j - 1] + 1 } else { 1 };
        let on_base = self.a[j] == self.base;
        for v in lo..=self.top {
            if let Some(c) = &mut self.content {
                if c[v as usize - 1] == 0 {
                    continue;
                }
                c[v as usize - 1] -= 1;
            }
            let g = self.gain(labels, v);
            labels.push(v);
            self.rec(labels, dinv + g, based || on_base, f);
            labels.pop();
            if let Some(c) = &mut self.content {
                c[v as usize - 1] += 1;
            }
        }
    }
}

pub(crate) fn check_params(m: usize, n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if k >= n {
        return Err(Error::Domain(format!("need k < n, got k={k}, n={n}")));
    }
    if n + m > 12 {
        return Err(Error::Bound(n + m, 12));
    }
    Ok(())
}

fn family_paths(family: Family, size: usize) -> Vec<SquarePath> {
    match family {
        Family::Pld => SquarePath::dyck(size),
        Family::Plsqe => SquarePath::all(size),
    }
}

/// Calls `f(path, zero rows)` for every shape with `m` zero valleys.
fn for_each_shape(family: Family, m: usize, n: usize, mut f: impl FnMut(&SquarePath, &[usize])) {
    for path in family_paths(family, n + m) {
        for zeros in subsets(&path.valleys(), m) {
            f(&path, &zeros);
        }
    }
}

/// Every element of the family with nonzero labels in `1..=n`, in lex order
/// (area word, then decorations, then labels).
pub fn enumerate(family: Family, m: usize, n: usize, k: usize) -> Result<Vec<LabelledPath>> {
    check_params(m, n, k)?;
    let mut out = Vec::new();
    for path in family_paths(family, n + m) {
        let mut labellings = Vec::new();
        for zeros in subsets(&path.valleys(), m) {
            Labeller::new(&path, &zeros, None, n as u32).run(&mut |l, _| labellings.push(l.to_vec()));
        }
        labellings.sort();
        for dr in subsets(&path.rises(), k) {
            for l in &labellings {
                out.push(LabelledPath::from_parts_unchecked(path.clone(), l.clone(), dr.clone()));
            }
        }
    }
    Ok(out)
}

/// Elements of the family whose nonzero labels have multiplicities `content`
/// (entry `v-1` counts label `v`), in the same order as [`enumerate`].
pub fn enumerate_with_content(family: Family, m: usize, k: usize, content: &[u32]) -> Result<Vec<LabelledPath>> {
    let n = content.iter().sum::<u32>() as usize;
    check_params(m, n, k)?;
    let mut out = Vec::new();
    for path in family_paths(family, n + m) {
        let mut labellings = Vec::new();
        for zeros in subsets(&path.valleys(), m) {
            Labeller::new(&path, &zeros, Some(content.to_vec()), content.len() as u32)
                .run(&mut |l, _| labellings.push(l.to_vec()));
        }
        labellings.sort();
        for dr in subsets(&path.rises(), k) {
            for l in &labellings {
                out.push(LabelledPath::from_parts_unchecked(path.clone(), l.clone(), dr.clone()));
            }
        }
    }
    Ok(out)
}

type Counts = BTreeMap<(u32, u32), i64>;

fn counts_to_poly(c: &Counts) -> QTPoly {
    QTPoly::from_terms(c.iter().map(|(&(a, b), &v)| (a, b, Rational::from_integer(v.into()))))
}

/// `Σ q^dinv t^area` over the family elements with content `content`.
fn content_qt(family: Family, m: usize, k: usize, content: &[u32]) -> Counts {
    let n = content.iter().sum::<u32>() as usize;
    let mut total = Counts::new();
    let mut last: Option<(SquarePath, Counts)> = None;
    let flush = |acc: &mut Option<(SquarePath, Counts)>, total: &mut Counts| {
        if let Some((path, dinvs)) = acc.take() {
            if dinvs.is_empty() {
                return;
            }
            for dr in subsets(&path.rises(), k) {
                let area = area_of(&path, &dr);
                for (&(d, _), &c) in &dinvs {
                    *total.entry((d, area)).or_default() += c;
                }
            }
        }
    };
    for_each_shape(family, m, n, |path, zeros| {
        if last.as_ref().is_none_or(|(p, _)| p != path) {
            flush(&mut last, &mut total);
            last = Some((path.clone(), Counts::new()));
        }
        let dinvs = &mut last.as_mut().unwrap().1;
        Labeller::new(path, zeros, Some(content.to_vec()), content.len() as u32)
            .run(&mut |_, d| *dinvs.entry((d, 0)).or_default() += 1);
    });
    flush(&mut last, &mut total);
    total
}

/// `Σ q^dinv t^area x^P` over the family, in the monomial basis.
///
/// Each monomial coefficient is computed for the content sorted decreasingly and again
/// for its reversal; a disagreement is reported as [`Error::NotSymmetric`].
pub fn gen_function(family: Family, m: usize, n: usize, k: usize) -> Result<SymFunc> {
    check_params(m, n, k)?;
    let mut terms = Vec::new();
    for lambda in enumerate_partitions(n as u32) {
        let c = content_qt(family, m, k, lambda.parts());
        if lambda.len() > 1 {
            let rev: Vec<u32> = lambda.parts().iter().rev().copied().collect();
            if content_qt(family, m, k, &rev) != c {
                return Err(Error::NotSymmetric(format!(
                    "{}({m},{n})^*{k}: coefficient of x^{lambda} depends on the variable order",
                    family.name()
                )));
            }
        }
        terms.push((lambda, QTRat::from_poly(counts_to_poly(&c))));
    }
    SymFunc::from_terms(n as u32, terms)
}

/// `(-t)^dr q^dinv t^area`; the monomial `x^P` is left implicit.
pub fn weight(p: &LabelledPath) -> QTPoly {
    let sign = if p.k().is_multiple_of(2) { 1 } else { -1 };
    QTPoly::monomial(Rational::from_integer(sign.into()), p.dinv(), p.area() + p.k() as u32)
}

/// Toggles the decoration of the first rise after the breaking point; rise-free paths are fixed.
pub fn phi(p: &LabelledPath) -> LabelledPath {
    let path = &p.path;
    let Some(b) = path.breaking_row() else {
        return p.clone();
    };
    let Some(r) = (b + 1..=path.size()).find(|&i| path.is_rise(i)) else {
        return p.clone();
    };
    let mut drises = p.drises.clone();
    match drises.binary_search(&r) {
        Ok(pos) => {
            drises.remove(pos);
        }
        Err(pos) => drises.insert(pos, r),
    }
    LabelledPath { path: path.clone(), labels: p.labels.clone(), drises }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(Family::Plsqe, 0, 1, 0).unwrap().len(), 1);
        assert_eq!(enumerate(Family::Pld, 0, 1, 0).unwrap().len(), 1);
        assert!(enumerate(Family::Pld, 0, 2, 2).is_err());
        assert!(enumerate(Family::Pld, 0, 0, 0).is_err());
    }

    #[test]
    fn lex_order() {
        let all = enumerate(Family::Plsqe, 1, 2, 1).unwrap();
        let keys: Vec<_> =
            all.iter().map(|p| (p.path.area_word().to_vec(), p.drises.clone(), p.labels.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
