//! Peak removal on dinv-0 labelled Dyck paths, used to peel the `j` largest labels
//! ("big cars") off a path while tracking the area lost at each step.

use super::labelled::{enumerate_with_content, reading_order, Family, LabelledPath};
use super::square::{subsets, SquarePath};
use crate::error::{Error, Result};
use crate::partition::enumerate_partitions;
use crate::qt::{QTPoly, QTRat, Rational};
use crate::symfunc::SymFunc;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RemovalMode {
    RisePreserving,
    RiseKilling,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Removal {
    pub path: LabelledPath,
    pub loss: u32,
    pub mode: RemovalMode,
    pub contractible: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RemovalRecord {
    pub label: u32,
    pub loss: u32,
    pub mode: RemovalMode,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RemovalRun {
    pub result: LabelledPath,
    pub steps: Vec<RemovalRecord>,
}

impl RemovalRun {
    fn losses(&self, mode: RemovalMode) -> Vec<u32> {
        self.steps.iter().filter(|s| s.mode == mode).map(|s| s.loss).collect()
    }

    pub fn killing_losses(&self) -> Vec<u32> {
        self.losses(RemovalMode::RiseKilling)
    }

    pub fn preserving_losses(&self) -> Vec<u32> {
        self.losses(RemovalMode::RisePreserving)
    }

    /// Number of rise-preserving removals.
    pub fn r(&self) -> usize {
        self.preserving_losses().len()
    }
}

fn is_dinv_zero_dyck(d: &LabelledPath) -> bool {
    d.is_dyck() && d.m() == 0 && d.dinv() == 0
}

/// `a_{i-1} < a_i = a_{i+1}` and `l_{i-1} < l_{i+1}`, reading `a_0 = -1`, `l_0 = 0`.
pub fn is_contractible(d: &LabelledPath, i: usize) -> bool {
    let n = d.size();
    if i == 0 || i >= n {
        return false;
    }
    let p = d.path();
    let (a_prev, l_prev) = if i == 1 { (-1, 0) } else { (p.a(i - 1), d.label(i - 1)) };
    a_prev < p.a(i) && p.a(i) == p.a(i + 1) && l_prev < d.label(i + 1)
}

/// Removes the peak in row `i` of a dinv-0 labelled Dyck path.
pub fn removal_step(d: &LabelledPath, i: usize) -> Result<Removal> {
    if !is_dinv_zero_dyck(d) {
        return Err(Error::Domain("removal needs a dinv-0 Dyck path without zero labels".into()));
    }
    let p = d.path();
    if i == 0 || i > d.size() || !p.is_peak(i) {
        return Err(Error::Domain(format!("row {i} is not a peak")));
    }
    let rises = p.rises();
    let mut mode = RemovalMode::RisePreserving;
    let mut drises = Vec::new();
    for &r in d.drises() {
        if r > i {
            drises.push(r - 1);
            continue;
        }
        let pos = rises.binary_search(&r).expect("decorated row is a rise");
        if pos == 0 {
            mode = RemovalMode::RiseKilling;
        } else {
            drises.push(rises[pos - 1]);
        }
    }
    drises.sort_unstable();
    let contractible = is_contractible(d, i);
    let a = p.area_word();
    let mut area: Vec<i32> = a[..i - 1].to_vec();
    area.extend(a[i..].iter().map(|&x| if contractible { x } else { x - 1 }));
    let mut labels = d.labels().to_vec();
    labels.remove(i - 1);
    let path = LabelledPath::new(SquarePath::new(area)?, labels, drises)?;
    let loss = d
        .area()
        .checked_sub(path.area())
        .ok_or_else(|| Error::Domain(format!("removing row {i} increased the area")))?;
    Ok(Removal { path, loss, mode, contractible })
}

/// Rows holding the `j` largest labels, which must be distinct and exceed every other label.
fn big_rows(d: &LabelledPath, j: usize) -> Result<Vec<usize>> {
    let mut values: Vec<u32> = d.labels().to_vec();
    values.sort_unstable_by(|a, b| b.cmp(a));
    if j > values.len() {
        return Err(Error::Domain(format!("asked for {j} big cars in a path of size {}", values.len())));
    }
    if values[..j].windows(2).any(|w| w[0] == w[1]) || (j < values.len() && j > 0 && values[j - 1] == values[j]) {
        return Err(Error::Domain("the largest labels are not distinct".into()));
    }
    let threshold = if j == 0 { u32::MAX } else { values[j - 1] };
    Ok((1..=d.size()).filter(|&i| d.label(i) >= threshold).collect())
}

/// The next big car the removal algorithm takes: the bottom-most contractible one,
/// else the top-most.
fn next_pick(d: &LabelledPath, big: &BTreeSet<u32>) -> Option<usize> {
    let rows: Vec<usize> = (1..=d.size()).filter(|&i| big.contains(&d.label(i))).collect();
    rows.iter().copied().find(|&i| is_contractible(d, i)).or(rows.last().copied())
}

fn check_big_cars(d: &LabelledPath, rows: &[usize]) -> Result<()> {
    let p = d.path();
    let mut columns = BTreeSet::new();
    for &i in rows {
        if !p.is_peak(i) {
            return Err(Error::Domain(format!("big car in row {i} is not a peak")));
        }
        if !columns.insert(i as i32 - 1 - p.a(i)) {
            return Err(Error::Domain(format!("big car in row {i} shares a column")));
        }
    }
    let word: Vec<u32> = reading_order(p).into_iter().filter(|i| rows.contains(i)).map(|i| d.label(i)).collect();
    if word.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Domain("big cars are not decreasing in the reading word".into()));
    }
    Ok(())
}

/// Removes the `j` big cars, recording the loss and mode of every step.
pub fn remove_big_cars(d: &LabelledPath, j: usize) -> Result<RemovalRun> {
    if !is_dinv_zero_dyck(d) {
        return Err(Error::Domain("removal needs a dinv-0 Dyck path without zero labels".into()));
    }
    let rows = big_rows(d, j)?;
    check_big_cars(d, &rows)?;
    let big: BTreeSet<u32> = rows.iter().map(|&i| d.label(i)).collect();
    let mut cur = d.clone();
    let mut steps = Vec::with_capacity(j);
    while let Some(i) = next_pick(&cur, &big) {
        let label = cur.label(i);
        let step = removal_step(&cur, i)?;
        steps.push(RemovalRecord { label, loss: step.loss, mode: step.mode });
        cur = step.path;
    }
    Ok(RemovalRun { result: cur, steps })
}

/// The unique path `D` with `next_pick(D)` on the inserted label such that removing it
/// gives `smaller` with the recorded loss and mode.
///
/// `big` lists the big labels present after insertion.
pub fn reinsert(smaller: &LabelledPath, rec: &RemovalRecord, big: &BTreeSet<u32>) -> Result<LabelledPath> {
    let a = smaller.path().area_word();
    let n = a.len();
    let k = smaller.k() + usize::from(rec.mode == RemovalMode::RiseKilling);
    let mut found = BTreeSet::new();
    for pos in 1..=n + 1 {
        let top = if pos == 1 { 0 } else { a[pos - 2] + 1 };
        for v in 0..=top {
            for shift in [0, 1] {
                let mut area = a[..pos - 1].to_vec();
                area.push(v);
                area.extend(a[pos - 1..].iter().map(|&x| x + shift));
                let Ok(path) = SquarePath::new(area) else { continue };
                if !path.is_dyck() {
                    continue;
                }
                let mut labels = smaller.labels().to_vec();
                labels.insert(pos - 1, rec.label);
                for dr in subsets(&path.rises(), k) {
                    let Ok(cand) = LabelledPath::new(path.clone(), labels.clone(), dr) else { continue };
                    if cand.dinv() != 0 || next_pick(&cand, big) != Some(pos) {
                        continue;
                    }
                    let Ok(step) = removal_step(&cand, pos) else { continue };
                    if step.path == *smaller && step.loss == rec.loss && step.mode == rec.mode {
                        found.insert(cand);
                    }
                }
            }
        }
    }
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap()),
        0 => Err(Error::Domain(format!("no path reinserts label {} with loss {}", rec.label, rec.loss))),
        c => Err(Error::Domain(format!("{c} paths reinsert label {} with loss {}", rec.label, rec.loss))),
    }
}

/// Undoes a full removal run.
pub fn reinsert_all(run: &RemovalRun) -> Result<LabelledPath> {
    let mut cur = run.result.clone();
    let mut big = BTreeSet::new();
    for rec in run.steps.iter().rev() {
        big.insert(rec.label);
        cur = reinsert(&cur, rec, &big)?;
    }
    Ok(cur)
}

/// Dinv-0 elements of `PLD(0,n)^{*k}` whose small labels have content `small` and whose
/// `j` big labels (all above the small ones) decrease along the reading word.
pub fn big_car_paths(small: &[u32], j: usize, k: usize) -> Result<Vec<LabelledPath>> {
    let mut content = small.to_vec();
    content.extend(std::iter::repeat_n(1, j));
    let ls = small.len() as u32;
    let mut out = Vec::new();
    for d in enumerate_with_content(Family::Pld, 0, k, &content)? {
        if d.dinv() != 0 {
            continue;
        }
        let word = d.reading_word();
        let bigs: Vec<u32> = word.into_iter().filter(|&l| l > ls).collect();
        if bigs.windows(2).all(|w| w[0] > w[1]) {
            out.push(d);
        }
    }
    Ok(out)
}

/// `h_j^⊥ PLD_{x,0,t}(0,n)^{*k}` computed from the big-car description.
pub fn hperp_combinatorial(j: usize, n: usize, k: usize) -> Result<SymFunc> {
    if j == 0 || j > n {
        return Err(Error::Domain(format!("need 1 <= j <= n, got j={j}, n={n}")));
    }
    let mut terms = Vec::new();
    for lambda in enumerate_partitions((n - j) as u32) {
        let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
        for d in big_car_paths(lambda.parts(), j, k)? {
            let rows: Vec<usize> = (1..=n).filter(|&i| d.label(i) > lambda.len() as u32).collect();
            check_big_cars(&d, &rows)?;
            *counts.entry(d.area()).or_default() += 1;
        }
        let poly = QTPoly::from_terms(counts.into_iter().map(|(a, c)| (0, a, Rational::from_integer(c.into()))));
        terms.push((lambda, QTRat::from_poly(poly)));
    }
    SymFunc::from_terms((n - j) as u32, terms)
}

/// Outcome of running the removal algorithm over every big-car path.
#[derive(Clone, Debug, Default)]
pub struct BijectionReport {
    pub inputs: usize,
    pub images: usize,
    pub reinserted: usize,
}

fn strictly_increasing_in(v: &[u32], hi: i64) -> bool {
    v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&x| (x as i64) <= hi)
}

fn weakly_increasing_in(v: &[u32], hi: i64) -> bool {
    v.windows(2).all(|w| w[0] <= w[1]) && v.iter().all(|&x| (x as i64) <= hi)
}

fn sequences(len: usize, hi: i64, strict: bool) -> Vec<Vec<u32>> {
    fn rec(len: usize, lo: i64, hi: i64, strict: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lo..=hi {
            cur.push(x as u32);
            rec(len, if strict { x + 1 } else { x }, hi, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 0, hi, strict, &mut Vec::new(), &mut out);
    out
}

/// Checks that removal is a bijection from big-car paths in `PLD(0,n)^{*k}` onto triples
/// (dinv-0 path in `PLD(0,n-j)^{*k-j+r}`, killing losses, preserving losses) with
/// strictly increasing killing losses in `[0, n-k-r-1]` and weakly increasing preserving
/// losses in `[0, n-k-r]`. With `reinsert_check`, every run is also undone.
pub fn check_removal_bijection(j: usize, n: usize, k: usize, reinsert_check: bool) -> Result<BijectionReport> {
    if j == 0 || j > n {
        return Err(Error::Domain(format!("need 1 <= j <= n, got j={j}, n={n}")));
    }
    let mut report = BijectionReport::default();
    for lambda in enumerate_partitions((n - j) as u32) {
        type Key = (LabelledPath, usize, Vec<u32>, Vec<u32>);
        let mut seen: BTreeSet<Key> = BTreeSet::new();
        for d in big_car_paths(lambda.parts(), j, k)? {
            report.inputs += 1;
            let run = remove_big_cars(&d, j)?;
            let r = run.r();
            let (kill, keep) = (run.killing_losses(), run.preserving_losses());
            let span = n as i64 - k as i64 - r as i64;
            if !strictly_increasing_in(&kill, span - 1) || !weakly_increasing_in(&keep, span) {
                return Err(Error::Domain(format!("loss sequences {kill:?} / {keep:?} out of range for {d:?}")));
            }
            if reinsert_check {
                let back = reinsert_all(&run)?;
                if back != d {
                    return Err(Error::Domain(format!("reinsertion of {d:?} gave {back:?}")));
                }
                report.reinserted += 1;
            }
            if !seen.insert((run.result, r, kill, keep)) {
                return Err(Error::Domain(format!("two paths share the image of {d:?}")));
            }
        }
        let mut expected = 0usize;
        for r in 0..=j {
            let kk = k as i64 - j as i64 + r as i64;
            let span = n as i64 - k as i64 - r as i64;
            if kk < 0 || (n - j > 0 && kk >= (n - j) as i64) || (n == j && kk != 0) {
                continue;
            }
            let smaller: Vec<LabelledPath> = if n == j {
                vec![LabelledPath::new(SquarePath::new(vec![])?, vec![], vec![])?]
            } else {
                enumerate_with_content(Family::Pld, 0, kk as usize, lambda.parts())?
                    .into_iter()
                    .filter(|d| d.dinv() == 0)
                    .collect()
            };
            let kills = sequences(j - r, span - 1, true);
            let keeps = sequences(r, span, false);
            for s in &smaller {
                for kl in &kills {
                    for kp in &keeps {
                        expected += 1;
                        if !seen.contains(&(s.clone(), r, kl.clone(), kp.clone())) {
                            return Err(Error::Domain(format!(
                                "no preimage for {s:?} with r={r}, losses {kl:?} / {kp:?}"
                            )));
                        }
                    }
                }
            }
        }
        if expected != seen.len() {
            return Err(Error::Domain(format!("{} images but {expected} targets for content {lambda}", seen.len())));
        }
        report.images += seen.len();
    }
    Ok(report)
}
