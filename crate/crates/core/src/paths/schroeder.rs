//! Square paths with decorated rises, decorated peaks and zero valleys.

use super::labelled::{area_of, reading_order, DinvParts, LabelledPath};
use super::square::{subsets, SquarePath};
use crate::error::{Error, Result};
use crate::qt::{QTPoly, Rational};
use serde_json::json;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SchroederPath {
    path: SquarePath,
    drises: Vec<usize>,
    dpeaks: Vec<usize>,
    zvals: Vec<usize>,
}

fn normalized(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

impl SchroederPath {
    pub fn new(path: SquarePath, drises: Vec<usize>, dpeaks: Vec<usize>, zvals: Vec<usize>) -> Result<Self> {
        let (drises, dpeaks, zvals) = (normalized(drises), normalized(dpeaks), normalized(zvals));
        let n = path.size();
        let bad = |v: &[usize], ok: &dyn Fn(usize) -> bool| v.iter().copied().find(|&i| i == 0 || i > n || !ok(i));
        if let Some(i) = bad(&drises, &|i| path.is_rise(i)) {
            return Err(Error::Domain(format!("row {i} is not a rise")));
        }
        if let Some(i) = bad(&dpeaks, &|i| path.is_peak(i)) {
            return Err(Error::Domain(format!("row {i} is not a peak")));
        }
        if let Some(i) = bad(&zvals, &|i| path.is_valley(i)) {
            return Err(Error::Domain(format!("row {i} is not a valley")));
        }
        if let Some(i) = dpeaks.iter().find(|i| zvals.contains(i)) {
            return Err(Error::Domain(format!("row {i} is both a decorated peak and a zero valley")));
        }
        if n > 0 && path.base_rows().iter().all(|i| zvals.contains(i)) {
            return Err(Error::Domain("every base-diagonal row is a zero valley".into()));
        }
        Ok(SchroederPath { path, drises, dpeaks, zvals })
    }

    pub fn path(&self) -> &SquarePath {
        &self.path
    }

    pub fn drises(&self) -> &[usize] {
        &self.drises
    }

    pub fn dpeaks(&self) -> &[usize] {
        &self.dpeaks
    }

    pub fn zvals(&self) -> &[usize] {
        &self.zvals
    }

    /// Rows that are not zero valleys.
    pub fn n(&self) -> usize {
        self.path.size() - self.zvals.len()
    }

    pub fn area(&self) -> u32 {
        area_of(&self.path, &self.drises)
    }

    pub fn dinv_parts(&self) -> DinvParts {
        let a = self.path.area_word();
        let peak = |i: usize| self.dpeaks.contains(&(i + 1));
        let zero = |i: usize| self.zvals.contains(&(i + 1));
        let mut d = DinvParts::default();
        for j in 0..a.len() {
            for i in 0..j {
                if a[i] == a[j] && !peak(i) && !zero(j) {
                    d.primary += 1;
                } else if a[i] == a[j] + 1 && !peak(j) && !zero(i) {
                    d.secondary += 1;
                }
            }
            if a[j] < 0 && !zero(j) {
                d.bonus += 1;
            }
        }
        d
    }

    pub fn dinv(&self) -> u32 {
        self.dinv_parts().total()
    }

    /// Number of minimum-height rows that are not zero valleys.
    pub fn base_count(&self) -> usize {
        self.path.base_rows().iter().filter(|i| !self.zvals.contains(i)).count()
    }

    /// The labelling whose reading word shuffles the zeros, `1..n-d` increasing and the
    /// `d` largest labels decreasing on the decorated peaks.
    pub fn canonical_labelling(&self) -> LabelledPath {
        let n = self.n() as u32;
        let mut big = n;
        let mut small = 0;
        let mut labels = vec![0; self.path.size()];
        for i in reading_order(&self.path) {
            labels[i - 1] = if self.zvals.contains(&i) {
                0
            } else if self.dpeaks.contains(&i) {
                big -= 1;
                big + 1
            } else {
                small += 1;
                small
            };
        }
        LabelledPath::from_parts_unchecked(self.path.clone(), labels, self.drises.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "area_word": self.path.area_word(),
            "start": if self.path.starts_north() { "N" } else { "E" },
            "drises": self.drises,
            "dpeaks": self.dpeaks,
            "labels": self.canonical_labelling().labels(),
        })
    }

    pub const CSV_HEADER: &'static str = "area,dinv,k";

    pub fn to_csv_row(&self) -> String {
        format!("{},{},{}", self.area(), self.dinv(), self.base_count())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchroederFamily {
    /// All of `SQE(p,n)^{*l,od}`.
    All,
    /// Those with exactly `k` non-zero-valley rows at minimum height.
    Refined(usize),
    /// The refined set intersected with Dyck paths.
    DyckRefined(usize),
}

fn check(p: usize, n: usize, d: usize, family: SchroederFamily) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if d > n {
        return Err(Error::Domain(format!("need d <= n, got d={d}, n={n}")));
    }
    if let SchroederFamily::Refined(k) | SchroederFamily::DyckRefined(k) = family {
        if k == 0 || k > n {
            return Err(Error::Domain(format!("need 1 <= k <= n, got k={k}, n={n}")));
        }
    }
    if n + p > 12 {
        return Err(Error::Bound(n + p, 12));
    }
    Ok(())
}

/// Every element of `SQE(p,n)^{*l,od}` (or a refined subset), lex by area word,
/// then decorated rises, then decorated peaks, then zero valleys.
pub fn enumerate(family: SchroederFamily, p: usize, n: usize, l: usize, d: usize) -> Result<Vec<SchroederPath>> {
    check(p, n, d, family)?;
    let mut out = Vec::new();
    let paths = match family {
        SchroederFamily::DyckRefined(_) => SquarePath::dyck(n + p),
        _ => SquarePath::all(n + p),
    };
    for path in paths {
        let base = path.base_rows();
        for zvals in subsets(&path.valleys(), p) {
            let k = base.iter().filter(|i| !zvals.contains(i)).count();
            if k == 0 {
                continue;
            }
            if let SchroederFamily::Refined(want) | SchroederFamily::DyckRefined(want) = family {
                if k != want {
                    continue;
                }
            }
            let peaks: Vec<usize> = path.peaks().into_iter().filter(|i| !zvals.contains(i)).collect();
            for dr in subsets(&path.rises(), l) {
                for dp in subsets(&peaks, d) {
                    out.push(SchroederPath {
                        path: path.clone(),
                        drises: dr.clone(),
                        dpeaks: dp,
                        zvals: zvals.clone(),
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `Σ q^dinv t^area` over the family.
pub fn qt_polynomial(family: SchroederFamily, p: usize, n: usize, l: usize, d: usize) -> Result<QTPoly> {
    let mut counts: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for s in enumerate(family, p, n, l, d)? {
        *counts.entry((s.dinv(), s.area())).or_default() += 1;
    }
    Ok(QTPoly::from_terms(counts.into_iter().map(|((a, b), c)| (a, b, Rational::from_integer(c.into())))))
}
