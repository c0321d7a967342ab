//! Square paths ending east, encoded by their area word.
//!
//! Row `i` (1-based) is the `i`-th north step; it starts on the diagonal
//! `y = x + a_i`. A sequence is an area word of such a path iff `a_1 <= 0`,
//! `a_N >= 0` and `a_{i+1} <= a_i + 1`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SquarePath {
    area: Vec<i32>,
}

impl TryFrom<Vec<i32>> for SquarePath {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        SquarePath::new(v)
    }
}

impl From<SquarePath> for Vec<i32> {
    fn from(p: SquarePath) -> Vec<i32> {
        p.area
    }
}

impl SquarePath {
    pub fn new(area: Vec<i32>) -> Result<Self> {
        if let (Some(&first), Some(&last)) = (area.first(), area.last()) {
            if first > 0 {
                return Err(Error::Domain(format!("area word {area:?} starts above the diagonal")));
            }
            if last < 0 {
                return Err(Error::Domain(format!("area word {area:?} does not end east")));
            }
        }
        if area.windows(2).any(|w| w[1] > w[0] + 1) {
            return Err(Error::Domain(format!("area word {area:?} climbs more than one diagonal per row")));
        }
        Ok(SquarePath { area })
    }

    /// From a word in `N`/`E`; the word must end with `E`.
    pub fn from_steps(steps: &str) -> Result<Self> {
        let (mut x, mut y) = (0i32, 0i32);
        let mut area = Vec::new();
        for c in steps.chars() {
            match c {
                'N' => {
                    area.push(y - x);
                    y += 1;
                }
                'E' => x += 1,
                _ => return Err(Error::Domain(format!("unexpected step {c:?}"))),
            }
        }
        if x != y || !steps.ends_with('E') {
            return Err(Error::Domain(format!("{steps} is not a square path ending east")));
        }
        SquarePath::new(area)
    }

    pub fn steps(&self) -> String {
        let mut out = String::new();
        let mut x = 0i32;
        for (i, &a) in self.area.iter().enumerate() {
            let target = i as i32 - a;
            out.extend(std::iter::repeat_n('E', (target - x) as usize));
            x = target;
            out.push('N');
        }
        out.extend(std::iter::repeat_n('E', (self.size() as i32 - x) as usize));
        out
    }

    pub fn size(&self) -> usize {
        self.area.len()
    }

    pub fn area_word(&self) -> &[i32] {
        &self.area
    }

    /// `a_i` for 1-based `i`.
    pub fn a(&self, i: usize) -> i32 {
        self.area[i - 1]
    }

    pub fn starts_north(&self) -> bool {
        self.area.first() == Some(&0)
    }

    pub fn shift(&self) -> u32 {
        (-self.area.iter().copied().min().unwrap_or(0)).max(0) as u32
    }

    pub fn is_dyck(&self) -> bool {
        self.area.iter().all(|&a| a >= 0)
    }

    /// `{i >= 2 : a_i > a_{i-1}}`.
    pub fn rises(&self) -> Vec<usize> {
        (2..=self.size()).filter(|&i| self.a(i) > self.a(i - 1)).collect()
    }

    pub fn is_rise(&self, i: usize) -> bool {
        i >= 2 && self.a(i) > self.a(i - 1)
    }

    /// Rows whose north step follows an east step.
    pub fn valleys(&self) -> Vec<usize> {
        (1..=self.size()).filter(|&i| self.is_valley(i)).collect()
    }

    pub fn is_valley(&self, i: usize) -> bool {
        if i == 1 {
            !self.starts_north()
        } else {
            self.a(i) <= self.a(i - 1)
        }
    }

    /// Rows whose north step is followed by an east step; always includes `N`.
    pub fn peaks(&self) -> Vec<usize> {
        (1..=self.size()).filter(|&i| self.is_peak(i)).collect()
    }

    pub fn is_peak(&self, i: usize) -> bool {
        i == self.size() || self.a(i + 1) <= self.a(i)
    }

    /// Rows starting on the base diagonal.
    pub fn base_rows(&self) -> Vec<usize> {
        let m = -(self.shift() as i32);
        (1..=self.size()).filter(|&i| self.a(i) == m).collect()
    }

    /// The first row starting on the base diagonal; its start is the breaking point.
    pub fn breaking_row(&self) -> Option<usize> {
        self.base_rows().first().copied()
    }

    /// All square paths ending east of size `n`, lex by area word.
    pub fn all(n: usize) -> Vec<SquarePath> {
        fn rec(n: usize, cur: &mut Vec<i32>, dyck: bool, out: &mut Vec<SquarePath>) {
            let i = cur.len() + 1;
            if i > n {
                if cur.last().is_none_or(|&a| a >= 0) {
                    out.push(SquarePath { area: cur.clone() });
                }
                return;
            }
            let hi = cur.last().map_or(0, |&a| a + 1);
            let lo = if dyck { 0 } else { i as i32 - n as i32 };
            for a in lo..=hi {
                cur.push(a);
                rec(n, cur, dyck, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), false, &mut out);
        out
    }

    /// Dyck paths of size `n`, lex by area word.
    pub fn dyck(n: usize) -> Vec<SquarePath> {
        let mut out = Vec::new();
        fn rec(n: usize, cur: &mut Vec<i32>, out: &mut Vec<SquarePath>) {
            if cur.len() == n {
                out.push(SquarePath { area: cur.clone() });
                return;
            }
            let hi = cur.last().map_or(0, |&a| a + 1);
            for a in 0..=hi {
                cur.push(a);
                rec(n, cur, out);
                cur.pop();
            }
        }
        rec(n, &mut Vec::new(), &mut out);
        out
    }
}

/// All `k`-subsets of `items`, lex.
pub(crate) fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::new(), &mut out);
    }
    out
}
