//! Monomial expansion of `H̃_μ` by summing `q^inv t^maj` over fillings.
//!
//! Cells are read top row first, left to right. Two cells attack when they
//! share a row, or when they sit in adjacent rows with the upper one strictly
//! to the right. A descent is a cell whose entry exceeds the entry directly
//! below it.

use crate::partition::{enumerate_partitions, Cell, Partition};
use crate::qt::{QTPoly, QTRat, Rational};
use crate::symfunc::SymFunc;
use num_bigint::BigInt;
use std::collections::HashMap;

struct Diagram {
    /// Earlier cells (in reading order) attacking each cell.
    attackers: Vec<Vec<usize>>,
    /// The cell directly above, with its `(arm, leg + 1)`.
    above: Vec<Option<(usize, u32, u32)>>,
}

impl Diagram {
    fn new(mu: &Partition) -> Diagram {
        let mut cells = Vec::new();
        for r in (0..mu.len()).rev() {
            for c in 0..mu.part(r) {
                cells.push((r as u32, c));
            }
        }
        let pos: HashMap<(u32, u32), usize> = cells.iter().enumerate().map(|(i, &rc)| (rc, i)).collect();
        let attackers = cells
            .iter()
            .enumerate()
            .map(|(v, &(rv, cv))| {
                (0..v)
                    .filter(|&u| {
                        let (ru, cu) = cells[u];
                        ru == rv || (ru == rv + 1 && cu > cv)
                    })
                    .collect()
            })
            .collect();
        let above = cells
            .iter()
            .map(|&(r, c)| {
                pos.get(&(r + 1, c)).map(|&u| {
                    let s = mu.cell_stats(Cell { col: c, row: r + 1 }).unwrap();
                    (u, s.arm, s.leg + 1)
                })
            })
            .collect();
        Diagram { attackers, above }
    }

    fn size(&self) -> usize {
        self.attackers.len()
    }
}

struct Filler<'a> {
    d: &'a Diagram,
    content: Vec<u32>,
    sigma: Vec<u32>,
    out: HashMap<(i32, u32), i64>,
}

impl Filler<'_> {
    fn run(&mut self, inv: i32, maj: u32) {
        let v = self.sigma.len();
        if v == self.d.size() {
            *self.out.entry((inv, maj)).or_default() += 1;
            return;
        }
        for x in 0..self.content.len() {
            if self.content[x] == 0 {
                continue;
            }
            let x = x as u32;
            let mut di = self.d.attackers[v].iter().filter(|&&u| self.sigma[u] > x).count() as i32;
            let mut dm = 0;
            if let Some((u, arm, leg1)) = self.d.above[v] {
                if self.sigma[u] > x {
                    di -= arm as i32;
                    dm = leg1;
                }
            }
            self.content[x as usize] -= 1;
            self.sigma.push(x);
            self.run(inv + di, maj + dm);
            self.sigma.pop();
            self.content[x as usize] += 1;
        }
    }
}

/// Coefficient of `m_λ` in `H̃_μ`: fillings with `λ_i` copies of `i`.
fn coefficient(d: &Diagram, lambda: &Partition) -> QTPoly {
    let mut f =
        Filler { d, content: lambda.parts().to_vec(), sigma: Vec::with_capacity(d.size()), out: HashMap::new() };
    f.run(0, 0);
    QTPoly::from_terms(f.out.into_iter().map(|((inv, maj), c)| {
        assert!(inv >= 0, "negative inversion statistic");
        (inv as u32, maj, Rational::from_integer(BigInt::from(c)))
    }))
}

pub(crate) fn compute(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let d = Diagram::new(mu);
    let terms = enumerate_partitions(n).into_iter().map(|lambda| {
        let c = coefficient(&d, &lambda);
        (lambda, QTRat::from_poly(c))
    });
    SymFunc::from_terms(n, terms).unwrap()
}
