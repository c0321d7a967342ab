//! Modified Macdonald polynomials `H̃_μ[X; q, t]` and the operators that are
//! diagonal in them: `∇`, `Δ_f`, `Δ'_f` and `Π`. Also included are the star scalar
//! product, Pieri coefficients and the refinement `E_{n,k}` of `e_n`.

pub mod cache;
mod enk;
mod hhl;

pub use enk::{enk, enk_all};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::qt::{common_denominator, QTPoly, QTRat};
use crate::symfunc::{eval_alphabet, omega, pleth_transform, skew_h, PowerSumTransform, SymFunc, VirtualAlphabet};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Largest degree for which `H̃_μ` is computed.
pub const MAX_DEGREE: u32 = 8;

/// All `H̃_μ` with `μ ⊢ n`.
#[derive(Debug)]
pub struct MacdonaldBasis {
    degree: u32,
    parts: Vec<Partition>,
    table: BTreeMap<Partition, SymFunc>,
    /// Monomial coordinates of each `H̃_μ`, in the order of `parts`.
    dense: Vec<Vec<QTPoly>>,
    w: Vec<QTPoly>,
}

type BasisCell = Arc<OnceLock<Arc<MacdonaldBasis>>>;

impl MacdonaldBasis {
    /// Computes every `H̃_μ, μ ⊢ n` from scratch, without touching any cache.
    pub fn compute(n: u32) -> Result<MacdonaldBasis> {
        check_bound(n)?;
        let parts = enumerate_partitions(n);
        let polys: Vec<SymFunc> = parts.par_iter().map(hhl::compute).collect();
        MacdonaldBasis::from_table(n, parts.into_iter().zip(polys).collect())
    }

    pub(crate) fn from_table(n: u32, table: BTreeMap<Partition, SymFunc>) -> Result<MacdonaldBasis> {
        let parts = enumerate_partitions(n);
        let mut dense = Vec::with_capacity(parts.len());
        for mu in &parts {
            let f = table.get(mu).ok_or_else(|| Error::Cache(format!("no entry for partition {mu}")))?;
            if f.degree() != n {
                return Err(Error::Cache(format!("entry for partition {mu} has degree {}", f.degree())));
            }
            let (nums, den) = f.m_dense();
            if !den.is_one() {
                return Err(Error::Cache(format!("entry for partition {mu} has non-polynomial coefficients")));
            }
            dense.push(nums);
        }
        let w = parts.iter().map(Partition::w).collect();
        Ok(MacdonaldBasis { degree: n, parts, table, dense, w })
    }

    /// The basis of degree `n`, computed once per process. When a cache
    /// directory is configured, it is read from there if present and written
    /// there otherwise.
    pub fn get(n: u32) -> Result<Arc<MacdonaldBasis>> {
        check_bound(n)?;
        static BASES: OnceLock<Mutex<HashMap<u32, BasisCell>>> = OnceLock::new();
        let cell = BASES.get_or_init(Default::default).lock().unwrap().entry(n).or_default().clone();
        if let Some(b) = cell.get() {
            return Ok(b.clone());
        }
        let built = match cache::cache_dir() {
            Some(dir) => match cache::read(&dir, n)? {
                Some(b) => b,
                None => {
                    let b = MacdonaldBasis::compute(n)?;
                    cache::write(&dir, &b)?;
                    b
                }
            },
            None => MacdonaldBasis::compute(n)?,
        };
        Ok(cell.get_or_init(|| Arc::new(built)).clone())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn htilde(&self, mu: &Partition) -> &SymFunc {
        &self.table[mu]
    }

    pub fn table(&self) -> &BTreeMap<Partition, SymFunc> {
        &self.table
    }

    /// `(⟨f, H̃_μ⟩_*)_μ` as numerators over one denominator.
    fn star_row(&self, f: &SymFunc) -> Result<(Vec<QTPoly>, QTPoly)> {
        if f.degree() != self.degree {
            return Err(Error::DegreeMismatch(f.degree() as usize, self.degree as usize));
        }
        let g = omega(&pleth_transform(f, &PowerSumTransform::times_m())?);
        let (v, den) = g.inner_dense();
        let row = self
            .dense
            .iter()
            .map(|h| {
                v.iter()
                    .zip(h)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(QTPoly::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect();
        Ok((row, den))
    }

    /// `c_μ = ⟨f, H̃_μ⟩_* / w_μ`.
    pub fn expand(&self, f: &SymFunc) -> Result<DeltaExpansion> {
        let mut coeffs = BTreeMap::new();
        if !f.is_zero() {
            let (row, den) = self.star_row(f)?;
            for ((mu, x), w) in self.parts.iter().zip(row).zip(&self.w) {
                if !x.is_zero() {
                    coeffs.insert(mu.clone(), QTRat::new(x, &den * w)?);
                }
            }
        }
        Ok(DeltaExpansion { degree: self.degree, coeffs })
    }

    /// `Σ c_μ H̃_μ` in monomial coordinates.
    pub fn reconstruct(&self, e: &DeltaExpansion) -> SymFunc {
        assert_eq!(e.degree, self.degree, "expansion degree does not match the basis");
        let vals: Vec<QTRat> = self.parts.iter().map(|mu| e.coeff(mu)).collect();
        let (nums, den) = common_denominator(&vals);
        let mut out = vec![QTPoly::zero(); self.parts.len()];
        for (x, h) in nums.iter().zip(&self.dense) {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(h) {
                if !y.is_zero() {
                    *o = &*o + &(x * y);
                }
            }
        }
        SymFunc::from_m_dense(self.degree, out, den)
    }

    /// Checks `⟨H̃_λ, H̃_μ⟩_* = w_μ δ_{λμ}` for every pair, diagonal first.
    pub fn check_orthogonality(&self) -> Result<()> {
        let rows: Vec<(Vec<QTPoly>, QTPoly)> =
            self.parts.par_iter().map(|mu| self.star_row(&self.table[mu])).collect::<Result<_>>()?;
        for (i, mu) in self.parts.iter().enumerate() {
            let (row, den) = &rows[i];
            if row[i] != den * &self.w[i] {
                return Err(Error::Cache(format!("partition {mu}: star norm differs from w")));
            }
        }
        for (i, lam) in self.parts.iter().enumerate() {
            for (j, mu) in self.parts.iter().enumerate() {
                if i != j && !rows[i].0[j].is_zero() {
                    return Err(Error::Cache(format!("partitions {lam} and {mu} are not star-orthogonal")));
                }
            }
        }
        Ok(())
    }
}

fn check_bound(n: u32) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::Bound(n as usize, MAX_DEGREE as usize));
    }
    Ok(())
}

/// Coordinates of a symmetric function in the `H̃` basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaExpansion {
    degree: u32,
    coeffs: BTreeMap<Partition, QTRat>,
}

impl DeltaExpansion {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, mu: &Partition) -> QTRat {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QTRat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies each `c_μ` by `eigen(μ)`.
    pub fn scale_each(&self, eigen: impl Fn(&Partition) -> Result<QTRat>) -> Result<DeltaExpansion> {
        let mut coeffs = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            let x = c * &eigen(mu)?;
            if !x.is_zero() {
                coeffs.insert(mu.clone(), x);
            }
        }
        Ok(DeltaExpansion { degree: self.degree, coeffs })
    }

    pub fn to_symfunc(&self) -> Result<SymFunc> {
        Ok(MacdonaldBasis::get(self.degree)?.reconstruct(self))
    }
}

/// Monomial expansion of `H̃_μ`.
pub fn htilde(mu: &Partition) -> Result<SymFunc> {
    Ok(MacdonaldBasis::get(mu.size())?.htilde(mu).clone())
}

/// `⟨f, g⟩_* = ⟨ω f[MX], g⟩`.
pub fn star_inner(f: &SymFunc, g: &SymFunc) -> Result<QTRat> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch(f.degree() as usize, g.degree() as usize));
    }
    let phi = pleth_transform(f, &PowerSumTransform::times_m())?;
    crate::symfunc::hall_inner(&omega(&phi), g)
}

pub fn macdonald_expand(f: &SymFunc) -> Result<DeltaExpansion> {
    MacdonaldBasis::get(f.degree())?.expand(f)
}

/// The operator `H̃_μ -> eigen(μ) H̃_μ`.
pub fn apply_diagonal(g: &SymFunc, eigen: impl Fn(&Partition) -> Result<QTRat>) -> Result<SymFunc> {
    let basis = MacdonaldBasis::get(g.degree())?;
    let e = basis.expand(g)?.scale_each(eigen)?;
    Ok(basis.reconstruct(&e))
}

fn alphabet_b(mu: &Partition, primed: bool) -> VirtualAlphabet {
    let mut b = mu.b();
    if primed {
        b = &b - &QTPoly::one();
    }
    VirtualAlphabet::from_poly(&b).expect("B_mu has integer coefficients")
}

/// `f[B_μ]`, or `f[B_μ - 1]` when `primed`.
pub fn eigenvalue(f: &SymFunc, mu: &Partition, primed: bool) -> QTRat {
    eval_alphabet(f, &alphabet_b(mu, primed))
}

/// `Δ_f g`, or `Δ'_f g` when `primed`.
pub fn delta(f_index: &SymFunc, g: &SymFunc, primed: bool) -> Result<SymFunc> {
    apply_diagonal(g, |mu| Ok(eigenvalue(f_index, mu, primed)))
}

pub fn delta_e(k: u32, g: &SymFunc) -> Result<SymFunc> {
    delta(&SymFunc::e(k), g, false)
}

pub fn delta_prime_e(k: u32, g: &SymFunc) -> Result<SymFunc> {
    delta(&SymFunc::e(k), g, true)
}

pub fn delta_h(k: u32, g: &SymFunc) -> Result<SymFunc> {
    delta(&SymFunc::h(k), g, false)
}

/// `∇ H̃_μ = T_μ H̃_μ`.
pub fn nabla(g: &SymFunc) -> Result<SymFunc> {
    apply_diagonal(g, |mu| Ok(QTRat::from_poly(mu.t())))
}

/// `Π H̃_μ = Π_μ H̃_μ`, or its inverse.
pub fn pi_operator(g: &SymFunc, inverse: bool) -> Result<SymFunc> {
    apply_diagonal(g, |mu| {
        let p = QTRat::from_poly(mu.pi());
        if inverse {
            p.inv()
        } else {
            Ok(p)
        }
    })
}

/// `⟨f, g⟩_*`-expansion of `a · H̃_ν`: the coefficients `d^a_{μν}` over `μ`.
pub fn pieri_general(a: &SymFunc, nu: &Partition) -> Result<BTreeMap<Partition, QTRat>> {
    let f = a.multiply(&htilde(nu)?);
    Ok(macdonald_expand(&f)?.coeffs)
}

type PieriMemo = HashMap<(u32, Partition), BTreeMap<Partition, QTRat>>;

/// `c^{(k)}_{μν}` for all `ν ⊂_k μ`, from `h_k^⊥ H̃_μ = Σ c_{μν} H̃_ν`.
pub fn pieri_c_all(k: u32, mu: &Partition) -> Result<BTreeMap<Partition, QTRat>> {
    static MEMO: OnceLock<Mutex<PieriMemo>> = OnceLock::new();
    let key = (k, mu.clone());
    if let Some(v) = MEMO.get_or_init(Default::default).lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let f = skew_h(k, &htilde(mu)?)?;
    let v = macdonald_expand(&f)?.coeffs;
    MEMO.get().unwrap().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// `d^{(k)}_{μν}` for all `μ ⊃_k ν`, from `e_k[X/M] H̃_ν = Σ d_{μν} H̃_μ`.
pub fn pieri_d_all(k: u32, nu: &Partition) -> Result<BTreeMap<Partition, QTRat>> {
    static MEMO: OnceLock<Mutex<PieriMemo>> = OnceLock::new();
    let key = (k, nu.clone());
    if let Some(v) = MEMO.get_or_init(Default::default).lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let a = pleth_transform(&SymFunc::e(k), &PowerSumTransform::x_over_m())?;
    let v = pieri_general(&a, nu)?;
    MEMO.get().unwrap().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn check_pair(k: u32, mu: &Partition, nu: &Partition) -> Result<()> {
    if k == 0 || !mu.contains(nu) || mu.size() != nu.size() + k {
        return Err(Error::Domain(format!("{nu} is not contained in {mu} with {k} fewer cells")));
    }
    Ok(())
}

pub fn pieri_c(k: u32, mu: &Partition, nu: &Partition) -> Result<QTRat> {
    check_pair(k, mu, nu)?;
    Ok(pieri_c_all(k, mu)?.get(nu).cloned().unwrap_or_default())
}

pub fn pieri_d(k: u32, mu: &Partition, nu: &Partition) -> Result<QTRat> {
    check_pair(k, mu, nu)?;
    Ok(pieri_d_all(k, nu)?.get(mu).cloned().unwrap_or_default())
}

/// `H̃_α[M B_β] / Π_α = H̃_β[M B_α] / Π_β`.
pub fn reciprocity_check(alpha: &Partition, beta: &Partition) -> Result<bool> {
    if alpha.is_empty() || beta.is_empty() {
        return Err(Error::Domain("reciprocity needs nonempty partitions".into()));
    }
    let side = |a: &Partition, b: &Partition| -> Result<QTRat> {
        let mb = &crate::qt::m_poly() * &b.b();
        let v = eval_alphabet(&htilde(a)?, &VirtualAlphabet::from_poly(&mb)?);
        v.div(&QTRat::from_poly(a.pi()))
    };
    Ok(side(alpha, beta)? == side(beta, alpha)?)
}

/// `e_n[XY/M] = Σ_μ H̃_μ[X] H̃_μ[Y] / w_μ` with `Y = M B_ν` for every `ν ⊢ n`.
pub fn cauchy_check(n: u32) -> Result<bool> {
    let basis = MacdonaldBasis::get(n)?;
    for nu in enumerate_partitions(n) {
        let b = VirtualAlphabet::from_poly(&nu.b())?;
        let lhs = pleth_transform(&SymFunc::e(n), &PowerSumTransform::alphabet(b))?;
        let mb = VirtualAlphabet::from_poly(&(&crate::qt::m_poly() * &nu.b()))?;
        let mut coeffs = BTreeMap::new();
        for (mu, w) in basis.parts.iter().zip(&basis.w) {
            let y = eval_alphabet(basis.htilde(mu), &mb);
            coeffs.insert(mu.clone(), y.div(&QTRat::from_poly(w.clone()))?);
        }
        let rhs = basis.reconstruct(&DeltaExpansion { degree: n, coeffs });
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
