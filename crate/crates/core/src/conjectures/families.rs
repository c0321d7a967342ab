//! The families `F_{n,k;p}^{(d,ℓ)}` and `S_{n,k;p}^{(d,ℓ)}`: the defining
//! scalar product, the recursions, and the evaluation through `Π^{-1} ∇ E_{n-ℓ,k}`.

use crate::error::{Error, Result};
use crate::macdonald::{self, enk, nabla, pi_operator, MAX_DEGREE};
use crate::partition::enumerate_partitions;
use crate::qt::{choose2, m_poly, q_binomial, q_int, QTPoly, QTRat};
use crate::symfunc::{eval_alphabet, hall_inner, pleth_transform, PowerSumTransform, SymFunc, VirtualAlphabet};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// `(n, k, p, d, ℓ)`.
pub type Key = (u32, u32, u32, u32, u32);

fn check_domain(n: u32, k: u32, p: u32, d: u32, l: u32) -> Result<()> {
    if n < k + l || n + p < d {
        return Err(Error::Domain(format!("(n,k,p,d,l) = ({n},{k},{p},{d},{l}) needs n >= k + l and n + p >= d")));
    }
    if n + p > MAX_DEGREE {
        return Err(Error::Bound((n + p) as usize, MAX_DEGREE as usize));
    }
    Ok(())
}

fn qpow(e: i64) -> QTPoly {
    QTPoly::qt_pow(e as u32, 0)
}

fn tpow(e: i64) -> QTPoly {
    QTPoly::qt_pow(0, e as u32)
}

fn delta0(xs: &[i64]) -> QTPoly {
    if xs.iter().all(|&x| x == 0) {
        QTPoly::one()
    } else {
        QTPoly::zero()
    }
}

/// `δ_{ℓ,0} q^{C(n-d,2)} [n, n-d]_q [n+p-1, p]_q`, shared by both families.
fn top_value(n: i64, p: i64, d: i64, l: i64) -> QTPoly {
    if l != 0 {
        return QTPoly::zero();
    }
    &(&qpow(choose2(n - d)) * &q_binomial(n, n - d)) * &q_binomial(n + p - 1, p)
}

/// `t^{n-k-ℓ} ⟨Δ_{h_{n-k-ℓ}} Δ_{e_ℓ} e_{n+p-d}[X [k]_q], e_p h_{n-d}⟩`.
pub fn f_direct(n: u32, k: u32, p: u32, d: u32, l: u32) -> Result<QTPoly> {
    check_domain(n, k, p, d, l)?;
    if d > n {
        return Ok(QTPoly::zero());
    }
    let a = n - k - l;
    let g = pleth_transform(&SymFunc::e(n + p - d), &PowerSumTransform::times_q_int(k))?;
    let (ha, el) = (SymFunc::h(a), SymFunc::e(l));
    let f = macdonald::apply_diagonal(&g, |mu| {
        Ok(&macdonald::eigenvalue(&ha, mu, false) * &macdonald::eigenvalue(&el, mu, false))
    })?;
    let v = hall_inner(&f, &SymFunc::e(p).multiply(&SymFunc::h(n - d)))?;
    Ok(&v.is_polynomial()? * &tpow(a as i64))
}

/// `Σ_{γ ⊢ n+p-d} (Π^{-1} ∇ E_{n-ℓ,k})[M B_γ] Π_γ / w_γ e_ℓ[B_γ] e_p[B_γ]`.
///
/// `E_{m,0}` does not exist, so `k = 0` returns the initial condition
/// `δ_{n,0} δ_{p,0} δ_{d,0} δ_{ℓ,0}` of the recursion instead.
pub fn f_via_nabla_enk(n: u32, k: u32, p: u32, d: u32, l: u32) -> Result<QTPoly> {
    check_domain(n, k, p, d, l)?;
    if k == 0 {
        return Ok(delta0(&[n as i64, p as i64, d as i64, l as i64]));
    }
    let g = pi_operator(&nabla(&enk(n - l, k)?)?, true)?;
    let (el, ep) = (SymFunc::e(l), SymFunc::e(p));
    let mut acc = QTRat::zero();
    for gamma in enumerate_partitions(n + p - d) {
        let b = gamma.b();
        let mb = VirtualAlphabet::from_poly(&(&m_poly() * &b))?;
        let ba = VirtualAlphabet::from_poly(&b)?;
        let x = eval_alphabet(&g, &mb);
        if x.is_zero() {
            continue;
        }
        let weight = QTRat::new(gamma.pi(), gamma.w())?;
        let term = &(&x * &weight) * &(&eval_alphabet(&el, &ba) * &eval_alphabet(&ep, &ba));
        acc = &acc + &term;
    }
    acc.is_polynomial()
}

/// Memoized values of both recursions, filled layer by layer in `n`.
///
/// Every right-hand side refers only to entries with smaller `n` (and, for `S`,
/// to `F` at the same key), so filling `n = 0, 1, ...` in order evaluates each
/// entry exactly once without recursion.
#[derive(Default, Debug)]
pub struct FTable {
    f: HashMap<Key, QTPoly>,
    s: HashMap<Key, QTPoly>,
    filled: (u32, u32),
}

impl FTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Entries with `n <= max_n`, `p <= max_p` and every admissible `k, d, ℓ`.
    pub fn fill(&mut self, max_n: u32, max_p: u32) -> Result<()> {
        if max_n + max_p > MAX_DEGREE {
            return Err(Error::Bound((max_n + max_p) as usize, MAX_DEGREE as usize));
        }
        if max_n <= self.filled.0 && max_p <= self.filled.1 && !self.f.is_empty() {
            return Ok(());
        }
        let (max_n, max_p) = (max_n.max(self.filled.0), max_p.max(self.filled.1));
        for n in 1..=max_n {
            for p in 0..=max_p {
                for k in 1..=n {
                    for l in 0..=n - k {
                        for d in 0..=n + p {
                            let key = (n, k, p, d, l);
                            if self.f.contains_key(&key) {
                                continue;
                            }
                            let f = self.f_step(key);
                            self.f.insert(key, f);
                            if d <= n {
                                let s = self.s_step(key);
                                self.s.insert(key, s);
                            }
                        }
                    }
                }
            }
        }
        self.filled = (max_n, max_p);
        Ok(())
    }

    /// `F` with the zero conventions: negative or inadmissible parameters give 0.
    pub fn f(&self, n: i64, k: i64, p: i64, d: i64, l: i64) -> QTPoly {
        self.lookup(&self.f, n, k, p, d, l, n + p)
    }

    /// `S`, which vanishes for `d > n` because `h_{n-d} = 0` there.
    pub fn s(&self, n: i64, k: i64, p: i64, d: i64, l: i64) -> QTPoly {
        self.lookup(&self.s, n, k, p, d, l, n)
    }

    #[allow(clippy::too_many_arguments)]
    fn lookup(&self, map: &HashMap<Key, QTPoly>, n: i64, k: i64, p: i64, d: i64, l: i64, dmax: i64) -> QTPoly {
        if [n, k, p, d, l].iter().any(|&x| x < 0) || n < k + l || d > dmax {
            return QTPoly::zero();
        }
        if n == 0 || k == 0 {
            return delta0(&[n, p, d, l]);
        }
        let key = (n as u32, k as u32, p as u32, d as u32, l as u32);
        map.get(&key).cloned().unwrap_or_else(|| panic!("table entry {key:?} requested before it was filled"))
    }

    fn f_step(&self, (n, k, p, d, l): Key) -> QTPoly {
        let (n, k, p, d, l) = (n as i64, k as i64, p as i64, d as i64, l as i64);
        if k == n {
            return top_value(n, p, d, l);
        }
        let mut acc = QTPoly::zero();
        for j in 0..=p {
            for s in 0..=k {
                let outer = &(&qpow(choose2(s)) * &q_binomial(k, s)) * &q_binomial(k + j - 1, j);
                let mut inner = QTPoly::zero();
                for u in 0..=n - k - l {
                    for v in 0..=s + j {
                        let prev = self.f(n - k, u + v, p - j, d - k + s, l - v);
                        if prev.is_zero() {
                            continue;
                        }
                        let c = &(&qpow(choose2(v)) * &q_binomial(s + j, v)) * &q_binomial(s + j + u - 1, u);
                        inner = &inner + &(&c * &prev);
                    }
                }
                acc = &acc + &(&(&outer * &tpow(p - j)) * &inner);
            }
        }
        &acc * &tpow(n - k - l)
    }

    fn s_step(&self, (n, k, p, d, l): Key) -> QTPoly {
        let (n, k, p, d, l) = (n as i64, k as i64, p as i64, d as i64, l as i64);
        if k == n {
            return top_value(n, p, d, l);
        }
        let mut acc = QTPoly::zero();
        for j in 0..=p {
            for s in 0..=k {
                let outer = &(&qpow(choose2(s)) * &q_binomial(s + j, s)) * &q_binomial(k + j - 1, s + j - 1);
                if outer.is_zero() {
                    continue;
                }
                let mut inner = QTPoly::zero();
                for u in 0..=n - l - k {
                    for v in 0..=s + j {
                        let prev = self.s(n - k, u + v, p - j, d - k + s, l - v);
                        if prev.is_zero() {
                            continue;
                        }
                        let c = &(&qpow(choose2(v)) * &q_binomial(u + v, v)) * &q_binomial(s + j + u - 1, s + j - v);
                        inner = &inner + &(&c * &prev);
                    }
                }
                acc = &acc + &(&(&outer * &tpow(p - j)) * &inner);
            }
        }
        let rest = &(&acc * &qpow(k)) * &tpow(n - l - k);
        &self.f(n, k, p, d, l) + &rest
    }
}

fn shared_table(n: u32, p: u32) -> Result<std::sync::MutexGuard<'static, FTable>> {
    static TABLE: OnceLock<Mutex<FTable>> = OnceLock::new();
    let mut guard = TABLE.get_or_init(Default::default).lock().unwrap();
    guard.fill(n, p)?;
    Ok(guard)
}

/// `F` from its recursion and initial conditions.
pub fn f_recursive(n: u32, k: u32, p: u32, d: u32, l: u32) -> Result<QTPoly> {
    check_domain(n, k, p, d, l)?;
    Ok(shared_table(n, p)?.f(n as i64, k as i64, p as i64, d as i64, l as i64))
}

/// `S` from its recursion, which takes `F` as its inhomogeneous term.
pub fn s_recursive(n: u32, k: u32, p: u32, d: u32, l: u32) -> Result<QTPoly> {
    check_domain(n, k, p, d, l)?;
    Ok(shared_table(n, p)?.s(n as i64, k as i64, p as i64, d as i64, l as i64))
}

/// `[n]_q F / [k]_q`, failing when the division leaves a remainder.
pub fn s_from_f(n: u32, k: u32, p: u32, d: u32, l: u32) -> Result<QTPoly> {
    if k == 0 {
        return Err(Error::Domain("S is defined through F only for k >= 1".into()));
    }
    let f = f_recursive(n, k, p, d, l)?;
    (&q_int(n) * &f)
        .div_exact(&q_int(k))?
        .ok_or_else(|| Error::NotPolynomial(format!("[{k}]_q does not divide [{n}]_q F_({n},{k};{p})^({d},{l})")))
}

/// `Σ_{k=1}^{n-ℓ} F` predicted by `⟨Δ_{h_p} Δ'_{e_{n-ℓ-1}} e_n, e_{n-d} h_d⟩`.
pub fn f_sum_closed(n: u32, p: u32, d: u32, l: u32) -> Result<QTPoly> {
    if n < l + 1 || d > n {
        return Err(Error::Domain(format!("(n,p,d,l) = ({n},{p},{d},{l}) needs n > l and n >= d")));
    }
    let (hp, e) = (SymFunc::h(p), SymFunc::e(n - l - 1));
    let g = macdonald::apply_diagonal(&SymFunc::e(n), |mu| {
        Ok(&macdonald::eigenvalue(&hp, mu, false) * &macdonald::eigenvalue(&e, mu, true))
    })?;
    hall_inner(&g, &SymFunc::e(n - d).multiply(&SymFunc::h(d)))?.is_polynomial()
}

/// `Σ_{k=1}^{n-ℓ} S` predicted by `[n-ℓ]_t / [n]_t ⟨Δ_{h_p} Δ_{e_{n-ℓ}} ω(p_n), e_{n-d} h_d⟩`.
pub fn s_sum_closed(n: u32, p: u32, d: u32, l: u32) -> Result<QTPoly> {
    if n < l + 1 || d > n {
        return Err(Error::Domain(format!("(n,p,d,l) = ({n},{p},{d},{l}) needs n > l and n >= d")));
    }
    let (hp, e) = (SymFunc::h(p), SymFunc::e(n - l));
    let g = macdonald::apply_diagonal(&crate::symfunc::omega(&SymFunc::p(n)), |mu| {
        Ok(&macdonald::eigenvalue(&hp, mu, false) * &macdonald::eigenvalue(&e, mu, false))
    })?;
    let v = hall_inner(&g, &SymFunc::e(n - d).multiply(&SymFunc::h(d)))?;
    let factor = QTRat::new(crate::qt::t_int(n - l), crate::qt::t_int(n))?;
    (&v * &factor).is_polynomial()
}
