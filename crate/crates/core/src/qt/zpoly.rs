//! Sparse bivariate polynomials with integer coefficients.
//!
//! Terms are kept sorted ascending by `(q-exponent, t-exponent)` with no zero
//! coefficients. These slices are the working representation underneath
//! [`QTPoly`](super::QTPoly) and [`QTRat`](super::QTRat).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

pub type Exp = (u32, u32);
pub type ZPoly = Vec<(Exp, BigInt)>;

pub fn constant(c: BigInt) -> ZPoly {
    if c.is_zero() {
        Vec::new()
    } else {
        vec![((0, 0), c)]
    }
}

pub fn is_constant(a: &[(Exp, BigInt)]) -> bool {
    a.is_empty() || (a.len() == 1 && a[0].0 == (0, 0))
}

pub fn is_one(a: &[(Exp, BigInt)]) -> bool {
    a.len() == 1 && a[0].0 == (0, 0) && a[0].1.is_one()
}

pub fn from_map(m: BTreeMap<Exp, BigInt>) -> ZPoly {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn neg(a: &[(Exp, BigInt)]) -> ZPoly {
    a.iter().map(|(e, c)| (*e, -c)).collect()
}

fn merge(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)], negate_b: bool) -> ZPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (e, c) in &b[j..] {
        out.push((*e, if negate_b { -c } else { c.clone() }));
    }
    out
}

pub fn add(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> ZPoly {
    merge(a, b, false)
}

pub fn sub(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> ZPoly {
    merge(a, b, true)
}

pub fn scale(a: &[(Exp, BigInt)], c: &BigInt) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    if c.is_one() {
        return a.to_vec();
    }
    a.iter().map(|(e, x)| (*e, x * c)).collect()
}

pub fn shift(a: &[(Exp, BigInt)], by: Exp) -> ZPoly {
    a.iter().map(|((x, y), c)| ((x + by.0, y + by.1), c.clone())).collect()
}

pub fn div_scalar(a: &[(Exp, BigInt)], c: &BigInt) -> ZPoly {
    if c.is_one() {
        return a.to_vec();
    }
    a.iter().map(|(e, x)| (*e, x / c)).collect()
}

/// Positive gcd of all coefficients (zero for the zero polynomial).
pub fn content(a: &[(Exp, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn max_exps(a: &[(Exp, BigInt)]) -> Exp {
    a.iter().fold((0, 0), |m, (e, _)| (m.0.max(e.0), m.1.max(e.1)))
}

pub fn min_exps(a: &[(Exp, BigInt)]) -> Exp {
    a.iter().fold((u32::MAX, u32::MAX), |m, (e, _)| (m.0.min(e.0), m.1.min(e.1)))
}

fn max_bits(a: &[(Exp, BigInt)]) -> u64 {
    a.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
}

pub fn max_norm(a: &[(Exp, BigInt)]) -> BigInt {
    a.iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

pub fn mul(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 {
        return mul_term(b, a[0].0, &a[0].1);
    }
    if b.len() == 1 {
        return mul_term(a, b[0].0, &b[0].1);
    }
    let (ma, mb) = (max_exps(a), max_exps(b));
    let (nq, nt) = ((ma.0 + mb.0 + 1) as usize, (ma.1 + mb.1 + 1) as usize);
    let cells = nq * nt;
    let terms = a.len().min(b.len()) as u64;
    if cells > 1 << 22 {
        let mut acc: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                *acc.entry((ea.0 + eb.0, ea.1 + eb.1)).or_default() += ca * cb;
            }
        }
        return from_map(acc);
    }
    if max_bits(a) + max_bits(b) + 64 - terms.leading_zeros() as u64 <= 125 {
        let mut grid = vec![0i128; cells];
        let bs: Vec<(usize, i128)> =
            b.iter().map(|(e, c)| (e.0 as usize * nt + e.1 as usize, c.to_i128().unwrap())).collect();
        for (ea, ca) in a {
            let ca = ca.to_i128().unwrap();
            let base = ea.0 as usize * nt + ea.1 as usize;
            for (off, cb) in &bs {
                grid[base + off] += ca * cb;
            }
        }
        let mut out = Vec::new();
        for (idx, c) in grid.into_iter().enumerate() {
            if c != 0 {
                out.push((((idx / nt) as u32, (idx % nt) as u32), BigInt::from(c)));
            }
        }
        return out;
    }
    let mut grid = vec![BigInt::zero(); cells];
    for (ea, ca) in a {
        let base = ea.0 as usize * nt + ea.1 as usize;
        for (eb, cb) in b {
            grid[base + eb.0 as usize * nt + eb.1 as usize] += ca * cb;
        }
    }
    grid.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| (((idx / nt) as u32, (idx % nt) as u32), c))
        .collect()
}

pub fn mul_term(a: &[(Exp, BigInt)], e: Exp, c: &BigInt) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|((x, y), k)| ((x + e.0, y + e.1), k * c)).collect()
}

pub fn pow(a: &[(Exp, BigInt)], mut k: u32) -> ZPoly {
    let mut base = a.to_vec();
    let mut acc = constant(BigInt::one());
    while k > 0 {
        if k & 1 == 1 {
            acc = mul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Exact quotient `a / b` over the integers, or `None` if `b` does not divide `a`
/// in `Z[q,t]`. For primitive `b` this coincides with divisibility over `Q`.
pub fn div_exact(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> Option<ZPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.len() == 1 {
        let (be, bc) = &b[0];
        let mut out = Vec::with_capacity(a.len());
        for ((x, y), c) in a {
            if *x < be.0 || *y < be.1 {
                return None;
            }
            let (qq, r) = c.div_rem(bc);
            if !r.is_zero() {
                return None;
            }
            out.push(((x - be.0, y - be.1), qq));
        }
        return Some(out);
    }
    let (ma, mb) = (max_exps(a), max_exps(b));
    if mb.0 > ma.0 || mb.1 > ma.1 {
        return None;
    }
    let (mina, minb) = (min_exps(a), min_exps(b));
    if minb.0 > mina.0 || minb.1 > mina.1 {
        return None;
    }
    let nt = ma.1 as usize + 1;
    let cells = (ma.0 as usize + 1) * nt;
    if cells > 1 << 22 {
        return div_exact_sparse(a, b);
    }
    let mut grid = vec![BigInt::zero(); cells];
    for (e, c) in a {
        grid[e.0 as usize * nt + e.1 as usize] = c.clone();
    }
    let (lead_e, lead_c) = b.last().unwrap();
    let lead_idx = lead_e.0 as usize * nt + lead_e.1 as usize;
    let mut quotient: Vec<(Exp, BigInt)> = Vec::new();
    let mut cursor = cells;
    loop {
        while cursor > 0 && grid[cursor - 1].is_zero() {
            cursor -= 1;
        }
        if cursor == 0 {
            break;
        }
        let idx = cursor - 1;
        let (rx, ry) = ((idx / nt) as u32, (idx % nt) as u32);
        if rx < lead_e.0 || ry < lead_e.1 {
            return None;
        }
        let (qc, r) = grid[idx].div_rem(lead_c);
        if !r.is_zero() {
            return None;
        }
        let sh = (rx - lead_e.0, ry - lead_e.1);
        if sh.1 + mb.1 > ma.1 {
            return None;
        }
        let base = sh.0 as usize * nt + sh.1 as usize;
        for (e, c) in b {
            let at = base + e.0 as usize * nt + e.1 as usize;
            if at == base + lead_idx {
                grid[at] = BigInt::zero();
            } else {
                grid[at] -= &qc * c;
            }
        }
        quotient.push((sh, qc));
    }
    quotient.reverse();
    Some(quotient)
}

fn div_exact_sparse(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> Option<ZPoly> {
    let mut rem: BTreeMap<Exp, BigInt> = a.iter().cloned().collect();
    let (lead_e, lead_c) = b.last().unwrap();
    let mut quotient = Vec::new();
    while let Some((&e, c)) = rem.iter().next_back() {
        if e.0 < lead_e.0 || e.1 < lead_e.1 {
            return None;
        }
        let (qc, r) = c.div_rem(lead_c);
        if !r.is_zero() {
            return None;
        }
        let sh = (e.0 - lead_e.0, e.1 - lead_e.1);
        for (be, bc) in b {
            let k = (be.0 + sh.0, be.1 + sh.1);
            let v = rem.entry(k).or_default();
            *v -= &qc * bc;
            if v.is_zero() {
                rem.remove(&k);
            }
        }
        quotient.push((sh, qc));
    }
    quotient.reverse();
    Some(quotient)
}

/// Primitive part with the lex-least term made positive.
pub fn normalize(a: &[(Exp, BigInt)]) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a[0].1.sign() == Sign::Minus {
        c = -c;
    }
    div_scalar(a, &c)
}

pub fn swap(a: &[(Exp, BigInt)]) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|((x, y), c)| ((*y, *x), c.clone())).collect();
    out.sort_by_key(|u| u.0);
    out
}

pub fn subs_q0(a: &[(Exp, BigInt)]) -> ZPoly {
    a.iter().filter(|(e, _)| e.0 == 0).cloned().collect()
}

pub fn subs_t0(a: &[(Exp, BigInt)]) -> ZPoly {
    a.iter().filter(|(e, _)| e.1 == 0).cloned().collect()
}

pub fn gcd(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> ZPoly {
    super::gcd::gcd(a, b)
}
