//! Greatest common divisors in `Z[q,t]`.
//!
//! The fast path is the heuristic gcd of Char, Geddes and Gonnet: evaluate at a
//! large integer, take an integer gcd, and lift the result back ξ-adically. A
//! candidate is accepted only after it divides both inputs exactly. When the
//! heuristic gives up, a primitive polynomial remainder sequence over `Z[t][q]`
//! with content recursion produces the answer.

use super::zpoly::{self, Exp, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

const HEU_ATTEMPTS: usize = 6;

/// Dense univariate polynomial, index = degree, no trailing zeros.
pub(crate) type UPoly = Vec<BigInt>;

fn u_trim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn u_deg(a: &UPoly) -> usize {
    a.len().saturating_sub(1)
}

fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_scalar(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient.
fn u_pp(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    u_div_scalar(a, &c)
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(out)
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(out)
}

fn u_scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Sparse pseudo-remainder: repeatedly cancel the leading term after scaling by lc(b).
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let lc = b.last().unwrap();
    let db = u_deg(b);
    let mut r = a.clone();
    while !r.is_empty() && u_deg(&r) >= db {
        let top = r.last().unwrap().clone();
        let sh = u_deg(&r) - db;
        let mut next = u_scale(&r, lc);
        for (i, c) in b.iter().enumerate() {
            next[i + sh] -= &top * c;
        }
        r = u_trim(next);
    }
    r
}

fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if u_deg(a) < u_deg(b) {
        return None;
    }
    let lc = b.last().unwrap();
    let mut r = a.clone();
    let db = u_deg(b);
    let mut quot = vec![BigInt::zero(); u_deg(a) - db + 1];
    while !r.is_empty() && u_deg(&r) >= db {
        let (qc, rem) = r.last().unwrap().div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        let sh = u_deg(&r) - db;
        for (i, c) in b.iter().enumerate() {
            r[i + sh] -= &qc * c;
        }
        quot[sh] = qc;
        r = u_trim(r);
    }
    if r.is_empty() {
        Some(u_trim(quot))
    } else {
        None
    }
}

fn u_eval(a: &UPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn u_norm(a: &UPoly) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Symmetric ξ-adic digits of `g`.
fn lift_digits(mut g: BigInt, xi: &BigInt) -> UPoly {
    let half = xi >> 1usize;
    let mut out = Vec::new();
    while !g.is_zero() {
        let mut r = g.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        g = (g - &r) / xi;
        out.push(r);
    }
    out
}

fn grow(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011) + 1
}

fn u_gcd_heu(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let mut xi = u_norm(a).min(u_norm(b)) * 2 + 29;
    for _ in 0..HEU_ATTEMPTS {
        let g = u_eval(a, &xi).gcd(&u_eval(b, &xi));
        let cand = u_pp(&u_trim(lift_digits(g, &xi)));
        if !cand.is_empty() && u_div_exact(a, &cand).is_some() && u_div_exact(b, &cand).is_some() {
            return Some(cand);
        }
        xi = grow(&xi);
    }
    None
}

fn u_gcd_prs(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut a, mut b) = (u_pp(a), u_pp(b));
    if u_deg(&a) < u_deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = u_prem(&a, &b);
        a = b;
        b = u_pp(&r);
    }
    u_pp(&a)
}

/// Full gcd in `Z[x]`, content included, leading coefficient positive.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_pp(b).iter().map(|c| c * u_content(b)).collect();
    }
    if b.is_empty() {
        return u_pp(a).iter().map(|c| c * u_content(a)).collect();
    }
    let g = u_content(a).gcd(&u_content(b));
    let (pa, pb) = (u_pp(a), u_pp(b));
    let core = if pa.len() == 1 || pb.len() == 1 {
        vec![BigInt::one()]
    } else if pa == pb {
        pa
    } else {
        u_gcd_heu(&pa, &pb).unwrap_or_else(|| u_gcd_prs(&pa, &pb))
    };
    u_scale(&core, &g)
}

// Bivariate view: index = q-degree, entries are polynomials in t.
type BPoly = Vec<UPoly>;

fn to_bpoly(a: &[(Exp, BigInt)]) -> BPoly {
    let m = zpoly::max_exps(a);
    let mut out = vec![Vec::new(); m.0 as usize + 1];
    for ((x, y), c) in a {
        let row: &mut UPoly = &mut out[*x as usize];
        if row.len() <= *y as usize {
            row.resize(*y as usize + 1, BigInt::zero());
        }
        row[*y as usize] = c.clone();
    }
    out
}

fn from_bpoly(a: &BPoly) -> ZPoly {
    let mut out = Vec::new();
    for (x, row) in a.iter().enumerate() {
        for (y, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.push(((x as u32, y as u32), c.clone()));
            }
        }
    }
    out
}

fn b_trim(mut a: BPoly) -> BPoly {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn b_content(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_content(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter().map(|x| u_div_exact(x, c).expect("content divides every coefficient")).collect()
}

fn b_pp(a: &BPoly) -> BPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let c = b_content(a);
    let mut out = b_div_content(a, &c);
    if out.last().unwrap().last().unwrap().is_negative() {
        for row in out.iter_mut() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }
    out
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let lc = b.last().unwrap();
    let db = b.len() - 1;
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let top = r.last().unwrap().clone();
        let sh = r.len() - 1 - db;
        let mut next: BPoly = r.iter().map(|x| u_mul(x, lc)).collect();
        for (i, c) in b.iter().enumerate() {
            next[i + sh] = u_sub(&next[i + sh], &u_mul(&top, c));
        }
        r = b_trim(next);
    }
    r
}

/// Primitive remainder sequence gcd of two primitive polynomials.
pub(crate) fn gcd_prs(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> ZPoly {
    let (a, b) = (b_trim(to_bpoly(a)), b_trim(to_bpoly(b)));
    let (ca, cb) = (b_content(&a), b_content(&b));
    let c = u_gcd(&ca, &cb);
    let (mut a, mut b) = (b_div_content(&a, &ca), b_div_content(&b, &cb));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = b_prem(&a, &b);
        a = b;
        b = b_pp(&r);
    }
    let g = b_pp(&a);
    let g: BPoly = g.iter().map(|x| u_mul(x, &c)).collect();
    zpoly::normalize(&from_bpoly(&g))
}

fn eval_q(a: &[(Exp, BigInt)], xi: &BigInt) -> UPoly {
    let m = zpoly::max_exps(a);
    let mut rows: Vec<Vec<(u32, &BigInt)>> = vec![Vec::new(); m.1 as usize + 1];
    for ((x, y), c) in a {
        rows[*y as usize].push((*x, c));
    }
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        // row is sorted ascending by q-exponent
        let mut acc = BigInt::zero();
        let mut deg = row.last().map(|r| r.0).unwrap_or(0);
        for (x, c) in row.iter().rev() {
            while deg > *x {
                acc *= xi;
                deg -= 1;
            }
            acc += *c;
        }
        while deg > 0 {
            acc *= xi;
            deg -= 1;
        }
        out.push(acc);
    }
    u_trim(out)
}

fn gcd_heu(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> Option<ZPoly> {
    let mut xi = zpoly::max_norm(a).min(zpoly::max_norm(b)) * 2 + 29;
    for _ in 0..HEU_ATTEMPTS {
        let g = u_gcd(&eval_q(a, &xi), &eval_q(b, &xi));
        let mut cand = Vec::new();
        for (y, c) in g.into_iter().enumerate() {
            for (x, d) in lift_digits(c, &xi).into_iter().enumerate() {
                if !d.is_zero() {
                    cand.push(((x as u32, y as u32), d));
                }
            }
        }
        cand.sort_by_key(|u| u.0);
        let cand = zpoly::normalize(&cand);
        if !cand.is_empty() && zpoly::div_exact(a, &cand).is_some() && zpoly::div_exact(b, &cand).is_some() {
            return Some(cand);
        }
        xi = grow(&xi);
    }
    None
}

/// Gcd in `Z[q,t]`: integer content times the primitive gcd, lex-least term positive.
pub fn gcd(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)]) -> ZPoly {
    if a.is_empty() {
        return abs_normalized(b);
    }
    if b.is_empty() {
        return abs_normalized(a);
    }
    let (ma, mb) = (zpoly::min_exps(a), zpoly::min_exps(b));
    let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
    let a1 = zpoly::div_exact(a, &[(ma, BigInt::one())]).unwrap();
    let b1 = zpoly::div_exact(b, &[(mb, BigInt::one())]).unwrap();
    let (ca, cb) = (zpoly::content(&a1), zpoly::content(&b1));
    let g_int = ca.gcd(&cb);
    let a2 = zpoly::normalize(&a1);
    let b2 = zpoly::normalize(&b1);
    let core = if zpoly::is_constant(&a2) || zpoly::is_constant(&b2) {
        zpoly::constant(BigInt::one())
    } else if a2 == b2 {
        a2
    } else if zpoly::div_exact(&a2, &b2).is_some() {
        b2
    } else if zpoly::div_exact(&b2, &a2).is_some() {
        a2
    } else {
        gcd_heu(&a2, &b2).unwrap_or_else(|| gcd_prs(&a2, &b2))
    };
    zpoly::mul_term(&core, mono, &g_int)
}

fn abs_normalized(a: &[(Exp, BigInt)]) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    if a[0].1.is_negative() {
        zpoly::neg(a)
    } else {
        a.to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(terms: &[((u32, u32), i64)]) -> ZPoly {
        let mut v: ZPoly = terms.iter().map(|(e, c)| (*e, BigInt::from(*c))).collect();
        v.sort_by_key(|u| u.0);
        v
    }

    #[test]
    fn shared_binomial_factor() {
        // (1 - q t)(1 + q) and (1 - q t)(1 - t^2)
        let f = zp(&[((0, 0), 1), ((1, 1), -1)]);
        let a = zpoly::mul(&f, &zp(&[((0, 0), 1), ((1, 0), 1)]));
        let b = zpoly::mul(&f, &zp(&[((0, 0), 1), ((0, 2), -1)]));
        assert_eq!(gcd(&a, &b), f);
        assert_eq!(gcd_prs(&a, &b), f);
    }

    #[test]
    fn coprime_inputs() {
        let a = zp(&[((0, 0), 1), ((1, 0), -1)]);
        let b = zp(&[((0, 0), 1), ((0, 1), -1)]);
        assert_eq!(gcd(&a, &b), zp(&[((0, 0), 1)]));
    }

    #[test]
    fn monomial_and_integer_content() {
        let a = zp(&[((2, 1), 6), ((3, 1), 6)]);
        let b = zp(&[((1, 2), 4)]);
        assert_eq!(gcd(&a, &b), zp(&[((1, 1), 2)]));
    }

    #[test]
    fn univariate_gcd_matches_prs() {
        let a: UPoly = [-1, 0, 1].iter().map(|x| BigInt::from(*x)).collect();
        let b: UPoly = [1, 2, 1].iter().map(|x| BigInt::from(*x)).collect();
        let expect: UPoly = vec![BigInt::one(), BigInt::one()];
        assert_eq!(u_gcd(&a, &b), expect);
        assert_eq!(u_gcd_prs(&a, &b), expect);
    }
}
