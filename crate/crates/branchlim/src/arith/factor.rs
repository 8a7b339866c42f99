//! Factorization of univariate polynomials into Q-irreducibles.
//!
//! Pipeline: Yun's squarefree decomposition, then for each squarefree part a
//! Zassenhaus round: Berlekamp factorization modulo a small prime, quadratic
//! Hensel lifting past the Mignotte bound, and subset recombination verified
//! by exact trial division. Everything is deterministic: the prime search and
//! the subset enumeration follow fixed orders.

use super::unipoly::{squarefree_part, UniPoly};
use super::{ArithError, Int, Rat};
use num::{One, Signed, Zero};

/// Factor a nonzero polynomial over Q. Returns monic irreducible factors with
/// multiplicities, sorted by (degree, coefficients); the product of the
/// factors to their multiplicities equals the input up to a rational unit.
pub fn factor_rational(p: &UniPoly) -> Result<Vec<(UniPoly, u32)>, ArithError> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let mut out: Vec<(UniPoly, u32)> = Vec::new();
    for (part, mult) in yun_squarefree(p)? {
        for irr in factor_squarefree(&part) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| cmp_poly(a, b));
    Ok(out)
}

fn cmp_poly(a: &UniPoly, b: &UniPoly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| {
            for k in (0..=a.degree().max(0) as usize).rev() {
                let c = a.coeff(k).cmp(&b.coeff(k));
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
}

/// Yun's algorithm: f = prod p_i^i with the p_i squarefree, pairwise coprime.
pub fn yun_squarefree(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let f = f.monic();
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut parts = Vec::new();
    if g.degree() == 0 {
        parts.push((f, 1));
        return Ok(parts);
    }
    let mut c = f.div_exact(&g);
    let mut d = df.div_exact(&g).sub(&c.derivative());
    let mut i = 1u32;
    while c.degree() > 0 {
        let p = c.gcd(&d);
        if p.degree() > 0 {
            parts.push((p.monic(), i));
        }
        c = c.div_exact(&p);
        d = d.div_exact(&p).sub(&c.derivative());
        i += 1;
    }
    Ok(parts)
}

/// Factor a monic squarefree polynomial into monic irreducibles.
fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    if f.degree() <= 1 {
        return vec![f.monic()];
    }
    let (prim, _) = f.primitive_int();
    let int_factors = zassenhaus(&prim);
    int_factors
        .iter()
        .map(|c| UniPoly::from_int_coeffs(c).monic())
        .collect()
}

// ---------------------------------------------------------------------------
// Arithmetic mod a small prime
// ---------------------------------------------------------------------------

type ModPoly = Vec<u64>; // ascending coefficients in [0, p)

fn mp_trim(a: &mut ModPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn mp_deg(a: &ModPoly) -> i64 {
    a.len() as i64 - 1
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn mp_add(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out[k] = (x + y) % p;
    }
    mp_trim(&mut out);
    out
}

fn mp_sub(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out[k] = (x + p - y) % p;
    }
    mp_trim(&mut out);
    out
}

fn mp_mul(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    mp_trim(&mut out);
    out
}

fn mp_divrem(a: &ModPoly, b: &ModPoly, p: u64) -> (ModPoly, ModPoly) {
    assert!(!b.is_empty());
    let mut rem = a.clone();
    let db = mp_deg(b);
    let binv = invmod(*b.last().unwrap(), p);
    let qlen = (mp_deg(a) - db + 1).max(0) as usize;
    let mut quo = vec![0u64; qlen];
    while mp_deg(&rem) >= db {
        let shift = (mp_deg(&rem) - db) as usize;
        let c = mulmod(*rem.last().unwrap(), binv, p);
        quo[shift] = c;
        for (j, &y) in b.iter().enumerate() {
            rem[shift + j] = (rem[shift + j] + p - mulmod(c, y, p)) % p;
        }
        mp_trim(&mut rem);
    }
    mp_trim(&mut quo);
    (quo, rem)
}

fn mp_gcd(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let (_, r) = mp_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    mp_monic(&a, p)
}

fn mp_monic(a: &ModPoly, p: u64) -> ModPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let inv = invmod(*a.last().unwrap(), p);
    a.iter().map(|&c| mulmod(c, inv, p)).collect()
}

/// Extended gcd: returns (s, t) with s*a + t*b = 1; a, b must be coprime.
fn mp_bezout(a: &ModPoly, b: &ModPoly, p: u64) -> (ModPoly, ModPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = mp_divrem(&r0, &r1, p);
        let s = mp_sub(&s0, &mp_mul(&q, &s1, p), p);
        let t = mp_sub(&t0, &mp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(mp_deg(&r0), 0, "bezout of non-coprime polynomials");
    let inv = invmod(r0[0], p);
    let scale = |v: &ModPoly| v.iter().map(|&c| mulmod(c, inv, p)).collect();
    (scale(&s0), scale(&t0))
}

fn mp_powmod(a: &ModPoly, mut e: u64, f: &ModPoly, p: u64) -> ModPoly {
    let mut acc = vec![1u64];
    let mut base = mp_divrem(a, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mp_divrem(&mp_mul(&acc, &base, p), f, p).1;
        }
        base = mp_divrem(&mp_mul(&base, &base, p), f, p).1;
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// Berlekamp factorization mod p (deterministic, small p)
// ---------------------------------------------------------------------------

/// Factor a monic squarefree polynomial mod p into monic irreducibles.
fn berlekamp(f: &ModPoly, p: u64) -> Vec<ModPoly> {
    let n = mp_deg(f) as usize;
    if n <= 1 {
        return vec![f.clone()];
    }
    // Petr-Berlekamp matrix: rows are x^(i p) mod f.
    let xp = mp_powmod(&vec![0, 1], p, f, p);
    let mut row = vec![1u64]; // x^(0*p)
    let mut mat = vec![vec![0u64; n]; n];
    for i in 0..n {
        for (j, &c) in row.iter().enumerate() {
            mat[i][j] = c;
        }
        row = mp_divrem(&mp_mul(&row, &xp, p), f, p).1;
    }
    // Q - I
    for i in 0..n {
        mat[i][i] = (mat[i][i] + p - 1) % p;
    }
    let basis = nullspace_mod(&mat, p);
    let r = basis.len();
    if r == 1 {
        return vec![f.clone()];
    }
    let mut factors = vec![f.clone()];
    'outer: for v in basis.iter() {
        let mut g: ModPoly = v.clone();
        mp_trim(&mut g);
        if mp_deg(&g) < 1 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors.drain(..) {
            if mp_deg(&h) <= 1 {
                next.push(h);
                continue;
            }
            let mut rem = h.clone();
            for c in 0..p {
                if mp_deg(&rem) <= 0 {
                    break;
                }
                let shifted = mp_sub(&g, &vec![c], p);
                let d = mp_gcd(&rem, &shifted, p);
                if mp_deg(&d) >= 1 && mp_deg(&d) < mp_deg(&rem) {
                    rem = mp_divrem(&rem, &d, p).0;
                    next.push(d);
                }
            }
            if mp_deg(&rem) >= 1 {
                next.push(rem);
            }
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    factors.sort();
    factors
}

/// Nullspace basis of a (row-major) matrix over F_p; vectors act as
/// polynomial coefficient lists. The matrix maps v to v*M (v row vector).
fn nullspace_mod(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    // We need v with v*M = 0, i.e. the left nullspace; transpose and reduce.
    let n = mat.len();
    let mut a = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[j][i] = mat[i][j];
        }
    }
    // Gauss-Jordan on a, tracking pivot columns.
    let mut pivot_of_col = vec![usize::MAX; n];
    let mut row = 0;
    for col in 0..n {
        let mut piv = row;
        while piv < n && a[piv][col] == 0 {
            piv += 1;
        }
        if piv == n {
            continue;
        }
        a.swap(row, piv);
        let inv = invmod(a[row][col], p);
        for j in 0..n {
            a[row][j] = mulmod(a[row][j], inv, p);
        }
        for i in 0..n {
            if i != row && a[i][col] != 0 {
                let c = a[i][col];
                for j in 0..n {
                    a[i][j] = (a[i][j] + p - mulmod(c, a[row][j], p)) % p;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
    }
    let mut basis = Vec::new();
    for col in 0..n {
        if pivot_of_col[col] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; n];
        v[col] = 1;
        for c in 0..n {
            let r = pivot_of_col[c];
            if r != usize::MAX {
                v[c] = (p - a[r][col]) % p;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hensel lifting (big-integer coefficients mod m)
// ---------------------------------------------------------------------------

type IntPoly = Vec<Int>;

fn ip_trim(a: &mut IntPoly) {
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
}

fn ip_deg(a: &IntPoly) -> i64 {
    a.len() as i64 - 1
}

fn ip_reduce(a: &IntPoly, m: &Int) -> IntPoly {
    let mut out: IntPoly = a
        .iter()
        .map(|c| {
            let mut r = c % m;
            if r.is_negative() {
                r += m;
            }
            r
        })
        .collect();
    ip_trim(&mut out);
    out
}

fn ip_add(a: &IntPoly, b: &IntPoly, m: &Int) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for k in 0..n {
        let mut c = a.get(k).cloned().unwrap_or_else(Int::zero)
            + b.get(k).cloned().unwrap_or_else(Int::zero);
        c %= m;
        if c.is_negative() {
            c += m;
        }
        out[k] = c;
    }
    ip_trim(&mut out);
    out
}

fn ip_sub(a: &IntPoly, b: &IntPoly, m: &Int) -> IntPoly {
    let neg: IntPoly = b.iter().map(|c| -c.clone()).collect();
    ip_add(a, &neg, m)
}

fn ip_mul(a: &IntPoly, b: &IntPoly, m: &Int) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    for c in out.iter_mut() {
        *c %= m;
        if c.is_negative() {
            *c += m;
        }
    }
    ip_trim(&mut out);
    out
}

/// Division by a monic polynomial, coefficients mod m.
fn ip_divrem_monic(a: &IntPoly, b: &IntPoly, m: &Int) -> (IntPoly, IntPoly) {
    assert!(b.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let db = ip_deg(b);
    let mut rem = a.clone();
    let qlen = (ip_deg(a) - db + 1).max(0) as usize;
    let mut quo = vec![Int::zero(); qlen];
    while ip_deg(&rem) >= db {
        let shift = (ip_deg(&rem) - db) as usize;
        let c = rem.last().unwrap().clone();
        quo[shift] = c.clone();
        for (j, y) in b.iter().enumerate() {
            let mut v = &rem[shift + j] - &c * y;
            v %= m;
            if v.is_negative() {
                v += m;
            }
            rem[shift + j] = v;
        }
        ip_trim(&mut rem);
    }
    ip_trim(&mut quo);
    (ip_reduce(&quo, m), rem)
}

/// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
/// g monic, to the same data mod m^2.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &Int,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = ip_sub(f, &ip_mul(g, h, &m2), &m2);
    let te = ip_mul(t, &e, &m2);
    let (q, r) = ip_divrem_monic(&te, g, &m2);
    let g1 = ip_add(g, &r, &m2);
    let h1 = ip_add(h, &ip_add(&ip_mul(s, &e, &m2), &ip_mul(&q, h, &m2), &m2), &m2);
    // refresh the Bezout pair
    let one = vec![Int::one()];
    let b = ip_sub(&ip_add(&ip_mul(s, &g1, &m2), &ip_mul(t, &h1, &m2), &m2), &one, &m2);
    let sb = ip_mul(s, &b, &m2);
    let (q2, r2) = ip_divrem_monic(&sb, &h1, &m2);
    let s1 = ip_sub(s, &r2, &m2);
    let t1 = ip_sub(t, &ip_add(&ip_mul(t, &b, &m2), &ip_mul(&q2, &g1, &m2), &m2), &m2);
    (g1, h1, s1, t1)
}

/// Lift a pairwise-coprime monic factorization of the monic `f` from mod p to
/// mod p^(2^k) >= target by recursive binary splitting.
fn hensel_lift_tree(f: &IntPoly, factors: &[ModPoly], p: u64, target: &Int) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let pint = Int::from(p);
    let prod = |fs: &[ModPoly]| -> ModPoly {
        let mut acc = vec![1u64];
        for g in fs {
            acc = mp_mul(&acc, g, p);
        }
        acc
    };
    let gp = prod(left);
    let hp = prod(right);
    let (sp, tp) = mp_bezout(&gp, &hp, p);
    let to_ip = |v: &ModPoly| -> IntPoly { v.iter().map(|&c| Int::from(c)).collect() };
    let mut g = to_ip(&gp);
    let mut h = to_ip(&hp);
    let mut s = to_ip(&sp);
    let mut t = to_ip(&tp);
    let mut m = pint;
    while &m < target {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let mut out = hensel_lift_tree(&g, left, p, target);
    out.extend(hensel_lift_tree(&h, right, p, target));
    out
}

// ---------------------------------------------------------------------------
// Zassenhaus driver
// ---------------------------------------------------------------------------

fn int_poly_norm1(f: &[Int]) -> Int {
    f.iter().map(|c| c.abs()).sum()
}

fn primitive_part(f: &[Int]) -> IntPoly {
    let mut content = Int::zero();
    for c in f {
        content = super::int_gcd(&content, c);
    }
    if content.is_zero() {
        return f.to_vec();
    }
    if f.last().unwrap().is_negative() {
        content = -content;
    }
    f.iter().map(|c| c / &content).collect()
}

fn ip_divides(f: &[Int], g: &[Int]) -> Option<IntPoly> {
    // exact division over Q, then integrality by primitivity (Gauss)
    let fq = UniPoly::from_int_coeffs(f);
    let gq = UniPoly::from_int_coeffs(g);
    let (q, r) = fq.div_rem(&gq);
    if !r.is_zero() {
        return None;
    }
    let (prim, _) = q.primitive_int();
    Some(prim)
}

/// Factor a primitive squarefree integer polynomial into primitive integer
/// irreducibles (positive leading coefficients, sorted).
fn zassenhaus(f: &[Int]) -> Vec<IntPoly> {
    let n = ip_deg(&f.to_vec());
    if n <= 1 {
        return vec![primitive_part(f)];
    }
    // deterministic prime search
    let mut p = 0u64;
    for cand in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73]
        .into_iter()
        .chain((75..10_000).filter(|k| is_small_prime(*k)))
    {
        let pc = Int::from(cand);
        if (f.last().unwrap() % &pc).is_zero() {
            continue;
        }
        let fp: ModPoly = {
            let mut v: Vec<u64> = f
                .iter()
                .map(|c| {
                    let mut r = c % &pc;
                    if r.is_negative() {
                        r += &pc;
                    }
                    u64::try_from(r).unwrap()
                })
                .collect();
            mp_trim(&mut v);
            v
        };
        let dfp: ModPoly = {
            let mut v = Vec::new();
            for (k, c) in fp.iter().enumerate().skip(1) {
                v.push(mulmod(*c, k as u64 % cand, cand));
            }
            mp_trim(&mut v);
            v
        };
        if mp_deg(&mp_gcd(&fp, &dfp, cand)) == 0 {
            p = cand;
            break;
        }
    }
    assert!(p != 0, "no good prime found for squarefree polynomial");

    let pc = Int::from(p);
    let fp: ModPoly = {
        let mut v: Vec<u64> = f
            .iter()
            .map(|c| {
                let mut r = c % &pc;
                if r.is_negative() {
                    r += &pc;
                }
                u64::try_from(r).unwrap()
            })
            .collect();
        mp_trim(&mut v);
        v
    };
    let modular = berlekamp(&mp_monic(&fp, p), p);
    if modular.len() == 1 {
        return vec![primitive_part(f)];
    }

    // Mignotte-style bound: any factor of lc(f)*f/lc has |coeff| <= bound.
    let lc = f.last().unwrap().clone();
    let bound: Int = (Int::one() << (n as usize + 1)) * int_poly_norm1(f) * lc.abs();
    let target = &bound * 2 + 1;

    // lift the monic factorization of f/lc
    let mut modulus = Int::from(p);
    while modulus < target {
        modulus = &modulus * &modulus;
    }
    let lc_inv = int_invmod(&lc, &modulus);
    let f_monic: IntPoly = ip_reduce(
        &f.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(),
        &modulus,
    );
    let lifted = hensel_lift_tree(&f_monic, &modular, p, &target);

    // subset recombination
    let mut remaining: Vec<IntPoly> = lifted;
    let mut current: IntPoly = f.to_vec();
    let mut out: Vec<IntPoly> = Vec::new();
    let mut size = 1usize;
    while 2 * size <= remaining.len() {
        let mut found = false;
        for combo in combinations(remaining.len(), size) {
            let lc_cur = current.last().unwrap().clone();
            let mut cand: IntPoly = vec![lc_cur.clone()];
            for &i in &combo {
                cand = ip_mul(&cand, &remaining[i], &modulus);
            }
            let cand = balanced(&cand, &modulus);
            let cand = primitive_part(&cand);
            if let Some(quot) = ip_divides(&current, &cand) {
                out.push(cand);
                current = quot;
                let keep: Vec<IntPoly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                remaining = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if ip_deg(&current) >= 1 {
        out.push(primitive_part(&current));
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    });
    out
}

fn balanced(a: &IntPoly, m: &Int) -> IntPoly {
    let half = m / 2;
    let mut out: IntPoly = a
        .iter()
        .map(|c| {
            if c > &half {
                c - m
            } else {
                c.clone()
            }
        })
        .collect();
    ip_trim(&mut out);
    out
}

fn int_invmod(a: &Int, m: &Int) -> Int {
    // extended euclid
    let (mut r0, mut r1) = (m.clone(), ((a % m) + m) % m);
    let (mut t0, mut t1) = (Int::zero(), Int::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        let t = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert!(r0.is_one(), "not invertible");
    ((t0 % m) + m) % m
}

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// All size-k index subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn expand(factors: &[(UniPoly, u32)]) -> UniPoly {
        let mut acc = UniPoly::one();
        for (f, m) in factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }

    #[test]
    fn factor_difference_of_squares() {
        let p = UniPoly::from_i64(&[-1, 0, 1]);
        let fs = factor_rational(&p).unwrap();
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_i64(&[-1, 1]), 1),
                (UniPoly::from_i64(&[1, 1]), 1)
            ]
        );
    }

    #[test]
    fn factor_irreducible_quadratic() {
        let p = UniPoly::from_i64(&[1, 0, 1]);
        let fs = factor_rational(&p).unwrap();
        assert_eq!(fs, vec![(UniPoly::from_i64(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn factor_x5_minus_x() {
        // x^5 - x = x (x-1)(x+1)(x^2+1); verified by re-expansion below.
        let p = UniPoly::from_i64(&[0, -1, 0, 0, 0, 1]);
        let fs = factor_rational(&p).unwrap();
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_i64(&[-1, 1]), 1),
                (UniPoly::from_i64(&[0, 1]), 1),
                (UniPoly::from_i64(&[1, 1]), 1),
                (UniPoly::from_i64(&[1, 0, 1]), 1),
            ]
        );
        assert_eq!(expand(&fs), p.monic());
    }

    #[test]
    fn factor_with_multiplicities() {
        // (x-1)^2 (x^2+x+1)^3
        let a = UniPoly::from_i64(&[-1, 1]);
        let b = UniPoly::from_i64(&[1, 1, 1]);
        let p = a.pow(2).mul(&b.pow(3)).scale(&rat(6));
        let fs = factor_rational(&p).unwrap();
        assert_eq!(fs, vec![(a, 2), (b, 3)]);
        assert_eq!(expand(&fs), p.monic());
    }

    #[test]
    fn factor_cyclotomic_like() {
        // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let p = UniPoly::from_i64(&[-1, 0, 0, 0, 0, 0, 1]);
        let fs = factor_rational(&p).unwrap();
        assert_eq!(fs.len(), 4);
        assert_eq!(expand(&fs), p);
    }

    #[test]
    fn factor_larger_degree_reexpands() {
        // (x^3 - 2)(x^4 + x + 1)(x - 5), all irreducible over Q
        let a = UniPoly::from_i64(&[-2, 0, 0, 1]);
        let b = UniPoly::from_i64(&[1, 1, 0, 0, 1]);
        let c = UniPoly::from_i64(&[-5, 1]);
        let p = a.mul(&b).mul(&c);
        let fs = factor_rational(&p).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(expand(&fs), p.monic());
    }

    #[test]
    fn zassenhaus_z26_plus_1() {
        // z^26 + 1 = (z^2+1) * Phi_52(z): degrees 2 and 24
        let mut coeffs = vec![0i64; 27];
        coeffs[0] = 1;
        coeffs[26] = 1;
        let p = UniPoly::from_i64(&coeffs);
        let fs = factor_rational(&p).unwrap();
        let degs: Vec<i64> = fs.iter().map(|(f, _)| f.degree()).collect();
        assert_eq!(degs, vec![2, 24]);
        assert_eq!(expand(&fs), p);
    }
}
