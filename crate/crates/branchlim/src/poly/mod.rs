//! Sparse multivariate polynomials over Q with weighted gradings, term
//! orders and ring homomorphisms.
//!
//! A `PolyRing` fixes an ordered list of named variables, a positive integer
//! weight per variable, an optional distinguished base parameter t of weight
//! zero (the uniformizer of Q[t] localized at (t); the localization is
//! handled logically, never materialized), and a term order. Polynomials
//! store their terms sorted strictly descending in the ring's order.

mod mfactor;
mod parse;
mod ring_map;

pub use mfactor::{factor_multivariate, MvFactors};
pub use parse::{parse_poly, ParseError};
pub use ring_map::RingMap;

use crate::arith::{rat_string, Rat};
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Monomial exponent vector; arity always matches the owning ring.
/// The derived `Ord` is plain lexicographic and is only for use as a
/// container key; term-order comparisons go through [`PolyRing::cmp_exp`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(arity: usize) -> Self {
        Mono(vec![0; arity])
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Mono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| {
                    debug_assert!(a >= b);
                    a - b
                })
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn pow(&self, k: u32) -> Mono {
        Mono(
            self.0
                .iter()
                .map(|a| a.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

/// Term orders. `Block(k)` compares the first k variables first (grevlex
/// within the block), then the remaining variables; a Grobner basis in a
/// block order computes elimination ideals for the leading block.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TermOrder {
    GrevLex,
    Lex,
    Block(usize),
}

#[derive(Debug)]
pub struct PolyRing {
    vars: Vec<String>,
    weights: Vec<u32>,
    base_param: Option<usize>,
    order: TermOrder,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new(
        vars: Vec<String>,
        weights: Vec<u32>,
        base_param: Option<usize>,
        order: TermOrder,
    ) -> RingRef {
        assert_eq!(vars.len(), weights.len());
        let mut seen = std::collections::BTreeSet::new();
        for v in &vars {
            assert!(seen.insert(v.clone()), "duplicate variable name {v}");
        }
        for (i, &w) in weights.iter().enumerate() {
            if Some(i) == base_param {
                assert_eq!(w, 0, "base parameter must have weight 0");
            } else {
                assert!(w >= 1, "variable {} must have positive weight", vars[i]);
            }
        }
        Arc::new(PolyRing {
            vars,
            weights,
            base_param,
            order,
        })
    }

    /// Weight-1 grevlex ring without a base parameter.
    pub fn simple(names: &[&str]) -> RingRef {
        PolyRing::new(
            names.iter().map(|s| s.to_string()).collect(),
            vec![1; names.len()],
            None,
            TermOrder::GrevLex,
        )
    }

    /// Grevlex ring with the DVR parameter `t` first, then weight-1 names.
    pub fn family(names: &[&str]) -> RingRef {
        let mut vars = vec!["t".to_string()];
        vars.extend(names.iter().map(|s| s.to_string()));
        let mut weights = vec![0];
        weights.extend(std::iter::repeat(1).take(names.len()));
        PolyRing::new(vars, weights, Some(0), TermOrder::GrevLex)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn base_param(&self) -> Option<usize> {
        self.base_param
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn same_ring(&self, other: &PolyRing) -> bool {
        self.vars == other.vars && self.weights == other.weights && self.base_param == other.base_param
    }

    /// Weighted degree of an exponent vector (the base parameter counts 0).
    pub fn weighted_degree(&self, m: &Mono) -> u64 {
        m.0.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    fn cmp_block(&self, a: &Mono, b: &Mono, lo: usize, hi: usize) -> Ordering {
        // weighted degree, then raw degree (separates weight-0 parameters),
        // then graded reverse lexicographic tie-break
        let wd = |m: &Mono| -> u64 {
            (lo..hi)
                .map(|i| m.0[i] as u64 * self.weights[i] as u64)
                .sum()
        };
        let rd = |m: &Mono| -> u64 { (lo..hi).map(|i| m.0[i] as u64).sum() };
        wd(a)
            .cmp(&wd(b))
            .then_with(|| rd(a).cmp(&rd(b)))
            .then_with(|| {
                for i in (lo..hi).rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            })
    }

    /// Total term order on exponent vectors of matching arity.
    pub fn cmp_exp(&self, a: &Mono, b: &Mono) -> Ordering {
        assert_eq!(a.0.len(), self.arity(), "arity mismatch");
        assert_eq!(b.0.len(), self.arity(), "arity mismatch");
        let n = self.arity();
        match self.order {
            TermOrder::GrevLex => self.cmp_block(a, b, 0, n),
            TermOrder::Lex => {
                for i in 0..n {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Block(k) => self
                .cmp_block(a, b, 0, k.min(n))
                .then_with(|| self.cmp_block(a, b, k.min(n), n)),
        }
    }

    pub fn with_order(self: &Arc<Self>, order: TermOrder) -> RingRef {
        if self.order == order {
            return self.clone();
        }
        Arc::new(PolyRing {
            vars: self.vars.clone(),
            weights: self.weights.clone(),
            base_param: self.base_param,
            order,
        })
    }

    /// New ring with extra variables appended (name, weight).
    pub fn extended(self: &Arc<Self>, extra: &[(String, u32)]) -> RingRef {
        let mut vars = self.vars.clone();
        let mut weights = self.weights.clone();
        for (n, w) in extra {
            vars.push(n.clone());
            weights.push(*w);
        }
        PolyRing::new(vars, weights, self.base_param, self.order)
    }

    /// New ring with extra variables prepended (used for elimination aids).
    pub fn prefixed(self: &Arc<Self>, extra: &[(String, u32)]) -> RingRef {
        let mut vars: Vec<String> = extra.iter().map(|(n, _)| n.clone()).collect();
        let mut weights: Vec<u32> = extra.iter().map(|(_, w)| *w).collect();
        vars.extend(self.vars.clone());
        weights.extend(self.weights.clone());
        PolyRing::new(
            vars,
            weights,
            self.base_param.map(|i| i + extra.len()),
            self.order,
        )
    }

    /// New ring dropping the given variable indices.
    pub fn without_vars(self: &Arc<Self>, drop: &[usize]) -> RingRef {
        let keep: Vec<usize> = (0..self.arity()).filter(|i| !drop.contains(i)).collect();
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let weights = keep.iter().map(|&i| self.weights[i]).collect();
        let base = self.base_param.and_then(|b| keep.iter().position(|&i| i == b));
        PolyRing::new(vars, weights, base, self.order)
    }

    /// New ring listing the variables in `perm` order (perm[i] = old index).
    pub fn permuted(self: &Arc<Self>, perm: &[usize]) -> RingRef {
        let vars = perm.iter().map(|&i| self.vars[i].clone()).collect();
        let weights = perm.iter().map(|&i| self.weights[i]).collect();
        let base = self.base_param.and_then(|b| perm.iter().position(|&i| i == b));
        PolyRing::new(vars, weights, base, self.order)
    }

    /// A variable name of the form `prefix`, `prefix1`, ... not already used.
    pub fn fresh_name(&self, prefix: &str) -> String {
        if self.var_index(prefix).is_none() {
            return prefix.to_string();
        }
        let mut k = 1;
        loop {
            let cand = format!("{prefix}{k}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
            k += 1;
        }
    }
}

#[derive(Clone)]
pub struct Poly {
    ring: RingRef,
    /// strictly descending in the ring's term order; no zero coefficients
    terms: Vec<(Mono, Rat)>,
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Poly::constant(ring, Rat::one())
    }

    pub fn constant(ring: &RingRef, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: vec![(Mono::one(ring.arity()), c)],
        }
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Poly {
            ring: ring.clone(),
            terms: vec![(Mono::var(ring.arity(), i), Rat::one())],
        }
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Self {
        let i = ring
            .var_index(name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        Poly::var(ring, i)
    }

    pub fn term(ring: &RingRef, m: Mono, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Mono, Rat)>) -> Self {
        let mut map: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), ring.arity(), "arity mismatch");
            let entry = map.entry(m).or_insert_with(Rat::zero);
            *entry += c;
        }
        let mut terms: Vec<(Mono, Rat)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| ring.cmp_exp(b, a));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Leading (monomial, coefficient) under the ring order.
    pub fn lt(&self) -> Option<(&Mono, &Rat)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn lm(&self) -> &Mono {
        &self.terms.first().expect("zero polynomial has no leading term").0
    }

    pub fn lc(&self) -> &Rat {
        &self.terms.first().expect("zero polynomial has no leading term").1
    }

    pub fn neg(&self) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Self {
        debug_assert!(self.ring.same_ring(&other.ring));
        // merge two descending term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.cmp_exp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn sub(&self, other: &Poly) -> Self {
        self.add(&other.neg())
    }

    pub fn mul_term(&self, m: &Mono, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Self {
        debug_assert!(self.ring.same_ring(&other.ring));
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Poly::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, c));
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, tc)| (m.clone(), tc * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Monic under the ring order (leading coefficient 1).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = Rat::one() / self.lc().clone();
        self.scale(&inv)
    }

    /// Canonical scalar normalization: integer coefficients with content 1
    /// and positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = crate::arith::Int::one();
        for (_, c) in &self.terms {
            let g = crate::arith::int_gcd(&den, c.denom());
            den = &den / &g * c.denom();
        }
        let mut content = crate::arith::Int::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&den / c.denom());
            content = crate::arith::int_gcd(&content, &n);
        }
        if content.is_zero() {
            content = crate::arith::Int::one();
        }
        if self.lc().is_negative() {
            content = -content;
        }
        self.scale(&Rat::new(den, content))
    }

    /// Max per-variable exponent across all terms.
    pub fn var_degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.ring.arity()];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                d[i] = d[i].max(e);
            }
        }
        d
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    /// Weighted degree if homogeneous (base parameter weighs 0), else None.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.weighted_degree(m));
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Indices of variables that occur with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        let d = self.var_degrees();
        (0..self.ring.arity()).filter(|&i| d[i] > 0).collect()
    }

    /// Substitute `value` (same ring) for variable `var`.
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        debug_assert!(self.ring.same_ring(&value.ring));
        let mut powers: Vec<Poly> = vec![Poly::one(&self.ring)];
        let maxe = self.var_degrees()[var] as usize;
        for _ in 0..maxe {
            powers.push(powers.last().unwrap().mul(value));
        }
        let mut acc = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut reduced = m.clone();
            reduced.0[var] = 0;
            acc = acc.add(&powers[e].mul_term(&reduced, c));
        }
        acc
    }

    /// Move this polynomial into `target`; `var_map[i]` is the target index
    /// of source variable i. Panics if a dropped variable occurs.
    pub fn inject(&self, target: &RingRef, var_map: &[Option<usize>]) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; target.arity()];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp > 0 {
                    let j = var_map[i].expect("variable not present in target ring");
                    e[j] = exp;
                }
            }
            (Mono(e), c.clone())
        });
        Poly::from_terms(target, terms.collect::<Vec<_>>())
    }

    /// Inject into a ring that contains all of this ring's variables by name.
    pub fn inject_by_name(&self, target: &RingRef) -> Poly {
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        self.inject(target, &map)
    }

    /// Set variable `var` to the rational `c` and drop it from the ring.
    pub fn specialize_drop(&self, var: usize, c: &Rat) -> Poly {
        let target = self.ring.without_vars(&[var]);
        let terms: Vec<(Mono, Rat)> = self
            .terms
            .iter()
            .filter_map(|(m, coeff)| {
                let e = m.0[var];
                let scale = if e == 0 {
                    Rat::one()
                } else if c.is_zero() {
                    return None;
                } else {
                    num::pow::pow(c.clone(), e as usize)
                };
                let mut exps = m.0.clone();
                exps.remove(var);
                Some((Mono(exps), coeff * &scale))
            })
            .collect();
        Poly::from_terms(&target, terms)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    v *= num::pow::pow(point[i].clone(), e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Poly {
        let terms: Vec<(Mono, Rat)> = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.0[var];
                if e == 0 {
                    return None;
                }
                let mut exps = m.0.clone();
                exps[var] = e - 1;
                Some((Mono(exps), c * Rat::from_integer(crate::arith::Int::from(e))))
            })
            .collect();
        Poly::from_terms(&self.ring, terms)
    }

    /// Divide exactly by `g`; None if the division leaves a remainder.
    pub fn div_exact(&self, g: &Poly) -> Option<Poly> {
        assert!(!g.is_zero());
        let mut rem = self.clone();
        let mut quo = Poly::zero(&self.ring);
        let (gm, gc) = (g.lm().clone(), g.lc().clone());
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.lt().unwrap();
                (m.clone(), c.clone())
            };
            if !gm.divides(&rm) {
                return None;
            }
            let m = rm.div(&gm);
            let c = rc / gc.clone();
            quo = quo.add(&Poly::term(&self.ring, m.clone(), c.clone()));
            rem = rem.sub(&g.mul_term(&m, &c));
        }
        Some(quo)
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Poly {}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || m.is_one();
            if show_coeff {
                write!(f, "{}", rat_string(&mag))?;
            }
            let mut printed = show_coeff;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ring.vars[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                printed = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn conic_ring() -> RingRef {
        PolyRing::family(&["x0", "x1", "x2"])
    }

    #[test]
    fn grevlex_standard_examples() {
        let r = PolyRing::simple(&["x", "y"]);
        // x^2 > x*y in grevlex
        let x2 = Mono(vec![2, 0]);
        let xy = Mono(vec![1, 1]);
        assert_eq!(r.cmp_exp(&x2, &xy), Ordering::Greater);
        // lex: x > y^3
        let rl = PolyRing::new(
            vec!["x".into(), "y".into()],
            vec![1, 1],
            None,
            TermOrder::Lex,
        );
        let x = Mono(vec![1, 0]);
        let y3 = Mono(vec![0, 3]);
        assert_eq!(rl.cmp_exp(&x, &y3), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_t() {
        // ring [t | x], block(1): t*x > x^2 because the t-block decides
        let r = PolyRing::new(
            vec!["t".into(), "x".into()],
            vec![0, 1],
            Some(0),
            TermOrder::Block(1),
        );
        let tx = Mono(vec![1, 1]);
        let x2 = Mono(vec![0, 2]);
        assert_eq!(r.cmp_exp(&tx, &x2), Ordering::Greater);
    }

    #[test]
    fn order_is_global_and_total() {
        let r = conic_ring();
        let one = Mono::one(4);
        for i in 0..4 {
            let v = Mono::var(4, i);
            assert_eq!(r.cmp_exp(&v, &one), Ordering::Greater, "var {i} must exceed 1");
        }
        // totality on a few pairs
        let a = Mono(vec![1, 0, 2, 0]);
        let b = Mono(vec![0, 1, 0, 2]);
        let c1 = r.cmp_exp(&a, &b);
        let c2 = r.cmp_exp(&b, &a);
        assert_eq!(c1, c2.reverse());
    }

    #[test]
    fn conic_leading_term_is_x1_squared() {
        let r = conic_ring();
        let p = parse_poly(&r, "x1^2 - t*x0*x2").unwrap();
        assert_eq!(p.lm(), &Mono(vec![0, 0, 2, 0]));
        assert_eq!(p.to_string(), "x1^2 - t*x0*x2");
        assert!(p.is_homogeneous());
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn arithmetic_and_display_round_trip() {
        let r = PolyRing::simple(&["x", "y"]);
        let p = parse_poly(&r, "x^2 - 2*x*y + y^2").unwrap();
        let q = parse_poly(&r, "x - y").unwrap();
        assert_eq!(q.mul(&q), p);
        let back = parse_poly(&r, &p.to_string()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn div_exact_multivariate() {
        let r = PolyRing::simple(&["x", "y"]);
        let f = parse_poly(&r, "x^2*y - y^3").unwrap();
        let g = parse_poly(&r, "x - y").unwrap();
        let q = f.div_exact(&g).unwrap();
        assert_eq!(q.mul(&g), f);
        assert!(f.div_exact(&parse_poly(&r, "x + 1").unwrap()).is_none());
    }

    #[test]
    fn substitute_and_specialize() {
        let r = conic_ring();
        let p = parse_poly(&r, "x1^2 - t*x0*x2").unwrap();
        let at0 = p.specialize_drop(0, &rat(0));
        assert_eq!(at0.to_string(), "x1^2");
        let at1 = p.specialize_drop(0, &rat(1));
        assert_eq!(at1.to_string(), "x1^2 - x0*x2");
    }
}
