//! Dense univariate polynomials over Q.
//!
//! Coefficients are stored by ascending degree with a nonzero leading
//! coefficient (the zero polynomial is the empty list). This is the currency
//! for eliminants, Hilbert series numerators and the factorization engine.

use super::{ArithError, Int, Rat};
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The monomial x^n.
    pub fn var_pow(n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        UniPoly { coeffs }
    }

    /// Build from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports -1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics if `div` is zero.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let dd = div.degree();
        let dl = div.leading();
        let mut quo = vec![Rat::zero(); (self.degree() - dd + 1).max(0) as usize];
        while !rem.is_zero() && rem.degree() >= dd {
            let shift = (rem.degree() - dd) as usize;
            let c = rem.leading() / dl.clone();
            quo[shift] = c.clone();
            // rem -= c * x^shift * div
            let mut coeffs = rem.coeffs;
            for (j, b) in div.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &c * b;
            }
            rem = UniPoly::from_coeffs(coeffs);
        }
        (UniPoly::from_coeffs(quo), rem)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(Int::from(k)))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let lc = self.leading();
        self.scale(&(Rat::one() / lc))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute x -> x^k.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Clear denominators and divide by the integer content. Returns
    /// (primitive integer polynomial, unit) with `self = unit * primitive`.
    pub fn primitive_int(&self) -> (Vec<Int>, Rat) {
        if self.is_zero() {
            return (Vec::new(), Rat::one());
        }
        // lcm of the coefficient denominators
        let mut den = Int::one();
        for c in &self.coeffs {
            let g = super::int_gcd(&den, c.denom());
            den = &den / &g * c.denom();
        }
        let ints: Vec<Int> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut content = Int::zero();
        for c in &ints {
            content = super::int_gcd(&content, c);
        }
        if content.is_zero() {
            content = Int::one();
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<Int> = ints.iter().map(|c| c / &content).collect();
        let unit = Rat::new(content, den);
        (prim, unit)
    }

    pub fn from_int_coeffs(coeffs: &[Int]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }
}

/// p / gcd(p, p'), made monic: the product of the distinct irreducible
/// factors of p, with no repeated roots over the algebraic closure.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly, ArithError> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(UniPoly::one());
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_exact(&g).monic())
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", super::rat_string(&mag))?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn x() -> UniPoly {
        UniPoly::var_pow(1)
    }

    #[test]
    fn div_rem_basic() {
        // x^3 - 1 = (x - 1)(x^2 + x + 1)
        let p = UniPoly::from_i64(&[-1, 0, 0, 1]);
        let d = UniPoly::from_i64(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_i64(&[1, 1, 1]));
    }

    #[test]
    fn squarefree_repeated_root() {
        // x^2 -> x
        let p = x().mul(&x());
        assert_eq!(squarefree_part(&p).unwrap(), x());
    }

    #[test]
    fn squarefree_already_squarefree() {
        // x^2 - 1 stays x^2 - 1
        let p = UniPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(squarefree_part(&p).unwrap(), p);
    }

    #[test]
    fn squarefree_high_power_via_gcd() {
        // gcd(x^5, 5x^4) = x^4, so the squarefree part is x. The gcd is also
        // checked directly as the independent route.
        let p = UniPoly::var_pow(5);
        let g = p.gcd(&p.derivative());
        assert_eq!(g, UniPoly::var_pow(4));
        assert_eq!(squarefree_part(&p).unwrap(), x());
    }

    #[test]
    fn squarefree_is_idempotent() {
        for coeffs in [[2i64, 3, 1, 7, 0, 1], [0, 0, 4, 4, 1, 0]] {
            let p = UniPoly::from_i64(&coeffs);
            if p.is_zero() {
                continue;
            }
            let s1 = squarefree_part(&p).unwrap();
            let s2 = squarefree_part(&s1).unwrap();
            assert_eq!(s1, s2);
        }
    }

    #[test]
    fn primitive_int_tracks_unit() {
        let p = UniPoly::from_coeffs(vec![ratio(1, 2), ratio(-3, 4)]);
        let (prim, unit) = p.primitive_int();
        // -3/4 x + 1/2 = -1/4 (3x - 2)
        assert_eq!(prim, vec![crate::arith::int(-2), crate::arith::int(3)]);
        assert_eq!(unit, ratio(-1, 4));
        let back = UniPoly::from_int_coeffs(&prim).scale(&unit);
        assert_eq!(back, p);
        let _ = rat(0);
    }

    use crate::arith::ratio;

    #[test]
    fn display_matches_convention() {
        let p = UniPoly::from_coeffs(vec![rat(1), ratio(-3, 2), rat(0), rat(1)]);
        assert_eq!(p.to_string(), "x^3 - 3/2*x + 1");
    }
}
