//! Exact arithmetic foundation: arbitrary-precision rationals and univariate
//! polynomials over Q, with gcd, squarefree parts and factorization into
//! Q-irreducibles.

pub mod factor;
pub mod unipoly;

use num::bigint::Sign;
pub use num::BigInt as Int;
pub use num::BigRational as Rat;
use num::{One, Signed, Zero};

pub use unipoly::UniPoly;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational p/q from machine integers. Panics on q = 0.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => {
            let p: Int = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Canonical "p/q" (or "p" when integral) rendering, used by all reports.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if the rational is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact conversion to `i64`; panics if the value is not a small integer.
pub fn to_i64(r: &Rat) -> i64 {
    assert!(is_integer(r), "expected integer, got {}", r);
    let n = r.numer();
    let mag: u64 = n.magnitude().try_into().expect("integer too large for i64");
    match n.sign() {
        Sign::Minus => -(mag as i64),
        _ => mag as i64,
    }
}

/// n! as a big integer.
pub fn factorial(n: u32) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

/// gcd of two big integers, always nonnegative.
pub fn int_gcd(a: &Int, b: &Int) -> Int {
    num::Integer::gcd(a, b)
}

/// lcm of a slice of positive integers; 1 for the empty slice.
pub fn lcm_all(ns: &[u64]) -> u64 {
    ns.iter().fold(1u64, |acc, &n| {
        let g = num::integer::gcd(acc, n);
        acc / g * n
    })
}

/// Errors raised by the arithmetic layer.
#[derive(Debug, thiserror::Error)]
pub enum ArithError {
    #[error("zero polynomial")]
    ZeroPolynomial,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_round_trip() {
        let r = ratio(-3, 6);
        assert_eq!(rat_string(&r), "-1/2");
        assert_eq!(parse_rat("-1/2").unwrap(), r);
        assert_eq!(parse_rat("7").unwrap(), rat(7));
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn lcm_of_multiplicities() {
        assert_eq!(lcm_all(&[2, 3]), 6);
        assert_eq!(lcm_all(&[]), 1);
        assert_eq!(lcm_all(&[4, 6]), 12);
    }
}
