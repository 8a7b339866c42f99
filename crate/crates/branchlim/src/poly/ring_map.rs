//! Ring homomorphisms between polynomial rings: one image per source
//! variable, applied term by term. Base changes t = s^m and variable
//! substitutions are built on top.

use super::{Poly, RingRef};
use crate::arith::Rat;

#[derive(Clone)]
pub struct RingMap {
    source: RingRef,
    target: RingRef,
    images: Vec<Poly>,
}

impl RingMap {
    pub fn new(source: RingRef, target: RingRef, images: Vec<Poly>) -> Self {
        assert_eq!(source.arity(), images.len(), "one image per source variable");
        for im in &images {
            assert!(im.ring().same_ring(&target), "image not in target ring");
        }
        RingMap {
            source,
            target,
            images,
        }
    }

    pub fn identity(ring: &RingRef) -> Self {
        let images = (0..ring.arity()).map(|i| Poly::var(ring, i)).collect();
        RingMap::new(ring.clone(), ring.clone(), images)
    }

    /// Map matching variables by name; panics if a source name is missing.
    pub fn by_name(source: &RingRef, target: &RingRef) -> Self {
        let images = source
            .vars()
            .iter()
            .map(|v| Poly::var_named(target, v))
            .collect();
        RingMap::new(source.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// True when each image is homogeneous of the source variable's weight.
    pub fn is_graded(&self) -> bool {
        self.images.iter().enumerate().all(|(i, im)| {
            im.is_zero() || im.homogeneous_degree() == Some(self.source.weight(i) as u64)
        })
    }

    /// Apply the homomorphism: additive, multiplicative, fixes constants.
    pub fn apply(&self, p: &Poly) -> Poly {
        assert!(
            p.ring().same_ring(&self.source),
            "polynomial not in the map's source ring"
        );
        // cache powers of each image as needed
        let degs = p.var_degrees();
        let mut powers: Vec<Vec<Poly>> = Vec::with_capacity(self.images.len());
        for (i, im) in self.images.iter().enumerate() {
            let mut ps = vec![Poly::one(&self.target)];
            for _ in 0..degs[i] {
                ps.push(ps.last().unwrap().mul(im));
            }
            powers.push(ps);
        }
        let mut acc = Poly::zero(&self.target);
        for (m, c) in p.terms() {
            let mut term = Poly::constant(&self.target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// The ramified base change t -> t^m, in place in the same ring.
/// Exponent scaling only, so it is exact and fast.
pub fn base_change_exponent(p: &Poly, t_index: usize, m: u32) -> Poly {
    let ring = p.ring().clone();
    let terms: Vec<_> = p
        .terms()
        .iter()
        .map(|(mono, c)| {
            let mut e = mono.0.clone();
            e[t_index] = e[t_index].checked_mul(m).expect("exponent overflow");
            (super::Mono(e), c.clone())
        })
        .collect();
    Poly::from_terms(&ring, terms)
}

/// Substitute an affine line x_i = a_i*s + b_i into p, returning the
/// univariate restriction as a dense coefficient list in s.
pub fn restrict_to_line(p: &Poly, a: &[Rat], b: &[Rat]) -> crate::arith::UniPoly {
    use crate::arith::UniPoly;
    let line_ring = super::PolyRing::simple(&["s"]);
    let s = Poly::var(&line_ring, 0);
    let images: Vec<Poly> = a
        .iter()
        .zip(b)
        .map(|(ai, bi)| {
            s.scale(ai)
                .add(&Poly::constant(&line_ring, bi.clone()))
        })
        .collect();
    let map = RingMap::new(p.ring().clone(), line_ring.clone(), images);
    let img = map.apply(p);
    let deg = img.var_degrees().first().copied().unwrap_or(0) as usize;
    let mut coeffs = vec![Rat::from_integer(0.into()); deg + 1];
    for (m, c) in img.terms() {
        coeffs[m.0[0] as usize] = c.clone();
    }
    UniPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, PolyRing};

    #[test]
    fn base_change_on_conic() {
        // t -> s^2 applied to x1^2 - t*x0*x2 gives x1^2 - s^2*x0*x2
        // (variable kept named t internally; the exponent doubles)
        let r = PolyRing::family(&["x0", "x1", "x2"]);
        let p = parse_poly(&r, "x1^2 - t*x0*x2").unwrap();
        let q = base_change_exponent(&p, 0, 2);
        assert_eq!(q, parse_poly(&r, "x1^2 - t^2*x0*x2").unwrap());
    }

    #[test]
    fn identity_map_is_identity() {
        let r = PolyRing::family(&["x", "u"]);
        let p = parse_poly(&r, "u^2 - t*x^2").unwrap();
        assert_eq!(RingMap::identity(&r).apply(&p), p);
    }

    #[test]
    fn two_point_cover_total_space() {
        // t -> u^2, x -> x applied to t - x^2 gives u^2 - x^2
        let src = PolyRing::family(&["x"]);
        let tgt = PolyRing::simple(&["u", "x"]);
        let u = Poly::var_named(&tgt, "u");
        let x = Poly::var_named(&tgt, "x");
        let map = RingMap::new(src.clone(), tgt.clone(), vec![u.mul(&u), x]);
        let p = parse_poly(&src, "t - x^2").unwrap();
        assert_eq!(map.apply(&p), parse_poly(&tgt, "u^2 - x^2").unwrap());
    }

    #[test]
    fn apply_is_multiplicative() {
        let src = PolyRing::simple(&["x", "y"]);
        let tgt = PolyRing::simple(&["a", "b"]);
        let im_x = parse_poly(&tgt, "a + b").unwrap();
        let im_y = parse_poly(&tgt, "a*b - 1").unwrap();
        let map = RingMap::new(src.clone(), tgt, vec![im_x, im_y]);
        let p = parse_poly(&src, "x^2*y - 3*x + y^2").unwrap();
        let q = parse_poly(&src, "x*y^2 + 7").unwrap();
        assert_eq!(map.apply(&p.mul(&q)), map.apply(&p).mul(&map.apply(&q)));
    }
}
