//! Small shared utilities: exact linear algebra over Q and seeded randomness.

use crate::arith::Rat;
use num::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic PRNG for the seeded genericity choices. All randomized
/// verdicts in the crate are re-checked under a derived second seed.
pub fn rng_for_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The derived re-check seed.
pub fn second_seed(seed: u64) -> u64 {
    seed ^ 0x9e37_79b9_7f4a_7c15
}

/// Random nonzero integer coefficients in [-bound, bound].
pub fn random_coeffs(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().any(|&c| c != 0) {
            return v;
        }
    }
}

/// Row-reduced echelon form in place; returns the pivot column of each row.
pub fn rref(mat: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let mut piv = r;
        while piv < rows && mat[piv][c].is_zero() {
            piv += 1;
        }
        if piv == rows {
            continue;
        }
        mat.swap(r, piv);
        let inv = Rat::one() / mat[r][c].clone();
        for j in c..cols {
            let v = mat[r][j].clone() * inv.clone();
            mat[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..cols {
                    let v = mat[i][j].clone() - f.clone() * mat[r][j].clone();
                    mat[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(mat: &[Vec<Rat>]) -> usize {
    let mut m = mat.to_vec();
    rref(&mut m).len()
}

/// Basis of the (right) nullspace of `mat` (rows are equations).
pub fn nullspace(mat: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if mat.is_empty() {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut m = mat.to_vec();
    let pivots = rref(&mut m);
    let mut free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.sort();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![Rat::zero(); cols];
        v[fc] = Rat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// Express `target` in the row space of `basis` if possible.
pub fn solve_in_span(basis: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    // least-structure approach: row reduce [basis^T | target]
    let n = target.len();
    let k = basis.len();
    let mut mat: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<Rat> = Vec::with_capacity(k + 1);
        for b in basis {
            row.push(b[i].clone());
        }
        row.push(target[i].clone());
        mat.push(row);
    }
    let pivots = rref(&mut mat);
    if pivots.contains(&k) {
        return None; // inconsistent
    }
    let mut coeffs = vec![Rat::zero(); k];
    for (row, &pc) in pivots.iter().enumerate() {
        coeffs[pc] = mat[row][k].clone();
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn nullspace_of_singular_matrix() {
        let m = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
        ];
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rat = (0..3).map(|j| m[0][j].clone() * v[j].clone()).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn seeded_rng_is_deterministic() {
        let a = random_coeffs(&mut rng_for_seed(7), 4, 100);
        let b = random_coeffs(&mut rng_for_seed(7), 4, 100);
        assert_eq!(a, b);
    }
}
