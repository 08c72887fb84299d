//! Dense matrices over F_p and the determinants the claim catalogue is about.
//!
//! The central object is D_p(b, c), the determinant of the (p−1)×(p−1)
//! matrix with entries (i² + bij + cj²)^{p−2} mod p. Alongside it:
//! inversion counts of the x ↦ x^{p−2} permutation, the product formula for
//! determinants of the shape det[P(x_i·y_j)], and small symbol matrices
//! (entries are Legendre symbols) with an exact integer determinant path.

use num_bigint::BigInt;

use crate::error::Error;
use crate::field::Fp;

/// Row-major dense matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFp {
    field: Fp,
    dim: usize,
    entries: Vec<u64>,
}

impl MatrixFp {
    pub fn from_fn(field: Fp, dim: usize, mut f: impl FnMut(usize, usize) -> u64) -> MatrixFp {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        MatrixFp { field, dim, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    /// Determinant by Gaussian elimination, O(n³).
    pub fn det(&self) -> u64 {
        let f = self.field;
        let n = self.dim;
        if n == 0 {
            return 1 % f.prime();
        }
        let mut m = self.entries.clone();
        let mut negate = false;
        let mut det = 1u64;
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| m[r * n + col] != 0) {
                Some(r) => r,
                None => return 0,
            };
            if pivot_row != col {
                for j in 0..n {
                    m.swap(pivot_row * n + j, col * n + j);
                }
                negate = !negate;
            }
            let piv = m[col * n + col];
            det = f.mul(det, piv);
            let inv_piv = f.inv(piv);
            let (done, rest) = m.split_at_mut((col + 1) * n);
            let prow = &done[col * n..];
            for r in 0..n - col - 1 {
                let row = &mut rest[r * n..(r + 1) * n];
                if row[col] == 0 {
                    continue;
                }
                let factor = f.mul(row[col], inv_piv);
                for j in col..n {
                    row[j] = f.sub(row[j], f.mul(factor, prow[j]));
                }
            }
        }
        if negate {
            det = f.neg(det);
        }
        det
    }
}

/// The (p−1)×(p−1) matrix with entries (i² + bij + cj²)^{p−2} mod p,
/// rows and columns indexed by 1 ≤ i, j ≤ p−1.
pub fn dp_matrix(field: Fp, b: i64, c: i64) -> MatrixFp {
    let p = field.prime();
    let b_red = field.reduce(b);
    let c_red = field.reduce(c);
    let dim = (p - 1) as usize;
    MatrixFp::from_fn(field, dim, |i, j| {
        let x = (i + 1) as u64;
        let y = (j + 1) as u64;
        let q = field.add(
            field.mul(x, x),
            field.add(
                field.mul(b_red, field.mul(x, y)),
                field.mul(c_red, field.mul(y, y)),
            ),
        );
        field.fermat_entry(q)
    })
}

/// D_p(b, c) as a residue mod p.
pub fn dp_det(field: Fp, b: i64, c: i64) -> u64 {
    dp_matrix(field, b, c).det()
}

/// Legendre symbol (D_p(b, c) | p) in {−1, 0, 1}.
pub fn dp_symbol(field: Fp, b: i64, c: i64) -> i8 {
    field.legendre(dp_det(field, b, c) as i64)
}

/// Number of inversions of a permutation-like listing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvCount {
    pub p: u64,
    pub count: u64,
}

/// Inversions of the permutation i ↦ i^{p−2} of {1, …, p−1}: the number of
/// pairs i < j with i^{p−2} > j^{p−2} as least positive residues. Merge sort
/// keeps this O(p log p).
pub fn inversion_count(field: Fp) -> InvCount {
    let p = field.prime();
    let mut values: Vec<u64> = (1..p).map(|i| field.fermat_entry(i)).collect();
    let mut scratch = vec![0u64; values.len()];
    let count = merge_count(&mut values, &mut scratch);
    InvCount { p, count }
}

fn merge_count(v: &mut [u64], scratch: &mut [u64]) -> u64 {
    let n = v.len();
    if n <= 1 {
        return 0;
    }
    let mid = n / 2;
    let (left, right) = v.split_at_mut(mid);
    let mut inv = merge_count(left, &mut scratch[..mid]) + merge_count(right, &mut scratch[mid..]);
    let (mut i, mut j) = (0, 0);
    for slot in scratch[..n].iter_mut() {
        if i < mid && (j >= n - mid || left[i] <= right[j]) {
            *slot = left[i];
            i += 1;
        } else {
            // right[j] jumps ahead of everything left in the left half.
            inv += (mid - i) as u64;
            *slot = right[j];
            j += 1;
        }
    }
    v.copy_from_slice(&scratch[..n]);
    inv
}

/// Horner evaluation of a polynomial given by ascending coefficients.
pub fn poly_eval(field: Fp, coeffs: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = field.add(field.mul(acc, x), c);
    }
    acc
}

/// The matrix [P(x_i·y_j)] for a polynomial P of degree < n.
pub fn poly_value_matrix(field: Fp, coeffs: &[u64], xs: &[u64], ys: &[u64]) -> MatrixFp {
    assert_eq!(xs.len(), ys.len());
    MatrixFp::from_fn(field, xs.len(), |i, j| {
        poly_eval(field, coeffs, field.mul(xs[i], ys[j]))
    })
}

/// det[P(x_i·y_j)] by the product formula: for P of degree ≤ n−1 with
/// coefficients a_0, …, a_{n−1},
///
///   det = a_0·a_1⋯a_{n−1} · Π_{i<j} (x_i − x_j)(y_i − y_j).
pub fn krattenthaler_det(field: Fp, coeffs: &[u64], xs: &[u64], ys: &[u64]) -> u64 {
    let n = xs.len();
    assert_eq!(ys.len(), n);
    assert!(coeffs.len() <= n, "polynomial degree must stay below the dimension");
    let mut det = 1u64;
    for idx in 0..n {
        let a = coeffs.get(idx).copied().unwrap_or(0);
        det = field.mul(det, a);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            det = field.mul(det, field.sub(xs[i], xs[j]));
            det = field.mul(det, field.sub(ys[i], ys[j]));
        }
    }
    det
}

/// Largest dimension the exact integer determinant will attempt.
pub const EXACT_DET_DIM_BOUND: u64 = 40;

/// Small matrix of Legendre symbols, kept as i8 entries so the determinant
/// can also be taken exactly over Z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolMatrix {
    dim: usize,
    entries: Vec<i8>,
}

impl SymbolMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.dim + j]
    }

    /// Determinant as a residue mod p.
    pub fn det_mod(&self, field: Fp) -> u64 {
        MatrixFp::from_fn(field, self.dim, |i, j| field.reduce(self.get(i, j) as i64)).det()
    }

    /// Exact integer determinant by the Bareiss fraction-free elimination.
    /// Intermediates are products of two minors and can outgrow any fixed
    /// width, so the elimination runs over BigInt; by Hadamard's inequality
    /// the determinant itself stays inside i128 up to the dimension guard.
    pub fn det_exact(&self) -> Result<i128, Error> {
        let n = self.dim;
        if n as u64 > EXACT_DET_DIM_BOUND {
            return Err(Error::BoundExceeded { value: n as u64, bound: EXACT_DET_DIM_BOUND });
        }
        if n == 0 {
            return Ok(1);
        }
        let mut m: Vec<BigInt> = self.entries.iter().map(|&e| BigInt::from(e)).collect();
        let mut sign = 1i128;
        let mut prev = BigInt::from(1);
        for col in 0..n - 1 {
            if m[col * n + col] == BigInt::ZERO {
                match (col + 1..n).find(|&r| m[r * n + col] != BigInt::ZERO) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(r * n + j, col * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for r in col + 1..n {
                for j in col + 1..n {
                    let num = &m[r * n + j] * &m[col * n + col] - &m[r * n + col] * &m[col * n + j];
                    // Exact by the Desnanot-Jacobi identity.
                    m[r * n + j] = num / &prev;
                }
                m[r * n + col] = BigInt::ZERO;
            }
            prev = m[col * n + col].clone();
        }
        let det = m[n * n - 1].clone();
        let out = i128::try_from(&det).expect("dimension guard keeps the determinant in i128");
        Ok(sign * out)
    }
}

/// The matrix of symbols ((i² + c·ij + d·j²) | p). With `include_zero` the
/// indices run 0 ≤ i, j ≤ p−1 (a p×p matrix), otherwise 1 ≤ i, j ≤ p−1.
pub fn symbol_matrix(field: Fp, c: i64, d: i64, include_zero: bool) -> SymbolMatrix {
    let p = field.prime();
    let c_red = field.reduce(c);
    let d_red = field.reduce(d);
    let start = if include_zero { 0u64 } else { 1 };
    let dim = (p - start) as usize;
    let mut entries = Vec::with_capacity(dim * dim);
    for i in start..p {
        for j in start..p {
            let q = field.add(
                field.mul(i, i),
                field.add(
                    field.mul(c_red, field.mul(i, j)),
                    field.mul(d_red, field.mul(j, j)),
                ),
            );
            entries.push(field.legendre(q as i64));
        }
    }
    SymbolMatrix { dim, entries }
}
