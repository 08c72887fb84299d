//! Rows of the generalized trinomial table.
//!
//! ⟨n, k⟩ is the coefficient of x^{n+k} in (x² + bx + c)^n, so a row is just
//! the coefficient vector of that power, indexed from the centre. Row n + 1
//! follows from row n by
//!
//!   ⟨n+1, k⟩ = ⟨n, k−1⟩ + b·⟨n, k⟩ + c·⟨n, k+1⟩,
//!
//! and polynomial symmetry gives ⟨n, −k⟩ = c^k·⟨n, k⟩. The two rows that
//! matter for the determinant work are n = p−2 (the entries of the power
//! (x² + bx + c)^{p−2}) and n = p−1 (reachable in O(p) through a Lucas
//! sequence, see [`row_p_minus_1_lucas`]). The scaled-row relation inverts
//! one into the other when 4c − b² is a unit, which is what makes whole-range
//! scans affordable.

use crate::error::Error;
use crate::field::{Fp, Fp2Element, FpSquared};
use crate::lucas::{u_sequence_mod, LucasParams};

/// One row of the table over F_p: the coefficients of (x² + bx + c)^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialRow {
    field: Fp,
    n: u64,
    b: u64,
    c: u64,
    /// coeffs[n + k] = ⟨n, k⟩ for −n ≤ k ≤ n; equivalently coeffs[d] is the
    /// coefficient of x^d.
    coeffs: Vec<u64>,
}

impl TrinomialRow {
    /// Build row n by iterating the recurrence, O(n²).
    pub fn compute(field: Fp, n: u64, b: i64, c: i64) -> TrinomialRow {
        let mut row = TrinomialRow {
            field,
            n: 0,
            b: field.reduce(b),
            c: field.reduce(c),
            coeffs: vec![1],
        };
        for _ in 0..n {
            row = row.next();
        }
        row
    }

    /// Row n + 1.
    pub fn next(&self) -> TrinomialRow {
        let len = self.coeffs.len() + 2;
        let get = |i: i64| -> u64 {
            if i < 0 || i as usize >= self.coeffs.len() {
                0
            } else {
                self.coeffs[i as usize]
            }
        };
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len as i64 {
            let v = self.field.add(
                get(i - 2),
                self.field.add(
                    self.field.mul(self.b, get(i - 1)),
                    self.field.mul(self.c, get(i)),
                ),
            );
            coeffs.push(v);
        }
        TrinomialRow { field: self.field, n: self.n + 1, b: self.b, c: self.c, coeffs }
    }

    /// ⟨n, k⟩, zero outside −n ≤ k ≤ n.
    pub fn coeff(&self, k: i64) -> u64 {
        let n = self.n as i64;
        if k < -n || k > n {
            return 0;
        }
        self.coeffs[(n + k) as usize]
    }

    /// The coefficients by degree: polynomial()[d] is the coefficient of x^d
    /// in (x² + bx + c)^n.
    pub fn polynomial(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// b reduced mod p.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// c reduced mod p.
    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn field(&self) -> Fp {
        self.field
    }
}

/// Row p − 1 by the O(p²) recurrence.
pub fn row_p_minus_1_direct(field: Fp, b: i64, c: i64) -> TrinomialRow {
    TrinomialRow::compute(field, field.prime() - 1, b, c)
}

/// Row p − 2 by the O(p²) recurrence.
pub fn row_p_minus_2_direct(field: Fp, b: i64, c: i64) -> TrinomialRow {
    TrinomialRow::compute(field, field.prime() - 2, b, c)
}

/// Row p − 1 in O(p): the right half is a Lucas sequence,
/// ⟨p−1, p−k⟩ ≡ u_k(−b, c) (mod p) for 1 ≤ k ≤ p, and the left half follows
/// from the c^k symmetry. Needs p ∤ c.
pub fn row_p_minus_1_lucas(field: Fp, b: i64, c: i64) -> Result<TrinomialRow, Error> {
    let p = field.prime();
    let c_red = field.reduce(c);
    if c_red == 0 {
        return Err(Error::NonInvertibleC { c, p });
    }
    let b_red = field.reduce(b);
    // Negate inside the field: b_red < p < 2^31 so the cast is lossless.
    let params = LucasParams::new(-(b_red as i64), c_red as i64);
    let u = u_sequence_mod(params, p, field);
    let n = (p - 1) as usize;
    let mut coeffs = vec![0u64; 2 * n + 1];
    for j in 0..=n {
        // k = p − j runs p down to 1.
        coeffs[n + j] = u[p as usize - j];
    }
    let mut cpow = 1u64;
    for j in 1..=n {
        cpow = field.mul(cpow, c_red);
        coeffs[n - j] = field.mul(cpow, coeffs[n + j]);
    }
    Ok(TrinomialRow { field, n: p - 1, b: b_red, c: c_red, coeffs })
}

/// (4c − b²)·⟨p−2, k⟩ computed from row p − 1 alone:
///
///   k = 0:        ⟨p−1, −1⟩ + c·⟨p−1, 1⟩ − b,
///   0 < |k| ≤ p−2: (k+1)·⟨p−1, k−1⟩ − (k−1)·c·⟨p−1, k+1⟩.
pub fn scaled_row_p_minus_2_coeff(row_above: &TrinomialRow, k: i64) -> Result<u64, Error> {
    let field = row_above.field;
    let p = field.prime();
    assert_eq!(row_above.n, p - 1, "the scaled-row relation reads off row p-1");
    let max_abs = p - 2;
    if k.unsigned_abs() > max_abs {
        return Err(Error::IndexOutOfRange { k, max_abs });
    }
    let val = if k == 0 {
        field.sub(
            field.add(row_above.coeff(-1), field.mul(row_above.c, row_above.coeff(1))),
            row_above.b,
        )
    } else {
        field.sub(
            field.mul(field.reduce(k + 1), row_above.coeff(k - 1)),
            field.mul(field.mul(field.reduce(k - 1), row_above.c), row_above.coeff(k + 1)),
        )
    };
    Ok(val)
}

/// Row p − 2 in O(p) via the Lucas row and the scaled-row relation.
/// Needs p ∤ c and p ∤ 4c − b².
pub fn row_p_minus_2_fast(field: Fp, b: i64, c: i64) -> Result<TrinomialRow, Error> {
    let p = field.prime();
    let b_red = field.reduce(b);
    let c_red = field.reduce(c);
    if c_red == 0 {
        return Err(Error::NonInvertibleC { c, p });
    }
    let disc = field.sub(field.mul(field.reduce(4), c_red), field.mul(b_red, b_red));
    if disc == 0 {
        return Err(Error::HypothesisViolated { p, hypothesis: "p does not divide 4c - b^2" });
    }
    let row_above = row_p_minus_1_lucas(field, b, c)?;
    let inv_disc = field.inv(disc);
    let n = (p - 2) as usize;
    let mut coeffs = vec![0u64; 2 * n + 1];
    for k in -(n as i64)..=(n as i64) {
        let scaled = scaled_row_p_minus_2_coeff(&row_above, k)?;
        coeffs[(n as i64 + k) as usize] = field.mul(inv_disc, scaled);
    }
    Ok(TrinomialRow { field, n: p - 2, b: b_red, c: c_red, coeffs })
}

/// Row p − 2, fast path when the hypotheses allow it, recurrence otherwise.
pub fn row_p_minus_2(field: Fp, b: i64, c: i64) -> TrinomialRow {
    match row_p_minus_2_fast(field, b, c) {
        Ok(row) => row,
        Err(_) => row_p_minus_2_direct(field, b, c),
    }
}

/// The coefficients of (x² + bx + c)^{p−2} by degree (length 2p − 3).
pub fn expand_power_p_minus_2(field: Fp, b: i64, c: i64) -> Vec<u64> {
    let row = row_p_minus_2(field, b, c);
    row.coeffs
}

/// The same power rebuilt from the regrouped form
///
///   c^{p−2} + ⟨p−2, 1⟩x^{p−1} + ⟨p−2, 0⟩x^{p−2}
///     + Σ_{k=2}^{p−2} (⟨p−2, k⟩x^{p−1} + c^{p−1−k}·⟨p−2, p−1−k⟩)·x^{k−1},
///
/// which is an exact rearrangement (the c^k symmetry folds the left half of
/// the row into the right), so the result must equal [`TrinomialRow::polynomial`]
/// coefficient by coefficient.
pub fn regrouped_expansion(row: &TrinomialRow) -> Vec<u64> {
    let field = row.field;
    let p = field.prime();
    assert_eq!(row.n, p - 2, "the regrouped form is about row p-2");
    let mut out = vec![0u64; (2 * p - 3) as usize];
    out[0] = field.pow(row.c, p - 2);
    let pm1 = (p - 1) as usize;
    out[pm1] = field.add(out[pm1], row.coeff(1));
    out[pm1 - 1] = field.add(out[pm1 - 1], row.coeff(0));
    // Walk k downward so the running power c^{p−1−k} only ever multiplies,
    // which keeps c ≡ 0 valid.
    let mut cpow = 1u64;
    for k in (2..=p.saturating_sub(2)).rev() {
        cpow = field.mul(cpow, row.c);
        let hi = (p + k - 2) as usize;
        out[hi] = field.add(out[hi], row.coeff(k as i64));
        let lo = (k - 1) as usize;
        let term = field.mul(cpow, row.coeff((p - 1 - k) as i64));
        out[lo] = field.add(out[lo], term);
    }
    out
}

/// Fold a coefficient vector mod x^m − 1: out[d mod m] accumulates coeffs[d].
/// Two polynomials agree as functions on the nonzero residues exactly when
/// their folds mod x^{p−1} − 1 agree.
pub fn reduce_mod_x_pow_minus_1(coeffs: &[u64], field: Fp, m: usize) -> Vec<u64> {
    assert!(m > 0);
    let mut out = vec![0u64; m];
    for (i, &v) in coeffs.iter().enumerate() {
        out[i % m] = field.add(out[i % m], v);
    }
    out
}

/// Closed form for (x² + x + 1)^{p−2} as a function on F_p^*, valid for
/// p ≡ 1 (mod 3). Entries of the length-p coefficient vector, with (k|3)
/// the quadratic symbol mod 3:
///
///   v[0] = 1,
///   v[k−1] = k·(k|3) + [3 | k−1] − 1/3   for 2 ≤ k ≤ p−2,
///   v[p−2] = −1/3,
///   v[p−1] = 2/3.
///
/// Compare against the exact expansion after folding both sides mod
/// x^{p−1} − 1.
pub fn cyclotomic3_power_closed_form(field: Fp) -> Result<Vec<u64>, Error> {
    let p = field.prime();
    if p % 3 != 1 {
        return Err(Error::WrongResidueClass { p, needed: "p = 1 (mod 3)" });
    }
    let inv3 = field.inv(field.reduce(3));
    let mut v = vec![0u64; p as usize];
    v[0] = 1;
    for k in 2..=(p - 2) {
        let sym: i8 = match k % 3 {
            0 => 0,
            1 => 1,
            _ => -1,
        };
        let mut val = field.mul(field.reduce(k as i64), field.symbol_residue(sym));
        if (k - 1) % 3 == 0 {
            val = field.add(val, 1);
        }
        val = field.sub(val, inv3);
        v[(k - 1) as usize] = val;
    }
    v[(p - 2) as usize] = field.neg(inv3);
    v[(p - 1) as usize] = field.add(inv3, inv3);
    Ok(v)
}

/// Central coefficient ⟨p−1, 0⟩ of (x² + x + 1)^{p−1}, computed mod p².
/// The recurrence with b = c = 1 is three adds per entry, so the whole
/// triangle costs O(p²) additions in Z/p².
pub fn central_trinomial_mod_p2(p: u64) -> Result<Fp2Element, Error> {
    let ring = FpSquared::new(p)?;
    let mut cur = vec![1u64];
    let mut next = Vec::new();
    for _ in 0..(p - 1) {
        let len = cur.len() + 2;
        next.clear();
        next.reserve(len);
        for i in 0..len as i64 {
            let get = |j: i64| -> u64 {
                if j < 0 || j as usize >= cur.len() {
                    0
                } else {
                    cur[j as usize]
                }
            };
            next.push(ring.add(get(i - 2), ring.add(get(i - 1), get(i))));
        }
        std::mem::swap(&mut cur, &mut next);
    }
    Ok(ring.element_from_residue(cur[(p - 1) as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::legendre;
    use proptest::prelude::*;

    fn f(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn small_row_examples() {
        let field = f(101);
        assert_eq!(TrinomialRow::compute(field, 0, 1, 2).polynomial(), &[1]);
        assert_eq!(TrinomialRow::compute(field, 1, 3, 5).polynomial(), &[5, 3, 1]);
        // (x² + x + 2)² = x⁴ + 2x³ + 5x² + 4x + 4.
        assert_eq!(TrinomialRow::compute(field, 2, 1, 2).polynomial(), &[4, 4, 5, 2, 1]);
        // (x² + 2x + 1)² = (x + 1)⁴.
        assert_eq!(TrinomialRow::compute(field, 2, 2, 1).polynomial(), &[1, 4, 6, 4, 1]);
    }

    #[test]
    fn binomial_specialization() {
        // ⟨n, k⟩ at (b, c) = (2, 1) is C(2n, n+k); C(20, 10) = 184756 stays
        // below the modulus so the comparison is exact.
        let field = f(1_000_003);
        let mut binom = vec![1u64];
        for m in 1..=20usize {
            let mut row = vec![0u64; m + 1];
            for j in 0..=m {
                let a = if j > 0 { binom[j - 1] } else { 0 };
                let b = if j < m { binom[j] } else { 0 };
                row[j] = a + b;
            }
            binom = row;
            if m % 2 == 0 {
                let n = (m / 2) as u64;
                let trow = TrinomialRow::compute(field, n, 2, 1);
                for k in -(n as i64)..=(n as i64) {
                    assert_eq!(trow.coeff(k), binom[(n as i64 + k) as usize], "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn next_extends_compute_and_coeff_vanishes_outside() {
        for &p in &[5u64, 7, 13] {
            let field = f(p);
            for b in -2..=2 {
                for c in -2..=2 {
                    let mut row = TrinomialRow::compute(field, 0, b, c);
                    for n in 0..12u64 {
                        assert_eq!(row.coeffs, TrinomialRow::compute(field, n, b, c).coeffs);
                        assert_eq!(row.coeff(n as i64 + 1), 0);
                        assert_eq!(row.coeff(-(n as i64) - 1), 0);
                        row = row.next();
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_c_power() {
        for &p in &[5u64, 13] {
            let field = f(p);
            for b in -3..=3 {
                for c in -3..=3 {
                    let row = TrinomialRow::compute(field, 15, b, c);
                    let c_red = field.reduce(c);
                    for k in 0..=15i64 {
                        let want = field.mul(field.pow(c_red, k as u64), row.coeff(k));
                        assert_eq!(row.coeff(-k), want, "p={p} b={b} c={c} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn row_p_collapses_to_frobenius() {
        // (x² + bx + c)^p ≡ x^{2p} + b·x^p + c (mod p).
        for &p in &[3u64, 5, 7, 11, 13, 17] {
            let field = f(p);
            for &(b, c) in &[(1i64, 1i64), (2, 2), (1, 2), (-3, 2)] {
                let row = row_p_minus_1_direct(field, b, c).next();
                for k in -(p as i64)..=(p as i64) {
                    let want = if k == p as i64 {
                        1
                    } else if k == 0 {
                        field.reduce(b)
                    } else if k == -(p as i64) {
                        field.reduce(c)
                    } else {
                        0
                    };
                    assert_eq!(row.coeff(k), want, "p={p} b={b} c={c} k={k}");
                }
            }
        }
    }

    #[test]
    fn lucas_row_matches_direct() {
        for &p in &[3u64, 5, 7, 11, 13, 17, 19] {
            let field = f(p);
            for b in -3..=3 {
                for c in -3..=3 {
                    if field.reduce(c) == 0 {
                        assert!(matches!(
                            row_p_minus_1_lucas(field, b, c),
                            Err(Error::NonInvertibleC { .. })
                        ));
                        continue;
                    }
                    let fast = row_p_minus_1_lucas(field, b, c).unwrap();
                    let slow = row_p_minus_1_direct(field, b, c);
                    assert_eq!(fast.coeffs, slow.coeffs, "p={p} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn scaled_coeff_matches_scaled_row() {
        // (4c − b²)·⟨p−2, k⟩ from the row above, including 4c ≡ b² where
        // both sides degenerate to zero.
        for &p in &[5u64, 7, 11, 13] {
            let field = f(p);
            for b in -3..=3 {
                for c in -3..=3 {
                    let above = row_p_minus_1_direct(field, b, c);
                    let below = row_p_minus_2_direct(field, b, c);
                    let disc = field.reduce(4 * c - b * b);
                    for k in -(p as i64 - 2)..=(p as i64 - 2) {
                        let got = scaled_row_p_minus_2_coeff(&above, k).unwrap();
                        let want = field.mul(disc, below.coeff(k));
                        assert_eq!(got, want, "p={p} b={b} c={c} k={k}");
                    }
                }
            }
        }
        // Pinned values.
        let field7 = f(7);
        let above = row_p_minus_1_direct(field7, 1, 1);
        assert_eq!(scaled_row_p_minus_2_coeff(&above, 0).unwrap(), 6);
        assert_eq!(scaled_row_p_minus_2_coeff(&above, 5).unwrap(), 3);
        assert!(matches!(
            scaled_row_p_minus_2_coeff(&above, 6),
            Err(Error::IndexOutOfRange { .. })
        ));
        let field5 = f(5);
        let above = row_p_minus_1_direct(field5, 2, 1);
        assert_eq!(scaled_row_p_minus_2_coeff(&above, 1).unwrap(), 0);
    }

    #[test]
    fn fast_row_matches_direct() {
        for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23] {
            let field = f(p);
            for b in -3..=3 {
                for c in -3..=3 {
                    let slow = row_p_minus_2_direct(field, b, c);
                    let c_ok = field.reduce(c) != 0;
                    let disc_ok = field.reduce(4 * c - b * b) != 0;
                    match row_p_minus_2_fast(field, b, c) {
                        Ok(fast) => {
                            assert!(c_ok && disc_ok);
                            assert_eq!(fast.coeffs, slow.coeffs, "p={p} b={b} c={c}");
                        }
                        Err(_) => assert!(!c_ok || !disc_ok, "p={p} b={b} c={c}"),
                    }
                    // The dispatcher never fails.
                    assert_eq!(row_p_minus_2(field, b, c).coeffs, slow.coeffs);
                }
            }
        }
    }

    #[test]
    fn frozen_row_p_minus_2_entries() {
        let row = row_p_minus_2(f(7), 1, 1);
        let got: Vec<u64> = (0..=5).map(|k| row.coeff(k)).collect();
        assert_eq!(got, [2, 3, 2, 1, 5, 1]);
    }

    #[test]
    fn expansion_matches_polynomial_power() {
        fn polymul(a: &[u64], b: &[u64], field: Fp) -> Vec<u64> {
            let mut out = vec![0u64; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    out[i + j] = field.add(out[i + j], field.mul(x, y));
                }
            }
            out
        }
        for &p in &[5u64, 7, 11, 13] {
            let field = f(p);
            for b in -2..=2 {
                for c in -2..=2 {
                    let base = vec![field.reduce(c), field.reduce(b), 1];
                    let mut want = vec![1u64];
                    for _ in 0..(p - 2) {
                        want = polymul(&want, &base, field);
                    }
                    // Constant powers collapse the degree; pad back out.
                    want.resize((2 * p - 3) as usize, 0);
                    assert_eq!(expand_power_p_minus_2(field, b, c), want, "p={p} b={b} c={c}");
                }
            }
        }
        assert_eq!(
            expand_power_p_minus_2(f(7), 1, 2),
            [4, 3, 6, 4, 0, 0, 0, 1, 6, 5, 1]
        );
    }

    #[test]
    fn regrouped_form_is_exact_rearrangement() {
        for &p in &[3u64, 5, 7, 11, 13, 17] {
            let field = f(p);
            for b in -3..=3 {
                for c in -3..=3 {
                    let row = row_p_minus_2(field, b, c);
                    assert_eq!(
                        regrouped_expansion(&row),
                        row.polynomial(),
                        "p={p} b={b} c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn cyclotomic_closed_form_pinned_and_folded() {
        assert_eq!(cyclotomic3_power_closed_form(f(7)).unwrap()[6], 3);
        assert_eq!(cyclotomic3_power_closed_form(f(13)).unwrap()[11], 4);
        assert!(matches!(
            cyclotomic3_power_closed_form(f(5)),
            Err(Error::WrongResidueClass { .. })
        ));
        for &p in &[7u64, 13, 19, 31, 37, 43] {
            let field = f(p);
            let m = (p - 1) as usize;
            let exact = reduce_mod_x_pow_minus_1(
                row_p_minus_2(field, 1, 1).polynomial(),
                field,
                m,
            );
            let closed = reduce_mod_x_pow_minus_1(
                &cyclotomic3_power_closed_form(field).unwrap(),
                field,
                m,
            );
            assert_eq!(exact, closed, "p={p}");
        }
    }

    #[test]
    fn central_coefficient_mod_p_squared() {
        // Pinned small cases of the central column: 1, 1, 3, 7, 19, 51, 141.
        assert_eq!(central_trinomial_mod_p2(5).unwrap().value(), 19);
        assert_eq!(central_trinomial_mod_p2(7).unwrap().value(), 141 % 49);
        // ⟨p−1, 0⟩ ≡ (p|3)·3^{p−1} (mod p²) for odd p ≠ 3.
        for &p in &[5u64, 7, 11, 13, 17, 19, 23] {
            let ring = FpSquared::new(p).unwrap();
            let sym = legendre(p as i64, 3);
            let want = ring.mul(ring.reduce(sym as i64), ring.pow(3, p - 1));
            assert_eq!(central_trinomial_mod_p2(p).unwrap().value(), want, "p={p}");
        }
    }

    #[test]
    fn top_row_symbols_mod_three() {
        // ⟨p−1, p−k⟩ ≡ (k|3) (mod p) for 0 ≤ k ≤ p, every odd prime.
        for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let field = f(p);
            let row = row_p_minus_1_direct(field, 1, 1);
            for k in 0..=p {
                let sym: i8 = match k % 3 {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
                assert_eq!(
                    row.coeff((p - k) as i64),
                    field.symbol_residue(sym),
                    "p={p} k={k}"
                );
            }
        }
    }

    proptest! {
        // The fast row builders agree with the recurrence on random inputs.
        #[test]
        fn fast_rows_match_direct_prop(b in -20i64..=20, c in -20i64..=20, idx in 0usize..4) {
            let p = [29u64, 31, 37, 41][idx];
            let field = f(p);
            if field.reduce(c) != 0 {
                let fast = row_p_minus_1_lucas(field, b, c).unwrap();
                let slow = row_p_minus_1_direct(field, b, c);
                prop_assert_eq!(fast.polynomial(), slow.polynomial());
            }
            let row = row_p_minus_2(field, b, c);
            let slow = row_p_minus_2_direct(field, b, c);
            prop_assert_eq!(row.polynomial(), slow.polynomial());
        }
    }
}
