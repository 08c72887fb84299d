//! Lucas sequences u_0 = 0, u_1 = 1, u_{n+1} = A·u_n − B·u_{n−1}.
//!
//! These index the rows of the trinomial table one step below the top (see
//! `trinomial::row_p_minus_1_lucas`) and carry two congruences every
//! per-prime claim leans on: u_p ≡ (D/p) and u_{p−(D/p)} ≡ 0 (mod p) for
//! D = A² − 4B when p ∤ B.

use num_bigint::BigInt;

use crate::error::Error;
use crate::field::Fp;

/// Exact values grow like |root|^n; this keeps them to a few kilobytes.
pub const EXACT_INDEX_BOUND: u64 = 10_000;

/// The pair (A, B) of u_{n+1} = A·u_n − B·u_{n−1}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LucasParams {
    pub a: i64,
    pub b: i64,
}

impl LucasParams {
    pub fn new(a: i64, b: i64) -> LucasParams {
        LucasParams { a, b }
    }

    /// D = A² − 4B, the discriminant of x² − Ax + B.
    pub fn discriminant(self) -> i64 {
        self.a * self.a - 4 * self.b
    }
}

/// u_0, …, u_n mod p.
pub fn u_sequence_mod(params: LucasParams, n: u64, field: Fp) -> Vec<u64> {
    let a = field.reduce(params.a);
    let b = field.reduce(params.b);
    let mut seq = Vec::with_capacity(n as usize + 1);
    seq.push(0);
    if n == 0 {
        return seq;
    }
    seq.push(1);
    for i in 2..=n as usize {
        let next = field.sub(field.mul(a, seq[i - 1]), field.mul(b, seq[i - 2]));
        seq.push(next);
    }
    seq
}

/// u_n mod p without keeping the prefix.
pub fn u_mod(params: LucasParams, n: u64, field: Fp) -> u64 {
    let a = field.reduce(params.a);
    let b = field.reduce(params.b);
    let (mut prev, mut cur) = (0, if n == 0 { 0 } else { 1 });
    for _ in 1..n {
        let next = field.sub(field.mul(a, cur), field.mul(b, prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact integer u_n, guarded by [`EXACT_INDEX_BOUND`].
pub fn u_exact(params: LucasParams, n: u64) -> Result<BigInt, Error> {
    if n > EXACT_INDEX_BOUND {
        return Err(Error::BoundExceeded { value: n, bound: EXACT_INDEX_BOUND });
    }
    let a = BigInt::from(params.a);
    let b = BigInt::from(params.b);
    let (mut prev, mut cur) = (BigInt::from(0), BigInt::from(if n == 0 { 0 } else { 1 }));
    for _ in 1..n {
        let next = &a * &cur - &b * &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Closed form for (A, B) = (−2, 2): the sequence cycles 0, 1, −2, 2 with an
/// extra factor −4 every four steps.
pub fn u_closed_form_neg2_2(k: u64) -> BigInt {
    let base: i64 = match k % 4 {
        0 => 0,
        1 => 1,
        2 => -2,
        _ => 2,
    };
    BigInt::from(-4).pow((k / 4) as u32) * BigInt::from(base)
}

/// Outcome of the per-prime congruence pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CongruenceCheck {
    /// u_p ≡ (D/p) (mod p)?
    pub symbol_match: bool,
    /// u_{p−(D/p)} ≡ 0 (mod p)? `None` when p | B (hypothesis fails, the
    /// vanishing is not claimed there).
    pub vanishing: Option<bool>,
}

impl CongruenceCheck {
    pub fn holds(self) -> bool {
        self.symbol_match && self.vanishing.unwrap_or(true)
    }
}

/// Check u_p ≡ (D/p) and, when p ∤ B, u_{p−(D/p)} ≡ 0 (mod p).
pub fn check_congruences(params: LucasParams, field: Fp) -> CongruenceCheck {
    let p = field.prime();
    let eps = field.legendre(params.discriminant());
    let seq = u_sequence_mod(params, p + 1, field);
    let symbol_match = seq[p as usize] == field.symbol_residue(eps);
    let vanishing = if field.reduce(params.b) == 0 {
        None
    } else {
        let idx = (p as i64 - eps as i64) as usize;
        Some(seq[idx] == 0)
    };
    CongruenceCheck { symbol_match, vanishing }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fibonacci_values() {
        // (A, B) = (1, −1) is the Fibonacci recurrence.
        let fib = LucasParams::new(1, -1);
        let f = Fp::new(101).unwrap();
        assert_eq!(u_mod(fib, 7, f), 13);
        assert_eq!(u_mod(fib, 10, f), 55);
        assert_eq!(u_sequence_mod(fib, 10, f)[..7], [0, 1, 1, 2, 3, 5, 8]);
        assert_eq!(u_exact(fib, 50).unwrap(), BigInt::from(12_586_269_025u64));
    }

    #[test]
    fn period_three_params() {
        // (A, B) = (−1, 1) cycles 0, 1, −1.
        let f = Fp::new(13).unwrap();
        assert_eq!(u_sequence_mod(LucasParams::new(-1, 1), 7, f), [0, 1, 12, 0, 1, 12, 0, 1]);
    }

    #[test]
    fn neg2_2_closed_form_small() {
        let exact: Vec<i64> = [0, 1, -2, 2, 0, -4, 8, -8, 0, 16]
            .iter()
            .copied()
            .collect();
        for (k, want) in exact.iter().enumerate() {
            assert_eq!(u_closed_form_neg2_2(k as u64), BigInt::from(*want), "k = {k}");
        }
    }

    #[test]
    fn neg2_2_closed_form_full_range() {
        // The invariant the closed form is used under: exact equality up to
        // index 2000.
        let (mut prev, mut cur) = (BigInt::from(0), BigInt::from(1));
        assert_eq!(u_closed_form_neg2_2(0), prev);
        for k in 1..=2000u64 {
            assert_eq!(u_closed_form_neg2_2(k), cur, "k = {k}");
            let next = BigInt::from(-2) * &cur - BigInt::from(2) * &prev;
            prev = std::mem::replace(&mut cur, next);
        }
    }

    #[test]
    fn exact_bound_guard() {
        assert!(matches!(
            u_exact(LucasParams::new(1, -1), EXACT_INDEX_BOUND + 1),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn congruences_fibonacci_at_5() {
        // D = 5, so (D/5) = 0 and u_5 = 5 ≡ 0 covers both congruences.
        let f = Fp::new(5).unwrap();
        let out = check_congruences(LucasParams::new(1, -1), f);
        assert!(out.symbol_match);
        assert_eq!(out.vanishing, Some(true));
        assert!(out.holds());
    }

    #[test]
    fn congruences_skip_vanishing_when_p_divides_b() {
        let f = Fp::new(7).unwrap();
        let out = check_congruences(LucasParams::new(3, 7), f);
        assert_eq!(out.vanishing, None);
        assert!(out.symbol_match);
    }

    #[test]
    fn congruences_hold_on_small_grid() {
        for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23] {
            let f = Fp::new(p).unwrap();
            for a in -4..=4 {
                for b in -4..=4 {
                    assert!(
                        check_congruences(LucasParams::new(a, b), f).holds(),
                        "p={p} A={a} B={b}"
                    );
                }
            }
        }
    }

    proptest! {
        // Modular path = exact path reduced.
        #[test]
        fn mod_matches_exact(a in -5i64..=5, b in -5i64..=5, n in 0u64..200, idx in 0usize..5) {
            let p = [5u64, 7, 13, 97, 499][idx];
            let f = Fp::new(p).unwrap();
            let params = LucasParams::new(a, b);
            let exact = u_exact(params, n).unwrap();
            let reduced = ((exact % p) + p) % p;
            prop_assert_eq!(BigInt::from(u_mod(params, n, f)), reduced);
        }

        #[test]
        fn sequence_tail_matches_u_mod(a in -5i64..=5, b in -5i64..=5, n in 0u64..100) {
            let f = Fp::new(101).unwrap();
            let params = LucasParams::new(a, b);
            let seq = u_sequence_mod(params, n, f);
            prop_assert_eq!(seq.len() as u64, n + 1);
            prop_assert_eq!(seq[n as usize], u_mod(params, n, f));
        }
    }
}
