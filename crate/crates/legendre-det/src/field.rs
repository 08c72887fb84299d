//! Arithmetic mod an odd prime p, and mod p² for the one congruence that
//! lives a level higher.
//!
//! `Fp` is a validated field context: constructing one proves the modulus is
//! an odd prime (deterministic trial division) small enough for the fast
//! product path. Hot loops pass bare `u64` residues together with the
//! context; `FpElement` is the tagged scalar used at API boundaries where
//! mixing moduli would be easy.

use crate::error::Error;

/// Exclusive upper bound on supported moduli. With p < 2^31 the product of
/// two residues fits in a u64, which the reduction below relies on.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Upper bound for the prime sieve.
pub const SIEVE_BOUND: u64 = 1_000_000;

/// Deterministic primality by trial division. Rejects 2 on purpose: every
/// structure in this crate needs an odd modulus.
pub fn is_odd_prime(n: u64) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Ascending primes in [lo, hi] (2 included when in range) by sieve of
/// Eratosthenes. `hi` is capped at [`SIEVE_BOUND`].
pub fn primes_in_range(lo: u64, hi: u64) -> Result<Vec<u64>, Error> {
    if hi > SIEVE_BOUND {
        return Err(Error::BoundExceeded { value: hi, bound: SIEVE_BOUND });
    }
    if hi < 2 || lo > hi {
        return Ok(Vec::new());
    }
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut d = 2;
    while d * d <= n {
        if !composite[d] {
            let mut m = d * d;
            while m <= n {
                composite[m] = true;
                m += d;
            }
        }
        d += 1;
    }
    Ok((lo.max(2)..=hi).filter(|&q| !composite[q as usize]).collect())
}

/// Field context for F_p. Copy-cheap; carries the Barrett constant for
/// division-free products.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    p: u64,
    // floor(2^64 / p); for odd p this equals u64::MAX / p.
    barrett: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Fp, Error> {
        if p >= MAX_MODULUS {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Fp { p, barrett: u64::MAX / p })
    }

    pub fn prime(self) -> u64 {
        self.p
    }

    /// Canonical residue of any signed integer.
    pub fn reduce(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        if a >= b { a - b } else { a + self.p - b }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        debug_assert!(a < self.p);
        if a == 0 { 0 } else { self.p - a }
    }

    /// Barrett-reduced product. q = floor(ab·m / 2^64) is off from ab/p by at
    /// most one for ab < 2^62, so a single correction step suffices.
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        let z = a * b;
        let q = ((z as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = z - q * self.p;
        if r >= self.p {
            r -= self.p;
        }
        r
    }

    /// Square-and-multiply. pow(0, 0) = 1 by the empty-product convention.
    pub fn pow(self, a: u64, mut e: u64) -> u64 {
        debug_assert!(a < self.p);
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// a^{p−2}: the inverse of a for a ≢ 0, and 0 for a ≡ 0. This is exactly
    /// the entry convention of the determinant matrices: "1/x" means x^{p−2}.
    #[inline]
    pub fn fermat_entry(self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    /// Inverse of a nonzero residue.
    #[inline]
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero residue");
        self.pow(a, self.p - 2)
    }

    /// Legendre symbol (a/p) by Euler's criterion: a^{(p−1)/2} is 0, 1, or
    /// p−1, reported as 0, +1, −1.
    pub fn legendre(self, a: i64) -> i8 {
        let r = self.pow(self.reduce(a), (self.p - 1) / 2);
        if r == 0 {
            0
        } else if r == 1 {
            1
        } else {
            -1
        }
    }

    /// Residue of a signed symbol value (−1 becomes p−1).
    pub fn symbol_residue(self, s: i8) -> u64 {
        self.reduce(s as i64)
    }

    pub fn element(self, a: i64) -> FpElement {
        FpElement { value: self.reduce(a), field: self }
    }
}

/// Residue tagged with its field. Operators panic on mixed moduli.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FpElement {
    value: u64,
    field: Fp,
}

impl FpElement {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.field.p
    }

    pub fn field(self) -> Fp {
        self.field
    }

    pub fn pow(self, e: u64) -> FpElement {
        FpElement { value: self.field.pow(self.value, e), field: self.field }
    }

    /// See [`Fp::fermat_entry`].
    pub fn fermat_entry(self) -> FpElement {
        FpElement { value: self.field.fermat_entry(self.value), field: self.field }
    }
}

fn assert_same_modulus(a: FpElement, b: FpElement) {
    assert_eq!(a.field.p, b.field.p, "mixed moduli {} and {}", a.field.p, b.field.p);
}

impl std::ops::Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        assert_same_modulus(self, rhs);
        FpElement { value: self.field.add(self.value, rhs.value), field: self.field }
    }
}

impl std::ops::Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        assert_same_modulus(self, rhs);
        FpElement { value: self.field.sub(self.value, rhs.value), field: self.field }
    }
}

impl std::ops::Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        assert_same_modulus(self, rhs);
        FpElement { value: self.field.mul(self.value, rhs.value), field: self.field }
    }
}

impl std::ops::Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        FpElement { value: self.field.neg(self.value), field: self.field }
    }
}

impl std::fmt::Display for FpElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.field.p)
    }
}

/// Legendre symbol (a/p) without building a context first. The caller
/// guarantees p is an odd prime; this is the convenience form used when p
/// varies faster than a context is worth.
pub fn legendre(a: i64, p: u64) -> i8 {
    debug_assert!(is_odd_prime(p), "legendre needs an odd prime, got {p}");
    let a = a.rem_euclid(p as i64) as u64;
    let mut base = a as u128;
    let mut e = (p - 1) / 2;
    let m = p as u128;
    let mut acc: u128 = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    if acc == 0 {
        0
    } else if acc == 1 {
        1
    } else {
        -1
    }
}

/// The ring Z/p²Z, for congruences stated one level above p.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FpSquared {
    p: u64,
    p2: u64,
}

impl FpSquared {
    pub fn new(p: u64) -> Result<FpSquared, Error> {
        if p >= MAX_MODULUS {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(FpSquared { p, p2: p * p })
    }

    pub fn prime(self) -> u64 {
        self.p
    }

    pub fn modulus(self) -> u64 {
        self.p2
    }

    pub fn reduce(self, a: i64) -> u64 {
        a.rem_euclid(self.p2 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p2 && b < self.p2);
        let s = a + b;
        if s >= self.p2 { s - self.p2 } else { s }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p2 && b < self.p2);
        if a >= b { a - b } else { a + self.p2 - b }
    }

    /// Residues reach p² < 2^62, so the product needs the wide path.
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p2 && b < self.p2);
        (a as u128 * b as u128 % self.p2 as u128) as u64
    }

    pub fn pow(self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element(self, a: i64) -> Fp2Element {
        Fp2Element { value: self.reduce(a), modulus_squared: self.p2 }
    }

    pub fn element_from_residue(self, value: u64) -> Fp2Element {
        debug_assert!(value < self.p2);
        Fp2Element { value, modulus_squared: self.p2 }
    }
}

/// A residue mod p².
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp2Element {
    value: u64,
    modulus_squared: u64,
}

impl Fp2Element {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus_squared(self) -> u64 {
        self.modulus_squared
    }
}
