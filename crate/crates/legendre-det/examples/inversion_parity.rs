//! Inv_p counts the inversions of the permutation i -> i^(p-2) mod p on
//! {1, ..., p-1}; its parity is always (p+1)/2 mod 2.

use legendre_det::field::primes_in_range;
use legendre_det::{inversion_count, Fp};

fn main() {
    println!("p     Inv_p    Inv_p mod 2   (p+1)/2 mod 2");
    for p in primes_in_range(3, 100).unwrap() {
        if p == 2 {
            continue;
        }
        let inv = inversion_count(Fp::new(p).unwrap());
        println!(
            "{p:<5} {:<8} {:<13} {}",
            inv.count,
            inv.count % 2,
            (p + 1) / 2 % 2
        );
    }
}
