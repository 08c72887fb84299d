//! The U-profile at (b,c) = (2,2): U(k) = <p-2,k> + 2^(p-1-k) <p-2,p-1-k>.
//! For p = 1 (mod 8) the normalization (-4)^(s+1) U(4s+r) follows one of
//! four exact patterns in r; for p = 5 (mod 8) the half-point U((p-1)/2)
//! vanishes, which forces (D_p(2,2) | p) = 0.

use legendre_det::{Fp, UFunction};

fn main() {
    // p = 17 = 1 (mod 8): print the normalized profile.
    let p = 17u64;
    let field = Fp::new(p).unwrap();
    let ufn = UFunction::new(field, 2, 2);
    let neg4 = field.reduce(-4);
    println!("p = {p}: k, U(k), (-4)^(s+1) U(k) with k = 4s+r, case value");
    for k in 2..=(p - 2) {
        let (s, r) = (k / 4, k % 4);
        let norm = field.mul(field.pow(neg4, s + 1), ufn.u(k));
        let case = match r {
            0 => "2".to_string(),
            1 => format!("-(2k+2) = {}", field.neg(field.reduce(2 * k as i64 + 2))),
            2 => format!("2k+1 = {}", field.reduce(2 * k as i64 + 1)),
            _ => format!("-k = {}", field.neg(field.reduce(k as i64))),
        };
        println!("  k={k:<3} U={:<3} norm={:<3} {case}", ufn.u(k), norm);
    }
    println!("  U(p-2) = {} (always 2 for p = 1 (mod 4))", ufn.u(p - 2));

    // p = 5 (mod 8): the half-point zero.
    println!();
    for p in [5u64, 13, 29, 37, 53] {
        let field = Fp::new(p).unwrap();
        let ufn = UFunction::new(field, 2, 2);
        println!("p = {p:<3} U((p-1)/2) = {} zero at k = {:?}", ufn.u((p - 1) / 2), ufn.zero_in_window());
    }
}
