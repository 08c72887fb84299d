//! The generalized trinomial triangle mod p: a few rows at (b,c) = (1,1),
//! the Frobenius collapse of row p, and the symbol pattern in row p-1.

use legendre_det::field::Fp;
use legendre_det::trinomial::{row_p_minus_1_direct, TrinomialRow};

fn main() {
    let p = 13u64;
    let field = Fp::new(p).unwrap();

    println!("<n,k> mod {p} at (b,c) = (1,1), k = -n..n:");
    for n in 0..6 {
        let row = TrinomialRow::compute(field, n, 1, 1);
        let ks: Vec<String> =
            (-(n as i64)..=n as i64).map(|k| row.coeff(k).to_string()).collect();
        println!("  n={n}: {}", ks.join(" "));
    }

    // Row p collapses to x^(2p) + b x^p + c: three surviving coefficients.
    let row_p = TrinomialRow::compute(field, p, 1, 1);
    let nonzero: Vec<(i64, u64)> = (-(p as i64)..=p as i64)
        .map(|k| (k, row_p.coeff(k)))
        .filter(|&(_, v)| v != 0)
        .collect();
    println!("row p = {p} nonzero entries (k, value): {nonzero:?}");

    // Row p-1 at (1,1) reads off the mod-3 symbol: <p-1, p-k> = (k|3).
    let row = row_p_minus_1_direct(field, 1, 1);
    let syms: Vec<u64> = (0..=p).map(|k| row.coeff((p - k) as i64)).collect();
    println!("row p-1 entries <p-1,p-k> for k = 0..{p}: {syms:?}");
    println!("(1 where k = 1 (mod 3), {} = -1 where k = 2 (mod 3), 0 where 3 | k)", p - 1);
}
