//! Lucas sequences u_n(A,B): the discriminant-symbol congruence at n = p,
//! the vanishing at n = p - (disc|p), and the (-2,2) closed form.

use legendre_det::lucas::{check_congruences, u_exact, u_sequence_mod, LucasParams};
use legendre_det::{legendre, Fp};

fn main() {
    // Fibonacci numbers are u_n(1,-1).
    let fib = LucasParams::new(1, -1);
    let first: Vec<String> = (0..=12).map(|n| u_exact(fib, n).unwrap().to_string()).collect();
    println!("u_n(1,-1) = {}", first.join(", "));

    println!("\nu_p = (A^2-4B | p) and u_(p-eps) = 0 (mod p):");
    for p in [11u64, 13, 17, 19, 23] {
        let field = Fp::new(p).unwrap();
        let eps = legendre(fib.discriminant(), p);
        let u = u_sequence_mod(fib, p + 1, field);
        let check = check_congruences(fib, field);
        println!(
            "  p={p:<3} eps={eps:<3} u_p={:<3} u_(p-eps)={:<3} holds={}",
            u[p as usize],
            u[(p as i64 - eps as i64) as usize],
            check.holds()
        );
    }

    // At (A,B) = (-2,2) the sequence is periodic up to powers of -4.
    let params = LucasParams::new(-2, 2);
    let vals: Vec<String> = (0..=10).map(|n| u_exact(params, n).unwrap().to_string()).collect();
    println!("\nu_n(-2,2) = {}", vals.join(", "));
    println!("pattern: (-4)^floor(n/4) times the cycle 0, 1, -2, 2");
}
