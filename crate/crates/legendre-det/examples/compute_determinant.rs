//! Compute D_p(b,c) = det[(i^2 + b i j + c j^2)^(p-2)] for a few primes and
//! compare the Legendre symbol against the closed-form predictions.

use legendre_det::claims::{predict_d11, predict_d22};
use legendre_det::{dp_det, dp_symbol, Fp};

fn main() {
    println!("p     (b,c)    D_p mod p   symbol  predicted");
    for p in [7u64, 13, 17, 19, 29, 31, 43, 61, 73] {
        let field = Fp::new(p).unwrap();

        let det = dp_det(field, 1, 1);
        let sym = dp_symbol(field, 1, 1);
        let pred = predict_d11(p).map(|s| s.to_string()).unwrap_or("-".into());
        println!("{p:<5} (1,1)    {det:<11} {sym:<7} {pred}");

        let det = dp_det(field, 2, 2);
        let sym = dp_symbol(field, 2, 2);
        // The (2,2) prediction covers the symbol for p = 1 (mod 4) and the
        // stronger vanishing D_p = 0 (mod p) for p = 3 (mod 4).
        println!("{p:<5} (2,2)    {det:<11} {sym:<7} {}", predict_d22(p));
    }
}
