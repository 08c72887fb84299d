//! The product formula: for deg P <= n-1 with coefficients a_0..a_(n-1),
//! det[P(x_i y_j)] = a_0 ... a_(n-1) prod_(i<j) (x_i - x_j)(y_i - y_j).
//! The determinant factors completely; no minor expansion needed.

use legendre_det::matrix::{krattenthaler_det, poly_value_matrix};
use legendre_det::Fp;

fn main() {
    let field = Fp::new(101).unwrap();
    // P(t) = 3 + 5t + 2t^2 + 7t^3 on four nodes.
    let coeffs = [3u64, 5, 2, 7];
    let xs = [1u64, 4, 9, 16];
    let ys = [2u64, 3, 5, 7];

    let direct = poly_value_matrix(field, &coeffs, &xs, &ys).det();
    let product = krattenthaler_det(field, &coeffs, &xs, &ys);
    println!("det[P(x_i y_j)] over F_101");
    println!("  gaussian elimination: {direct}");
    println!("  factored product:     {product}");
    assert_eq!(direct, product);

    // Repeated nodes kill the Vandermonde factor, hence the determinant.
    let xs = [1u64, 4, 4, 16];
    let direct = poly_value_matrix(field, &coeffs, &xs, &ys).det();
    println!("repeated x-node: det = {direct} (product formula gives 0)");
    assert_eq!(direct, krattenthaler_det(field, &coeffs, &xs, &ys));
}
