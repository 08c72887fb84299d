//! Determinants of the matrices [(i² + b·i·j + c·j²)^{p−2}] over F_p, the
//! generalized trinomial and Lucas machinery that predicts them, and a
//! scanner that checks the whole catalogue of congruence claims over prime
//! ranges.
//!
//! Start from the runnable examples:
//!
//! ```text
//! cargo run --example compute_determinant
//! cargo run --example trinomial_rows
//! cargo run --example lucas_identities
//! cargo run --example inversion_parity
//! cargo run --example krattenthaler_product
//! cargo run --example u_profile_cases
//! cargo run --example verify_range
//! cargo run --example json_report
//! ```
//!
//! The same functionality is scriptable through the `legendre-det` binary
//! (`compute`, `verify`, `primes`).

pub mod claims;
pub mod error;
pub mod field;
pub mod lucas;
pub mod matrix;
pub mod scan;
pub mod trinomial;

pub use claims::{check_claim, ClaimId, Status, UFunction, VerificationRecord};
pub use scan::{default_bc_grid, run_scan, run_scan_with, ScanConfig, Summary};
pub use error::Error;
pub use field::{is_odd_prime, legendre, primes_in_range, Fp, Fp2Element, FpElement, FpSquared};
pub use lucas::LucasParams;
pub use matrix::{dp_det, dp_symbol, inversion_count, MatrixFp, SymbolMatrix};
pub use trinomial::TrinomialRow;
