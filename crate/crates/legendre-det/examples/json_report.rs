//! Stream verification records in the two machine formats: one json object
//! per line, then the same records as csv.

use legendre_det::scan::{csv_header, encode_csv_line, encode_json_line};
use legendre_det::{run_scan, ClaimId, ScanConfig};

fn main() {
    let mut config = ScanConfig::new(3, 23);
    config.claims = vec![ClaimId::Thm12, ClaimId::Lemma43];
    config.bc_grid = vec![(2, 2), (1, -1)];

    let records = run_scan(&config).unwrap();

    println!("# json-lines");
    for rec in &records {
        println!("{}", encode_json_line(rec));
    }

    println!("\n# csv");
    println!("{}", csv_header());
    for rec in &records {
        println!("{}", encode_csv_line(rec));
    }
}
