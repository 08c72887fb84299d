//! Range scanning: fan the claim catalogue out over a prime interval,
//! stream the records to a sink, and encode them as json-lines, csv, or
//! human-readable text.
//!
//! Work is partitioned by prime: each worker takes whole primes off a shared
//! counter and checks every requested claim there, so records for one prime
//! are always produced by a single thread.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use serde::Serialize;

use crate::claims::{check_claim, ClaimId, Status, VerificationRecord};
use crate::error::Error;
use crate::field::primes_in_range;

/// The default (b,c) grid: all pairs with -3 <= b,c <= 3.
pub fn default_bc_grid() -> Vec<(i64, i64)> {
    let mut grid = Vec::with_capacity(49);
    for b in -3..=3 {
        for c in -3..=3 {
            grid.push((b, c));
        }
    }
    grid
}

/// What to scan: a prime interval, the claims to check, the parameter grid
/// for the claims that take one, and the worker count.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub pmin: u64,
    pub pmax: u64,
    pub claims: Vec<ClaimId>,
    pub bc_grid: Vec<(i64, i64)>,
    pub workers: usize,
}

impl ScanConfig {
    /// Full catalogue over [pmin, pmax] with the default grid, one worker.
    pub fn new(pmin: u64, pmax: u64) -> ScanConfig {
        ScanConfig {
            pmin,
            pmax,
            claims: ClaimId::ALL.to_vec(),
            bc_grid: default_bc_grid(),
            workers: 1,
        }
    }
}

/// Pass/fail/not-applicable counts for one claim.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub na: u64,
}

/// Scan totals: one tally per requested claim, in request order.
#[derive(Clone, Debug)]
pub struct Summary {
    pub tallies: Vec<(ClaimId, Tally)>,
    pub records: u64,
    pub wall_ms: f64,
}

impl Summary {
    pub fn failures(&self) -> u64 {
        self.tallies.iter().map(|(_, t)| t.fail).sum()
    }

    /// Multi-line per-claim totals plus a footer.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for (claim, t) in &self.tallies {
            out.push_str(&format!(
                "{:<22} pass={:<8} fail={:<8} na={}\n",
                claim.name(),
                t.pass,
                t.fail,
                t.na
            ));
        }
        out.push_str(&format!(
            "{} records, {} failures, {:.1} ms\n",
            self.records,
            self.failures(),
            self.wall_ms
        ));
        out
    }
}

fn add_to_tally(tallies: &mut [(ClaimId, Tally)], rec: &VerificationRecord) {
    if let Some((_, t)) = tallies.iter_mut().find(|(c, _)| *c == rec.claim) {
        match rec.status {
            Status::Pass => t.pass += 1,
            Status::Fail => t.fail += 1,
            Status::NotApplicable => t.na += 1,
        }
    }
}

/// Run the scan, handing each record to `sink` as it is produced. With more
/// than one worker the records arrive in nondeterministic order (grouped by
/// prime); use [`run_scan`] when a stable order matters.
pub fn run_scan_with(
    config: &ScanConfig,
    mut sink: impl FnMut(&VerificationRecord),
) -> Result<Summary, Error> {
    let start = Instant::now();
    // Only odd primes carry content here: every claim needs p-1 even and
    // most need (p-1)/2 of each residue class, so 2 is skipped by design.
    let primes: Vec<u64> = if config.pmax < 3 {
        Vec::new()
    } else {
        primes_in_range(config.pmin.max(3), config.pmax)?
            .into_iter()
            .filter(|&p| p != 2)
            .collect()
    };
    let mut tallies: Vec<(ClaimId, Tally)> =
        config.claims.iter().map(|&c| (c, Tally::default())).collect();
    let mut records = 0u64;
    let workers = config.workers.max(1).min(primes.len().max(1));

    if workers <= 1 {
        for &p in &primes {
            for &claim in &config.claims {
                for rec in check_claim(claim, p, &config.bc_grid)? {
                    add_to_tally(&mut tallies, &rec);
                    records += 1;
                    sink(&rec);
                }
            }
        }
    } else {
        let next = AtomicUsize::new(0);
        let (tx, rx) = mpsc::channel::<Result<Vec<VerificationRecord>, Error>>();
        let mut first_err: Option<Error> = None;
        std::thread::scope(|s| {
            for _ in 0..workers {
                let tx = tx.clone();
                let next = &next;
                let primes = &primes;
                s.spawn(move || loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= primes.len() {
                        break;
                    }
                    for &claim in &config.claims {
                        let out = check_claim(claim, primes[i], &config.bc_grid);
                        let failed = out.is_err();
                        if tx.send(out).is_err() || failed {
                            return;
                        }
                    }
                });
            }
            drop(tx);
            // Drain on this thread so the sink never needs to be Send.
            for msg in rx {
                match msg {
                    Ok(recs) => {
                        for rec in recs {
                            add_to_tally(&mut tallies, &rec);
                            records += 1;
                            sink(&rec);
                        }
                    }
                    Err(e) => {
                        if first_err.is_none() {
                            first_err = Some(e);
                        }
                    }
                }
            }
        });
        if let Some(e) = first_err {
            return Err(e);
        }
    }
    Ok(Summary { tallies, records, wall_ms: start.elapsed().as_secs_f64() * 1e3 })
}

/// Run the scan and return every record, sorted by (p, claim, params) so the
/// output does not depend on the worker count.
pub fn run_scan(config: &ScanConfig) -> Result<Vec<VerificationRecord>, Error> {
    let mut out = Vec::new();
    run_scan_with(config, |rec| out.push(rec.clone()))?;
    out.sort_by_key(|r| (r.p, r.claim, r.params));
    Ok(out)
}

#[derive(Serialize)]
struct Wire<'a> {
    claim: &'a str,
    p: u64,
    b: Option<i64>,
    c: Option<i64>,
    expected: &'a str,
    observed: &'a str,
    status: &'a str,
    elapsed_ms: f64,
}

/// One record as a json-lines object with the stable field set
/// {claim, p, b, c, expected, observed, status, elapsed_ms}.
pub fn encode_json_line(rec: &VerificationRecord) -> String {
    let wire = Wire {
        claim: rec.claim.name(),
        p: rec.p,
        b: rec.params.map(|(b, _)| b),
        c: rec.params.map(|(_, c)| c),
        expected: &rec.expected,
        observed: &rec.observed,
        status: rec.status.as_str(),
        elapsed_ms: rec.elapsed_ms,
    };
    serde_json::to_string(&wire).expect("flat struct always serializes")
}

/// Header matching [`encode_csv_line`].
pub fn csv_header() -> &'static str {
    "claim,p,b,c,expected,observed,status,elapsed_ms"
}

/// One record as a csv row; b and c are empty for parameterless claims.
/// Every field value is comma-free by construction, so no quoting is needed.
pub fn encode_csv_line(rec: &VerificationRecord) -> String {
    let (b, c) = match rec.params {
        Some((b, c)) => (b.to_string(), c.to_string()),
        None => (String::new(), String::new()),
    };
    format!(
        "{},{},{},{},{},{},{},{:.3}",
        rec.claim.name(),
        rec.p,
        b,
        c,
        rec.expected,
        rec.observed,
        rec.status.as_str(),
        rec.elapsed_ms
    )
}

/// One record as a human-readable line.
pub fn format_human(rec: &VerificationRecord) -> String {
    let params = match rec.params {
        Some((b, c)) => format!(" (b={b}, c={c})"),
        None => String::new(),
    };
    let body = match rec.status {
        Status::NotApplicable => {
            format!("na{}", rec.note.as_deref().map(|n| format!(": {n}")).unwrap_or_default())
        }
        _ => {
            let note = rec.note.as_deref().map(|n| format!(" [{n}]")).unwrap_or_default();
            format!(
                "{}: expected {} observed {}{}",
                rec.status.as_str(),
                rec.expected,
                rec.observed,
                note
            )
        }
    };
    format!("{:<22} p={:<6}{} {}", rec.claim.name(), rec.p, params, body)
}

/// Parse a claim list: "all" (any case) or a comma-separated list of wire
/// names. Duplicates are dropped, order preserved.
pub fn parse_claim_list(arg: &str) -> Result<Vec<ClaimId>, String> {
    if arg.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in arg.split(',') {
        let name = part.trim();
        if name.is_empty() {
            continue;
        }
        match ClaimId::parse(name) {
            Some(id) => {
                if !out.contains(&id) {
                    out.push(id);
                }
            }
            None => return Err(format!("unknown claim name: {name}")),
        }
    }
    if out.is_empty() {
        return Err("empty claim list".to_string());
    }
    Ok(out)
}

/// Parse a (b,c) grid: "default" or semicolon-separated "b,c" pairs,
/// e.g. "1,1;2,2;-1,3".
pub fn parse_bc_grid(arg: &str) -> Result<Vec<(i64, i64)>, String> {
    if arg.trim().eq_ignore_ascii_case("default") {
        return Ok(default_bc_grid());
    }
    let mut out = Vec::new();
    for part in arg.split(';') {
        let pair = part.trim();
        if pair.is_empty() {
            continue;
        }
        let (bs, cs) = pair
            .split_once(',')
            .ok_or_else(|| format!("bad grid pair (want b,c): {pair}"))?;
        let b: i64 =
            bs.trim().parse().map_err(|_| format!("bad integer in grid pair: {pair}"))?;
        let c: i64 =
            cs.trim().parse().map_err(|_| format!("bad integer in grid pair: {pair}"))?;
        out.push((b, c));
    }
    if out.is_empty() {
        return Err("empty (b,c) grid".to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(rec: &VerificationRecord) -> (String, u64, Option<(i64, i64)>, String, String, &str) {
        (
            rec.claim.name().to_string(),
            rec.p,
            rec.params,
            rec.expected.clone(),
            rec.observed.clone(),
            rec.status.as_str(),
        )
    }

    #[test]
    fn worker_counts_agree() {
        let mut config = ScanConfig::new(3, 61);
        config.claims = vec![ClaimId::Thm11, ClaimId::Lemma32, ClaimId::Lemma42];
        config.bc_grid = vec![(1, 1), (2, 2), (1, -1)];
        let single = run_scan(&config).unwrap();
        config.workers = 4;
        let multi = run_scan(&config).unwrap();
        let a: Vec<_> = single.iter().map(key).collect();
        let b: Vec<_> = multi.iter().map(key).collect();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn summary_tallies_match_records() {
        let mut config = ScanConfig::new(3, 31);
        config.claims = vec![ClaimId::Thm12, ClaimId::Eq213];
        let mut seen = 0u64;
        let summary = run_scan_with(&config, |_| seen += 1).unwrap();
        assert_eq!(summary.records, seen);
        let total: u64 =
            summary.tallies.iter().map(|(_, t)| t.pass + t.fail + t.na).sum();
        assert_eq!(total, seen);
        assert_eq!(summary.failures(), 0);
        assert!(summary.human().contains("Thm1.2"));
    }

    #[test]
    fn json_line_has_exact_field_set() {
        let mut config = ScanConfig::new(13, 13);
        config.claims = vec![ClaimId::Thm11, ClaimId::Lemma32];
        let recs = run_scan(&config).unwrap();
        assert_eq!(recs.len(), 2);
        for rec in &recs {
            let v: serde_json::Value = serde_json::from_str(&encode_json_line(rec)).unwrap();
            let obj = v.as_object().unwrap();
            let mut keys: Vec<_> = obj.keys().map(|s| s.as_str()).collect();
            keys.sort_unstable();
            assert_eq!(
                keys,
                ["b", "c", "claim", "elapsed_ms", "expected", "observed", "p", "status"]
            );
        }
        // Parameterless claims carry null b and c; parameterized ones don't.
        let thm = recs.iter().find(|r| r.claim == ClaimId::Thm11).unwrap();
        let v: serde_json::Value = serde_json::from_str(&encode_json_line(thm)).unwrap();
        assert_eq!(v["b"], serde_json::json!(1));
        assert_eq!(v["status"], serde_json::json!("pass"));
        let inv = recs.iter().find(|r| r.claim == ClaimId::Lemma32).unwrap();
        let v: serde_json::Value = serde_json::from_str(&encode_json_line(inv)).unwrap();
        assert!(v["b"].is_null());
        assert!(v["c"].is_null());
    }

    #[test]
    fn csv_row_matches_header() {
        let config = ScanConfig::new(7, 7);
        let recs = run_scan(&config).unwrap();
        let width = csv_header().split(',').count();
        for rec in &recs {
            assert_eq!(encode_csv_line(rec).split(',').count(), width, "{rec:?}");
        }
    }

    #[test]
    fn sorted_and_grouped_by_prime() {
        let mut config = ScanConfig::new(3, 37);
        config.claims = vec![ClaimId::Eq213, ClaimId::Thm11];
        config.workers = 3;
        let recs = run_scan(&config).unwrap();
        let keys: Vec<_> = recs.iter().map(|r| (r.p, r.claim, r.params)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn empty_interval_scans_nothing() {
        let config = ScanConfig::new(90, 96);
        let summary = run_scan_with(&config, |_| panic!("no records expected")).unwrap();
        assert_eq!(summary.records, 0);
    }

    #[test]
    fn range_above_sieve_bound_errors() {
        let config = ScanConfig::new(3, 2_000_000);
        assert!(run_scan(&config).is_err());
    }

    #[test]
    fn default_grid_shape() {
        let g = default_bc_grid();
        assert_eq!(g.len(), 49);
        assert!(g.contains(&(0, 0)));
        assert!(g.contains(&(-3, 3)));
    }

    #[test]
    fn claim_list_parsing() {
        assert_eq!(parse_claim_list("all").unwrap().len(), 20);
        assert_eq!(parse_claim_list("ALL").unwrap().len(), 20);
        assert_eq!(
            parse_claim_list("thm1.1, lemma3.2").unwrap(),
            vec![ClaimId::Thm11, ClaimId::Lemma32]
        );
        assert_eq!(parse_claim_list("Thm1.1,Thm1.1").unwrap().len(), 1);
        assert!(parse_claim_list("bogus").is_err());
        assert!(parse_claim_list("").is_err());
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_bc_grid("default").unwrap().len(), 49);
        assert_eq!(parse_bc_grid("1,1;2,2").unwrap(), vec![(1, 1), (2, 2)]);
        assert_eq!(parse_bc_grid(" -1 , 3 ").unwrap(), vec![(-1, 3)]);
        assert!(parse_bc_grid("1;2").is_err());
        assert!(parse_bc_grid("a,b").is_err());
        assert!(parse_bc_grid("").is_err());
    }
}
