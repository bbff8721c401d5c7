//! Exhaustive enumeration engines over coefficient boxes, power-law
//! exponent fitting, and comparison tables against the expected exponents.
//!
//! Boxes are the closed cubes |a_i| <= H including zero and negative
//! coefficients; nothing is excluded, so tallies always sum to (2H+1)^k.
//! Enumeration is partitioned into disjoint shards merged by addition, and
//! results are identical under any shard count or completion order.

use crate::arith::Primes;
use crate::identify::{self, Certainty, SnWitnessTracker};
use crate::modp;
use crate::perm::catalog;
use crate::poly::{self, IntPolynomial};
use num::{BigInt, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub const DEFAULT_WORK_CEILING: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub enum CensusError {
    WorkCeiling { required: u64, ceiling: u64 },
    Precondition(String),
    InsufficientData(String),
    Identify(identify::IdentifyError),
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::WorkCeiling { required, ceiling } => write!(
                f,
                "census needs {} labelings, above the work ceiling {}; raise the ceiling to run",
                required, ceiling
            ),
            CensusError::Precondition(msg) => write!(f, "{}", msg),
            CensusError::InsufficientData(msg) => write!(f, "{}", msg),
            CensusError::Identify(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for CensusError {}

impl From<identify::IdentifyError> for CensusError {
    fn from(e: identify::IdentifyError) -> Self {
        CensusError::Identify(e)
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CensusConfig {
    pub prime_budget: usize,
    pub work_ceiling: u64,
    pub jobs: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            prime_budget: identify::DEFAULT_PRIME_BUDGET,
            work_ceiling: DEFAULT_WORK_CEILING,
            jobs: 1,
        }
    }
}

/// One tally row: label counts for a single (n, H) box.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CensusRecord {
    pub n: usize,
    pub h: u64,
    pub label: String,
    pub count: u64,
    pub total: u64,
    pub certainty_floor: Certainty,
}

type Tally = BTreeMap<String, (u64, Certainty)>;

fn merge_tally(into: &mut Tally, from: Tally) {
    for (label, (count, floor)) in from {
        let entry = into.entry(label).or_insert((0, Certainty::Exact));
        entry.0 += count;
        entry.1 = entry.1.min(floor);
    }
}

fn tally_to_records(n: usize, h: u64, total: u64, tally: Tally) -> Vec<CensusRecord> {
    let check: u64 = tally.values().map(|(c, _)| c).sum();
    debug_assert_eq!(check, total, "census tallies must sum to the box size");
    tally
        .into_iter()
        .map(|(label, (count, floor))| CensusRecord {
            n,
            h,
            label,
            count,
            total,
            certainty_floor: floor,
        })
        .collect()
}

fn box_size(n: usize, h: u64) -> u64 {
    (2 * h + 1).pow(n as u32)
}

/// Exhaustive census of all monic degree-n polynomials with |a_i| <= H for
/// each H in the grid, labeled by `identify`.
pub fn census_full(
    n: usize,
    h_list: &[u64],
    config: &CensusConfig,
) -> Result<Vec<CensusRecord>, CensusError> {
    if n == 0 || n > identify::MAX_IDENTIFY_DEGREE {
        return Err(CensusError::Precondition(format!(
            "census degree must be between 1 and {}, got {}",
            identify::MAX_IDENTIFY_DEGREE,
            n
        )));
    }
    let required: u64 = h_list.iter().map(|&h| box_size(n, h)).sum();
    if required > config.work_ceiling {
        return Err(CensusError::WorkCeiling {
            required,
            ceiling: config.work_ceiling,
        });
    }
    let mut out = Vec::new();
    for &h in h_list {
        let tally = run_sharded(h, config.jobs, |a1, tally| {
            label_full_slice(n, h, a1, config.prime_budget, tally)
        })?;
        out.extend(tally_to_records(n, h, box_size(n, h), tally));
    }
    Ok(out)
}

/// Process every tuple with the given leading free coefficient a1.
fn label_full_slice(
    n: usize,
    h: u64,
    a1: i64,
    prime_budget: usize,
    tally: &mut Tally,
) -> Result<(), CensusError> {
    let hi = h as i64;
    let mut rest = vec![-hi; n - 1];
    loop {
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(BigInt::from(1));
        coeffs.push(BigInt::from(a1));
        for &c in &rest {
            coeffs.push(BigInt::from(c));
        }
        let f = IntPolynomial::new(coeffs);
        let label = identify::identify(&f, prime_budget)?;
        let entry = tally
            .entry(label.key())
            .or_insert((0, Certainty::Exact));
        entry.0 += 1;
        entry.1 = entry.1.min(label.certainty);
        // odometer over the remaining coefficients
        let mut i = rest.len();
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if rest[i] < hi {
                rest[i] += 1;
                for v in rest[i + 1..].iter_mut() {
                    *v = -hi;
                }
                break;
            }
        }
    }
}

/// Shard the outermost coefficient across jobs and merge in shard order.
fn run_sharded<F>(h: u64, jobs: usize, work: F) -> Result<Tally, CensusError>
where
    F: Fn(i64, &mut Tally) -> Result<(), CensusError> + Sync + Send,
{
    let hi = h as i64;
    let values: Vec<i64> = (-hi..=hi).collect();
    let jobs = jobs.max(1).min(values.len().max(1));
    if jobs == 1 {
        let mut tally = Tally::new();
        for &a1 in &values {
            work(a1, &mut tally)?;
        }
        return Ok(tally);
    }
    let chunks: Vec<Vec<i64>> = (0..jobs)
        .map(|j| values.iter().copied().skip(j).step_by(jobs).collect())
        .collect();
    let results: Vec<Result<Tally, CensusError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let work = &work;
                scope.spawn(move || {
                    let mut tally = Tally::new();
                    for &a1 in chunk {
                        work(a1, &mut tally)?;
                    }
                    Ok(tally)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut merged = Tally::new();
    for r in results {
        merge_tally(&mut merged, r?);
    }
    Ok(merged)
}

/// Census labels for the trinomial family X^n + a_r X^{n-r} + a_n, following
/// the case split: integer zero, reducible without linear factor,
/// square-discriminant candidate for the alternating group, certified full
/// symmetric group, or indeterminate.
pub const TRINOMIAL_LABELS: [&str; 5] = [
    "integer_zero",
    "reducible_no_linear",
    "an_candidate",
    "certified_Sn",
    "indeterminate",
];

pub fn census_trinomial(
    n: usize,
    r: usize,
    h_list: &[u64],
    config: &CensusConfig,
) -> Result<Vec<CensusRecord>, CensusError> {
    if r == 0 || r >= n {
        return Err(CensusError::Precondition(format!(
            "need n > r >= 1, got n = {}, r = {}",
            n, r
        )));
    }
    if n > identify::MAX_IDENTIFY_DEGREE {
        return Err(CensusError::Precondition(format!(
            "trinomial census degree must be at most {}, got {}",
            identify::MAX_IDENTIFY_DEGREE,
            n
        )));
    }
    let g = num::integer::gcd(n as u64, r as u64);
    if g != 1 {
        return Err(CensusError::Precondition(format!(
            "gcd(r, n) = {} but must be 1: X^{} + a X^{} + b is a polynomial in X^{}, \
             so its Galois group is never the full symmetric group",
            g,
            n,
            n - r,
            g
        )));
    }
    let required: u64 = h_list.iter().map(|&h| (2 * h + 1) * (2 * h + 1)).sum();
    if required > config.work_ceiling {
        return Err(CensusError::WorkCeiling {
            required,
            ceiling: config.work_ceiling,
        });
    }
    let mut out = Vec::new();
    for &h in h_list {
        let tally = run_sharded(h, config.jobs, |a_r, tally| {
            let hi = h as i64;
            for a_n in -hi..=hi {
                let (label, certainty) = trinomial_label(n, r, a_r, a_n, config.prime_budget);
                let entry = tally
                    .entry(label.to_string())
                    .or_insert((0, Certainty::Exact));
                entry.0 += 1;
                entry.1 = entry.1.min(certainty);
            }
            Ok(())
        })?;
        out.extend(tally_to_records(n, h, (2 * h + 1) * (2 * h + 1), tally));
    }
    Ok(out)
}

/// Label one trinomial. Matches the mapping of `identify` outcomes onto the
/// census case labels, with cheap early exits.
pub fn trinomial_label(
    n: usize,
    r: usize,
    a_r: i64,
    a_n: i64,
    prime_budget: usize,
) -> (&'static str, Certainty) {
    let mut coeffs = vec![0i64; n + 1];
    coeffs[0] = 1;
    coeffs[r] = a_r;
    coeffs[n] = a_n;
    let f = IntPolynomial::from_i64(&coeffs);
    if !poly::integer_roots(&f).is_empty() {
        return ("integer_zero", Certainty::Exact);
    }
    let disc = poly::discriminant(&f).expect("degree is at least one");
    if disc.is_zero() {
        // a repeated irreducible factor exists; no integer zero means every
        // factor has degree at least two
        return ("reducible_no_linear", Certainty::Exact);
    }
    let square = poly::is_square(&disc).is_some();
    let mut allowed: BTreeSet<usize> = (2..=n.saturating_sub(2)).collect();
    let mut tracker = SnWitnessTracker::default();
    let mut examined = 0usize;
    let mut primes = Primes::new();
    while examined < prime_budget {
        let p = primes.next().unwrap();
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let t = modp::distinct_degree_pattern(&f, p);
        examined += 1;
        modp::restrict_by_pattern(&mut allowed, &t);
        tracker.observe(n, p, &t);
        if !square && tracker.complete(true) {
            return ("certified_Sn", Certainty::Certified);
        }
        if square && allowed.is_empty() {
            return ("an_candidate", Certainty::Exact);
        }
    }
    if !allowed.is_empty() {
        let pattern = poly::factor_pattern(&f).expect("trinomial degree within limits");
        if !pattern.is_irreducible() {
            debug_assert!(!pattern.has_linear);
            return ("reducible_no_linear", Certainty::Exact);
        }
    }
    if square {
        ("an_candidate", Certainty::Exact)
    } else {
        ("indeterminate", Certainty::BudgetLimited)
    }
}

// ---------------------------------------------------------------------------
// exponent fitting and comparison reports
// ---------------------------------------------------------------------------

/// Least-squares fit of log count against log H.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ExponentFit {
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    pub residual: f64,
    /// Two-point slope between the largest pair of H values.
    pub tail_slope: f64,
}

pub fn fit_exponent(points: &[(f64, f64)]) -> Result<ExponentFit, CensusError> {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|&(h, c)| h > 0.0 && c > 0.0)
        .collect();
    if usable.len() < 3 {
        return Err(CensusError::InsufficientData(format!(
            "exponent fit needs at least 3 points with positive counts, got {}",
            usable.len()
        )));
    }
    for w in usable.windows(2) {
        if w[1].0 <= w[0].0 {
            return Err(CensusError::InsufficientData(
                "exponent fit needs strictly increasing H values".to_string(),
            ));
        }
    }
    let logs: Vec<(f64, f64)> = usable
        .iter()
        .map(|&(h, c)| (h.ln(), c.ln()))
        .collect();
    let k = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in &logs {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual = (logs
        .iter()
        .map(|&(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum::<f64>()
        / k)
        .sqrt();
    let (x1, y1) = logs[logs.len() - 2];
    let (x2, y2) = logs[logs.len() - 1];
    let tail_slope = (y2 - y1) / (x2 - x1);
    Ok(ExponentFit {
        points: usable,
        slope,
        intercept,
        residual,
        tail_slope,
    })
}

/// Per-H count series per label, plus the aggregate series used by the
/// comparison tables.
pub fn label_series(records: &[CensusRecord]) -> BTreeMap<String, Vec<(u64, u64)>> {
    let mut hs: BTreeSet<u64> = BTreeSet::new();
    let mut totals: BTreeMap<u64, u64> = BTreeMap::new();
    for r in records {
        hs.insert(r.h);
        totals.insert(r.h, r.total);
    }
    let mut out: BTreeMap<String, Vec<(u64, u64)>> = BTreeMap::new();
    let labels: BTreeSet<&str> = records.iter().map(|r| r.label.as_str()).collect();
    for label in labels {
        let series: Vec<(u64, u64)> = hs
            .iter()
            .map(|&h| {
                let count = records
                    .iter()
                    .find(|r| r.h == h && r.label == label)
                    .map(|r| r.count)
                    .unwrap_or(0);
                (h, count)
            })
            .collect();
        out.insert(label.to_string(), series);
    }
    if let Some(n) = records.first().map(|r| r.n) {
        let sn = format!("S{}", n);
        let an = if n == 3 { "C3".to_string() } else { format!("A{}", n) };
        let has_sn = out.contains_key(&sn);
        if has_sn {
            let non_sn: Vec<(u64, u64)> = hs
                .iter()
                .map(|&h| {
                    let sn_count = out[&sn].iter().find(|&&(hh, _)| hh == h).unwrap().1;
                    (h, totals[&h] - sn_count)
                })
                .collect();
            out.insert("non_Sn".to_string(), non_sn);
            if let Some(an_series) = out.get(&an).cloned() {
                let non_sn_an: Vec<(u64, u64)> = hs
                    .iter()
                    .map(|&h| {
                        let sn_count = out[&sn].iter().find(|&&(hh, _)| hh == h).unwrap().1;
                        let an_count = an_series.iter().find(|&&(hh, _)| hh == h).unwrap().1;
                        (h, totals[&h] - sn_count - an_count)
                    })
                    .collect();
                out.insert("non_Sn_non_An".to_string(), non_sn_an);
            }
        }
        if out.contains_key("certified_Sn") {
            let not_cert: Vec<(u64, u64)> = hs
                .iter()
                .map(|&h| {
                    let cert = out["certified_Sn"].iter().find(|&&(hh, _)| hh == h).unwrap().1;
                    (h, totals[&h] - cert)
                })
                .collect();
            out.insert("not_certified_Sn".to_string(), not_cert);
        }
    }
    out
}

/// Expected exponent for a label at degree n, with a short formula tag.
pub fn bound_exponent_for(n: usize, label: &str) -> Option<(f64, String)> {
    match label {
        "reducible" => Some(((n - 1) as f64, format!("n-1 = {}", n - 1))),
        "non_Sn" | "not_certified_Sn_full" => {
            Some((n as f64 - 0.5, format!("n-1/2 = {:.1}", n as f64 - 0.5)))
        }
        "non_Sn_non_An" => {
            if n >= 9 {
                let e = crate::perm::e_n(n).ok()?;
                let ef = e.numer().to_f64().unwrap_or(0.0) / e.denom().to_f64().unwrap_or(1.0);
                Some((
                    (n - 1) as f64 + ef,
                    format!("n-1+e(n) = {:.6}", (n - 1) as f64 + ef),
                ))
            } else {
                None
            }
        }
        "integer_zero" | "not_certified_Sn" | "reducible_no_linear" | "an_candidate" => Some((
            1.0 + 1.0 / n as f64,
            format!("1+1/n = {:.4}", 1.0 + 1.0 / n as f64),
        )),
        name => {
            let cat = catalog(n).iter().find(|c| c.name == name)?;
            let m = cat.group.index_in_sn();
            if m == 1 {
                return None;
            }
            let bound = (n - 1) as f64 + 1.0 / m as f64;
            Some((bound, format!("n-1+1/{} = {:.4}", m, bound)))
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CompareRow {
    pub label: String,
    pub slope: f64,
    pub tail_slope: f64,
    pub bound_exponent: f64,
    pub bound_formula: String,
    pub margin: f64,
    pub pass: bool,
    pub points: usize,
}

/// Comparison table: fitted slope per label against the expected exponent.
/// Upper-bound consistency only; nothing here claims lower bounds.
pub fn compare_report(
    n: usize,
    records: &[CensusRecord],
    tolerance: f64,
) -> Vec<CompareRow> {
    let series = label_series(records);
    let mut rows = Vec::new();
    for (label, points) in &series {
        let Some((bound, formula)) = bound_exponent_for(n, label) else {
            continue;
        };
        let pts: Vec<(f64, f64)> = points
            .iter()
            .map(|&(h, c)| (h as f64, c as f64))
            .collect();
        match fit_exponent(&pts) {
            Ok(fit) => {
                rows.push(CompareRow {
                    label: label.clone(),
                    slope: fit.slope,
                    tail_slope: fit.tail_slope,
                    bound_exponent: bound,
                    bound_formula: formula,
                    margin: bound - fit.slope,
                    pass: fit.slope <= bound + tolerance,
                    points: fit.points.len(),
                });
            }
            Err(_) => {
                // counts too sparse for a slope: bounded growth, trivially
                // consistent with any upper bound
                rows.push(CompareRow {
                    label: label.clone(),
                    slope: 0.0,
                    tail_slope: 0.0,
                    bound_exponent: bound,
                    bound_formula: formula,
                    margin: bound,
                    pass: true,
                    points: points.iter().filter(|&&(_, c)| c > 0).count(),
                });
            }
        }
    }
    rows
}

/// CSV with the schema n,H,label,count,total,certainty_floor, rows sorted
/// by (H, label).
pub fn census_csv(records: &[CensusRecord]) -> String {
    let mut rows = records.to_vec();
    rows.sort_by(|a, b| (a.h, a.label.as_str()).cmp(&(b.h, b.label.as_str())));
    let mut out = String::from("n,H,label,count,total,certainty_floor\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n, r.h, r.label, r.count, r.total, r.certainty_floor
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_census_is_all_linear() {
        let cfg = CensusConfig::default();
        let records = census_full(1, &[3], &cfg).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].label, "S1");
        assert_eq!(records[0].count, 7);
        assert_eq!(records[0].total, 7);
    }

    /// Nine-case oracle for n = 2, H = 1: a monic quadratic is reducible
    /// exactly when a1^2 - 4 a2 is a perfect square. The squares are
    /// (a1, a2) in {(0,0), (0,-1), (1,0), (-1,0)}: X^2, X^2 - 1, X^2 +- X.
    #[test]
    fn quadratic_census_at_height_one() {
        let cfg = CensusConfig::default();
        let records = census_full(2, &[1], &cfg).unwrap();
        let total: u64 = records.iter().map(|r| r.count).sum();
        assert_eq!(total, 9);
        let get = |label: &str| {
            records
                .iter()
                .find(|r| r.label == label)
                .map(|r| r.count)
                .unwrap_or(0)
        };
        assert_eq!(get("reducible"), 4);
        assert_eq!(get("S2"), 5);
    }

    #[test]
    fn cubic_census_conserves_and_shards_agree() {
        let records1 = census_full(3, &[4], &CensusConfig::default()).unwrap();
        let total: u64 = records1.iter().map(|r| r.count).sum();
        assert_eq!(total, 9u64.pow(3));
        for jobs in [4usize, 16] {
            let cfg = CensusConfig {
                jobs,
                ..CensusConfig::default()
            };
            let shards = census_full(3, &[4], &cfg).unwrap();
            assert_eq!(records1, shards, "jobs = {}", jobs);
        }
    }

    #[test]
    fn nested_boxes_are_monotone() {
        let cfg = CensusConfig::default();
        let records = census_full(3, &[2, 4], &cfg).unwrap();
        let series = label_series(&records);
        for (label, points) in series {
            let mut last = 0;
            for (_, c) in points {
                assert!(c >= last, "label {} shrank", label);
                last = c;
            }
        }
    }

    #[test]
    fn work_ceiling_is_enforced() {
        let cfg = CensusConfig {
            work_ceiling: 100,
            ..CensusConfig::default()
        };
        match census_full(3, &[5], &cfg) {
            Err(CensusError::WorkCeiling { required, .. }) => {
                assert_eq!(required, 11u64.pow(3));
            }
            other => panic!("expected ceiling refusal, got {:?}", other.map(|r| r.len())),
        }
    }

    #[test]
    fn trinomial_gcd_precondition() {
        let cfg = CensusConfig::default();
        assert!(census_trinomial(9, 2, &[1], &cfg).is_ok());
        match census_trinomial(10, 2, &[1], &cfg) {
            Err(CensusError::Precondition(msg)) => {
                assert!(msg.contains("gcd"), "{}", msg);
            }
            other => panic!("expected precondition error, got {:?}", other.map(|r| r.len())),
        }
    }

    #[test]
    fn trinomial_census_conserves() {
        let cfg = CensusConfig::default();
        let records = census_trinomial(10, 1, &[1], &cfg).unwrap();
        let total: u64 = records.iter().map(|r| r.count).sum();
        assert_eq!(total, 9);
        for r in &records {
            assert!(TRINOMIAL_LABELS.contains(&r.label.as_str()));
        }
    }

    #[test]
    fn trinomial_labels_match_identify() {
        let budget = 80;
        for a_r in -3i64..=3 {
            for a_n in -3i64..=3 {
                let (label, _) = trinomial_label(10, 3, a_r, a_n, budget);
                let mut coeffs = vec![0i64; 11];
                coeffs[0] = 1;
                coeffs[3] = a_r;
                coeffs[10] = a_n;
                let f = IntPolynomial::from_i64(&coeffs);
                let id = identify::identify(&f, budget).unwrap();
                let expect = match &id.kind {
                    identify::LabelKind::Reducible { pattern } => {
                        if pattern.has_linear {
                            "integer_zero"
                        } else {
                            "reducible_no_linear"
                        }
                    }
                    identify::LabelKind::ContainedInAn => "an_candidate",
                    identify::LabelKind::CertifiedSn => "certified_Sn",
                    identify::LabelKind::Indeterminate => "indeterminate",
                    identify::LabelKind::ExactGroup { .. } => unreachable!(),
                };
                assert_eq!(label, expect, "a_r = {}, a_n = {}", a_r, a_n);
            }
        }
    }

    #[test]
    fn exponent_fit_on_exact_power_law() {
        // counts (2H+1)^3: the slope approaches 3 from below, at these H
        // values the exact least-squares value is 2.93943 (the 2H+1 versus
        // 2H offset costs about 0.06)
        let pts: Vec<(f64, f64)> = [10u64, 20, 40, 80]
            .iter()
            .map(|&h| (h as f64, ((2 * h + 1) as f64).powi(3)))
            .collect();
        let fit = fit_exponent(&pts).unwrap();
        assert!((fit.slope - 3.0).abs() < 0.07, "slope {}", fit.slope);
        assert!((fit.slope - 2.9394289092822343).abs() < 1e-9);
        let flat: Vec<(f64, f64)> = [10u64, 20, 40, 80]
            .iter()
            .map(|&h| (h as f64, 7.0))
            .collect();
        let fit = fit_exponent(&flat).unwrap();
        assert!(fit.slope.abs() < 1e-9);
        assert!(fit_exponent(&pts[..2]).is_err());
    }

    #[test]
    fn compare_rows_for_cubic_census() {
        let cfg = CensusConfig::default();
        let records = census_full(3, &[3, 6, 12], &cfg).unwrap();
        let rows = compare_report(3, &records, 0.2);
        let reducible = rows.iter().find(|r| r.label == "reducible").unwrap();
        assert!((reducible.bound_exponent - 2.0).abs() < 1e-12);
        let c3 = rows.iter().find(|r| r.label == "C3").unwrap();
        assert!((c3.bound_exponent - 2.5).abs() < 1e-12);
        let gallagher = rows.iter().find(|r| r.label == "non_Sn").unwrap();
        assert!((gallagher.bound_exponent - 2.5).abs() < 1e-12);
    }

    #[test]
    fn csv_is_deterministic_and_sorted() {
        let cfg = CensusConfig::default();
        let a = census_csv(&census_full(2, &[1, 2], &cfg).unwrap());
        let b = census_csv(&census_full(2, &[1, 2], &cfg).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with("n,H,label,count,total,certainty_floor\n"));
        let lines: Vec<&str> = a.lines().skip(1).collect();
        let mut sorted = lines.clone();
        sorted.sort_by_key(|l| {
            let mut it = l.split(',');
            it.next();
            let h: u64 = it.next().unwrap().parse().unwrap();
            (h, it.next().unwrap().to_string())
        });
        assert_eq!(lines, sorted);
    }
}
