//! Galois-group identification for monic integer polynomials.
//!
//! Degrees up to 5 get exact transitive-group names from the catalog:
//! reducibility, the discriminant parity criterion, accumulated Frobenius
//! cycle types, and a resolvent integer-root cross-check. Degrees 6 to 10
//! get sound tags only: reducibility patterns, alternating-group
//! containment from a square discriminant, and a sound-but-incomplete
//! full-symmetric certification from classical witnesses.

use crate::arith::Primes;
use crate::modp;
use crate::perm::{catalog, CatalogGroup};
use crate::poly::{self, FactorPattern, IntPolynomial, PolyError};
use crate::resolvent::{galois_resolvent, integer_root_test};
use num::{BigInt, Zero};
use std::collections::BTreeSet;
use std::fmt;

pub const MAX_IDENTIFY_DEGREE: usize = 10;
pub const DEFAULT_PRIME_BUDGET: usize = 200;
const MAX_STORED_CYCLE_TYPES: usize = 12;

#[derive(Debug, Clone)]
pub enum IdentifyError {
    Poly(PolyError),
    UnsupportedDegree { degree: usize, max: usize },
    NotMonic,
    NotPrime(u64),
}

impl fmt::Display for IdentifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentifyError::Poly(e) => write!(f, "{}", e),
            IdentifyError::UnsupportedDegree { degree, max } => {
                write!(f, "degree {} exceeds the supported maximum {}", degree, max)
            }
            IdentifyError::NotMonic => write!(f, "identification requires a monic polynomial"),
            IdentifyError::NotPrime(p) => write!(f, "{} is not prime", p),
        }
    }
}

impl std::error::Error for IdentifyError {}

impl From<PolyError> for IdentifyError {
    fn from(e: PolyError) -> Self {
        IdentifyError::Poly(e)
    }
}

/// How much the label is worth: exact means proven, certified means a sound
/// one-sided certificate fired, budget-limited means the evidence ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Certainty {
    #[serde(rename = "budget_limited")]
    BudgetLimited,
    #[serde(rename = "certified")]
    Certified,
    #[serde(rename = "exact")]
    Exact,
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certainty::Exact => write!(f, "exact"),
            Certainty::Certified => write!(f, "certified"),
            Certainty::BudgetLimited => write!(f, "budget_limited"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(tag = "kind")]
pub enum LabelKind {
    #[serde(rename = "reducible")]
    Reducible { pattern: FactorPattern },
    #[serde(rename = "exact_group")]
    ExactGroup { name: String },
    #[serde(rename = "contained_in_An")]
    ContainedInAn,
    #[serde(rename = "certified_Sn")]
    CertifiedSn,
    #[serde(rename = "indeterminate")]
    Indeterminate,
}

#[derive(Debug, Clone, serde::Serialize)]
#[serde(tag = "atom")]
pub enum Evidence {
    #[serde(rename = "factor_pattern")]
    FactorDegrees { degrees: Vec<usize>, has_linear: bool },
    #[serde(rename = "discriminant")]
    Discriminant { square: bool, value: String },
    #[serde(rename = "cycle_type")]
    CycleType { p: u64, partition: Vec<usize> },
    #[serde(rename = "cycle_types_examined")]
    CycleTypesExamined { primes: usize },
    #[serde(rename = "resolvent_root")]
    ResolventRoot { group: String, roots: Vec<String> },
    #[serde(rename = "resolvent_no_root")]
    ResolventNoRoot { group: String },
    #[serde(rename = "resolvent_degenerate")]
    ResolventDegenerate { group: String },
    #[serde(rename = "resolvent_vacuous")]
    ResolventVacuous { group: String },
    #[serde(rename = "sn_witnesses")]
    SnWitnesses {
        n_cycle_prime: Option<u64>,
        n_minus_one_cycle_prime: Option<u64>,
        jordan_prime: Option<u64>,
        jordan_cycle_length: Option<usize>,
        odd_type_prime: Option<u64>,
        nonsquare_discriminant: bool,
    },
}

/// Classification outcome for one polynomial.
#[derive(Debug, Clone, serde::Serialize)]
pub struct GaloisLabel {
    #[serde(flatten)]
    pub kind: LabelKind,
    pub certainty: Certainty,
    pub evidence: Vec<Evidence>,
}

impl GaloisLabel {
    /// Collapsed key used by census tallies.
    pub fn key(&self) -> String {
        match &self.kind {
            LabelKind::Reducible { .. } => "reducible".to_string(),
            LabelKind::ExactGroup { name } => name.clone(),
            LabelKind::ContainedInAn => "contained_in_An".to_string(),
            LabelKind::CertifiedSn => "certified_Sn".to_string(),
            LabelKind::Indeterminate => "indeterminate".to_string(),
        }
    }
}

/// Cycle type of a Frobenius element: the factor-degree partition of f
/// modulo p, or `None` when p divides the discriminant.
pub fn cycle_type_mod_p(
    f: &IntPolynomial,
    p: u64,
) -> Result<Option<Vec<usize>>, IdentifyError> {
    if !crate::arith::is_prime_u64(p) {
        return Err(IdentifyError::NotPrime(p));
    }
    if !f.is_monic() {
        return Err(IdentifyError::NotMonic);
    }
    let disc = poly::discriminant(f)?;
    if (&disc % BigInt::from(p)).is_zero() {
        return Ok(None);
    }
    Ok(Some(modp::distinct_degree_pattern(f, p)))
}

/// Witnesses for the full symmetric group: an n-cycle (transitivity and
/// irreducibility), an (n-1)-cycle (2-transitivity, hence primitivity), a
/// prime q-cycle with n/2 < q <= n-3 (contains A_n by Jordan), and an odd
/// type or nonsquare discriminant (not inside A_n).
#[derive(Debug, Clone, Default)]
pub struct SnWitnessTracker {
    pub n_cycle: Option<u64>,
    pub n_minus_one_cycle: Option<u64>,
    pub jordan: Option<(u64, usize)>,
    pub odd_type: Option<u64>,
}

impl SnWitnessTracker {
    pub fn observe(&mut self, n: usize, p: u64, pattern: &[usize]) {
        if pattern == [n] && self.n_cycle.is_none() {
            self.n_cycle = Some(p);
        }
        if n >= 2 && pattern.len() == 2 && pattern[0] == n - 1 && self.n_minus_one_cycle.is_none()
        {
            self.n_minus_one_cycle = Some(p);
        }
        if self.jordan.is_none() {
            for &part in pattern {
                if 2 * part > n
                    && part + 3 <= n
                    && crate::arith::is_prime_u64(part as u64)
                {
                    self.jordan = Some((p, part));
                    break;
                }
            }
        }
        if self.odd_type.is_none() {
            let parity_odd = (n - pattern.len()) % 2 == 1;
            if parity_odd {
                self.odd_type = Some(p);
            }
        }
    }

    pub fn complete(&self, nonsquare_disc: bool) -> bool {
        self.n_cycle.is_some()
            && self.n_minus_one_cycle.is_some()
            && self.jordan.is_some()
            && (self.odd_type.is_some() || nonsquare_disc)
    }

    pub fn evidence(&self, nonsquare_disc: bool) -> Evidence {
        Evidence::SnWitnesses {
            n_cycle_prime: self.n_cycle,
            n_minus_one_cycle_prime: self.n_minus_one_cycle,
            jordan_prime: self.jordan.map(|(p, _)| p),
            jordan_cycle_length: self.jordan.map(|(_, q)| q),
            odd_type_prime: self.odd_type,
            nonsquare_discriminant: nonsquare_disc,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SnCertification {
    Certified,
    NotCertified,
}

/// Sound-but-incomplete certification that the Galois group is the full
/// symmetric group. `NotCertified` never means the group is smaller.
pub fn certify_sn(
    f: &IntPolynomial,
    prime_budget: usize,
) -> Result<(SnCertification, SnWitnessTracker), IdentifyError> {
    let n = f.degree();
    if !f.is_monic() {
        return Err(IdentifyError::NotMonic);
    }
    if n > MAX_IDENTIFY_DEGREE {
        return Err(IdentifyError::UnsupportedDegree {
            degree: n,
            max: MAX_IDENTIFY_DEGREE,
        });
    }
    let disc = poly::discriminant(f)?;
    if disc.is_zero() {
        return Ok((SnCertification::NotCertified, SnWitnessTracker::default()));
    }
    let nonsquare = poly::is_square(&disc).is_none();
    let mut tracker = SnWitnessTracker::default();
    let mut used = 0usize;
    for p in Primes::new() {
        if used >= prime_budget {
            break;
        }
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let pattern = modp::distinct_degree_pattern(f, p);
        tracker.observe(n, p, &pattern);
        used += 1;
        if tracker.complete(nonsquare) {
            return Ok((SnCertification::Certified, tracker));
        }
    }
    Ok((SnCertification::NotCertified, tracker))
}

/// Assign a Galois label: exact catalog names for degree at most 5,
/// containment tags for degrees 6 to 10, reducibility patterns throughout.
pub fn identify(f: &IntPolynomial, prime_budget: usize) -> Result<GaloisLabel, IdentifyError> {
    let n = f.degree();
    if !f.is_monic() {
        return Err(IdentifyError::NotMonic);
    }
    if n == 0 || n > MAX_IDENTIFY_DEGREE {
        return Err(IdentifyError::UnsupportedDegree {
            degree: n,
            max: MAX_IDENTIFY_DEGREE,
        });
    }
    if n == 1 {
        return Ok(GaloisLabel {
            kind: LabelKind::ExactGroup {
                name: "S1".to_string(),
            },
            certainty: Certainty::Exact,
            evidence: vec![Evidence::FactorDegrees {
                degrees: vec![1],
                has_linear: true,
            }],
        });
    }
    if n <= 5 {
        identify_small(f, prime_budget)
    } else {
        identify_large(f, prime_budget)
    }
}

fn identify_small(f: &IntPolynomial, prime_budget: usize) -> Result<GaloisLabel, IdentifyError> {
    let n = f.degree();
    let mut evidence = Vec::new();
    let pattern = poly::factor_pattern(f)?;
    if !pattern.is_irreducible() {
        evidence.push(Evidence::FactorDegrees {
            degrees: pattern.degrees.clone(),
            has_linear: pattern.has_linear,
        });
        return Ok(GaloisLabel {
            kind: LabelKind::Reducible { pattern },
            certainty: Certainty::Exact,
            evidence,
        });
    }
    let disc = poly::discriminant(f)?;
    let square = poly::is_square(&disc).is_some();
    evidence.push(Evidence::Discriminant {
        square,
        value: disc.to_string(),
    });
    if n == 2 {
        // irreducible quadratic: the group is S2
        return Ok(GaloisLabel {
            kind: LabelKind::ExactGroup {
                name: "S2".to_string(),
            },
            certainty: Certainty::Exact,
            evidence,
        });
    }

    let mut candidates: Vec<&'static CatalogGroup> = catalog(n)
        .iter()
        .filter(|c| c.in_alternating == square)
        .collect();
    let mut stored_types = 0usize;
    let mut examined = 0usize;
    let mut primes = Primes::new();
    while candidates.len() > 1 && examined < prime_budget {
        let p = primes.next().unwrap();
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let t = modp::distinct_degree_pattern(f, p);
        examined += 1;
        let before = candidates.len();
        candidates.retain(|c| c.cycle_types.contains(&t));
        if stored_types < MAX_STORED_CYCLE_TYPES && (before != candidates.len() || examined <= 4) {
            evidence.push(Evidence::CycleType {
                p,
                partition: t.clone(),
            });
            stored_types += 1;
        }
    }
    if examined > 0 {
        evidence.push(Evidence::CycleTypesExamined { primes: examined });
    }
    if candidates.is_empty() {
        return Ok(GaloisLabel {
            kind: LabelKind::Indeterminate,
            certainty: Certainty::BudgetLimited,
            evidence,
        });
    }
    let min_order = candidates.iter().map(|c| c.group.order()).min().unwrap();
    let minimal: Vec<&&CatalogGroup> = candidates
        .iter()
        .filter(|c| c.group.order() == min_order)
        .collect();
    let unique_min = minimal.len() == 1;
    let chosen = minimal[0];
    let mut certainty = Certainty::BudgetLimited;
    if unique_min {
        if chosen.group.index_in_sn() == 1 {
            // the degree-1 resolvent always has an integer root
            evidence.push(Evidence::ResolventVacuous {
                group: chosen.name.to_string(),
            });
            certainty = Certainty::Exact;
        } else {
            match galois_resolvent(f, &chosen.group, None) {
                Ok(r) => {
                    if r.degenerate {
                        evidence.push(Evidence::ResolventDegenerate {
                            group: chosen.name.to_string(),
                        });
                    } else {
                        let roots = integer_root_test(&r);
                        if roots.is_empty() {
                            evidence.push(Evidence::ResolventNoRoot {
                                group: chosen.name.to_string(),
                            });
                        } else {
                            evidence.push(Evidence::ResolventRoot {
                                group: chosen.name.to_string(),
                                roots: roots.iter().map(|z| z.to_string()).collect(),
                            });
                            certainty = Certainty::Exact;
                        }
                    }
                }
                Err(_) => {
                    evidence.push(Evidence::ResolventDegenerate {
                        group: chosen.name.to_string(),
                    });
                }
            }
        }
    }
    Ok(GaloisLabel {
        kind: LabelKind::ExactGroup {
            name: chosen.name.to_string(),
        },
        certainty,
        evidence,
    })
}

fn identify_large(f: &IntPolynomial, prime_budget: usize) -> Result<GaloisLabel, IdentifyError> {
    let n = f.degree();
    let mut evidence = Vec::new();
    let reducible_label = |pattern: FactorPattern, mut ev: Vec<Evidence>| {
        ev.push(Evidence::FactorDegrees {
            degrees: pattern.degrees.clone(),
            has_linear: pattern.has_linear,
        });
        GaloisLabel {
            kind: LabelKind::Reducible { pattern },
            certainty: Certainty::Exact,
            evidence: ev,
        }
    };
    if !poly::integer_roots(f).is_empty() {
        let pattern = poly::factor_pattern(f)?;
        return Ok(reducible_label(pattern, evidence));
    }
    let disc = poly::discriminant(f)?;
    if disc.is_zero() {
        let pattern = poly::factor_pattern(f)?;
        debug_assert!(!pattern.is_irreducible());
        return Ok(reducible_label(pattern, evidence));
    }
    let square = poly::is_square(&disc).is_some();
    evidence.push(Evidence::Discriminant {
        square,
        value: disc.to_string(),
    });

    // factor degrees 1 and n-1 are already excluded by the root test
    let mut allowed: BTreeSet<usize> = (2..=(n - 2)).collect();
    let mut tracker = SnWitnessTracker::default();
    let mut stored = 0usize;
    let mut examined = 0usize;
    let mut primes = Primes::new();
    while examined < prime_budget {
        let p = primes.next().unwrap();
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let t = modp::distinct_degree_pattern(f, p);
        examined += 1;
        if stored < MAX_STORED_CYCLE_TYPES {
            evidence.push(Evidence::CycleType {
                p,
                partition: t.clone(),
            });
            stored += 1;
        }
        modp::restrict_by_pattern(&mut allowed, &t);
        tracker.observe(n, p, &t);
        if !square && tracker.complete(true) {
            evidence.push(Evidence::CycleTypesExamined { primes: examined });
            evidence.push(tracker.evidence(true));
            return Ok(GaloisLabel {
                kind: LabelKind::CertifiedSn,
                certainty: Certainty::Certified,
                evidence,
            });
        }
        if square && allowed.is_empty() {
            break;
        }
    }
    evidence.push(Evidence::CycleTypesExamined { primes: examined });

    if !allowed.is_empty() {
        // the sieve could not certify irreducibility: settle it exactly
        let pattern = poly::factor_pattern(f)?;
        if !pattern.is_irreducible() {
            return Ok(reducible_label(pattern, evidence));
        }
    }
    if square {
        Ok(GaloisLabel {
            kind: LabelKind::ContainedInAn,
            certainty: Certainty::Exact,
            evidence,
        })
    } else {
        evidence.push(tracker.evidence(true));
        Ok(GaloisLabel {
            kind: LabelKind::Indeterminate,
            certainty: Certainty::BudgetLimited,
            evidence,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    #[test]
    fn cycle_type_examples() {
        let f = poly(&[1, 0, 1]);
        assert_eq!(cycle_type_mod_p(&f, 5).unwrap(), Some(vec![1, 1]));
        assert_eq!(cycle_type_mod_p(&f, 3).unwrap(), Some(vec![2]));
        assert_eq!(cycle_type_mod_p(&f, 2).unwrap(), None);
        assert!(matches!(
            cycle_type_mod_p(&f, 6),
            Err(IdentifyError::NotPrime(6))
        ));
    }

    #[test]
    fn cubic_identification() {
        // X^3 - 3X + 1: irreducible with square discriminant 81
        let label = identify(&poly(&[1, 0, -3, 1]), 50).unwrap();
        assert_eq!(label.key(), "C3");
        assert_eq!(label.certainty, Certainty::Exact);
        // X^3 - 2: nonsquare discriminant -108
        let label = identify(&poly(&[1, 0, 0, -2]), 50).unwrap();
        assert_eq!(label.key(), "S3");
        assert_eq!(label.certainty, Certainty::Exact);
        // X^3 - X: splits completely
        let label = identify(&poly(&[1, 0, -1, 0]), 50).unwrap();
        assert_eq!(label.key(), "reducible");
        match label.kind {
            LabelKind::Reducible { pattern } => {
                assert_eq!(pattern.degrees, vec![1, 1, 1]);
                assert!(pattern.has_linear);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn quartic_identification() {
        // X^4 + 1: the Klein four group; its resolvent collapses to
        // z^2 (z-4)^2 (z+4)^2, so the cross-check is flagged degenerate and
        // only the minimal-candidate label survives
        let label = identify(&poly(&[1, 0, 0, 0, 1]), 100).unwrap();
        assert_eq!(label.key(), "V4");
        assert_eq!(label.certainty, Certainty::BudgetLimited);
        assert!(label
            .evidence
            .iter()
            .any(|e| matches!(e, Evidence::ResolventDegenerate { .. })));
        // X^4 + 8X + 12: alternating group A4 (square discriminant 331776)
        let label = identify(&poly(&[1, 0, 0, 8, 12]), 100).unwrap();
        assert_eq!(label.key(), "A4");
        // X^4 - X - 1: generic S4
        let label = identify(&poly(&[1, 0, 0, -1, -1]), 100).unwrap();
        assert_eq!(label.key(), "S4");
        assert_eq!(label.certainty, Certainty::Exact);
        // X^4 - 2X^2 + 2: dihedral quartic, resolvent confirmed
        let label = identify(&poly(&[1, 0, -2, 0, 2]), 100).unwrap();
        assert_eq!(label.key(), "D4");
        assert_eq!(label.certainty, Certainty::Exact);
        // cyclic quartics always carry equal resolvent values on the two
        // cosets inside the normalizer, so C4 labels stay budget-limited
        for cs in [[1i64, 0, -4, 0, 2], [1, 1, 1, 1, 1], [1, 0, 5, 0, 5]] {
            let label = identify(&poly(&cs), 100).unwrap();
            assert_eq!(label.key(), "C4");
            assert_eq!(label.certainty, Certainty::BudgetLimited);
        }
    }

    #[test]
    fn quintic_identification() {
        let label = identify(&poly(&[1, 0, 0, 0, -1, -1]), 100).unwrap();
        assert_eq!(label.key(), "S5");
        // X^5 + X^4 - 4X^3 - 3X^2 + 3X + 1: the cyclic quintic field of
        // conductor 11
        let label = identify(&poly(&[1, 1, -4, -3, 3, 1]), 100).unwrap();
        assert_eq!(label.key(), "C5");
    }

    #[test]
    fn degenerate_degrees() {
        let label = identify(&poly(&[1, 4]), 10).unwrap();
        assert_eq!(label.key(), "S1");
        let label = identify(&poly(&[1, 0, 1]), 10).unwrap();
        assert_eq!(label.key(), "S2");
        let label = identify(&poly(&[1, 0, -1]), 10).unwrap();
        assert_eq!(label.key(), "reducible");
        let label = identify(&poly(&[1, 2, 1]), 10).unwrap();
        assert_eq!(label.key(), "reducible");
    }

    #[test]
    fn certify_sn_on_degree_ten() {
        let mut cs = vec![0i64; 11];
        cs[0] = 1;
        cs[9] = -1;
        cs[10] = -1;
        let f = poly(&cs);
        let (outcome, tracker) = certify_sn(&f, 200).unwrap();
        assert_eq!(outcome, SnCertification::Certified);
        assert!(tracker.n_cycle.is_some());
        assert!(tracker.n_minus_one_cycle.is_some());
        assert_eq!(tracker.jordan.map(|(_, q)| q), Some(7));
        let label = identify(&f, 200).unwrap();
        assert_eq!(label.key(), "certified_Sn");
        assert_eq!(label.certainty, Certainty::Certified);
    }

    #[test]
    fn certify_sn_never_fires_below_degree_eight() {
        // no prime q with n/2 < q <= n-3 exists for n <= 7, so the Jordan
        // witness cannot appear
        let (outcome, _) = certify_sn(&poly(&[1, 0, 0, -1, -1]), 100).unwrap();
        assert_eq!(outcome, SnCertification::NotCertified);
    }

    #[test]
    fn reducible_degree_ten() {
        // X^10 + 1 = (X^2 + 1)(X^8 - X^6 + X^4 - X^2 + 1)
        let mut cs = vec![0i64; 11];
        cs[0] = 1;
        cs[10] = 1;
        let label = identify(&poly(&cs), 60).unwrap();
        match label.kind {
            LabelKind::Reducible { pattern } => {
                assert_eq!(pattern.degrees, vec![2, 8]);
                assert!(!pattern.has_linear);
            }
            other => panic!("expected reducible, got {:?}", other),
        }
    }

    #[test]
    fn square_disc_never_certifies_sn() {
        // A_n fields only show even cycle types, so certification cannot
        // fire without the nonsquare-discriminant witness
        let f = poly(&[1, 0, 0, 8, 12]);
        let (outcome, tracker) = certify_sn(&f, 150).unwrap();
        assert_eq!(outcome, SnCertification::NotCertified);
        assert!(tracker.odd_type.is_none());
    }

    #[test]
    fn exact_labels_match_disc_criterion_on_small_box() {
        // degree 3, coefficients bounded by 3: exact labels agree with the
        // pure discriminant rule for irreducible cubics
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    let f = poly(&[1, a, b, c]);
                    let label = identify(&f, 40).unwrap();
                    let pattern = poly::factor_pattern(&f).unwrap();
                    if pattern.is_irreducible() {
                        let disc = poly::discriminant(&f).unwrap();
                        let expect = if poly::is_square(&disc).is_some() {
                            "C3"
                        } else {
                            "S3"
                        };
                        assert_eq!(label.key(), expect, "f = {}", f);
                    } else {
                        assert_eq!(label.key(), "reducible", "f = {}", f);
                    }
                }
            }
        }
    }

    #[test]
    fn budget_monotonicity_on_sample() {
        let samples = [
            [1i64, 0, -3, 1],
            [1, 2, -1, 1],
            [1, 0, 0, -2],
            [1, 1, 1, 1],
        ];
        for cs in samples {
            let f = poly(&cs);
            let small = identify(&f, 40).unwrap();
            let large = identify(&f, 200).unwrap();
            if small.certainty == Certainty::Exact {
                assert_eq!(small.key(), large.key(), "f = {}", f);
            }
        }
    }
}
