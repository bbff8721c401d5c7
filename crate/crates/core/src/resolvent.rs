//! Galois resolvents with certified integer coefficients.
//!
//! For a monic integer f of degree n with complex roots a_1, ..., a_n and a
//! subgroup G of S_n of index m, the resolvent is
//!
//!   Phi(z) = prod over coset representatives s of (z - R_s),
//!   R_s = sum over t in G of prod_i a_{s(t(i))}^i.
//!
//! Phi always has integer coefficients, and when the splitting field of f
//! has Galois group G (up to the labeling of roots), Phi has an integer
//! root. Construction is numeric: the R_s are evaluated in ball arithmetic
//! from certified root enclosures, the product is expanded, and every
//! coefficient must round to an integer with margin and radius below 1/4.
//! Failures double the working precision and retry up to a ceiling.

use crate::ball::{BallCtx, CBall};
use crate::modp;
use crate::perm::{left_coset_reps, CosetSystem, PermError, PermGroup, Permutation};
use crate::poly::{IntPolynomial, PolyError};
use crate::roots::{self, RootSet, RootsError};
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// Ceiling on the ball-arithmetic precision for resolvent construction.
pub const RESOLVENT_MAX_PRECISION: u32 = 8192;
/// Cap on |G| * m * n, the number of root-power products per construction.
pub const RESOLVENT_WORK_LIMIT: u64 = 4_000_000;

#[derive(Debug, Clone)]
pub enum ResolventError {
    DegreeMismatch { poly: usize, group: usize },
    NotMonic,
    Perm(PermError),
    Roots(RootsError),
    Poly(PolyError),
    WorkLimit { required: u64, limit: u64 },
    Uncertified { margin: f64, raw: Vec<f64> },
}

impl fmt::Display for ResolventError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolventError::DegreeMismatch { poly, group } => write!(
                f,
                "polynomial degree {} does not match group degree {}",
                poly, group
            ),
            ResolventError::NotMonic => write!(f, "resolvent construction requires a monic polynomial"),
            ResolventError::Perm(e) => write!(f, "{}", e),
            ResolventError::Roots(e) => write!(f, "{}", e),
            ResolventError::Poly(e) => write!(f, "{}", e),
            ResolventError::WorkLimit { required, limit } => write!(
                f,
                "resolvent needs {} root-power products, above the limit {}",
                required, limit
            ),
            ResolventError::Uncertified { margin, .. } => write!(
                f,
                "resolvent coefficients failed to certify (margin {:.4} at the precision ceiling)",
                margin
            ),
        }
    }
}

impl std::error::Error for ResolventError {}

impl From<PermError> for ResolventError {
    fn from(e: PermError) -> Self {
        ResolventError::Perm(e)
    }
}

impl From<RootsError> for ResolventError {
    fn from(e: RootsError) -> Self {
        ResolventError::Roots(e)
    }
}

impl From<PolyError> for ResolventError {
    fn from(e: PolyError) -> Self {
        ResolventError::Poly(e)
    }
}

/// A certified Galois resolvent.
#[derive(Clone, Debug)]
pub struct Resolvent {
    pub group: PermGroup,
    pub polynomial: IntPolynomial,
    pub rounding_margin: f64,
    pub precision_bits: u32,
    /// disc(Phi) = 0: the resolvent has a repeated root, and resolvent
    /// evidence alone is treated as inconclusive downstream.
    pub degenerate: bool,
    root_values: Vec<CBall>,
}

impl Resolvent {
    pub fn degree(&self) -> usize {
        self.polynomial.degree()
    }

    /// Ball enclosures of the resolvent values R_s, one per coset.
    pub fn root_values(&self) -> &[CBall] {
        &self.root_values
    }
}

/// R_s for a single permutation: sum over t in G of prod_i root_{s(t(i))}^i,
/// evaluated in the RootSet's precision.
pub fn invariant_value(
    sigma: &Permutation,
    group: &PermGroup,
    roots: &RootSet,
) -> Result<CBall, ResolventError> {
    let n = group.degree();
    if sigma.degree() != n || roots.len() != n {
        return Err(ResolventError::DegreeMismatch {
            poly: roots.len(),
            group: n,
        });
    }
    let ctx = roots.ctx();
    let powers = root_power_table(&ctx, roots);
    let elements = group.elements()?;
    Ok(invariant_from_table(&ctx, &powers, sigma, &elements, n))
}

fn root_power_table(ctx: &BallCtx, roots: &RootSet) -> Vec<Vec<CBall>> {
    let n = roots.len();
    let mut powers = Vec::with_capacity(n);
    for b in roots.balls() {
        let mut row = Vec::with_capacity(n);
        let mut acc = b.clone();
        row.push(acc.clone());
        for _ in 1..n {
            acc = ctx.mul(&acc, b);
            row.push(acc.clone());
        }
        powers.push(row);
    }
    powers
}

fn invariant_from_table(
    ctx: &BallCtx,
    powers: &[Vec<CBall>],
    sigma: &Permutation,
    elements: &[Permutation],
    n: usize,
) -> CBall {
    let mut sum = ctx.zero();
    for tau in elements {
        let mut term = ctx.from_int(&BigInt::one());
        for i in 0..n {
            let idx = sigma.apply(tau.apply(i));
            term = ctx.mul(&term, &powers[idx][i]);
        }
        sum = ctx.add(&sum, &term);
    }
    sum
}

/// Build the resolvent of f with respect to G, escalating precision until
/// every coefficient certifies.
pub fn galois_resolvent(
    f: &IntPolynomial,
    group: &PermGroup,
    initial_precision: Option<u32>,
) -> Result<Resolvent, ResolventError> {
    let system = left_coset_reps(group)?;
    galois_resolvent_with_system(f, &system, initial_precision)
}

/// Resolvent construction from an explicit coset system. The integer output
/// does not depend on the representative choice; this entry point exists so
/// that independence can be exercised directly.
pub fn galois_resolvent_with_system(
    f: &IntPolynomial,
    system: &CosetSystem,
    initial_precision: Option<u32>,
) -> Result<Resolvent, ResolventError> {
    let group = &system.group;
    let n = group.degree();
    if f.degree() != n {
        return Err(ResolventError::DegreeMismatch {
            poly: f.degree(),
            group: n,
        });
    }
    if !f.is_monic() {
        return Err(ResolventError::NotMonic);
    }
    let m = system.representatives.len() as u64;
    let work = group.order() * m * n as u64;
    if work > RESOLVENT_WORK_LIMIT {
        return Err(ResolventError::WorkLimit {
            required: work,
            limit: RESOLVENT_WORK_LIMIT,
        });
    }
    let elements = group.elements()?;

    // precision seed from the coefficient growth of Phi
    let b = roots::root_bound(f)?.max(1.0);
    let n_sum = (n * (n + 1) / 2) as f64;
    let r_log2 = (group.order() as f64).log2() + n_sum * (b + 2.0).log2();
    let coef_bits = m as f64 * r_log2 + m as f64 + 8.0;
    let mut extra = initial_precision.map(|p| p as f64).unwrap_or(64.0).max(64.0);

    let mut last_margin = f64::INFINITY;
    let mut last_raw: Vec<f64> = Vec::new();
    loop {
        let target_log2 = -(coef_bits + n as f64 * (b + 2.0).log2() + extra);
        if -target_log2 >= RESOLVENT_MAX_PRECISION as f64 {
            return Err(ResolventError::Uncertified {
                margin: last_margin,
                raw: last_raw,
            });
        }
        let target = target_log2.exp2().max(f64::MIN_POSITIVE);
        let roots = roots::complex_roots_with(f, target, RESOLVENT_MAX_PRECISION)?;
        match resolvent_from_rootset(f, system, &elements, &roots) {
            Ok(r) => return Ok(r),
            Err(ResolventError::Uncertified { margin, raw }) => {
                last_margin = margin;
                last_raw = raw;
                extra = extra * 2.0 + 64.0;
            }
            Err(e) => return Err(e),
        }
    }
}

/// One construction attempt at the RootSet's precision.
pub fn resolvent_from_rootset(
    f: &IntPolynomial,
    system: &CosetSystem,
    elements: &[Permutation],
    roots: &RootSet,
) -> Result<Resolvent, ResolventError> {
    let group = &system.group;
    let n = group.degree();
    debug_assert_eq!(f.degree(), n);
    let ctx = roots.ctx();
    let powers = root_power_table(&ctx, roots);
    let values: Vec<CBall> = system
        .representatives
        .iter()
        .map(|sigma| invariant_from_table(&ctx, &powers, sigma, elements, n))
        .collect();

    // expand prod (z - R_s), coefficients ascending
    let mut coeffs: Vec<CBall> = vec![ctx.from_int(&BigInt::one())];
    for v in &values {
        let mut next = vec![ctx.zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            // z * c contributes at j+1, -R_s * c at j
            next[j + 1] = ctx.add(&next[j + 1], c);
            let t = ctx.mul(c, v);
            next[j] = ctx.sub(&next[j], &t);
        }
        coeffs = next;
    }

    let mut ints = Vec::with_capacity(coeffs.len());
    let mut margin = 0.0f64;
    for c in coeffs.iter().rev() {
        match ctx.round_real_to_int(c) {
            Some((v, m)) => {
                margin = margin.max(m);
                ints.push(v);
            }
            None => {
                let raw: Vec<f64> = coeffs.iter().rev().map(|c| ctx.re_f64(c)).collect();
                let worst = coeffs
                    .iter()
                    .map(|c| {
                        let re = ctx.re_f64(c);
                        (re - re.round()).abs().max(ctx.rad_f64(c))
                    })
                    .fold(0.0f64, f64::max);
                return Err(ResolventError::Uncertified { margin: worst, raw });
            }
        }
    }
    debug_assert!(ints[0].is_one());
    let polynomial = IntPolynomial::new(ints);
    let degenerate = polynomial.degree() >= 2 && modp::discriminant_is_zero(&polynomial);
    Ok(Resolvent {
        group: group.clone(),
        polynomial,
        rounding_margin: margin,
        precision_bits: ctx.prec,
        degenerate,
        root_values: values,
    })
}

/// Integer roots of a certified resolvent. The coset values enclose every
/// root of Phi, so integer candidates come from the near-real enclosures and
/// are confirmed by exact evaluation; every root satisfies the root bound
/// of Phi by construction.
pub fn integer_root_test(resolvent: &Resolvent) -> BTreeSet<BigInt> {
    let ctx = BallCtx::new(resolvent.precision_bits);
    let mut out = BTreeSet::new();
    let phi = &resolvent.polynomial;
    for v in &resolvent.root_values {
        if v.im.abs() > v.rad {
            continue;
        }
        let q = crate::arith::shr_round(&v.re, ctx.prec);
        let dist = (&v.re - (&q << ctx.prec)).abs();
        if dist > &v.rad + BigInt::one() {
            continue;
        }
        if out.contains(&q) {
            continue;
        }
        if phi.evaluate(&q).is_zero() {
            out.insert(q);
        }
    }
    if cfg!(debug_assertions) {
        if let Ok(bound_log2) = roots::root_bound_log2(phi) {
            for z in &out {
                if !z.is_zero() {
                    debug_assert!(crate::arith::log2_upper(z) <= bound_log2 + 1e-6);
                }
            }
        }
    }
    out
}

/// Outcome of the genericity check for a coefficient prefix.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub enum GenericCheck {
    /// Some integer specialization of the constant term yields a resolvent
    /// that is irreducible of full degree, certified by mod-p degree
    /// patterns; irreducibility lifts to the function field.
    CertifiedGenericSn { specialization: i64 },
    /// Nothing certified within the sample budget. Never a claim of
    /// non-genericity.
    Inconclusive,
}

/// Check that X^n + a_1 X^{n-1} + ... + a_{n-1} X + t generically has full
/// symmetric Galois group, by specializing t and certifying that the
/// resulting resolvent for G is irreducible of degree m.
pub fn generic_group_check(
    prefix: &[BigInt],
    group: &PermGroup,
    sample_budget: usize,
) -> Result<GenericCheck, ResolventError> {
    let n = group.degree();
    if prefix.len() + 1 != n {
        return Err(ResolventError::DegreeMismatch {
            poly: prefix.len() + 1,
            group: n,
        });
    }
    let m = group.index_in_sn();
    if m == 1 {
        // a degree-1 resolvent cannot witness anything; genericity concerns
        // proper subgroups only
        return Ok(GenericCheck::CertifiedGenericSn { specialization: 0 });
    }
    let system = left_coset_reps(group)?;
    for step in 0..sample_budget {
        let t0: i64 = if step % 2 == 0 {
            (step / 2) as i64 + 1
        } else {
            -((step / 2) as i64 + 1)
        };
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(BigInt::one());
        coeffs.extend(prefix.iter().cloned());
        coeffs.push(BigInt::from(t0));
        let f = IntPolynomial::new(coeffs);
        let phi = match galois_resolvent_with_system(&f, &system, None) {
            Ok(p) => p,
            Err(ResolventError::Uncertified { .. }) => continue,
            Err(e) => return Err(e),
        };
        if phi.degenerate {
            continue;
        }
        let allowed = modp::possible_proper_factor_degrees(&phi.polynomial, 12, 1);
        if allowed.is_empty() {
            return Ok(GenericCheck::CertifiedGenericSn { specialization: t0 });
        }
    }
    Ok(GenericCheck::Inconclusive)
}
