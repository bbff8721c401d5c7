//! Complex root approximation with certified error radii, and the explicit
//! coefficient-quotient root bound.
//!
//! Roots are located by a simultaneous Ehrlich-Aberth iteration in fixed
//! point arithmetic and then certified a posteriori: the inclusion disk of
//! radius n * |f(z_i)| / |prod_{j != i} (z_i - z_j)| around each approximation
//! contains a root, and pairwise disjoint disks contain exactly one each.
//! All certificate bounds are computed from integer bit lengths, so they are
//! directed (never optimistic) regardless of floating point rounding.

use crate::arith::{binomial, log2_upper, shr_round};
use crate::ball::{BallCtx, CBall};
use crate::poly::{self, IntPolynomial};
use num::{BigInt, One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum RootsError {
    ZeroPolynomial,
    DegreeTooSmall,
    PrecisionExhausted { precision_bits: u32, best_error: f64 },
}

impl fmt::Display for RootsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootsError::ZeroPolynomial => write!(f, "root finding rejects the zero polynomial"),
            RootsError::DegreeTooSmall => write!(f, "root finding requires degree at least 1"),
            RootsError::PrecisionExhausted {
                precision_bits,
                best_error,
            } => write!(
                f,
                "roots did not certify at {} bits; best certified error {:.3e}",
                precision_bits, best_error
            ),
        }
    }
}

impl std::error::Error for RootsError {}

/// Default precision ceiling in bits.
pub const DEFAULT_MAX_PRECISION: u32 = 4096;

/// Upper bound on the modulus of every complex root:
/// (2^{1/n} - 1)^{-1} * max_k |a_k / (a_0 C(n,k))|^{1/k},
/// evaluated with upward rounding. Returns 0 for X^n.
pub fn root_bound(f: &IntPolynomial) -> Result<f64, RootsError> {
    Ok(root_bound_log2(f)?.exp2())
}

/// log2 of the root bound; negative infinity when the bound is zero.
pub fn root_bound_log2(f: &IntPolynomial) -> Result<f64, RootsError> {
    if f.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    let n = f.degree();
    if n == 0 {
        return Err(RootsError::DegreeTooSmall);
    }
    let lead_log2 = log2_upper(f.leading());
    let mut best = f64::NEG_INFINITY;
    for k in 1..=n {
        let a = f.coeff(n - k);
        if a.is_zero() {
            continue;
        }
        let term = (log2_upper(&a) - lead_log2 + 1e-12 - log2_upper(&binomial(n as u64, k as u64)))
            / k as f64;
        best = best.max(term);
    }
    if best == f64::NEG_INFINITY {
        return Ok(f64::NEG_INFINITY);
    }
    let denom = ((1.0 / n as f64).exp2() - 1.0).log2();
    Ok(best - denom + 1e-9)
}

/// Certified simultaneous root approximations.
#[derive(Clone, Debug)]
pub struct RootSet {
    balls: Vec<CBall>,
    precision_bits: u32,
    error_radius: f64,
}

impl RootSet {
    pub fn balls(&self) -> &[CBall] {
        &self.balls
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn error_radius(&self) -> f64 {
        self.error_radius
    }

    pub fn ctx(&self) -> BallCtx {
        BallCtx::new(self.precision_bits)
    }

    /// Approximations as f64 pairs (re, im) for display and tests.
    pub fn approx(&self) -> Vec<(f64, f64)> {
        let ctx = self.ctx();
        self.balls
            .iter()
            .map(|b| (ctx.re_f64(b), ctx.im_f64(b)))
            .collect()
    }

    /// The same roots listed in a caller-chosen order.
    pub fn permuted(&self, order: &[usize]) -> RootSet {
        assert_eq!(order.len(), self.balls.len());
        let balls = order.iter().map(|&i| self.balls[i].clone()).collect();
        RootSet {
            balls,
            precision_bits: self.precision_bits,
            error_radius: self.error_radius,
        }
    }

    /// Integers that could be roots: near-real balls rounded to the nearest
    /// integer. Callers confirm by exact evaluation.
    pub fn integer_candidates(&self) -> Vec<BigInt> {
        let p = self.precision_bits;
        let mut out = Vec::new();
        for b in &self.balls {
            if b.im.abs() > b.rad {
                continue;
            }
            let q = shr_round(&b.re, p);
            let dist = (&b.re - (&q << p)).abs();
            if dist <= &b.rad + BigInt::one() {
                out.push(q);
            }
        }
        out
    }
}

/// Roots of f with certified matching error at most `target_error`.
pub fn complex_roots(f: &IntPolynomial, target_error: f64) -> Result<RootSet, RootsError> {
    complex_roots_with(f, target_error, DEFAULT_MAX_PRECISION)
}

pub fn complex_roots_with(
    f: &IntPolynomial,
    target_error: f64,
    max_precision: u32,
) -> Result<RootSet, RootsError> {
    if f.is_zero() {
        return Err(RootsError::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(RootsError::DegreeTooSmall);
    }
    assert!(target_error > 0.0);

    // factor out powers of X exactly
    let mut zero_mult = 0usize;
    let mut coeffs = f.coefficients().to_vec();
    while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
        coeffs.pop();
        zero_mult += 1;
    }
    let g = IntPolynomial::new(coeffs);

    // reduce to the monic case; roots of a0^{n-1} f(X/a0) are a0 * roots(f)
    let (monic, scale_back) = if g.is_monic() || g.degree() == 0 {
        (g.clone(), None)
    } else {
        let a0 = g.leading().clone();
        let n = g.degree();
        let coeffs: Vec<BigInt> = (0..=n)
            .map(|i| {
                // coefficient of X^{n-i} becomes a_i * a0^{i-1}
                if i == 0 {
                    BigInt::one()
                } else {
                    g.coefficients()[i].clone() * a0.pow((i - 1) as u32)
                }
            })
            .collect();
        (IntPolynomial::new(coeffs), Some(a0))
    };

    let mut parts: Vec<(IntPolynomial, usize)> = Vec::new();
    if monic.degree() >= 1 {
        parts = poly::squarefree_decomposition(&monic);
    }

    let mut prec_used = 64u32;
    let mut balls: Vec<CBall> = Vec::new();
    // roots must be rescaled when parts certify at different precisions
    let mut part_results: Vec<(Vec<CBall>, u32, usize)> = Vec::new();
    for (part, mult) in &parts {
        let (pballs, pprec, _) = solve_squarefree(part, target_error, max_precision)?;
        prec_used = prec_used.max(pprec);
        part_results.push((pballs, pprec, *mult));
    }
    let ctx = BallCtx::new(prec_used);
    for (pballs, pprec, mult) in part_results {
        let pctx = BallCtx::new(pprec);
        for b in pballs {
            let rescaled = pctx.rescale(&b, &ctx);
            let scaled = match &scale_back {
                None => rescaled,
                Some(a0) => ball_div_int(&ctx, &rescaled, a0),
            };
            for _ in 0..mult {
                balls.push(scaled.clone());
            }
        }
    }
    for _ in 0..zero_mult {
        balls.push(ctx.zero());
    }
    let error_radius = {
        let worst = balls
            .iter()
            .map(|b| ctx.rad_f64(b))
            .fold(0.0f64, f64::max);
        if worst == 0.0 && balls.iter().any(|b| !b.rad.is_zero()) {
            f64::MIN_POSITIVE
        } else {
            worst
        }
    };
    Ok(RootSet {
        balls,
        precision_bits: prec_used,
        error_radius,
    })
}

fn ball_div_int(ctx: &BallCtx, b: &CBall, k: &BigInt) -> CBall {
    let ka = k.abs();
    let neg = k.is_negative();
    let half = &ka / BigInt::from(2);
    let div_round = |x: &BigInt| -> BigInt {
        let num = if neg { -x } else { x.clone() };
        let adj = if num.is_negative() {
            -half.clone()
        } else {
            half.clone()
        };
        (num + adj) / &ka
    };
    let rad = num::Integer::div_ceil(&b.rad, &ka) + 2u32;
    ctx.from_parts(div_round(&b.re), div_round(&b.im), rad)
}

/// Roots of a squarefree monic polynomial at a fixed target error, escalating
/// precision until the inclusion disks certify. Returns the balls, the
/// precision used, and log2 of the certified radius.
fn solve_squarefree(
    g: &IntPolynomial,
    target_error: f64,
    max_precision: u32,
) -> Result<(Vec<CBall>, u32, f64), RootsError> {
    let n = g.degree();
    if n == 0 {
        return Ok((Vec::new(), 64, f64::NEG_INFINITY));
    }
    if n == 1 {
        // monic linear: exact integer root
        let ctx = BallCtx::new(64);
        let root = ctx.from_int(&(-g.constant()));
        return Ok((vec![root], 64, f64::NEG_INFINITY));
    }
    let target_log2 = target_error.log2();
    let coeff_bits = poly::max_coeff_log2(g).max(1.0);
    let mut prec = (((-target_log2).max(0.0) + 2.0 * n as f64 + coeff_bits + 48.0) as u32)
        .next_power_of_two()
        .max(96);
    let mut warm: Option<Vec<(BigInt, BigInt)>> = None;
    let mut best_log2 = f64::INFINITY;
    loop {
        if prec > max_precision {
            return Err(RootsError::PrecisionExhausted {
                precision_bits: prec / 2,
                best_error: if best_log2.is_finite() {
                    best_log2.exp2()
                } else {
                    f64::INFINITY
                },
            });
        }
        let points = aberth_iterate(g, prec, warm.take());
        if let Some((balls, rad_log2)) = certify(g, &points, prec) {
            best_log2 = best_log2.min(rad_log2);
            if rad_log2 <= target_log2 {
                return Ok((balls, prec, rad_log2));
            }
        }
        // warm start the next level: the scale doubles, so shift by old prec
        warm = Some(
            points
                .iter()
                .map(|(re, im)| (re << prec, im << prec))
                .collect(),
        );
        prec *= 2;
    }
}

/// One Ehrlich-Aberth run at fixed precision. Deterministic: fixed initial
/// circle with an irrational angular offset, Gauss-Seidel sweeps, integer
/// arithmetic throughout.
fn aberth_iterate(
    g: &IntPolynomial,
    prec: u32,
    warm: Option<Vec<(BigInt, BigInt)>>,
) -> Vec<(BigInt, BigInt)> {
    let n = g.degree();
    let shifted: Vec<BigInt> = g.coefficients().iter().map(|c| c << prec).collect();
    let dg = g.derivative();
    let dshifted: Vec<BigInt> = dg.coefficients().iter().map(|c| c << prec).collect();

    let bound = root_bound(g).unwrap_or(1.0).max(1e-3);
    let mut z: Vec<(BigInt, BigInt)> = match warm {
        Some(w) if w.len() == n => w,
        _ => {
            let golden = 0.618_033_988_749_894_8f64;
            (0..n)
                .map(|j| {
                    let theta = std::f64::consts::TAU * (j as f64 + golden) / n as f64;
                    (
                        f64_to_fixed(bound * theta.cos(), prec),
                        f64_to_fixed(bound * theta.sin(), prec),
                    )
                })
                .collect()
        }
    };
    // collisions would break the pairwise corrections
    for i in 1..n {
        for j in 0..i {
            if z[i] == z[j] {
                z[i].0 += BigInt::from(i as u64 + 1);
                z[i].1 += BigInt::one();
            }
        }
    }

    let one = BigInt::one() << prec;
    let max_sweeps = 72 + 16 * n;
    let mut stagnant = 0usize;
    let mut best_wbits = u64::MAX;
    let escape = f64_to_fixed(4.0 * (bound + 1.0), prec);
    let escape_sq = &escape * &escape;

    for sweep in 0..max_sweeps {
        let mut max_wbits = 0u64;
        for i in 0..n {
            let (fre, fim) = horner(&shifted, &z[i], prec);
            if fre.is_zero() && fim.is_zero() {
                continue;
            }
            let (dre, dim) = horner(&dshifted, &z[i], prec);
            let newton = if dre.is_zero() && dim.is_zero() {
                // derivative vanished at the point: nudge and move on
                z[i].0 += BigInt::from(sweep as u64 + 3);
                continue;
            } else {
                cdiv(&fre, &fim, &dre, &dim, prec)
            };
            // sum of reciprocals of pairwise differences
            let mut sre = BigInt::zero();
            let mut sim = BigInt::zero();
            let mut collision = false;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let dre_ = &z[i].0 - &z[j].0;
                let dim_ = &z[i].1 - &z[j].1;
                if dre_.is_zero() && dim_.is_zero() {
                    collision = true;
                    break;
                }
                let (rre, rim) = cdiv(&one, &BigInt::zero(), &dre_, &dim_, prec);
                sre += rre;
                sim += rim;
            }
            if collision {
                z[i].0 += BigInt::from(sweep as u64 + 7);
                continue;
            }
            let (nsre, nsim) = cmul(&newton.0, &newton.1, &sre, &sim, prec);
            let den_re = &one - nsre;
            let den_im = -nsim;
            let w = if den_re.is_zero() && den_im.is_zero() {
                newton
            } else {
                cdiv(&newton.0, &newton.1, &den_re, &den_im, prec)
            };
            let wbits = w.0.bits().max(w.1.bits());
            max_wbits = max_wbits.max(wbits);
            z[i].0 -= &w.0;
            z[i].1 -= &w.1;
            // keep runaways on a deterministic leash
            let nrm = &z[i].0 * &z[i].0 + &z[i].1 * &z[i].1;
            if nrm > escape_sq {
                let theta = std::f64::consts::TAU
                    * ((i as f64 + 0.618_033_988_749_894_8) / n as f64 + sweep as f64 * 0.1);
                z[i] = (
                    f64_to_fixed(bound * theta.cos(), prec),
                    f64_to_fixed(bound * theta.sin(), prec),
                );
            }
        }
        if max_wbits <= 9 {
            break;
        }
        if max_wbits + 1 >= best_wbits {
            stagnant += 1;
            if stagnant > 14 {
                break;
            }
        } else {
            stagnant = 0;
            best_wbits = max_wbits;
        }
    }
    z
}

fn f64_to_fixed(x: f64, prec: u32) -> BigInt {
    if x == 0.0 || !x.is_finite() {
        return BigInt::zero();
    }
    // decompose into a 53-bit mantissa and a binary exponent
    let e = x.abs().log2().floor() as i64;
    let mant = (x / (e as f64).exp2()) * 2f64.powi(52);
    let m = BigInt::from(mant as i128);
    let shift = prec as i64 + e - 52;
    if shift >= 0 {
        m << (shift as u64)
    } else {
        shr_round(&m, (-shift) as u32)
    }
}

fn horner(shifted: &[BigInt], z: &(BigInt, BigInt), prec: u32) -> (BigInt, BigInt) {
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    for c in shifted {
        let (nre, nim) = cmul(&re, &im, &z.0, &z.1, prec);
        re = nre + c;
        im = nim;
    }
    (re, im)
}

fn cmul(are: &BigInt, aim: &BigInt, bre: &BigInt, bim: &BigInt, prec: u32) -> (BigInt, BigInt) {
    (
        shr_round(&(are * bre - aim * bim), prec),
        shr_round(&(are * bim + aim * bre), prec),
    )
}

fn cdiv(are: &BigInt, aim: &BigInt, bre: &BigInt, bim: &BigInt, prec: u32) -> (BigInt, BigInt) {
    let den = bre * bre + bim * bim;
    debug_assert!(!den.is_zero());
    let nre = (are * bre + aim * bim) << prec;
    let nim = (aim * bre - are * bim) << prec;
    (nre / &den, nim / &den)
}

/// A posteriori certificates: per-root inclusion radii from the Weierstrass
/// corrections, demanded pairwise disjoint. All bounds use integer bit
/// lengths only. Returns the certified balls and log2 of the largest radius.
fn certify(g: &IntPolynomial, z: &[(BigInt, BigInt)], prec: u32) -> Option<(Vec<CBall>, f64)> {
    let n = z.len();
    let ctx = BallCtx::new(prec);
    let coeffs = g.coefficients();
    let mut rad_log2 = vec![0f64; n];
    for i in 0..n {
        // upper bound on |f(z_i)| via ball evaluation with exact inputs
        let zi = ctx.from_parts(z[i].0.clone(), z[i].1.clone(), BigInt::zero());
        let mut acc = ctx.zero();
        for c in coeffs {
            acc = ctx.mul(&acc, &zi);
            acc = ctx.add_int(&acc, c);
        }
        let num_mant = ctx.mod_upper(&acc) + &acc.rad;
        let num_up = bits_log2_upper(&num_mant) - prec as f64;
        // lower bound on the product of pairwise distances
        let mut den_low = 0f64;
        for (j, zj) in z.iter().enumerate() {
            if j == i {
                continue;
            }
            let dre = (&z[i].0 - &zj.0).abs();
            let dim = (&z[i].1 - &zj.1).abs();
            let m = dre.max(dim);
            if m.is_zero() {
                return None;
            }
            den_low += (m.bits() as f64 - 1.0) - prec as f64;
        }
        rad_log2[i] = (n as f64).log2() + num_up - den_low;
    }
    // disjointness of the inclusion disks
    for i in 0..n {
        for j in (i + 1)..n {
            let dre = (&z[i].0 - &z[j].0).abs();
            let dim = (&z[i].1 - &z[j].1).abs();
            let m = dre.max(dim);
            let sep_low = (m.bits() as f64 - 1.0) - prec as f64;
            if sep_low <= rad_log2[i].max(rad_log2[j]) + 1.0 {
                return None;
            }
        }
    }
    let mut worst = f64::NEG_INFINITY;
    let mut balls = Vec::with_capacity(n);
    for i in 0..n {
        worst = worst.max(rad_log2[i]);
        let exp = rad_log2[i].ceil() as i64 + 1 + prec as i64;
        let rad = if exp <= 0 {
            BigInt::one()
        } else {
            BigInt::one() << (exp as u64)
        };
        balls.push(ctx.from_parts(z[i].0.clone(), z[i].1.clone(), rad));
    }
    Some((balls, worst))
}

fn bits_log2_upper(m: &BigInt) -> f64 {
    if m.is_zero() {
        return f64::NEG_INFINITY;
    }
    m.bits() as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPolynomial;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    #[test]
    fn bound_examples() {
        // X^n has bound 0
        assert_eq!(root_bound(&poly(&[1, 0, 0, 0])).unwrap(), 0.0);
        // X^2 - 2X + 1: 1/(sqrt 2 - 1)
        let b = root_bound(&poly(&[1, -2, 1])).unwrap();
        let expect = 1.0 / (2f64.sqrt() - 1.0);
        assert!(b >= expect - 1e-9 && b < expect + 1e-4, "b = {}", b);
        // X^3 - 6X^2 + 11X - 6: 2 / (2^{1/3} - 1), and covers the max root 3
        let b = root_bound(&poly(&[1, -6, 11, -6])).unwrap();
        let expect = 2.0 / ((1f64 / 3.0).exp2() - 1.0);
        assert!(b >= expect - 1e-9 && b < expect + 1e-3, "b = {}", b);
        assert!(b >= 3.0);
    }

    #[test]
    fn quadratic_with_imaginary_roots() {
        let rs = complex_roots(&poly(&[1, 0, 1]), 1e-12).unwrap();
        assert_eq!(rs.len(), 2);
        let mut ims: Vec<f64> = rs.approx().iter().map(|&(_, im)| im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ims[0] + 1.0).abs() < 1e-12);
        assert!((ims[1] - 1.0).abs() < 1e-12);
        for (re, _) in rs.approx() {
            assert!(re.abs() < 1e-12);
        }
        assert!(rs.error_radius() <= 1e-12);
    }

    #[test]
    fn cube_roots_of_unity() {
        let rs = complex_roots(&poly(&[1, 0, 0, -1]), 1e-12).unwrap();
        assert_eq!(rs.len(), 3);
        let (mut sre, mut sim) = (0.0, 0.0);
        for (re, im) in rs.approx() {
            let modulus = (re * re + im * im).sqrt();
            assert!((modulus - 1.0).abs() < 1e-10);
            sre += re;
            sim += im;
        }
        assert!(sre.abs() < 1e-9 && sim.abs() < 1e-9);
    }

    #[test]
    fn six_integer_roots() {
        // oracle: expand prod (X - k) exactly, then recover the roots
        let mut f = poly(&[1]);
        for k in 1..=6 {
            f = f.mul(&poly(&[1, -k]));
        }
        let rs = complex_roots(&f, 1e-10).unwrap();
        let mut res: Vec<f64> = rs.approx().iter().map(|&(re, _)| re).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (i, re) in res.iter().enumerate() {
            assert!((re - (i as f64 + 1.0)).abs() < 1e-10, "root {} = {}", i, re);
        }
        let cands = rs.integer_candidates();
        assert_eq!(cands.len(), 6);
    }

    #[test]
    fn vieta_consistency_on_random_polynomials() {
        let mut state = 41u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) % 21) as i64 - 10
        };
        for _ in 0..25 {
            let n = 2 + (rnd().unsigned_abs() as usize % 4);
            let mut cs = vec![1i64];
            for _ in 0..n {
                cs.push(rnd());
            }
            let f = poly(&cs);
            if f.constant().is_zero() {
                continue;
            }
            let rs = complex_roots(&f, 1e-9).unwrap();
            let (mut sre, mut sim) = (0.0, 0.0);
            for (re, im) in rs.approx() {
                sre += re;
                sim += im;
            }
            let a1: f64 = cs[1] as f64;
            assert!((sre + a1).abs() < 1e-6, "sum {} vs -a1 {}", sre, -a1);
            assert!(sim.abs() < 1e-6);
            let bound = root_bound(&f).unwrap() + rs.error_radius();
            for (re, im) in rs.approx() {
                assert!((re * re + im * im).sqrt() <= bound + 1e-9);
            }
        }
    }

    #[test]
    fn repeated_roots_get_multiplicities() {
        // (X-1)^2 (X+2)
        let f = poly(&[1, -1]).mul(&poly(&[1, -1])).mul(&poly(&[1, 2]));
        let rs = complex_roots(&f, 1e-10).unwrap();
        assert_eq!(rs.len(), 3);
        let mut res: Vec<f64> = rs.approx().iter().map(|&(re, _)| re).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((res[0] + 2.0).abs() < 1e-10);
        assert!((res[1] - 1.0).abs() < 1e-10);
        assert!((res[2] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn precision_doubling_does_not_worsen_certificates() {
        let f = poly(&[1, 3, -7, 2, 11]);
        let mut last = f64::INFINITY;
        for prec in [128u32, 256, 512] {
            let points = aberth_iterate(&f, prec, None);
            let (_, log2rad) = certify(&f, &points, prec).expect("certify");
            assert!(log2rad <= last + 1e-9, "radius grew at {} bits", prec);
            last = log2rad;
        }
    }

    #[test]
    fn non_monic_polynomials_are_supported() {
        // 3X^2 - 3 has roots +-1
        let rs = complex_roots(&poly(&[3, 0, -3]), 1e-10).unwrap();
        let mut res: Vec<f64> = rs.approx().iter().map(|&(re, _)| re).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((res[0] + 1.0).abs() < 1e-10);
        assert!((res[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn zero_roots_are_exact() {
        let rs = complex_roots(&poly(&[1, 0, -1, 0, 0]), 1e-10).unwrap();
        assert_eq!(rs.len(), 4);
        let zeros = rs
            .balls()
            .iter()
            .filter(|b| b.re.is_zero() && b.im.is_zero() && b.rad.is_zero())
            .count();
        assert_eq!(zeros, 2);
    }
}
