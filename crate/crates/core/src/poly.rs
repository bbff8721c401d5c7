//! Exact arithmetic on univariate integer polynomials: evaluation,
//! resultants and discriminants, integer roots, and bounded factor search.

use crate::arith::{binomial, divisors_up_to, is_square_integer, log2_upper};
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Default cap on the degree accepted by the factoring routines.
pub const DEFAULT_MAX_DEGREE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
    DegreeTooSmall,
    UnsupportedDegree { degree: usize, max: usize },
    NotMonic,
    PrecisionExhausted { degree: usize },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            PolyError::DegreeTooSmall => write!(f, "operation requires degree at least 1"),
            PolyError::UnsupportedDegree { degree, max } => {
                write!(f, "degree {} exceeds the supported maximum {}", degree, max)
            }
            PolyError::NotMonic => write!(f, "operation requires a monic polynomial"),
            PolyError::PrecisionExhausted { degree } => write!(
                f,
                "root-based factor search exhausted its precision ceiling at degree {}",
                degree
            ),
        }
    }
}

impl std::error::Error for PolyError {}

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored leading coefficient first. The zero polynomial is `[0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from coefficients ordered leading to constant. Leading zeros
    /// are stripped; an empty or all-zero input yields the zero polynomial.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let first_nonzero = coeffs.iter().position(|c| !c.is_zero());
        match first_nonzero {
            None => IntPolynomial {
                coeffs: vec![BigInt::zero()],
            },
            Some(i) => IntPolynomial {
                coeffs: coeffs[i..].to_vec(),
            },
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// X^n
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn constant(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    /// Coefficient of X^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        if k > self.degree() {
            BigInt::zero()
        } else {
            self.coeffs[self.degree() - k].clone()
        }
    }

    /// Coefficients ordered leading to constant.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0].is_one()
    }

    /// Exact evaluation by Horner's rule.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        if let (Some(cs), Some(xv)) = (self.coeffs_i128(), x.to_i128()) {
            if let Some(v) = eval_i128(&cs, xv) {
                return BigInt::from(v);
            }
        }
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }

    fn coeffs_i128(&self) -> Option<Vec<i128>> {
        if self.coeffs.len() > 32 {
            return None;
        }
        self.coeffs.iter().map(|c| c.to_i128()).collect()
    }

    pub fn derivative(&self) -> IntPolynomial {
        let n = self.degree();
        if n == 0 {
            return IntPolynomial::zero();
        }
        let coeffs = self.coeffs[..n]
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from((n - i) as u64))
            .collect();
        IntPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[n - self.coeffs.len() + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[n - other.coeffs.len() + i] += c;
        }
        IntPolynomial::new(out)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact division by a monic divisor; `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        assert!(divisor.is_monic(), "divisor must be monic");
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let n = self.degree();
        let d = divisor.degree();
        if n < d {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = Vec::with_capacity(n - d + 1);
        for i in 0..=(n - d) {
            let q = rem[i].clone();
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate().skip(1) {
                    let idx = i + j;
                    rem[idx] = &rem[idx] - &q * c;
                }
            }
            quot.push(q);
        }
        if rem[(n - d + 1)..].iter().all(|c| c.is_zero()) {
            Some(IntPolynomial::new(quot))
        } else {
            None
        }
    }

    /// Remainder of division by a monic divisor.
    pub fn rem_monic(&self, divisor: &IntPolynomial) -> IntPolynomial {
        assert!(divisor.is_monic());
        let d = divisor.degree();
        if self.degree() < d || self.is_zero() {
            return self.clone();
        }
        let n = self.degree();
        let mut rem = self.coeffs.clone();
        for i in 0..=(n - d) {
            let q = rem[i].clone();
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate().skip(1) {
                    let idx = i + j;
                    rem[idx] = &rem[idx] - &q * c;
                }
                rem[i] = BigInt::zero();
            }
        }
        IntPolynomial::new(rem)
    }

    /// Content (gcd of coefficients), always nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num::Integer::gcd(&g, c);
        }
        g
    }

    pub fn primitive_part(&self) -> IntPolynomial {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs.iter().map(|x| x / &c).collect())
    }
}

fn eval_i128(coeffs: &[i128], x: i128) -> Option<i128> {
    let mut acc: i128 = 0;
    for &c in coeffs {
        acc = acc.checked_mul(x)?.checked_add(c)?;
    }
    Some(acc)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IntPolynomial {
    type Err = String;

    /// Parse the comma-separated text format, leading coefficient first,
    /// e.g. `1,0,-3,1` for X^3 - 3X + 1.
    fn from_str(s: &str) -> Result<Self, String> {
        let coeffs: Result<Vec<BigInt>, String> = s
            .split(',')
            .map(|t| {
                BigInt::from_str(t.trim()).map_err(|e| format!("bad coefficient {:?}: {}", t, e))
            })
            .collect();
        let coeffs = coeffs?;
        if coeffs.is_empty() {
            return Err("empty coefficient list".to_string());
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

// ---------------------------------------------------------------------------
// resultant and discriminant
// ---------------------------------------------------------------------------

/// Resultant of f and g by fraction-free (Bareiss) elimination on the
/// Sylvester matrix. Exact for any degrees; intended for desk-scale inputs.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let m = f.degree();
    let n = g.degree();
    if m == 0 {
        return f.leading().pow(n as u32);
    }
    if n == 0 {
        return g.leading().pow(m as u32);
    }
    let size = m + n;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (j, c) in f.coeffs.iter().enumerate() {
            a[row][row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in g.coeffs.iter().enumerate() {
            a[n + row][row + j] = c.clone();
        }
    }
    bareiss_determinant(a)
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&i| !a[i][k].is_zero());
            match pivot {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let q = num / &prev;
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Discriminant with the normalization (-1)^{n(n-1)/2} Res(f, f') / lc(f),
/// so that for irreducible monic f a square discriminant is equivalent to
/// the Galois group lying in the alternating group.
pub fn discriminant(f: &IntPolynomial) -> Result<BigInt, PolyError> {
    let n = f.degree();
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if n == 0 {
        return Err(PolyError::DegreeTooSmall);
    }
    if let Some(d) = disc_small_degree(f) {
        return Ok(d);
    }
    if let Some(d) = disc_trinomial(f) {
        return Ok(d);
    }
    let res = resultant(f, &f.derivative());
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let d = res / f.leading();
    Ok(if sign < 0 { -d } else { d })
}

/// Closed forms for degrees up to 4, used when the coefficients are small
/// enough for i128 arithmetic.
fn disc_small_degree(f: &IntPolynomial) -> Option<BigInt> {
    let n = f.degree();
    if n > 4 {
        return None;
    }
    let cs = f.coeffs_i128()?;
    if cs.iter().any(|c| c.abs() > 1_000_000) {
        return None;
    }
    let d = match (n, cs.as_slice()) {
        (1, _) => 1,
        (2, [a, b, c]) => b * b - 4 * a * c,
        (3, [a, b, c, d]) => {
            18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c
                - 4 * a * c * c * c
                - 27 * a * a * d * d
        }
        (4, [a, b, c, d, e]) => {
            256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e
                - 128 * a * a * c * c * e * e
                + 144 * a * a * c * d * d * e
                - 27 * a * a * d * d * d * d
                + 144 * a * b * b * c * e * e
                - 6 * a * b * b * d * d * e
                - 80 * a * b * c * c * d * e
                + 18 * a * b * c * d * d * d
                + 16 * a * c * c * c * c * e
                - 4 * a * c * c * c * d * d
                - 27 * b * b * b * b * e * e
                + 18 * b * b * b * c * d * e
                - 4 * b * b * b * d * d * d
                - 4 * b * b * c * c * c * e
                + b * b * c * c * d * d
        }
        _ => return None,
    };
    Some(BigInt::from(d))
}

/// Closed form for X^n + a X^m + b with gcd(n, m) = 1.
fn disc_trinomial(f: &IntPolynomial) -> Option<BigInt> {
    let n = f.degree();
    if n < 3 || !f.is_monic() {
        return None;
    }
    let mut a = BigInt::zero();
    let mut m = 0usize;
    let b = f.constant().clone();
    if b.is_zero() {
        return None;
    }
    for k in 1..n {
        let c = f.coeff(k);
        if !c.is_zero() {
            if !a.is_zero() {
                return None;
            }
            a = c;
            m = k;
        }
    }
    if a.is_zero() {
        // binomial X^n + b
        let nn = BigInt::from(n as u64).pow(n as u32);
        let sign_inner: i32 = if n % 2 == 0 { 1 } else { -1 };
        let d = nn * b.pow((n - 1) as u32) * BigInt::from(sign_inner);
        let outer = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        return Some(if outer < 0 { -d } else { d });
    }
    if num::Integer::gcd(&(n as u64), &(m as u64)) != 1 {
        return None;
    }
    let r = n - m;
    let nn = BigInt::from(n as u64).pow(n as u32);
    let rr = BigInt::from(r as u64).pow(r as u32);
    let mm = BigInt::from(m as u64).pow(m as u32);
    let inner_sign: i32 = if n % 2 == 0 { 1 } else { -1 };
    let inner = nn * b.pow(r as u32) - rr * mm * a.pow(n as u32) * BigInt::from(inner_sign);
    let d = b.pow((m - 1) as u32) * inner;
    let outer = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    Some(if outer < 0 { -d } else { d })
}

// ---------------------------------------------------------------------------
// gcd and squarefree structure
// ---------------------------------------------------------------------------

/// Primitive gcd over the integers with positive leading coefficient,
/// computed by a primitive pseudo-remainder sequence.
pub fn gcd(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    if f.is_zero() {
        return normalize_sign(g.primitive_part());
    }
    if g.is_zero() {
        return normalize_sign(f.primitive_part());
    }
    let mut a = f.primitive_part();
    let mut b = g.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    normalize_sign(a)
}

fn normalize_sign(p: IntPolynomial) -> IntPolynomial {
    if p.leading().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Scaled remainder sequence step: repeatedly cancel the leading term of
/// the running remainder against lc(b) * X^k * b.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut rem = a.clone();
    let d = b.degree();
    while !rem.is_zero() && rem.degree() >= d {
        let k = rem.degree() - d;
        let lead = rem.coeffs[0].clone();
        let scaled = rem.scale(b.leading());
        let shifted_b = b.shift_up(k).scale(&lead);
        let next = scaled.sub(&shifted_b);
        debug_assert!(next.is_zero() || next.degree() < rem.degree());
        rem = next;
    }
    rem
}

impl IntPolynomial {
    /// Multiply by X^k.
    fn shift_up(&self, k: usize) -> IntPolynomial {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_with(BigInt::zero).take(k));
        IntPolynomial { coeffs }
    }
}

/// Yun's squarefree decomposition for a monic polynomial: returns pairs
/// (g, k) with f = prod g^k, the g monic, squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    assert!(f.is_monic());
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let df = f.derivative();
    let a = gcd(f, &df);
    if a.degree() == 0 {
        out.push((f.clone(), 1));
        return out;
    }
    let mut b = f.exact_div(&a).expect("gcd divides");
    let mut c = df.exact_div(&a).expect("gcd divides derivative");
    let mut k = 1usize;
    loop {
        let d = c.sub(&b.derivative());
        if d.is_zero() {
            if b.degree() > 0 {
                out.push((b, k));
            }
            break;
        }
        let g = gcd(&b, &d);
        if g.degree() > 0 {
            out.push((g.clone(), k));
        }
        b = b.exact_div(&g).expect("squarefree step divides");
        c = d.exact_div(&g).expect("squarefree step divides");
        k += 1;
        if b.degree() == 0 {
            break;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// integer roots
// ---------------------------------------------------------------------------

/// Exactly the integers x with f(x) = 0. Candidates are divisors of the
/// trailing nonzero coefficient (plus 0 when the constant term vanishes);
/// a certified complex-root pass generates the candidates when the trailing
/// coefficient is too large to factor.
pub fn integer_roots(f: &IntPolynomial) -> BTreeSet<BigInt> {
    assert!(!f.is_zero(), "integer roots of the zero polynomial");
    integer_roots_impl(f, None)
}

/// Integer roots with |x| <= bound.
pub fn integer_roots_within(f: &IntPolynomial, bound: &BigInt) -> BTreeSet<BigInt> {
    assert!(!f.is_zero());
    integer_roots_impl(f, Some(bound))
}

fn integer_roots_impl(f: &IntPolynomial, bound: Option<&BigInt>) -> BTreeSet<BigInt> {
    let mut out = BTreeSet::new();
    let mut g = f.clone();
    // strip powers of X
    let mut had_zero = false;
    while g.degree() > 0 && g.constant().is_zero() {
        had_zero = true;
        let mut coeffs = g.coeffs.clone();
        coeffs.pop();
        g = IntPolynomial::new(coeffs);
    }
    if had_zero {
        out.insert(BigInt::zero());
    }
    if g.degree() == 0 {
        return filter_bound(out, bound);
    }
    if g.degree() == 1 {
        let a = g.leading();
        let b = g.constant();
        let q = -b / a;
        if (a * &q + b).is_zero() {
            out.insert(q);
        }
        return filter_bound(out, bound);
    }
    if g.degree() == 2 {
        let a = g.coeff(2);
        let b = g.coeff(1);
        let c = g.coeff(0);
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        if let Some(s) = is_square_integer(&disc) {
            for sign in [1, -1] {
                let num = -&b + &s * BigInt::from(sign);
                let den = BigInt::from(2) * &a;
                let q = &num / &den;
                if (&den * &q - num).is_zero() {
                    out.insert(q);
                }
            }
        }
        return filter_bound(out, bound);
    }
    let trailing = g.constant();
    let scan_limit = bound.and_then(|b| b.to_u64()).unwrap_or(u64::MAX);
    if scan_limit <= 4096 {
        // small window: test every divisor-compatible candidate directly
        let mut x = -BigInt::from(scan_limit);
        let top = BigInt::from(scan_limit);
        while x <= top {
            if !x.is_zero() && (trailing % &x).is_zero() && g.evaluate(&x).is_zero() {
                out.insert(x.clone());
            }
            x += 1;
        }
        return filter_bound(out, bound);
    }
    if let Some(t) = trailing.abs().to_u64() {
        let cap = crate::roots::root_bound(&g)
            .ok()
            .map(|b| b.ceil())
            .filter(|b| b.is_finite() && *b < u64::MAX as f64)
            .map(|b| b as u64)
            .unwrap_or(u64::MAX)
            .min(scan_limit);
        for d in divisors_up_to(t, cap) {
            for sign in [1i64, -1] {
                let x = BigInt::from(d) * BigInt::from(sign);
                if g.evaluate(&x).is_zero() {
                    out.insert(x);
                }
            }
        }
        return filter_bound(out, bound);
    }
    // trailing coefficient too large to factor: certified root candidates
    if let Ok(rs) = crate::roots::complex_roots(&g, 0.25) {
        let mut seen = BTreeSet::new();
        for cand in rs.integer_candidates() {
            if seen.insert(cand.clone()) && g.evaluate(&cand).is_zero() {
                out.insert(cand);
            }
        }
    }
    filter_bound(out, bound)
}

fn filter_bound(set: BTreeSet<BigInt>, bound: Option<&BigInt>) -> BTreeSet<BigInt> {
    match bound {
        None => set,
        Some(b) => set.into_iter().filter(|x| &x.abs() <= b).collect(),
    }
}

// ---------------------------------------------------------------------------
// factorization over Z (monic, bounded degree)
// ---------------------------------------------------------------------------

/// Multiset of irreducible factor degrees together with the linear-factor
/// indicator.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FactorPattern {
    pub degrees: Vec<usize>,
    pub has_linear: bool,
}

impl FactorPattern {
    fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        let has_linear = degrees.contains(&1);
        FactorPattern { degrees, has_linear }
    }

    pub fn is_irreducible(&self) -> bool {
        self.degrees.len() == 1
    }
}

impl fmt::Display for FactorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Degree multiset of the irreducible factors of a monic f over Q.
pub fn factor_pattern(f: &IntPolynomial) -> Result<FactorPattern, PolyError> {
    factor_pattern_with_limit(f, DEFAULT_MAX_DEGREE)
}

pub fn factor_pattern_with_limit(
    f: &IntPolynomial,
    max_degree: usize,
) -> Result<FactorPattern, PolyError> {
    let factors = factor_with_limit(f, max_degree)?;
    Ok(FactorPattern::from_degrees(
        factors.iter().map(|g| g.degree()).collect(),
    ))
}

/// Full factorization of a monic f into monic irreducible integer factors,
/// with multiplicity. The product of the returned factors is exactly f.
pub fn factor(f: &IntPolynomial) -> Result<Vec<IntPolynomial>, PolyError> {
    factor_with_limit(f, DEFAULT_MAX_DEGREE)
}

pub fn factor_with_limit(
    f: &IntPolynomial,
    max_degree: usize,
) -> Result<Vec<IntPolynomial>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    if f.degree() > max_degree {
        return Err(PolyError::UnsupportedDegree {
            degree: f.degree(),
            max: max_degree,
        });
    }
    let mut factors = Vec::new();
    factor_rec(f.clone(), &mut factors)?;
    factors.sort_by(|a, b| (a.degree(), a.coefficients()).cmp(&(b.degree(), b.coefficients())));
    Ok(factors)
}

fn factor_rec(f: IntPolynomial, out: &mut Vec<IntPolynomial>) -> Result<(), PolyError> {
    if f.degree() == 0 {
        return Ok(());
    }
    let mut h = f;
    // linear factors first: X and X - r for integer roots r
    loop {
        if h.degree() == 0 {
            return Ok(());
        }
        if h.constant().is_zero() {
            out.push(IntPolynomial::from_i64(&[1, 0]));
            let mut coeffs = h.coefficients().to_vec();
            coeffs.pop();
            h = IntPolynomial::new(coeffs);
            continue;
        }
        let roots = integer_roots(&h);
        match roots.iter().next() {
            Some(r) => {
                let lin = IntPolynomial::new(vec![BigInt::one(), -r.clone()]);
                h = h.exact_div(&lin).expect("root divides");
                out.push(lin);
            }
            None => break,
        }
    }
    let d = h.degree();
    if d == 0 {
        return Ok(());
    }
    if d <= 3 {
        // no rational root and degree <= 3 forces irreducibility
        out.push(h);
        return Ok(());
    }
    let disc = discriminant(&h)?;
    if disc.is_zero() {
        // repeated factors: split along gcd(h, h')
        let g = gcd(&h, &h.derivative());
        debug_assert!(g.degree() >= 1 && g.is_monic());
        let q = h.exact_div(&g).expect("gcd divides");
        factor_rec(g, out)?;
        factor_rec(q, out)?;
        return Ok(());
    }
    if d <= 5 {
        if let Some((a, b)) = quadratic_factor_split(&h) {
            factor_rec(a, out)?;
            factor_rec(b, out)?;
            return Ok(());
        }
        out.push(h);
        return Ok(());
    }
    // degree >= 6, squarefree, no integer root
    match split_by_root_subsets(&h)? {
        Some((a, b)) => {
            factor_rec(a, out)?;
            factor_rec(b, out)?;
            Ok(())
        }
        None => {
            out.push(h);
            Ok(())
        }
    }
}

/// Search for a monic quadratic factor of a monic quartic or quintic with
/// nonzero constant term. The candidate constant term divides h(0) and the
/// candidate linear coefficient solves an exact quadratic; every candidate
/// is confirmed by exact division.
fn quadratic_factor_split(h: &IntPolynomial) -> Option<(IntPolynomial, IntPolynomial)> {
    let d = h.degree();
    debug_assert!(d == 4 || d == 5);
    let trailing = h.constant().clone();
    debug_assert!(!trailing.is_zero());
    let t64 = trailing.abs().to_u64()?;
    let divisors = divisors_up_to(t64, t64);
    let a1 = h.coeff(d - 1);
    let a2 = h.coeff(d - 2);
    for &dv in &divisors {
        for sign in [1i64, -1] {
            let c = BigInt::from(dv) * BigInt::from(sign);
            let w = &trailing / &c;
            let candidates: Vec<BigInt> = if d == 4 {
                // b + b' = a1, b b' = a2 - c - c'
                let s = &a2 - &c - &w;
                let disc_b = &a1 * &a1 - BigInt::from(4) * &s;
                match is_square_integer(&disc_b) {
                    None => continue,
                    Some(r) => [1i64, -1]
                        .iter()
                        .filter_map(|&sg| {
                            let num = &a1 + &r * BigInt::from(sg);
                            if num::Integer::is_even(&num) {
                                Some(num / BigInt::from(2))
                            } else {
                                None
                            }
                        })
                        .collect(),
                }
            } else {
                // c b^2 + (w - c a1) b + (c a2 - c^2 - a4) = 0
                let a4 = h.coeff(1);
                let p = &w - &c * &a1;
                let q = &c * &a2 - &c * &c - &a4;
                let disc_b = &p * &p - BigInt::from(4) * &c * &q;
                match is_square_integer(&disc_b) {
                    None => continue,
                    Some(r) => [1i64, -1]
                        .iter()
                        .filter_map(|&sg| {
                            let num = -&p + &r * BigInt::from(sg);
                            let den = BigInt::from(2) * &c;
                            let b = &num / &den;
                            if (&den * &b - num).is_zero() {
                                Some(b)
                            } else {
                                None
                            }
                        })
                        .collect(),
                }
            };
            for b in candidates {
                let quad = IntPolynomial::new(vec![BigInt::one(), b, c.clone()]);
                if let Some(rest) = h.exact_div(&quad) {
                    return Some((quad, rest));
                }
            }
        }
    }
    None
}

/// Split a squarefree monic h (degree >= 6, no integer roots) by searching
/// root subsets: the coefficients of any monic integer factor of degree k
/// are elementary symmetric functions of k roots, so a certified rounding
/// of those symmetric functions enumerates every candidate factor within
/// the Lemma-style coefficient bound. Candidates are confirmed by exact
/// division; mod-p degree patterns only prune, they never decide.
fn split_by_root_subsets(
    h: &IntPolynomial,
) -> Result<Option<(IntPolynomial, IntPolynomial)>, PolyError> {
    let d = h.degree();
    let allowed = crate::modp::possible_proper_factor_degrees(h, 7, 2);
    if allowed.is_empty() {
        return Ok(None);
    }
    let mut target = 0.125f64;
    for _ in 0..4 {
        let rs = match crate::roots::complex_roots(h, target) {
            Ok(rs) => rs,
            Err(_) => break,
        };
        match try_subset_factors(h, &rs, &allowed) {
            SubsetOutcome::Found(a, b) => return Ok(Some((a, b))),
            SubsetOutcome::NoneCertain => return Ok(None),
            SubsetOutcome::NeedPrecision => {
                target *= 1e-12;
            }
        }
    }
    Err(PolyError::PrecisionExhausted { degree: d })
}

enum SubsetOutcome {
    Found(IntPolynomial, IntPolynomial),
    NoneCertain,
    NeedPrecision,
}

fn try_subset_factors(
    h: &IntPolynomial,
    rs: &crate::roots::RootSet,
    allowed: &BTreeSet<usize>,
) -> SubsetOutcome {
    let n = h.degree();
    let ctx = rs.ctx();
    let balls = rs.balls();
    let mut imprecise = false;
    for &k in allowed.iter().filter(|&&k| k <= n / 2) {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            // product of (X - root_i) over the subset, coefficients as balls
            let mut coeffs = vec![ctx.from_int(&BigInt::one())];
            for &i in &subset {
                let root = &balls[i];
                let mut next = vec![ctx.zero(); coeffs.len() + 1];
                for (j, c) in coeffs.iter().enumerate() {
                    next[j] = ctx.add(&next[j], c);
                    let t = ctx.mul(c, root);
                    next[j + 1] = ctx.sub(&next[j + 1], &t);
                }
                coeffs = next;
            }
            let mut int_coeffs = Vec::with_capacity(coeffs.len());
            let mut ok = true;
            for c in &coeffs {
                match ctx.round_real_to_int(c) {
                    Some((v, _)) => int_coeffs.push(v),
                    None => {
                        if ctx.rad_f64(c) >= 0.25 {
                            imprecise = true;
                        }
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let cand = IntPolynomial::new(int_coeffs);
                if cand.degree() == k {
                    if let Some(rest) = h.exact_div(&cand) {
                        return SubsetOutcome::Found(cand, rest);
                    }
                }
            }
            if !next_subset(&mut subset, n) {
                break;
            }
        }
    }
    if imprecise {
        SubsetOutcome::NeedPrecision
    } else {
        SubsetOutcome::NoneCertain
    }
}

fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Upper bound C(d, k) * B^k on the k-th coefficient of a monic degree-d
/// factor, with B the root bound of f.
pub fn factor_coefficient_bound(f: &IntPolynomial, d: usize, k: usize) -> BigInt {
    let b = crate::roots::root_bound(f).unwrap_or(f64::INFINITY);
    let ceil_b = if b.is_finite() {
        BigInt::from(b.ceil() as i64 + 1)
    } else {
        BigInt::one() << 128
    };
    binomial(d as u64, k as u64) * ceil_b.pow(k as u32)
}

pub use crate::arith::is_square_integer as is_square;

/// log2 of the largest coefficient magnitude; used for precision estimates.
pub fn max_coeff_log2(f: &IntPolynomial) -> f64 {
    f.coefficients()
        .iter()
        .map(log2_upper)
        .fold(0.0f64, f64::max)
}
