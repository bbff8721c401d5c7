//! Dense univariate polynomial arithmetic over F_p for small p, and
//! distinct-degree factorization. This supplies the factor-degree pattern
//! of f mod p, which for unramified p is the cycle type of a Frobenius
//! element of the Galois group.

use crate::arith::Primes;
use crate::poly::{discriminant, IntPolynomial};
use num::{BigInt, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// Coefficients ascending, all reduced mod p, trailing zeros trimmed.
type ModPoly = Vec<u64>;

fn trim(mut f: ModPoly) -> ModPoly {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

fn deg(f: &ModPoly) -> usize {
    f.len() - 1
}

fn is_zero(f: &ModPoly) -> bool {
    f.len() == 1 && f[0] == 0
}

fn reduce_bigint(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().unwrap()
}

/// f reduced mod p, ascending coefficients.
fn to_mod_poly(f: &IntPolynomial, p: u64) -> ModPoly {
    let n = f.degree();
    let mut out = vec![0u64; n + 1];
    for (i, c) in f.coefficients().iter().enumerate() {
        out[n - i] = reduce_bigint(c, p);
    }
    trim(out)
}

fn mul_mod(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    if is_zero(a) || is_zero(b) {
        return vec![0];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Remainder of a modulo monic-normalized b.
fn rem_mod(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let db = deg(b);
    if is_zero(a) || deg(a) < db {
        return a.clone();
    }
    let lead_inv = inv_mod(b[db], p);
    let mut r = a.clone();
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let q = c * lead_inv % p;
        r[i] = 0;
        for j in 0..db {
            let idx = i - db + j;
            r[idx] = (r[idx] + p * p - q * b[j] % p) % p;
        }
    }
    trim(r)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p prime, a != 0 mod p
    pow_mod_u64(a % p, p - 2, p)
}

fn pow_mod_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn gcd_mod(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !is_zero(&y) {
        let r = rem_mod(&x, &y, p);
        x = y;
        y = r;
    }
    if !is_zero(&x) {
        // normalize monic
        let inv = inv_mod(*x.last().unwrap(), p);
        for c in x.iter_mut() {
            *c = *c * inv % p;
        }
    }
    x
}

fn div_exact_mod(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let db = deg(b);
    let lead_inv = inv_mod(b[db], p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let qc = c * lead_inv % p;
        q[i - db] = qc;
        r[i] = 0;
        for j in 0..db {
            let idx = i - db + j;
            r[idx] = (r[idx] + p * p - qc * b[j] % p) % p;
        }
    }
    debug_assert!(is_zero(&trim(r)));
    trim(q)
}

/// x^p modulo g by square-and-multiply on the polynomial value.
fn frobenius_step(w: &ModPoly, g: &ModPoly, p: u64) -> ModPoly {
    let mut acc = vec![1u64];
    let mut base = w.clone();
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = rem_mod(&mul_mod(&acc, &base, p), g, p);
        }
        base = rem_mod(&mul_mod(&base, &base, p), g, p);
        e >>= 1;
    }
    acc
}

/// Degrees of the irreducible factors of a squarefree f mod p, as a
/// partition sorted descending.
pub fn distinct_degree_pattern(f: &IntPolynomial, p: u64) -> Vec<usize> {
    let fbar = to_mod_poly(f, p);
    debug_assert!(deg(&fbar) == f.degree(), "leading coefficient vanished mod p");
    let mut g = fbar;
    let mut pattern = Vec::new();
    // w tracks X^{p^d} mod g
    let x: ModPoly = vec![0, 1];
    let mut w = rem_mod(&x, &g, p);
    let mut d = 0usize;
    while deg(&g) > 0 {
        d += 1;
        if 2 * d > deg(&g) {
            pattern.push(deg(&g));
            break;
        }
        w = frobenius_step(&w, &g, p);
        // gcd(w - X, g) collects the degree-d part
        let mut diff = w.clone();
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        let diff = trim(diff);
        let h = gcd_mod(&diff, &g, p);
        if deg(&h) > 0 {
            let k = deg(&h) / d;
            for _ in 0..k {
                pattern.push(d);
            }
            g = div_exact_mod(&g, &h, p);
            w = rem_mod(&w, &g, p);
        }
    }
    pattern.sort_unstable_by(|a, b| b.cmp(a));
    pattern
}

/// Resultant of f and g modulo p via the Euclidean remainder sequence with
/// leading-coefficient bookkeeping.
pub fn resultant_mod_p(f: &IntPolynomial, g: &IntPolynomial, p: u64) -> u64 {
    let a = to_mod_poly(f, p);
    let b = to_mod_poly(g, p);
    resultant_mod(a, b, p)
}

fn resultant_mod(mut a: ModPoly, mut b: ModPoly, p: u64) -> u64 {
    if is_zero(&a) || is_zero(&b) {
        return 0;
    }
    let mut acc = 1u64;
    let mut neg = false;
    loop {
        if deg(&b) == 0 {
            acc = acc * pow_mod_u64(b[0], deg(&a) as u64, p) % p;
            break;
        }
        if deg(&a) < deg(&b) {
            if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
                neg = !neg;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = rem_mod(&a, &b, p);
        if is_zero(&r) {
            return 0;
        }
        // Res(a, b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * Res(b, r)
        acc = acc * pow_mod_u64(*b.last().unwrap(), (deg(&a) - deg(&r)) as u64, p) % p;
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            neg = !neg;
        }
        a = b;
        b = r;
    }
    if neg {
        (p - acc) % p
    } else {
        acc
    }
}

/// Exact test for disc(f) = 0 that avoids big-integer resultants: the
/// discriminant is certified nonzero by any prime where it does not vanish,
/// and certified zero once the product of tested primes exceeds the
/// Hadamard bound on the resultant.
pub fn discriminant_is_zero(f: &IntPolynomial) -> bool {
    let n = f.degree();
    if n <= 1 {
        return false;
    }
    let df = f.derivative();
    // log2 Hadamard bound for the Sylvester determinant of (f, f')
    let max_f = crate::poly::max_coeff_log2(f);
    let max_df = crate::poly::max_coeff_log2(&df);
    let rows = (2 * n - 1) as f64;
    let bound_log2 = (n as f64 - 1.0) * (max_f + ((n + 1) as f64).log2() / 2.0)
        + n as f64 * (max_df + (n as f64).log2() / 2.0)
        + rows.log2()
        + 4.0;
    let mut covered = 0f64;
    for p in Primes::new() {
        if (f.leading() % BigInt::from(p)).is_zero() {
            continue;
        }
        if (df.leading() % BigInt::from(p)).is_zero() {
            continue;
        }
        if resultant_mod_p(f, &df, p) != 0 {
            return false;
        }
        covered += (p as f64).log2();
        if covered > bound_log2 {
            return true;
        }
    }
    unreachable!("prime stream is infinite")
}

/// Subset sums of a partition, intersected into `allowed`. Keeps only the
/// degrees that remain achievable as a factor degree given this pattern.
pub fn restrict_by_pattern(allowed: &mut BTreeSet<usize>, pattern: &[usize]) {
    let total: usize = pattern.iter().sum();
    let mut achievable = vec![false; total + 1];
    achievable[0] = true;
    for &part in pattern {
        for s in (0..=(total - part)).rev() {
            if achievable[s] {
                achievable[s + part] = true;
            }
        }
    }
    allowed.retain(|&d| d <= total && achievable[d]);
}

/// Proper factor degrees still possible for f after sampling degree patterns
/// modulo `prime_count` unramified primes. Starts from
/// {min_degree, ..., deg f - min_degree}. An empty result certifies
/// irreducibility (given that factors below min_degree are excluded by the
/// caller); a nonempty result decides nothing.
pub fn possible_proper_factor_degrees(
    f: &IntPolynomial,
    prime_count: usize,
    min_degree: usize,
) -> BTreeSet<usize> {
    let n = f.degree();
    let mut allowed: BTreeSet<usize> = (min_degree..=(n.saturating_sub(min_degree))).collect();
    if allowed.is_empty() {
        return allowed;
    }
    let disc = match discriminant(f) {
        Ok(d) => d,
        Err(_) => return allowed,
    };
    if disc.is_zero() {
        return allowed;
    }
    let mut used = 0usize;
    for p in Primes::new() {
        if used >= prime_count || allowed.is_empty() {
            break;
        }
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        if (f.leading() % BigInt::from(p)).is_zero() {
            continue;
        }
        let pattern = distinct_degree_pattern(f, p);
        restrict_by_pattern(&mut allowed, &pattern);
        used += 1;
    }
    allowed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPolynomial;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    #[test]
    fn quadratic_patterns() {
        // X^2 + 1 factors as (X-2)(X+2) mod 5, stays irreducible mod 3
        let f = poly(&[1, 0, 1]);
        assert_eq!(distinct_degree_pattern(&f, 5), vec![1, 1]);
        assert_eq!(distinct_degree_pattern(&f, 3), vec![2]);
    }

    #[test]
    fn split_cubic_pattern() {
        // (X-1)(X-2)(X-3) mod 7
        let f = poly(&[1, -6, 11, -6]);
        assert_eq!(distinct_degree_pattern(&f, 7), vec![1, 1, 1]);
    }

    #[test]
    fn pattern_degrees_sum_to_degree() {
        let f = poly(&[1, 2, -1, 3, 5, -2, 1]);
        for p in [5u64, 11, 13, 17, 101] {
            let disc = discriminant(&f).unwrap();
            if (&disc % BigInt::from(p)).is_zero() {
                continue;
            }
            let pat = distinct_degree_pattern(&f, p);
            assert_eq!(pat.iter().sum::<usize>(), f.degree(), "p = {}", p);
        }
    }

    #[test]
    fn pattern_matches_exact_factorization() {
        // f = (X^2+1)(X-3): mod p the degree multiset refines {2,1} or {1,1,1}
        let f = poly(&[1, 0, 1]).mul(&poly(&[1, -3]));
        for p in [7u64, 11, 13, 19, 23] {
            let pat = distinct_degree_pattern(&f, p);
            assert_eq!(pat.iter().sum::<usize>(), 3);
            // -1 is a square mod p iff p = 1 mod 4
            if p % 4 == 1 {
                assert_eq!(pat, vec![1, 1, 1], "p = {}", p);
            } else {
                assert_eq!(pat, vec![2, 1], "p = {}", p);
            }
        }
    }

    #[test]
    fn subset_sum_restriction() {
        let mut allowed: BTreeSet<usize> = (2..=8).collect();
        restrict_by_pattern(&mut allowed, &[7, 3]);
        let expect: BTreeSet<usize> = [3, 7].into_iter().collect();
        assert_eq!(allowed, expect);
        restrict_by_pattern(&mut allowed, &[5, 5]);
        assert!(allowed.is_empty());
    }

    #[test]
    fn mod_p_resultant_matches_exact_resultant() {
        let mut state = 123u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(99);
            ((state >> 33) % 19) as i64 - 9
        };
        for _ in 0..100 {
            let da = 1 + (rnd().unsigned_abs() as usize % 4);
            let db = 1 + (rnd().unsigned_abs() as usize % 4);
            let a = poly(&(0..=da).map(|_| rnd()).collect::<Vec<_>>());
            let b = poly(&(0..=db).map(|_| rnd()).collect::<Vec<_>>());
            if a.is_zero() || b.is_zero() || a.degree() == 0 || b.degree() == 0 {
                continue;
            }
            let exact = crate::poly::resultant(&a, &b);
            for p in [101u64, 1009, 65537] {
                if (a.leading() % BigInt::from(p)).is_zero()
                    || (b.leading() % BigInt::from(p)).is_zero()
                {
                    continue;
                }
                let reduced = super::reduce_bigint(&exact, p);
                assert_eq!(
                    resultant_mod_p(&a, &b, p),
                    reduced,
                    "a = {}, b = {}, p = {}",
                    a,
                    b,
                    p
                );
            }
        }
    }

    #[test]
    fn discriminant_zero_detection() {
        let f = poly(&[1, -1]).mul(&poly(&[1, -1])).mul(&poly(&[1, 5]));
        assert!(discriminant_is_zero(&f));
        assert!(!discriminant_is_zero(&poly(&[1, 0, -3, 1])));
        // big-coefficient squarefree polynomial
        let g = poly(&[1, 0, 0, 0, 0, -1, -1]);
        assert!(!discriminant_is_zero(&g));
    }

    #[test]
    fn sieve_certifies_known_irreducible() {
        // X^10 - X - 1 is irreducible; a few patterns should rule factors out
        let mut cs = vec![0i64; 11];
        cs[0] = 1;
        cs[9] = -1;
        cs[10] = -1;
        let f = poly(&cs);
        let allowed = possible_proper_factor_degrees(&f, 12, 1);
        assert!(allowed.is_empty(), "still allowed: {:?}", allowed);
    }
}
