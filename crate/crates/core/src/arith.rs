//! Shared exact-integer helpers: square detection, binomials, prime
//! generation, and small-integer factorization for divisor enumeration.

use num::bigint::Sign;
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Exact integer square root test. Returns `s` with `s * s == d` when `d`
/// is a perfect square, `None` otherwise (in particular for negative `d`).
pub fn is_square_integer(d: &BigInt) -> Option<BigInt> {
    if d.is_negative() {
        return None;
    }
    if d.is_zero() {
        return Some(BigInt::zero());
    }
    // cheap residue filter before the full isqrt
    let m16 = (d & BigInt::from(15u8)).to_u8().unwrap_or(0);
    if ![0u8, 1, 4, 9].contains(&m16) {
        return None;
    }
    let s = d.sqrt();
    if &(&s * &s) == d {
        Some(s)
    } else {
        None
    }
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

/// Floor of x / 2^k for signed big integers.
pub fn shr_floor(x: &BigInt, k: u32) -> BigInt {
    match x.sign() {
        Sign::Minus => {
            let mask = (BigInt::one() << k) - 1u8;
            -((-x + mask) >> k)
        }
        _ => x >> k,
    }
}

/// Ceiling of x / 2^k for signed big integers.
pub fn shr_ceil(x: &BigInt, k: u32) -> BigInt {
    -shr_floor(&-x, k)
}

/// Nearest integer to x / 2^k, ties rounded up.
pub fn shr_round(x: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return x.clone();
    }
    shr_floor(&(x + (BigInt::one() << (k - 1))), k)
}

/// log2 of |x| as an f64 with a small upward bias; -inf for zero.
pub fn log2_upper(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 52 {
        let v = x.magnitude().to_f64().unwrap_or(f64::MAX);
        return v.log2() + 1e-12;
    }
    // top 52 bits plus exponent
    let shift = bits - 52;
    let top = x.magnitude() >> shift;
    let v = top.to_f64().unwrap_or(f64::MAX);
    (v + 1.0).log2() + shift as f64
}

// ---------------------------------------------------------------------------
// primes
// ---------------------------------------------------------------------------

static SMALL_PRIMES: std::sync::OnceLock<Vec<u64>> = std::sync::OnceLock::new();

fn small_primes() -> &'static [u64] {
    SMALL_PRIMES.get_or_init(|| {
        let limit = 1usize << 20;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i as u64);
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Prime stream backed by a shared sieve table, with a trial-division tail
/// for the rare caller that walks past it.
pub struct Primes {
    next_index: usize,
    beyond: u64,
}

impl Primes {
    pub fn new() -> Self {
        Primes {
            next_index: 0,
            beyond: 0,
        }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let table = small_primes();
        if self.next_index < table.len() {
            let p = table[self.next_index];
            self.next_index += 1;
            return Some(p);
        }
        let mut candidate = if self.beyond == 0 {
            table.last().unwrap() + 2
        } else {
            self.beyond + 2
        };
        while !is_prime_u64(candidate) {
            candidate += 2;
        }
        self.beyond = candidate;
        Some(candidate)
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

// ---------------------------------------------------------------------------
// u64 factorization (Miller-Rabin + Brent's rho)
// ---------------------------------------------------------------------------

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64) -> u64 {
    // Brent's cycle variant with a deterministic offset schedule
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod_u64(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
            count += 1;
            if count > 1 << 22 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Full factorization of a positive u64.
pub fn factor_u64(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = rho_u64(m);
        stack.push(d);
        stack.push(m / d);
    }
    out
}

/// All positive divisors of `n` that are at most `bound`, sorted ascending.
pub fn divisors_up_to(n: u64, bound: u64) -> Vec<u64> {
    let factors = factor_u64(n);
    let mut divs = vec![1u64];
    for (&p, &e) in &factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for &d in &divs {
            let mut pk = 1u64;
            for _ in 0..=e {
                if let Some(v) = d.checked_mul(pk) {
                    if v <= bound {
                        next.push(v);
                    }
                }
                pk = match pk.checked_mul(p) {
                    Some(v) => v,
                    None => break,
                };
            }
        }
        next.sort_unstable();
        next.dedup();
        divs = next;
    }
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_detection() {
        assert_eq!(is_square_integer(&BigInt::from(81)), Some(BigInt::from(9)));
        assert_eq!(is_square_integer(&BigInt::from(-4)), None);
        assert_eq!(is_square_integer(&BigInt::from(229)), None);
        assert_eq!(is_square_integer(&BigInt::from(0)), Some(BigInt::zero()));
        let big = BigInt::from(123456789u64) * BigInt::from(123456789u64);
        assert_eq!(is_square_integer(&big), Some(BigInt::from(123456789u64)));
        assert_eq!(is_square_integer(&(big + 1)), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 4), BigInt::from(126));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(24, 12), BigInt::from(2704156u64));
        assert_eq!(binomial(4, 7), BigInt::zero());
    }

    #[test]
    fn shifts_round_as_specified() {
        assert_eq!(shr_floor(&BigInt::from(-5), 1), BigInt::from(-3));
        assert_eq!(shr_floor(&BigInt::from(5), 1), BigInt::from(2));
        assert_eq!(shr_ceil(&BigInt::from(5), 1), BigInt::from(3));
        assert_eq!(shr_ceil(&BigInt::from(-5), 1), BigInt::from(-2));
        assert_eq!(shr_round(&BigInt::from(5), 2), BigInt::from(1));
        assert_eq!(shr_round(&BigInt::from(6), 2), BigInt::from(2));
        assert_eq!(shr_round(&BigInt::from(-6), 2), BigInt::from(-1));
    }

    #[test]
    fn primes_stream() {
        let ps: Vec<u64> = Primes::new().take(10).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn factorization_roundtrip() {
        for n in [2u64, 97, 1 << 20, 600851475143, 999999999989, 1234567890123456789] {
            let f = factor_u64(n);
            let back: u64 = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(back, n);
            for (p, _) in f {
                assert!(is_prime_u64(p));
            }
        }
    }

    #[test]
    fn bounded_divisors() {
        assert_eq!(divisors_up_to(12, 12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors_up_to(12, 4), vec![1, 2, 3, 4]);
        assert_eq!(divisors_up_to(1, 10), vec![1]);
    }

    #[test]
    fn log2_estimates() {
        assert!((log2_upper(&BigInt::from(1024)) - 10.0).abs() < 1e-6);
        let big = BigInt::one() << 1000;
        assert!((log2_upper(&big) - 1000.0).abs() < 1e-6);
        assert!(log2_upper(&big) >= 1000.0);
    }
}
