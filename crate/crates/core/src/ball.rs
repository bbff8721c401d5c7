//! Fixed-point complex ball arithmetic.
//!
//! Values are midpoint-radius balls whose components are big integers at a
//! common binary scale: a mantissa `m` at precision `p` denotes `m / 2^p`.
//! Every operation rounds the midpoint deterministically and widens the
//! radius by a rigorous bound on the rounding, so the true value of any
//! expression stays inside the result ball. This is what lets the resolvent
//! coefficients be rounded to integers with a certificate instead of a
//! heuristic tolerance.

use crate::arith::{shr_ceil, shr_round};
use num::{BigInt, One, Signed, ToPrimitive, Zero};

/// Operation context fixing the working precision in bits.
#[derive(Clone, Copy, Debug)]
pub struct BallCtx {
    pub prec: u32,
}

/// Complex ball: midpoint `(re + im*i) / 2^prec`, radius `rad / 2^prec`.
#[derive(Clone, Debug)]
pub struct CBall {
    pub re: BigInt,
    pub im: BigInt,
    pub rad: BigInt,
}

impl BallCtx {
    pub fn new(prec: u32) -> Self {
        BallCtx { prec }
    }

    pub fn zero(&self) -> CBall {
        CBall {
            re: BigInt::zero(),
            im: BigInt::zero(),
            rad: BigInt::zero(),
        }
    }

    pub fn from_int(&self, v: &BigInt) -> CBall {
        CBall {
            re: v << self.prec,
            im: BigInt::zero(),
            rad: BigInt::zero(),
        }
    }

    /// Exact dyadic midpoint with an explicit radius in units of 2^-prec.
    pub fn from_parts(&self, re: BigInt, im: BigInt, rad: BigInt) -> CBall {
        debug_assert!(!rad.is_negative());
        CBall { re, im, rad }
    }

    pub fn add(&self, a: &CBall, b: &CBall) -> CBall {
        CBall {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
            rad: &a.rad + &b.rad,
        }
    }

    pub fn sub(&self, a: &CBall, b: &CBall) -> CBall {
        CBall {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
            rad: &a.rad + &b.rad,
        }
    }

    pub fn neg(&self, a: &CBall) -> CBall {
        CBall {
            re: -&a.re,
            im: -&a.im,
            rad: a.rad.clone(),
        }
    }

    /// Upper bound on the midpoint modulus, in scale units.
    /// Uses 182/128 >= sqrt(2) so no integer square root is needed.
    pub fn mod_upper(&self, a: &CBall) -> BigInt {
        let m = a.re.abs().max(a.im.abs());
        ((m * 182u32) >> 7u32) + 1u32
    }

    /// Lower bound on the modulus of every point of the ball.
    pub fn mod_lower(&self, a: &CBall) -> BigInt {
        let m = a.re.abs().max(a.im.abs());
        let lo = m - &a.rad;
        if lo.is_negative() {
            BigInt::zero()
        } else {
            lo
        }
    }

    pub fn mul(&self, a: &CBall, b: &CBall) -> CBall {
        let p = self.prec;
        let re = shr_round(&(&a.re * &b.re - &a.im * &b.im), p);
        let im = shr_round(&(&a.re * &b.im + &a.im * &b.re), p);
        let ma = self.mod_upper(a);
        let mb = self.mod_upper(b);
        // |mid_a||rad_b| + |mid_b||rad_a| + rad_a rad_b, plus rounding ulps
        let cross = &ma * &b.rad + &mb * &a.rad + &a.rad * &b.rad;
        let rad = shr_ceil(&cross, p) + 2u32;
        CBall { re, im, rad }
    }

    /// Multiply by an exact integer (no rescaling, no rounding).
    pub fn mul_int(&self, a: &CBall, k: &BigInt) -> CBall {
        CBall {
            re: &a.re * k,
            im: &a.im * k,
            rad: &a.rad * k.abs(),
        }
    }

    pub fn add_int(&self, a: &CBall, k: &BigInt) -> CBall {
        CBall {
            re: &a.re + (k << self.prec),
            im: a.im.clone(),
            rad: a.rad.clone(),
        }
    }

    /// k-th power by repeated multiplication (k small).
    pub fn pow(&self, a: &CBall, k: u32) -> CBall {
        let mut acc = self.from_int(&BigInt::one());
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Attempt to round a ball known to contain one real value to an
    /// integer. Succeeds when the radius and the distance from midpoint to
    /// the nearest integer are both below 1/4, and the imaginary part is
    /// consistent with a real value.
    pub fn round_real_to_int(&self, a: &CBall) -> Option<(BigInt, f64)> {
        let quarter = BigInt::one() << (self.prec - 2);
        if a.rad >= quarter {
            return None;
        }
        if a.im.abs() > a.rad {
            return None;
        }
        let q = shr_round(&a.re, self.prec);
        let margin_num = (&a.re - (&q << self.prec)).abs();
        if margin_num >= quarter {
            return None;
        }
        let margin = self.to_f64_mag(&margin_num);
        Some((q, margin))
    }

    /// Mantissa magnitude as f64 at this scale, rounded up a little.
    pub fn to_f64_mag(&self, m: &BigInt) -> f64 {
        let bits = m.bits() as i64;
        if bits == 0 {
            return 0.0;
        }
        if bits <= 53 {
            let v = m.magnitude().to_f64().unwrap_or(f64::MAX);
            return v * (-(self.prec as f64)).exp2() * (1.0 + 1e-12);
        }
        let shift = (bits - 53) as u64;
        let top = (m.magnitude() >> shift).to_f64().unwrap_or(f64::MAX) + 1.0;
        top * ((shift as f64) - self.prec as f64).exp2()
    }

    pub fn re_f64(&self, a: &CBall) -> f64 {
        let s = if a.re.is_negative() { -1.0 } else { 1.0 };
        s * self.to_f64_mag(&a.re)
    }

    pub fn im_f64(&self, a: &CBall) -> f64 {
        let s = if a.im.is_negative() { -1.0 } else { 1.0 };
        s * self.to_f64_mag(&a.im)
    }

    pub fn rad_f64(&self, a: &CBall) -> f64 {
        self.to_f64_mag(&a.rad)
    }

    /// Rescale a ball to a context with different precision.
    pub fn rescale(&self, a: &CBall, to: &BallCtx) -> CBall {
        if to.prec == self.prec {
            return a.clone();
        }
        if to.prec > self.prec {
            let k = to.prec - self.prec;
            CBall {
                re: &a.re << k,
                im: &a.im << k,
                rad: &a.rad << k,
            }
        } else {
            let k = self.prec - to.prec;
            CBall {
                re: shr_round(&a.re, k),
                im: shr_round(&a.im, k),
                rad: shr_ceil(&a.rad, k) + 1u32,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> BallCtx {
        BallCtx::new(64)
    }

    #[test]
    fn exact_integer_roundtrip() {
        let c = ctx();
        let b = c.from_int(&BigInt::from(-7));
        let (v, margin) = c.round_real_to_int(&b).unwrap();
        assert_eq!(v, BigInt::from(-7));
        assert_eq!(margin, 0.0);
    }

    #[test]
    fn product_contains_true_value() {
        let c = ctx();
        // (3 + 4i)(1 - 2i) = 11 - 2i
        let a = CBall {
            re: BigInt::from(3) << 64,
            im: BigInt::from(4) << 64,
            rad: BigInt::from(5),
        };
        let b = CBall {
            re: BigInt::one() << 64,
            im: BigInt::from(-2) << 64,
            rad: BigInt::from(3),
        };
        let p = c.mul(&a, &b);
        assert!((c.re_f64(&p) - 11.0).abs() < 1e-12);
        assert!((c.im_f64(&p) + 2.0).abs() < 1e-12);
        assert!(p.rad > BigInt::zero());
        // radius accounts for input radii scaled by the peer modulus
        let expected_min = BigInt::from(5) * 2 + BigInt::from(3) * 5;
        assert!(p.rad >= expected_min);
    }

    #[test]
    fn rounding_rejects_wide_balls() {
        let c = ctx();
        let wide = CBall {
            re: BigInt::from(3) << 64,
            im: BigInt::zero(),
            rad: BigInt::one() << 63,
        };
        assert!(c.round_real_to_int(&wide).is_none());
    }

    #[test]
    fn rounding_rejects_midpoints_far_from_integers() {
        let c = ctx();
        let half = CBall {
            re: (BigInt::from(3) << 64) + (BigInt::one() << 63),
            im: BigInt::zero(),
            rad: BigInt::one(),
        };
        assert!(c.round_real_to_int(&half).is_none());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let c = ctx();
        let a = CBall {
            re: BigInt::from(2) << 64,
            im: BigInt::one() << 64,
            rad: BigInt::zero(),
        };
        let p3 = c.pow(&a, 3);
        // (2+i)^3 = 2 + 11i
        assert!((c.re_f64(&p3) - 2.0).abs() < 1e-10);
        assert!((c.im_f64(&p3) - 11.0).abs() < 1e-10);
    }

    #[test]
    fn rescale_preserves_value() {
        let c = ctx();
        let a = CBall {
            re: BigInt::from(12345) << 64,
            im: BigInt::from(-9) << 64,
            rad: BigInt::from(100),
        };
        let c2 = BallCtx::new(128);
        let up = c.rescale(&a, &c2);
        assert!((c2.re_f64(&up) - 12345.0).abs() < 1e-9);
        let down = c2.rescale(&up, &c);
        assert!((c.re_f64(&down) - 12345.0).abs() < 1e-9);
        assert!(down.rad >= a.rad);
    }
}
