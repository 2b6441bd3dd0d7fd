//! Dyadic intervals `[lo, hi] · 2^-prec` with outward rounding, and
//! enclosures of `π` and `cos(jπ/m)` at arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Closed interval `[lo · 2^-prec, hi · 2^-prec]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicInterval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub prec: u32,
}

impl DyadicInterval {
    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Re-expresses the interval with fewer fractional bits, rounding
    /// outward.
    pub fn round_to(&self, prec: u32) -> DyadicInterval {
        assert!(prec <= self.prec);
        let shift = self.prec - prec;
        let d = BigInt::one() << shift;
        DyadicInterval {
            lo: self.lo.div_floor(&d),
            hi: ceil_div(&self.hi, &d),
            prec,
        }
    }

    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Encloses `atan(1/x)` at scale `2^p`, alternating series with the first
/// omitted term as tail bound.
fn atan_inverse(x: u64, p: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << p;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = x.clone(); // x^(2k+1)
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let denom = &power * BigInt::from(2 * k + 1);
        let t_lo = one.div_floor(&denom);
        let t_hi = ceil_div(&one, &denom);
        if t_hi <= BigInt::one() && k > 0 {
            // remaining tail is smaller than this term, |tail| <= t_hi
            lo -= &t_hi;
            hi += &t_hi;
            return (lo, hi);
        }
        if k % 2 == 0 {
            lo += &t_lo;
            hi += &t_hi;
        } else {
            lo -= &t_hi;
            hi -= &t_lo;
        }
        power *= &x2;
        k += 1;
    }
}

/// `π` enclosed via `π = 16·atan(1/5) − 4·atan(1/239)`.
pub fn pi(prec: u32) -> DyadicInterval {
    let p = prec + 16;
    let (a_lo, a_hi) = atan_inverse(5, p);
    let (b_lo, b_hi) = atan_inverse(239, p);
    let lo = a_lo * 16 - b_hi * 4;
    let hi = a_hi * 16 - b_lo * 4;
    DyadicInterval { lo, hi, prec: p }.round_to(prec)
}

/// Encloses `cos(jπ/m)` for any integer `j` and `m ≥ 1`.
pub fn cos_pi_fraction(j: i64, m: u64, prec: u32) -> DyadicInterval {
    assert!(m > 0);
    let period = 2 * m as i64;
    let mut j = j.rem_euclid(period);
    if j > m as i64 {
        j = period - j; // cos is even about π
    }
    let j = j as u64;
    let one = BigInt::one() << prec;
    if j == 0 {
        return DyadicInterval {
            lo: one.clone(),
            hi: one,
            prec,
        };
    }
    if 2 * j == m {
        return DyadicInterval {
            lo: BigInt::zero(),
            hi: BigInt::zero(),
            prec,
        };
    }
    if j == m {
        return DyadicInterval {
            lo: -one.clone(),
            hi: -one,
            prec,
        };
    }

    let p = prec + 32;
    let pi = pi(p);
    // θ = jπ/m ∈ (0, π)
    let theta_lo = (&pi.lo * BigInt::from(j)).div_floor(&BigInt::from(m));
    let theta_hi = ceil_div(&(&pi.hi * BigInt::from(j)), &BigInt::from(m));
    let scale = BigInt::one() << p;
    let sq_lo = (&theta_lo * &theta_lo) >> p;
    let sq_hi = ceil_div(&(&theta_hi * &theta_hi), &scale);

    // t_k = θ^{2k}/(2k)!, as an interval; Taylor remainder after the
    // t_N term is bounded by t_{N+1}.
    let mut t_lo = scale.clone();
    let mut t_hi = scale.clone();
    let mut sum_lo = scale.clone();
    let mut sum_hi = scale.clone();
    let mut k: u64 = 1;
    loop {
        let d = BigInt::from((2 * k - 1) * (2 * k));
        t_lo = (&t_lo * &sq_lo).div_floor(&(&d * &scale));
        t_hi = ceil_div(&(&t_hi * &sq_hi), &(&d * &scale));
        if t_hi <= BigInt::one() {
            sum_lo -= &t_hi;
            sum_hi += &t_hi;
            break;
        }
        if k % 2 == 1 {
            sum_lo -= &t_hi;
            sum_hi -= &t_lo;
        } else {
            sum_lo += &t_lo;
            sum_hi += &t_hi;
        }
        k += 1;
    }
    DyadicInterval {
        lo: sum_lo,
        hi: sum_hi,
        prec: p,
    }
    .round_to(prec)
}
