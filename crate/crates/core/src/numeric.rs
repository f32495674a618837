//! Conversions between exact counts and the log domain.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `log2(x)`, accurate to double precision for arbitrarily large `x`;
/// `-inf` for zero.
pub fn log2_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite below 2^1000").log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.log2() + shift as f64
}

/// `log_q(x)` for an exact count.
pub fn logq_big(x: &BigUint, q: u64) -> f64 {
    log2_big(x) / (q as f64).log2()
}

/// `q^e` as an exact integer.
pub fn pow_big(q: u64, e: u64) -> BigUint {
    if e == 0 {
        return BigUint::one();
    }
    if q.is_power_of_two() {
        return BigUint::one() << (e * u64::from(q.trailing_zeros()));
    }
    BigUint::from(q).pow(u32::try_from(e).expect("exponent fits u32"))
}

/// `num / den` rounded to double precision.
pub fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    assert!(!den.is_zero(), "division by zero");
    if num.is_zero() {
        return 0.0;
    }
    // scale so the integer quotient carries 64 significant bits
    let shift = 64 + den.bits() as i64 - num.bits() as i64;
    let quot = if shift >= 0 { (num << shift as u64) / den } else { num / (den << (-shift) as u64) };
    let q = quot.to_f64().expect("quotient fits f64");
    q * 2f64.powi(-(shift as i32))
}
