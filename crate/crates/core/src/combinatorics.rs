//! Exact counting primitives: binomials, Gaussian binomials, rank-`t` matrix
//! counts, bounded ordered partitions, and the constant `γ_q`.
//!
//! Everything here is exact big-integer arithmetic except [`gamma_q`] and the
//! `*_logq` helpers, which return real numbers interpreted as `log_q` of a
//! positive quantity.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::numeric::pow_big;

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// A real number read as `log_q` of a positive quantity.
pub type LogQValue = f64;

/// Ordered partition `(t_1, …, t_ℓ)` with bounded summands.
pub type PartitionVec = Vec<u32>;

/// Number of product terms used by [`GammaQ::new`] unless told otherwise.
pub const DEFAULT_GAMMA_TERMS: u32 = 64;

/// `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from((n - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// Gaussian binomial `[n, k]_q`; zero when `k < 0` or `k > n`.
///
/// Uses `Π_{i<k} (q^{n-i} − 1)/(q^{i+1} − 1)`; every partial product is itself
/// a Gaussian binomial, so each division is exact.
pub fn q_binomial(n: i64, k: i64, q: u64) -> BigCount {
    if k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= pow_big(q, (n - i) as u64) - 1u32;
        acc /= pow_big(q, (i + 1) as u64) - 1u32;
    }
    acc
}

/// Number of `m × n` matrices over `F_q` of rank `t`:
/// `[n, t]_q · Π_{i<t} (q^m − q^i)`. Zero when `t > min(n, m)`.
pub fn nm_count(n: u64, m: u64, t: u64, q: u64) -> BigCount {
    if t > n.min(m) {
        return BigUint::zero();
    }
    let qm = pow_big(q, m);
    (0..t).fold(q_binomial(n as i64, t as i64, q), |acc, i| acc * (&qm - pow_big(q, i)))
}

/// `(m + n − t)·t − log_q γ_q`, a lower bound on `log_q NM_q(n, m, t)`.
pub fn nm_lower_bound_logq(n: u64, m: u64, t: u64, q: u64) -> LogQValue {
    let t = t as f64;
    (m as f64 + n as f64 - t) * t - GammaQ::new(q).log_q()
}

/// `|{(t_1..t_ℓ) : Σ t_i = t, 0 ≤ t_i ≤ μ}|` by inclusion–exclusion:
/// `Σ_i (−1)^i C(ℓ, i) C(t + ℓ − 1 − (μ+1) i, ℓ − 1)`.
pub fn partition_count(t: u64, ell: u64, mu: u64) -> BigCount {
    if ell == 0 {
        return if t == 0 { BigUint::one() } else { BigUint::zero() };
    }
    let (t, ell, mu) = (t as i64, ell as i64, mu as i64);
    let mut acc = BigInt::zero();
    for i in 0..=ell {
        let top = t + ell - 1 - (mu + 1) * i;
        if top < 0 {
            break;
        }
        let term = BigInt::from_biguint(Sign::Plus, binomial(ell, i) * binomial(top, ell - 1));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().expect("inclusion-exclusion count is nonnegative")
}

/// Iterates ordered partitions of `t` into `ℓ` summands in `0..=μ`, in
/// lexicographic order.
pub fn partitions_iter(t: u32, ell: u32, mu: u32) -> Partitions {
    let feasible = u64::from(t) <= u64::from(ell) * u64::from(mu) && (ell > 0 || t == 0);
    let current = feasible.then(|| {
        let mut v = vec![0; ell as usize];
        fill_suffix_min(&mut v, 0, t, mu);
        v
    });
    Partitions { mu, current }
}

/// Writes the lexicographically smallest arrangement of `sum` into
/// `v[from..]`: pack the largest summands at the end.
fn fill_suffix_min(v: &mut [u32], from: usize, mut sum: u32, mu: u32) {
    for slot in v[from..].iter_mut().rev() {
        let take = sum.min(mu);
        *slot = take;
        sum -= take;
    }
    debug_assert_eq!(sum, 0);
}

#[derive(Debug, Clone)]
pub struct Partitions {
    mu: u32,
    current: Option<PartitionVec>,
}

impl Iterator for Partitions {
    type Item = PartitionVec;

    fn next(&mut self) -> Option<PartitionVec> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut suffix = 0u32;
        for i in (0..next.len()).rev() {
            if suffix > 0 && next[i] < self.mu {
                next[i] += 1;
                fill_suffix_min(&mut next, i + 1, suffix - 1, self.mu);
                self.current = Some(next);
                break;
            }
            suffix += next[i];
        }
        Some(out)
    }
}

/// `γ_q = Π_{i≥1} (1 − q^{-i})^{-1}`, truncated after `truncation_terms` factors.
///
/// The omitted tail multiplies the value by at most
/// `exp(q^{-terms} · q/(q−1))`, since `−ln(1−x) ≤ x/(1−x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaQ {
    pub q: u64,
    pub value: f64,
    pub truncation_terms: u32,
    ln_value: f64,
}

impl GammaQ {
    pub fn new(q: u64) -> Self {
        gamma_q(q, DEFAULT_GAMMA_TERMS)
    }

    /// `log_q γ_q`.
    pub fn log_q(&self) -> LogQValue {
        self.ln_value / (self.q as f64).ln()
    }

    /// Relative truncation error bound `exp(q^{-terms}·q/(q−1)) − 1`.
    pub fn truncation_error_bound(&self) -> f64 {
        let q = self.q as f64;
        (q.powi(-(self.truncation_terms as i32)) * q / (q - 1.0)).exp_m1()
    }
}

pub fn gamma_q(q: u64, terms: u32) -> GammaQ {
    assert!(q >= 2, "gamma_q requires q >= 2");
    let qf = q as f64;
    let ln_value: f64 = (1..=terms).map(|i| -(-qf.powi(-(i as i32))).ln_1p()).sum();
    GammaQ { q, value: ln_value.exp(), truncation_terms: terms.max(1), ln_value }
}
