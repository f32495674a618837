//! Exact sum-rank sphere and ball volumes, and the log-domain bounds on them.
//!
//! A word of `F_{q^m}^n` splits into `ℓ` blocks of length `η`; a block of rank
//! `s` can be chosen in `NM_q(η, m, s)` ways, independently per block. The
//! sphere volumes are therefore the coefficients of `P(z)^ℓ` with
//! `P(z) = Σ_s NM_q(η, m, s) z^s`, computed block by block:
//!
//! `V_j(t) = Σ_{s=0}^{min(μ,t)} V_{j−1}(t−s) · NM_q(η, m, s)`, `V_0 = [1]`.
//!
//! [`sphere_volume_direct`] sums the same products over all weight
//! decompositions and serves as an independent check of the recurrence.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, nm_count, partitions_iter, BigCount, GammaQ, LogQValue};
use crate::error::invalid;
use crate::fields::prime_power;
use crate::numeric::logq_big;

/// Parameters `(q, m, η, ℓ)` of the ambient space `F_{q^m}^{ℓη}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub q: u64,
    pub m: u64,
    pub eta: u64,
    pub ell: u64,
}

impl CodeParams {
    pub fn new(q: u64, m: u64, eta: u64, ell: u64) -> crate::Result<Self> {
        if prime_power(q).is_none() {
            return invalid(format!("q = {q} is not a prime power"));
        }
        if m == 0 || eta == 0 || ell == 0 {
            return invalid("m, eta and ell must all be at least 1");
        }
        if ell.checked_mul(eta).is_none() || m.checked_mul(ell * eta).is_none() {
            return invalid("parameters overflow");
        }
        Ok(Self { q, m, eta, ell })
    }

    /// Builds parameters from the code length, which must be a multiple of `η`.
    pub fn with_length(q: u64, m: u64, eta: u64, n: u64) -> crate::Result<Self> {
        if eta == 0 || n == 0 || n % eta != 0 {
            return invalid(format!("length n = {n} is not a positive multiple of eta = {eta}"));
        }
        Self::new(q, m, eta, n / eta)
    }

    /// Code length `n = ℓ·η`.
    pub fn n(&self) -> u64 {
        self.ell * self.eta
    }

    /// Largest rank of a single block, `μ = min(m, η)`.
    pub fn mu(&self) -> u64 {
        self.m.min(self.eta)
    }

    /// Largest sum-rank weight, `ℓ·μ`.
    pub fn max_weight(&self) -> u64 {
        self.ell * self.mu()
    }

    /// `q^{mn}`, the size of the ambient space.
    pub fn space_size(&self) -> BigUint {
        crate::numeric::pow_big(self.q, self.m * self.n())
    }

    pub(crate) fn check_radius(&self, t: u64) -> crate::Result<()> {
        if t > self.max_weight() {
            return invalid(format!("radius {t} exceeds the maximum sum-rank weight {}", self.max_weight()));
        }
        Ok(())
    }

    /// `NM_q(η, m, s)` for `s = 0..=μ`.
    fn block_counts(&self) -> Vec<BigCount> {
        (0..=self.mu()).map(|s| nm_count(self.eta, self.m, s, self.q)).collect()
    }
}

/// Sphere volumes for radii `0..=radius_max` with their prefix sums.
#[derive(Debug, Clone)]
pub struct VolumeTable {
    params: CodeParams,
    sphere: Vec<BigCount>,
    ball: Vec<BigCount>,
}

impl VolumeTable {
    pub fn new(params: CodeParams, radius_max: u64) -> crate::Result<Self> {
        params.check_radius(radius_max)?;
        let cap = radius_max as usize;
        let block = params.block_counts();
        let mu = params.mu() as usize;
        let mut v: Vec<BigCount> = vec![BigUint::one()];
        for _ in 0..params.ell {
            let len = (v.len() + mu).min(cap + 1);
            let next: Vec<BigCount> = (0..len)
                .map(|t| {
                    let mut acc = BigUint::zero();
                    for (s, count) in block.iter().enumerate().take(t.min(mu) + 1) {
                        if let Some(prev) = v.get(t - s) {
                            acc += prev * count;
                        }
                    }
                    acc
                })
                .collect();
            v = next;
        }
        v.resize(cap + 1, BigUint::zero());
        let mut ball = Vec::with_capacity(v.len());
        let mut acc = BigUint::zero();
        for s in &v {
            acc += s;
            ball.push(acc.clone());
        }
        Ok(Self { params, sphere: v, ball })
    }

    /// Table covering every radius up to `ℓμ`.
    pub fn full(params: CodeParams) -> crate::Result<Self> {
        Self::new(params, params.max_weight())
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn radius_max(&self) -> u64 {
        self.sphere.len() as u64 - 1
    }

    pub fn sphere(&self, t: u64) -> crate::Result<&BigCount> {
        self.sphere.get(t as usize).map_or_else(
            || invalid(format!("radius {t} outside the table (max {})", self.radius_max())),
            Ok,
        )
    }

    pub fn ball(&self, t: u64) -> crate::Result<&BigCount> {
        self.ball.get(t as usize).map_or_else(
            || invalid(format!("radius {t} outside the table (max {})", self.radius_max())),
            Ok,
        )
    }

    pub fn spheres(&self) -> &[BigCount] {
        &self.sphere
    }

    pub fn balls(&self) -> &[BigCount] {
        &self.ball
    }
}

/// Number of words of sum-rank weight exactly `t`.
pub fn sphere_volume(params: &CodeParams, t: u64) -> crate::Result<BigCount> {
    Ok(VolumeTable::new(*params, t)?.sphere(t)?.clone())
}

/// Sum over weight decompositions of `Π_i NM_q(η, m, t_i)`.
pub fn sphere_volume_direct(params: &CodeParams, t: u64) -> crate::Result<BigCount> {
    params.check_radius(t)?;
    let block = params.block_counts();
    Ok(partitions_iter(t as u32, params.ell as u32, params.mu() as u32)
        .map(|parts| parts.iter().map(|&s| &block[s as usize]).product::<BigUint>())
        .sum())
}

/// Number of words of sum-rank weight at most `t`.
pub fn ball_volume(params: &CodeParams, t: u64) -> crate::Result<BigCount> {
    Ok(VolumeTable::new(*params, t)?.ball(t)?.clone())
}

/// Lower bound `(m + η − t/ℓ)·t − ℓ/4 − ℓ·log_q γ_q` on `log_q Vol_S(t)`.
///
/// The `ℓ/4` term vanishes when `ℓ | t`, where the balanced decomposition is
/// exact. Defined for `1 ≤ t ≤ ℓμ`.
pub fn sphere_lower_bound_logq(params: &CodeParams, t: u64) -> crate::Result<LogQValue> {
    if t == 0 {
        return invalid("the sphere lower bound is stated for radius t >= 1");
    }
    params.check_radius(t)?;
    let (m, eta, ell, tf) = (params.m as f64, params.eta as f64, params.ell as f64, t as f64);
    let penalty = if t % params.ell == 0 { 0.0 } else { ell / 4.0 };
    Ok((m + eta - tf / ell) * tf - penalty - ell * GammaQ::new(params.q).log_q())
}

/// Upper bound `log_q C(ℓ+t−1, ℓ−1) + ℓ·log_q γ_q + t(m + η − t/ℓ)` on
/// `log_q Vol_S(t)`.
pub fn sphere_upper_bound_logq(params: &CodeParams, t: u64) -> crate::Result<LogQValue> {
    params.check_radius(t)?;
    let (m, eta, ell, tf) = (params.m as f64, params.eta as f64, params.ell as f64, t as f64);
    let compositions = binomial((params.ell + t - 1) as i64, (params.ell - 1) as i64);
    Ok(logq_big(&compositions, params.q)
        + ell * GammaQ::new(params.q).log_q()
        + tf * (m + eta - tf / ell))
}
