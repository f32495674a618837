//! Singleton, sphere-packing (SP) and Gilbert–Varshamov (GV) bounds.
//!
//! Exact SP and GV decisions are big-integer comparisons against a
//! [`VolumeTable`]. Simplified forms replace the ball volume by the log-domain
//! bounds from [`crate::volumes`], and the asymptotic forms are closed
//! expressions in the relative distance `δ = d/n`.
//!
//! Every `*_max_k` solver returns the largest `k ∈ [1, n]` satisfying its
//! inequality, or 0 when even `k = 1` fails. All inequalities are monotone in
//! `k`, so the solvers binary-search.

use crate::combinatorics::{binomial, GammaQ};
use crate::error::invalid;
use crate::numeric::{logq_big, pow_big};
use crate::volumes::{CodeParams, VolumeTable};

/// A point `(δ, R)` on a rate curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePoint {
    pub delta: f64,
    pub rate: f64,
}

impl RatePoint {
    /// Same point with the rate clamped to `[0, 1]`.
    pub fn clamped(self) -> Self {
        Self { rate: self.rate.clamp(0.0, 1.0), ..self }
    }
}

/// Inputs of the asymptotic rate formulas.
///
/// `xi = m/η` is all the growing-block limits need; finite-length formulas
/// and the many-blocks limit also need `η`, `m` and (for finite length) `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticParams {
    pub q: u64,
    pub xi: f64,
    pub eta: Option<u64>,
    pub m: Option<u64>,
    pub n: Option<u64>,
}

impl AsymptoticParams {
    pub fn ratio(q: u64, xi: f64) -> Self {
        Self { q, xi, eta: None, m: None, n: None }
    }

    pub fn from_params(params: &CodeParams) -> Self {
        Self {
            q: params.q,
            xi: params.m as f64 / params.eta as f64,
            eta: Some(params.eta),
            m: Some(params.m),
            n: Some(params.n()),
        }
    }

    fn eta_m(&self) -> crate::Result<(f64, f64)> {
        match (self.eta, self.m) {
            (Some(eta), Some(m)) => Ok((eta as f64, m as f64)),
            _ => invalid("this rate formula needs eta and m"),
        }
    }

    fn eta_m_n(&self) -> crate::Result<(f64, f64, f64)> {
        let (eta, m) = self.eta_m()?;
        match self.n {
            Some(n) => Ok((eta, m, n as f64)),
            None => invalid("the finite-length rate formula needs n"),
        }
    }
}

/// Which form of the asymptotic SP rate to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpRateMode {
    /// `R^*(δ)` at finite `n`.
    Finite,
    /// `m = ηξ → ∞`: `δ²/(4ξ) − (δ/2)(1 + 1/ξ) + 1`.
    GrowingBlocks,
    /// `ℓ → ∞` with `η, m` fixed.
    ManyBlocks,
}

/// Which form of the asymptotic GV rate to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GvRateMode {
    /// `R_*` at finite `n`, including the logarithmic partition-count sum.
    Finite,
    /// `m = ηξ → ∞`: `δ²/ξ − δ(1 + 1/ξ) + 1`.
    GrowingBlocks,
}

fn check_d(params: &CodeParams, d: u64) -> crate::Result<()> {
    if d == 0 || d > params.max_weight() {
        return invalid(format!("d = {d} outside 1..={}", params.max_weight()));
    }
    Ok(())
}

fn check_k(params: &CodeParams, k: u64) -> crate::Result<()> {
    if k == 0 || k > params.n() {
        return invalid(format!("k = {k} outside 1..={}", params.n()));
    }
    Ok(())
}

/// Largest `k ∈ [1, n]` with `holds(k)`, assuming `holds` is true on a
/// prefix of the range; 0 if `holds(1)` is false.
fn largest_k(n: u64, holds: impl Fn(u64) -> bool) -> u64 {
    let (mut lo, mut hi) = (0u64, n);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// `⌊min{n − d + 1, (η/m)(ℓm − d + 1)}⌋`, clamped at zero.
pub fn singleton_max_k(params: &CodeParams, d: u64) -> crate::Result<u64> {
    check_d(params, d)?;
    let hamming = params.n() + 1 - d;
    let rank = params.eta * (params.ell * params.m + 1 - d) / params.m;
    Ok(hamming.min(rank))
}

fn sp_radius(d: u64) -> u64 {
    (d - 1) / 2
}

fn sp_holds_unchecked(table: &VolumeTable, k: u64, d: u64) -> crate::Result<bool> {
    let p = table.params();
    let ball = table.ball(sp_radius(d))?;
    Ok(*ball <= pow_big(p.q, p.m * (p.n() - k)))
}

/// `q^{mk} · Vol_B(⌊(d−1)/2⌋) ≤ q^{mn}`, evaluated exactly.
pub fn sp_holds(table: &VolumeTable, k: u64, d: u64) -> crate::Result<bool> {
    check_k(table.params(), k)?;
    check_d(table.params(), d)?;
    sp_holds_unchecked(table, k, d)
}

/// Largest dimension allowed by the exact sphere-packing bound.
pub fn sp_max_k(table: &VolumeTable, d: u64) -> crate::Result<u64> {
    let params = *table.params();
    check_d(&params, d)?;
    table.ball(sp_radius(d))?;
    Ok(largest_k(params.n(), |k| sp_holds_unchecked(table, k, d).expect("radius checked")))
}

fn sp_simplified_lhs(params: &CodeParams, k: u64, d: u64, log_gamma: f64) -> f64 {
    let (m, eta, ell) = (params.m as f64, params.eta as f64, params.ell as f64);
    let t = sp_radius(d) as f64;
    m * k as f64 + (m + eta - t / ell) * t - ell / 4.0 - ell * log_gamma
}

/// `m·k + (m + η − t/ℓ)·t − ℓ/4 − ℓ·log_q γ_q ≤ m·n` with `t = ⌊(d−1)/2⌋`.
pub fn sp_simplified_holds(params: &CodeParams, k: u64, d: u64) -> crate::Result<bool> {
    check_k(params, k)?;
    check_d(params, d)?;
    let lg = GammaQ::new(params.q).log_q();
    Ok(sp_simplified_lhs(params, k, d, lg) <= (params.m * params.n()) as f64)
}

/// Largest dimension allowed by the simplified sphere-packing bound. Never
/// below [`sp_max_k`], since the simplified form uses a lower bound on the ball.
pub fn sp_simplified_max_k(params: &CodeParams, d: u64) -> crate::Result<u64> {
    check_d(params, d)?;
    let lg = GammaQ::new(params.q).log_q();
    let rhs = (params.m * params.n()) as f64;
    Ok(largest_k(params.n(), |k| sp_simplified_lhs(params, k, d, lg) <= rhs))
}

fn gv_holds_unchecked(table: &VolumeTable, k: u64, d: u64) -> crate::Result<bool> {
    let p = table.params();
    let ball = table.ball(d - 1)?;
    Ok(*ball < pow_big(p.q, p.m * (p.n() - k + 1)))
}

/// `q^{m(k−1)} · Vol_B(d − 1) < q^{mn}`, evaluated exactly.
pub fn gv_holds(table: &VolumeTable, k: u64, d: u64) -> crate::Result<bool> {
    check_k(table.params(), k)?;
    check_d(table.params(), d)?;
    gv_holds_unchecked(table, k, d)
}

/// Largest dimension guaranteed by the exact Gilbert–Varshamov bound.
pub fn gv_max_k(table: &VolumeTable, d: u64) -> crate::Result<u64> {
    let params = *table.params();
    check_d(&params, d)?;
    table.ball(d - 1)?;
    Ok(largest_k(params.n(), |k| gv_holds_unchecked(table, k, d).expect("radius checked")))
}

/// Log-domain left side of the simplified GV inequality without the `m(k−1)`
/// term: `log_q((d−1)·C(ℓ+d−2, ℓ−1)) + ℓ·log_q γ_q + (d−1)(m + η − (d−1)/ℓ)`.
fn gv_simplified_ball_logq(params: &CodeParams, d: u64) -> f64 {
    let (m, eta, ell) = (params.m as f64, params.eta as f64, params.ell as f64);
    let r = (d - 1) as f64;
    let count = binomial((params.ell + d - 2) as i64, (params.ell - 1) as i64) * (d - 1);
    logq_big(&count, params.q) + ell * GammaQ::new(params.q).log_q() + r * (m + eta - r / ell)
}

fn check_gv_simplified_d(params: &CodeParams, d: u64) -> crate::Result<()> {
    check_d(params, d)?;
    if d <= 2 {
        return invalid("the simplified GV bound requires d > 2");
    }
    Ok(())
}

/// `q^{m(k−1)}·(d−1)·C(ℓ+d−2, ℓ−1)·γ_q^ℓ·q^{(d−1)(m+η−(d−1)/ℓ)} < q^{mn}`,
/// evaluated in the log domain. Requires `2 < d ≤ ℓμ`.
pub fn gv_simplified_holds(params: &CodeParams, k: u64, d: u64) -> crate::Result<bool> {
    check_k(params, k)?;
    check_gv_simplified_d(params, d)?;
    let ball = gv_simplified_ball_logq(params, d);
    Ok((params.m * (k - 1)) as f64 + ball < (params.m * params.n()) as f64)
}

/// Largest dimension guaranteed by the simplified GV bound. Never above
/// [`gv_max_k`], since the simplified form uses an upper bound on the ball.
pub fn gv_simplified_max_k(params: &CodeParams, d: u64) -> crate::Result<u64> {
    check_gv_simplified_d(params, d)?;
    let ball = gv_simplified_ball_logq(params, d);
    let rhs = (params.m * params.n()) as f64;
    Ok(largest_k(params.n(), |k| (params.m * (k - 1)) as f64 + ball < rhs))
}

/// Asymptotic sphere-packing upper bound on the rate at relative distance `δ`.
pub fn sp_asymptotic_rate(delta: f64, asym: &AsymptoticParams, mode: SpRateMode) -> crate::Result<f64> {
    if !(delta >= 0.0) {
        return invalid(format!("relative distance {delta} must be nonnegative"));
    }
    let lg = GammaQ::new(asym.q).log_q();
    Ok(match mode {
        SpRateMode::GrowingBlocks => {
            let xi = asym.xi;
            if !(xi > 0.0) {
                return invalid("xi must be positive");
            }
            delta * delta / (4.0 * xi) - delta / 2.0 * (1.0 + 1.0 / xi) + 1.0
        }
        SpRateMode::ManyBlocks => {
            let (eta, m) = asym.eta_m()?;
            delta * delta * eta / (4.0 * m) - delta / 2.0 * (1.0 + eta / m) + (0.25 + lg) / (eta * m) + 1.0
        }
        SpRateMode::Finite => {
            let (eta, m, n) = asym.eta_m_n()?;
            delta * delta * eta / (4.0 * m) - delta * (0.5 + eta / m * (0.5 + 1.0 / n))
                + (1.0 + eta / m + eta / (n * m)) / n
                + (0.25 + lg) / (eta * m)
                + 1.0
        }
    })
}

/// Asymptotic Gilbert–Varshamov achievable rate at relative distance `δ`.
///
/// The finite form uses `d = round(δn)` as the upper index of the partition
/// sum and needs `d ≥ 2`. The growing-block limit also presumes
/// `m ∈ ω(log_q ℓ)`, which has no finite-length check.
pub fn gv_asymptotic_rate(delta: f64, asym: &AsymptoticParams, mode: GvRateMode) -> crate::Result<f64> {
    if !(delta >= 0.0) {
        return invalid(format!("relative distance {delta} must be nonnegative"));
    }
    match mode {
        GvRateMode::GrowingBlocks => {
            let xi = asym.xi;
            if !(xi > 0.0) {
                return invalid("xi must be positive");
            }
            Ok(delta * delta / xi - delta * (1.0 + 1.0 / xi) + 1.0)
        }
        GvRateMode::Finite => {
            let (eta, m, n) = asym.eta_m_n()?;
            let d = (delta * n).round();
            if d < 2.0 {
                return invalid("the finite GV rate needs delta * n >= 2");
            }
            let ell = n / eta;
            let lnq = (asym.q as f64).ln();
            let sum: f64 = (1..d as u64).map(|i| ((ell - 1.0) / i as f64).ln_1p()).sum::<f64>() / lnq;
            let lg = GammaQ::new(asym.q).log_q();
            Ok(delta * delta * eta / m - delta * (1.0 + eta / m + 2.0 * eta / (n * m))
                + 1.0
                + 1.0 / n
                + eta / (n * m)
                + eta / (n * n * m)
                - (sum + (d - 1.0).ln() / lnq) / (m * n)
                - lg / (eta * m))
        }
    }
}
