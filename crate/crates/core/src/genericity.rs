//! Probability that a random systematic code is MSRD, the minimal extension
//! degree for which those bounds become informative, and the dimension
//! attained by random codes near the GV bound.
//!
//! Lower bounds are computed as `1 − q^f`, with the failure exponent `f`
//! evaluated in the log domain so that sign changes are detected even when
//! `q^f` overflows.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binomial, GammaQ};
use crate::error::invalid;
use crate::numeric::{logq_big, pow_big, ratio_to_f64};
use crate::volumes::{CodeParams, VolumeTable};

/// Largest length for which the exact BR upper bound is evaluated.
pub const BR_UPPER_MAX_N: u64 = 64;

/// Default search cap for [`min_extension_degree`].
pub const DEFAULT_M_CAP: u64 = 1 << 20;

/// Probability bounds. `raw_lower` is the unclamped lower bound and may be
/// negative (or `-inf` when the failure term overflows).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityBound {
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub raw_lower: f64,
}

impl ProbabilityBound {
    fn from_failure_logq(failure: f64, q: u64, upper: Option<f64>) -> Self {
        let raw_lower = -((failure * (q as f64).ln()).exp_m1());
        Self { lower: Some(raw_lower.clamp(0.0, 1.0)), upper, raw_lower }
    }
}

/// Which MSRD lower bound to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// Counting all full-rank block matrices.
    A,
    /// Counting reduced echelon block matrices, exponent `k(η − k/ℓ) + ℓ·log_q γ_q`.
    ULemma,
    /// As [`BoundKind::ULemma`] with an extra `−ℓ/4` in the exponent.
    UPrinted,
    /// The ball-volume lower bound with `d = n − k + 1`.
    BrLower,
}

/// Exponent variant for [`msrd_prob_lb_U`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UVariant {
    #[default]
    Lemma,
    Printed,
}

impl From<UVariant> for BoundKind {
    fn from(v: UVariant) -> Self {
        match v {
            UVariant::Lemma => BoundKind::ULemma,
            UVariant::Printed => BoundKind::UPrinted,
        }
    }
}

/// GV-attainment dimension for a chosen slack `epsilon`.
///
/// The accompanying probability `1 − e^{−Ω(mn)}` carries no explicit constant
/// and is not represented numerically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GvAttainment {
    pub epsilon: f64,
    /// Right end of the admissible interval `(0, epsilon_max]`.
    pub epsilon_max: f64,
    pub k: u64,
}

fn check_k(q: u64, m: u64, eta: u64, ell: u64, k: u64) -> crate::Result<CodeParams> {
    let params = CodeParams::new(q, m, eta, ell)?;
    if k == 0 || k > params.n() {
        return invalid(format!("k = {k} outside 1..={}", params.n()));
    }
    if k > params.max_weight() {
        return invalid(format!("k = {k} exceeds the largest total rank {}", params.max_weight()));
    }
    Ok(params)
}

/// `log_q(q^a − 1)` for `a ≥ 1`.
fn logq_pow_minus_one(q: u64, a: f64) -> f64 {
    let lnq = (q as f64).ln();
    a + (-(-a * lnq).exp()).ln_1p() / lnq
}

/// `log_q` of the failure probability bound; the code is MSRD with probability
/// at least `1 − q^{failure}`.
fn failure_logq(params: &CodeParams, k: u64, kind: BoundKind) -> f64 {
    let (q, m, eta, ell) = (params.q, params.m as f64, params.eta as f64, params.ell as f64);
    let kf = k as f64;
    let lg = GammaQ::new(q).log_q();
    let count = || logq_big(&(binomial((k + params.ell - 1) as i64, (params.ell - 1) as i64) * k), q);
    match kind {
        BoundKind::A => count() + eta * kf - m,
        BoundKind::ULemma => count() + kf * (eta - kf / ell) + ell * lg - m,
        BoundKind::UPrinted => count() + kf * (eta - kf / ell) - ell / 4.0 + ell * lg - m,
        BoundKind::BrLower => {
            let n = params.n();
            let r = n - k;
            let rf = r as f64;
            let prefactor =
                logq_pow_minus_one(q, m * kf) - logq_pow_minus_one(q, m) - logq_pow_minus_one(q, m * n as f64);
            let ball = logq_big(&(binomial((params.ell + r - 1) as i64, (params.ell - 1) as i64) * r), q)
                + ell * lg
                + rf * (m + eta - rf / ell);
            // log_q(q^ball − 1); the ball bound is never below one
            let ball_minus_one = if ball > 40.0 { ball } else { ((q as f64).powf(ball) - 1.0).max(0.0).log(q as f64) };
            prefactor + ball_minus_one
        }
    }
}

/// Lower bound from counting every full-rank block matrix:
/// `1 − k·C(k+ℓ−1, ℓ−1)·q^{ηk−m}`.
#[allow(non_snake_case)]
pub fn msrd_prob_lb_A(q: u64, m: u64, eta: u64, ell: u64, k: u64) -> crate::Result<ProbabilityBound> {
    let params = check_k(q, m, eta, ell, k)?;
    Ok(ProbabilityBound::from_failure_logq(failure_logq(&params, k, BoundKind::A), q, None))
}

/// Lower bound from counting reduced echelon block matrices:
/// `1 − k·C(k+ℓ−1, ℓ−1)·q^{k(η−k/ℓ)−m}·γ_q^ℓ`, with an extra `q^{−ℓ/4}` in the
/// printed variant.
#[allow(non_snake_case)]
pub fn msrd_prob_lb_U(q: u64, m: u64, eta: u64, ell: u64, k: u64, variant: UVariant) -> crate::Result<ProbabilityBound> {
    let params = check_k(q, m, eta, ell, k)?;
    Ok(ProbabilityBound::from_failure_logq(failure_logq(&params, k, variant.into()), q, None))
}

/// Row `a` of this table holds the Gaussian binomials `[a, b]_Q` for `b ≤ a`.
fn gaussian_table(n: usize, big_q: &BigUint) -> Vec<Vec<BigUint>> {
    let mut table: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for a in 1..=n {
        let prev = &table[a - 1];
        let mut row = Vec::with_capacity(a + 1);
        let mut qb = BigUint::one();
        for b in 0..=a {
            let left = if b > 0 { prev[b - 1].clone() } else { BigUint::zero() };
            let right = if b < a { &qb * &prev[b] } else { BigUint::zero() };
            row.push(left + right);
            qb *= big_q;
        }
        table.push(row);
    }
    table
}

/// Number of `k`-dimensional subspaces of `F_Q^n` that meet a fixed
/// `r`-dimensional subspace in dimension at least `h_min`, by Möbius inversion
/// over the subspace lattice. Returns the count together with `[n, k]_Q`.
fn subspaces_meeting(n: u64, k: u64, r: u64, big_q: &BigUint, h_min: u64) -> (BigUint, BigUint) {
    let g = gaussian_table(n as usize, big_q);
    let gb = |a: u64, b: u64| -> BigInt {
        if b > a {
            BigInt::zero()
        } else {
            BigInt::from(g[a as usize][b as usize].clone())
        }
    };
    let mut total = BigInt::zero();
    for h in h_min..=r {
        let mut inner = BigInt::zero();
        for s in h..=r {
            let j = s - h;
            let mut term = gb(r - h, j) * gb(n - s, n - k) * BigInt::from(big_q.pow((j * j.saturating_sub(1) / 2) as u32));
            if j % 2 == 1 {
                term = -term;
            }
            inner += term;
        }
        total += gb(r, h) * inner;
    }
    debug_assert!(!total.is_negative());
    (total.to_biguint().expect("a count is nonnegative"), g[n as usize][k as usize].clone())
}

fn check_br(params: &CodeParams, k: u64) -> crate::Result<()> {
    let n = params.n();
    if k == 0 || k >= n {
        return invalid(format!("k = {k} outside 1..{n}"));
    }
    let d = n - k + 1;
    if d > params.max_weight() {
        return invalid(format!("d = n − k + 1 = {d} exceeds the largest sum-rank weight {}", params.max_weight()));
    }
    Ok(())
}

/// Lower and upper bounds on the MSRD probability from counting codes that
/// meet a low-weight subspace (upper) and from the ball-volume bound (lower).
///
/// The upper bound counts `k`-dimensional codes meeting a fixed coordinate
/// subspace of dimension `n − k` nontrivially, all of which contain a word of
/// Hamming weight, hence sum-rank weight, at most `n − k`. It is evaluated
/// exactly for `n ≤ BR_UPPER_MAX_N` and omitted otherwise.
#[allow(non_snake_case)]
pub fn msrd_prob_bounds_BR(params: &CodeParams, k: u64) -> crate::Result<ProbabilityBound> {
    check_br(params, k)?;
    let n = params.n();
    let upper = (n <= BR_UPPER_MAX_N).then(|| {
        let (bad, total) = subspaces_meeting(n, k, n - k, &pow_big(params.q, params.m), 1);
        ratio_to_f64(&(&total - bad), &total)
    });
    let failure = failure_logq(params, k, BoundKind::BrLower);
    let mut bound = ProbabilityBound::from_failure_logq(failure, params.q, upper);
    if let (Some(lo), Some(up)) = (bound.lower, bound.upper) {
        // both are rounded from exact quantities; keep the ordering invariant
        bound.lower = Some(lo.min(up));
    }
    Ok(bound)
}

fn raw_lower_positive(q: u64, n: u64, k: u64, ell: u64, m: u64, kind: BoundKind) -> bool {
    let eta = n / ell;
    let Ok(params) = CodeParams::new(q, m, eta, ell) else { return false };
    if k > params.max_weight() {
        return false;
    }
    match kind {
        // exact: q^m > k·C(k+ℓ−1, ℓ−1)·q^{ηk}
        BoundKind::A => {
            pow_big(q, m) > binomial((k + ell - 1) as i64, (ell - 1) as i64) * k * pow_big(q, eta * k)
        }
        BoundKind::BrLower => check_br(&params, k).is_ok() && failure_logq(&params, k, kind) < 0.0,
        _ => failure_logq(&params, k, kind) < 0.0,
    }
}

/// Smallest `m ≤ cap` for which the chosen lower bound is strictly positive,
/// or `None` if there is none. Inputs for which the bound is undefined at a
/// given `m` (for example `k > ℓ·min(m, η)`) count as not positive.
pub fn min_extension_degree(q: u64, n: u64, k: u64, ell: u64, kind: BoundKind, cap: u64) -> crate::Result<Option<u64>> {
    if ell == 0 || n % ell != 0 {
        return invalid(format!("ell = {ell} does not divide n = {n}"));
    }
    if k == 0 || k > n {
        return invalid(format!("k = {k} outside 1..={n}"));
    }
    CodeParams::new(q, 1, n / ell, ell)?;
    let ok = |m: u64| raw_lower_positive(q, n, k, ell, m, kind);
    let mut hi = 1u64;
    while !ok(hi) {
        if hi >= cap {
            return Ok(None);
        }
        hi = (hi * 2).min(cap);
    }
    let mut lo = hi / 2;
    // invariant: ok(hi), and lo == 0 or !ok(lo)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

/// Dimension `k = ⌊n(1 − log_q Vol_B(d−1)/(mn) − ε)⌋` reached by random codes
/// of minimum distance at least `d`, for `ε ∈ (0, ε_max]` with
/// `ε_max = 1 − log_q Vol_B(d−1)/(mn) − 1/n`.
pub fn gv_attainment_dimension(table: &VolumeTable, d: u64, epsilon: f64) -> crate::Result<GvAttainment> {
    let p = table.params();
    if d == 0 || d > p.max_weight() {
        return invalid(format!("d = {d} outside 1..={}", p.max_weight()));
    }
    let n = p.n() as f64;
    let rate = 1.0 - logq_big(table.ball(d - 1)?, p.q) / (p.m as f64 * n);
    let epsilon_max = rate - 1.0 / n;
    if !(epsilon > 0.0 && epsilon <= epsilon_max + 1e-12) {
        return invalid(format!("epsilon = {epsilon} outside (0, {epsilon_max}]"));
    }
    let k = (n * (rate - epsilon) + 1e-9).floor().max(0.0) as u64;
    Ok(GvAttainment { epsilon, epsilon_max, k })
}
