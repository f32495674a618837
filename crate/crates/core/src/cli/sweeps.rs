//! Rate-curve and minimal-extension-degree sweeps.

use rayon::prelude::*;

use crate::bounds::{
    gv_asymptotic_rate, gv_max_k, gv_simplified_max_k, singleton_max_k, sp_asymptotic_rate, sp_max_k,
    sp_simplified_max_k, AsymptoticParams, GvRateMode, SpRateMode,
};
use crate::genericity::{min_extension_degree, BoundKind};
use crate::volumes::{CodeParams, VolumeTable};

/// Which asymptotic regime the asymptotic columns of a curve describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Regime {
    /// Fixed `η, m`, many blocks: SP many-blocks limit, finite-length GV rate.
    #[default]
    BoundedBlock,
    /// `m = ξη` growing: both growing-block limits with `ξ = m/η`.
    GrowingBlock,
}

/// One grid point of an SP/GV rate curve. Rates are `k/n`; asymptotic rates
/// are clamped to `[0, 1]` with the unclamped values kept alongside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub delta: f64,
    pub d: u64,
    pub singleton: f64,
    pub sp_exact: f64,
    pub sp_simplified: f64,
    pub sp_asymptotic: Option<f64>,
    pub sp_asymptotic_raw: Option<f64>,
    pub gv_exact: f64,
    /// Undefined for `d ≤ 2`.
    pub gv_simplified: Option<f64>,
    pub gv_asymptotic: Option<f64>,
    pub gv_asymptotic_raw: Option<f64>,
}

/// Maps `δ` to `d = round(δn)` clamped to `[1, μℓ]`.
pub fn delta_to_d(params: &CodeParams, delta: f64) -> u64 {
    ((delta * params.n() as f64).round() as u64).clamp(1, params.max_weight())
}

/// Rates at `δ = i/grid` for `i = 1..=grid`, from a volume table covering
/// every radius up to `μℓ − 1`.
pub fn curve_rows(table: &VolumeTable, grid: u64, regime: Regime) -> crate::Result<Vec<CurveRow>> {
    let params = *table.params();
    if grid == 0 {
        return crate::error::invalid("grid must have at least one point");
    }
    let asym = AsymptoticParams::from_params(&params);
    let (sp_mode, gv_mode) = match regime {
        Regime::BoundedBlock => (SpRateMode::ManyBlocks, GvRateMode::Finite),
        Regime::GrowingBlock => (SpRateMode::GrowingBlocks, GvRateMode::GrowingBlocks),
    };
    let n = params.n() as f64;
    (1..=grid)
        .into_par_iter()
        .map(|i| {
            let delta = i as f64 / grid as f64;
            let d = delta_to_d(&params, delta);
            let rate = |k: u64| k as f64 / n;
            let sp_raw = sp_asymptotic_rate(delta, &asym, sp_mode).ok();
            let gv_raw = gv_asymptotic_rate(delta, &asym, gv_mode).ok();
            Ok(CurveRow {
                delta,
                d,
                singleton: rate(singleton_max_k(&params, d)?),
                sp_exact: rate(sp_max_k(table, d)?),
                sp_simplified: rate(sp_simplified_max_k(&params, d)?),
                sp_asymptotic: sp_raw.map(|r| r.clamp(0.0, 1.0)),
                sp_asymptotic_raw: sp_raw,
                gv_exact: rate(gv_max_k(table, d)?),
                gv_simplified: (d > 2).then(|| gv_simplified_max_k(&params, d)).transpose()?.map(rate),
                gv_asymptotic: gv_raw.map(|r| r.clamp(0.0, 1.0)),
                gv_asymptotic_raw: gv_raw,
            })
        })
        .collect()
}

/// `m_min` per bound for one block count; `None` where the bound was not
/// requested or no `m` up to the cap works.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MminRow {
    pub ell: u64,
    pub a: Option<u64>,
    pub u_lemma: Option<u64>,
    pub u_printed: Option<u64>,
    pub br: Option<u64>,
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `m_min` for every `ℓ` in `ells` and every requested bound.
pub fn mmin_rows(q: u64, n: u64, k: u64, ells: &[u64], kinds: &[BoundKind], cap: u64) -> crate::Result<Vec<MminRow>> {
    ells.par_iter()
        .map(|&ell| {
            let solve = |kind: BoundKind| -> crate::Result<Option<u64>> {
                if kinds.contains(&kind) {
                    min_extension_degree(q, n, k, ell, kind, cap)
                } else {
                    Ok(None)
                }
            };
            Ok(MminRow {
                ell,
                a: solve(BoundKind::A)?,
                u_lemma: solve(BoundKind::ULemma)?,
                u_printed: solve(BoundKind::UPrinted)?,
                br: solve(BoundKind::BrLower)?,
            })
        })
        .collect()
}
