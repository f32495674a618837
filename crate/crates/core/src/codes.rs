//! Random systematic codes over `F_{q^m}`, sum-rank weights, brute-force
//! minimum distance, the MSRD test over reduced echelon block matrices, and a
//! seeded Monte-Carlo harness.
//!
//! Monte-Carlo trial `i` draws its code from a ChaCha8 generator seeded with
//! the run seed and switched to stream `i`, so results do not depend on how
//! trials are scheduled.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::{partitions_iter, q_binomial, PartitionVec};
use crate::error::{invalid, Error};
use crate::fields::{field_of_order, rank, rank_fq, EnumerableField, ExtElem, ExtField, Field, FieldOps, Fq, Matrix, MatrixFq};
use crate::volumes::CodeParams;

/// Default cap on `q^{mk}` for [`min_distance_bruteforce`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// Default cap on `|U_{ℓ,k}|` for [`is_msrd`].
pub const DEFAULT_MSRD_CAP: u64 = 1 << 20;

/// A linear code with generator matrix `[I_k | X]` over `F_{q^m}`.
#[derive(Debug, Clone)]
pub struct LinearCode {
    params: CodeParams,
    field: ExtField,
    k: usize,
    generator: Matrix<ExtElem>,
}

impl LinearCode {
    /// Code generated by `[I_k | x]`, where `x` is `k × (n − k)`.
    pub fn systematic(params: CodeParams, field: ExtField, x: &Matrix<ExtElem>) -> crate::Result<Self> {
        check_field(&params, &field)?;
        let n = params.n() as usize;
        let k = x.rows();
        if k == 0 || k > n || x.cols() != n - k {
            return invalid(format!("redundancy part must be k × (n − k) with 1 ≤ k ≤ n = {n}"));
        }
        if (0..k).flat_map(|r| x.row(r)).any(|e| e.0.len() != field.degree() as usize) {
            return invalid("entry is not an element of F_{q^m}");
        }
        let mut data = Vec::with_capacity(k * n);
        for r in 0..k {
            data.extend((0..k).map(|c| if c == r { field.one() } else { field.zero() }));
            data.extend_from_slice(x.row(r));
        }
        Ok(Self { params, field, k, generator: Matrix::from_rows(k, n, data) })
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn generator(&self) -> &Matrix<ExtElem> {
        &self.generator
    }

    /// `message · G`.
    pub fn encode(&self, message: &[ExtElem]) -> Vec<ExtElem> {
        assert_eq!(message.len(), self.k, "message length must equal k");
        let f = &self.field;
        let mut word = vec![f.zero(); self.n()];
        for (r, u) in message.iter().enumerate() {
            if f.is_zero(u) {
                continue;
            }
            for (w, g) in word.iter_mut().zip(self.generator.row(r)) {
                *w = f.add(w, &f.mul(u, g));
            }
        }
        word
    }
}

fn check_field(params: &CodeParams, field: &ExtField) -> crate::Result<()> {
    if u64::from(field.base().order()) != params.q || u64::from(field.degree()) != params.m {
        return invalid(format!(
            "field F_{}^{} does not match q = {}, m = {}",
            field.base().order(),
            field.degree(),
            params.q,
            params.m
        ));
    }
    Ok(())
}

/// `F_{q^m}` for the given parameters.
pub fn code_field(params: &CodeParams) -> crate::Result<ExtField> {
    let m = u32::try_from(params.m).map_err(|_| Error::InvalidArgument("m too large".into()))?;
    ExtField::new(field_of_order(params.q)?, m)
}

/// Per-block ranks `(t_1, …, t_ℓ)` of `x`, each the `F_q`-rank of the
/// `m × η` expansion of the block.
pub fn weight_decomposition(field: &ExtField, x: &[ExtElem], ell: u64, eta: u64) -> crate::Result<PartitionVec> {
    let eta = eta as usize;
    if x.len() as u64 != ell * eta as u64 {
        return invalid(format!("vector of length {} is not ℓη = {}", x.len(), ell * eta as u64));
    }
    let m = field.degree() as usize;
    Ok(x.chunks(eta)
        .map(|block| {
            // rows are coordinate vectors: the transpose of the expansion, same rank
            let data = block.iter().flat_map(|e| field.expand(e)).collect();
            rank_fq(field.base(), &MatrixFq::from_rows(eta, m, data)) as u32
        })
        .collect())
}

/// Sum-rank weight `Σ_i rk_q(x_i)` with respect to `ℓ` blocks of length `η`.
pub fn sum_rank_weight(field: &ExtField, x: &[ExtElem], ell: u64, eta: u64) -> crate::Result<u64> {
    Ok(weight_decomposition(field, x, ell, eta)?.iter().map(|&t| u64::from(t)).sum())
}

/// Draws `X` with independent uniform entries and returns `[I_k | X]`.
pub fn random_systematic_code<R: Rng + ?Sized>(
    params: &CodeParams,
    field: &ExtField,
    k: u64,
    rng: &mut R,
) -> crate::Result<LinearCode> {
    let n = params.n();
    if k == 0 || k >= n {
        return invalid(format!("k = {k} outside 1..{n}"));
    }
    let (k, r) = (k as usize, (n - k) as usize);
    let data = (0..k * r).map(|_| field.random(rng)).collect();
    LinearCode::systematic(*params, field.clone(), &Matrix::from_rows(k, r, data))
}

fn enumeration_size(code: &LinearCode, cap: u64) -> crate::Result<u64> {
    let p = code.params();
    let size = BigUint::from(p.q).pow((p.m * code.k as u64) as u32);
    match size.to_u64() {
        Some(s) if s <= cap => Ok(s),
        _ => Err(Error::ResourceLimit(format!("q^(mk) = {size} exceeds the enumeration cap {cap}"))),
    }
}

/// Smallest weight of a nonzero codeword, stopping early once a word of
/// weight at most `floor` is seen.
///
/// Only messages whose first nonzero entry is 1 are visited: scaling by a
/// unit of `F_{q^m}` does not change the sum-rank weight.
fn min_weight(code: &LinearCode, cap: u64, floor: u64) -> crate::Result<u64> {
    enumeration_size(code, cap)?;
    let f = code.field();
    let p = code.params();
    let order = f.order();
    let elements: Vec<ExtElem> = (0..order).map(|i| f.element(i)).collect();
    let k = code.k;
    let mut best = u64::MAX;
    for lead in 0..k {
        // message = (0, …, 0, 1, u_{lead+1}, …, u_{k−1})
        let tail = k - lead - 1;
        let mut digits = vec![0u64; tail];
        loop {
            let mut msg = vec![f.zero(); k];
            msg[lead] = f.one();
            for (slot, &d) in msg[lead + 1..].iter_mut().zip(&digits) {
                *slot = elements[d as usize].clone();
            }
            let w = sum_rank_weight(f, &code.encode(&msg), p.ell, p.eta)?;
            best = best.min(w);
            if best <= floor {
                return Ok(best);
            }
            let Some(pos) = digits.iter().rposition(|&d| d + 1 < order) else { break };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
        }
    }
    Ok(best)
}

/// Minimum sum-rank distance by enumerating messages; requires
/// `q^{mk} ≤ DEFAULT_ENUMERATION_CAP`.
pub fn min_distance_bruteforce(code: &LinearCode) -> crate::Result<u64> {
    min_distance_bruteforce_capped(code, DEFAULT_ENUMERATION_CAP)
}

pub fn min_distance_bruteforce_capped(code: &LinearCode, cap: u64) -> crate::Result<u64> {
    min_weight(code, cap, 1)
}

/// Block-diagonal matrix whose `i`-th block is a full-rank `t_i × η` matrix
/// over `F_q` in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBlockMatrix {
    pub blocks: Vec<MatrixFq>,
    eta: usize,
}

impl EchelonBlockMatrix {
    pub fn total(&self) -> usize {
        self.blocks.iter().map(|b| b.rows()).sum()
    }

    /// The assembled `t × ℓη` matrix.
    pub fn to_matrix(&self) -> MatrixFq {
        let n = self.blocks.len() * self.eta;
        let mut out = MatrixFq::filled(self.total(), n, Fq(0));
        let mut row = 0;
        for (i, b) in self.blocks.iter().enumerate() {
            for r in 0..b.rows() {
                for c in 0..self.eta {
                    out.set(row, i * self.eta + c, *b.get(r, c));
                }
                row += 1;
            }
        }
        out
    }
}

/// All full-rank `t × η` reduced row echelon matrices over `F_q`, ordered by
/// pivot set and then by free entries.
fn echelon_matrices(field: &Field, t: usize, eta: usize) -> Vec<MatrixFq> {
    let q = field.order();
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..t).collect();
    loop {
        // free positions: right of the row's pivot, outside pivot columns
        let free: Vec<(usize, usize)> = (0..t)
            .flat_map(|r| (pivots[r] + 1..eta).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut m = MatrixFq::filled(t, eta, Fq(0));
            for (r, &c) in pivots.iter().enumerate() {
                m.set(r, c, Fq(1));
            }
            for (&(r, c), &d) in free.iter().zip(&digits) {
                m.set(r, c, Fq(d));
            }
            out.push(m);
            let Some(pos) = digits.iter().rposition(|&d| d + 1 < q) else { break };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
        }
        // next t-subset of 0..eta in lexicographic order
        let Some(i) = (0..t).rev().find(|&i| pivots[i] < eta - t + i) else { break };
        pivots[i] += 1;
        for j in i + 1..t {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
    out
}

/// Enumerates `U_{ℓ,t}`: for each ordered partition of `t` with parts at most
/// `min(η, t)`, every combination of reduced echelon blocks of those ranks.
pub fn echelon_blocks_iter(params: &CodeParams, t: u64) -> crate::Result<impl Iterator<Item = EchelonBlockMatrix>> {
    let field = field_of_order(params.q)?;
    let eta = params.eta as usize;
    let mu = params.eta.min(t);
    let per_rank: Vec<Vec<MatrixFq>> = (0..=mu as usize).map(|r| echelon_matrices(&field, r, eta)).collect();
    let parts = partitions_iter(t as u32, params.ell as u32, mu as u32);
    Ok(parts.flat_map(move |part| {
        let choices: Vec<Vec<MatrixFq>> = part.iter().map(|&r| per_rank[r as usize].clone()).collect();
        CartesianBlocks::new(choices, eta)
    }))
}

struct CartesianBlocks {
    choices: Vec<Vec<MatrixFq>>,
    index: Option<Vec<usize>>,
    eta: usize,
}

impl CartesianBlocks {
    fn new(choices: Vec<Vec<MatrixFq>>, eta: usize) -> Self {
        let start = choices.iter().all(|c| !c.is_empty()).then(|| vec![0; choices.len()]);
        Self { choices, index: start, eta }
    }
}

impl Iterator for CartesianBlocks {
    type Item = EchelonBlockMatrix;

    fn next(&mut self) -> Option<EchelonBlockMatrix> {
        let idx = self.index.as_mut()?;
        let blocks = idx.iter().zip(&self.choices).map(|(&i, c)| c[i].clone()).collect();
        match (0..idx.len()).rev().find(|&p| idx[p] + 1 < self.choices[p].len()) {
            Some(p) => {
                idx[p] += 1;
                idx[p + 1..].iter_mut().for_each(|i| *i = 0);
            }
            None => self.index = None,
        }
        Some(EchelonBlockMatrix { blocks, eta: self.eta })
    }
}

/// `|U_{ℓ,t}| = Σ_{partitions} Π_i [η, t_i]_q`.
pub fn echelon_count(params: &CodeParams, t: u64) -> BigUint {
    let mu = params.eta.min(t);
    partitions_iter(t as u32, params.ell as u32, mu as u32)
        .map(|part| part.iter().map(|&r| q_binomial(params.eta as i64, i64::from(r), params.q)).product::<BigUint>())
        .fold(BigUint::zero(), |acc, x| acc + x)
}

/// Rank over `F_{q^m}` of `A · Gᵀ` for a matrix `A` over `F_q`.
pub fn rank_of_product(code: &LinearCode, a: &MatrixFq) -> usize {
    let f = code.field();
    let g = code.generator();
    assert_eq!(a.cols(), g.cols(), "A must have n columns");
    let mut data = Vec::with_capacity(a.rows() * g.rows());
    for r in 0..a.rows() {
        for c in 0..g.rows() {
            let mut acc = f.zero();
            for (x, y) in a.row(r).iter().zip(g.row(c)) {
                if x.0 != 0 {
                    acc = f.add(&acc, &f.scale(*x, y));
                }
            }
            data.push(acc);
        }
    }
    rank(f, &Matrix::from_rows(a.rows(), g.rows(), data))
}

/// Whether every `U ∈ U_{ℓ,k}` gives a full-rank `U·Gᵀ`, which holds exactly
/// when the code is MSRD. Requires `n − k + 1 ≤ ℓμ` and `|U_{ℓ,k}| ≤ cap`.
pub fn is_msrd(code: &LinearCode) -> crate::Result<bool> {
    is_msrd_capped(code, DEFAULT_MSRD_CAP)
}

pub fn is_msrd_capped(code: &LinearCode, cap: u64) -> crate::Result<bool> {
    let p = code.params();
    let (n, k) = (p.n(), code.k() as u64);
    if n - k + 1 > p.max_weight() {
        return invalid(format!("distance n − k + 1 = {} exceeds the largest sum-rank weight", n - k + 1));
    }
    let count = echelon_count(p, k);
    if count > BigUint::from(cap) {
        return Err(Error::ResourceLimit(format!("|U_(l,k)| = {count} exceeds the cap {cap}")));
    }
    for u in echelon_blocks_iter(p, k)? {
        if rank_of_product(code, &u.to_matrix()) < code.k() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Property tested on each random code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    Msrd,
    MinDistanceAtLeast(u64),
    Always,
}

impl Predicate {
    pub fn holds(&self, code: &LinearCode) -> crate::Result<bool> {
        match *self {
            Predicate::Msrd => is_msrd(code),
            Predicate::MinDistanceAtLeast(d) => Ok(d <= 1 || min_weight(code, DEFAULT_ENUMERATION_CAP, d - 1)? >= d),
            Predicate::Always => Ok(true),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialResult {
    pub trials: u64,
    pub successes: u64,
    pub estimate: f64,
    pub seed: u64,
}

/// Generator for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs `trials` independent random systematic `[n, k]` codes through
/// `predicate` and counts successes.
pub fn monte_carlo(params: &CodeParams, k: u64, trials: u64, seed: u64, predicate: Predicate) -> crate::Result<TrialResult> {
    if trials == 0 {
        return invalid("trials must be at least 1");
    }
    let field = code_field(params)?;
    let outcomes: Vec<crate::Result<bool>> = (0..trials)
        .into_par_iter()
        .map(|i| predicate.holds(&random_systematic_code(params, &field, k, &mut trial_rng(seed, i))?))
        .collect();
    let mut successes = 0;
    for o in outcomes {
        successes += u64::from(o?);
    }
    Ok(TrialResult { trials, successes, estimate: successes as f64 / trials as f64, seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volumes::VolumeTable;

    fn params(q: u64, m: u64, eta: u64, ell: u64) -> CodeParams {
        CodeParams::new(q, m, eta, ell).unwrap()
    }

    fn all_codes(p: &CodeParams, k: usize) -> Vec<LinearCode> {
        let f = code_field(p).unwrap();
        let r = p.n() as usize - k;
        let order = f.order();
        let cells = k * r;
        let total = order.pow(cells as u32);
        (0..total)
            .map(|mut idx| {
                let data = (0..cells)
                    .map(|_| {
                        let e = f.element(idx % order);
                        idx /= order;
                        e
                    })
                    .collect();
                LinearCode::systematic(*p, f.clone(), &Matrix::from_rows(k, r, data)).unwrap()
            })
            .collect()
    }

    #[test]
    fn weight_basics() {
        let p = params(2, 3, 2, 2);
        let f = code_field(&p).unwrap();
        assert_eq!(sum_rank_weight(&f, &vec![f.zero(); 4], 2, 2).unwrap(), 0);
        assert!(sum_rank_weight(&f, &vec![f.zero(); 3], 2, 2).is_err());
        // α ∉ F_q: the block (α, α) has equal columns, rank 1
        let alpha = f.element(2);
        let x = vec![alpha.clone(), alpha.clone(), f.zero(), f.one()];
        assert_eq!(weight_decomposition(&f, &x, 2, 2).unwrap(), vec![1, 1]);
        // (1, α) has independent columns
        let x = vec![f.one(), alpha, f.zero(), f.zero()];
        assert_eq!(weight_decomposition(&f, &x, 2, 2).unwrap(), vec![2, 0]);
    }

    #[test]
    fn weight_at_most_hamming_and_equal_for_eta_one() {
        let mut rng = trial_rng(5, 0);
        let f = code_field(&params(3, 2, 3, 2)).unwrap();
        for _ in 0..300 {
            let x: Vec<ExtElem> = (0..6).map(|_| if rng.gen_bool(0.3) { f.zero() } else { f.random(&mut rng) }).collect();
            let hamming = x.iter().filter(|e| !f.is_zero(e)).count() as u64;
            assert!(sum_rank_weight(&f, &x, 2, 3).unwrap() <= hamming);
            assert_eq!(sum_rank_weight(&f, &x, 6, 1).unwrap(), hamming);
            assert!(sum_rank_weight(&f, &x, 1, 6).unwrap() <= 2);
        }
    }

    #[test]
    fn full_space_weight_enumerator_is_sphere_volumes() {
        for (q, m, eta, ell) in [(2u64, 2u64, 2u64, 2u64), (2, 3, 2, 2), (3, 2, 1, 2), (2, 2, 3, 1), (4, 1, 2, 2)] {
            let p = params(q, m, eta, ell);
            let f = code_field(&p).unwrap();
            let n = p.n() as usize;
            let order = f.order();
            let mut counts = vec![0u64; p.max_weight() as usize + 1];
            for mut idx in 0..order.pow(n as u32) {
                let x: Vec<ExtElem> = (0..n)
                    .map(|_| {
                        let e = f.element(idx % order);
                        idx /= order;
                        e
                    })
                    .collect();
                counts[sum_rank_weight(&f, &x, ell, eta).unwrap() as usize] += 1;
            }
            let table = VolumeTable::full(p).unwrap();
            let expected: Vec<u64> = table.spheres().iter().map(|v| v.to_u64().unwrap()).collect();
            assert_eq!(counts, expected, "{p:?}");
        }
    }

    #[test]
    fn systematic_shape_and_determinism() {
        let p = params(2, 4, 2, 3);
        let f = code_field(&p).unwrap();
        let c1 = random_systematic_code(&p, &f, 5, &mut trial_rng(9, 3)).unwrap();
        let c2 = random_systematic_code(&p, &f, 5, &mut trial_rng(9, 3)).unwrap();
        assert_eq!(c1.generator(), c2.generator());
        assert_eq!((c1.k(), c1.n()), (5, 6));
        for r in 0..5 {
            for c in 0..5 {
                let expected = if r == c { f.one() } else { f.zero() };
                assert_eq!(c1.generator().get(r, c), &expected);
            }
        }
        let c3 = random_systematic_code(&p, &f, 5, &mut trial_rng(9, 4)).unwrap();
        assert_ne!(c1.generator(), c3.generator());
        assert!(random_systematic_code(&p, &f, 6, &mut trial_rng(0, 0)).is_err());
        assert!(random_systematic_code(&p, &f, 0, &mut trial_rng(0, 0)).is_err());
        let wrong = code_field(&params(2, 3, 2, 3)).unwrap();
        assert!(random_systematic_code(&p, &wrong, 2, &mut trial_rng(0, 0)).is_err());
    }

    #[test]
    fn entry_distribution_chi_square() {
        // q^m = 4: 10^4 draws, 3 degrees of freedom
        let p = params(2, 2, 1, 2);
        let f = code_field(&p).unwrap();
        let mut rng = trial_rng(1, 0);
        let mut counts = [0f64; 4];
        for _ in 0..10_000 {
            let c = random_systematic_code(&p, &f, 1, &mut rng).unwrap();
            counts[f.index_of(c.generator().get(0, 1)) as usize] += 1.0;
        }
        let chi2: f64 = counts.iter().map(|&o| (o - 2500.0).powi(2) / 2500.0).sum();
        // P(χ²_3 > 16.27) = 0.001
        assert!(chi2 < 16.27, "chi2 = {chi2}, counts = {counts:?}");
        for &o in &counts {
            assert!((o - 2500.0).abs() < 5.0 * (10_000.0f64 * 0.25 * 0.75).sqrt());
        }
    }

    #[test]
    fn min_distance_examples() {
        let p = params(2, 2, 1, 2);
        let f = code_field(&p).unwrap();
        // k = 1, G = [1 | x] with x ≠ 0: every nonzero codeword has both entries nonzero
        for i in 1..4 {
            let c = LinearCode::systematic(p, f.clone(), &Matrix::from_rows(1, 1, vec![f.element(i)])).unwrap();
            assert_eq!(min_distance_bruteforce(&c).unwrap(), 2);
        }
        let c = LinearCode::systematic(p, f.clone(), &Matrix::from_rows(1, 1, vec![f.zero()])).unwrap();
        assert_eq!(min_distance_bruteforce(&c).unwrap(), 1);
        // G = I_n
        let p = params(2, 2, 2, 2);
        let f = code_field(&p).unwrap();
        let c = LinearCode::systematic(p, f, &Matrix::from_rows(4, 0, vec![])).unwrap();
        assert_eq!(min_distance_bruteforce(&c).unwrap(), 1);
    }

    #[test]
    fn min_distance_respects_cap() {
        let p = params(2, 8, 2, 2);
        let f = code_field(&p).unwrap();
        let c = random_systematic_code(&p, &f, 3, &mut trial_rng(0, 0)).unwrap();
        assert!(matches!(min_distance_bruteforce(&c), Err(Error::ResourceLimit(_))));
        assert!(min_distance_bruteforce_capped(&c, 1 << 24).is_ok());
    }

    #[test]
    fn min_distance_matches_full_enumeration() {
        let p = params(2, 2, 2, 2);
        for code in all_codes(&p, 1).into_iter().chain(all_codes(&p, 2).into_iter().step_by(7)) {
            let f = code.field();
            let order = f.order();
            let k = code.k();
            let mut best = u64::MAX;
            for mut idx in 1..order.pow(k as u32) {
                let msg: Vec<ExtElem> = (0..k)
                    .map(|_| {
                        let e = f.element(idx % order);
                        idx /= order;
                        e
                    })
                    .collect();
                best = best.min(sum_rank_weight(f, &code.encode(&msg), 2, 2).unwrap());
            }
            assert_eq!(min_distance_bruteforce(&code).unwrap(), best);
        }
    }

    #[test]
    fn echelon_enumeration_counts() {
        let p = params(2, 1, 2, 2);
        assert_eq!(echelon_blocks_iter(&p, 2).unwrap().count(), 11);
        assert_eq!(echelon_count(&p, 2), BigUint::from(11u32));
        let empty: Vec<_> = echelon_blocks_iter(&p, 0).unwrap().collect();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].to_matrix().rows(), 0);
        for (q, eta, ell) in [(2u64, 3u64, 2u64), (3, 2, 3), (2, 4, 1), (4, 2, 2), (2, 1, 5)] {
            let p = params(q, 1, eta, ell);
            for t in 0..=eta * ell {
                let items: Vec<_> = echelon_blocks_iter(&p, t).unwrap().collect();
                assert_eq!(BigUint::from(items.len()), echelon_count(&p, t));
                let field = field_of_order(q).unwrap();
                let mut seen = std::collections::HashSet::new();
                for u in &items {
                    let m = u.to_matrix();
                    assert_eq!(m.rows() as u64, t);
                    assert_eq!(rank_fq(&field, &m) as u64, t);
                    assert!(seen.insert(m.into_data()));
                }
            }
        }
    }

    /// Independent oracle: count full-rank matrices in reduced echelon form by
    /// scanning every t × η matrix.
    #[test]
    fn echelon_blocks_agree_with_exhaustive_scan() {
        let field = field_of_order(3).unwrap();
        let (t, eta) = (2usize, 3usize);
        let mut count = 0;
        for mut idx in 0..3u32.pow((t * eta) as u32) {
            let data: Vec<Fq> = (0..t * eta)
                .map(|_| {
                    let d = idx % 3;
                    idx /= 3;
                    Fq(d)
                })
                .collect();
            let m = MatrixFq::from_rows(t, eta, data);
            let pivots: Vec<Option<usize>> = (0..t).map(|r| m.row(r).iter().position(|x| x.0 != 0)).collect();
            let rref = pivots.iter().all(|p| p.is_some())
                && pivots.windows(2).all(|w| w[0] < w[1])
                && pivots.iter().enumerate().all(|(r, p)| {
                    let c = p.unwrap();
                    m.get(r, c).0 == 1 && (0..t).all(|o| o == r || m.get(o, c).0 == 0)
                });
            if rref {
                assert_eq!(rank_fq(&field, &m), t);
                count += 1;
            }
        }
        assert_eq!(count, echelon_matrices(&field, t, eta).len());
        assert_eq!(count, 13);
    }

    #[test]
    fn echelon_count_within_cardinality_bound() {
        use crate::combinatorics::{binomial, GammaQ};
        use crate::numeric::logq_big;
        for q in [2u64, 3, 4] {
            for (eta, ell) in [(2u64, 2u64), (3, 2), (4, 3), (2, 5), (5, 1)] {
                let p = params(q, 1, eta, ell);
                let lg = GammaQ::new(q).log_q();
                for t in 1..=eta * ell {
                    let exact = logq_big(&echelon_count(&p, t), q);
                    let tf = t as f64;
                    let bound = logq_big(&binomial((t + ell - 1) as i64, (ell - 1) as i64), q)
                        + tf * (eta as f64 - tf / ell as f64)
                        + ell as f64 * lg;
                    assert!(exact <= bound + 1e-9, "q={q} eta={eta} ell={ell} t={t}");
                }
            }
        }
    }

    #[test]
    fn msrd_single_row_hamming() {
        // k = 1, η = 1: MSRD iff no coordinate of the row is zero
        let p = params(2, 2, 1, 3);
        for code in all_codes(&p, 1) {
            let nonzero = code.generator().row(0).iter().all(|e| !code.field().is_zero(e));
            assert_eq!(is_msrd(&code).unwrap(), nonzero);
        }
    }

    #[test]
    fn msrd_equals_singleton_distance_census() {
        let (mut yes, mut no) = (0, 0);
        for (q, m, eta, ell, k) in [(2u64, 2u64, 1u64, 3u64, 2usize), (2, 2, 2, 2, 2), (2, 2, 2, 2, 3), (3, 1, 1, 3, 1)] {
            let p = params(q, m, eta, ell);
            for code in all_codes(&p, k) {
                let d = min_distance_bruteforce(&code).unwrap();
                let msrd = is_msrd(&code).unwrap();
                assert_eq!(msrd, d == p.n() - k as u64 + 1, "{p:?} k={k}");
                if msrd {
                    yes += 1
                } else {
                    no += 1
                }
            }
        }
        assert!(yes > 0 && no > 0);
    }

    #[test]
    fn msrd_rejects_unreachable_distance() {
        // m = 1: μℓ = 2 < n − k + 1 = 3
        let p = params(2, 1, 2, 2);
        let f = code_field(&p).unwrap();
        let c = random_systematic_code(&p, &f, 2, &mut trial_rng(0, 0)).unwrap();
        assert!(is_msrd(&c).is_err());
    }

    #[test]
    fn seeded_msrd_and_non_msrd_instances() {
        let p = params(2, 3, 2, 2);
        let f = code_field(&p).unwrap();
        let results: Vec<bool> = (0..40)
            .map(|i| is_msrd(&random_systematic_code(&p, &f, 2, &mut trial_rng(2024, i)).unwrap()).unwrap())
            .collect();
        let first_yes = results.iter().position(|&b| b).unwrap();
        let first_no = results.iter().position(|&b| !b).unwrap();
        assert!(first_yes < 40 && first_no < 40);
        // identity redundancy part: [I_2 | I_2]
        let x = Matrix::from_rows(2, 2, vec![f.one(), f.zero(), f.zero(), f.one()]);
        let c = LinearCode::systematic(p, f, &x).unwrap();
        // (1, 0, 1, 0) has weight 2 < n − k + 1 = 3
        assert!(!is_msrd(&c).unwrap());
    }

    /// Criterion (iii) implies full rank for every block matrix, echelon or not.
    #[test]
    fn msrd_implies_random_full_rank_blocks_are_full_rank() {
        let (eta, ell, k) = (2usize, 3usize, 3usize);
        let p = params(2, 6, eta as u64, ell as u64);
        let f = code_field(&p).unwrap();
        let base = f.base().clone();
        let parts: Vec<_> = partitions_iter(k as u32, ell as u32, eta as u32).collect();
        let mut rng = trial_rng(77, 0);
        let mut checked = 0;
        for i in 0..20 {
            let code = random_systematic_code(&p, &f, k as u64, &mut trial_rng(31, i)).unwrap();
            if !is_msrd(&code).unwrap() {
                continue;
            }
            for _ in 0..100 {
                let part = &parts[rng.gen_range(0..parts.len())];
                let mut a = MatrixFq::filled(k, eta * ell, Fq(0));
                let mut row = 0;
                for (b, &t) in part.iter().enumerate() {
                    let t = t as usize;
                    let block = loop {
                        let data = (0..t * eta).map(|_| Fq(rng.gen_range(0..2))).collect();
                        let m = MatrixFq::from_rows(t, eta, data);
                        if rank_fq(&base, &m) == t {
                            break m;
                        }
                    };
                    for r in 0..t {
                        for c in 0..eta {
                            a.set(row + r, eta * b + c, *block.get(r, c));
                        }
                    }
                    row += t;
                }
                assert_eq!(rank_of_product(&code, &a), k);
            }
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn monte_carlo_determinism_and_trivial_predicate() {
        let p = params(2, 4, 2, 2);
        let a = monte_carlo(&p, 2, 50, 7, Predicate::Msrd).unwrap();
        let b = monte_carlo(&p, 2, 50, 7, Predicate::Msrd).unwrap();
        assert_eq!(a, b);
        assert!(a.successes <= a.trials);
        let t = monte_carlo(&p, 2, 10, 0, Predicate::Always).unwrap();
        assert_eq!(t.estimate, 1.0);
        assert!(monte_carlo(&p, 2, 0, 0, Predicate::Always).is_err());
    }

    #[test]
    fn monte_carlo_msrd_frequency_above_bound_a() {
        let p = params(2, 10, 2, 2);
        let r = monte_carlo(&p, 2, 200, 0, Predicate::Msrd).unwrap();
        let lb = crate::genericity::msrd_prob_lb_A(2, 10, 2, 2, 2).unwrap().lower.unwrap();
        assert!(r.estimate >= lb - 3.0 * (lb * (1.0 - lb) / 200.0).sqrt(), "{} vs {lb}", r.estimate);
    }

    #[test]
    fn monte_carlo_gv_attainment_floor() {
        let p = params(2, 6, 2, 2);
        let r = monte_carlo(&p, 2, 200, 1, Predicate::MinDistanceAtLeast(2)).unwrap();
        assert!(r.estimate > 0.9, "{}", r.estimate);
    }
}
