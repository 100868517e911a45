use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{random_prime, PrimeField};
use crate::groebner::{buchberger_with, hilbert, GbConfig, HilbertData, Ideal, QuotientDim};
use crate::matroid::{diagonal_reciprocal_gb, diagonal_ring, mobius_ml_degree, LinearMatroid};
use crate::spaces::LinearMatrixSpace;
use crate::sympoly::MonomialOrder;

use super::critical::{hyperplane_mld, ml_degree_critical_with, Parametrization};
use super::reciprocal::{intersection_degree, reciprocal_degree_implicit, reciprocal_degree_slice_with, SliceSide};
use super::report::{MLReport, MlValue, TrialRecord};
use super::zero::zero_test;

/// Fresh primes tried per trial after an unlucky reduction.
pub const MAX_PRIME_ATTEMPTS: usize = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineChoice {
    /// Closed forms where they apply, otherwise the critical-point count.
    #[default]
    Auto,
    Critical,
    /// Codimension one only.
    Hyperplane,
    /// Diagonal spaces only.
    Diagonal,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReciprocalMethod {
    /// Points on a random linear slice.
    #[default]
    Slice,
    /// Hilbert series of the eliminated ideal.
    Implicitize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MlConfig {
    pub engine: EngineChoice,
    /// Trials in the first round of the modular consensus.
    pub trials: usize,
    /// Total trials after escalation.
    pub max_trials: usize,
    pub prime_bits: u32,
    pub seed: u64,
    pub parametrization: Parametrization,
    pub slice: SliceSide,
    pub gb: GbConfig,
    pub regularity_trials: usize,
}

impl Default for MlConfig {
    fn default() -> Self {
        Self {
            engine: EngineChoice::Auto,
            trials: 3,
            max_trials: 5,
            prime_bits: 31,
            seed: 0,
            parametrization: Parametrization::Auto,
            slice: SliceSide::Auto,
            gb: GbConfig::default(),
            regularity_trials: 8,
        }
    }
}

/// ML degree of a regular space, choosing an engine per `config.engine`.
pub fn ml_degree(space: &LinearMatrixSpace, config: &MlConfig) -> Result<MLReport> {
    if !space.is_regular(config.regularity_trials, config.seed) {
        return Err(Error::NonRegular);
    }
    let c = space.codim();
    match config.engine {
        EngineChoice::Hyperplane => {
            if c != 1 {
                return Err(Error::InvalidInput(format!("hyperplane engine needs codimension 1, got {c}")));
            }
            Ok(MLReport::exact(hyperplane_mld(&space.annihilator().basis()[0])?, "hyperplane"))
        }
        EngineChoice::Diagonal => Ok(MLReport::exact(mobius_ml_degree(space)?, "diagonal")),
        EngineChoice::Critical => critical_consensus(space, config),
        EngineChoice::Auto => {
            if c == 0 {
                return Ok(MLReport::exact(1, "trivial"));
            }
            if c == 1 {
                return Ok(MLReport::exact(hyperplane_mld(&space.annihilator().basis()[0])?, "hyperplane"));
            }
            if space.is_diagonal() && space.n() <= crate::matroid::MAX_GROUND_SET {
                return Ok(MLReport::exact(mobius_ml_degree(space)?, "diagonal"));
            }
            let prime = random_prime(&mut ChaCha8Rng::seed_from_u64(config.seed), config.prime_bits)?;
            let zero = zero_test(space, prime, 2, config.seed)?;
            if zero.is_zero {
                let mut report = MLReport::exact(0, "zero_test");
                report.warnings.push(format!("zero test is randomized; failure bound {} per trial", zero.failure_bound));
                return Ok(report);
            }
            critical_consensus(space, config)
        }
    }
}

fn critical_consensus(space: &LinearMatrixSpace, config: &MlConfig) -> Result<MLReport> {
    let param = config.parametrization;
    let gb = config.gb.clone();
    consensus(config, "critical", |prime, seed| ml_degree_critical_with(space, prime, seed, param, &gb))
}

/// Degree of the reciprocal variety `{K^-1 : K in L invertible}`.
pub fn reciprocal_degree(space: &LinearMatrixSpace, method: ReciprocalMethod, config: &MlConfig) -> Result<MLReport> {
    if !space.is_regular(config.regularity_trials, config.seed) {
        return Err(Error::NonRegular);
    }
    if space.codim() == 0 {
        return Ok(MLReport::exact(1, "trivial"));
    }
    if space.is_diagonal() && config.engine != EngineChoice::Critical {
        let matroid = LinearMatroid::from_diagonal_space(space)?;
        if matroid.ground_set_size() <= crate::matroid::MAX_GROUND_SET {
            let ring = diagonal_ring(space.n());
            let gens = diagonal_reciprocal_gb(&ring, &matroid.circuits()?)?;
            let basis = buchberger_with(&Ideal::new(&ring, gens)?, MonomialOrder::Grevlex, &config.gb)?;
            let h = hilbert(&basis.leading_monomials(), space.n());
            return Ok(MLReport::exact(h.degree.max(0) as u64, "diagonal"));
        }
    }
    let gb = config.gb.clone();
    match method {
        ReciprocalMethod::Slice => {
            let side = config.slice;
            consensus(config, "slice", |prime, seed| reciprocal_degree_slice_with(space, prime, seed, side, &gb))
        }
        ReciprocalMethod::Implicitize => consensus(config, "implicitize", |prime, _| {
            reciprocal_degree_implicit(space, &PrimeField::new(prime)?, &gb).map(QuotientDim::Finite)
        }),
    }
}

/// Hilbert data of the intersection of the reciprocal variety with the
/// annihilator, over a random prime drawn from `config.seed`.
pub fn intersection(space: &LinearMatrixSpace, config: &MlConfig) -> Result<HilbertData> {
    if !space.is_regular(config.regularity_trials, config.seed) {
        return Err(Error::NonRegular);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut last = Error::Inconclusive("no prime attempted".into());
    for _ in 0..MAX_PRIME_ATTEMPTS {
        let prime = random_prime(&mut rng, config.prime_bits)?;
        match intersection_degree(space, &PrimeField::new(prime)?, &config.gb) {
            Err(e @ Error::BadReduction(_)) => last = e,
            other => return other,
        }
    }
    Err(last)
}

struct TrialOutcome {
    record: TrialRecord,
    warnings: Vec<String>,
}

fn run_trial<G>(run: &G, prime_bits: u32, prime: u64, seed: u64) -> TrialOutcome
where
    G: Fn(u64, u64) -> Result<QuotientDim>,
{
    let mut retry_rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut prime = prime;
    let mut warnings = Vec::new();
    for attempt in 0..MAX_PRIME_ATTEMPTS {
        let outcome = run(prime, seed);
        let retry = match outcome {
            Ok(QuotientDim::Finite(count)) => {
                return TrialOutcome { record: TrialRecord { prime, seed, count: Some(count) }, warnings };
            }
            Ok(QuotientDim::Infinite) => format!("p={prime}: positive-dimensional solution set"),
            Err(Error::BadReduction(p)) => format!("p={p}: bad reduction"),
            Err(e) => {
                warnings.push(format!("p={prime}: {e}"));
                return TrialOutcome { record: TrialRecord { prime, seed, count: None }, warnings };
            }
        };
        if attempt + 1 == MAX_PRIME_ATTEMPTS {
            warnings.push(format!("{retry}; giving up"));
            break;
        }
        warnings.push(format!("{retry}; retrying with a fresh prime"));
        match random_prime(&mut retry_rng, prime_bits) {
            Ok(p) => prime = p,
            Err(e) => {
                warnings.push(e.to_string());
                break;
            }
        }
    }
    TrialOutcome { record: TrialRecord { prime, seed, count: None }, warnings }
}

/// Runs `run(prime, seed)` on distinct random primes, in parallel, and
/// accepts a value reported by a strict majority of the trials.
fn consensus<G>(config: &MlConfig, engine: &str, run: G) -> Result<MLReport>
where
    G: Fn(u64, u64) -> Result<QuotientDim> + Sync,
{
    let first = config.trials.max(1);
    let total = config.max_trials.max(first);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut plan: Vec<(u64, u64)> = Vec::with_capacity(total);
    let mut draws = 0;
    while plan.len() < total {
        if draws == 64 * total {
            return Err(Error::InvalidInput(format!(
                "could not draw {total} distinct {}-bit primes",
                config.prime_bits
            )));
        }
        draws += 1;
        let p = random_prime(&mut rng, config.prime_bits)?;
        if plan.iter().all(|&(q, _)| q != p) {
            plan.push((p, rng.gen()));
        }
    }

    let mut outcomes: Vec<TrialOutcome> = Vec::new();
    let mut rounds = vec![&plan[..first]];
    if total > first {
        rounds.push(&plan[first..]);
    }
    for round in rounds {
        outcomes.extend(
            round
                .par_iter()
                .map(|&(p, s)| run_trial(&run, config.prime_bits, p, s))
                .collect::<Vec<_>>(),
        );
        let mut votes: BTreeMap<u64, usize> = BTreeMap::new();
        for o in &outcomes {
            if let Some(c) = o.record.count {
                *votes.entry(c).or_default() += 1;
            }
        }
        if let Some((&value, &n)) = votes.iter().max_by_key(|(_, &n)| n) {
            if 2 * n > outcomes.len() {
                return Ok(finish(outcomes, MlValue::Count(value), n, engine));
            }
        }
    }
    let mut report = finish(outcomes, MlValue::Inconclusive, 0, engine);
    report.warnings.push("no strict majority among the trials".into());
    Ok(report)
}

fn finish(outcomes: Vec<TrialOutcome>, value: MlValue, consensus: usize, engine: &str) -> MLReport {
    let mut trials = Vec::with_capacity(outcomes.len());
    let mut warnings = Vec::new();
    for o in outcomes {
        trials.push(o.record);
        warnings.extend(o.warnings);
    }
    if let MlValue::Count(v) = value {
        for t in &trials {
            if let Some(c) = t.count.filter(|&c| c != v) {
                warnings.push(format!("p={}: outlier count {c}", t.prime));
            }
        }
    }
    MLReport { value, engine: engine.to_string(), trials, consensus, warnings }
}
