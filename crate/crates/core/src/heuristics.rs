//! Distribution of the rank of norm kernels in unramified degree-p
//! extensions of imaginary quadratic fields.
//!
//! The rank is always even and positive. The closed form
//! `P(rk = 2k) = (1 - p^-2) p^(-2(k-1))` is the reference; the Monte Carlo
//! samplers are plausibility checks only.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeuristicError {
    #[error("{0} is not an odd prime")]
    BadPrime(u64),
    #[error("truncation must be at least 1")]
    ZeroTruncation,
    #[error("at least one trial is required")]
    ZeroTrials,
    #[error("distributions for different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),
    #[error("distributions truncated at different ranks (k <= {0} and k <= {1})")]
    TruncationMismatch(usize, usize),
}

/// Probabilities of `rk = 2k` for `k = 1..=kmax`; the remaining mass
/// belongs to `k > kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDistribution {
    prime: u64,
    probabilities: Vec<BigRational>,
}

impl RankDistribution {
    pub fn new(prime: u64, probabilities: Vec<BigRational>) -> Result<Self, HeuristicError> {
        if probabilities.is_empty() {
            return Err(HeuristicError::ZeroTruncation);
        }
        assert!(
            probabilities.iter().all(|q| !q.is_negative() && *q <= BigRational::one()),
            "probabilities lie in [0, 1]"
        );
        Ok(RankDistribution { prime, probabilities })
    }

    /// Decimal data, e.g. four-place table entries, as exact rationals.
    pub fn from_decimals(prime: u64, values: &[&str]) -> Result<Self, HeuristicError> {
        let probs = values.iter().map(|v| parse_decimal(v)).collect();
        RankDistribution::new(prime, probs)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn kmax(&self) -> usize {
        self.probabilities.len()
    }

    /// `P(rk = 2k)`, zero beyond the truncation.
    pub fn probability(&self, k: usize) -> BigRational {
        assert!(k >= 1, "ranks are positive");
        self.probabilities.get(k - 1).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn probabilities(&self) -> &[BigRational] {
        &self.probabilities
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.probabilities.iter().map(to_f64).collect()
    }

    pub fn total_mass(&self) -> BigRational {
        self.probabilities.iter().fold(BigRational::zero(), |a, b| a + b)
    }

    /// Mass assigned to `k > kmax`.
    pub fn residual_mass(&self) -> BigRational {
        BigRational::one() - self.total_mass()
    }

    /// Entries rounded to `places` decimals.
    pub fn rounded(&self, places: u32) -> Vec<String> {
        self.probabilities.iter().map(|q| format_decimal(q, places)).collect()
    }
}

impl fmt::Display for RankDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}: ", self.prime)?;
        let parts: Vec<String> = self
            .rounded(4)
            .into_iter()
            .enumerate()
            .map(|(i, v)| format!("rk {}: {v}", 2 * (i + 1)))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

pub(crate) fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn parse_decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32))
}

/// Round half up to `places` decimals.
pub fn format_decimal(q: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = q * BigRational::from_integer(scale.clone());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let int = &rounded / &scale;
    let frac = &rounded % &scale;
    if places == 0 {
        return int.to_string();
    }
    format!("{int}.{:0>width$}", frac.to_string(), width = places as usize)
}

fn check_prime(p: u64) -> Result<(), HeuristicError> {
    if p < 3 || !crate::quadform::is_prime(p as i64) {
        return Err(HeuristicError::BadPrime(p));
    }
    Ok(())
}

/// `P(rk = 2k) = (1 - p^-2) p^(-2(k-1))` for `k = 1..=kmax`.
pub fn predicted_rank_distribution(p: u64, kmax: usize) -> Result<RankDistribution, HeuristicError> {
    check_prime(p)?;
    if kmax == 0 {
        return Err(HeuristicError::ZeroTruncation);
    }
    let q = BigRational::new(BigInt::one(), BigInt::from(p * p));
    let mut probs = Vec::with_capacity(kmax);
    let mut term = BigRational::one() - &q;
    for _ in 0..kmax {
        probs.push(term.clone());
        term *= &q;
    }
    RankDistribution::new(p, probs)
}

/// Random model behind the sampler.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplerModel {
    /// Rank grows by 2 per layer; a further layer is added while a random
    /// pair in `(Z/p^2)^2` reduces to zero mod p.
    Layered,
    /// Cokernel p-rank of a random `size x size` matrix over `Z/p^2`,
    /// redrawn until the rank is even and positive.
    Cokernel { size: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonteCarloConfig {
    pub model: SamplerModel,
    pub kmax: usize,
}

impl Default for MonteCarloConfig {
    fn default() -> Self {
        MonteCarloConfig {
            model: SamplerModel::Layered,
            kmax: 3,
        }
    }
}

/// Counts of sampled `k = rk/2`; index `kmax` collects `k > kmax`.
fn sample_counts<R: Rng>(p: u64, trials: u64, cfg: &MonteCarloConfig, rng: &mut R) -> Vec<u64> {
    let mut counts = vec![0u64; cfg.kmax + 1];
    for _ in 0..trials {
        let k = match cfg.model {
            SamplerModel::Layered => sample_layered(p, rng),
            SamplerModel::Cokernel { size } => sample_cokernel(p, size, rng),
        };
        counts[(k - 1).min(cfg.kmax)] += 1;
    }
    counts
}

fn sample_layered<R: Rng>(p: u64, rng: &mut R) -> usize {
    let q = p * p;
    let mut k = 1;
    loop {
        let v = [rng.gen_range(0..q), rng.gen_range(0..q)];
        if v.iter().any(|&x| x % p != 0) {
            return k;
        }
        k += 1;
    }
}

fn sample_cokernel<R: Rng>(p: u64, size: usize, rng: &mut R) -> usize {
    let q = p * p;
    loop {
        // the cokernel p-rank only depends on the reduction mod p
        let mut m: Vec<Vec<u64>> = (0..size)
            .map(|_| (0..size).map(|_| rng.gen_range(0..q) % p).collect())
            .collect();
        let r = size - rank_mod_p(&mut m, p);
        if r > 0 && r.is_multiple_of(2) {
            return r / 2;
        }
    }
}

fn rank_mod_p(m: &mut [Vec<u64>], p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = (0..p - 2).fold(1, |acc, _| acc * m[rank][c] % p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..cols {
                    m[r][j] = (m[r][j] + p * p - f * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn counts_to_distribution(p: u64, counts: &[u64], trials: u64) -> Result<RankDistribution, HeuristicError> {
    let kmax = counts.len() - 1;
    let probs = counts[..kmax]
        .iter()
        .map(|&c| BigRational::new(BigInt::from(c), BigInt::from(trials)))
        .collect();
    RankDistribution::new(p, probs)
}

/// Empirical distribution from `trials` draws of one ChaCha8 stream.
pub fn monte_carlo_rank_distribution(
    p: u64,
    trials: u64,
    seed: u64,
    cfg: &MonteCarloConfig,
) -> Result<RankDistribution, HeuristicError> {
    check_prime(p)?;
    if trials == 0 {
        return Err(HeuristicError::ZeroTrials);
    }
    if cfg.kmax == 0 {
        return Err(HeuristicError::ZeroTruncation);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts = sample_counts(p, trials, cfg, &mut rng);
    counts_to_distribution(p, &counts, trials)
}

/// As [`monte_carlo_rank_distribution`], with trials split over `streams`
/// independent ChaCha8 streams of the same seed and counts summed.
/// Reproducible for fixed `(seed, streams)`.
pub fn monte_carlo_rank_distribution_parallel(
    p: u64,
    trials: u64,
    seed: u64,
    streams: u64,
    cfg: &MonteCarloConfig,
) -> Result<RankDistribution, HeuristicError> {
    check_prime(p)?;
    if trials == 0 {
        return Err(HeuristicError::ZeroTrials);
    }
    if cfg.kmax == 0 {
        return Err(HeuristicError::ZeroTruncation);
    }
    let streams = streams.clamp(1, trials);
    let counts = (0..streams)
        .into_par_iter()
        .map(|s| {
            let share = trials / streams + u64::from(s < trials % streams);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(s);
            sample_counts(p, share, cfg, &mut rng)
        })
        .reduce(
            || vec![0; cfg.kmax + 1],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    counts_to_distribution(p, &counts, trials)
}

/// Total-variation distance, with the mass beyond the truncation treated as
/// one extra outcome: `(sum_k |a_k - b_k| + |res_a - res_b|) / 2`.
pub fn compare_distributions(a: &RankDistribution, b: &RankDistribution) -> Result<BigRational, HeuristicError> {
    if a.prime != b.prime {
        return Err(HeuristicError::PrimeMismatch(a.prime, b.prime));
    }
    if a.kmax() != b.kmax() {
        return Err(HeuristicError::TruncationMismatch(a.kmax(), b.kmax()));
    }
    let mut sum = (a.residual_mass() - b.residual_mass()).abs();
    for (x, y) in a.probabilities.iter().zip(&b.probabilities) {
        sum += (x - y).abs();
    }
    Ok(sum / BigRational::from_integer(BigInt::from(2)))
}

/// Relative frequencies of `rk = 2, 4, 6` over 12484 extensions with p = 3.
pub fn published_empirical_p3() -> RankDistribution {
    RankDistribution::from_decimals(3, &["0.8992", "0.0950", "0.0071"]).expect("three entries")
}

/// The published heuristic column for p = 3.
pub fn published_heuristic_p3() -> RankDistribution {
    RankDistribution::from_decimals(3, &["0.8889", "0.0989", "0.0110"]).expect("three entries")
}
