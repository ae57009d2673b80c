use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{support_images, GenMeasure, Representation};
use crate::error::{Error, Result};

const CHUNK: u64 = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloEstimate {
    pub seed: u64,
    pub trials: u64,
    pub hits: u64,
    pub estimate: f64,
    pub std_error: f64,
    /// Normal-approximation 95% interval, clamped to `[0, 1]`.
    pub ci95: (f64, f64),
}

/// Estimates `μ^{⋆k}(X)` from independent walks.
///
/// Trials are split into fixed chunks and chunk `i` draws from the ChaCha8
/// stream `i` of `seed`, so the result does not depend on the thread count.
pub fn monte_carlo_hitting<R: Representation>(
    mu: &GenMeasure,
    rep: &R,
    pred: impl Fn(&R::Elem) -> bool + Sync,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is required".into()));
    }
    let images = support_images(mu, rep)?;
    let total = mu.denominator().to_u64().ok_or(Error::Overflow("measure denominator"))?;
    let mut cumulative = Vec::with_capacity(images.len());
    let mut acc = 0u64;
    for w in mu.numerators() {
        acc += w.to_u64().ok_or(Error::Overflow("measure weight"))?;
        cumulative.push(acc);
    }
    let chunks = trials.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let n = CHUNK.min(trials - c * CHUNK);
            let mut hits = 0u64;
            for _ in 0..n {
                let mut x = rep.identity();
                for _ in 0..k {
                    let r = rng.gen_range(0..total);
                    let i = cumulative.partition_point(|&b| b <= r);
                    x = rep.mul(&x, &images[i]);
                }
                if pred(&x) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    let p = hits as f64 / trials as f64;
    let se = (p * (1.0 - p) / trials as f64).sqrt();
    Ok(MonteCarloEstimate {
        seed,
        trials,
        hits,
        estimate: p,
        std_error: se,
        ci95: ((p - 1.96 * se).max(0.0), (p + 1.96 * se).min(1.0)),
    })
}
