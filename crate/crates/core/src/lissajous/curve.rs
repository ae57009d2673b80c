//! The curve `θ ↦ (e^{iNθ}, sin qθ, cos(pθ + α))` and the braid read off it.

use std::f64::consts::PI;

use num_integer::Integer;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

const MAX_RETRIES: usize = 8;
const PHASE_STEP: f64 = 0.0731;
const Z_TOLERANCE: f64 = 1e-9;

/// Points `((2 + sin qθ) cos Nθ, (2 + sin qθ) sin Nθ, cos(pθ + α))` at
/// `samples` equally spaced `θ ∈ [0, 2π)`.
pub fn sample_curve(n: u64, q: u64, p: u64, alpha: f64, samples: usize) -> Vec<[f64; 3]> {
    (0..samples)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / samples as f64;
            let r = 2.0 + (q as f64 * t).sin();
            [r * (n as f64 * t).cos(), r * (n as f64 * t).sin(), (p as f64 * t + alpha).cos()]
        })
        .collect()
}

/// Reads the `N`-strand braid of the curve over one turn of the base circle.
///
/// At base angle `φ` the strands sit at `θ_j = (φ + 2πj)/N` and are ordered
/// by `sin qθ_j`. Two strands swap exactly when `q(θ_a + θ_b) ≡ π (mod 2π)`;
/// the crossing sign compares `cos(pθ + α)` of the two strands. When two
/// heights nearly agree at a crossing, `α` is shifted and the reading retried.
pub fn braid_from_parametrization(n: u64, q: u64, p: u64, alpha: f64) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::TooFewStrands(n as usize));
    }
    if n.gcd(&q) != 1 || n.gcd(&p) != 1 || q == 0 {
        return Err(Error::Precondition(format!("gcd(N, q) = gcd(N, p) = 1 fails for ({n}, {q}, {p})")));
    }
    let mut last_bad = 0;
    for attempt in 0..MAX_RETRIES {
        match read_braid(n, q, p, alpha + PHASE_STEP * attempt as f64) {
            Ok(w) => return Ok(w),
            Err(Error::Degenerate(k)) => last_bad = k,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate(last_bad))
}

fn read_braid(n: u64, q: u64, p: u64, alpha: f64) -> Result<BraidWord> {
    let nf = n as f64;
    let qf = q as f64;
    let theta = |j: usize, phi: f64| (phi + 2.0 * PI * j as f64) / nf;
    let y = |j: usize, phi: f64| (qf * theta(j, phi)).sin();
    let z = |j: usize, phi: f64| (p as f64 * theta(j, phi) + alpha).cos();
    let strands = n as usize;

    let mut events: Vec<f64> = Vec::new();
    for a in 0..strands {
        for b in a + 1..strands {
            for k in 0..4 * q {
                let phi = (PI * nf * (2 * k + 1) as f64 / (2.0 * qf) - PI * (a + b) as f64).rem_euclid(2.0 * PI);
                events.push(phi);
            }
        }
    }
    events.sort_by(|x, y| x.total_cmp(y));
    events.dedup_by(|x, y| (*x - *y).abs() < 1e-9);

    let gap = events.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    let eps = (gap / 4.0).min(1e-4);
    let mut letters = Vec::with_capacity(events.len());
    for (idx, &phi) in events.iter().enumerate() {
        let (_, a, b) = (0..strands)
            .flat_map(|a| (a + 1..strands).map(move |b| (a, b)))
            .map(|(a, b)| ((y(a, phi) - y(b, phi)).abs(), a, b))
            .min_by(|x, y| x.0.total_cmp(&y.0))
            .expect("at least two strands");
        let mut before: Vec<usize> = (0..strands).collect();
        before.sort_by(|&i, &j| y(i, phi - eps).total_cmp(&y(j, phi - eps)));
        let ia = before.iter().position(|&s| s == a).expect("present");
        let ib = before.iter().position(|&s| s == b).expect("present");
        if ia.abs_diff(ib) != 1 {
            return Err(Error::Degenerate(idx));
        }
        let lo = ia.min(ib);
        let (up, other) = (before[lo], before[lo + 1]);
        let dz = z(up, phi) - z(other, phi);
        if dz.abs() < Z_TOLERANCE {
            return Err(Error::Degenerate(idx));
        }
        let g = (lo + 1) as i32;
        letters.push(if dz > 0.0 { g } else { -g });
    }
    BraidWord::new(strands, letters)
}
