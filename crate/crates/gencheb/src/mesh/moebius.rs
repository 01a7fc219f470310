use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::frieze::cheb_value;
use super::shape::{moebius_period, MOEBIUS_GLIDE};
use crate::chebyshev;
use crate::error::{Error, Result};
use crate::poly::{rational_to_string, Rational, VarId};

/// Outcome of the randomized Möbius-band verification.
#[derive(Clone, Debug, Serialize)]
pub struct MoebiusReport {
    pub r: u32,
    pub trials: u32,
    pub passed: u32,
    /// Samples rejected because a propagation step divided by zero; each is
    /// resampled and counted here.
    pub degenerate_resamples: u32,
    /// Glide constant of the band identification used by the checks.
    pub gluing_constant: i32,
    /// Verified period of the quasi-simple label sequence.
    pub period: u32,
    pub failures: Vec<String>,
    pub rng_seed: u64,
}

impl MoebiusReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passed == self.trials
    }
}

/// Randomized check of the Möbius-band presentation: samples rational seeds
/// `c_0 .. c_{r-1}` with `P_r(c) != 0`, solves the closure value
/// `c_r = (P_{r-1}(c_0..c_{r-2}) + 1) / P_r(c_0..c_{r-1})`, extends the
/// quasi-simple sequence by the frieze recurrence, and verifies that
///
/// * every window of `r + 1` consecutive labels satisfies
///   `P_{r+1}(window) = 1` (evaluated on the symbolic polynomial),
/// * the sequence is `(r + 3)`-periodic,
/// * row `n` equals row `r + 1 - n` shifted by `n + 1` — the glide
///   identification with constant [`MOEBIUS_GLIDE`].
///
/// Degenerate samples (zero divisors during propagation) are resampled and
/// counted.
pub fn moebius_numeric_check(r: u32, trials: u32, rng_seed: u64) -> MoebiusReport {
    assert!(r >= 1 && trials >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let period = moebius_period(r);
    let relation = chebyshev::recurrence(r + 1);
    let mut report = MoebiusReport {
        r,
        trials,
        passed: 0,
        degenerate_resamples: 0,
        gluing_constant: MOEBIUS_GLIDE,
        period,
        failures: Vec::new(),
        rng_seed,
    };
    for trial in 0..trials {
        let seq = loop {
            let seeds = sample_seeds(r, &mut rng);
            match extend_sequence(r, &seeds, (2 * period + r + 1) as usize) {
                Ok(seq) => break seq,
                Err(Error::DegenerateSample) => report.degenerate_resamples += 1,
                Err(e) => {
                    report.failures.push(format!("trial {trial}: {e}"));
                    break Vec::new();
                }
            }
        };
        if seq.is_empty() {
            continue;
        }
        let mut ok = true;
        // every window of r+1 consecutive labels satisfies P_{r+1} = 1
        for start in 0..=(seq.len() - (r as usize + 1)) {
            let window = &seq[start..start + r as usize + 1];
            let point: BTreeMap<VarId, Rational> = (0..)
                .zip(window.iter().cloned())
                .map(|(j, c)| (VarId::t(j), c))
                .collect();
            let value = relation.eval_rational(&point).expect("full assignment");
            if !value.is_one() {
                ok = false;
                report.failures.push(format!(
                    "trial {trial}: window at {start} gives P_{}(window) = {}",
                    r + 1,
                    rational_to_string(&value)
                ));
            }
        }
        // period r + 3
        for idx in 0..(seq.len() - period as usize) {
            if seq[idx] != seq[idx + period as usize] {
                ok = false;
                report
                    .failures
                    .push(format!("trial {trial}: sequence not {period}-periodic at {idx}"));
                break;
            }
        }
        // glide identification: P_n(c_i..) = P_{r+1-n}(c_{i+n+g-1}..)
        'glide: for n in 1..=r {
            for i in 0..period as usize {
                let lhs = cheb_value(&seq[i..i + n as usize]);
                let shift = i + n as usize + (MOEBIUS_GLIDE - 1) as usize;
                let rhs = cheb_value(&seq[shift..shift + (r + 1 - n) as usize]);
                if lhs != rhs {
                    ok = false;
                    report.failures.push(format!(
                        "trial {trial}: glide identification fails at (i={i}, n={n})"
                    ));
                    break 'glide;
                }
            }
        }
        if ok {
            report.passed += 1;
        }
    }
    report
}

fn sample_seeds(r: u32, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..r)
        .map(|_| {
            let numer = rng.gen_range(1..=12i64);
            let denom = rng.gen_range(1..=12i64);
            Rational::new(BigInt::from(numer), BigInt::from(denom))
        })
        .collect()
}

/// Extends seeds to `len` labels with
/// `c_s = (1 + P_{r-1}(c_{s-r}..c_{s-2})) / P_r(c_{s-r}..c_{s-1})`.
fn extend_sequence(r: u32, seeds: &[Rational], len: usize) -> Result<Vec<Rational>> {
    let mut seq = seeds.to_vec();
    while seq.len() < len {
        let s = seq.len();
        let window = &seq[s - r as usize..];
        let denom = cheb_value(window);
        if denom.is_zero() {
            return Err(Error::DegenerateSample);
        }
        let numer = cheb_value(&window[..r as usize - 1]) + Rational::one();
        seq.push(numer / denom);
    }
    Ok(seq)
}
