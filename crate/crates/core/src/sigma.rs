//! The extremal threshold σ(H, n): the least even integer such that every
//! graphic sequence of length `n` with at least that sum is potentially
//! H-graphic.

use rayon::prelude::*;

use crate::characterize::{check, MIN_ORDER};
use crate::error::{Error, Result};
use crate::graph::TargetPattern;
use crate::oracle::{enumerate_graphic_sequences, oracle_potentially, EnumerationBudget};
use crate::seq::DegreeSequence;

/// How each sequence is classified during a threshold scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decider {
    /// The closed-form characterization.
    Predicate,
    /// Exhaustive realization search.
    Oracle(EnumerationBudget),
}

impl Decider {
    /// Whether `seq` is potentially `pattern`-graphic according to this
    /// decider.
    pub fn decide(&self, pattern: &TargetPattern, seq: &DegreeSequence) -> Result<bool> {
        match self {
            Decider::Predicate => Ok(check(pattern, seq)?.is_yes()),
            Decider::Oracle(budget) => oracle_potentially(seq, pattern, budget),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaResult {
    pub n: usize,
    pub pattern: TargetPattern,
    /// σ(H, n); always even.
    pub sigma_value: u64,
    /// A negative sequence of maximum sum (lexicographically largest among
    /// those), so `sigma_value == extremal_witness.sigma() + 2`.
    pub extremal_witness: DegreeSequence,
}

/// `((n-1)^2, 2^(n-2))`, of sum `4n - 6`, which is potentially graphic for
/// neither shipped pattern.
pub fn lower_bound_witness(_pattern: &TargetPattern, n: usize) -> Result<DegreeSequence> {
    if n < MIN_ORDER {
        return Err(Error::TooShort {
            len: n,
            min: MIN_ORDER,
        });
    }
    DegreeSequence::from_runs(&[((n - 1) as u32, 2), (2, n - 2)])
}

/// Scans every graphic sequence of length `n` and returns the largest sum
/// of a negative one, plus 2.
pub fn compute_sigma(pattern: &TargetPattern, n: usize, decider: Decider) -> Result<SigmaResult> {
    if n < MIN_ORDER {
        return Err(Error::TooShort {
            len: n,
            min: MIN_ORDER,
        });
    }
    if let Decider::Oracle(budget) = decider {
        if n > budget.ceiling {
            return Err(Error::ExceedsCeiling {
                n,
                ceiling: budget.ceiling,
            });
        }
    }
    let sequences = enumerate_graphic_sequences(n);
    let negatives: Vec<Option<(u64, DegreeSequence)>> = sequences
        .into_par_iter()
        .map(|seq| {
            let positive = decider.decide(pattern, &seq)?;
            Ok((!positive).then(|| (seq.sigma(), seq)))
        })
        .collect::<Result<_>>()?;
    let (best, witness) = negatives
        .into_iter()
        .flatten()
        .max()
        .ok_or(Error::NoNegativeSequence(n))?;
    Ok(SigmaResult {
        n,
        pattern: *pattern,
        sigma_value: best + 2,
        extremal_witness: witness,
    })
}
