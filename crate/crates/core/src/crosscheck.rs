//! Sweeps every graphic sequence of one length and compares the
//! characterization predicate with the exhaustive oracle.

use rayon::prelude::*;

use crate::characterize::{check, Verdict, MIN_ORDER};
use crate::error::{Error, Result};
use crate::graph::TargetPattern;
use crate::oracle::{enumerate_graphic_sequences, oracle_potentially, EnumerationBudget};
use crate::seq::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub sequence: DegreeSequence,
    pub predicate: Verdict,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub pattern: TargetPattern,
    pub n: usize,
    pub tested: usize,
    /// Predicate tallies.
    pub yes: usize,
    pub no: usize,
    /// In generation order (descending lexicographic).
    pub mismatches: Vec<Mismatch>,
}

impl CrosscheckReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn crosscheck(
    pattern: &TargetPattern,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<CrosscheckReport> {
    if n < MIN_ORDER {
        return Err(Error::TooShort {
            len: n,
            min: MIN_ORDER,
        });
    }
    if n > budget.ceiling {
        return Err(Error::ExceedsCeiling {
            n,
            ceiling: budget.ceiling,
        });
    }
    let rows: Vec<(Verdict, bool, DegreeSequence)> = enumerate_graphic_sequences(n)
        .into_par_iter()
        .map(|seq| {
            let verdict = check(pattern, &seq)?;
            let oracle = oracle_potentially(&seq, pattern, budget)?;
            Ok((verdict, oracle, seq))
        })
        .collect::<Result<_>>()?;

    let yes = rows.iter().filter(|(v, _, _)| v.is_yes()).count();
    let mismatches = rows
        .iter()
        .filter(|(v, oracle, _)| v.is_yes() != *oracle)
        .map(|(v, oracle, seq)| Mismatch {
            sequence: seq.clone(),
            predicate: *v,
            oracle: *oracle,
        })
        .collect();
    Ok(CrosscheckReport {
        pattern: *pattern,
        n,
        tested: rows.len(),
        yes,
        no: rows.len() - yes,
        mismatches,
    })
}
