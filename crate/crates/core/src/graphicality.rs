//! Deciding whether a degree sequence is graphic, and building a realization
//! when it is.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::seq::DegreeSequence;

/// Outcome of laying off the smallest term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayOffResult {
    /// Non-increasing rearrangement of the decremented terms, zeros removed.
    pub residual: DegreeSequence,
    /// 0-based positions in the input whose degree was decremented
    /// (always `0..d_n`).
    pub reduced_positions: Vec<usize>,
}

/// Removes `d_n` and decrements `d_1, ..., d_{d_n}`, then re-sorts and drops
/// zeros.
pub fn lay_off(seq: &DegreeSequence) -> Result<LayOffResult> {
    let terms = seq.terms();
    let n = terms.len();
    let smallest = match terms.last() {
        Some(&d) => d,
        None => {
            return Err(Error::LayOffImpossible {
                smallest: 0,
                len: 0,
            })
        }
    };
    if smallest as usize > n - 1 {
        return Err(Error::LayOffImpossible { smallest, len: n });
    }
    let reduced = smallest as usize;
    let rest = terms[..n - 1]
        .iter()
        .enumerate()
        .map(|(idx, &d)| if idx < reduced { d - 1 } else { d })
        .filter(|&d| d > 0)
        .collect();
    Ok(LayOffResult {
        residual: DegreeSequence::new(rest)?,
        reduced_positions: (0..reduced).collect(),
    })
}

/// Erdős–Gallai test over an arbitrary slice of nonnegative degrees (zeros
/// allowed, any order).
pub fn erdos_gallai(degrees: &[u32]) -> bool {
    let mut d: Vec<u64> = degrees.iter().map(|&x| u64::from(x)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let total: u64 = d.iter().sum();
    if !total.is_multiple_of(2) {
        return false;
    }
    let n = d.len();
    let mut prefix = 0u64;
    for k in 1..=n {
        prefix += d[k - 1];
        let kk = k as u64;
        let tail: u64 = d[k..].iter().map(|&x| x.min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return false;
        }
    }
    true
}

pub fn is_graphic_erdos_gallai(seq: &DegreeSequence) -> bool {
    erdos_gallai(seq.terms())
}

/// Graphic iff the lay-off chain reaches the empty sequence.
pub fn is_graphic_lay_off(seq: &DegreeSequence) -> bool {
    let mut current = seq.clone();
    while !current.is_empty() {
        match lay_off(&current) {
            Ok(step) => current = step.residual,
            Err(_) => return false,
        }
    }
    true
}

/// Fast path: `Some(true)` when `m(π) <= 2`, `h(π) = 1` and `σ(π)` is even;
/// `None` whenever that hypothesis does not hold.
pub fn is_graphic_small_degree(seq: &DegreeSequence) -> Option<bool> {
    let m = seq.max_degree()?;
    let h = seq.min_degree()?;
    (m <= 2 && h == 1 && seq.sigma().is_multiple_of(2)).then_some(true)
}

/// Havel–Hakimi construction. Vertex `v` receives degree `d_{v+1}`.
///
/// Each step lays off the vertex with the smallest positive remaining demand
/// (latest index on ties) and joins it to the vertices of largest remaining
/// demand, lowest index first on ties.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<SimpleGraph> {
    if !is_graphic_erdos_gallai(seq) {
        return Err(Error::NotGraphic(seq.to_string()));
    }
    let n = seq.len();
    let mut graph = SimpleGraph::new(n);
    let mut demand: Vec<u32> = seq.terms().to_vec();
    while let Some(v) = (0..n)
        .filter(|&v| demand[v] > 0)
        .min_by(|&a, &b| demand[a].cmp(&demand[b]).then(b.cmp(&a)))
    {
        let need = demand[v] as usize;
        let mut partners: Vec<usize> = (0..n).filter(|&u| u != v && demand[u] > 0).collect();
        partners.sort_by(|&a, &b| demand[b].cmp(&demand[a]).then(a.cmp(&b)));
        if partners.len() < need {
            return Err(Error::NotGraphic(seq.to_string()));
        }
        for &u in &partners[..need] {
            graph.add_edge(v, u)?;
            demand[u] -= 1;
        }
        demand[v] = 0;
    }
    Ok(graph)
}
