//! Brute-force ground truth: every labeled realization of a sequence, and
//! every graphic sequence of a given length.
//!
//! Nothing here consults the characterization predicates, so the results can
//! be used to cross-validate them.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{find_embedding, SimpleGraph, TargetPattern};
use crate::graphicality::{erdos_gallai, is_graphic_erdos_gallai};
use crate::seq::DegreeSequence;

/// Default hard ceiling on the number of vertices for enumeration.
pub const DEFAULT_CEILING: usize = 10;

/// Limits for a realization search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Cap on search nodes (neighbor-set choices tried); `None` is unbounded.
    pub max_nodes: Option<u64>,
    /// Stop at the first pattern-containing realization.
    pub short_circuit: bool,
    /// Largest sequence length accepted.
    pub ceiling: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_nodes: None,
            short_circuit: true,
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl EnumerationBudget {
    pub fn with_max_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = Some(max_nodes.max(1));
        self
    }

    pub fn exhaustive(mut self) -> Self {
        self.short_circuit = false;
        self
    }
}

/// Bookkeeping from one enumeration run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub nodes: u64,
    pub realizations: u64,
    /// The visitor asked to stop early.
    pub stopped: bool,
}

/// Calls `visit` once for every labeled simple graph on `0..n` in which
/// vertex `v` has degree `d_{v+1}`.
///
/// Vertices are completed in index order; each vertex picks its remaining
/// neighbors among later vertices in lexicographic order. After each
/// vertex the demands of the later vertices, which share no decided edges
/// yet, must pass Erdős–Gallai, so the search never enters a dead branch.
pub fn visit_realizations<F>(
    seq: &DegreeSequence,
    budget: &EnumerationBudget,
    mut visit: F,
) -> Result<EnumerationStats>
where
    F: FnMut(&SimpleGraph) -> ControlFlow<()>,
{
    let n = seq.len();
    if n > budget.ceiling {
        return Err(Error::ExceedsCeiling {
            n,
            ceiling: budget.ceiling,
        });
    }
    if !is_graphic_erdos_gallai(seq) {
        return Err(Error::NotGraphic(seq.to_string()));
    }
    let mut walk = Walk {
        graph: SimpleGraph::new(n),
        demand: seq.terms().to_vec(),
        stats: EnumerationStats::default(),
        max_nodes: budget.max_nodes,
        visit: &mut visit,
    };
    match walk.vertex(0) {
        Ok(_) => Ok(walk.stats),
        Err(explored) => Err(Error::BudgetExhausted { explored }),
    }
}

struct Walk<'a, F> {
    graph: SimpleGraph,
    demand: Vec<u32>,
    stats: EnumerationStats,
    max_nodes: Option<u64>,
    visit: &'a mut F,
}

impl<F> Walk<'_, F>
where
    F: FnMut(&SimpleGraph) -> ControlFlow<()>,
{
    /// `Err` carries the node count at exhaustion; `Ok(Break)` means the
    /// visitor stopped the walk.
    fn vertex(&mut self, u: usize) -> Result<ControlFlow<()>, u64> {
        let n = self.demand.len();
        if u == n {
            self.stats.realizations += 1;
            let flow = (self.visit)(&self.graph);
            if flow.is_break() {
                self.stats.stopped = true;
            }
            return Ok(flow);
        }
        let need = self.demand[u] as usize;
        let later: Vec<usize> = (u + 1..n).filter(|&w| self.demand[w] > 0).collect();
        if later.len() < need {
            return Ok(ControlFlow::Continue(()));
        }
        let mut chosen: Vec<usize> = (0..need).collect();
        loop {
            self.stats.nodes += 1;
            if self.max_nodes.is_some_and(|cap| self.stats.nodes > cap) {
                return Err(self.stats.nodes - 1);
            }
            for &c in &chosen {
                let w = later[c];
                self.graph.insert_unchecked(u, w);
                self.demand[w] -= 1;
            }
            let feasible = erdos_gallai(&self.demand[u + 1..]);
            let flow = if feasible {
                let saved = self.demand[u];
                self.demand[u] = 0;
                let flow = self.vertex(u + 1);
                self.demand[u] = saved;
                flow
            } else {
                Ok(ControlFlow::Continue(()))
            };
            for &c in &chosen {
                let w = later[c];
                self.graph.delete_unchecked(u, w);
                self.demand[w] += 1;
            }
            if flow?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
            if !advance(&mut chosen, later.len()) {
                return Ok(ControlFlow::Continue(()));
            }
        }
    }
}

fn advance(chosen: &mut [usize], n: usize) -> bool {
    let k = chosen.len();
    let mut pos = k;
    while pos > 0 {
        pos -= 1;
        if chosen[pos] < n - k + pos {
            chosen[pos] += 1;
            for j in pos + 1..k {
                chosen[j] = chosen[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every labeled realization of `seq`, in generation order.
pub fn enumerate_realizations(
    seq: &DegreeSequence,
    budget: &EnumerationBudget,
) -> Result<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    visit_realizations(seq, budget, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Whether some realization of `seq` contains `pattern`, found by
/// exhaustive enumeration. Budget exhaustion is an error, never `false`.
pub fn oracle_potentially(
    seq: &DegreeSequence,
    pattern: &TargetPattern,
    budget: &EnumerationBudget,
) -> Result<bool> {
    let mut found = false;
    visit_realizations(seq, budget, |g| {
        if find_embedding(g, pattern, None).is_some() {
            found = true;
            if budget.short_circuit {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// Every graphic sequence of length `n` without zero terms, in descending
/// lexicographic order.
pub fn enumerate_graphic_sequences(n: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut prefix = Vec::with_capacity(n);
    let top = (n - 1) as u32;
    descend(n, top, &mut prefix, &mut out);
    out
}

fn descend(n: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<DegreeSequence>) {
    if prefix.len() == n {
        if erdos_gallai(prefix) {
            out.push(DegreeSequence::new(prefix.clone()).expect("terms are positive"));
        }
        return;
    }
    for d in (1..=cap).rev() {
        prefix.push(d);
        descend(n, d, prefix, out);
        prefix.pop();
    }
}
