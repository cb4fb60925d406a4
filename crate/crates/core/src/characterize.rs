//! Linear-scan decision predicates for potentially (K5-P4)- and
//! (K5-Y4)-graphic sequences, and a builder that produces a realization
//! containing the pattern.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{
    Embedding, SimpleGraph, TargetPattern, K5_MINUS_P4, K5_MINUS_Y4, PATTERN_ORDER,
};
use crate::graphicality::{erdos_gallai, is_graphic_erdos_gallai};
use crate::seq::{match_condition3, match_condition4, DegreeSequence, FamilyMatch};

/// Smallest length the characterizations cover.
pub const MIN_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "YES",
            Decision::No => "NO",
        })
    }
}

/// Identifies which condition of a characterization failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `d_2 >= 3`
    P4MinSecond,
    /// `d_5 >= 2`
    P4MinFifth,
    /// not `(n-1, k, 2^t, 1^(n-2-t))`
    P4Family3,
    /// not `(n-k, k+i, 2^i, 1^(n-i-2))`
    P4Family4,
    /// not `(3^2, 2^(n-2))` for `n = 6, 7`
    P4SmallCycle,
    /// `d_3 >= 3`
    Y4MinThird,
    /// `d_4 >= 2`
    Y4MinFourth,
    /// not `(3^6)`
    Y4Prism,
}

impl Condition {
    pub fn id(&self) -> &'static str {
        match self {
            Condition::P4MinSecond => "P4-1",
            Condition::P4MinFifth => "P4-2",
            Condition::P4Family3 => "P4-3",
            Condition::P4Family4 => "P4-4",
            Condition::P4SmallCycle => "P4-5",
            Condition::Y4MinThird => "Y4-1",
            Condition::Y4MinFourth => "Y4-2",
            Condition::Y4Prism => "Y4-3",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Result of a characterization check. A negative verdict always names the
/// first failing condition; the two family conditions also carry their
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub decision: Decision,
    pub violated: Option<Condition>,
    pub family: Option<FamilyMatch>,
}

impl Verdict {
    pub const YES: Verdict = Verdict {
        decision: Decision::Yes,
        violated: None,
        family: None,
    };

    fn no(condition: Condition) -> Self {
        Verdict {
            decision: Decision::No,
            violated: Some(condition),
            family: None,
        }
    }

    fn no_family(condition: Condition, family: FamilyMatch) -> Self {
        Verdict {
            decision: Decision::No,
            violated: Some(condition),
            family: Some(family),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.decision == Decision::Yes
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decision)?;
        if let Some(c) = self.violated {
            write!(f, " (condition {c}")?;
            if let Some(m) = self.family {
                write!(f, ", {m}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn require_graphic(seq: &DegreeSequence) -> Result<()> {
    if seq.len() < MIN_ORDER {
        return Err(Error::TooShort {
            len: seq.len(),
            min: MIN_ORDER,
        });
    }
    if !is_graphic_erdos_gallai(seq) {
        return Err(Error::NotGraphic(seq.to_string()));
    }
    Ok(())
}

fn is_three_three_twos(seq: &DegreeSequence) -> bool {
    let t = seq.terms();
    t[..2] == [3, 3] && t[2..].iter().all(|&d| d == 2)
}

/// Decides whether a graphic sequence with `n >= 5` is potentially
/// (K5-P4)-graphic. Conditions are tested in the order 1, 2, 5, 3, 4.
pub fn check_k5_p4(seq: &DegreeSequence) -> Result<Verdict> {
    require_graphic(seq)?;
    let n = seq.len();
    if seq.d(2) < 3 {
        return Ok(Verdict::no(Condition::P4MinSecond));
    }
    if seq.d(5) < 2 {
        return Ok(Verdict::no(Condition::P4MinFifth));
    }
    if (n == 6 || n == 7) && is_three_three_twos(seq) {
        return Ok(Verdict::no(Condition::P4SmallCycle));
    }
    if let Some(m) = match_condition3(seq) {
        return Ok(Verdict::no_family(Condition::P4Family3, m));
    }
    if let Some(m) = match_condition4(seq) {
        return Ok(Verdict::no_family(Condition::P4Family4, m));
    }
    Ok(Verdict::YES)
}

/// Decides whether a graphic sequence with `n >= 5` is potentially
/// (K5-Y4)-graphic.
pub fn check_k5_y4(seq: &DegreeSequence) -> Result<Verdict> {
    require_graphic(seq)?;
    if seq.d(3) < 3 {
        return Ok(Verdict::no(Condition::Y4MinThird));
    }
    if seq.d(4) < 2 {
        return Ok(Verdict::no(Condition::Y4MinFourth));
    }
    if seq.terms() == [3; 6] {
        return Ok(Verdict::no(Condition::Y4Prism));
    }
    Ok(Verdict::YES)
}

/// Dispatches to the predicate for `pattern`.
pub fn check(pattern: &TargetPattern, seq: &DegreeSequence) -> Result<Verdict> {
    if *pattern == K5_MINUS_P4 {
        check_k5_p4(seq)
    } else if *pattern == K5_MINUS_Y4 {
        check_k5_y4(seq)
    } else {
        Err(Error::NoPredicate(pattern.name.to_string()))
    }
}

/// A realization together with the pattern copy it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternRealization {
    pub graph: SimpleGraph,
    pub embedding: Embedding,
}

/// Builds a realization of `seq` that contains `pattern`.
///
/// The pattern is first placed on the five largest-degree vertices; the
/// remaining degree demand is then filled in by backtracking. Other
/// labelings of the pattern on those vertices are tried before other vertex
/// sets.
pub fn realize_with_pattern(
    seq: &DegreeSequence,
    pattern: &TargetPattern,
) -> Result<PatternRealization> {
    let verdict = check(pattern, seq)?;
    if !verdict.is_yes() {
        return Err(Error::NegativeVerdict(verdict));
    }
    build_with_pattern(seq, pattern).ok_or_else(|| Error::RealizationFailed(seq.to_string()))
}

/// The builder behind [`realize_with_pattern`], without the verdict gate.
/// Returns `None` if no realization contains the pattern.
pub fn build_with_pattern(
    seq: &DegreeSequence,
    pattern: &TargetPattern,
) -> Option<PatternRealization> {
    let n = seq.len();
    if n < PATTERN_ORDER || !is_graphic_erdos_gallai(seq) {
        return None;
    }
    let degree = seq.terms();
    let pdeg = pattern.degrees();
    let mut pattern_order: Vec<usize> = (0..PATTERN_ORDER).collect();
    pattern_order.sort_by(|&a, &b| pdeg[b].cmp(&pdeg[a]).then(a.cmp(&b)));
    let slot_orders = permutations(PATTERN_ORDER);

    for subset in five_subsets(n) {
        let mut tried: HashSet<Vec<(usize, usize)>> = HashSet::new();
        for slots in &slot_orders {
            let mut map = [0usize; PATTERN_ORDER];
            for (j, &p) in pattern_order.iter().enumerate() {
                map[p] = subset[slots[j]];
            }
            if (0..PATTERN_ORDER).any(|p| pdeg[p] > degree[map[p]]) {
                continue;
            }
            let embedding = Embedding { map };
            let mut edges: Vec<(usize, usize)> = embedding.mapped_edges(pattern).collect();
            edges.sort_unstable();
            if !tried.insert(edges.clone()) {
                continue;
            }
            let mut graph = SimpleGraph::new(n);
            for &(u, v) in &edges {
                graph.insert_unchecked(u, v);
            }
            let mut demand: Vec<u32> = (0..n).map(|v| degree[v] - graph.degree(v)).collect();
            if complete_demand(&mut graph, &mut demand) {
                return Some(PatternRealization { graph, embedding });
            }
        }
    }
    None
}

/// `{0,1,2,3,4}` first, then every other 5-subset of `0..n` in
/// lexicographic order.
fn five_subsets(n: usize) -> impl Iterator<Item = [usize; PATTERN_ORDER]> {
    let mut current: Option<[usize; PATTERN_ORDER]> =
        (n >= PATTERN_ORDER).then_some([0, 1, 2, 3, 4]);
    std::iter::from_fn(move || {
        let out = current?;
        let mut next = out;
        let mut pos = PATTERN_ORDER;
        current = loop {
            if pos == 0 {
                break None;
            }
            pos -= 1;
            if next[pos] < n - PATTERN_ORDER + pos {
                next[pos] += 1;
                for j in pos + 1..PATTERN_ORDER {
                    next[j] = next[j - 1] + 1;
                }
                break Some(next);
            }
        };
        Some(out)
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Adds edges to `graph` so that every vertex `v` gains exactly `demand[v]`
/// new neighbors. On failure `graph` and `demand` are left unchanged.
fn complete_demand(graph: &mut SimpleGraph, demand: &mut [u32]) -> bool {
    let Some(u) = (0..demand.len())
        .filter(|&v| demand[v] > 0)
        .max_by(|&a, &b| demand[a].cmp(&demand[b]).then(b.cmp(&a)))
    else {
        return true;
    };
    if !erdos_gallai(demand) {
        return false;
    }
    let need = demand[u] as usize;
    let mut partners: Vec<usize> = (0..demand.len())
        .filter(|&w| w != u && demand[w] > 0 && !graph.has_edge(u, w))
        .collect();
    if partners.len() < need {
        return false;
    }
    partners.sort_by(|&a, &b| demand[b].cmp(&demand[a]).then(a.cmp(&b)));

    let mut chosen: Vec<usize> = (0..need).collect();
    loop {
        for &c in &chosen {
            graph.insert_unchecked(u, partners[c]);
            demand[partners[c]] -= 1;
        }
        let saved = demand[u];
        demand[u] = 0;
        if complete_demand(graph, demand) {
            return true;
        }
        demand[u] = saved;
        for &c in &chosen {
            graph.delete_unchecked(u, partners[c]);
            demand[partners[c]] += 1;
        }
        if !next_combination(&mut chosen, partners.len()) {
            return false;
        }
    }
}

fn next_combination(chosen: &mut [usize], n: usize) -> bool {
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

/// Subtracts the pattern's degree profile from the five largest terms
/// (largest to largest) and re-sorts. Zeros are kept.
pub fn residual_after_pattern(seq: &DegreeSequence, pattern: &TargetPattern) -> Result<Vec<u32>> {
    if seq.len() < PATTERN_ORDER {
        return Err(Error::TooShort {
            len: seq.len(),
            min: PATTERN_ORDER,
        });
    }
    let mut out = seq.terms().to_vec();
    for (position, need) in pattern.degree_profile().into_iter().enumerate() {
        let available = out[position];
        out[position] = available.checked_sub(need).ok_or(Error::ResidualNegative {
            position,
            needed: need,
            available,
        })?;
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Edge-cut surplus behind the necessity of condition 4: the degree the two
/// large vertices must send across the cut, minus what the small side can
/// absorb. Always 2 for admissible parameters.
pub fn condition4_cut_defect(n: i64, k: i64, i: i64) -> i64 {
    ((n - k - 3) + (k + i - 3)) - (2 * (i - 3) + (n - i - 2))
}
