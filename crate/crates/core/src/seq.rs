//! Degree sequences, the `r^t` text notation, and the two exceptional
//! families that keep an otherwise eligible sequence from being potentially
//! (K5-P4)-graphic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// A non-increasing sequence of positive degrees `(d_1, ..., d_n)`.
///
/// Terms are not bounded by `n - 1`; whether the sequence is realizable is a
/// separate question answered by [`crate::graphicality`]. The empty sequence
/// is representable because the lay-off recursion bottoms out there, but the
/// text parser never produces it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeSequence {
    terms: Vec<u32>,
}

impl DegreeSequence {
    /// Sorts `terms` into non-increasing order. Zero terms are rejected.
    pub fn new(mut terms: Vec<u32>) -> Result<Self> {
        if terms.contains(&0) {
            return Err(Error::ZeroTerm);
        }
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { terms })
    }

    /// Builds a sequence from `(value, count)` runs, e.g. `[(4, 2), (2, 3)]`
    /// for `(4^2, 2^3)`. Runs with a zero count are skipped.
    pub fn from_runs(runs: &[(u32, usize)]) -> Result<Self> {
        let terms = runs
            .iter()
            .flat_map(|&(value, count)| std::iter::repeat_n(value, count))
            .collect();
        Self::new(terms)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<u32> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The 1-based term `d_i`.
    ///
    /// # Panics
    ///
    /// Panics if `i == 0` or `i > n`.
    pub fn d(&self, i: usize) -> u32 {
        assert!(i >= 1 && i <= self.terms.len(), "d_{i} out of range");
        self.terms[i - 1]
    }

    /// Sum of all terms.
    pub fn sigma(&self) -> u64 {
        self.terms.iter().map(|&d| u64::from(d)).sum()
    }

    /// Largest term, `m(π)`.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.first().copied()
    }

    /// Smallest term, `h(π)`.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.last().copied()
    }

    /// Maximal runs of equal terms as `(value, count)`, largest value first.
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &d in &self.terms {
            match runs.last_mut() {
                Some((value, count)) if *value == d => *count += 1,
                _ => runs.push((d, 1)),
            }
        }
        runs
    }
}

impl fmt::Display for DegreeSequence {
    /// Compressed `r^t` notation, e.g. `4^2,3^2,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (value, count)) in self.runs().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            if count == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value}^{count}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_sequence(s)
    }
}

/// Parses comma- or whitespace-separated items, each either `r` or `r^t`.
/// Input order does not matter; the result is sorted.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence, ParseError> {
    let mut terms = Vec::new();
    for token in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let (value, count) = parse_item(token)?;
        terms.extend(std::iter::repeat_n(value, count));
    }
    if terms.is_empty() {
        return Err(ParseError::Empty);
    }
    terms.sort_unstable_by(|a, b| b.cmp(a));
    Ok(DegreeSequence { terms })
}

fn parse_item(token: &str) -> Result<(u32, usize), ParseError> {
    let (base, exponent) = match token.split_once('^') {
        Some((b, e)) => (b, Some(e)),
        None => (token, None),
    };
    let value = parse_int(base, token)?;
    if value < 0 {
        return Err(ParseError::NegativeDegree(token.to_string()));
    }
    if value == 0 {
        return Err(ParseError::ZeroDegree(token.to_string()));
    }
    let count = match exponent {
        None => 1,
        Some(e) => {
            let count = parse_int(e, token)?;
            if count == 0 {
                return Err(ParseError::ZeroRepeat(token.to_string()));
            }
            if count < 0 {
                return Err(ParseError::Malformed(token.to_string()));
            }
            count
        }
    };
    let value = u32::try_from(value).map_err(|_| ParseError::Malformed(token.to_string()))?;
    let count = usize::try_from(count).map_err(|_| ParseError::Malformed(token.to_string()))?;
    Ok((value, count))
}

fn parse_int(part: &str, token: &str) -> Result<i64, ParseError> {
    let digits = part.strip_prefix('-').unwrap_or(part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Malformed(token.to_string()));
    }
    part.parse()
        .map_err(|_| ParseError::Malformed(token.to_string()))
}

/// Parameters of an exceptional family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyMatch {
    /// `(n-1, k, 2^t, 1^(n-2-t))` with `k` and `t` of different parity.
    Condition3 { k: u32, t: u32 },
    /// `(n-k, k+i, 2^i, 1^(n-i-2))`.
    Condition4 { k: u32, i: u32 },
}

impl FamilyMatch {
    /// Rebuilds the family member of length `n` these parameters describe.
    pub fn instantiate(&self, n: usize) -> Option<DegreeSequence> {
        match *self {
            FamilyMatch::Condition3 { k, t } => condition3_template(n, k, t),
            FamilyMatch::Condition4 { k, i } => condition4_template(n, k, i),
        }
    }
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyMatch::Condition3 { k, t } => write!(f, "k={k} t={t}"),
            FamilyMatch::Condition4 { k, i } => write!(f, "k={k} i={i}"),
        }
    }
}

/// `(n-1, k, 2^t, 1^(n-2-t))`, or `None` when the shape is not a valid
/// positive sequence of length `n` (no parameter range check).
pub fn condition3_template(n: usize, k: u32, t: u32) -> Option<DegreeSequence> {
    let t = t as usize;
    if n < 2 || t + 2 > n || k == 0 {
        return None;
    }
    let top = u32::try_from(n - 1).ok()?;
    DegreeSequence::from_runs(&[(top, 1), (k, 1), (2, t), (1, n - 2 - t)]).ok()
}

/// `(n-k, k+i, 2^i, 1^(n-i-2))` as a multiset, or `None` when the shape is
/// not a valid positive sequence of length `n` (no parameter range check).
pub fn condition4_template(n: usize, k: u32, i: u32) -> Option<DegreeSequence> {
    let n32 = u32::try_from(n).ok()?;
    if k >= n32 || (i as usize) + 2 > n {
        return None;
    }
    let i_len = i as usize;
    DegreeSequence::from_runs(&[(n32 - k, 1), (k + i, 1), (2, i_len), (1, n - i_len - 2)]).ok()
}

/// Whether `(n, k, t)` lies in the condition-3 parameter range.
pub fn condition3_admissible(n: usize, k: u32, t: u32) -> bool {
    let hi = n.saturating_sub(2) as u64;
    n >= 5 && (3..=hi).contains(&u64::from(k)) && (3..=hi).contains(&u64::from(t)) && k % 2 != t % 2
}

/// Whether `(n, k, i)` lies in the condition-4 parameter range.
///
/// Both `k <= floor((n-1)/2) - 1` and `3 <= i <= n - 2k` are enforced.
pub fn condition4_admissible(n: usize, k: u32, i: u32) -> bool {
    let (n, k, i) = (n as i64, i64::from(k), i64::from(i));
    let k_max = (n - 1) / 2 - 1;
    n >= 5 && k >= 1 && k <= k_max && i >= 3 && i <= n - 2 * k
}

/// All admissible condition-3 parameter pairs for length `n`, ascending.
pub fn condition3_parameters(n: usize) -> Vec<(u32, u32)> {
    let hi = n.saturating_sub(2) as u32;
    let mut out = Vec::new();
    for k in 3..=hi {
        for t in 3..=hi {
            if condition3_admissible(n, k, t) {
                out.push((k, t));
            }
        }
    }
    out
}

/// All admissible condition-4 parameter pairs for length `n`, ascending.
pub fn condition4_parameters(n: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for k in 1..n as u32 {
        for i in 3..=n as u32 {
            if condition4_admissible(n, k, i) {
                out.push((k, i));
            }
        }
    }
    out
}

/// Splits the tail after the first two terms into (#2s, #1s), or `None` if
/// anything larger than 2 appears there.
fn tail_twos_ones(seq: &DegreeSequence) -> Option<(usize, usize)> {
    let tail = &seq.terms()[2..];
    if tail.iter().any(|&d| d > 2) {
        return None;
    }
    let twos = tail.iter().filter(|&&d| d == 2).count();
    Some((twos, tail.len() - twos))
}

/// Recognizes `(n-1, k, 2^t, 1^(n-2-t))`, `3 <= k, t <= n-2`, `k ≢ t (mod 2)`.
pub fn match_condition3(seq: &DegreeSequence) -> Option<FamilyMatch> {
    let n = seq.len();
    if n < 5 || seq.d(1) as usize != n - 1 {
        return None;
    }
    let k = seq.d(2);
    let (twos, _) = tail_twos_ones(seq)?;
    let t = u32::try_from(twos).ok()?;
    condition3_admissible(n, k, t).then_some(FamilyMatch::Condition3 { k, t })
}

/// Recognizes `(n-k, k+i, 2^i, 1^(n-i-2))` as a multiset; the two leading
/// terms may appear in either order or coincide. Returns the smallest `k` on
/// ambiguity (`i` is fixed by the count of 2s).
pub fn match_condition4(seq: &DegreeSequence) -> Option<FamilyMatch> {
    let n = seq.len();
    if n < 5 {
        return None;
    }
    let (twos, _) = tail_twos_ones(seq)?;
    let i = u32::try_from(twos).ok()?;
    let n32 = u32::try_from(n).ok()?;
    let (a, b) = (seq.d(1), seq.d(2));
    // Either n-k = a and k+i = b, or n-k = b and k+i = a.
    let mut candidates = [n32.checked_sub(a), n32.checked_sub(b)];
    candidates.sort_unstable();
    candidates
        .into_iter()
        .flatten()
        .find(|&k| {
            let top = [n32 - k, k + i];
            let fits = (top[0] == a && top[1] == b) || (top[0] == b && top[1] == a);
            fits && condition4_admissible(n, k, i)
        })
        .map(|k| FamilyMatch::Condition4 { k, i })
}
