use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;

use potential_graphic::graph::PATTERN_ORDER;
use potential_graphic::oracle::EnumerationBudget;
use potential_graphic::seq::{
    condition3_parameters, condition3_template, condition4_parameters, condition4_template,
};
use potential_graphic::*;

fn seq_strategy(max_len: usize, max_term: u32) -> impl Strategy<Value = DegreeSequence> {
    prop::collection::vec(1..=max_term, 1..=max_len)
        .prop_map(|terms| DegreeSequence::new(terms).unwrap())
}

fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Tries all injective maps of the pattern into the host.
fn brute_force_contains(host: &SimpleGraph, pattern: &TargetPattern) -> bool {
    let n = host.vertex_count();
    let mut map = [0usize; PATTERN_ORDER];
    fn go(
        depth: usize,
        n: usize,
        map: &mut [usize; PATTERN_ORDER],
        host: &SimpleGraph,
        pattern: &TargetPattern,
    ) -> bool {
        if depth == PATTERN_ORDER {
            return pattern
                .edges
                .iter()
                .all(|&(a, b)| host.has_edge(map[a], map[b]));
        }
        for v in 0..n {
            if map[..depth].contains(&v) {
                continue;
            }
            map[depth] = v;
            if go(depth + 1, n, map, host, pattern) {
                return true;
            }
        }
        false
    }
    n >= PATTERN_ORDER && go(0, n, &mut map, host, pattern)
}

proptest! {
    #[test]
    fn format_then_parse_round_trips(seq in seq_strategy(12, 9)) {
        prop_assert_eq!(parse_sequence(&seq.to_string()).unwrap(), seq);
    }

    #[test]
    fn parse_ignores_item_order(terms in prop::collection::vec(1u32..9, 1..12), seed in any::<u64>()) {
        let text: Vec<String> = terms.iter().map(u32::to_string).collect();
        let mut shuffled = text.clone();
        // deterministic rotation keyed by the seed
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        shuffled.reverse();
        prop_assert_eq!(
            parse_sequence(&text.join(",")).unwrap(),
            parse_sequence(&shuffled.join(" ")).unwrap()
        );
    }

    #[test]
    fn matchers_are_sound(seq in seq_strategy(12, 11)) {
        let n = seq.len();
        if let Some(m) = match_condition3(&seq) {
            prop_assert_eq!(m.instantiate(n).unwrap(), seq.clone());
        }
        if let Some(m) = match_condition4(&seq) {
            prop_assert_eq!(m.instantiate(n).unwrap(), seq);
        }
    }

    #[test]
    fn embeddings_are_valid_and_complete_on_seven_vertices(mask in 0u64..(1 << 21)) {
        let host = graph_from_mask(7, mask);
        for pattern in TargetPattern::ALL {
            let found = find_embedding(&host, &pattern, None);
            if let Some(e) = found {
                prop_assert!(e.is_valid(&host, &pattern));
            }
            prop_assert_eq!(found.is_some(), brute_force_contains(&host, &pattern));
        }
    }

    #[test]
    fn remove_then_restore_is_identity(mask in 0u64..(1 << 21)) {
        let host = graph_from_mask(7, mask);
        for pattern in TargetPattern::ALL {
            if let Some(e) = find_embedding(&host, &pattern, None) {
                let mut rest = remove_pattern(&host, &e, &pattern).unwrap();
                prop_assert_eq!(rest.edge_count(), host.edge_count() - pattern.edges.len());
                for (u, v) in e.mapped_edges(&pattern) {
                    rest.add_edge(u, v).unwrap();
                }
                prop_assert_eq!(&rest, &host);
            }
        }
    }

    #[test]
    fn havel_hakimi_output_is_a_simple_realization(seq in seq_strategy(12, 11)) {
        match havel_hakimi_realize(&seq) {
            Ok(g) => {
                prop_assert!(is_graphic_erdos_gallai(&seq));
                prop_assert_eq!(g.degree_sequence().unwrap(), seq);
                let edges: BTreeSet<_> = g.edges().collect();
                prop_assert_eq!(edges.len(), g.edge_count());
                prop_assert!(edges.iter().all(|&(u, v)| u < v));
            }
            Err(_) => prop_assert!(!is_graphic_erdos_gallai(&seq)),
        }
    }

    #[test]
    fn lay_off_preserves_graphicality(seq in seq_strategy(10, 9)) {
        if let Ok(step) = lay_off(&seq) {
            prop_assert_eq!(
                is_graphic_erdos_gallai(&seq),
                is_graphic_erdos_gallai(&step.residual)
            );
            prop_assert_eq!(step.reduced_positions.len() as u32, seq.min_degree().unwrap());
        }
    }
}

#[test]
fn embedding_search_matches_brute_force_on_all_small_hosts() {
    for n in 5..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0u64..(1 << pairs) {
            let host = graph_from_mask(n, mask);
            for pattern in TargetPattern::ALL {
                let found = find_embedding(&host, &pattern, None);
                assert_eq!(
                    found.is_some(),
                    brute_force_contains(&host, &pattern),
                    "{host:?}"
                );
                if let Some(e) = found {
                    assert!(e.is_valid(&host, &pattern));
                }
            }
        }
    }
}

#[test]
fn realization_enumerator_matches_subset_filter() {
    let budget = EnumerationBudget::default().exhaustive();
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        let mut buckets: HashMap<Vec<u32>, BTreeSet<Vec<(usize, usize)>>> = HashMap::new();
        for mask in 0u64..(1 << pairs) {
            let g = graph_from_mask(n, mask);
            let deg = g.degrees();
            let ordered = deg.windows(2).all(|w| w[0] >= w[1]);
            if ordered && deg.iter().all(|&d| d > 0) {
                buckets.entry(deg).or_default().insert(g.edges().collect());
            }
        }
        let sequences = enumerate_graphic_sequences(n);
        assert_eq!(sequences.len(), buckets.len(), "n={n}");
        for seq in sequences {
            let graphs = enumerate_realizations(&seq, &budget).unwrap();
            let got: BTreeSet<Vec<(usize, usize)>> =
                graphs.iter().map(|g| g.edges().collect()).collect();
            assert_eq!(got.len(), graphs.len(), "duplicates for {seq}");
            for g in &graphs {
                assert_eq!(g.degrees(), seq.terms());
            }
            assert_eq!(&got, &buckets[seq.terms()], "{seq}");
        }
    }
}

#[test]
fn sequence_generator_matches_naive_filter() {
    for n in 1..=7usize {
        let top = (n as u32).saturating_sub(1);
        let mut naive = BTreeSet::new();
        if top >= 1 {
            let mut terms = vec![1u32; n];
            loop {
                if terms.windows(2).all(|w| w[0] >= w[1]) {
                    let s = DegreeSequence::new(terms.clone()).unwrap();
                    if is_graphic_lay_off(&s) {
                        naive.insert(s);
                    }
                }
                // odometer over {1..top}^n
                let mut pos = 0;
                while pos < n && terms[pos] == top {
                    terms[pos] = 1;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
                terms[pos] += 1;
            }
        }
        let generated = enumerate_graphic_sequences(n);
        let mut sorted = generated.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(generated, sorted, "descending order, n={n}");
        let set: BTreeSet<_> = generated.into_iter().collect();
        assert_eq!(set, naive, "n={n}");
    }
}

#[test]
fn graphic_sequence_counts_are_pinned() {
    let counts: Vec<usize> = (1..=8)
        .map(|n| enumerate_graphic_sequences(n).len())
        .collect();
    assert_eq!(counts, vec![0, 1, 2, 7, 20, 71, 240, 871]);
}

#[test]
fn graphic_sequences_have_even_sum() {
    for n in 1..=9 {
        assert!(enumerate_graphic_sequences(n)
            .iter()
            .all(|s| s.sigma() % 2 == 0));
    }
}

#[test]
fn family_templates_are_matched() {
    // templates need not be graphic, e.g. (7, 6, 2^3, 1^3)
    for n in 5..=12 {
        for (k, t) in condition3_parameters(n) {
            let s = condition3_template(n, k, t).unwrap();
            assert!(match_condition3(&s).is_some(), "{s}");
        }
        for (k, i) in condition4_parameters(n) {
            let s = condition4_template(n, k, i).unwrap();
            assert!(match_condition4(&s).is_some(), "{s}");
        }
    }
}
