//! Base cases and induction branches of the two characterizations, each run
//! through the predicate, the pattern-aware builder and (where the order
//! allows) the exhaustive oracle.

use potential_graphic::oracle::EnumerationBudget;
use potential_graphic::seq::{condition3_parameters, condition3_template};
use potential_graphic::*;

fn s(text: &str) -> DegreeSequence {
    parse_sequence(text).unwrap()
}

fn assert_positive(seq: &DegreeSequence, pattern: &TargetPattern) {
    let verdict = check(pattern, seq).unwrap();
    assert!(verdict.is_yes(), "{pattern} {seq}: {verdict}");
    let r = realize_with_pattern(seq, pattern).unwrap();
    assert_eq!(degree_sequence_of(&r.graph).unwrap(), *seq);
    assert!(r.embedding.is_valid(&r.graph, pattern));
    if seq.len() <= 9 {
        assert!(
            oracle_potentially(seq, pattern, &EnumerationBudget::default()).unwrap(),
            "oracle disagrees on {seq}"
        );
    }
}

fn assert_negative(seq: &DegreeSequence, pattern: &TargetPattern) -> Verdict {
    let verdict = check(pattern, seq).unwrap();
    assert!(!verdict.is_yes(), "{pattern} {seq}");
    if seq.len() <= 9 {
        assert!(!oracle_potentially(seq, pattern, &EnumerationBudget::default()).unwrap());
    }
    verdict
}

#[test]
fn p4_base_case() {
    for text in [
        "4^5",
        "4^3,3^2",
        "4^2,3^2,2",
        "4,3^4",
        "4,3^2,2^2",
        "3^4,2",
        "3^2,2^3",
    ] {
        assert_positive(&s(text), &K5_MINUS_P4);
    }
    assert_negative(&s("4^2,2^3"), &K5_MINUS_P4);
}

#[test]
fn p4_cases_with_small_residual() {
    // residual (3^2, 2^4) at n = 7 and (3^2, 2^5) at n = 8
    for (texts, residual) in [
        (
            ["4^2,2^5", "4,3^2,2^4", "3^4,2^3", "4,3,2^4,1", "3^3,2^3,1"],
            "3^2,2^4",
        ),
        (
            ["4^2,2^6", "4,3^2,2^5", "3^4,2^4", "4,3,2^5,1", "3^3,2^4,1"],
            "3^2,2^5",
        ),
    ] {
        for text in texts {
            let seq = s(text);
            assert_eq!(lay_off(&seq).unwrap().residual, s(residual), "{text}");
            assert_positive(&seq, &K5_MINUS_P4);
        }
    }
}

#[test]
fn p4_condition3_neighbor_is_positive() {
    // (n-1, 3^2, 2^(n-3)) for odd n
    for n in [7usize, 9, 11] {
        let seq = DegreeSequence::from_runs(&[((n - 1) as u32, 1), (3, 2), (2, n - 3)]).unwrap();
        assert_positive(&seq, &K5_MINUS_P4);
    }
}

#[test]
fn p4_case_six_shapes() {
    for n in 8..=11 {
        assert_positive(
            &DegreeSequence::from_runs(&[(3, 2), (2, n - 2)]).unwrap(),
            &K5_MINUS_P4,
        );
    }
    // (d_1, 3, 2^(n-2)) with odd d_1 >= 5 and n >= d_1 + 2
    for d1 in [5u32, 7] {
        for n in (d1 as usize + 2)..=10 {
            let seq = DegreeSequence::from_runs(&[(d1, 1), (3, 1), (2, n - 2)]).unwrap();
            assert_positive(&seq, &K5_MINUS_P4);
        }
    }
}

#[test]
fn p4_case_seven_shapes() {
    // (3^2, 2^t, 1^(n-2-t)) with t >= 3 and n-2-t even and positive
    for t in 3..=6usize {
        for ones in [2usize, 4] {
            let seq = DegreeSequence::from_runs(&[(3, 2), (2, t), (1, ones)]).unwrap();
            assert_positive(&seq, &K5_MINUS_P4);
        }
    }
}

#[test]
fn p4_small_cycle_exclusions() {
    for text in ["3^2,2^4", "3^2,2^5"] {
        let v = assert_negative(&s(text), &K5_MINUS_P4);
        assert_eq!(v.violated, Some(Condition::P4SmallCycle));
    }
}

#[test]
fn p4_necessity_residuals() {
    // removing the pattern from the top five of (n-1, k, 2^t, 1^(n-2-t))
    // leaves (n-4, k-3, 2^(t-3), 1^(n-2-t)) plus three zeros
    for n in 6..=10usize {
        for (k, t) in condition3_parameters(n) {
            let seq = condition3_template(n, k, t).unwrap();
            if !is_graphic_erdos_gallai(&seq) {
                continue;
            }
            let v = check_k5_p4(&seq).unwrap();
            assert_eq!(v.violated, Some(Condition::P4Family3), "{seq}");
            let mut expected = vec![(n - 4) as u32, k - 3];
            expected.extend(std::iter::repeat_n(2, t as usize - 3));
            expected.extend(std::iter::repeat_n(1, n - 2 - t as usize));
            expected.extend([0, 0, 0]);
            expected.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(
                residual_after_pattern(&seq, &K5_MINUS_P4).unwrap(),
                expected
            );
        }
    }
}

#[test]
fn y4_base_case() {
    for text in [
        "4^5",
        "4^3,3^2",
        "4^2,3^2,2",
        "4,3^4",
        "4,3^3,1",
        "4,3^2,2^2",
        "3^4,2",
        "3^3,2,1",
    ] {
        assert_positive(&s(text), &K5_MINUS_Y4);
    }
}

#[test]
fn y4_prism_neighbors() {
    for text in ["4^3,3^4", "4^2,3^4,2", "4,3^5,1"] {
        let seq = s(text);
        assert_eq!(lay_off(&seq).unwrap().residual, s("3^6"));
        assert_positive(&seq, &K5_MINUS_Y4);
    }
    let v = assert_negative(&s("3^6"), &K5_MINUS_Y4);
    assert_eq!(v.violated, Some(Condition::Y4Prism));
}

#[test]
fn y4_degree_two_subcases() {
    // (d_1, 3^2, 2^(n-3)) with even d_1 >= 4
    for d1 in [4u32, 6, 8] {
        for n in (d1 as usize + 1)..=10 {
            let seq = DegreeSequence::from_runs(&[(d1, 1), (3, 2), (2, n - 3)]).unwrap();
            assert_positive(&seq, &K5_MINUS_Y4);
        }
    }
    for n in 5..=10 {
        assert_positive(
            &DegreeSequence::from_runs(&[(3, 4), (2, n - 4)]).unwrap(),
            &K5_MINUS_Y4,
        );
    }
}

#[test]
fn y4_degree_one_case() {
    // (3^3, 2^t, 1^(n-3-t)) with n - t even
    for n in 5..=10usize {
        for t in 1..(n - 3) {
            if (n - t) % 2 == 0 {
                let seq = DegreeSequence::from_runs(&[(3, 3), (2, t), (1, n - 3 - t)]).unwrap();
                assert_positive(&seq, &K5_MINUS_Y4);
            }
        }
    }
}

#[test]
fn verdicts_are_deterministic() {
    for seq in enumerate_graphic_sequences(7) {
        for pattern in TargetPattern::ALL {
            assert_eq!(
                check(&pattern, &seq).unwrap(),
                check(&pattern, &seq).unwrap()
            );
        }
    }
}

#[test]
fn negative_family_verdicts_rebuild_the_input() {
    for n in 5..=10 {
        for seq in enumerate_graphic_sequences(n) {
            let v = check_k5_p4(&seq).unwrap();
            if let Some(m) = v.family {
                assert!(matches!(
                    v.violated,
                    Some(Condition::P4Family3 | Condition::P4Family4)
                ));
                assert_eq!(m.instantiate(n).unwrap(), seq);
            }
            if !v.is_yes() {
                assert!(v.violated.is_some());
            }
        }
    }
}
