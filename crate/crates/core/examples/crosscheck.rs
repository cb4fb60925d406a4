//! Sweeping every graphic sequence of length n through both the predicate
//! and the exhaustive oracle.
//!
//! cargo run --release --example crosscheck -- 8

use std::time::Instant;

use potential_graphic::{crosscheck, EnumerationBudget, TargetPattern};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map_or(7, |a| a.parse().expect("an integer n"));
    let budget = EnumerationBudget::default();
    for pattern in TargetPattern::ALL {
        for n in 5..=max_n {
            let started = Instant::now();
            let report = crosscheck(&pattern, n, &budget).unwrap();
            println!(
                "{pattern} n={n}: {} sequences, YES {}, NO {}, {} mismatches ({:.1?})",
                report.tested,
                report.yes,
                report.no,
                report.mismatches.len(),
                started.elapsed()
            );
            for m in &report.mismatches {
                println!(
                    "  {}: predicate {}, oracle {}",
                    m.sequence, m.predicate, m.oracle
                );
            }
        }
    }
}
