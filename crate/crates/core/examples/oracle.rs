//! Exhaustive realization enumeration, the ground truth the predicates are
//! tested against.
//!
//! cargo run --release --example oracle -- "3^2,2^4"

use std::ops::ControlFlow;

use potential_graphic::oracle::visit_realizations;
use potential_graphic::{
    find_embedding, oracle_potentially, parse_sequence, EnumerationBudget, TargetPattern,
};

fn main() {
    let seq = parse_sequence(&std::env::args().nth(1).unwrap_or_else(|| "3^2,2^4".into()))
        .expect("valid sequence");
    let budget = EnumerationBudget::default().exhaustive();

    let mut containing = [0u64; 2];
    let stats = visit_realizations(&seq, &budget, |g| {
        for (slot, p) in containing.iter_mut().zip(TargetPattern::ALL.iter()) {
            if find_embedding(g, p, None).is_some() {
                *slot += 1;
            }
        }
        ControlFlow::Continue(())
    })
    .unwrap();
    println!(
        "{seq}: {} labeled realizations, {} search nodes",
        stats.realizations, stats.nodes
    );
    for (p, count) in TargetPattern::ALL.iter().zip(containing) {
        println!("  {count} contain {p}");
    }

    let tight = EnumerationBudget::default().with_max_nodes(3);
    match oracle_potentially(&seq, &TargetPattern::ALL[0], &tight) {
        Ok(b) => println!("with a 3-node budget: {b}"),
        Err(e) => println!("with a 3-node budget: {e}"),
    }
}
