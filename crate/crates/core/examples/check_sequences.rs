//! Deciding potential (K5-P4)- and (K5-Y4)-graphicity with the closed-form
//! predicates, including which condition fails.
//!
//! cargo run --example check_sequences -- "6,3,2^4,1"

use potential_graphic::{check, parse_sequence, TargetPattern};

fn main() {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        [
            "4^5",
            "4^2,2^3",
            "3^2,2^4",
            "6,3,2^4,1",
            "6,4,2^3,1^2",
            "6,5,2^3,1^3",
            "3^6",
            "3^3,2,1",
            "3^2,2^3",
        ]
        .map(String::from)
        .to_vec()
    } else {
        inputs
    };
    println!("{:<14} {:<30} {:<30}", "sequence", "k5-p4", "k5-y4");
    for text in &inputs {
        let seq = parse_sequence(text).expect("valid sequence");
        let cells: Vec<String> = TargetPattern::ALL
            .iter()
            .map(|p| match check(p, &seq) {
                Ok(v) => v.to_string(),
                Err(e) => format!("error: {e}"),
            })
            .collect();
        println!("{:<14} {:<30} {:<30}", seq.to_string(), cells[0], cells[1]);
    }
}
