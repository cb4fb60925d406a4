//! Three graphicality tests side by side, plus one lay-off step and a
//! Havel-Hakimi realization.
//!
//! cargo run --example graphicality -- "3^2,2^3"

use potential_graphic::{
    havel_hakimi_realize, is_graphic_erdos_gallai, is_graphic_lay_off, is_graphic_small_degree,
    lay_off, parse_sequence,
};

fn main() {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        ["3^2,2^3", "4,1^3", "3^3", "2^2,1^2", "5^2,2^4"]
            .map(String::from)
            .to_vec()
    } else {
        inputs
    };
    for text in &inputs {
        let seq = parse_sequence(text).expect("valid sequence");
        let fast = match is_graphic_small_degree(&seq) {
            Some(b) => b.to_string(),
            None => "n/a".into(),
        };
        println!(
            "{seq}: erdos-gallai {}, lay-off {}, small-degree {fast}",
            is_graphic_erdos_gallai(&seq),
            is_graphic_lay_off(&seq),
        );
        match lay_off(&seq) {
            Ok(step) => println!(
                "  lay off d_n -> {} (reduced {:?})",
                step.residual, step.reduced_positions
            ),
            Err(e) => println!("  lay off: {e}"),
        }
        if let Ok(g) = havel_hakimi_realize(&seq) {
            let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("  realization: {}", edges.join(" "));
        }
    }
}
