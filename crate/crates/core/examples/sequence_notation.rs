//! Parsing and printing degree sequences in `r^t` notation.
//!
//! cargo run --example sequence_notation -- "5, 3^2 2^3 1"

use potential_graphic::{parse_sequence, DegreeSequence};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2,4,2,4,2".into());
    let seq = match parse_sequence(&text) {
        Ok(seq) => seq,
        Err(e) => {
            eprintln!("cannot parse {text:?}: {e}");
            std::process::exit(2);
        }
    };
    println!("input:    {text}");
    println!("sorted:   {:?}", seq.terms());
    println!("compact:  {seq}");
    println!("runs:     {:?}", seq.runs());
    println!(
        "length {}, sum {}, d_1 = {}",
        seq.len(),
        seq.sigma(),
        seq.d(1)
    );

    let built = DegreeSequence::from_runs(&[(3, 2), (2, 4)]).unwrap();
    println!("from runs [(3,2),(2,4)]: {built}");

    for bad in ["", "3 0", "2^0", "x"] {
        println!("{bad:?} -> {}", parse_sequence(bad).unwrap_err());
    }
}
