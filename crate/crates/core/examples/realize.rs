//! Building a realization that visibly contains the pattern, then
//! re-finding and removing the copy.
//!
//! cargo run --example realize -- k5-y4 "4,3^5,1"

use potential_graphic::{
    find_embedding, parse_sequence, realize_with_pattern, remove_pattern, TargetPattern,
};

fn main() {
    let mut args = std::env::args().skip(1);
    let pattern = TargetPattern::by_name(&args.next().unwrap_or_else(|| "k5-p4".into()))
        .expect("pattern is k5-p4 or k5-y4");
    let seq =
        parse_sequence(&args.next().unwrap_or_else(|| "4,3^2,2^4".into())).expect("valid sequence");

    println!("{pattern} edges: {:?}", pattern.edges);
    let r = match realize_with_pattern(&seq, &pattern) {
        Ok(r) => r,
        Err(e) => {
            println!("{seq}: {e}");
            return;
        }
    };
    println!("realization of {seq}:");
    print!("{}", r.graph);
    println!("pattern vertices: {}", r.embedding);
    assert_eq!(r.graph.degree_sequence().unwrap(), seq);

    let again = find_embedding(&r.graph, &pattern, None).expect("copy present");
    let rest = remove_pattern(&r.graph, &again, &pattern).unwrap();
    println!(
        "searching again finds {again}; removing it leaves {} of {} edges, degrees {:?}",
        rest.edge_count(),
        r.graph.edge_count(),
        rest.degrees()
    );
}
