//! The threshold sigma(H, n): every graphic sequence of length n with sum
//! at least sigma is potentially H-graphic.
//!
//! cargo run --release --example sigma_threshold -- 9

use potential_graphic::{
    compute_sigma, lower_bound_witness, Decider, EnumerationBudget, TargetPattern,
};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map_or(9, |a| a.parse().expect("an integer n"));
    for pattern in TargetPattern::ALL {
        println!("{pattern}");
        for n in 5..=max_n {
            let r = compute_sigma(&pattern, n, Decider::Predicate).unwrap();
            let w = lower_bound_witness(&pattern, n).unwrap();
            println!(
                "  n={n:>2}: sigma = {:>3} (4n-4 = {:>3}), witness {}, lower-bound witness {w}",
                r.sigma_value,
                4 * n - 4,
                r.extremal_witness
            );
        }
    }

    let oracle = Decider::Oracle(EnumerationBudget::default());
    let r = compute_sigma(&TargetPattern::ALL[1], 6, oracle).unwrap();
    println!("oracle, k5-y4, n=6: sigma = {}", r.sigma_value);
}
