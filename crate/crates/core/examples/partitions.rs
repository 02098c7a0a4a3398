//! Enumerate (non-crossing) partitions, print a T_P matrix and the rank of
//! their span.
//!
//!     cargo run --example partitions [k] [l] [n]

use freefusion::partitions::{enumerate_partitions, partition_map, span_rank, Caps};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (k, l, n) = (
        args.first().copied().unwrap_or(0),
        args.get(1).copied().unwrap_or(4),
        args.get(2).copied().unwrap_or(2),
    );
    let caps = Caps::default();

    let all = enumerate_partitions(k, l, false, &caps).unwrap();
    let nc = enumerate_partitions(k, l, true, &caps).unwrap();
    println!("P({k},{l}): {}  NC({k},{l}): {}", all.len(), nc.len());
    for p in &nc {
        println!("  {p}");
    }

    if let Some(p) = nc.last() {
        print!("\n{}", partition_map(p, n, &caps).unwrap().to_tsv());
    }
    println!(
        "\nrank of span at n = {n}: all {}, non-crossing {}",
        span_rank(&all, n, &caps).unwrap(),
        span_rank(&nc, n, &caps).unwrap()
    );
}
