//! Time the parallel fill across worker counts and block sizes.
//!
//! `cargo run --release -p lcs-core --example fill_timing -- 3000 3000`

use lcs_core::io::generate_random;
use lcs_core::{lcs_fill_serial, ParallelConfig, WavefrontFiller, DNA};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("length")).collect();
    let (m, n) = (args.first().copied().unwrap_or(3000), args.get(1).copied().unwrap_or(3000));
    let x = generate_random(m, DNA, 1).unwrap();
    let y = generate_random(n, DNA, 2).unwrap();
    let (serial, secs) = lcs_core::bench::time_fill(|| lcs_fill_serial(&x, &y).unwrap());
    println!("serial {m}x{n}: {secs:.4}s (lcs {})", serial.0.lcs_length());
    for workers in [1, 2, 4, 8] {
        for block in [1, 16, 64, 257] {
            let filler = WavefrontFiller::new(ParallelConfig::new(workers, block)).unwrap();
            let (_, _, secs) = filler.fill(&x, &y).unwrap();
            println!("workers={workers} block={block:>3}: {secs:.4}s");
        }
    }
}
