//! Run the full verification grid programmatically; same table as
//! `cy2 verify`.
//!
//! Run: `cargo run --release -p cy2 --example verify_grid`

use cy2::acceptance::{all_passed, format_outcomes, run_acceptance_grid};

fn main() {
    let outcomes = run_acceptance_grid(2);
    print!("{}", format_outcomes(&outcomes));
    std::process::exit(if all_passed(&outcomes) { 0 } else { 1 });
}
