//! The acceptance gate: every criterion of the verification grid must pass.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! pass/fail table; the same table backs `cy2 verify`.

use cy2::acceptance::{all_passed, format_outcomes, run_acceptance_grid};

#[test]
fn acceptance_grid() {
    let outcomes = run_acceptance_grid(1);
    print!("{}", format_outcomes(&outcomes));
    for o in &outcomes {
        assert!(o.passed, "criterion {} failed: {}", o.name, o.detail);
    }
    assert!(all_passed(&outcomes));
}

#[test]
fn acceptance_grid_is_deterministic_across_workers() {
    let one = format_outcomes(&run_acceptance_grid(1));
    let four = format_outcomes(&run_acceptance_grid(4));
    assert_eq!(one, four, "the pass/fail table must not depend on workers");
}
