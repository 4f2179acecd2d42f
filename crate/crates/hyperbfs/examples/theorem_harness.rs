//! Desk-scale verification: for every two-element value set (and, with
//! `--full`, all 6,561 three-element ones), confirm that the algebraic
//! profile predicts empirical BFS behavior exactly.

use hyperbfs::format::render_report;
use hyperbfs::verify::{theorem_2_1_harness, Bounds};

fn main() -> hyperbfs::Result<()> {
    let carrier = if std::env::args().any(|a| a == "--full") { 3 } else { 2 };
    let harness = theorem_2_1_harness(carrier, Bounds::default(), 42)?;
    println!("checking {} value sets of size {carrier}", harness.total());

    let mut sets = 0u64;
    let mut valid = 0u64;
    let mut disagreements = 0u64;
    for report in harness {
        let report = report?;
        sets += 1;
        if report.records.iter().all(|r| r.profile_verdict) {
            valid += 1;
            // print the fully conforming ones
            print!("{}", render_report(&report));
        }
        if !report.all_agree() {
            disagreements += 1;
        }
    }
    println!("sets={sets} bfs_valid={valid} disagreements={disagreements}");
    assert_eq!(disagreements, 0);
    Ok(())
}
