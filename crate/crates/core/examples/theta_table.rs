//! Prints the realizability table for theta graphs up to a vertex bound (default 12).

use islide_core::verify_table;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    let report = verify_table(max, 0, false).expect("bound is at most 26");
    for row in &report.rows {
        let status = if row.passed { "ok" } else { "FAIL" };
        println!(
            "{:<12} {:<28} {:<10} {status} {}",
            row.spec.to_string(),
            row.verdict,
            row.construction.as_deref().unwrap_or("-"),
            row.detail
        );
    }
    println!("{} specs, all passed: {}", report.rows.len(), report.passed);
}
