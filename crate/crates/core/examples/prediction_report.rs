//! Predicted against actual counts for n = 2..=12.

use addtable::report::{build_report, ReportOptions};

fn main() -> addtable::Result<()> {
    let report = build_report(2, 12, &ReportOptions::default())?;
    print!("{}", report.to_text());
    println!("flagged: {:?} ({:.2} s)", report.flagged(), report.elapsed.as_secs_f64());
    Ok(())
}
