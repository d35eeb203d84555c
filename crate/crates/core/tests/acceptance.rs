//! One PASS/FAIL line per acceptance criterion, plus the injected-fault
//! negative control. Runs without the libtest harness so the lines are
//! always printed.

use std::process::ExitCode;

use akblocks_core::akalgebra::Fault;
use akblocks_core::selftest::{run_criterion, SelftestOptions, ALL};

fn main() -> ExitCode {
    let opts = SelftestOptions::default();
    let mut failed = 0;
    for n in ALL {
        let r = run_criterion(n, &opts);
        println!(
            "{} criterion {:>2}: {} ({} ms) - {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.number,
            r.statement,
            r.elapsed_ms,
            r.detail
        );
        failed += usize::from(!r.passed);
    }

    // A corrupted Gram entry must surface as a failure naming the Gram identity
    // in every criterion that reads Gram data, and nowhere else.
    let faulty = SelftestOptions { fault: Some(Fault::GramEntry), ..opts };
    let mut caught = Vec::new();
    let mut wrong = Vec::new();
    for n in [7, 8, 9, 10] {
        let r = run_criterion(n, &faulty);
        if !r.passed && r.detail.contains("Gram product identity") {
            caught.push(n);
        } else if !r.passed {
            wrong.push(format!("{n}: {}", r.detail));
        }
    }
    let control_ok = caught == [7, 8, 9, 10] && wrong.is_empty();
    println!(
        "{} negative control: injected Gram fault reported by criteria {caught:?}{}",
        if control_ok { "PASS" } else { "FAIL" },
        if wrong.is_empty() { String::new() } else { format!("; unexpected: {}", wrong.join("; ")) }
    );
    failed += usize::from(!control_ok);

    if failed == 0 {
        println!("acceptance: all {} criteria and the negative control pass", ALL.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} failing");
        ExitCode::FAILURE
    }
}
