//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;

use ncverify::suites;

fn main() -> ExitCode {
    let reports = suites::verify_all();
    let mut ok = reports.len() == suites::ALL.len();
    for (n, r) in reports.iter().enumerate() {
        println!(
            "criterion {:>2} {} {}: {} ({}/{} checks)",
            n + 1,
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.title,
            r.checks.iter().filter(|c| c.passed).count(),
            r.checks.len()
        );
        ok &= r.passed;
    }
    for r in reports.iter().filter(|r| !r.passed) {
        eprint!("{r}");
    }
    println!("acceptance: {}", if ok { "all criteria pass" } else { "FAILED" });
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
