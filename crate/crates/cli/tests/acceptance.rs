//! All thirteen acceptance criteria against the bundled config. Prints one
//! PASS/FAIL line per criterion; the run succeeds when the failing set is
//! exactly the documented one. Runs without the libtest harness so the lines
//! are never captured.

use std::process::ExitCode;

use invar_cli::suite::{run_suite, KNOWN_FAILURES};
use invar_cli::Context;

fn main() -> ExitCode {
    let ctx = Context::bundled();
    let outcomes = run_suite(&ctx, None, |o| {
        println!("{}", o.line());
        for d in &o.details {
            println!("    {d}");
        }
    });
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    println!("{}/{} criteria pass; failing: {failed:?}; documented: {KNOWN_FAILURES:?}", 13 - failed.len(), 13);
    if failed == KNOWN_FAILURES {
        ExitCode::SUCCESS
    } else {
        eprintln!("failing criteria differ from the documented set");
        ExitCode::FAILURE
    }
}
