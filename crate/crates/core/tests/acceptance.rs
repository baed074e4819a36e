//! Acceptance scoreboard. Set `DELTAK_STRETCH=1` to attempt the long
//! non-gating criteria.

use std::process::ExitCode;

use deltak::acceptance::{gating_passed, run_scoreboard, ScoreboardOptions};

fn main() -> ExitCode {
    let opts = ScoreboardOptions {
        stretch: std::env::var("DELTAK_STRETCH").is_ok_and(|v| v == "1"),
        ..ScoreboardOptions::default()
    };
    let outcomes = run_scoreboard(&opts, |o| println!("{}", o.line()));
    let passed = outcomes.iter().filter(|o| o.passed == Some(true)).count();
    println!("{passed}/{} criteria passed", outcomes.len());
    if gating_passed(&outcomes) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
