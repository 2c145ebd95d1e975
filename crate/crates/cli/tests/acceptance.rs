//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use symvoa::suite::{criterion, SuiteConfig, TITLES};

/// Runtime ceilings for the criteria that carry one.
fn budget(id: u8) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(60)),
        3 => Some(Duration::from_secs(300)),
        8 => Some(Duration::from_secs(600)),
        12 => Some(Duration::from_secs(1200)),
        _ => None,
    }
}

fn report(id: u8, title: &str, passed: bool, elapsed: Duration, notes: &[String]) -> bool {
    let within = budget(id).map_or(true, |b| elapsed <= b);
    let ok = passed && within;
    println!("{} criterion {id:>2}: {title} ({:.2}s)", if ok { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
    for n in notes {
        println!("      {n}");
    }
    if !within {
        println!("      over the {}s budget", budget(id).unwrap().as_secs());
    }
    ok
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut failed = Vec::new();
    for id in 1..=11u8 {
        let start = Instant::now();
        let c = criterion(id, &cfg);
        let notes: Vec<String> =
            c.checks.iter().filter(|k| !k.passed).map(|k| format!("{}: {}", k.name, k.detail)).collect();
        if !report(id, TITLES[id as usize - 1], c.passed(), start.elapsed(), &notes) {
            failed.push(id);
        }
    }

    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_symvoa"))
        .args(["paper-suite", "--d", "2", "--max-degree", "6"])
        .output()
        .expect("run the symvoa binary");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let notes: Vec<String> = stdout.lines().filter(|l| l.starts_with("FAIL")).map(str::to_string).collect();
    let code = out.status.code();
    let mut notes = notes;
    notes.push(format!("exit status {code:?}"));
    if !report(12, "paper-suite aggregates 1-11 and exits 0", code == Some(0), start.elapsed(), &notes) {
        failed.push(12);
    }

    if failed.is_empty() {
        println!("all 12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
