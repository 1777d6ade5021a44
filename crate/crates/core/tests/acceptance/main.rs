//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when a criterion fails outside the documented known failures.

mod embedding;
mod golden;
mod laws;
mod rmatrix;

use std::process::ExitCode;
use std::time::{Duration, Instant};

/// Outcome of one criterion.
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
    /// A failure that is recorded as unattainable and does not fail the run.
    pub known_failure: bool,
}

impl Outcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Self {
            passed: true,
            detail: detail.into(),
            known_failure: false,
        }
    }

    pub fn check(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
            known_failure: false,
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Enforces a wall-clock limit on an otherwise passing outcome.
fn within(outcome: Outcome, took: Duration, limit: Option<Duration>) -> Outcome {
    match limit {
        Some(limit) if took > limit && outcome.passed => Outcome::check(
            false,
            format!("{}; took {took:?}, limit {limit:?}", outcome.detail),
        ),
        _ => outcome,
    }
}

type Criterion<'a> = (
    &'static str,
    Option<Duration>,
    Box<dyn FnOnce() -> Outcome + 'a>,
);

fn main() -> ExitCode {
    let crystals = laws::Crystals::build();
    let criteria: Vec<Criterion> = vec![
        (
            "1 golden theta",
            Some(Duration::from_millis(1)),
            Box::new(golden::theta),
        ),
        (
            "2 golden psi",
            Some(Duration::from_millis(1)),
            Box::new(golden::psi),
        ),
        ("3 golden swap", None, Box::new(golden::swap)),
        (
            "4 golden A_inf operator",
            None,
            Box::new(golden::ainf_operator),
        ),
        (
            "5 level-one laws",
            Some(Duration::from_secs(10)),
            Box::new(laws::level_one),
        ),
        (
            "6 FLOTW equivalence",
            Some(Duration::from_secs(60)),
            Box::new(|| laws::flotw(&crystals)),
        ),
        (
            "7 isomorphism oracle",
            Some(Duration::from_secs(300)),
            Box::new(isomorphisms::oracle),
        ),
        ("8 R-matrix properties", None, Box::new(rmatrix::properties)),
        (
            "9 embedding theorems",
            None,
            Box::new(|| embedding::replay(&crystals)),
        ),
        ("10 class bound", None, Box::new(isomorphisms::class_bound)),
        (
            "11 conjugation skew-isomorphism",
            None,
            Box::new(|| embedding::conjugation(&crystals)),
        ),
    ];

    println!(
        "crystal generation for criteria 6, 9, 11: {:?}",
        crystals.build_time
    );
    let mut hard_failures = 0;
    for (name, limit, run) in criteria {
        let (outcome, took) = timed(run);
        let outcome = within(outcome, took, limit);
        let status = match (outcome.passed, outcome.known_failure) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        if !outcome.passed && !outcome.known_failure {
            hard_failures += 1;
        }
        println!(
            "[{status}] criterion {name}: {} ({took:.2?})",
            outcome.detail
        );
    }
    if hard_failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{hard_failures} criterion(s) failed");
        ExitCode::FAILURE
    }
}
