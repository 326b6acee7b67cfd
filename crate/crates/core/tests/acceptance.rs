use std::time::{Duration, Instant};

use findom_core::finalg::Limits;
use findom_core::suites::{run_suite, SuiteReport};
use findom_core::verdicts::ScanStatus;
use findom_core::Tri;

struct Criterion {
    suite: &'static str,
    workers: usize,
    budget: Duration,
}

const fn crit(suite: &'static str, workers: usize, secs: u64) -> Criterion {
    Criterion {
        suite,
        workers,
        budget: Duration::from_secs(secs),
    }
}

const CRITERIA: [Criterion; 10] = [
    crit("hopf-omega4", 1, 1),
    crit("group-contrasts", 1, 5),
    crit("nakayama-ngas", 1, 60),
    crit("domdim-scan", 4, 300),
    crit("findim-identity", 1, 300),
    crit("approx-criterion", 4, 600),
    crit("truncated-resdim", 1, 300),
    crit("cotilting-count", 4, 600),
    crit("cross-engine", 4, 600),
    crit("tensor-rules", 1, 300),
];

fn zero_failures(r: &SuiteReport) -> bool {
    r.status == ScanStatus::Verified
        && !r.checks.is_empty()
        && r.checks.iter().all(|c| c.outcome == Tri::True)
}

fn main() {
    let limits = Limits {
        cutoff: 24,
        seed: 0,
    };
    let mut failed = Vec::new();
    for (i, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let report = run_suite(c.suite, limits, c.workers).expect("known suite");
        let took = start.elapsed();
        let ok = zero_failures(&report) && took <= c.budget;
        println!(
            "{} {:>2} {:<18} {:>8.2?} (budget {:?})",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            c.suite,
            took,
            c.budget
        );
        for check in &report.checks {
            println!(
                "       [{}] {}: {}",
                check.outcome, check.name, check.detail
            );
        }
        if !ok {
            failed.push(c.suite);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
    } else {
        eprintln!("acceptance: failed {failed:?}");
        std::process::exit(1);
    }
}
