//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_center::verify::{verify, Status, VerificationReport};

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    checks: Vec<(&'static str, Vec<usize>)>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const PROPERTY_SUITE: &[&str] = &[
    "braid",
    "jm-commute",
    "central",
    "francis",
    "scal-jm1",
    "scal-jm2",
    "seminormal",
    "dimension-squares",
    "zero-hecke",
    "solomon-module",
    "ribbon",
];

fn criteria() -> Vec<Criterion> {
    let up_to = |k: usize| (1..=k).collect::<Vec<_>>();
    let mut out = vec![
        Criterion {
            id: 1,
            title: "N_lambda(1) transition at n = 4",
            limit: secs(5),
            checks: vec![("n1", vec![4])],
        },
        Criterion {
            id: 2,
            title: "N_lambda(T_omega^2) transition at n = 5",
            limit: secs(60),
            checks: vec![("ntomega", vec![5])],
        },
        Criterion {
            id: 3,
            title: "Jones basis transition at n = 5, printed and D^-1 P2M D",
            limit: secs(60),
            checks: vec![("jones", vec![5])],
        },
        Criterion {
            id: 4,
            title: "(N_32(T2T1T1T2T4T4), T1T3) = 2Q^2",
            limit: secs(1),
            checks: vec![("pairing-example", vec![5])],
        },
        Criterion {
            id: 5,
            title: "Car_4 and Car_4 Upsilon",
            limit: secs(10),
            checks: vec![("car", vec![4])],
        },
        Criterion {
            id: 6,
            title: "Car_n = P2S^tr D3 P2M D for n = 3, 4, 5",
            limit: secs(60),
            checks: vec![("car-factorization", vec![3, 4, 5])],
        },
        Criterion {
            id: 7,
            title: "trace and Frobenius routes agree for n <= 5",
            limit: secs(60),
            checks: vec![("routes", up_to(5))],
        },
        Criterion {
            id: 8,
            title: "Jones characters at n = 4",
            limit: secs(30),
            checks: vec![("fjchar", vec![4])],
        },
        Criterion {
            id: 9,
            title: "box and nabla characters at n = 4",
            limit: secs(30),
            checks: vec![("ncarre", vec![4])],
        },
        Criterion {
            id: 10,
            title: "x_2...x_n = Gamma_n and e_k(x_2..x_n) = sum Gamma_J for n <= 5",
            limit: secs(60),
            checks: vec![("jm-gamma", up_to(5))],
        },
        Criterion {
            id: 11,
            title: "three-way Solomon identity for all (J, K), n <= 5",
            limit: secs(120),
            checks: vec![("ncsf", up_to(5))],
        },
        Criterion {
            id: 12,
            title: "Yang-Baxter Gram matrix is the identity for n <= 4",
            limit: secs(30),
            checks: vec![("yang", up_to(4))],
        },
        Criterion {
            id: 13,
            title: "property suites for n <= 5",
            limit: secs(600),
            checks: PROPERTY_SUITE.iter().map(|id| (*id, up_to(5))).collect(),
        },
    ];
    let mut large = vec![("n1", vec![6]), ("ntomega", vec![6]), ("jm-gamma", vec![6])];
    large.extend(PROPERTY_SUITE.iter().map(|id| (*id, vec![6])));
    out.push(Criterion {
        id: 14,
        title: "n = 6 versions of criteria 1, 2, 10, 13",
        limit: secs(900),
        checks: large,
    });
    out
}

/// Peak resident set size in bytes, where the platform reports it.
fn peak_rss() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

const MEMORY_LIMIT: u64 = 4 << 30;

fn run(criterion: &Criterion) -> (bool, Duration, String) {
    let start = Instant::now();
    let mut detail = String::new();
    let mut ok = true;
    for (id, sizes) in &criterion.checks {
        for &n in sizes {
            let result = catch_unwind(AssertUnwindSafe(|| verify(id, n)));
            match result {
                Ok(Ok(VerificationReport {
                    status: Status::Fail,
                    witness,
                    ..
                })) => {
                    ok = false;
                    if detail.is_empty() {
                        detail = format!(
                            "{id} n={n}: {}",
                            witness.map(|w| w.to_string()).unwrap_or_default()
                        );
                    }
                }
                Ok(Ok(_)) => {}
                Ok(Err(e)) => {
                    ok = false;
                    if detail.is_empty() {
                        detail = format!("{id} n={n}: error {e}");
                    }
                }
                Err(_) => {
                    ok = false;
                    if detail.is_empty() {
                        detail = format!("{id} n={n}: panicked");
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > criterion.limit {
        ok = false;
        if detail.is_empty() {
            detail = format!(
                "took {:.1}s, limit {}s",
                elapsed.as_secs_f64(),
                criterion.limit.as_secs()
            );
        }
    }
    (ok, elapsed, detail)
}

fn main() -> ExitCode {
    hecke_center::cli::init_thread_pool();
    let mut failures = 0;
    for criterion in criteria() {
        let (mut ok, elapsed, mut detail) = run(&criterion);
        if criterion.id == 14 {
            match peak_rss() {
                Some(bytes) if bytes > MEMORY_LIMIT => {
                    ok = false;
                    detail = format!("peak memory {} MiB", bytes >> 20);
                }
                Some(bytes) if detail.is_empty() => {
                    detail = format!("peak memory {} MiB", bytes >> 20)
                }
                _ => {}
            }
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        if !ok {
            failures += 1;
        }
        let suffix = if detail.is_empty() {
            String::new()
        } else {
            format!(" -- {detail}")
        };
        println!(
            "{tag} {:>2} {} ({:.2}s){suffix}",
            criterion.id,
            criterion.title,
            elapsed.as_secs_f64()
        );
    }
    if failures == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria fail");
        ExitCode::FAILURE
    }
}
