//! Shared fixture table for the golden-file and acceptance tests.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// `(golden file stem, arguments)`; each run uses `--format json`.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("zero_ab_isotropy", &["isotropy", "--a", "0", "--b", "0"]),
    (
        "quintic_simple",
        &["simple", "--a", "x^2", "--b", "x^5+x^4+x^3+x^2-2*x-1"],
    ),
    (
        "quintic_isotropy",
        &["isotropy", "--a", "x^2", "--b", "x^5+x^4+x^3+x^2-2*x-1"],
    ),
    (
        "quintic_eps0_isotropy",
        &["isotropy", "--a", "x^2", "--b", "x^5+x^4+x^3+x^2-2*x"],
    ),
    (
        "quintic_eps0_simple",
        &["simple", "--a", "x^2", "--b", "x^5+x^4+x^3+x^2-2*x"],
    ),
    (
        "cubic_b_isotropy",
        &["isotropy", "--a", "2*x", "--b", "x^3"],
    ),
    (
        "cubic_b_stable",
        &["stable", "--a", "2*x", "--b", "x^3", "--poly", "2*y+x^2+1"],
    ),
    (
        "cubic_b_flow",
        &[
            "flow", "--a", "2*x", "--b", "x^3", "--point", "1,-1", "--order", "6",
        ],
    ),
    ("const_b_isotropy", &["isotropy", "--a", "0", "--b", "1"]),
    (
        "constant_ab_isotropy",
        &["isotropy", "--a", "1", "--b", "1"],
    ),
    (
        "singular_free",
        &["singular", "--dx", "1+x*y+x^3", "--dy", "x+x^2*y"],
    ),
    (
        "singular_free_stable",
        &[
            "stable",
            "--dx",
            "1+x*y+x^3",
            "--dy",
            "x+x^2*y",
            "--poly",
            "y",
        ],
    ),
    (
        "exp_flow",
        &[
            "flow", "--dx", "1", "--dy", "y", "--point", "0,1", "--order", "6",
        ],
    ),
    (
        "commute_residuals",
        &["commute", "--dx", "1", "--dy", "y", "--map", "x; x + y"],
    ),
];

/// Malformed or out-of-domain invocations with their expected exit code.
pub const EXIT_CODES: &[(&[&str], i32)] = &[
    (&["simple", "--a", "2x", "--b", "1"], 2),
    (&["simple", "--a", "x^2", "--b", "(x+1"], 2),
    (&["simple", "--a", "x*y", "--b", "1"], 2),
    (&["simple", "--a", "x"], 2),
    (&["isotropy", "--a", "1/0", "--b", "1"], 2),
    (
        &["commute", "--dx", "1", "--dy", "y", "--word", "elemQ(x; 1)"],
        2,
    ),
    (&["commute", "--dx", "1", "--dy", "y"], 2),
    (&["conjugate", "--dx", "1", "--dy", "y", "--map", "x; y"], 2),
    (&["flow", "--dx", "1", "--dy", "y", "--point", "0;1"], 2),
    (&["nonsense"], 2),
    (&["flow", "--dx", "x", "--dy", "y", "--point", "0,0"], 1),
    (
        &[
            "flow", "--dx", "1", "--dy", "y", "--point", "0,0", "--order", "0",
        ],
        1,
    ),
    (&["singular", "--dx", "0", "--dy", "0"], 1),
    (&["stable", "--dx", "1", "--dy", "y", "--poly", "0"], 1),
    (
        &["commute", "--dx", "1", "--dy", "y", "--word", "elemY(x; 0)"],
        1,
    ),
    (&["commute", "--dx", "1", "--dy", "y", "--word", "id"], 0),
];

pub fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_derivkit")
}

pub fn golden_path(stem: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{stem}.json"))
}

pub fn run(args: &[&str]) -> Output {
    Command::new(binary())
        .args(args)
        .env_remove("DERIVKIT_FORMAT")
        .env_remove("DERIVKIT_ORDER")
        .env_remove("DERIVKIT_PROBE_DEGREE")
        .output()
        .expect("binary runs")
}

pub fn run_json(args: &[&str]) -> Output {
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--format", "json"]);
    run(&full)
}
