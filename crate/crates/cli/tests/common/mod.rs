#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub struct GoldenCase {
    pub args: &'static [&'static str],
    /// File under `tests/golden` holding the exact stdout, if any is expected.
    pub golden: Option<&'static str>,
    pub exit: i32,
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        args: &["gen", "--name", "motzkin", "--rows", "5", "--format", "csv"],
        golden: Some("gen_motzkin.csv"),
        exit: 0,
    },
    GoldenCase {
        args: &[
            "gen", "--z", "1", "--a", "1,1", "--tail", "zero", "--rows", "3",
        ],
        golden: Some("gen_pascal_az.txt"),
        exit: 0,
    },
    GoldenCase {
        args: &["gen", "--name", "pascal", "--rows", "0"],
        golden: None,
        exit: 2,
    },
    GoldenCase {
        args: &["check", "jacobi-tp", "--params", "2,1,1,2,1"],
        golden: Some("check_jacobi_tp.txt"),
        exit: 0,
    },
    GoldenCase {
        args: &[
            "check", "tp", "--name", "catalan", "--rows", "8", "--order", "3",
        ],
        golden: Some("check_tp_catalan.txt"),
        exit: 0,
    },
    GoldenCase {
        args: &["check", "pf", "--seq", "1,1,1"],
        golden: Some("check_pf_fails.txt"),
        exit: 1,
    },
    GoldenCase {
        args: &["check", "pf", "--seq", "1,1,1", "--format", "json"],
        golden: Some("check_pf_fails.json"),
        exit: 1,
    },
    GoldenCase {
        args: &["catalan-like", "--params", "2,1,2,1", "--count", "5"],
        golden: Some("catalan_like_catalan.txt"),
        exit: 0,
    },
    GoldenCase {
        args: &["catalan-like", "--params", "2,2,2,1", "--count", "5"],
        golden: Some("catalan_like_central.txt"),
        exit: 0,
    },
    GoldenCase {
        args: &["catalan-like", "--params", "1,0,1,0", "--count", "4"],
        golden: Some("catalan_like_ones.txt"),
        exit: 0,
    },
];

pub fn riordan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riordan"))
        .args(args)
        .output()
        .expect("riordan binary runs")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

/// `Ok(())` when the case matches its golden output and exit status, twice
/// in a row with identical bytes.
pub fn check_case(case: &GoldenCase) -> Result<(), String> {
    let first = riordan(case.args);
    let second = riordan(case.args);
    let code = first.status.code();
    if code != Some(case.exit) {
        return Err(format!(
            "{:?}: exit {code:?}, expected {}",
            case.args, case.exit
        ));
    }
    if first.stdout != second.stdout || first.stderr != second.stderr {
        return Err(format!("{:?}: output differs between runs", case.args));
    }
    match case.golden {
        Some(name) => {
            let expected = std::fs::read(golden_path(name)).map_err(|e| format!("{name}: {e}"))?;
            if first.stdout != expected {
                return Err(format!(
                    "{:?}: stdout does not match {name}:\n{}",
                    case.args,
                    String::from_utf8_lossy(&first.stdout)
                ));
            }
        }
        None => {
            if !first.stdout.is_empty() || first.stderr.is_empty() {
                return Err(format!(
                    "{:?}: usage error should print only to stderr",
                    case.args
                ));
            }
        }
    }
    Ok(())
}
