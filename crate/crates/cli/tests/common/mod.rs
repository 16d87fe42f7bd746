//! Shared by the golden and acceptance targets.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub const CASES: &[(&str, &[&str])] = &[
    ("verify_fano_pbd", &["verify", "fano.design", "--pbd"]),
    ("verify_fano_bibd", &["verify", "fano.design", "--bibd", "7,7,3,3,1"]),
    ("verify_fano_bibd_json", &["verify", "fano.design", "--bibd", "7,7,3,3,1", "--json"]),
    ("verify_fano_rlambda", &["verify", "fano.design", "--rlambda", "3,1"]),
    ("verify_fano_wrong_params", &["verify", "fano.design", "--bibd", "7,7,3,4,1"]),
    ("verify_broken_pbd", &["verify", "broken.design", "--pbd"]),
    ("verify_broken_pbd_json", &["verify", "broken.design", "--pbd", "--json"]),
    ("verify_missing", &["verify", "missing.design", "--pbd"]),
    ("verify_malformed", &["verify", "malformed.design", "--pbd"]),
    ("verify_short_params", &["verify", "fano.design", "--bibd", "7,7,3,3"]),
    ("verify_near_pencil", &["verify", "near_pencil_5.design", "--pbd"]),
    ("verify_doubled_fano", &["verify", "doubled_fano.design", "--bibd", "7,14,6,3,2"]),
    ("verify_oa", &["verify", "oa_3_5.txt", "--oa"]),
    ("verify_bad_oa_json", &["verify", "bad_oa.txt", "--oa", "--json"]),
    ("bound_sk", &["bound", "stanton-kalbfleisch", "--v", "7", "--k", "3"]),
    ("bound_sk_json", &["bound", "stanton-kalbfleisch", "--v", "4", "--k", "2", "--b", "4", "--json"]),
    ("bound_johnson_code_inapplicable", &["bound", "johnson-code", "--n", "4", "--r", "2", "--delta", "1"]),
    ("bound_johnson_code_json", &["bound", "johnson-code", "--n", "7", "--r", "3", "--delta", "2", "--size", "7", "--json"]),
    ("bound_plackett_burman_fail", &["bound", "plackett-burman", "--k", "5", "--n", "3", "--lambda", "1"]),
    ("bound_plackett_burman_tight", &["bound", "plackett-burman", "--k", "4", "--n", "3", "--lambda", "1"]),
    ("bound_fisher_fano", &["bound", "fisher", "--v", "7", "--b", "7", "--r", "3", "--k", "3", "--lambda", "1"]),
    ("bound_fisher_ag23_json", &["bound", "fisher", "--v", "9", "--b", "12", "--r", "4", "--k", "3", "--lambda", "1", "--json"]),
    ("bound_fisher_bad_identity", &["bound", "fisher", "--v", "8", "--b", "10", "--r", "5", "--k", "4", "--lambda", "2"]),
    ("bound_mann_fail", &["bound", "mann", "--v", "7", "--b", "14", "--r", "6", "--k", "3", "--lambda", "2", "--s", "3"]),
    ("bound_oa_repeated", &["bound", "oa-repeated", "--k", "3", "--n", "2", "--lambda", "1", "--m", "2"]),
    ("bound_johnson_matrix", &["bound", "johnson", "--m", "7", "--n", "7", "--r", "3", "--lambda", "1"]),
    ("bound_johnson_improved_fail", &["bound", "johnson-improved", "--m", "8", "--n", "7", "--r", "3", "--lambda", "1"]),
    ("bound_erdos_de_bruijn", &["bound", "erdos-de-bruijn", "--v", "5", "--k", "3"]),
    ("bound_mullin_vanstone", &["bound", "mullin-vanstone", "--v", "13", "--r", "4", "--lambda", "1", "--b", "13"]),
    ("bound_nonincident", &["bound", "nonincident", "--q", "4", "--s", "6", "--t", "6"]),
    ("bound_west_square", &["bound", "west", "--q", "16"]),
    ("bound_west_json", &["bound", "west", "--q", "2", "--json"]),
    ("bound_stinson_default_ell", &["bound", "stinson", "--v", "13", "--k", "4", "--b", "13"]),
    ("bound_stinson_zero_ell", &["bound", "stinson", "--v", "13", "--k", "4", "--ell", "0"]),
    ("bound_two_point", &["bound", "two-point", "--k", "3", "--eps", "2/5"]),
    ("bound_two_point_json", &["bound", "two-point", "--k", "3", "--eps", "0.4", "--json"]),
    ("bound_unknown", &["bound", "bogus"]),
    ("table_improved", &["table", "johnson-improved-max-m", "--n", "6..8", "--r", "3", "--lambda", "1"]),
    ("table_improved_unbounded", &["table", "johnson-improved-max-m", "--n", "8..10", "--r", "3", "--lambda", "1", "--format", "csv"]),
    ("table_stinson", &["table", "stinson", "--v", "5..13", "--k", "3"]),
    ("table_sk_csv", &["table", "stanton-kalbfleisch", "--v", "4..6", "--k", "2..5", "--format", "csv"]),
    ("table_johnson_code_json", &["table", "johnson-code", "--n", "6..7", "--r", "3", "--delta", "1..2", "--format", "json"]),
    ("table_empty_range", &["table", "stinson", "--v", "9..5", "--k", "3"]),
    ("search_bibd_fano", &["search", "bibd", "--v", "7", "--k", "3", "--lambda", "1"]),
    ("search_bibd_sts9_json", &["search", "bibd", "--v", "9", "--k", "3", "--lambda", "1", "--json"]),
    ("search_bibd_inadmissible", &["search", "bibd", "--v", "6", "--k", "3", "--lambda", "1"]),
    ("search_pbd_none", &["search", "pbd-with-block", "--v", "7", "--k", "3", "--max-b", "6"]),
    ("search_pbd_near_pencil", &["search", "pbd-with-block", "--v", "5", "--k", "4", "--max-b", "5", "--json"]),
    ("search_node_limit", &["search", "bibd", "--v", "9", "--k", "3", "--lambda", "1", "--max-nodes", "10"]),
    ("search_cw_code", &["search", "cw-code", "--n", "7", "--r", "3", "--d", "4"]),
    ("search_cw_code_json", &["search", "cw-code", "--n", "6", "--r", "3", "--d", "4", "--json"]),
    ("search_cw_code_budget", &["search", "cw-code", "--n", "12", "--r", "4", "--d", "4", "--max-nodes", "5"]),
    ("sample_example", &["sample", "--p", "5", "--k", "3", "--bad", "0,1", "--trials", "10000", "--seed", "42"]),
    ("sample_example_json", &["sample", "--p", "5", "--k", "3", "--bad", "0,1", "--trials", "1000", "--seed", "7", "--json"]),
    ("sample_no_bad", &["sample", "--p", "5", "--k", "3", "--bad", ""]),
    ("sample_all_bad", &["sample", "--p", "5", "--k", "3", "--bad", "0,1,2,3,4"]),
    ("sample_oa_file", &["sample", "--oa", "oa_3_5.txt", "--bad", "0,1"]),
    ("sample_bad_oa", &["sample", "--oa", "bad_oa.txt", "--bad", "0"]),
    ("sample_point_out_of_range", &["sample", "--p", "5", "--k", "3", "--bad", "5"]),
    ("sample_k_too_large", &["sample", "--p", "3", "--k", "4"]),
];

pub fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_vardesign"))
        .args(args)
        .current_dir(manifest().join("tests/fixtures"))
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

pub fn transcript(args: &[&str]) -> (i32, String) {
    let (code, stdout, stderr) = run(args);
    if code == 2 {
        assert!(stdout.is_empty(), "{args:?} wrote to stdout on exit 2");
        assert!(!stderr.is_empty(), "{args:?} exited 2 without a message");
    }
    let text = format!("$ vardesign {}\nexit: {code}\n--- stdout\n{stdout}--- stderr\n{stderr}", args.join(" "));
    (code, text)
}


/// Runs every case twice and compares with the stored transcripts; returns
/// one message per mismatch.
pub fn golden_mismatches(update: bool) -> Vec<String> {
    let dir = manifest().join("tests/golden");
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let (_, first) = transcript(args);
        let (_, second) = transcript(args);
        if first != second {
            mismatches.push(format!("{name}: output differs between runs"));
            continue;
        }
        let path = dir.join(format!("{name}.txt"));
        if update {
            std::fs::write(&path, &first).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == first => {}
            Ok(expected) => mismatches.push(format!("{name}:\n--- expected\n{expected}--- actual\n{first}")),
            Err(_) => mismatches.push(format!("{name}: missing golden file {}", path.display())),
        }
    }
    mismatches
}
