use std::path::PathBuf;
use std::process::Command;

use groebner_cells::cli::{
    run, BettiReport, CanonicalReport, CellReport, DimReport, PsiReport, StrataReport, VERIFY_OK,
};
use groebner_cells::hilburch::ParamMatrixJson;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn gcell(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("gcell").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(args: &[&str], file: &str) -> String {
    let (code, out, err) = gcell(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    let expected = std::fs::read_to_string(data(&format!("golden/{file}"))).unwrap();
    assert_eq!(out, expected, "{args:?} differs from golden/{file}");
    out
}

#[test]
fn cell_example1_golden() {
    let out = golden(&["cell", "--m", "0,5,7,11", "--json"], "cell_example1.json");
    let r: CellReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.t, 3);
    assert_eq!(r.d, vec![5, 2, 4]);
    assert_eq!(r.h, vec![1, 2, 3, 3, 3, 3, 3, 2, 1, 1, 1]);
    assert_eq!(r.dimension, Some(30));
    assert_eq!(r.special_i, vec![1, 3]);
    assert_eq!(r.special_j, vec![1, 2, 3]);
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out);
    golden(&["cell", "--m", "0,5,7,11"], "cell_example1.txt");
}

#[test]
fn cell_example2_golden() {
    let out = golden(&["cell", "--m", "0,3,4,5,10,11,12,14,15,16,19,20,21", "--json"], "cell_example2.json");
    let r: CellReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.dimension, Some(195));
    assert_eq!(r.below_diagonal_linear, 12);
    assert_eq!(r.below_diagonal_zero, 45);
}

#[test]
fn dim_golden() {
    let out = golden(&["dim", "--m", "0,5,7,11", "--json"], "dim_example1.json");
    let r: DimReport = serde_json::from_str(&out).unwrap();
    assert_eq!((r.dimension, r.closed_form, r.compact_form), (30, 30, 30));
    assert_eq!(r.bounds, Some((26, 46)));
}

#[test]
fn canonicalize_golden() {
    let gens = data("example3.txt");
    let out = golden(&["canonicalize", "--gens", &gens, "--json"], "canonicalize_example3.json");
    let r: CanonicalReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.matrix.entries[0], vec!["2*y-2", "-2*y+1", "0"]);
    assert_eq!(r.moves, vec![(3, 2), (1, 3), (2, 3)]);
    let (_, with_m, _) = gcell(&["canonicalize", "--gens", &gens, "--m", "0,2,3,5", "--json"]);
    assert_eq!(with_m, out);
    let (code, _, err) = gcell(&["canonicalize", "--gens", &gens, "--m", "0,2,3,6"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("WRONG_INITIAL_IDEAL") || err.starts_with("LEADING_TERM_MISMATCH"), "{err}");
}

#[test]
fn psi_goldens() {
    let a = data("aprime.json");
    golden(&["psi", "--m", "0,2,3,5", "--matrix", &a], "psi_example3.txt");
    let out = golden(&["psi", "--m", "0,2,3,5", "--matrix", &a, "--homogeneous", "--json"], "psi_bar_example3.json");
    let r: PsiReport = serde_json::from_str(&out).unwrap();
    assert!(r.homogeneous);
    assert_eq!(r.f.len(), 4);
}

#[test]
fn betti_and_verify_goldens() {
    let a = data("aprime.json");
    let out = golden(&["betti", "--m", "0,2,3,5", "--matrix", &a, "--json"], "betti_example3.json");
    let r: BettiReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.beta0.values().sum::<usize>(), 3);
    let out = golden(&["verify", "--m", "0,2,3,5", "--matrix", &a], "verify_example3.txt");
    assert_eq!(out.trim_end(), VERIFY_OK);
    let out = golden(&["strata-codim", "--m", "0,5,7,11", "--beta", "8=1", "--json"], "strata_example1.json");
    let r: StrataReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.codim.get(&8), Some(&1));
}

#[test]
fn sample_golden_round_trips() {
    let out = golden(
        &["sample", "--m", "0,5,7,11", "--seed", "42", "--field", "fp", "--prime", "10007", "--trials", "3", "--json"],
        "sample_example1.json",
    );
    let docs: Vec<ParamMatrixJson> = serde_json::from_str(&out).unwrap();
    assert_eq!(docs.len(), 3);
    for d in docs {
        let a = d.clone().into_matrix(None).unwrap();
        assert_eq!(a.to_json(), d);
    }
    let (_, single, _) = gcell(&["sample", "--m", "0,5,7,11", "--seed", "42", "--field", "fp", "--prime", "10007", "--json"]);
    let one: ParamMatrixJson = serde_json::from_str(&single).unwrap();
    let first: Vec<ParamMatrixJson> = serde_json::from_str(&out).unwrap();
    assert_eq!(one, first[0]);
}

#[test]
fn matrix_file_checks() {
    let a = data("aprime.json");
    let (code, _, err) = gcell(&["verify", "--m", "0,2,3,6", "--matrix", &a]);
    assert_eq!(code, 2);
    assert!(err.starts_with("BAD_M_VECTOR"), "{err}");
    let (code, _, err) = gcell(&["betti", "--matrix", &a, "--field", "fp", "--prime", "3"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("CHAR_TOO_SMALL"), "{err}");
    let (code, _, err) = gcell(&["verify", "--matrix", &data("missing.json")]);
    assert_eq!(code, 2);
    assert!(err.starts_with("IO_ERROR"), "{err}");
    let (code, _, err) = gcell(&["psi", "--matrix", &data("bound_violation.json")]);
    assert_eq!(code, 2);
    assert_eq!(err.trim_end(), "BOUND_VIOLATION(3,2,1,0)");
}

#[test]
fn binary_matches_library_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gcell");
    let out = Command::new(bin).args(["cell", "--m", "0,5,7,11", "--json"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), gcell(&["cell", "--m", "0,5,7,11", "--json"]).1);
    let out = Command::new(bin).args(["dim", "--m", "0,2,2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("NOT_LEXSEGMENT"));
}
