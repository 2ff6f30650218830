//! End-to-end tests of the command line through `cli::run`.

use kahler_spectra::classifier::{ClassificationResult, LastLemmaReport};
use kahler_spectra::cli::{self, CoeffsReport, CpnFitReport, PairsReport};
use kahler_spectra::Rational;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("kahler-spectra").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Parses JSON output and checks that re-serializing it is byte-identical.
fn round_trip<T: Serialize + DeserializeOwned>(json: &str) -> T {
    let value: T = serde_json::from_str(json).unwrap();
    let mut again = serde_json::to_string_pretty(&value).unwrap();
    again.push('\n');
    assert_eq!(again, json);
    value
}

#[test]
fn classify_fujita_cell() {
    let (code, out, _) = run("classify -p 2 -n 8 --format json");
    assert_eq!(code, 0);
    let r: ClassificationResult = round_trip(&out);
    assert_eq!(serde_json::to_value(r.q2_verdict).unwrap(), "RigidViaFujita");
    assert_eq!(r.lambdas.lambda1, Rational::zero());
    assert_eq!(r.lambdas.lambda2, Rational::frac(13, 3));
    assert_eq!(r.lambdas.lambda3, Rational::frac(-1, 6));
}

#[test]
fn classify_table_shows_discrepancy_warning() {
    let (code, out, _) = run("classify -p 1 -n 6");
    assert_eq!(code, 0);
    assert!(out.contains("ConditionFails"), "{out}");
    assert!(out.contains("warning"), "{out}");
}

#[test]
fn pairs_count_four() {
    let (code, out, _) = run("pairs --count 4");
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    let fields: Vec<&str> = last.split_whitespace().collect();
    assert_eq!(fields, ["4", "3976", "9408"]);
}

#[test]
fn pairs_both_methods_json() {
    let (code, out, _) = run("pairs --count 5 --method both --format json");
    assert_eq!(code, 0);
    let r: PairsReport = round_trip(&out);
    assert_eq!(r.agree, Some(true));
    assert_eq!(r.pairs.len(), 5);
    assert_eq!(r.pairs[4].n.to_string(), "131043");
    assert!(out.contains("\"p\": \"55385\""));
}

#[test]
fn pairs_by_max_n_and_bruteforce() {
    let (code, out, _) = run("pairs --max-n 1000 --method bruteforce --format json");
    assert_eq!(code, 0);
    let r: PairsReport = round_trip(&out);
    let ns: Vec<String> = r.pairs.iter().map(|e| e.n.to_string()).collect();
    assert_eq!(ns, ["3", "48", "675"]);
}

#[test]
fn verify_lastlemma_reports_the_known_diff() {
    let (code, out, _) = run("verify lastlemma --max-n 100 --format json");
    assert_eq!(code, cli::EXIT_DIFF);
    let r: LastLemmaReport = round_trip(&out);
    let diff: Vec<String> = r.diff().iter().map(|c| c.to_string()).collect();
    assert_eq!(diff, ["(1,6)", "(1,7)"]);

    let (code, out, _) = run("verify lastlemma --max-n 100");
    assert_eq!(code, 2);
    assert!(out.contains("only claimed  {(1,6), (1,7)}"), "{out}");
}

#[test]
fn verify_exact_identities_pass() {
    for check in ["duality", "a2a", "pairs"] {
        let (code, out, err) = run(&format!("verify {check} --max-n 60"));
        assert_eq!(code, 0, "{check}: {out}{err}");
    }
    let (code, out, _) = run("verify a2a --max-n 30 --format json");
    assert_eq!(code, 0);
    assert!(out.contains("\"violations\": []"));
}

#[test]
fn coeffs_cp2_function_values() {
    let (code, out, _) = run("coeffs -p 0 -n 2 --c 4 --format json");
    assert_eq!(code, 0);
    let r: CoeffsReport = round_trip(&out);
    assert_eq!(r.a2_const_hsc, Some(Rational::frac(124, 15)));
    assert_eq!(r.a1_coefficient, Rational::frac(1, 6));
    assert_eq!(r.a0, Rational::one());
}

#[test]
fn coeffs_canonicalizes_degree() {
    let (_, a, _) = run("coeffs -p 14 -n 8 --format json");
    let (_, b, _) = run("coeffs -p 2 -n 8 --format json");
    assert_eq!(a, b);
    let r: CoeffsReport = round_trip(&a);
    assert_eq!(r.p, 2);
    assert_eq!(r.condition.unwrap().reduced_coeff, Rational::from(2));
}

#[test]
fn cpn_fit_cp1() {
    let (code, out, err) = run("cpn-fit -n 1 --c 4 --format json");
    assert_eq!(code, 0, "{err}");
    let r: CpnFitReport = round_trip(&out);
    assert_eq!(r.digits, 60);
    assert_eq!(r.coefficients.len(), 5);
    let a1 = &r.coefficients[1];
    assert_eq!(a1.predicted_ratio, Some(Rational::frac(4, 3)));
    assert_eq!(a1.predicted_form.as_deref(), Some("1/3·c^1"));
    let err: f64 = a1.relative_error.as_ref().unwrap().value.parse().unwrap();
    assert!(err < 1e-6);
    assert!(r.volume.value.starts_with("3.14159265358979323846"));
    assert!(r.coefficients.iter().all(|c| c.fitted.digits == 60));
}

#[test]
fn cpn_fit_accepts_real_literals() {
    let (code, out, err) = run("cpn-fit -n 1 --c 4 --tmin 1e-3 --tmax 1/100 --points 24 --digits 40");
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("predicted 4/3"), "{out}");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        "",
        "classify -p 1",
        "classify -p x -n 3",
        "pairs",
        "pairs --count 3 --max-n 10",
        "pairs --count 0",
        "coeffs -p 1 -n 3 --c 1/0",
        "coeffs -p 9 -n 3",
        "verify nothing --max-n 5",
        "verify a2a --max-n 1",
        "cpn-fit -n 1 --c -4",
        "cpn-fit -n 1 --c 4 --tmin abc",
        "cpn-fit -n 1 --c 4 --digits 5",
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}: {out}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, _) = run("--help");
    assert_eq!(code, 0);
    assert!(out.contains("cpn-fit"));
    let (code, out, _) = run("--version");
    assert_eq!(code, 0);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn binary_exit_code_propagates() {
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_kahler-spectra"))
        .args(["verify", "lastlemma", "--max-n", "20"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&status.stdout).contains("(1,6)"));
}
