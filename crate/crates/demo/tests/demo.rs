use idempo_demo::{quotient, quotient_report, random_finite_report, real_eigen_report};
use serde_json::Value;

#[test]
fn rational_quotient_has_empty_spectrum() {
    let v = quotient_report("Q", "[-2, 0, 0, 1]").unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["spectrum"]["report"]["description"], "Empty");
    assert_eq!(v["table"][3], "e2*e2 = [2, 0]");
}

#[test]
fn bad_input_becomes_an_error_object() {
    let v: Value = serde_json::from_str(&quotient("Q", "[1, 0, 1]")).unwrap();
    assert!(v["error"].is_string());
    let v: Value = serde_json::from_str(&quotient("F4x", "[1, 1]")).unwrap();
    assert!(v["error"].is_string());
}

#[test]
fn finite_eigenvalues_follow_the_description() {
    for seed in 0..20 {
        let v = random_finite_report(5, 2, seed).unwrap();
        let n = v["eigenvalues"].as_array().unwrap().len();
        let expected = match v["spectrum"]["report"]["description"].as_str().unwrap() {
            "Empty" => 0,
            "ZeroOnly" => 1,
            "AllNonzero" => 4,
            _ => 5,
        };
        assert_eq!(n, expected, "seed {seed}");
    }
    assert!(random_finite_report(4, 2, 0).is_err());
}

#[test]
fn real_search_returns_an_idempotent() {
    let v = real_eigen_report(3, 1).unwrap();
    assert!(v["residual"].as_f64().unwrap() <= 1e-9);
    assert!(v["idempotent"].is_array());
}
