use mahler_cli::run;
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("mahler").chain(args.iter().copied());
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, text) = invoke(args);
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

fn ln(x: f64) -> f64 {
    x.ln()
}

#[test]
fn mt_four_thirds() {
    let (code, v) = json(&["mt", "4/3", "--t", "2"]);
    assert_eq!(code, 0);
    let value = v["result"]["value"].as_f64().unwrap();
    assert!((value * value - (ln(3.0).powi(2) + ln(2.0).powi(2))).abs() < 1e-9);
    assert_eq!(v["result"]["witness"], serde_json::json!(["2/3", "2"]));
}

#[test]
fn attainment_thirty_is_not_attained() {
    let (code, v) = json(&["attainment", "30", "--t", "2"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["attained"], false);
    assert_eq!(r["witness"], serde_json::json!([]));
    assert_eq!(r["primes"], serde_json::json!([5, 3, 2]));
    assert_eq!(r["certificate"]["candidates"], serde_json::json!([]));
    let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["D", "primes", "t", "attained", "witness", "value", "certificate"]);
}

#[test]
fn measure_of_quadratic() {
    let (code, v) = json(&["measure", "--quadratic", "1,-7,7"]);
    assert_eq!(code, 0);
    assert!((v["result"]["value"].as_f64().unwrap() - ln(7.0)).abs() < 1e-12);
    assert_eq!(v["result"]["stability"], "stable_outside");
}

#[test]
fn measure_of_rational_and_surd() {
    let (_, v) = json(&["measure", "-7/6"]);
    assert!((v["result"]["value"].as_f64().unwrap() - ln(7.0)).abs() < 1e-12);
    let (_, v) = json(&["measure", "--surd", "(7/3)^(1/2)"]);
    assert!((v["result"]["value"].as_f64().unwrap() - ln(7.0)).abs() < 1e-12);
    assert_eq!(v["result"]["norm"], "-7/3");
}

#[test]
fn plot_rows() {
    let (code, text) = invoke(&["plot", "6", "--t-min", "1", "--t-max", "3", "--step", "1", "--inf"]);
    assert_eq!(code, 0);
    let rows: Vec<(String, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (t, v) = l.split_once(',').unwrap();
            (t.to_string(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(text.lines().next(), Some("t,value"));
    let ts: Vec<&str> = rows.iter().map(|(t, _)| t.as_str()).collect();
    assert_eq!(ts, ["1", "2", "3", "inf"]);
    let expected = [
        ln(6.0),
        (ln(2.0).powi(2) + ln(3.0).powi(2)).sqrt(),
        (ln(2.0).powi(3) + ln(3.0).powi(3)).cbrt(),
        ln(3.0),
    ];
    for ((_, v), e) in rows.iter().zip(expected) {
        assert!((v - e).abs() < 1e-12);
    }

    let (_, text) = invoke(&["plot", "1", "--t-min", "1", "--t-max", "2", "--step", "0.5"]);
    assert_eq!(text, "t,value\n1,0\n1.5,0\n2,0\n");

    let (_, text) = invoke(&["plot", "--surd", "30", "--k", "2", "--t-min", "2", "--t-max", "2", "--step", "1"]);
    let v: f64 = text.lines().nth(1).unwrap().split_once(',').unwrap().1.parse().unwrap();
    assert!((v * v - (ln(5.0).powi(2) + ln(3.0).powi(2) + ln(2.0).powi(2))).abs() < 1e-9);
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn plot_columns_never_increase() {
    for target in [["360/7"], ["-1001/64"], ["5040"]] {
        let (_, text) = invoke(&["plot", target[0], "--t-min", "1", "--t-max", "6", "--step", "0.1", "--inf"]);
        let values: Vec<f64> = text.lines().skip(1).map(|l| l.split_once(',').unwrap().1.parse().unwrap()).collect();
        assert!(values.windows(2).all(|w| w[1] <= w[0] + 1e-12), "{target:?}");
    }
}

#[test]
fn plot_rejects_bad_grids() {
    let (code, v) = json(&["plot", "6", "--t-min", "0.5"]);
    assert_eq!((code, v["error"]["code"].as_str()), (1, Some("INVALID_T")));
    let (code, _) = json(&["plot", "6", "--step", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["mt", "5040/11", "--t", "1.7"],
        vec!["attainment", "2310", "--t", "inf"],
        vec!["small-quadratics", "21"],
        vec!["verify-paper"],
    ] {
        assert_eq!(invoke(&args), invoke(&args));
    }
}

#[test]
fn domain_errors_exit_one_with_distinct_codes() {
    let cases = [
        (vec!["mt", "0", "--t", "2"], "ZERO_VALUE"),
        (vec!["mt", "3", "--t", "0.5"], "INVALID_T"),
        (vec!["mt-surd", "12", "2", "--t", "2"], "NOT_SQUAREFREE"),
        (vec!["attainment", "21", "--t", "1"], "T_OUT_OF_RANGE"),
        (vec!["certify", "21"], "WRONG_REGIME"),
        (vec!["oracle-check", "8192", "--t", "2"], "TOO_LARGE"),
        (vec!["measure", "--quadratic", "1,-3,2"], "INVALID_QUADRATIC"),
        (vec!["mt", "79228162514264337593543950337", "--t", "2"], "FACTORIZATION_OVERFLOW"),
    ];
    for (args, code) in cases {
        let (exit, v) = json(&args);
        assert_eq!(exit, 1, "{args:?}");
        assert_eq!(v["error"]["code"], code, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [vec!["frobnicate"], vec!["mt", "4/3"], vec!["mt", "1.5", "--t", "2"], vec!["mt-surd", "30", "x", "--t", "2"]] {
        let (exit, v) = json(&args);
        assert_eq!(exit, 2, "{args:?}");
        assert!(matches!(v["error"]["code"].as_str(), Some("USAGE_ERROR" | "PARSE_ERROR")), "{args:?}");
    }
    let (exit, text) = invoke(&["--help"]);
    assert_eq!(exit, 0);
    assert!(text.contains("Usage"));
}

#[test]
fn log_base_changes_display_only() {
    let (_, natural) = json(&["mt", "8", "--t", "inf"]);
    let (_, binary) = json(&["mt", "8", "--t", "inf", "--log-base", "2"]);
    assert!((natural["result"]["value"].as_f64().unwrap() - ln(2.0)).abs() < 1e-12);
    assert!((binary["result"]["value"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(natural["result"]["witness"], binary["result"]["witness"]);
}

#[test]
fn timing_only_on_request() {
    let (_, v) = json(&["mt", "6", "--t", "2"]);
    assert!(v.get("timing").is_none());
    let (_, v) = json(&["mt", "6", "--t", "2", "--timing"]);
    assert!(v["timing"]["elapsed_ms"].as_f64().unwrap() >= 0.0);
}

#[test]
fn certify_single_and_sweep() {
    let (code, v) = json(&["certify", "2310", "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["empty"], true);
    assert_eq!(v["result"]["certificate"]["a_range"], serde_json::json!([1, 10]));
    let (code, v) = json(&["certify", "--up-to", "500", "--t", "inf"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["failures"], serde_json::json!([]));
}

#[test]
fn oracle_check_agrees() {
    let (code, v) = json(&["oracle-check", "360/7", "--t", "1.5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["agree"], true);
    let (_, v) = json(&["oracle-check", "10/3", "--t", "2", "--extraneous", "7"]);
    assert_eq!(v["result"]["agree"], true);
}

#[test]
fn verify_paper_passes() {
    let (code, v) = json(&["verify-paper"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["failed"], 0);
    let names: Vec<&str> = v["result"]["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.starts_with("sqrt42_dual_witness_cost")));
}
