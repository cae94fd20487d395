//! Replays the worked examples. Expected values are built from the primes
//! involved at run time (sums of powers of `ln p`), never stored as decimals.

use mahler_core::quadfield::{
    attainment_in_q_sqrt_d, certify_non_attainment, metric_mahler_surd, validate_attaining_decomposition,
    MixedDecomposition,
};
use mahler_core::ratopt::metric_mahler_rational;
use mahler_core::{Algebraic, QuadraticNumber, Rational, Root, SquarefreeD, Surd, TParam};
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::Num;

/// Library entry points the replay goes through, replaceable for mutation
/// testing.
pub struct Hooks {
    pub quadratic_norm: fn(&QuadraticNumber) -> Rational,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks {
            quadratic_norm: QuadraticNumber::norm,
        }
    }
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

const TOL: f64 = 1e-9;

struct Recorder(Vec<Check>);

impl Recorder {
    fn close(&mut self, name: impl Into<String>, expected: f64, computed: f64, tol: f64) {
        let pass = (expected - computed).abs() <= tol;
        self.push(name, json!(Num(expected)), json!(Num(computed)), pass);
    }

    fn truth(&mut self, name: impl Into<String>, expected: impl Serialize, computed: impl Serialize, pass: bool) {
        self.push(name, json!(expected), json!(computed), pass);
    }

    fn push(&mut self, name: impl Into<String>, expected: Value, computed: Value, pass: bool) {
        self.0.push(Check {
            name: name.into(),
            expected,
            computed,
            pass,
        });
    }
}

fn ln(p: u64) -> f64 {
    (p as f64).ln()
}

/// `(Σ (ln p)^t)^(1/t)`, or `max ln p` for `t = ∞`.
fn prime_norm(primes: &[u64], t: TParam) -> f64 {
    match t {
        TParam::Finite(t) => primes.iter().map(|&p| ln(p).powf(t)).sum::<f64>().powf(1.0 / t),
        TParam::Infinity => primes.iter().map(|&p| ln(p)).fold(0.0, f64::max),
    }
}

fn sf(d: u64) -> SquarefreeD {
    SquarefreeD::new(d).expect("fixed squarefree input")
}

fn rat(n: i128, d: u128) -> Algebraic {
    Algebraic::Rational(Rational::from_ratio(n, d).expect("nonzero"))
}

fn root_of(base: Rational) -> Algebraic {
    Algebraic::Surd(Surd::new(base, 2).expect("positive base"))
}

fn sqrt_of(p: u64) -> Algebraic {
    root_of(Rational::from_integer(p as i128).expect("nonzero"))
}

fn quad(a: i64, b: i64, c: i64, root: Root) -> QuadraticNumber {
    QuadraticNumber::new(a, b, c, root).expect("fixed irreducible quadratic")
}

fn finite(t: f64) -> TParam {
    TParam::Finite(t)
}

fn t_label(t: TParam) -> String {
    t.to_string()
}

fn valid(d: &SquarefreeD, k: u32, t: TParam, dec: &MixedDecomposition) -> bool {
    validate_attaining_decomposition(d, k, t, dec).is_ok_and(|v| v.is_valid())
}

fn sqrt30(r: &mut Recorder) {
    let d = sf(30);
    for t in [1.0, 1.5, 2.0, 3.0] {
        let (v, _) = metric_mahler_surd(&d, 2, finite(t)).expect("valid input");
        let expected: f64 = [5, 3, 2].iter().map(|&p| ln(p).powf(t)).sum();
        r.close(format!("sqrt30_power_sum_t{t}"), expected, v.powf(t), TOL);
    }
    let (v, _) = metric_mahler_surd(&d, 2, TParam::Infinity).expect("valid input");
    r.close("sqrt30_t_inf", ln(5), v, TOL);
    let primes = MixedDecomposition::new(vec![sqrt_of(2), sqrt_of(3), sqrt_of(5)]);
    for t in [finite(1.5), finite(2.0), TParam::Infinity] {
        r.truth(format!("sqrt30_prime_roots_attain_t{}", t_label(t)), true, valid(&d, 2, t, &primes), valid(&d, 2, t, &primes));
    }
    let report = attainment_in_q_sqrt_d(&d, finite(2.0)).expect("valid input");
    r.truth("sqrt30_not_attained_in_field", false, report.attained, !report.attained);
    let cert = certify_non_attainment(&d, finite(2.0)).expect("non-attained regime");
    r.truth("sqrt30_certificate_empty", 0, cert.candidates.len(), cert.candidates.is_empty());
}

fn sqrt42(r: &mut Recorder) {
    let d = sf(42);
    let (v, _) = metric_mahler_surd(&d, 2, finite(2.0)).expect("valid input");
    r.close("sqrt42_power_sum_t2", prime_norm(&[7, 3, 2], finite(2.0)).powi(2), v * v, TOL);
    let roots = MixedDecomposition::new(vec![sqrt_of(2), sqrt_of(3), sqrt_of(7)]);
    let in_field = MixedDecomposition::new(vec![
        root_of(Rational::from_ratio(7, 6).expect("nonzero")),
        rat(3, 1),
        rat(2, 1),
    ]);
    for t in [finite(1.5), finite(2.0), TParam::Infinity] {
        let label = t_label(t);
        r.close(format!("sqrt42_dual_witness_cost_t{label}"), roots.cost(t), in_field.cost(t), TOL);
        let both = valid(&d, 2, t, &roots) && valid(&d, 2, t, &in_field);
        r.truth(format!("sqrt42_dual_witness_valid_t{label}"), true, both, both);
    }
    let report = attainment_in_q_sqrt_d(&d, finite(2.0)).expect("valid input");
    let witness = report.witness.as_ref().map(|w| w.to_string());
    let expected = in_field.to_string();
    r.truth("sqrt42_field_witness", &expected, &witness, witness.as_deref() == Some(expected.as_str()));
}

fn sqrt21(r: &mut Recorder, hooks: &Hooks) {
    let d = sf(21);
    let big = quad(1, -7, 7, Root::Plus);
    let small = quad(1, -3, -3, Root::Minus);
    r.close("sqrt21_large_factor_measure", ln(7), big.mahler().get(), 1e-12);
    let m = small.mahler().get();
    r.truth("sqrt21_small_factor_between_log3_and_log7", "(ln 3, ln 7)", Num(m), ln(3) < m && m < ln(7));

    let split = MixedDecomposition::new(vec![rat(-1, 1), big.into(), small.into()]);
    let product = split.multiplies_to(&d, 2).unwrap_or(false);
    r.truth("sqrt21_split_product", true, product, product);

    // Each quadratic norm must equal the product of its two conjugates, and
    // the norms must multiply to Norm(√21) = −21 (Norm(−1) = 1 in a quadratic field).
    let mut norms_ok = true;
    let mut norm_product = Rational::one();
    for q in [big, small] {
        let norm = (hooks.quadratic_norm)(&q);
        let (a, b, c) = q.coefficients();
        let (r1, i1) = quad(a, b, c, Root::Plus).approx();
        let (r2, i2) = quad(a, b, c, Root::Minus).approx();
        let conjugate_product = r1 * r2 - i1 * i2;
        norms_ok &= (norm.to_f64() - conjugate_product).abs() <= TOL * conjugate_product.abs().max(1.0);
        norm_product = &norm_product * &norm;
    }
    let expected_norm = Rational::from_integer(-21).expect("nonzero");
    norms_ok &= norm_product == expected_norm;
    r.truth("sqrt21_split_norms", expected_norm.to_string(), norm_product.to_string(), norms_ok);

    let at_inf = valid(&d, 2, TParam::Infinity, &split);
    r.truth("sqrt21_split_attains_at_inf", true, at_inf, at_inf);
    r.close("sqrt21_split_value_at_inf", ln(7), split.cost(TParam::Infinity), TOL);
    let at_two = valid(&d, 2, finite(2.0), &split);
    r.truth("sqrt21_split_rejected_at_t2", false, at_two, !at_two);

    let report = attainment_in_q_sqrt_d(&d, TParam::Infinity).expect("valid input");
    let witness = report.witness.as_ref().map(|w| w.to_string());
    let expected = MixedDecomposition::new(vec![root_of(Rational::from_ratio(7, 3).expect("nonzero")), rat(3, 1)]).to_string();
    r.truth("sqrt21_field_witness", &expected, &witness, witness.as_deref() == Some(expected.as_str()));
    r.close("sqrt21_value_at_inf", ln(7), report.value, TOL);
}

fn rationals(r: &mut Recorder) {
    let six = Rational::from_integer(6).expect("nonzero");
    let dec = metric_mahler_rational(&six, finite(2.0)).expect("valid input");
    r.close("six_t2_value", prime_norm(&[3, 2], finite(2.0)), dec.total_cost(), TOL);
    let witness: Vec<String> = dec.factors().iter().map(|f| f.to_string()).collect();
    r.truth("six_t2_witness", ["2", "3"], &witness, witness == ["2", "3"]);
    let dec = metric_mahler_rational(&six, finite(1.0)).expect("valid input");
    r.close("six_t1_value", ln(6), dec.total_cost(), TOL);
    let thirty = Rational::from_integer(30).expect("nonzero");
    let dec = metric_mahler_rational(&thirty, TParam::Infinity).expect("valid input");
    r.close("thirty_t_inf_value", ln(5), dec.total_cost(), TOL);
}

fn spot_checks(r: &mut Recorder) {
    for d in [2310u64, 30, 105] {
        let ok = certify_non_attainment(&sf(d), finite(2.0)).is_ok_and(|c| c.candidates.is_empty());
        r.truth(format!("certificate_empty_{d}"), true, ok, ok);
    }
    for d in [21u64, 42, 6, 15, 7] {
        let d = sf(d);
        let report = attainment_in_q_sqrt_d(&d, finite(2.0)).expect("valid input");
        let ok = report.attained && (report.value - prime_norm(d.primes(), finite(2.0))).abs() <= TOL;
        r.truth(format!("attained_{}", d.value()), true, report.attained, ok);
    }
    let cube_root: Surd = "2^(1/3)".parse().expect("fixed literal");
    r.close("cube_root_two_measure", ln(2), cube_root.mahler_squarefree().map_or(f64::NAN, |m| m.get()), TOL);
}

/// Runs every example check through `hooks`.
pub fn verify_examples(hooks: &Hooks) -> Report {
    let mut r = Recorder(Vec::new());
    sqrt30(&mut r);
    sqrt42(&mut r);
    sqrt21(&mut r, hooks);
    rationals(&mut r);
    spot_checks(&mut r);
    let passed = r.0.iter().filter(|c| c.pass).count();
    Report {
        passed,
        failed: r.0.len() - passed,
        checks: r.0,
    }
}
