use mahler_core::measure::weil_height;
use mahler_core::quadfield::{
    attainment_in_q_sqrt_d, certify_non_attainment, enumerate_small_quadratics, metric_mahler_surd, Certificate,
};
use mahler_core::ratopt::{metric_mahler_rational, metric_mahler_rational_oracle_with_extraneous, mt_curve};
use mahler_core::{Algebraic, Error, QuadraticNumber, Rational, Result, SquarefreeD, Surd, TParam};
use serde::Serialize;
use serde_json::Value;

use crate::args::{Command, MeasureArgs, PlotArgs};
use crate::examples::{verify_examples, Hooks};
use crate::output::{Display, Num, TValue};
use crate::sweep::sweep;

/// What a command produced.
pub enum Outcome {
    /// JSON result plus the exit code to report.
    Json(Value, i32),
    Csv(String),
}

fn json<T: Serialize>(v: T) -> Outcome {
    Outcome::Json(serde_json::to_value(v).expect("result types serialize"), 0)
}

fn parse_t(s: &str) -> Result<TParam> {
    s.parse()
}

fn parse_d(s: &str) -> Result<SquarefreeD> {
    s.parse()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

pub fn execute(command: &Command, display: Display) -> Result<Outcome> {
    match command {
        Command::Measure(args) => measure(args, display),
        Command::Mt { q, t } => mt(q, t, display),
        Command::MtSurd { d, k, t } => mt_surd(d, *k, t, display),
        Command::Attainment { d, t } => attainment(d, t, display),
        Command::Certify { d, up_to, t } => certify(d.as_deref(), *up_to, t),
        Command::SmallQuadratics { d } => small_quadratics(d, display),
        Command::Plot(args) => plot(args, display),
        Command::OracleCheck { q, t, extraneous } => oracle_check(q, t, *extraneous, display),
        Command::VerifyPaper => {
            let report = verify_examples(&Hooks::default());
            let exit = if report.failed == 0 { 0 } else { 1 };
            Ok(Outcome::Json(serde_json::to_value(report).expect("report serializes"), exit))
        }
    }
}

#[derive(Serialize)]
struct MeasureResult {
    input: String,
    kind: &'static str,
    degree: u32,
    value: Num,
    weil_height: Num,
    norm: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    stability: Option<&'static str>,
}

fn measure(args: &MeasureArgs, display: Display) -> Result<Outcome> {
    let (alpha, kind): (Algebraic, _) = if let Some(q) = &args.quadratic {
        (q.parse::<QuadraticNumber>()?.into(), "quadratic")
    } else if let Some(s) = &args.surd {
        (s.parse::<Surd>()?.into(), "surd")
    } else {
        let q = args.rational.as_deref().expect("clap enforces one input");
        (q.parse::<Rational>()?.into(), "rational")
    };
    let stability = match &alpha {
        Algebraic::Quadratic(q) => Some(q.stability().as_str()),
        _ => None,
    };
    Ok(json(MeasureResult {
        input: alpha.to_string(),
        kind,
        degree: alpha.degree(),
        value: display.log(alpha.mahler().get()),
        weil_height: display.log(weil_height(&alpha).get()),
        norm: alpha.norm().to_string(),
        stability,
    }))
}

#[derive(Serialize)]
struct MtResult {
    q: String,
    t: TValue,
    value: Num,
    witness: Vec<String>,
    measures: Vec<Num>,
}

fn mt(q: &str, t: &str, display: Display) -> Result<Outcome> {
    let q: Rational = q.parse()?;
    let t = parse_t(t)?;
    let dec = metric_mahler_rational(&q, t)?;
    Ok(json(MtResult {
        q: q.to_string(),
        t: TValue(t),
        value: display.log(dec.total_cost()),
        witness: strings(dec.factors()),
        measures: display.logs(dec.measures().iter().map(|m| m.get())),
    }))
}

#[derive(Serialize)]
struct MtSurdResult {
    #[serde(rename = "D")]
    d: u64,
    k: u32,
    t: TValue,
    value: Num,
    witness: Vec<String>,
    measures: Vec<Num>,
}

fn mt_surd(d: &str, k: u32, t: &str, display: Display) -> Result<Outcome> {
    let d = parse_d(d)?;
    let t = parse_t(t)?;
    let (value, dec) = metric_mahler_surd(&d, k, t)?;
    Ok(json(MtSurdResult {
        d: d.value(),
        k,
        t: TValue(t),
        value: display.log(value),
        witness: strings(dec.factors()),
        measures: display.logs(dec.measures().iter().map(|m| m.get())),
    }))
}

#[derive(Serialize)]
struct CertificateJson {
    forms_checked: u64,
    a_range: [u64; 2],
    v_bound: u64,
    candidates: Vec<String>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            forms_checked: c.forms_checked,
            a_range: [c.a_range.0, c.a_range.1],
            v_bound: c.v_bound,
            candidates: strings(&c.candidates),
        }
    }
}

#[derive(Serialize)]
struct AttainmentResult {
    #[serde(rename = "D")]
    d: u64,
    primes: Vec<u64>,
    t: TValue,
    attained: bool,
    witness: Vec<String>,
    value: Num,
    certificate: CertificateJson,
}

fn attainment(d: &str, t: &str, display: Display) -> Result<Outcome> {
    let d = parse_d(d)?;
    let t = parse_t(t)?;
    let report = attainment_in_q_sqrt_d(&d, t)?;
    Ok(json(AttainmentResult {
        d: d.value(),
        primes: d.primes().to_vec(),
        t: TValue(t),
        attained: report.attained,
        witness: report.witness.as_ref().map(|w| strings(w.factors())).unwrap_or_default(),
        value: display.log(report.value),
        certificate: (&report.certificate).into(),
    }))
}

#[derive(Serialize)]
struct CertifyResult {
    #[serde(rename = "D")]
    d: u64,
    primes: Vec<u64>,
    t: TValue,
    empty: bool,
    certificate: CertificateJson,
}

fn certify(d: Option<&str>, up_to: Option<u64>, t: &str) -> Result<Outcome> {
    let t = parse_t(t)?;
    if let Some(limit) = up_to {
        let summary = sweep(limit, t)?;
        let exit = if summary.failures.is_empty() { 0 } else { 1 };
        return Ok(Outcome::Json(serde_json::to_value(summary).expect("summary serializes"), exit));
    }
    let d = parse_d(d.expect("clap enforces a target"))?;
    let cert = certify_non_attainment(&d, t)?;
    Ok(json(CertifyResult {
        d: d.value(),
        primes: d.primes().to_vec(),
        t: TValue(t),
        empty: cert.candidates.is_empty(),
        certificate: (&cert).into(),
    }))
}

#[derive(Serialize)]
struct SmallQuadraticsResult {
    #[serde(rename = "D")]
    d: u64,
    p: u64,
    count: usize,
    quadratics: Vec<String>,
    measures: Vec<Num>,
}

fn small_quadratics(d: &str, display: Display) -> Result<Outcome> {
    let d = parse_d(d)?;
    let found = enumerate_small_quadratics(&d)?;
    Ok(json(SmallQuadraticsResult {
        d: d.value(),
        p: d.largest_prime(),
        count: found.len(),
        quadratics: strings(&found),
        measures: display.logs(found.iter().map(|q| q.mahler().get())),
    }))
}

fn grid(args: &PlotArgs) -> Result<Vec<TParam>> {
    let t_min = parse_t(&args.t_min)?.finite().ok_or(Error::Domain("t-min must be finite"))?;
    let t_max = parse_t(&args.t_max)?.finite().ok_or(Error::Domain("t-max must be finite"))?;
    let step: f64 = args.step.parse().map_err(|_| Error::Parse(args.step.clone()))?;
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::Domain("step must be positive"));
    }
    if t_max < t_min {
        return Err(Error::Domain("t-max is below t-min"));
    }
    let count = ((t_max - t_min) / step + 1e-9).floor() as usize + 1;
    let mut out: Vec<TParam> = (0..count).map(|i| TParam::Finite(t_min + i as f64 * step)).collect();
    if args.inf {
        out.push(TParam::Infinity);
    }
    Ok(out)
}

fn plot(args: &PlotArgs, display: Display) -> Result<Outcome> {
    let ts = grid(args)?;
    let rows: Vec<(TParam, f64)> = match (&args.q, &args.surd) {
        (_, Some(d)) => {
            let d = parse_d(d)?;
            ts.iter()
                .map(|&t| Ok((t, metric_mahler_surd(&d, args.k, t)?.0)))
                .collect::<Result<_>>()?
        }
        (Some(q), None) => mt_curve(&q.parse()?, &ts)?,
        (None, None) => unreachable!("clap enforces a target"),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["t", "value"]).expect("in-memory write");
    for (t, v) in rows {
        let t = match t {
            TParam::Finite(t) => crate::output::round15(t).to_string(),
            TParam::Infinity => "inf".to_string(),
        };
        let v = crate::output::round15(display.log(v).0).to_string();
        w.write_record([t, v]).expect("in-memory write");
    }
    let bytes = w.into_inner().expect("in-memory flush");
    Ok(Outcome::Csv(String::from_utf8(bytes).expect("ascii output")))
}

#[derive(Serialize)]
struct OracleCheckResult {
    q: String,
    t: TValue,
    extraneous: String,
    optimizer: Num,
    oracle: Num,
    difference: Num,
    agree: bool,
}

fn oracle_check(q: &str, t: &str, extraneous: u128, display: Display) -> Result<Outcome> {
    let q: Rational = q.parse()?;
    let t = parse_t(t)?;
    let fast = metric_mahler_rational(&q, t)?.total_cost();
    let slow = metric_mahler_rational_oracle_with_extraneous(&q, t, extraneous)?;
    // With a cofactor the oracle may only be worse, never better.
    let agree = if extraneous == 1 { (fast - slow).abs() <= 1e-9 } else { slow >= fast - 1e-9 };
    Ok(json(OracleCheckResult {
        q: q.to_string(),
        t: TValue(t),
        extraneous: extraneous.to_string(),
        optimizer: display.log(fast),
        oracle: display.log(slow),
        difference: display.log(slow - fast),
        agree,
    }))
}
