use mahler_core::{Error, TParam};
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: &str = "1";

/// Rounds to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// A real number serialized with 15 significant digits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = round15(self.0);
        if v.is_finite() {
            s.serialize_f64(v)
        } else if v.is_nan() {
            s.serialize_str("nan")
        } else if v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }
}

/// `t` as a JSON number, or the string `"inf"`.
#[derive(Clone, Copy, Debug)]
pub struct TValue(pub TParam);

impl Serialize for TValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            TParam::Finite(t) => Num(t).serialize(s),
            TParam::Infinity => s.serialize_str("inf"),
        }
    }
}

/// Presentation settings shared by all commands.
#[derive(Clone, Copy, Debug)]
pub struct Display {
    ln_base: f64,
}

impl Display {
    pub fn new(log_base: &str) -> Result<Self, Error> {
        let ln_base = match log_base {
            "e" => 1.0,
            other => {
                let b: f64 = other.parse().map_err(|_| Error::Parse(other.to_string()))?;
                if !(b.is_finite() && b > 1.0) {
                    return Err(Error::Domain("log base must be a number > 1"));
                }
                b.ln()
            }
        };
        Ok(Display { ln_base })
    }

    /// A natural-log quantity converted to the display base.
    pub fn log(&self, v: f64) -> Num {
        Num(v / self.ln_base)
    }

    pub fn logs(&self, vs: impl IntoIterator<Item = f64>) -> Vec<Num> {
        vs.into_iter().map(|v| self.log(v)).collect()
    }
}

#[derive(Serialize)]
pub struct CommandEcho<'a> {
    pub verb: &'a str,
    pub args: &'a [String],
}

#[derive(Serialize)]
pub struct Timing {
    pub elapsed_ms: Num,
}

#[derive(Serialize)]
pub struct Success<'a> {
    pub schema_version: &'static str,
    pub command: CommandEcho<'a>,
    pub result: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

#[derive(Serialize)]
pub struct Failure<'a> {
    pub schema_version: &'static str,
    pub command: CommandEcho<'a>,
    pub error: ErrorBody,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_fifteen_digits() {
        assert_eq!(round15(std::f64::consts::PI), 3.14159265358979);
        assert_eq!(round15(1.0 / 3.0), 0.333333333333333);
        assert_eq!(round15(0.0), 0.0);
        assert_eq!(serde_json::to_string(&Num(2.0)).unwrap(), "2.0");
        assert_eq!(serde_json::to_string(&Num(f64::INFINITY)).unwrap(), "\"inf\"");
    }

    #[test]
    fn log_base_conversion() {
        let d = Display::new("2").unwrap();
        assert!((d.log(std::f64::consts::LN_2 * 3.0).0 - 3.0).abs() < 1e-12);
        assert!(Display::new("1").is_err());
        assert!(Display::new("x").is_err());
    }
}
