//! Deterministic output: JSON floats are rounded to 15 significant digits.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::Failure;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Dot,
    Graph6,
}

pub fn round15(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.14e}").parse().unwrap_or(v)
}

pub fn sig15(v: f64) -> String {
    format!("{}", round15(v))
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round15(n.as_f64().expect("f64 number"));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_value).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let v = round_value(serde_json::to_value(v).expect("report serializes"));
    serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
}

pub fn print_json<T: Serialize>(v: &T) {
    print!("{}", to_json(v));
}

/// Prints a report; only JSON applies to structured reports.
pub fn emit<T: Serialize>(format: Format, v: &T) -> Result<(), Failure> {
    match format {
        Format::Json => {
            print_json(v);
            Ok(())
        }
        _ => Err(Failure::Input("this command supports --format json or table".into())),
    }
}
