//! JSON value construction and the generic CSV rendering of it.

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use corona_core::IntPoly;

/// Twelve significant digits relative to `max(|v|, 1)`; integral results
/// print without a fraction. Non-finite values become `null`.
pub fn num(v: f64) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    let magnitude = v.abs().max(1.0).log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    Value::Number(
        s.parse::<Number>()
            .expect("formatted float is a JSON number"),
    )
}

pub fn nums(values: &[f64]) -> Value {
    Value::Array(values.iter().map(|&v| num(v)).collect())
}

pub fn big(v: &BigInt) -> Value {
    Value::Number(
        v.to_string()
            .parse::<Number>()
            .expect("integer is a JSON number"),
    )
}

pub fn poly(p: &IntPoly) -> Value {
    let mut m = Map::new();
    m.insert("polynomial".into(), Value::String(p.to_string()));
    m.insert(
        "coefficients".into(),
        Value::Array(p.coeffs().iter().map(big).collect()),
    );
    Value::Object(m)
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Arrays of scalars become one `value` column, objects one header row and
/// one data row, arrays of objects one row each. Nested values are written
/// as JSON text.
pub fn to_csv(v: &Value) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let write = |w: &mut csv::Writer<Vec<u8>>, row: Vec<String>| {
        w.write_record(row).expect("in-memory write");
    };
    match v {
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            let keys: Vec<String> = items[0].as_object().unwrap().keys().cloned().collect();
            write(&mut w, keys.clone());
            for item in items {
                write(&mut w, keys.iter().map(|k| cell(&item[k])).collect());
            }
        }
        Value::Array(items) => {
            write(&mut w, vec!["value".into()]);
            for item in items {
                write(&mut w, vec![cell(item)]);
            }
        }
        Value::Object(m) => {
            write(&mut w, m.keys().cloned().collect());
            write(&mut w, m.values().map(cell).collect());
        }
        scalar => {
            write(&mut w, vec!["value".into()]);
            write(&mut w, vec![cell(scalar)]);
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(num(4.000000000000002).to_string(), "4");
        assert_eq!(num(-1e-15).to_string(), "0");
        assert_eq!(num(2.5615528128088303).to_string(), "2.56155281281");
        assert_eq!(num(-1.5615528128088303).to_string(), "-1.56155281281");
        assert_eq!(num(1234.5).to_string(), "1234.5");
        assert_eq!(num(0.1).to_string(), "0.1");
        assert_eq!(num(f64::NAN), Value::Null);
    }

    #[test]
    fn csv_shapes() {
        let arr = serde_json::json!([0, 2, 4]);
        assert_eq!(to_csv(&arr), "value\n0\n2\n4\n");
        let obj = serde_json::json!({"formula": 16, "direct": 16});
        assert_eq!(to_csv(&obj), "formula,direct\n16,16\n");
    }
}
