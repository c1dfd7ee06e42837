//! Result documents: exact values as `{"re": "p/q", "im": "p/q"}` strings,
//! float values as shortest round-trip numbers.

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{Word, WickWord};
use crate::amplitude::HsTable;
use crate::error::Error;
use crate::fock::FockIndex;
use crate::scalar::{ComplexScalar, QSqrt2};

pub fn scalar(z: &ComplexScalar) -> Value {
    match z {
        ComplexScalar::Exact(e) => json!({"re": e.re.to_string(), "im": e.im.to_string()}),
        ComplexScalar::Float(c) => complex(*c),
    }
}

pub fn complex(c: Complex64) -> Value {
    json!({"re": finite(c.re), "im": finite(c.im)})
}

/// JSON has no infinities; they and NaN become `null`.
pub fn finite(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

/// Read back a value written by [`scalar`].
pub fn parse_scalar(v: &Value) -> Option<ComplexScalar> {
    let (re, im) = (v.get("re")?, v.get("im")?);
    match (re, im) {
        (Value::String(re), Value::String(im)) => {
            let re: QSqrt2 = re.parse().ok()?;
            let im: QSqrt2 = im.parse().ok()?;
            Some(ComplexScalar::Exact(crate::scalar::ExactComplex::new(re, im)))
        }
        (Value::Number(re), Value::Number(im)) => Some(ComplexScalar::float(re.as_f64()?, im.as_f64()?)),
        _ => None,
    }
}

pub fn word(w: &WickWord) -> Value {
    Value::Array(
        w.groups()
            .iter()
            .map(|g| {
                Value::Array(
                    g.as_slice()
                        .iter()
                        .map(|i| {
                            let mut p = scalar(i.point());
                            p["m"] = json!(i.order());
                            p
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn insertions(w: &WickWord) -> usize {
    w.insertions().count()
}

pub fn index(idx: &FockIndex) -> Value {
    let map: serde_json::Map<String, Value> = idx.iter().map(|(m, n)| (m.to_string(), json!(n))).collect();
    Value::Object(map)
}

pub fn error(e: &Error) -> Value {
    json!({"error": {"module": e.module().name(), "kind": e.kind(), "message": e.to_string()}})
}

fn csv_scalar(z: &ComplexScalar) -> String {
    match z {
        ComplexScalar::Exact(e) if e.im.is_zero() => e.re.to_string(),
        ComplexScalar::Exact(e) => format!("{}+i*({})", e.re, e.im),
        ComplexScalar::Float(c) if c.im == 0.0 => c.re.to_string(),
        ComplexScalar::Float(c) => format!("{}+i*({})", c.re, c.im),
    }
}

/// `total_insertions,tuple_count,partial_sum,bound`; the bound column is
/// empty outside the regime.
pub fn hs_csv(table: &HsTable) -> String {
    let bound = table.bound.as_ref().map(csv_scalar).unwrap_or_default();
    let mut out = String::from("total_insertions,tuple_count,partial_sum,bound\n");
    for row in &table.rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.total_insertions,
            row.tuple_count,
            csv_scalar(&row.partial_sum),
            bound
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values_round_trip() {
        let values = [
            ComplexScalar::rational(169, 576),
            ComplexScalar::sqrt2() * ComplexScalar::rational(-1, 1000),
            ComplexScalar::rational(1, 3) + ComplexScalar::i() * ComplexScalar::sqrt2(),
        ];
        for z in values {
            let text = serde_json::to_string(&scalar(&z)).unwrap();
            let back = parse_scalar(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back, z);
        }
    }

    #[test]
    fn floats_round_trip() {
        let z = ComplexScalar::float(0.1, -1.0 / 3.0);
        let text = serde_json::to_string(&scalar(&z)).unwrap();
        let back = parse_scalar(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.to_complex64(), z.to_complex64());
    }
}
