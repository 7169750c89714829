use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "sombor.v1";

/// Largest precision that still rounds; anything above prints full precision.
const MAX_ROUNDED: usize = 15;

fn round_floats(v: &mut Value, precision: usize) {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = num.as_f64().unwrap();
            let scale = 10f64.powi(precision as i32);
            let rounded = (x * scale).round() / scale;
            if let Some(n) = serde_json::Number::from_f64(rounded) {
                *num = n;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|i| round_floats(i, precision)),
        Value::Object(map) => map.values_mut().for_each(|i| round_floats(i, precision)),
        _ => {}
    }
}

/// Pretty JSON with a schema tag and floats rounded to `precision` decimals.
pub fn to_json<T: Serialize>(command: &str, payload: &T, precision: usize) -> String {
    let mut body = json!({ "schema": SCHEMA, "command": command, "result": payload });
    if precision <= MAX_ROUNDED {
        round_floats(&mut body, precision);
    }
    serde_json::to_string_pretty(&body).expect("serializable payload")
}

pub fn fixed(x: f64, precision: usize) -> String {
    format!("{x:.precision$}")
}
