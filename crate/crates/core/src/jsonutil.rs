//! Exact integers in JSON: numbers while they fit `i64`, decimal
//! strings beyond that. All output stays exact either way.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::num::Int;

pub fn int_value<T: Int>(v: &T) -> Value {
    match v.to_i64() {
        Some(n) => Value::from(n),
        None => Value::from(v.to_string()),
    }
}

pub fn int_from_value<T: Int>(v: &Value) -> Result<T> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| Error::Parse(format!("non-integer number {n}")))?;
            Ok(T::from(i))
        }
        Value::String(s) => s.parse::<T>().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}
