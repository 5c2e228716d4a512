//! Elements of the value group `Z ∪ {∞}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// A value in `Z ∪ {∞}`.
///
/// `Infinity` is the maximum of the order and absorbs addition. The value
/// group is fixed to the integers; everything that consumes values goes
/// through this type so a different ordered group can be slotted in later.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Finite(i64),
    Infinity,
}

impl Value {
    pub const ZERO: Value = Value::Finite(0);

    pub fn is_infinite(self) -> bool {
        matches!(self, Value::Infinity)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Value::Finite(n) => Some(n),
            Value::Infinity => None,
        }
    }

    pub fn is_positive(self) -> bool {
        self > Value::ZERO
    }

    /// Negated subtraction for finite values; `None` if either side is infinite.
    pub fn checked_sub(self, other: Value) -> Option<i64> {
        Some(self.finite()? - other.finite()?)
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
            (Value::Finite(_), Value::Infinity) => Ordering::Less,
            (Value::Infinity, Value::Finite(_)) => Ordering::Greater,
            (Value::Infinity, Value::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Value {
    type Output = Value;

    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::Infinity,
        }
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Finite(n)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(n) => write!(f, "{n}"),
            Value::Infinity => f.write_str("inf"),
        }
    }
}

// JSON: an integer, or the string "inf".
impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Finite(n) => serializer.serialize_i64(*n),
            Value::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ValueVisitor;

        impl Visitor<'_> for ValueVisitor {
            type Value = Value;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or \"inf\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Value, E> {
                Ok(Value::Finite(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Value, E> {
                i64::try_from(v)
                    .map(Value::Finite)
                    .map_err(|_| E::custom("value out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Value, E> {
                if v == "inf" {
                    Ok(Value::Infinity)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        deserializer.deserialize_any(ValueVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_maximum_and_absorbing() {
        assert!(Value::Finite(i64::MAX) < Value::Infinity);
        assert_eq!(Value::Finite(3) + Value::Infinity, Value::Infinity);
        assert_eq!(Value::Infinity + Value::Infinity, Value::Infinity);
        assert_eq!(Value::Finite(3) + Value::Finite(-5), Value::Finite(-2));
    }

    #[test]
    fn json_encoding() {
        assert_eq!(serde_json::to_string(&Value::Finite(-2)).unwrap(), "-2");
        assert_eq!(serde_json::to_string(&Value::Infinity).unwrap(), "\"inf\"");
        let v: Value = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(v, Value::Infinity);
        let v: Value = serde_json::from_str("7").unwrap();
        assert_eq!(v, Value::Finite(7));
        assert!(serde_json::from_str::<Value>("\"oo\"").is_err());
    }
}
