//! Problem files and the JSON shapes shared by input and output.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Result, ToricError};
use crate::exactnum::IntVec;
use crate::toric::{BinomialInequality, BinomialSystem, MonomialMap};

/// An integer as written in JSON: a plain number when it fits in `i64`,
/// otherwise a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(x: &BigInt) -> Self {
        match x.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(x.to_string()),
        }
    }
}

pub fn json_vec(v: &IntVec) -> Vec<JsonInt> {
    v.iter().map(JsonInt::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonInequality {
    pub u: Vec<JsonInt>,
    pub v: Vec<JsonInt>,
}

/// The problem-file schema, also used for system and map outputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProblemJson {
    MonomialMap {
        n: usize,
        d: usize,
        exponents: Vec<Vec<JsonInt>>,
    },
    BinomialSystem {
        n: usize,
        inequalities: Vec<JsonInequality>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Problem {
    Map(MonomialMap),
    System(BinomialSystem),
}

impl Problem {
    pub fn n(&self) -> usize {
        match self {
            Problem::Map(m) => m.n(),
            Problem::System(s) => s.n(),
        }
    }

    pub fn to_json(&self) -> ProblemJson {
        match self {
            Problem::Map(m) => ProblemJson::MonomialMap {
                n: m.n(),
                d: m.d(),
                exponents: m.rows().iter().map(json_vec).collect(),
            },
            Problem::System(s) => ProblemJson::BinomialSystem {
                n: s.n(),
                inequalities: s
                    .inequalities()
                    .iter()
                    .map(|i| JsonInequality {
                        u: json_vec(i.u()),
                        v: json_vec(i.v()),
                    })
                    .collect(),
            },
        }
    }
}

fn malformed(field: &str, message: impl Into<String>) -> ToricError {
    ToricError::malformed(field, message)
}

fn get<'a>(obj: &'a serde_json::Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| malformed(key, "missing field"))
}

fn non_negative(v: &Value, field: &str) -> Result<BigInt> {
    let x = match v {
        Value::Number(num) => {
            if let Some(u) = num.as_u64() {
                BigInt::from(u)
            } else if let Some(i) = num.as_i64() {
                BigInt::from(i)
            } else {
                return Err(malformed(field, "expected an integer, found a fraction"));
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| malformed(field, format!("`{s}` is not a decimal integer")))?,
        _ => return Err(malformed(field, "expected an integer")),
    };
    if x.is_negative() {
        return Err(malformed(field, "expected a non-negative integer"));
    }
    Ok(x)
}

fn count(v: &Value, field: &str) -> Result<usize> {
    non_negative(v, field)?
        .to_usize()
        .ok_or_else(|| malformed(field, "value is too large"))
}

fn int_row(v: &Value, field: &str, len: usize) -> Result<IntVec> {
    let items = v
        .as_array()
        .ok_or_else(|| malformed(field, "expected an array"))?;
    if items.len() != len {
        return Err(malformed(
            field,
            format!("expected {len} entries, found {}", items.len()),
        ));
    }
    let entries = items
        .iter()
        .enumerate()
        .map(|(k, x)| non_negative(x, &format!("{field}[{k}]")))
        .collect::<Result<Vec<BigInt>>>()?;
    Ok(IntVec::new(entries))
}

/// Parses a problem file, naming the offending field on failure.
pub fn parse_problem(text: &str) -> Result<Problem> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| malformed("$", format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| malformed("$", "expected a JSON object"))?;
    let kind = get(obj, "kind")?
        .as_str()
        .ok_or_else(|| malformed("kind", "expected a string"))?;
    let n = count(get(obj, "n")?, "n")?;
    match kind {
        "monomial_map" => {
            let d = count(get(obj, "d")?, "d")?;
            let rows = get(obj, "exponents")?
                .as_array()
                .ok_or_else(|| malformed("exponents", "expected an array of rows"))?;
            if rows.len() != n {
                return Err(malformed(
                    "exponents",
                    format!("expected {n} rows, found {}", rows.len()),
                ));
            }
            let rows = rows
                .iter()
                .enumerate()
                .map(|(j, r)| int_row(r, &format!("exponents[{j}]"), d))
                .collect::<Result<Vec<_>>>()?;
            Ok(Problem::Map(MonomialMap::new(d, rows)?))
        }
        "binomial_system" => {
            let items = get(obj, "inequalities")?
                .as_array()
                .ok_or_else(|| malformed("inequalities", "expected an array"))?;
            let ineqs = items
                .iter()
                .enumerate()
                .map(|(k, item)| {
                    let field = format!("inequalities[{k}]");
                    let o = item
                        .as_object()
                        .ok_or_else(|| malformed(&field, "expected an object with `u` and `v`"))?;
                    let side = |key: &str| {
                        let f = format!("{field}.{key}");
                        let v = o.get(key).ok_or_else(|| malformed(&f, "missing field"))?;
                        int_row(v, &f, n)
                    };
                    BinomialInequality::new(side("u")?, side("v")?)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Problem::System(BinomialSystem::new(n, ineqs)?))
        }
        other => Err(malformed(
            "kind",
            format!("expected `monomial_map` or `binomial_system`, found `{other}`"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_of(text: &str) -> String {
        match parse_problem(text) {
            Err(ToricError::Malformed { field, .. }) => field,
            other => panic!("expected a malformed-input error, got {other:?}"),
        }
    }

    #[test]
    fn parses_both_kinds() {
        let m = parse_problem(r#"{"kind":"monomial_map","n":2,"d":2,"exponents":[[1,0],["2",1]]}"#)
            .unwrap();
        assert_eq!(
            m,
            Problem::Map(MonomialMap::from_i64_rows(2, &[&[1, 0], &[2, 1]]).unwrap())
        );
        let s = parse_problem(
            r#"{"kind":"binomial_system","n":2,"inequalities":[{"u":[0,1],"v":[1,0]}]}"#,
        )
        .unwrap();
        assert_eq!(s.n(), 2);
        let empty = parse_problem(r#"{"kind":"binomial_system","n":3,"inequalities":[]}"#).unwrap();
        assert_eq!(empty, Problem::System(BinomialSystem::empty(3)));
    }

    #[test]
    fn names_offending_fields() {
        assert_eq!(field_of("[1]"), "$");
        assert_eq!(field_of("{"), "$");
        assert_eq!(field_of(r#"{"kind":"cube","n":1}"#), "kind");
        assert_eq!(field_of(r#"{"kind":"monomial_map","n":-1}"#), "n");
        assert_eq!(
            field_of(r#"{"kind":"monomial_map","n":2,"d":2,"exponents":[[1,0]]}"#),
            "exponents"
        );
        assert_eq!(
            field_of(r#"{"kind":"monomial_map","n":1,"d":2,"exponents":[[1,-3]]}"#),
            "exponents[0][1]"
        );
        assert_eq!(
            field_of(r#"{"kind":"monomial_map","n":1,"d":1,"exponents":[[1.5]]}"#),
            "exponents[0][0]"
        );
        assert_eq!(
            field_of(r#"{"kind":"binomial_system","n":2,"inequalities":[{"u":[0,1]}]}"#),
            "inequalities[0].v"
        );
        assert_eq!(
            field_of(r#"{"kind":"binomial_system","n":2,"inequalities":[{"u":[0,1],"v":[1]}]}"#),
            "inequalities[0].v"
        );
        assert_eq!(
            field_of(
                r#"{"kind":"binomial_system","n":2,"inequalities":[{"u":["x",1],"v":[1,0]}]}"#
            ),
            "inequalities[0].u[0]"
        );
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"kind":"binomial_system","n":2,"inequalities":[{"u":[0,"123456789012345678901234567890"],"v":[1,0]}]}"#;
        let p = parse_problem(text).unwrap();
        let emitted = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(parse_problem(&emitted).unwrap(), p);
        let back: ProblemJson = serde_json::from_str(&emitted).unwrap();
        assert_eq!(back, p.to_json());
    }
}
