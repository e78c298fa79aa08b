//! JSON encodings. Keys are emitted in sorted order and collections in
//! canonical order, so equal values serialize to equal bytes.
use std::str::FromStr;

use serde_json::{json, Map, Number, Value};

use crate::det::Expansion;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::kl::KlTable;
use crate::lweight::LWeight;
use crate::ring::{Monomial, RingElement};
use crate::scalar::Coefficient;
use crate::snake::{AlternatingSnake, Violation};

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

pub fn coeff_to_json<C: Coefficient>(c: &C) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integers are valid JSON numbers"))
}

pub fn coeff_from_json<C: Coefficient>(v: &Value) -> Result<C> {
    match v {
        Value::Number(n) => C::from_str(&n.to_string()).map_err(|_| bad(format!("not an integer: {}", n))),
        _ => Err(bad(format!("expected integer, got {}", v))),
    }
}

fn int(v: &Value) -> Result<i64> {
    v.as_i64().ok_or_else(|| bad(format!("expected integer, got {}", v)))
}

fn rank(v: &Value) -> Result<u32> {
    let n = v.get("n").ok_or_else(|| bad("missing \"n\""))?;
    let n = n.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| bad(format!("bad rank {}", n)))?;
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(n)
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    v.get(key).and_then(Value::as_array).ok_or_else(|| bad(format!("missing array \"{}\"", key)))
}

fn tuple(v: &Value, len: usize) -> Result<Vec<i64>> {
    let a = v.as_array().filter(|a| a.len() == len).ok_or_else(|| bad(format!("expected {} integers, got {}", len, v)))?;
    a.iter().map(int).collect()
}

pub fn interval_to_json(iv: &Interval) -> Value {
    json!([iv.i, iv.j])
}

pub fn interval_from_json(v: &Value) -> Result<Interval> {
    let t = tuple(v, 2)?;
    Ok(Interval::new(t[0], t[1]))
}

pub fn lweight_to_json(w: &LWeight) -> Value {
    let gens: Vec<Value> = w.iter().map(|(iv, e)| json!([iv.i, iv.j, e])).collect();
    json!({ "n": w.n(), "gens": gens })
}

pub fn lweight_from_json(v: &Value) -> Result<LWeight> {
    let n = rank(v)?;
    let gens = array(v, "gens")?
        .iter()
        .map(|g| tuple(g, 3).map(|t| (Interval::new(t[0], t[1]), t[2])))
        .collect::<Result<Vec<_>>>()?;
    LWeight::from_generators(gens, n)
}

/// Raw snake fields, before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeData {
    pub n: u32,
    pub intervals: Vec<Interval>,
    pub breaks: Vec<usize>,
}

impl SnakeData {
    pub fn build(&self) -> Result<AlternatingSnake> {
        AlternatingSnake::new(&self.intervals, &self.breaks, self.n)
    }
}

pub fn snake_data_from_json(v: &Value) -> Result<SnakeData> {
    let n = rank(v)?;
    let intervals = array(v, "intervals")?.iter().map(interval_from_json).collect::<Result<Vec<_>>>()?;
    let breaks = array(v, "breaks")?
        .iter()
        .map(|b| b.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("bad break {}", b))))
        .collect::<Result<Vec<_>>>()?;
    Ok(SnakeData { n, intervals, breaks })
}

pub fn snake_from_json(v: &Value) -> Result<AlternatingSnake> {
    snake_data_from_json(v)?.build()
}

pub fn snake_to_json(s: &AlternatingSnake) -> Value {
    let ivs: Vec<Value> = s.intervals().iter().map(interval_to_json).collect();
    json!({ "n": s.n(), "intervals": ivs, "breaks": s.breaks() })
}

pub fn violation_to_json(v: &Violation) -> Value {
    json!({ "kind": v.kind.tag(), "witnesses": v.witnesses, "message": v.message })
}

fn monomial_to_json(m: &Monomial) -> Value {
    Value::Array(m.iter().map(|(iv, e)| json!([iv.i, iv.j, e])).collect())
}

pub fn ring_to_json<C: Coefficient>(x: &RingElement<C>) -> Value {
    let terms: Vec<Value> =
        x.iter().map(|(m, c)| json!({ "coeff": coeff_to_json(c), "mono": monomial_to_json(m) })).collect();
    json!({ "n": x.n(), "terms": terms })
}

pub fn ring_from_json<C: Coefficient>(v: &Value) -> Result<RingElement<C>> {
    let n = rank(v)?;
    let mut terms = Vec::new();
    for t in array(v, "terms")? {
        let c: C = coeff_from_json(t.get("coeff").ok_or_else(|| bad("missing \"coeff\""))?)?;
        let mut pairs = Vec::new();
        for g in array(t, "mono")? {
            let x = tuple(g, 3)?;
            let e = u32::try_from(x[2]).map_err(|_| bad(format!("bad multiplicity {}", x[2])))?;
            pairs.push((Interval::new(x[0], x[1]), e));
        }
        terms.push((Monomial::from_pairs(pairs), c));
    }
    RingElement::from_terms(terms, n)
}

pub fn expansion_terms_to_json<C: Coefficient>(e: &Expansion<C>) -> Value {
    Value::Array(e.iter().map(|(w, c)| json!({ "coeff": coeff_to_json(c), "weight": lweight_to_json(w) })).collect())
}

pub fn kl_table_to_json<C: Coefficient>(t: &KlTable<C>) -> Value {
    let rows: Vec<Value> = t.rows.iter().map(|(nu, c)| json!({ "nu_plus_rho": nu, "c": coeff_to_json(c) })).collect();
    json!({
        "mu_plus_rho": t.mu_plus_rho,
        "lambda_plus_rho": t.lambda_plus_rho,
        "rows": rows,
    })
}

/// Merge the fields of `extra` into the object `base`.
pub fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        let e: Map<String, Value> = e;
        b.extend(e);
    }
    base
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn lweight_round_trip() {
        let w = LWeight::from_generators([((0, 2).into(), -3), ((-1, 1).into(), 2)], 4).unwrap();
        let v = lweight_to_json(&w);
        assert_eq!(v.to_string(), r#"{"gens":[[-1,1,2],[0,2,-3]],"n":4}"#);
        assert_eq!(lweight_from_json(&v).unwrap(), w);
    }

    #[test]
    fn snake_round_trip() {
        let s = AlternatingSnake::new(&[(0, 4).into(), (-1, 1).into(), (1, 2).into(), (2, 3).into()], &[1, 2, 4], 5)
            .unwrap();
        let v = snake_to_json(&s);
        assert_eq!(v.to_string(), r#"{"breaks":[1,2,4],"intervals":[[0,4],[-1,1],[1,2],[2,3]],"n":5}"#);
        assert_eq!(snake_from_json(&v).unwrap(), s);
        assert!(snake_from_json(&json!({"n": 5, "intervals": [[0, 1]]})).is_err());
    }

    #[test]
    fn ring_round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = RingElement::from_terms(
            [(Monomial::from_pairs([((0, 1).into(), 2)]), big.clone()), (Monomial::one(), BigInt::from(-1))],
            3,
        )
        .unwrap();
        let v = ring_to_json(&x);
        assert!(v.to_string().contains("123456789012345678901234567890"));
        assert_eq!(ring_from_json::<BigInt>(&v).unwrap(), x);
    }
}
