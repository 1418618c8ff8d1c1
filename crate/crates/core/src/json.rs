//! JSON forms of words, elements and tensors.
//!
//! A word is a list of `[gen, exp]` pairs. An element is
//! `{"rank": 4, "terms": [{"word": [[1,1],[2,-1]], "re": "2", "im": "0"}]}`
//! with `"rank": "inf"` for `F_∞`. Direct sums are
//! `{"components": {"<n>": element}}`; graded tensors are keyed `"<n>,<m>"`.
//! Coefficients are strings so exact rationals survive the round trip.

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::algebra::AlgebraElement;
use crate::bialgebra::{DirectSumElement, GradedTensor};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::text::parse_real_literal;
use crate::words::{PairWord, Rank, ReducedWord, Syllable};
use num_complex::Complex;

fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub fn word_to_json(w: &ReducedWord) -> Value {
    Value::Array(w.syllables().iter().map(|s| json!([s.gen, s.exp])).collect())
}

pub fn word_from_json(v: &Value, ambient: Rank) -> Result<ReducedWord> {
    let items = v.as_array().ok_or_else(|| invalid("word must be an array of [gen, exp] pairs"))?;
    let mut syllables = Vec::with_capacity(items.len());
    for item in items {
        let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(|| invalid("syllable must be [gen, exp]"))?;
        let gen = pair[0].as_u64().and_then(|g| u32::try_from(g).ok()).ok_or_else(|| invalid("bad generator index"))?;
        let exp = pair[1].as_i64().ok_or_else(|| invalid("bad exponent"))?;
        syllables.push(Syllable::new(gen, exp));
    }
    ReducedWord::reduce(ambient, syllables)
}

pub fn serialize_word<S: Serializer>(w: &ReducedWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    word_to_json(w).serialize(s)
}

pub fn pair_to_json(p: &PairWord) -> Value {
    json!([word_to_json(&p.first), word_to_json(&p.second)])
}

pub fn serialize_pair<S: Serializer>(p: &PairWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    pair_to_json(p).serialize(s)
}

pub fn rank_to_json(r: Rank) -> Value {
    match r {
        Rank::Finite(n) => json!(n),
        Rank::Infinite => json!("inf"),
    }
}

pub fn rank_from_json(v: &Value) -> Result<Rank> {
    match v {
        Value::String(s) if s == "inf" => Ok(Rank::Infinite),
        _ => {
            let n = v.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| invalid("rank must be a positive integer or \"inf\""))?;
            Rank::finite(n)
        }
    }
}

pub fn scalar_to_json<R: Real>(c: &Complex<R>) -> Value {
    json!({ "re": c.re.to_string(), "im": c.im.to_string() })
}

fn coeff_fields<R: Real>(c: &Complex<R>, obj: &mut Map<String, Value>) {
    obj.insert("re".into(), Value::String(c.re.to_string()));
    obj.insert("im".into(), Value::String(c.im.to_string()));
}

fn coeff_from_fields<R: Real>(obj: &Map<String, Value>) -> Result<Complex<R>> {
    let part = |key: &str| -> Result<R> {
        match obj.get(key) {
            Some(Value::String(s)) => parse_real_literal(s),
            Some(Value::Number(n)) => parse_real_literal(&n.to_string()),
            None => Ok(R::zero()),
            _ => Err(invalid(format!("coefficient field {key} must be a string"))),
        }
    };
    Ok(Complex::new(part("re")?, part("im")?))
}

pub fn element_to_json<R: Real>(a: &AlgebraElement<R>) -> Value {
    let terms: Vec<Value> = a
        .terms()
        .iter()
        .map(|(w, c)| {
            let mut obj = Map::new();
            obj.insert("word".into(), word_to_json(w));
            coeff_fields(c, &mut obj);
            Value::Object(obj)
        })
        .collect();
    json!({ "rank": rank_to_json(a.ambient()), "terms": terms })
}

pub fn element_from_json<R: Real>(v: &Value) -> Result<AlgebraElement<R>> {
    let rank = rank_from_json(v.get("rank").ok_or_else(|| invalid("element needs a rank"))?)?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| invalid("element needs a terms array"))?;
    let mut out = AlgebraElement::zero(rank);
    for t in terms {
        let obj = t.as_object().ok_or_else(|| invalid("term must be an object"))?;
        let w = word_from_json(obj.get("word").ok_or_else(|| invalid("term needs a word"))?, rank)?;
        out.add_term(w, coeff_from_fields(obj)?)?;
    }
    Ok(out)
}

pub fn direct_sum_to_json<R: Real>(x: &DirectSumElement<R>) -> Value {
    let comps: Map<String, Value> = x.components().iter().map(|(n, a)| (n.to_string(), element_to_json(a))).collect();
    json!({ "components": comps })
}

pub fn direct_sum_from_json<R: Real>(v: &Value) -> Result<DirectSumElement<R>> {
    let comps = v.get("components").and_then(Value::as_object).ok_or_else(|| invalid("direct sum needs a components object"))?;
    let mut out = DirectSumElement::zero();
    for (key, a) in comps {
        let a = element_from_json::<R>(a)?;
        if key.parse::<u32>().ok().map(Rank::Finite) != Some(a.ambient()) {
            return Err(invalid(format!("component key {key} does not match its rank")));
        }
        out.add_component(a)?;
    }
    Ok(out)
}

pub fn graded_tensor_to_json<const K: usize, R: Real>(t: &GradedTensor<K, R>) -> Value {
    let mut comps = Map::new();
    for (ranks, block) in t.components() {
        let key = ranks.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let terms: Vec<Value> = block
            .terms()
            .iter()
            .map(|(ws, c)| {
                let mut obj = Map::new();
                obj.insert("words".into(), Value::Array(ws.iter().map(word_to_json).collect()));
                coeff_fields(c, &mut obj);
                Value::Object(obj)
            })
            .collect();
        comps.insert(key, json!({ "terms": terms }));
    }
    json!({ "components": comps })
}

pub fn graded_tensor_from_json<const K: usize, R: Real>(v: &Value) -> Result<GradedTensor<K, R>> {
    let comps = v.get("components").and_then(Value::as_object).ok_or_else(|| invalid("tensor needs a components object"))?;
    let mut out = GradedTensor::zero();
    for (key, block) in comps {
        let ranks: Vec<Rank> = key
            .split(',')
            .map(|s| s.trim().parse::<u32>().map_err(|_| invalid(format!("bad tensor key {key}"))).and_then(Rank::finite))
            .collect::<Result<_>>()?;
        if ranks.len() != K {
            return Err(invalid(format!("tensor key {key} must have {K} ranks")));
        }
        let terms = block.get("terms").and_then(Value::as_array).ok_or_else(|| invalid("tensor block needs terms"))?;
        for t in terms {
            let obj = t.as_object().ok_or_else(|| invalid("term must be an object"))?;
            let ws = obj.get("words").and_then(Value::as_array).filter(|a| a.len() == K).ok_or_else(|| invalid("term needs one word per factor"))?;
            let mut words: [ReducedWord; K] = std::array::from_fn(|k| ReducedWord::identity(ranks[k]));
            for k in 0..K {
                words[k] = word_from_json(&ws[k], ranks[k])?;
            }
            out.add_term(words, coeff_from_fields(obj)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::delta_phi;
    use crate::text::{parse_algebra_element, parse_direct_sum};
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn element_shape() {
        let a: AlgebraElement<Q> = parse_algebra_element("F4: 2*g1*g2^-1").unwrap();
        let v = element_to_json(&a);
        assert_eq!(v, json!({ "rank": 4, "terms": [ { "word": [[1,1],[2,-1]], "re": "2", "im": "0" } ] }));
        assert_eq!(element_from_json::<Q>(&v).unwrap(), a);
    }

    #[test]
    fn round_trips() {
        for text in ["F2: (1/3-2i)*g1*g2 - 7", "Finf: g9^-3", "F5: 0"] {
            let a: AlgebraElement<Q> = parse_algebra_element(text).unwrap();
            assert_eq!(element_from_json::<Q>(&element_to_json(&a)).unwrap(), a);
        }
        let x: DirectSumElement<Q> = parse_direct_sum("F1: g1; F6: g2 - 1/2*g5^2").unwrap();
        let v = direct_sum_to_json(&x);
        assert!(v["components"]["6"].is_object());
        assert_eq!(direct_sum_from_json::<Q>(&v).unwrap(), x);
        let t = delta_phi(&x);
        let tv = graded_tensor_to_json(&t);
        assert!(tv["components"]["2,3"].is_object());
        assert_eq!(graded_tensor_from_json::<2, Q>(&tv).unwrap(), t);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(word_from_json(&json!([[3, 1]]), Rank::Finite(2)).is_err());
        assert!(word_from_json(&json!([[1]]), Rank::Finite(2)).is_err());
        assert!(rank_from_json(&json!(0)).is_err());
        assert!(direct_sum_from_json::<Q>(&json!({ "components": { "3": { "rank": 2, "terms": [] } } })).is_err());
    }
}
