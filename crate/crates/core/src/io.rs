//! JSON reading and canonical writing of posets, complexes, subdivision maps and polynomials.
//!
//! Polynomial objects map words to decimal coefficient strings; the empty word is the key `""`.
//! Flag vectors map rank sets such as `"[1,2]"` to coefficient strings.

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::complex::{face_poset, natural_cmp, SimplicialComplex};
use crate::error::{Error, Result};
use crate::flag::{rank_list, FlagVector};
use crate::ncpoly::{Letter, NcPolynomial, UniPolynomial, Word};
use crate::poset::{build_poset, GradedPoset};
use crate::subdivision::SubdivisionMap;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses JSON text.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
}

fn string_list(v: &Value, what: &str) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| parse_err(format!("{what} must be an array")))?
        .iter()
        .map(|s| s.as_str().map(str::to_string).ok_or_else(|| parse_err(format!("{what} entries must be strings"))))
        .collect()
}

/// Reads `{"elements": [...], "covers": [[lo, hi], ...]}`.
pub fn poset_from_value(v: &Value) -> Result<GradedPoset> {
    let elements = string_list(v.get("elements").ok_or_else(|| parse_err("poset needs \"elements\""))?, "elements")?;
    let covers = v
        .get("covers")
        .ok_or_else(|| parse_err("poset needs \"covers\""))?
        .as_array()
        .ok_or_else(|| parse_err("covers must be an array"))?
        .iter()
        .map(|pair| match string_list(pair, "cover")?.as_slice() {
            [lo, hi] => Ok((lo.clone(), hi.clone())),
            _ => Err(parse_err("each cover is a pair [lo, hi]")),
        })
        .collect::<Result<Vec<_>>>()?;
    build_poset(&elements, &covers)
}

fn face_parts(id: &str) -> Option<Vec<&str>> {
    let inner = id.strip_prefix('{')?.strip_suffix('}')?;
    Some(if inner.is_empty() { Vec::new() } else { inner.split(',').collect() })
}

/// Set labels such as `{1,2}` by size then vertices, set labels before other ids, the rest naturally.
fn id_cmp(a: &str, b: &str) -> Ordering {
    match (face_parts(a), face_parts(b)) {
        (Some(x), Some(y)) => x.len().cmp(&y.len()).then_with(|| {
            x.iter().zip(&y).map(|(u, v)| natural_cmp(u, v)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
        }),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => natural_cmp(a, b),
    }
}

/// Canonical poset JSON: elements sorted, covers sorted lexicographically.
pub fn poset_to_value(p: &GradedPoset) -> Value {
    let mut elements: Vec<&str> = p.ids().iter().map(String::as_str).collect();
    elements.sort_by(|a, b| id_cmp(a, b));
    let mut covers: Vec<(&str, &str)> = p.covers().map(|(x, y)| (p.id(x), p.id(y))).collect();
    covers.sort_by(|a, b| id_cmp(a.0, b.0).then_with(|| id_cmp(a.1, b.1)));
    json!({
        "elements": elements,
        "covers": covers.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

/// Reads `{"facets": [[v, ...], ...]}`.
pub fn complex_from_value(v: &Value) -> Result<SimplicialComplex> {
    let facets = v
        .get("facets")
        .ok_or_else(|| parse_err("complex needs \"facets\""))?
        .as_array()
        .ok_or_else(|| parse_err("facets must be an array"))?
        .iter()
        .map(|f| string_list(f, "facet"))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::new(&facets)
}

/// Canonical complex JSON: facets by size, then vertex order.
pub fn complex_to_value(k: &SimplicialComplex) -> Value {
    json!({ "facets": k.facet_ids() })
}

/// A poset given directly, or the face poset (without maximum) of a complex.
pub fn poset_or_complex_from_value(v: &Value) -> Result<GradedPoset> {
    if v.get("facets").is_some() {
        Ok(face_poset(&complex_from_value(v)?, false))
    } else {
        poset_from_value(v)
    }
}

/// Reads `{"source": ..., "target": ..., "carrier": {"src": "tgt", ...}}`.
///
/// Source and target are posets or complexes. When the target has no maximum, one is adjoined
/// to both sides.
pub fn subdivision_from_value(v: &Value) -> Result<SubdivisionMap> {
    let get = |k: &str| v.get(k).ok_or_else(|| parse_err(format!("subdivision needs \"{k}\"")));
    let source = poset_or_complex_from_value(get("source")?)?;
    let target = poset_or_complex_from_value(get("target")?)?;
    let carrier = get("carrier")?
        .as_object()
        .ok_or_else(|| parse_err("carrier must be an object"))?
        .iter()
        .map(|(s, t)| {
            t.as_str().map(|t| (s.clone(), t.to_string())).ok_or_else(|| parse_err("carrier values must be strings"))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = SubdivisionMap::new(source, target, &carrier)?;
    if map.target().top().is_none() {
        map.with_top()
    } else {
        Ok(map)
    }
}

/// Canonical subdivision JSON with both sides written as posets.
pub fn subdivision_to_value(m: &SubdivisionMap) -> Value {
    let mut pairs = m.carrier_ids();
    pairs.sort_by(|a, b| id_cmp(&a.0, &b.0));
    let mut carrier = Map::new();
    for (s, t) in pairs {
        carrier.insert(s, Value::String(t));
    }
    json!({
        "source": poset_to_value(m.source()),
        "target": poset_to_value(m.target()),
        "carrier": carrier,
    })
}

/// `{"word": "coeff", ...}` in canonical term order with words spelled letter by letter; the empty word is `""`.
pub fn nc_to_value<L: Letter>(p: &NcPolynomial<L>) -> Value {
    let mut out = Map::new();
    for (w, k) in p.terms() {
        let key: String = w.letters().iter().map(|l| l.symbol()).collect();
        out.insert(key, Value::String(k.to_string()));
    }
    Value::Object(out)
}

/// Inverse of [`nc_to_value`].
pub fn nc_from_value<L: Letter>(v: &Value) -> Result<NcPolynomial<L>> {
    let obj = v.as_object().ok_or_else(|| parse_err("polynomial must be an object"))?;
    let mut p = NcPolynomial::zero();
    for (key, coeff) in obj {
        let word: Word<L> = if key.is_empty() { Word::empty() } else { key.parse()? };
        let k: BigInt = coeff
            .as_str()
            .ok_or_else(|| parse_err("coefficients must be strings"))?
            .parse()
            .map_err(|_| parse_err(format!("bad coefficient for `{key}`")))?;
        p.add_term(word, k);
    }
    Ok(p)
}

/// Coefficient strings, lowest degree first.
pub fn uni_to_value(p: &UniPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

/// Inverse of [`uni_to_value`].
pub fn uni_from_value(v: &Value) -> Result<UniPolynomial> {
    let coeffs = v
        .as_array()
        .ok_or_else(|| parse_err("polynomial must be an array"))?
        .iter()
        .map(|c| {
            c.as_str()
                .and_then(|s| s.parse::<BigInt>().ok())
                .ok_or_else(|| parse_err("coefficients must be integer strings"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPolynomial::new(coeffs))
}

/// Rank-set key such as `"[1,2]"`; the empty set is `"[]"`.
pub fn mask_key(mask: u64) -> String {
    let ranks: Vec<String> = rank_list(mask).iter().map(usize::to_string).collect();
    format!("[{}]", ranks.join(","))
}

/// Flag vector as `{"[S]": "value", ...}`, masks by size then rank lists.
pub fn flag_to_value(f: &FlagVector) -> Value {
    let mut out = Map::new();
    for m in f.masks() {
        out.insert(mask_key(m), Value::String(f.get(m).to_string()));
    }
    Value::Object(out)
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
