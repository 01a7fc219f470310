use num_bigint::BigInt;
use serde_json::{json, Value};

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::var::VarId;
use crate::error::{Error, Result};

/// JSON polynomial format:
/// `{"vars": ["t0", ...], "terms": [{"c": "<decimal>", "e": [i, ...]}, ...]}`
/// with terms leading-first in the canonical order and coefficients as decimal
/// strings. Byte-identical across runs.
pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let vars = p.vars();
    let terms: Vec<Value> = p
        .terms_desc()
        .map(|(m, c)| {
            let exps: Vec<i64> = vars.iter().map(|&v| m.exponent(v) as i64).collect();
            json!({"c": c.to_string(), "e": exps})
        })
        .collect();
    json!({
        "vars": vars.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "terms": terms,
    })
}

pub fn poly_from_json(value: &Value) -> Result<LaurentPoly> {
    let vars: Vec<VarId> = value
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing `vars` array".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .ok_or_else(|| Error::Parse("variable name must be a string".into()))
                .and_then(str::parse)
        })
        .collect::<Result<_>>()?;
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing `terms` array".into()))?;
    let mut out = Vec::with_capacity(terms.len());
    for term in terms {
        let c: BigInt = term
            .get("c")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("term coefficient must be a decimal string".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad coefficient".into()))?;
        let exps = term
            .get("e")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("term missing exponents".into()))?;
        if exps.len() != vars.len() {
            return Err(Error::Parse("exponent tuple length mismatch".into()));
        }
        let mono = Monomial::from_pairs(vars.iter().zip(exps).map(|(&v, e)| {
            (v, e.as_i64().unwrap_or(0) as i32)
        }));
        out.push((mono, c));
    }
    Ok(LaurentPoly::from_terms(out))
}

/// TSV polynomial format: a header line naming the variables, then one term
/// per line with the coefficient followed by the exponent tuple.
pub fn poly_to_tsv(p: &LaurentPoly) -> String {
    let vars = p.vars();
    let mut out = String::from("c");
    for v in &vars {
        out.push('\t');
        out.push_str(&v.to_string());
    }
    out.push('\n');
    for (m, c) in p.terms_desc() {
        out.push_str(&c.to_string());
        for &v in &vars {
            out.push('\t');
            out.push_str(&m.exponent(v).to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn json_round_trip() {
        let p = parse_poly("x0^2 x1 - 2 x0 + u0^-1").unwrap();
        let v = poly_to_json(&p);
        assert_eq!(poly_from_json(&v).unwrap(), p);
    }

    #[test]
    fn json_shape_is_canonical() {
        let p = parse_poly("t0 t1 - 1").unwrap();
        let v = poly_to_json(&p);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"terms":[{"c":"1","e":[1,1]},{"c":"-1","e":[0,0]}],"vars":["t0","t1"]}"#
        );
    }

    #[test]
    fn tsv_layout() {
        let p = parse_poly("t0 t1 - 1").unwrap();
        assert_eq!(poly_to_tsv(&p), "c\tt0\tt1\n1\t1\t1\n-1\t0\t0\n");
    }
}
