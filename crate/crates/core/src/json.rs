//! JSON encodings for elements, screening elements and decompositions.
//!
//! Shapes (stable, with keys in sorted order):
//!
//! * coefficient: integer for the classical ring, otherwise an object mapping
//!   `t`-exponents to integer coefficients, e.g. `{"-1": 1, "1": 1}`;
//! * hat-ring term: `{"V": {"i,k": e, ...}, "W": {...}, "coeff": ...}`;
//! * `Y`-ring term: `{"Y": {"i,k": e, ...}, "coeff": ...}`;
//! * element: array of terms in the canonical monomial order;
//! * screening element: `{"node": i, "ring": "...", "terms": [{"coeff": ...,
//!   "k": k, "monomial": {...}} ...]}`;
//! * decomposition: `{"dominant": [{"coeff": ..., "monomial": {...}} ...],
//!   "remainder": [...]}`.

use serde_json::{json, Map, Value};

use crate::kernels::Decomposition;
use crate::rings::element::Element;
use crate::rings::monomial::{HatMonomial, Monomial, SpectralIndex, YMonomial};
use crate::scalar::Scalar;
use crate::screening::screener::Screener;
use crate::tpoly::TPoly;

/// Scalars that know their JSON coefficient encoding.
pub trait JsonScalar: Scalar {
    fn coeff_json(&self) -> Value;
}

impl JsonScalar for TPoly {
    fn coeff_json(&self) -> Value {
        let mut map = Map::new();
        for (k, c) in self.iter() {
            map.insert(k.to_string(), json!(c));
        }
        Value::Object(map)
    }
}

impl JsonScalar for i64 {
    fn coeff_json(&self) -> Value {
        json!(self)
    }
}

/// Monomials that know their JSON encoding.
pub trait JsonMonomial: Monomial {
    /// The variable blocks of this monomial, e.g. `{"V": {...}, "W": {...}}`.
    fn var_fields(&self) -> Map<String, Value>;

    fn to_json(&self) -> Value {
        Value::Object(self.var_fields())
    }
}

fn exponent_map<I: Iterator<Item = (SpectralIndex, i64)>>(iter: I) -> Value {
    let mut map = Map::new();
    for (s, e) in iter {
        map.insert(format!("{},{}", s.node, s.k), json!(e));
    }
    Value::Object(map)
}

impl JsonMonomial for HatMonomial {
    fn var_fields(&self) -> Map<String, Value> {
        let mut map = Map::new();
        map.insert("V".to_string(), exponent_map(self.v_iter()));
        map.insert("W".to_string(), exponent_map(self.w_iter()));
        map
    }
}

impl JsonMonomial for YMonomial {
    fn var_fields(&self) -> Map<String, Value> {
        let mut map = Map::new();
        map.insert("Y".to_string(), exponent_map(self.iter()));
        map
    }
}

/// Element as an array of term objects, variable blocks plus `"coeff"`.
pub fn element_to_json<M: JsonMonomial, C: JsonScalar>(x: &Element<M, C>) -> Value {
    let terms: Vec<Value> = x
        .iter()
        .map(|(m, c)| {
            let mut fields = m.var_fields();
            fields.insert("coeff".to_string(), c.coeff_json());
            Value::Object(fields)
        })
        .collect();
    Value::Array(terms)
}

/// Screening element with its node and ring tag.
pub fn screener_to_json<M: JsonMonomial, C: JsonScalar>(
    s: &Screener<M, C>,
    ring: &str,
) -> Value {
    let terms: Vec<Value> = s
        .iter()
        .map(|(k, m, c)| {
            json!({
                "coeff": c.coeff_json(),
                "k": k,
                "monomial": m.to_json(),
            })
        })
        .collect();
    json!({
        "node": s.node(),
        "ring": ring,
        "terms": terms,
    })
}

/// Decomposition into dominant kernel elements plus remainder.
pub fn decomposition_to_json<M: JsonMonomial, C: JsonScalar>(d: &Decomposition<M, C>) -> Value {
    let dominant: Vec<Value> = d
        .dominant
        .iter()
        .map(|(m, c)| {
            json!({
                "coeff": c.coeff_json(),
                "monomial": m.to_json(),
            })
        })
        .collect();
    json!({
        "dominant": dominant,
        "remainder": element_to_json(&d.remainder),
    })
}
