//! Canonical JSON rendering of series.
//!
//! A series becomes a sorted array of term objects
//! `{"monomial": {"x1": 2, ...}, "num": "3", "den": "2"}` with reduced
//! fractions and string-encoded big integers, so output is byte-identical
//! across runs and platforms.

use serde_json::{json, Map, Value};

use crate::series::TruncatedSeries;

impl TruncatedSeries {
    /// Canonical JSON value: the sorted term list.
    pub fn to_json(&self) -> Value {
        let mut out = Vec::with_capacity(self.num_terms());
        for (m, c) in self.terms() {
            let mut mono = Map::new();
            for (v, e) in m.iter() {
                mono.insert(v.to_string(), json!(e));
            }
            out.push(json!({
                "monomial": Value::Object(mono),
                "num": c.numer().to_string(),
                "den": c.denom().to_string(),
            }));
        }
        Value::Array(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::q_ratio;
    use crate::variable::Variable;

    #[test]
    fn terms_are_sorted_and_fractions_reduced() {
        let x1 = TruncatedSeries::variable(Variable::x(1), Some(4));
        let f = x1.pow(2).scale(&q_ratio(4, 6)).add(&x1.scale(&q_ratio(-1, 1)));
        let j = serde_json::to_string(&f.to_json()).expect("serializable");
        assert_eq!(
            j,
            r#"[{"den":"1","monomial":{"x1":1},"num":"-1"},{"den":"3","monomial":{"x1":2},"num":"2"}]"#
        );
    }
}
