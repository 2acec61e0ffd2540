//! Browser bindings for the singularity explorer page.
//!
//! Each exported function takes (n, q) as plain numbers, computes exactly
//! inside the wasm module, and hands the page one JSON string in the same
//! schema the command line tool emits. The payload builders are ordinary
//! Rust functions so the whole surface is testable on the host target;
//! the `wasm_bindgen` wrappers only translate errors into JS values.

use wasm_bindgen::prelude::*;

use mckay_core::{
    collection_report, digits_report, ext_table_report, specials_report, verify_instance,
    HjExpansion, InstanceReport, SingularityType,
};

fn instance(n: u32, q: u32) -> Result<HjExpansion, String> {
    SingularityType::new(i64::from(n), i64::from(q))
        .map(mckay_core::expand)
        .map_err(|err| err.to_string())
}

fn to_json(value: &InstanceReport) -> Result<String, String> {
    serde_json::to_string(value).map_err(|err| err.to_string())
}

/// Continued fraction data, the special/non-special partition, and the
/// digit table. Drives the resolution graph and residue strip.
pub fn expansion_payload(n: u32, q: u32) -> Result<String, String> {
    let e = instance(n, q)?;
    let mut rep = specials_report(&e);
    rep.digits = digits_report(&e).digits;
    to_json(&rep)
}

/// The exceptional collection and its K-theory class matrix.
pub fn collection_payload(n: u32, q: u32) -> Result<String, String> {
    let e = instance(n, q)?;
    to_json(&collection_report(&e))
}

/// The Ext table over all ordered collection pairs, plus the full named
/// check list; with `oracle` set, every entry is recomputed from the
/// projective resolution and compared.
pub fn ext_table_payload(n: u32, q: u32, oracle: bool) -> Result<String, String> {
    let e = instance(n, q)?;
    let mut rep = ext_table_report(&e, oracle);
    rep.checks = Some(verify_instance(&e, oracle).checks);
    to_json(&rep)
}

#[wasm_bindgen]
pub fn expansion_json(n: u32, q: u32) -> Result<String, JsValue> {
    expansion_payload(n, q).map_err(|err| JsValue::from_str(&err))
}

#[wasm_bindgen]
pub fn collection_json(n: u32, q: u32) -> Result<String, JsValue> {
    collection_payload(n, q).map_err(|err| JsValue::from_str(&err))
}

#[wasm_bindgen]
pub fn ext_table_json(n: u32, q: u32, oracle: bool) -> Result<String, JsValue> {
    ext_table_payload(n, q, oracle).map_err(|err| JsValue::from_str(&err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mckay_core::InstanceReport;

    #[test]
    fn expansion_payload_parses_and_carries_digits() {
        let rep: InstanceReport = serde_json::from_str(&expansion_payload(7, 5).unwrap()).unwrap();
        assert_eq!(rep.b, vec![2, 2, 3]);
        assert_eq!(rep.specials.as_deref(), Some([0, 1, 3, 5].as_slice()));
        assert_eq!(rep.digits.unwrap().len(), 7);
    }

    #[test]
    fn collection_payload_carries_the_matrix() {
        let rep: InstanceReport = serde_json::from_str(&collection_payload(7, 5).unwrap()).unwrap();
        assert_eq!(rep.collection.unwrap().len(), 3);
        assert_eq!(
            rep.k_matrix.unwrap(),
            vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]
        );
    }

    #[test]
    fn ext_payload_checks_pass_with_oracle() {
        let rep: InstanceReport =
            serde_json::from_str(&ext_table_payload(7, 5, true).unwrap()).unwrap();
        assert_eq!(rep.ext_table.as_deref().unwrap().len(), 9);
        let checks = rep.checks.unwrap();
        assert!(checks.iter().any(|c| c.name == "oracle.agreement"));
        assert!(checks.iter().all(|c| c.pass));
    }

    #[test]
    fn bad_input_reports_the_reason() {
        let err = expansion_payload(4, 2).unwrap_err();
        assert!(err.contains("gcd"), "{err}");
        let err = expansion_payload(5, 0).unwrap_err();
        assert!(err.contains("out of range"), "{err}");
    }

    #[test]
    fn payloads_are_deterministic() {
        assert_eq!(
            ext_table_payload(12, 7, true),
            ext_table_payload(12, 7, true)
        );
    }
}
