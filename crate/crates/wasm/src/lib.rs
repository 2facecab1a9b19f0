//! Browser bindings for the demo page in `demo/index.html`: the invariant
//! table, the automorphism certificate, and finite-field point clouds as
//! JSON strings.
//!
//! The JSON builders are plain Rust so they are unit-tested natively; the
//! `wasm_bindgen` wrappers only forward strings across the boundary.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use modcurve::certificate::{certify, verify};
use modcurve::classify::classify_xn;
use modcurve::curves::{enumerate_points, rational_point_search, weil_window, CurveModel};
use modcurve::invariants::{cover_degrees, curve_invariants};

fn parse_model(name: &str, twist: i64) -> Result<CurveModel, String> {
    match name {
        "klein" => Ok(CurveModel::KleinQuartic),
        "wiman" => CurveModel::wiman_twist(twist).map_err(|e| e.to_string()),
        "x064" => Ok(CurveModel::X064Quartic),
        "x9" => Ok(CurveModel::X9Sextic),
        "eteq" => Ok(CurveModel::EllipticTEq),
        "e32" => Ok(CurveModel::EllipticConductor32),
        "e64" => Ok(CurveModel::EllipticConductor64),
        "e49" => Ok(CurveModel::X049Elliptic),
        other => Err(format!("unknown model '{other}'")),
    }
}

fn opt_str<T: ToString>(v: Option<T>) -> Value {
    v.map(|x| json!(x.to_string())).unwrap_or(Value::Null)
}

fn invariants_json(lo: u32, hi: u32) -> Result<String, String> {
    if lo < 1 || lo > hi || hi > 2000 {
        return Err(format!("bad level range {lo}..{hi}"));
    }
    let rows: Vec<Value> = (lo as u64..=hi as u64)
        .map(|n| {
            let inv = curve_invariants(n);
            let ledger = cover_degrees(n).ok();
            json!({
                "n": n.to_string(),
                "delta": inv.delta.to_string(),
                "genus": inv.genus.to_string(),
                "aut_order": opt_str(inv.aut_order),
                "cusp_count": opt_str(inv.cusp_count),
                "index_bound_m": opt_str(inv.index_bound_m),
                "deg_pi1": opt_str(ledger.map(|l| l.deg_pi1)),
                "deg_pi0": opt_str(ledger.map(|l| l.deg_pi0)),
            })
        })
        .collect();
    Ok(serde_json::to_string(&rows).expect("rows serialize"))
}

fn certificate_json(n: u32) -> Result<String, String> {
    let cert = certify(n as u64).map_err(|e| e.to_string())?;
    let classification = classify_xn(n as u64).map_err(|e| e.to_string())?;
    let evidence: Vec<Value> = classification
        .evidence
        .iter()
        .map(|e| json!({"reason": e.reason, "anchor": e.anchor}))
        .collect();
    let payload = json!({
        "certificate": serde_json::to_value(&cert).expect("certificate serializes"),
        "verified": verify(&cert),
        "classification": {
            "hyperelliptic": classification.hyperelliptic,
            "bielliptic": classification.bielliptic,
            "evidence": evidence,
        },
    });
    Ok(payload.to_string())
}

fn points_json(model_name: &str, twist: i64, p: u32) -> Result<String, String> {
    let model = parse_model(model_name, twist)?;
    let points = enumerate_points(&model, p as u64).map_err(|e| e.to_string())?;
    // affine chart (last coordinate nonzero) for the plot, plane models only
    let mut affine: Vec<Value> = Vec::new();
    if model.coordinate_count() == 3 {
        for pt in &points {
            let coords = pt.coords();
            if let Some(winv) = coords[2].inverse() {
                affine.push(json!([
                    coords[0].mul(winv).value(),
                    coords[1].mul(winv).value()
                ]));
            }
        }
    }
    let window = model.declared_genus().map(|g| {
        let (lo, hi) = weil_window(p as u64, g);
        json!({"genus": g.to_string(), "lo": lo.max(0).to_string(), "hi": hi.to_string()})
    });
    let payload = json!({
        "model": model.name(),
        "prime": p.to_string(),
        "count": points.len().to_string(),
        "weil": window.unwrap_or(Value::Null),
        "points": points.iter().map(|pt| pt.to_string()).collect::<Vec<_>>(),
        "affine": affine,
    });
    Ok(payload.to_string())
}

fn rational_points_json(model_name: &str, twist: i64, height: i64) -> Result<String, String> {
    let model = parse_model(model_name, twist)?;
    if !(1..=2000).contains(&height) {
        return Err(format!("bad height bound {height}"));
    }
    let points = rational_point_search(&model, height).map_err(|e| e.to_string())?;
    let payload = json!({
        "model": model.name(),
        "height": height.to_string(),
        "count": points.len().to_string(),
        "points": points.iter().map(|pt| pt.to_string()).collect::<Vec<_>>(),
    });
    Ok(payload.to_string())
}

#[wasm_bindgen]
pub fn invariants_table(lo: u32, hi: u32) -> Result<String, JsValue> {
    invariants_json(lo, hi).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn aut_certificate(n: u32) -> Result<String, JsValue> {
    certificate_json(n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn field_points(model: &str, twist: i64, p: u32) -> Result<String, JsValue> {
    points_json(model, twist, p).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn rational_points(model: &str, twist: i64, height: i64) -> Result<String, JsValue> {
    rational_points_json(model, twist, height).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_rows() {
        let rows: Vec<Value> = serde_json::from_str(&invariants_json(7, 9).unwrap()).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0]["delta"], "168");
        assert_eq!(rows[1]["genus"], "5");
        assert_eq!(rows[2]["cusp_count"], "36");
        assert!(invariants_json(5, 3).is_err());
    }

    #[test]
    fn certificate_payload() {
        let payload: Value = serde_json::from_str(&certificate_json(7).unwrap()).unwrap();
        assert_eq!(payload["verified"], true);
        assert_eq!(payload["certificate"]["branch"], "Prime");
        assert_eq!(payload["classification"]["bielliptic"], true);
        assert!(certificate_json(6).is_err());
    }

    #[test]
    fn point_cloud_payload() {
        let payload: Value = serde_json::from_str(&points_json("klein", 1, 11).unwrap()).unwrap();
        assert_eq!(payload["model"], "klein");
        let count: usize = payload["count"].as_str().unwrap().parse().unwrap();
        assert_eq!(payload["points"].as_array().unwrap().len(), count);
        assert!(!payload["affine"].as_array().unwrap().is_empty());
        assert!(points_json("klein", 1, 7).is_err()); // bad reduction
        assert!(points_json("zeta", 1, 5).is_err());
    }

    #[test]
    fn wiman_cloud_has_no_planar_chart() {
        let payload: Value = serde_json::from_str(&points_json("wiman", 1, 5).unwrap()).unwrap();
        assert!(payload["affine"].as_array().unwrap().is_empty());
        assert_eq!(payload["weil"]["genus"], "5");
    }

    #[test]
    fn rational_point_payload() {
        let payload: Value =
            serde_json::from_str(&rational_points_json("x064", 1, 100).unwrap()).unwrap();
        assert_eq!(payload["count"], "4");
        let payload: Value =
            serde_json::from_str(&rational_points_json("wiman", 3, 100).unwrap()).unwrap();
        assert_eq!(payload["count"], "0");
    }
}
