//! Bindings for the demo page. Every function takes plain strings and
//! returns a JSON document; errors come back as `{"error": ...}`.

use satopo::exact::parse::{parse_poly, parse_rat};
use satopo::harness::{self, IdentityId, Input, Params};
use satopo::stratified::PlaneSet;
use satopo::{AlgNumber, Error, Flavor};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn wrap(r: Result<Value, Error>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn input(kind: &str, expr: &str) -> Result<Input, Error> {
    let p = parse_poly(expr)?;
    match kind {
        "region" => Ok(Input::Set(PlaneSet::region(p)?)),
        "curve" => Ok(Input::Set(PlaneSet::curve(p)?)),
        _ => Ok(Input::Poly(p)),
    }
}

/// Critical points of `f` with degrees, indices and values.
#[wasm_bindgen]
pub fn critical_points(poly: &str) -> String {
    wrap((|| {
        let f = parse_poly(poly)?;
        let pts = satopo::critical::critical_points_by_arcs(&f)?;
        let rows: Vec<Value> = pts
            .into_iter()
            .map(|mut c| {
                let (x, y) = c.point.to_f64();
                json!({"x": x, "y": y, "value": c.value, "deg": c.local_degree, "ind": c.ind_f, "ind_neg": c.ind_neg_f})
            })
            .collect();
        Ok(json!({ "poly": f.to_string(), "points": rows }))
    })())
}

/// `χ({f σ α})` and the Euler characteristic of its link at infinity.
#[wasm_bindgen]
pub fn level_set(poly: &str, alpha: &str, flavor: &str) -> String {
    wrap((|| {
        let f = parse_poly(poly)?;
        let a = parse_rat(alpha)?;
        let fl: Flavor = flavor.parse()?;
        let chi = satopo::euler::chi(&f, &a, fl)?;
        let link = satopo::infinity::link_chi(&f, &AlgNumber::from_rat(&a), fl)?;
        Ok(json!({ "chi": chi, "link_chi": link, "chi_c": chi - link }))
    })())
}

/// One identity report; `kind` is `poly`, `region` or `curve`.
#[wasm_bindgen]
pub fn verify_identity(identity: &str, kind: &str, expr: &str, alpha: &str) -> String {
    wrap((|| {
        let id: IdentityId = identity.parse()?;
        let inp = input(kind, expr)?;
        let alpha = if alpha.trim().is_empty() { None } else { Some(parse_rat(alpha)?) };
        let r = harness::verify(id, &inp, &Params { alpha, ..Params::default() });
        Ok(serde_json::to_value(&r).expect("report serializes"))
    })())
}

/// SVG plot of the input.
#[wasm_bindgen]
pub fn plot(kind: &str, expr: &str) -> String {
    match input(kind, expr) {
        Ok(i) => harness::render_svg(&i, 0),
        Err(e) => format!("<svg xmlns=\"http://www.w3.org/2000/svg\"><text y=\"20\">{e}</text></svg>"),
    }
}

/// Names of all identities, for the selector on the page.
#[wasm_bindgen]
pub fn identity_names() -> String {
    Value::from(IdentityId::ALL.iter().map(|i| i.name()).collect::<Vec<_>>()).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let v: Value = serde_json::from_str(&critical_points("x^2 - y^2")).unwrap();
        assert_eq!(v["points"][0]["deg"], -1);
        let v: Value = serde_json::from_str(&level_set("x^2 + y^2", "1", "le")).unwrap();
        assert_eq!(v["chi"], 1);
        let v: Value = serde_json::from_str(&verify_identity("T5.6", "region", "x^2 + y^2 - 1", "")).unwrap();
        assert_eq!(v["pass"], true);
        let v: Value = serde_json::from_str(&critical_points("x +")).unwrap();
        assert!(v["error"].is_string());
        assert_eq!(serde_json::from_str::<Vec<String>>(&identity_names()).unwrap().len(), 36);
    }
}
