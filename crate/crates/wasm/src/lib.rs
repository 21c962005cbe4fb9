//! Browser bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string; errors come back as a thrown
//! `Error` carrying the library's message.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use restriction::charpoly::Shape;
use restriction::counts;
use restriction::report::{self, Method, Rep, Target};
use restriction::{CharPoly, Result};

fn shape(family: &str, p: u32, q: u32) -> Result<Shape> {
    match family {
        "hook" => Ok(Shape::Hook { a: p, b: q }),
        "two-column" => Ok(Shape::TwoColumn { k: p, l: q }),
        other => Err(restriction::Error::InvalidParameters(format!(
            "unknown family {other:?}"
        ))),
    }
}

fn rep(name: &str) -> Result<Rep> {
    name.parse()
}

#[derive(Serialize)]
struct Term {
    basis: String,
    coefficient: String,
}

#[derive(Serialize)]
struct Moments {
    n: u32,
    trivial: String,
    sign: String,
}

#[derive(Serialize)]
struct CharpolyView {
    partition: String,
    polynomial: String,
    terms: Vec<Term>,
    moments: Vec<Moments>,
}

/// Character polynomial of a shape with its moments for `n ≤ n_max`.
pub fn charpoly_json(family: &str, p: u32, q: u32, n_max: u32) -> Result<String> {
    let shape = shape(family, p, q)?;
    let poly = shape.char_poly()?;
    let terms = poly
        .terms()
        .map(|(alpha, c)| {
            let single = CharPoly::from_binomial(alpha);
            Term {
                basis: single.to_string(),
                coefficient: c.to_string(),
            }
        })
        .collect();
    let moments = (0..=n_max)
        .map(|n| Moments {
            n,
            trivial: poly.moment(n).to_string(),
            sign: poly.signed_moment(n).to_string(),
        })
        .collect();
    let view = CharpolyView {
        partition: shape.partition().to_string(),
        polynomial: poly.to_string(),
        terms,
        moments,
    };
    Ok(serde_json::to_string(&view).expect("view serializes"))
}

#[derive(Serialize)]
struct Grid {
    family: String,
    rep: Rep,
    row_label: &'static str,
    rows: Vec<u32>,
    ns: Vec<u32>,
    /// `values[row][col]`, `null` where `W_λ(ℂⁿ)` is undefined.
    values: Vec<Vec<Option<u64>>>,
}

/// Multiplicities for a heatmap. Hooks vary `a` with `b = fixed`; two-column
/// shapes vary `k` with `l = fixed`.
pub fn grid_json(
    family: &str,
    rep_name: &str,
    fixed: u32,
    row_max: u32,
    n_max: u32,
) -> Result<String> {
    let rep = rep(rep_name)?;
    let rows: Vec<u32> = (0..=row_max).collect();
    let ns: Vec<u32> = (1..=n_max).collect();
    let mut values = Vec::with_capacity(rows.len());
    for &r in &rows {
        let target = Target::Shape(shape(family, r, fixed)?);
        let method = target.default_method(rep);
        values.push(
            ns.iter()
                .map(|&n| report::compute(&target, n, rep, method).ok())
                .collect(),
        );
    }
    let row_label = if family == "hook" { "a" } else { "k" };
    let grid = Grid {
        family: family.to_string(),
        rep,
        row_label,
        rows,
        ns,
        values,
    };
    Ok(serde_json::to_string(&grid).expect("grid serializes"))
}

#[derive(Serialize)]
struct Pair {
    lam: Vec<u32>,
    mu: Vec<u32>,
}

#[derive(Serialize)]
struct PairsView {
    count: usize,
    by_method: Vec<(Method, u64)>,
    pairs: Vec<Pair>,
}

/// The pairs counted by the hook formulas, with the other methods alongside.
pub fn hook_pairs_json(rep_name: &str, n: u32, a: u32, b: u32) -> Result<String> {
    let rep = rep(rep_name)?;
    let found = match rep {
        Rep::Sign => counts::hook_sign_pairs(n, a, b)?,
        Rep::Trivial => counts::hook_triv_pairs(n, a, b)?,
    };
    let rows = report::compute_checked(&Target::Shape(Shape::Hook { a, b }), n, rep)?;
    let view = PairsView {
        count: found.len(),
        by_method: rows.iter().map(|r| (r.method, r.multiplicity)).collect(),
        pairs: found
            .iter()
            .map(|p| Pair {
                lam: p.lam.parts().to_vec(),
                mu: p.mu.parts().to_vec(),
            })
            .collect(),
    };
    Ok(serde_json::to_string(&view).expect("pairs serialize"))
}

fn to_js(r: Result<String>) -> std::result::Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = charpoly)]
pub fn charpoly_js(
    family: &str,
    p: u32,
    q: u32,
    n_max: u32,
) -> std::result::Result<String, JsError> {
    to_js(charpoly_json(family, p, q, n_max))
}

#[wasm_bindgen(js_name = multiplicityGrid)]
pub fn grid_js(
    family: &str,
    rep: &str,
    fixed: u32,
    row_max: u32,
    n_max: u32,
) -> std::result::Result<String, JsError> {
    to_js(grid_json(family, rep, fixed, row_max, n_max))
}

#[wasm_bindgen(js_name = hookPairs)]
pub fn hook_pairs_js(rep: &str, n: u32, a: u32, b: u32) -> std::result::Result<String, JsError> {
    to_js(hook_pairs_json(rep, n, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn charpoly_view() {
        let v: Value = serde_json::from_str(&charpoly_json("hook", 3, 2, 6).unwrap()).unwrap();
        assert_eq!(v["partition"], "(4,1,1)");
        assert_eq!(v["moments"][5]["sign"], "2");
        assert!(charpoly_json("triangle", 1, 1, 3).is_err());
    }

    #[test]
    fn grid_marks_undefined_cells() {
        let v: Value = serde_json::from_str(&grid_json("hook", "sign", 2, 4, 6).unwrap()).unwrap();
        // row a = 3, column n = 5
        assert_eq!(v["values"][3][4], 2);
        assert!(v["values"][0][1].is_null());
        let v: Value =
            serde_json::from_str(&grid_json("two-column", "trivial", 1, 4, 5).unwrap()).unwrap();
        assert_eq!(v["row_label"], "k");
        assert!(v["values"][0]
            .as_array()
            .unwrap()
            .iter()
            .all(Value::is_null));
    }

    #[test]
    fn pairs_view() {
        let v: Value = serde_json::from_str(&hook_pairs_json("sign", 5, 3, 2).unwrap()).unwrap();
        assert_eq!(v["count"], 2);
        assert_eq!(v["by_method"].as_array().unwrap().len(), 4);
        assert!(hook_pairs_json("sign", 2, 1, 3).is_err());
    }
}
