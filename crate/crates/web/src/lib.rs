//! Browser bindings for the `curvehull` demo page. Every export takes plain
//! strings and returns a JSON string; failures come back as `{"error": ...}`.

use curvehull::exact::parse::parse_unipoly_list;
use curvehull::exact::rational::{format_rational, parse_rational, to_f64};
use curvehull::extreme::{extreme_candidate, profile_and_normalize, verify_extreme, ZeroPattern};
use curvehull::hull::{sample_curve, CurveSegment};
use curvehull::schur::{admissible_fillings, schur_via_bialternant, schur_via_tableaux, DecreasingSeq};
use curvehull::sdp::{interval_moment_lmi, lmi_membership};
use curvehull::{Interval, Rational};
use num_traits::Zero;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

type Outcome = Result<Value, String>;

fn finish(r: Outcome) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn rationals(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(|p| parse_rational(p.trim()).map_err(|e| e.to_string())).collect()
}

fn interval(s: &str) -> Result<Interval, String> {
    match rationals(s)?.as_slice() {
        [lo, hi] => Interval::new(lo.clone(), hi.clone()).map_err(|e| e.to_string()),
        _ => Err(format!("expected lo,hi, got {s:?}")),
    }
}

fn zeros(s: &str) -> Result<ZeroPattern, String> {
    let mut points = Vec::new();
    let mut mults = Vec::new();
    for item in s.split(',') {
        let (x, m) = item.trim().split_once(':').ok_or_else(|| format!("expected point:mult, got {item:?}"))?;
        points.push(parse_rational(x.trim()).map_err(|e| e.to_string())?);
        mults.push(m.trim().parse::<usize>().map_err(|e| format!("{m:?}: {e}"))?);
    }
    ZeroPattern::new(points, mults).map_err(|e| e.to_string())
}

/// Semistandard tableaux of a strictly decreasing sequence such as
/// `"3,1,0"`, with the Schur polynomial computed both ways.
#[wasm_bindgen]
pub fn schur_tableaux(seq: &str) -> String {
    finish((|| {
        let entries = seq
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let m = DecreasingSeq::new(entries).map_err(|e| e.to_string())?;
        let tableaux = admissible_fillings(&m);
        if tableaux.len() > 500 {
            return Err(format!("{} tableaux; pick a smaller sequence", tableaux.len()));
        }
        let t = schur_via_tableaux(&m);
        let b = schur_via_bialternant(&m);
        Ok(json!({
            "shape": m.partition(),
            "tableaux": tableaux
                .iter()
                .map(|t| t.rows.iter().filter(|r| !r.is_empty()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "polynomial": t.display_with("x"),
            "bialternant_agrees": t == b,
        }))
    })())
}

/// Determinantal candidate for a zero pattern like `"1/3:2,2/3:2"` in the
/// span of `basis` on `interval`, plus `samples` plot points.
#[wasm_bindgen]
pub fn extreme_plot(basis: &str, interval_text: &str, zeros_text: &str, samples: u32) -> String {
    finish((|| {
        let basis = parse_unipoly_list(basis).map_err(|e| e.to_string())?;
        let s = interval(interval_text)?;
        let z = zeros(zeros_text)?;
        let v = profile_and_normalize(&basis, s.lo()).map_err(|e| e.to_string())?;
        let f = extreme_candidate(&v, &z).map_err(|e| e.to_string())?;
        if f.is_zero() {
            return Err("the zero pattern forces the zero polynomial".into());
        }
        let report = verify_extreme(&v, &f, &s).map_err(|e| e.to_string())?;
        let count = samples.clamp(2, 2000) as usize;
        let (lo, hi) = (to_f64(s.lo()), to_f64(s.hi()));
        let coeffs: Vec<f64> = f.coeffs().iter().map(to_f64).collect();
        let plot: Vec<[f64; 2]> = (0..count)
            .map(|i| {
                let t = lo + (hi - lo) * i as f64 / (count - 1) as f64;
                [t, coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)]
            })
            .collect();
        Ok(json!({
            "candidate": f.to_string(),
            "report": serde_json::to_value(report).map_err(|e| e.to_string())?,
            "plot": plot,
        }))
    })())
}

/// Exact membership of `point` in the moment LMI of the curve
/// `(t, ..., t^n)` over `interval`, plus a sampled curve for drawing.
#[wasm_bindgen]
pub fn moment_member(interval_text: &str, point: &str) -> String {
    finish((|| {
        let s = interval(interval_text)?;
        let x = rationals(point)?;
        let lmi = interval_moment_lmi(x.len(), &s).map_err(|e| e.to_string())?;
        let member = lmi_membership(&lmi, &x).map_err(|e| e.to_string())?;
        let c = CurveSegment::moment(x.len(), s).map_err(|e| e.to_string())?;
        let curve: Vec<Vec<f64>> = sample_curve(&c, 101)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|p| p.iter().map(to_f64).collect())
            .collect();
        Ok(json!({
            "member": member,
            "point": x.iter().map(format_rational).collect::<Vec<_>>(),
            "curve": curve,
        }))
    })())
}
