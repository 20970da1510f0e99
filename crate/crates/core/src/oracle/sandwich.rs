//! Cross-checks of the exact search against every closed-form bound.

use serde::Serialize;

use crate::bounds::{
    best_combined_bound, complex_bound, h_upper, simple_bound, unc_lower_new, unc_lower_old,
    BoundValue, FaceCounts,
};
use crate::embedding::{face_profile, trace_faces};
use crate::error::Result;
use crate::graph::Graph;

use super::{exact_h, exact_unc, SearchLimits};

const TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SandwichRow {
    pub n: usize,
    pub m: usize,
    pub h: usize,
    pub unc: usize,
    pub h_upper: f64,
    pub best_combined: Option<f64>,
    pub unc_lower: i64,
    /// Values of `k` for which the face-profile bounds were checked.
    pub k_checked: usize,
    pub violations: Vec<String>,
}

/// Computes `h` and `unc` exactly and checks them against the bounds:
/// `n-1 <= h <= h_upper`, `h <= best_combined`, `unc >= ` every lower
/// bound, and `b_k^- <= h <= min(b_k^+, simple_bound)` for `3 <= k <= 2n-2`
/// on the face profile of the optimal witness (skipped for tree witnesses).
pub fn sandwich(g: &Graph, limits: SearchLimits) -> Result<SandwichRow> {
    let (n, m) = (g.n(), g.m());
    let (h, cert) = exact_h(g, limits)?;
    let unc = exact_unc(g, limits)?.unc;
    let mut violations = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            violations.push(what);
        }
    };
    let hf = h as f64;

    let upper = h_upper(n, m)?;
    check(h + 1 >= n, format!("h = {h} < n - 1"));
    check(hf <= upper + TOL, format!("h = {h} > h_upper = {upper}"));
    let best = match best_combined_bound(n, m).value {
        Some(BoundValue::Real(v)) => Some(v),
        _ => None,
    };
    if let Some(b) = best {
        check(hf <= b + TOL, format!("h = {h} > best_combined = {b}"));
    }
    let unc_lower = [
        unc_lower_old(n, m)?,
        unc_lower_new(n, m)?,
        m.div_ceil(h) as i64,
    ]
    .into_iter()
    .max()
    .unwrap();
    check(
        unc as i64 >= unc_lower,
        format!("unc = {unc} < lower bound {unc_lower}"),
    );

    let mut k_checked = 0;
    if h >= n {
        let profile = face_profile(&trace_faces(&cert.rotation))?;
        for k in 3..=2 * n - 2 {
            let fc = FaceCounts::new(k, profile.truncated(k))?;
            let simple = simple_bound(n, &fc);
            check(
                hf <= simple + TOL,
                format!("k = {k}: h = {h} > simple bound {simple}"),
            );
            let cb = complex_bound(n, m, &fc)?;
            match (cb.b_minus, cb.b_plus) {
                (Some(lo), Some(hi)) => {
                    check(lo <= hf + TOL, format!("k = {k}: b_k^- = {lo} > h = {h}"));
                    check(hf <= hi + TOL, format!("k = {k}: h = {h} > b_k^+ = {hi}"));
                }
                _ => check(
                    false,
                    format!("k = {k}: Δ_k = {} < 0 on a realised profile", cb.delta),
                ),
            }
            k_checked += 1;
        }
    }
    Ok(SandwichRow {
        n,
        m,
        h,
        unc,
        h_upper: upper,
        best_combined: best,
        unc_lower,
        k_checked,
        violations,
    })
}
