//! Closed-form bounds on the maximum uncrossed subgraph number `h(G)` and
//! the uncrossed number `unc(G)`, plus the known exact values for complete
//! and complete bipartite graphs.
//!
//! Signatures are numeric: every formula depends on `(n, m)` and, for the
//! face-profile bounds, on a truncated face-length vector. The graph-level
//! wrappers at the bottom run the connectivity and triangle gates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{analyze, Graph};

/// Values within this distance of an integer are treated as that integer
/// before taking a ceiling.
pub const CEIL_GUARD: f64 = 1e-9;

pub fn ceil_guarded(x: f64) -> i64 {
    let r = x.round();
    if (x - r).abs() <= CEIL_GUARD {
        r as i64
    } else {
        x.ceil() as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundValue {
    Integer(i64),
    Real(f64),
}

impl BoundValue {
    pub fn as_f64(self) -> f64 {
        match self {
            BoundValue::Integer(v) => v as f64,
            BoundValue::Real(v) => v,
        }
    }
}

/// One evaluated bound with the inputs it used.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub value: Option<BoundValue>,
    pub applicable: bool,
    pub reason: Option<String>,
    pub params: BTreeMap<String, Value>,
}

impl BoundReport {
    fn new(name: &str, n: usize, m: usize) -> Self {
        let mut params = BTreeMap::new();
        params.insert("n".into(), n.into());
        params.insert("m".into(), m.into());
        BoundReport {
            name: name.into(),
            value: None,
            applicable: false,
            reason: None,
            params,
        }
    }

    fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    fn outcome(mut self, r: Result<BoundValue>) -> Self {
        match r {
            Ok(v) => {
                self.value = Some(v);
                self.applicable = true;
            }
            Err(e) => {
                self.reason = Some(match e {
                    Error::NotApplicable(msg) | Error::InvalidParameter(msg) => msg,
                    other => other.to_string(),
                });
            }
        }
        self
    }

    fn integer(self, r: Result<i64>) -> Self {
        self.outcome(r.map(BoundValue::Integer))
    }

    fn real(self, r: Result<f64>) -> Self {
        self.outcome(r.map(BoundValue::Real))
    }

    pub fn k(&self) -> Option<u64> {
        self.params.get("k").and_then(Value::as_u64)
    }

    pub fn alpha(&self) -> Option<f64> {
        self.params.get("alpha").and_then(Value::as_f64)
    }
}

/// Truncated face profile `(s_3, ..., s_{k-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCounts {
    pub k: usize,
    pub s: Vec<u64>,
}

impl FaceCounts {
    pub fn new(k: usize, s: Vec<u64>) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!(
                "k must be at least 3, got {k}"
            )));
        }
        if s.len() != k - 3 {
            return Err(Error::InvalidParameter(format!(
                "k = {k} needs s_3..s_{} ({} values), got {}",
                k - 1,
                k - 3,
                s.len()
            )));
        }
        Ok(FaceCounts { k, s })
    }

    pub fn trivial() -> Self {
        FaceCounts {
            k: 3,
            s: Vec::new(),
        }
    }

    /// Pairs `(ℓ, s_ℓ)` for `3 <= ℓ < k`.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.s
            .iter()
            .enumerate()
            .map(|(i, &c)| ((i + 3) as f64, c as f64))
    }

    /// `Σ (ℓ - 2) s_ℓ`.
    pub fn euler_sum(&self) -> u64 {
        self.s
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1) * c)
            .sum()
    }

    /// Whether the counts fit a graph on `n` vertices: `Σ (ℓ - 2) s_ℓ <= 2n - 4`.
    pub fn fits(&self, n: usize) -> bool {
        self.euler_sum() <= (2 * n).saturating_sub(4) as u64
    }
}

fn require_n3(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("needs n >= 3, got {n}")));
    }
    Ok(())
}

/// Previous lower bound: `⌈m / ((3n-5 + √((3n-5)² - 4m)) / 2)⌉`.
pub fn unc_lower_old(n: usize, m: usize) -> Result<i64> {
    require_n3(n)?;
    if m == 0 {
        return Ok(0);
    }
    let a = 3.0 * n as f64 - 5.0;
    let disc = a * a - 4.0 * m as f64;
    if disc < 0.0 {
        return Err(Error::NotApplicable(format!(
            "(3n-5)² - 4m = {disc} is negative"
        )));
    }
    Ok(ceil_guarded(m as f64 / ((a + disc.sqrt()) / 2.0)))
}

/// `3n - 6 - √(2m) + √(6(n-2))`, an upper bound on `h(G)` for connected `G`.
pub fn h_upper(n: usize, m: usize) -> Result<f64> {
    require_n3(n)?;
    let n = n as f64;
    Ok(3.0 * n - 6.0 - (2.0 * m as f64).sqrt() + (6.0 * (n - 2.0)).sqrt())
}

/// `⌈m / h_upper(n, m)⌉`.
pub fn unc_lower_new(n: usize, m: usize) -> Result<i64> {
    let denom = h_upper(n, m)?;
    if denom <= 0.0 {
        return Err(Error::NotApplicable(format!(
            "denominator {denom} is not positive"
        )));
    }
    Ok(ceil_guarded(m as f64 / denom))
}

/// `2n - 4 - √(m/2) + √(5(n-2)/2)` for triangle-free connected graphs.
pub fn h_upper_triangle_free(n: usize, m: usize) -> Result<f64> {
    require_n3(n)?;
    let n = n as f64;
    Ok(2.0 * n - 4.0 - (m as f64 / 2.0).sqrt() + (2.5 * (n - 2.0)).sqrt())
}

pub fn unc_lower_triangle_free(n: usize, m: usize) -> Result<i64> {
    let denom = h_upper_triangle_free(n, m)?;
    if denom <= 0.0 {
        return Err(Error::NotApplicable(format!(
            "denominator {denom} is not positive"
        )));
    }
    Ok(ceil_guarded(m as f64 / denom))
}

/// `⌈m / h⌉`: each drawing leaves at most `h` edges uncrossed.
pub fn unc_from_h(m: usize, h: f64) -> Result<i64> {
    if h.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::InvalidParameter(format!(
            "h must be positive, got {h}"
        )));
    }
    Ok(ceil_guarded(m as f64 / h))
}

/// Euler bound for faces of length at least `k`:
/// `k/(k-2) n - 2k/(k-2) + Σ (k-ℓ)/(k-2) s_ℓ`.
pub fn simple_bound(n: usize, fc: &FaceCounts) -> f64 {
    let k = fc.k as f64;
    let tail: f64 = fc.iter().map(|(l, s)| (k - l) / (k - 2.0) * s).sum();
    k / (k - 2.0) * n as f64 - 2.0 * k / (k - 2.0) + tail
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexBound {
    pub delta: f64,
    /// `b_k^-`; absent when `delta < 0`.
    pub b_minus: Option<f64>,
    /// `b_k^+`; absent when `delta < 0`.
    pub b_plus: Option<f64>,
    /// False when `delta < 0`, i.e. the face counts are impossible for `(n, m)`.
    pub feasible: bool,
}

/// Roots of the quadratic constraint on the number of uncrossed edges.
///
/// `Δ_k = (3n - 7 - 3/2 Σ(ℓ-2)s_ℓ)² - 4(m - 3n + 6 - Σ (ℓ-2)(ℓ-3)/2 s_ℓ)` and
/// `b_k^± = (3n - 5 + Σ (3 - ℓ/2) s_ℓ ± √Δ_k) / 2`.
pub fn complex_bound(n: usize, m: usize, fc: &FaceCounts) -> Result<ComplexBound> {
    if n < 3 || m + 1 < n {
        return Err(Error::InvalidParameter(format!(
            "needs m >= n - 1 >= 2, got n = {n}, m = {m}"
        )));
    }
    let (nf, mf) = (n as f64, m as f64);
    let linear: f64 = fc.iter().map(|(l, s)| (l - 2.0) * s).sum();
    let quad: f64 = fc
        .iter()
        .map(|(l, s)| (l - 2.0) * (l - 3.0) / 2.0 * s)
        .sum();
    let shift: f64 = fc.iter().map(|(l, s)| (3.0 - l / 2.0) * s).sum();

    let a = 3.0 * nf - 7.0 - 1.5 * linear;
    let delta = a * a - 4.0 * (mf - 3.0 * nf + 6.0 - quad);
    if delta < 0.0 {
        return Ok(ComplexBound {
            delta,
            b_minus: None,
            b_plus: None,
            feasible: false,
        });
    }
    let root = delta.sqrt();
    let centre = 3.0 * nf - 5.0 + shift;
    Ok(ComplexBound {
        delta,
        b_minus: Some((centre - root) / 2.0),
        b_plus: Some((centre + root) / 2.0),
        feasible: true,
    })
}

/// `3n - 7 + 3/k - (k-3) √(2(m - (n-2)(k-1)) / (k(k-3)) + 1/k²)`, valid when
/// `m > (k-1)(n-2)`; `k = 3` gives `3n - 6`.
pub fn combined_bound(n: usize, m: usize, k: usize) -> Result<f64> {
    require_n3(n)?;
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let nf = n as f64;
    if k == 3 {
        return Ok(3.0 * nf - 6.0);
    }
    if m <= (k - 1) * (n - 2) {
        return Err(Error::NotApplicable(format!(
            "needs m > (k-1)(n-2) = {}, got m = {m}",
            (k - 1) * (n - 2)
        )));
    }
    let kf = k as f64;
    let excess = (m - (k - 1) * (n - 2)) as f64;
    let radicand = 2.0 * excess / (kf * (kf - 3.0)) + 1.0 / (kf * kf);
    Ok(3.0 * nf - 7.0 + 3.0 / kf - (kf - 3.0) * radicand.sqrt())
}

/// Minimum of [`combined_bound`] over every admissible `k`.
pub fn best_combined_bound(n: usize, m: usize) -> BoundReport {
    let report = BoundReport::new("best_combined", n, m);
    if n < 3 || m + 1 < n {
        return report.real(Err(Error::NotApplicable(format!(
            "needs n >= 3 and m >= n - 1, got n = {n}, m = {m}"
        ))));
    }
    let k_max = 2 + m / (n - 2);
    let (k, value) = (3..=k_max)
        .filter_map(|k| combined_bound(n, m, k).ok().map(|v| (k, v)))
        .fold(
            (3, f64::INFINITY),
            |best, cur| if cur.1 < best.1 { cur } else { best },
        );
    report.param("k", k).real(Ok(value))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaBound {
    /// `3n - 6 - (1 - α) √(2m)`.
    pub value: f64,
    /// `min(value, 3n - 6)`: for `α >= 1` the trivial bound is at least as good.
    pub clamped: f64,
    /// `⌈3/α⌉`, the face-length threshold the bound is derived from.
    pub k: u64,
}

pub fn alpha_bound(n: usize, m: usize, alpha: f64) -> Result<AlphaBound> {
    require_n3(n)?;
    if alpha.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    let planar_max = 3.0 * n as f64 - 6.0;
    // m α² >= 3n - 6, with a relative slack for α computed as √((3n-6)/m).
    if (m as f64) * alpha * alpha < planar_max * (1.0 - 1e-12) {
        return Err(Error::NotApplicable(format!(
            "needs m >= (3n-6)/α² = {}, got m = {m}",
            planar_max / (alpha * alpha)
        )));
    }
    let value = planar_max - (1.0 - alpha) * (2.0 * m as f64).sqrt();
    Ok(AlphaBound {
        value,
        clamped: value.min(planar_max),
        k: ceil_guarded(3.0 / alpha).max(3) as u64,
    })
}

/// `h(K_n) = 2n - 2` for `n >= 4`.
pub fn exact_h_complete(n: usize) -> Result<i64> {
    if n < 4 {
        return Err(Error::NotApplicable(format!(
            "h(K_n) = 2n-2 is stated for n >= 4, got {n}"
        )));
    }
    Ok(2 * n as i64 - 2)
}

/// `h(K_{a,b})` for `3 <= a <= b`.
///
/// Smaller `a` is refused: the piecewise formula undercounts planar cases
/// such as `K_{2,5}`.
pub fn exact_h_complete_bipartite(a: usize, b: usize) -> Result<i64> {
    if a > b {
        return Err(Error::InvalidParameter(format!(
            "needs a <= b, got a = {a}, b = {b}"
        )));
    }
    if a < 3 {
        return Err(Error::NotApplicable(format!(
            "formula gated at a >= 3 (it undercounts planar K_{{a,b}}), got a = {a}"
        )));
    }
    let (a, b) = (a as i64, b as i64);
    Ok(if a == b {
        2 * a + b - 2
    } else if b < 2 * a {
        2 * a + b - 1
    } else {
        2 * a + b
    })
}

/// `unc(K_n) = ⌈(n-1)/4⌉` for `n > 7`.
pub fn exact_unc_complete(n: usize) -> Result<i64> {
    if n <= 7 {
        return Err(Error::NotApplicable(format!(
            "unc(K_n) formula holds for n > 7, got {n}"
        )));
    }
    Ok(((n - 1) as i64 + 3) / 4)
}

/// `(n, m)` of a graph that passes the connectivity gate.
pub fn gated(g: &Graph) -> Result<(usize, usize)> {
    if !g.is_connected() {
        return Err(Error::UnsupportedInput(
            "bounds assume a connected graph".into(),
        ));
    }
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!(
            "bounds need n >= 3, got {}",
            g.n()
        )));
    }
    Ok((g.n(), g.m()))
}

/// As [`gated`], additionally requiring the graph to be triangle-free.
pub fn gated_triangle_free(g: &Graph) -> Result<(usize, usize)> {
    let nm = gated(g)?;
    if !g.is_triangle_free() {
        return Err(Error::NotApplicable("graph contains a triangle".into()));
    }
    Ok(nm)
}

/// Every bound that applies to `g`, in a fixed order.
///
/// Rows that do not apply are kept with `applicable = false` and a reason.
/// Exact-value rows are only emitted for complete and complete bipartite graphs.
pub fn report_all(g: &Graph) -> Result<Vec<BoundReport>> {
    let (n, m) = gated(g)?;
    let stats = analyze(g);
    let mut rows = vec![
        BoundReport::new("unc_lower_old", n, m).integer(unc_lower_old(n, m)),
        BoundReport::new("unc_lower_new", n, m).integer(unc_lower_new(n, m)),
        BoundReport::new("h_upper", n, m).real(h_upper(n, m)),
        best_combined_bound(n, m),
    ];
    if m > 0 {
        let alpha = ((3 * n - 6) as f64 / m as f64).sqrt();
        let ab = alpha_bound(n, m, alpha);
        let mut row = BoundReport::new("alpha_bound", n, m).param("alpha", alpha);
        if let Ok(b) = &ab {
            row = row.param("k", b.k);
        }
        rows.push(row.real(ab.map(|b| b.clamped)));
    }
    let tf = if stats.triangle_free {
        Ok(())
    } else {
        Err(Error::NotApplicable("graph contains a triangle".into()))
    };
    rows.push(
        BoundReport::new("unc_lower_triangle_free", n, m)
            .integer(tf.clone().and_then(|_| unc_lower_triangle_free(n, m))),
    );
    rows.push(
        BoundReport::new("h_upper_triangle_free", n, m)
            .real(tf.and_then(|_| h_upper_triangle_free(n, m))),
    );
    if g.is_complete() {
        rows.push(BoundReport::new("exact_h_complete", n, m).integer(exact_h_complete(n)));
        rows.push(BoundReport::new("exact_unc_complete", n, m).integer(exact_unc_complete(n)));
    }
    if let Some((a, b)) = g.complete_bipartite_parts() {
        rows.push(
            BoundReport::new("exact_h_complete_bipartite", n, m)
                .param("a", a)
                .param("b", b)
                .integer(exact_h_complete_bipartite(a, b)),
        );
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_bipartite, make_path};

    const TOL: f64 = 1e-9;

    #[test]
    fn ceiling_guard() {
        assert_eq!(ceil_guarded(48.0 + 5e-10), 48);
        assert_eq!(ceil_guarded(48.0 - 5e-10), 48);
        assert_eq!(ceil_guarded(48.000001), 49);
        assert_eq!(ceil_guarded(1.61), 2);
    }

    #[test]
    fn old_lower_bound() {
        assert_eq!(unc_lower_old(8, 28).unwrap(), 2);
        assert_eq!(unc_lower_old(12, 0).unwrap(), 0);
        assert!(unc_lower_old(100, 4950).unwrap() <= 25);
        assert!(unc_lower_old(2, 1).is_err());
    }

    #[test]
    fn new_lower_bound() {
        assert_eq!(unc_lower_new(8, 28).unwrap(), 2);
        assert_eq!(unc_lower_new(10, 9).unwrap(), 1);
        let v = unc_lower_new(10_000, 49_995_000).unwrap() as f64;
        let exact = exact_unc_complete(10_000).unwrap() as f64;
        assert!((0.98..=1.0).contains(&(v / exact)), "ratio {}", v / exact);
    }

    #[test]
    fn h_upper_values() {
        for n in 3..200 {
            assert!((h_upper(n, 3 * n - 6).unwrap() - (3 * n - 6) as f64).abs() <= TOL);
        }
        let v = h_upper(8, 28).unwrap();
        assert!((v - 16.516_685_6).abs() < 1e-6, "{v}");
        assert!(v >= exact_h_complete(8).unwrap() as f64);
        assert!((h_upper(20, 120).unwrap() - 48.900_371_5).abs() < 1e-6);
    }

    #[test]
    fn triangle_free_variants() {
        let v = h_upper_triangle_free(6, 9).unwrap();
        assert!((v - 9.040_957_3).abs() < 1e-6, "{v}");
        assert!(v >= exact_h_complete_bipartite(3, 3).unwrap() as f64);
        assert_eq!(unc_lower_triangle_free(10, 9).unwrap(), 1);
        assert!(gated_triangle_free(&make_complete(3).unwrap()).is_err());
        assert!(gated_triangle_free(&make_complete_bipartite(3, 3).unwrap()).is_ok());
    }

    #[test]
    fn unc_from_h_values() {
        assert_eq!(unc_from_h(10, 8.0).unwrap(), 2);
        assert_eq!(unc_from_h(17, 17.0).unwrap(), 1);
        assert_eq!(unc_from_h(28, 14.0).unwrap(), 2);
        assert!(unc_from_h(3, 0.0).is_err());
        assert!(unc_from_h(3, -1.0).is_err());
    }

    #[test]
    fn simple_bound_values() {
        for n in 3..30 {
            assert!((simple_bound(n, &FaceCounts::trivial()) - (3 * n - 6) as f64).abs() <= TOL);
        }
        let octa = FaceCounts::new(4, vec![8]).unwrap();
        assert!((simple_bound(6, &octa) - 12.0).abs() <= TOL);
        let none = FaceCounts::new(4, vec![0]).unwrap();
        assert!((simple_bound(6, &none) - 8.0).abs() <= TOL);
        assert!(FaceCounts::new(5, vec![1]).is_err());
        assert!(FaceCounts::new(2, vec![]).is_err());
    }

    #[test]
    fn complex_bound_values() {
        let c = complex_bound(8, 28, &FaceCounts::trivial()).unwrap();
        assert!((c.delta - 249.0).abs() <= TOL);
        assert!((c.b_plus.unwrap() - (19.0 + 249f64.sqrt()) / 2.0).abs() <= TOL);
        assert!((c.b_plus.unwrap() - 17.39).abs() < 0.01);

        for n in 3..40 {
            let c = complex_bound(n, 3 * n - 6, &FaceCounts::trivial()).unwrap();
            let a = (3 * n - 7) as f64;
            assert!((c.delta - a * a).abs() <= TOL);
            assert!((c.b_minus.unwrap() - 1.0).abs() <= TOL);
            assert!((c.b_plus.unwrap() - (3 * n - 6) as f64).abs() <= TOL);
        }

        let c = complex_bound(20, 120, &FaceCounts::new(4, vec![36]).unwrap()).unwrap();
        assert!((c.delta + 263.0).abs() <= TOL);
        assert!(!c.feasible && c.b_plus.is_none());

        assert!(complex_bound(5, 3, &FaceCounts::trivial()).is_err());
    }

    #[test]
    fn combined_bound_values() {
        assert_eq!(combined_bound(20, 120, 3).unwrap(), 54.0);
        assert!((combined_bound(20, 120, 4).unwrap() - 48.0).abs() <= TOL);
        assert!((combined_bound(20, 120, 5).unwrap() - 47.390_3).abs() < 1e-4);
        assert!(matches!(
            combined_bound(20, 120, 8),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn best_combined_scan() {
        let r = best_combined_bound(20, 120);
        let v = r.value.unwrap().as_f64();
        assert_eq!(r.k(), Some(5));
        assert!((v - 47.39).abs() < 0.01);
        assert!(v <= h_upper(20, 120).unwrap());

        let tree = best_combined_bound(12, 11);
        assert_eq!(
            (tree.k(), tree.value),
            (Some(3), Some(BoundValue::Real(30.0)))
        );

        let k8 = best_combined_bound(8, 28).value.unwrap().as_f64();
        assert!((14.0..=16.52).contains(&k8), "{k8}");
    }

    #[test]
    fn alpha_bound_values() {
        let wide = alpha_bound(20, 120, 1.5).unwrap();
        assert!(wide.value >= 54.0);
        assert_eq!(wide.clamped, 54.0);

        let alpha = 0.45f64.sqrt();
        let b = alpha_bound(20, 120, alpha).unwrap();
        assert!((b.value - h_upper(20, 120).unwrap()).abs() <= TOL);
        assert_eq!(b.k, 5);

        assert!(matches!(
            alpha_bound(20, 120, 0.5),
            Err(Error::NotApplicable(_))
        ));
        assert!(alpha_bound(20, 120, 0.0).is_err());
    }

    #[test]
    fn exact_formulas() {
        assert_eq!(exact_h_complete(5).unwrap(), 8);
        assert!(exact_h_complete(3).is_err());
        assert_eq!(exact_h_complete_bipartite(3, 3).unwrap(), 7);
        assert_eq!(exact_h_complete_bipartite(3, 4).unwrap(), 9);
        assert_eq!(exact_h_complete_bipartite(3, 6).unwrap(), 12);
        assert!(matches!(
            exact_h_complete_bipartite(2, 5),
            Err(Error::NotApplicable(_))
        ));
        assert_eq!(exact_unc_complete(9).unwrap(), 2);
        assert!(exact_unc_complete(7).is_err());
    }

    #[test]
    fn report_rows() {
        let rows = report_all(&make_complete(8).unwrap()).unwrap();
        let get = |name: &str| rows.iter().find(|r| r.name == name).unwrap();
        assert_eq!(get("unc_lower_old").value, Some(BoundValue::Integer(2)));
        assert_eq!(get("unc_lower_new").value, Some(BoundValue::Integer(2)));
        assert_eq!(get("exact_h_complete").value, Some(BoundValue::Integer(14)));
        assert!(!get("h_upper_triangle_free").applicable);

        let p5 = report_all(&make_path(5).unwrap()).unwrap();
        for r in p5.iter().filter(|r| r.name.starts_with("unc_lower")) {
            assert_eq!(r.value, Some(BoundValue::Integer(1)), "{}", r.name);
        }

        let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            report_all(&disconnected),
            Err(Error::UnsupportedInput(_))
        ));
    }

    #[test]
    fn report_json_shape() {
        let r = best_combined_bound(20, 120);
        let json = serde_json::to_value(&r).unwrap();
        for key in ["name", "value", "applicable", "reason", "params"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json["params"]["k"], 5);
    }
}
