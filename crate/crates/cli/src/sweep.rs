//! Parameter sweeps over `(ε, n)` grids. Cells are evaluated in parallel and
//! reported in `(ε, n)` order.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use uncrossed::bounds::{
    best_combined_bound, exact_unc_complete, h_upper, unc_lower_new, unc_lower_old, BoundValue,
};
use uncrossed::construction::{check_tightness, construct, FLOAT_TOL};
use uncrossed::{Error, Rational, Result};

use crate::format::{opt_sig10, sig10};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TightnessRow {
    pub epsilon: String,
    pub n: usize,
    pub x: usize,
    pub m: usize,
    pub m_prime: usize,
    pub lower: f64,
    pub upper: f64,
    /// `upper - lower`, asserted to be at most `√(6(n-2)) - 3`.
    pub gap: f64,
    pub gap_limit: f64,
    /// `upper - m'`, reported only.
    pub gap_witness: f64,
    pub density: String,
    pub density_ceiling: String,
}

impl TightnessRow {
    pub const HEADER: [&'static str; 12] = [
        "epsilon",
        "n",
        "x",
        "m",
        "m_prime",
        "lower",
        "upper",
        "gap",
        "gap_limit",
        "gap_witness",
        "density",
        "density_ceiling",
    ];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.epsilon.clone(),
            self.n.to_string(),
            self.x.to_string(),
            self.m.to_string(),
            self.m_prime.to_string(),
            sig10(self.lower),
            sig10(self.upper),
            sig10(self.gap),
            sig10(self.gap_limit),
            sig10(self.gap_witness),
            self.density.clone(),
            self.density_ceiling.clone(),
        ]
    }
}

/// Builds `G_{ε,n}`, checks both tightness properties and the gap claim.
pub fn tightness_row(epsilon: Rational, n: usize) -> Result<TightnessRow> {
    let rec = construct(epsilon, n)?;
    let t = check_tightness(&rec)?;
    let gap = t.upper - t.lower;
    let gap_limit = (6.0 * (n as f64 - 2.0)).sqrt() - 3.0;
    if gap > gap_limit + FLOAT_TOL {
        return Err(Error::ConstructionIntegrity(format!(
            "gap {gap} exceeds √(6(n-2)) - 3 = {gap_limit} at ε = {epsilon}, n = {n}"
        )));
    }
    Ok(TightnessRow {
        epsilon: epsilon.to_string(),
        n,
        x: rec.x,
        m: rec.stats.m,
        m_prime: rec.stats.m_prime,
        lower: t.lower,
        upper: t.upper,
        gap,
        gap_limit,
        gap_witness: t.upper - rec.stats.m_prime as f64,
        density: t.density.to_string(),
        density_ceiling: t.density_ceiling.to_string(),
    })
}

fn grid<E: Ord + Copy + Sync>(eps: &[E], ns: &[usize]) -> Vec<(E, usize)> {
    let mut eps = eps.to_vec();
    eps.sort();
    eps.dedup();
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    eps.iter()
        .flat_map(|&e| ns.iter().map(move |&n| (e, n)))
        .collect()
}

/// One row per `(ε, n)`; the first failing cell in grid order is returned as the error.
pub fn verify_tightness(epsilons: &[Rational], ns: &[usize]) -> Result<Vec<TightnessRow>> {
    grid(epsilons, ns)
        .into_par_iter()
        .map(|(e, n)| tightness_row(e, n))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Edge count of a compare-bounds cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Density {
    /// `m = n - 1`.
    Tree,
    /// `m = ⌈εn²⌉`, clamped to `[n-1, n(n-1)/2]`.
    Ratio(Rational),
    /// `m = n(n-1)/2`.
    Complete,
}

impl Density {
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "tree" => Ok(Density::Tree),
            "complete" => Ok(Density::Complete),
            other => crate::format::parse_rational(other).map(Density::Ratio),
        }
    }

    pub fn edges(self, n: usize) -> usize {
        let max = n * (n - 1) / 2;
        match self {
            Density::Tree => n - 1,
            Density::Complete => max,
            Density::Ratio(e) => {
                let nn = n as i128;
                let target = Ratio::new(*e.numer() as i128, *e.denom() as i128) * (nn * nn);
                (target.ceil().to_integer().max(0) as usize).clamp(n - 1, max)
            }
        }
    }
}

impl std::fmt::Display for Density {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Density::Tree => f.write_str("tree"),
            Density::Complete => f.write_str("complete"),
            Density::Ratio(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompareRow {
    pub n: usize,
    pub epsilon: String,
    pub m: usize,
    pub unc_lower_old: i64,
    pub unc_lower_new: i64,
    pub best_combined: Option<f64>,
    pub best_combined_k: Option<u64>,
    pub h_upper: f64,
    pub exact_unc_complete: Option<i64>,
    /// `unc_lower_new / (εn / (3 - √(2ε)))` with `ε = m/n²`.
    pub asymptotic_ratio: f64,
    /// `h_upper / ((3 - √(2ε)) n)` with `ε = m/n²`.
    pub denominator_ratio: f64,
}

impl CompareRow {
    pub const HEADER: [&'static str; 11] = [
        "n",
        "epsilon",
        "m",
        "unc_lower_old",
        "unc_lower_new",
        "best_combined",
        "best_combined_k",
        "h_upper",
        "exact_unc_complete",
        "asymptotic_ratio",
        "denominator_ratio",
    ];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.epsilon.clone(),
            self.m.to_string(),
            self.unc_lower_old.to_string(),
            self.unc_lower_new.to_string(),
            opt_sig10(self.best_combined),
            self.best_combined_k
                .map(|k| k.to_string())
                .unwrap_or_default(),
            sig10(self.h_upper),
            self.exact_unc_complete
                .map(|v| v.to_string())
                .unwrap_or_default(),
            sig10(self.asymptotic_ratio),
            sig10(self.denominator_ratio),
        ]
    }
}

pub fn compare_row(n: usize, density: Density) -> Result<CompareRow> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "compare-bounds needs n >= 3, got {n}"
        )));
    }
    let m = density.edges(n);
    let best = best_combined_bound(n, m);
    let upper = h_upper(n, m)?;
    let eps = m as f64 / (n as f64 * n as f64);
    let scale = 3.0 - (2.0 * eps).sqrt();
    let new = unc_lower_new(n, m)?;
    Ok(CompareRow {
        n,
        epsilon: density.to_string(),
        m,
        unc_lower_old: unc_lower_old(n, m)?,
        unc_lower_new: new,
        best_combined: match best.value {
            Some(BoundValue::Real(v)) => Some(v),
            _ => None,
        },
        best_combined_k: best.k(),
        h_upper: upper,
        exact_unc_complete: (m == n * (n - 1) / 2 && n > 7)
            .then(|| exact_unc_complete(n))
            .transpose()?,
        asymptotic_ratio: new as f64 / (eps * n as f64 / scale),
        denominator_ratio: upper / (scale * n as f64),
    })
}

pub fn compare_bounds(ns: &[usize], densities: &[Density]) -> Result<Vec<CompareRow>> {
    grid(densities, ns)
        .into_par_iter()
        .map(|(d, n)| compare_row(n, d))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}
