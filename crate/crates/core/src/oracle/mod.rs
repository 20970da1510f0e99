//! Exact `h(G)` and `unc(G)` for small graphs.
//!
//! The search rests on the co-facial characterization: an edge set `H` can be
//! the uncrossed part of some drawing of a connected `G` iff `(V(G), H)` is
//! connected, spanning, and has a plane embedding in which the endpoints of
//! every remaining edge share a face. Such an embedding extends to a drawing
//! by routing each remaining edge through its face, where it meets no edge
//! of `H` (remaining edges may cross each other). Conversely, the uncrossed
//! part of a drawing is plane with all other edges co-facial, and a maximum
//! one can be taken connected and spanning.
//!
//! Feasibility is closed under removing edges as long as the subgraph stays
//! connected: deleting an edge merges two faces, and its endpoints lie on the
//! merged face.

mod certificate;
mod sandwich;
mod search;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use itertools::Itertools;

pub use certificate::{verify_certificate, SubdrawingCertificate, Violation};
pub use sandwich::{sandwich, SandwichRow};

use crate::embedding::{rotation_count, trace_faces, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use search::EmbeddingSearch;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_n: usize,
    /// Cap on `Π (deg - 1)!` of a single candidate subgraph.
    pub max_rotation_budget: u128,
    pub time_budget: Option<Duration>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_n: 8,
            max_rotation_budget: 10_000_000,
            time_budget: None,
        }
    }
}

impl SearchLimits {
    /// Defaults for [`exact_unc`], which enumerates every feasible subset.
    pub fn for_unc() -> Self {
        SearchLimits {
            max_n: 6,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_rotation_budget == 0 {
            return Err(Error::InvalidParameter(
                "search limits must be positive".into(),
            ));
        }
        if self.time_budget == Some(Duration::ZERO) {
            return Err(Error::InvalidParameter(
                "time budget must be positive".into(),
            ));
        }
        Ok(())
    }
}

type Mask = u64;

struct Oracle<'g> {
    g: &'g Graph,
    limits: SearchLimits,
    deadline: Option<Instant>,
}

impl<'g> Oracle<'g> {
    fn new(g: &'g Graph, limits: SearchLimits) -> Result<Self> {
        limits.validate()?;
        if !g.is_connected() {
            return Err(Error::UnsupportedInput(
                "the oracle needs a connected graph".into(),
            ));
        }
        if g.m() > Mask::BITS as usize {
            return Err(Error::SearchBudget(format!(
                "{} edges exceed the {}-edge subset representation",
                g.m(),
                Mask::BITS
            )));
        }
        Ok(Oracle {
            g,
            limits,
            deadline: limits.time_budget.map(|d| Instant::now() + d),
        })
    }

    fn check_n(&self) -> Result<()> {
        if self.g.n() > self.limits.max_n {
            return Err(Error::SearchBudget(format!(
                "n = {} exceeds max_n = {}",
                self.g.n(),
                self.limits.max_n
            )));
        }
        Ok(())
    }

    fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => {
                Err(Error::SearchBudget("time budget exhausted".into()))
            }
            _ => Ok(()),
        }
    }

    fn full(&self) -> Mask {
        if self.g.m() == 64 {
            Mask::MAX
        } else {
            (1 << self.g.m()) - 1
        }
    }

    fn edges_of(&self, mask: Mask) -> Vec<Edge> {
        (0..self.g.m())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.g.edges()[i])
            .collect()
    }

    fn max_planar(&self) -> usize {
        if self.g.n() >= 3 {
            3 * self.g.n() - 6
        } else {
            self.g.m()
        }
    }

    fn connected_spanning(&self, mask: Mask) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = n;
        for (i, &(u, v)) in self.g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
        components == 1
    }

    fn feasible(&self, mask: Mask) -> Result<Option<SubdrawingCertificate>> {
        if !self.connected_spanning(mask) || (mask.count_ones() as usize) > self.max_planar() {
            return Ok(None);
        }
        let h = self.edges_of(mask);
        let sub = Graph::new(self.g.n(), h.iter().copied())?;
        let count = rotation_count(&sub);
        if count > self.limits.max_rotation_budget {
            return Err(Error::SearchBudget(format!(
                "candidate has {count} rotation systems (product of (deg-1)!), budget is {}",
                self.limits.max_rotation_budget
            )));
        }
        self.check_time()?;
        let rest = self.edges_of(self.full() & !mask);
        let found = EmbeddingSearch::new(self.g.n(), &h, &rest, self.deadline).first()?;
        Ok(found.map(|order| {
            let rotation = RotationSystem::new(&sub, order).expect("search yields valid rotations");
            certificate(self.g, h, rotation)
        }))
    }

    /// Connected spanning subsets of the given size, lexicographic in edge index.
    fn subsets(&self, size: usize) -> impl Iterator<Item = Mask> + '_ {
        (0..self.g.m())
            .combinations(size)
            .map(|c| c.into_iter().fold(0, |acc, i| acc | 1 << i))
            .filter(move |&mask| self.connected_spanning(mask))
    }
}

fn certificate(g: &Graph, uncrossed: Vec<Edge>, rotation: RotationSystem) -> SubdrawingCertificate {
    let fs = trace_faces(&rotation);
    let assignment: BTreeMap<Edge, usize> = g
        .edges()
        .iter()
        .filter(|e| uncrossed.binary_search(e).is_err())
        .map(|&(u, v)| {
            let face = fs
                .common_face(u, v)
                .expect("embedding keeps every edge co-facial");
            ((u, v), face)
        })
        .collect();
    SubdrawingCertificate {
        graph: g.clone(),
        uncrossed,
        rotation,
        assignment,
    }
}

/// Certificate for `uncrossed` if it can be the uncrossed part of a drawing of `g`.
pub fn feasible(
    g: &Graph,
    uncrossed: &[Edge],
    limits: SearchLimits,
) -> Result<Option<SubdrawingCertificate>> {
    let oracle = Oracle::new(g, limits)?;
    let mut mask: Mask = 0;
    for &(u, v) in uncrossed {
        let i = g
            .edge_index(u, v)
            .ok_or_else(|| Error::InvalidParameter(format!("edge {u}-{v} is not in the graph")))?;
        mask |= 1 << i;
    }
    oracle.feasible(mask)
}

/// `h(g)` with a witness of that size.
///
/// Sizes are tried from `min(m, 3n - 6)` downwards and, within a size, edge
/// subsets in lexicographic order; the first feasible subset is returned.
pub fn exact_h(g: &Graph, limits: SearchLimits) -> Result<(usize, SubdrawingCertificate)> {
    let oracle = Oracle::new(g, limits)?;
    oracle.check_n()?;
    if g.n() < 2 {
        return Err(Error::InvalidParameter("exact h needs n >= 2".into()));
    }
    for size in (g.n() - 1..=g.m().min(oracle.max_planar())).rev() {
        for mask in oracle.subsets(size) {
            if let Some(cert) = oracle.feasible(mask)? {
                return Ok((size, cert));
            }
        }
    }
    unreachable!("a spanning tree is always feasible")
}

/// An inclusion-maximal feasible edge set with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSet {
    pub edges: Vec<Edge>,
    pub certificate: SubdrawingCertificate,
    mask: Mask,
}

/// Every inclusion-maximal feasible edge set, largest first.
pub fn maximal_feasible_sets(g: &Graph, limits: SearchLimits) -> Result<Vec<MaximalSet>> {
    let oracle = Oracle::new(g, limits)?;
    oracle.check_n()?;
    if g.n() < 2 {
        return Err(Error::InvalidParameter("needs n >= 2".into()));
    }
    let mut family: Vec<MaximalSet> = Vec::new();
    for size in (g.n() - 1..=g.m().min(oracle.max_planar())).rev() {
        for mask in oracle.subsets(size) {
            // Anything inside a feasible set is feasible and not maximal.
            if family.iter().any(|s| mask & !s.mask == 0) {
                continue;
            }
            if let Some(cert) = oracle.feasible(mask)? {
                family.push(MaximalSet {
                    edges: cert.uncrossed.clone(),
                    certificate: cert,
                    mask,
                });
            }
        }
    }
    Ok(family)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncResult {
    pub unc: usize,
    pub h: usize,
    pub cover: Vec<SubdrawingCertificate>,
}

/// `unc(g)`: the fewest maximal feasible sets whose union is `E(g)`.
pub fn exact_unc(g: &Graph, limits: SearchLimits) -> Result<UncResult> {
    let oracle = Oracle::new(g, limits)?;
    let family = maximal_feasible_sets(g, limits)?;
    let h = family
        .iter()
        .map(|s| s.edges.len())
        .max()
        .expect("family is non-empty");
    let masks: Vec<Mask> = family.iter().map(|s| s.mask).collect();
    let full = oracle.full();
    let lower = g.m().div_ceil(h).max(1);
    for k in lower..=masks.len() {
        let mut chosen = Vec::new();
        if cover_search(&masks, full, 0, k, h, &mut chosen, &oracle)? {
            return Ok(UncResult {
                unc: k,
                h,
                cover: chosen
                    .into_iter()
                    .map(|i| family[i].certificate.clone())
                    .collect(),
            });
        }
    }
    unreachable!("the whole family covers every edge")
}

fn cover_search(
    sets: &[Mask],
    full: Mask,
    covered: Mask,
    left: usize,
    max_size: usize,
    chosen: &mut Vec<usize>,
    oracle: &Oracle<'_>,
) -> Result<bool> {
    if covered == full {
        return Ok(true);
    }
    let uncovered = (full & !covered).count_ones() as usize;
    if left == 0 || uncovered > left * max_size {
        return Ok(false);
    }
    oracle.check_time()?;
    // Branch on the uncovered edge with the fewest covering sets.
    let edge = (0..64)
        .filter(|&i| (full & !covered) >> i & 1 == 1)
        .min_by_key(|&i| sets.iter().filter(|&&s| s >> i & 1 == 1).count())
        .expect("some edge is uncovered");
    for (idx, &s) in sets.iter().enumerate() {
        if s >> edge & 1 == 0 {
            continue;
        }
        chosen.push(idx);
        if cover_search(sets, full, covered | s, left - 1, max_size, chosen, oracle)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{face_profile, genus};
    use crate::graph::{make_complete, make_complete_bipartite, make_cube, make_path, make_wheel};

    #[test]
    fn feasible_examples() {
        let k4 = make_complete(4).unwrap();
        let c = feasible(&k4, k4.edges(), SearchLimits::default())
            .unwrap()
            .unwrap();
        assert!(c.assignment.is_empty());
        let p = face_profile(&c.faces()).unwrap();
        assert_eq!(p.count(3), 4);

        let k5 = make_complete(5).unwrap();
        assert!(feasible(&k5, k5.edges(), SearchLimits::default())
            .unwrap()
            .is_none());

        let wheel = make_wheel(5).unwrap();
        let c = feasible(&k5, wheel.edges(), SearchLimits::default())
            .unwrap()
            .unwrap();
        assert!(verify_certificate(&c).unwrap());
        assert_eq!(c.assignment.len(), 2);
    }

    #[test]
    fn disconnected_subsets_are_infeasible() {
        let k4 = make_complete(4).unwrap();
        assert!(feasible(&k4, &[(0, 1), (2, 3)], SearchLimits::default())
            .unwrap()
            .is_none());
        assert!(feasible(&k4, &[(0, 1), (1, 2)], SearchLimits::default())
            .unwrap()
            .is_none());
        assert!(feasible(&k4, &[(0, 5)], SearchLimits::default()).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let k4 = make_complete(4).unwrap();
        let tight = SearchLimits {
            max_rotation_budget: 15,
            ..SearchLimits::default()
        };
        assert!(matches!(
            feasible(&k4, k4.edges(), tight),
            Err(Error::SearchBudget(_))
        ));
        let small = SearchLimits {
            max_n: 4,
            ..SearchLimits::default()
        };
        assert!(matches!(
            exact_h(&make_complete(5).unwrap(), small),
            Err(Error::SearchBudget(_))
        ));
    }

    #[test]
    fn exact_h_small_complete_graphs() {
        for n in 4..=5 {
            let (h, w) = exact_h(&make_complete(n).unwrap(), SearchLimits::default()).unwrap();
            assert_eq!(h, 2 * n - 2);
            assert!(verify_certificate(&w).unwrap());
            assert_eq!(genus(&w.rotation).unwrap(), 0);
        }
    }

    #[test]
    fn exact_h_planar_and_trees() {
        let cube = make_cube();
        assert_eq!(exact_h(&cube, SearchLimits::default()).unwrap().0, 12);
        let path = make_path(5).unwrap();
        assert_eq!(exact_h(&path, SearchLimits::default()).unwrap().0, 4);
        assert_eq!(
            exact_h(&make_path(2).unwrap(), SearchLimits::default())
                .unwrap()
                .0,
            1
        );
    }

    #[test]
    fn exact_h_k33() {
        let (h, w) = exact_h(
            &make_complete_bipartite(3, 3).unwrap(),
            SearchLimits::default(),
        )
        .unwrap();
        assert_eq!(h, 7);
        assert!(verify_certificate(&w).unwrap());
    }

    #[test]
    fn maximal_sets_of_planar_graphs() {
        let w = make_wheel(6).unwrap();
        let fam = maximal_feasible_sets(&w, SearchLimits::default()).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].edges, w.edges());
        let t = make_path(4).unwrap();
        assert_eq!(
            maximal_feasible_sets(&t, SearchLimits::default())
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn maximal_sets_of_k5() {
        let k5 = make_complete(5).unwrap();
        let fam = maximal_feasible_sets(&k5, SearchLimits::default()).unwrap();
        assert!(fam.iter().all(|s| s.edges.len() <= 8));
        assert!(fam.iter().any(|s| s.edges.len() == 8));
        for a in &fam {
            assert!(verify_certificate(&a.certificate).unwrap());
            for b in &fam {
                assert!(
                    a == b || a.mask & !b.mask != 0,
                    "family is not an antichain"
                );
            }
        }
    }

    #[test]
    fn unc_of_planar_and_k5() {
        let cube = make_cube();
        let limits = SearchLimits {
            max_n: 8,
            ..SearchLimits::for_unc()
        };
        assert_eq!(exact_unc(&cube, limits).unwrap().unc, 1);
        let r = exact_unc(&make_complete(5).unwrap(), SearchLimits::for_unc()).unwrap();
        assert!(r.unc >= 2);
        assert_eq!(r.cover.len(), r.unc);
        let mut covered: Vec<Edge> = r.cover.iter().flat_map(|c| c.uncrossed.clone()).collect();
        covered.sort_unstable();
        covered.dedup();
        assert_eq!(covered.len(), 10);
    }

    #[test]
    fn unc_respects_max_n() {
        let k7 = make_complete(7).unwrap();
        assert!(matches!(
            exact_unc(&k7, SearchLimits::for_unc()),
            Err(Error::SearchBudget(_))
        ));
    }

    #[test]
    fn determinism() {
        let k5 = make_complete(5).unwrap();
        let a = exact_h(&k5, SearchLimits::default()).unwrap();
        let b = exact_h(&k5, SearchLimits::default()).unwrap();
        assert_eq!(a, b);
    }
}
