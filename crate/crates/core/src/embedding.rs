//! Rotation systems, face tracing and the face-length profile.
//!
//! A rotation system fixes, for every vertex, a cyclic order of its
//! neighbors. Each cyclic order is stored starting at the smallest neighbor
//! (the pinned neighbor), so two rotation systems are equal exactly when they
//! describe the same embedding.
//!
//! Faces are traced with the usual rule: after the directed edge `u -> v`
//! the walk continues with `v -> w`, where `w` follows `u` in the cyclic
//! order at `v`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RotationRepr", into = "RotationRepr")]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    twin: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RotationRepr {
    n: usize,
    order: Vec<Vec<usize>>,
}

impl TryFrom<RotationRepr> for RotationSystem {
    type Error = Error;

    fn try_from(r: RotationRepr) -> Result<Self> {
        if r.order.len() != r.n {
            return Err(Error::InvalidParameter(format!(
                "rotation lists {} vertices but n = {}",
                r.order.len(),
                r.n
            )));
        }
        RotationSystem::from_order(r.order)
    }
}

impl From<RotationSystem> for RotationRepr {
    fn from(r: RotationSystem) -> Self {
        RotationRepr {
            n: r.n(),
            order: r.order,
        }
    }
}

impl RotationSystem {
    /// Rotation system of `graph`; `order[v]` must be a permutation of the neighbors of `v`.
    pub fn new(graph: &Graph, order: Vec<Vec<usize>>) -> Result<Self> {
        if order.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "rotation has {} vertices, graph has {}",
                order.len(),
                graph.n()
            )));
        }
        for (v, cyc) in order.iter().enumerate() {
            let mut sorted = cyc.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::InvalidParameter(format!(
                    "cyclic order at vertex {v} is not a permutation of its neighbors"
                )));
            }
        }
        Ok(Self::build(order))
    }

    /// Rotation system of the graph the orders themselves describe.
    pub fn from_order(order: Vec<Vec<usize>>) -> Result<Self> {
        let n = order.len();
        let mut edges = Vec::new();
        for (v, cyc) in order.iter().enumerate() {
            for &w in cyc {
                if w >= n {
                    return Err(Error::InvalidParameter(format!(
                        "neighbor {w} of {v} is out of range"
                    )));
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::new(n.max(1), edges)?;
        Self::new(&graph, order)
    }

    fn build(mut order: Vec<Vec<usize>>) -> Self {
        for cyc in &mut order {
            if let Some(p) = cyc
                .iter()
                .enumerate()
                .min_by_key(|&(_, &w)| w)
                .map(|(i, _)| i)
            {
                cyc.rotate_left(p);
            }
        }
        let mut offsets = Vec::with_capacity(order.len() + 1);
        let mut acc = 0;
        for cyc in &order {
            offsets.push(acc);
            acc += cyc.len();
        }
        offsets.push(acc);

        let mut twin = vec![0; acc];
        for (v, cyc) in order.iter().enumerate() {
            for (i, &w) in cyc.iter().enumerate() {
                let j = order[w]
                    .iter()
                    .position(|&x| x == v)
                    .expect("symmetric rotation");
                twin[offsets[v] + i] = offsets[w] + j;
            }
        }
        RotationSystem {
            order,
            offsets,
            twin,
        }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn m(&self) -> usize {
        self.twin.len() / 2
    }

    /// Cyclic order at `v`, starting at its smallest neighbor.
    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.order
    }

    pub fn graph(&self) -> Graph {
        let edges = self
            .order
            .iter()
            .enumerate()
            .flat_map(|(v, cyc)| cyc.iter().filter(move |&&w| v < w).map(move |&w| (v, w)));
        Graph::new(self.n(), edges).expect("rotation systems describe simple graphs")
    }

    /// The neighbor following `u` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, u: usize) -> Option<usize> {
        let cyc = &self.order[v];
        let i = cyc.iter().position(|&x| x == u)?;
        Some(cyc[(i + 1) % cyc.len()])
    }

    fn tail(&self, dart: usize) -> usize {
        self.offsets.partition_point(|&o| o <= dart) - 1
    }

    fn head(&self, dart: usize) -> usize {
        let v = self.tail(dart);
        self.order[v][dart - self.offsets[v]]
    }

    fn next_in_face(&self, dart: usize) -> usize {
        let back = self.twin[dart];
        let w = self.tail(back);
        let deg = self.order[w].len();
        self.offsets[w] + (back - self.offsets[w] + 1) % deg
    }
}

/// One facial walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Directed edges in walk order, starting at the smallest one.
    pub walk: Vec<Edge>,
    /// Distinct vertices on the walk, ascending.
    pub vertices: Vec<usize>,
}

impl Face {
    /// `|F|`: the number of directed edges in the walk.
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// `v(F)`: the number of distinct vertices on the walk.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Edges that this walk traverses in only one direction.
    pub fn edges_traversed_once(&self) -> Vec<Edge> {
        let mut once: Vec<Edge> = self
            .walk
            .iter()
            .filter(|&&(u, v)| !self.walk.contains(&(v, u)))
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        once.sort_unstable();
        once
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub n: usize,
    pub m: usize,
    /// Faces in order of their smallest directed edge.
    pub faces: Vec<Face>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Index of the first face incident to both `u` and `v`.
    pub fn common_face(&self, u: usize, v: usize) -> Option<usize> {
        self.faces
            .iter()
            .position(|f| f.contains(u) && f.contains(v))
    }
}

pub fn trace_faces(r: &RotationSystem) -> FaceSet {
    let n = r.n();
    if r.m() == 0 {
        // A lone vertex sits in the single face of the sphere.
        let faces = if n == 1 {
            vec![Face {
                walk: Vec::new(),
                vertices: vec![0],
            }]
        } else {
            Vec::new()
        };
        return FaceSet { n, m: 0, faces };
    }

    let mut visited = vec![false; r.twin.len()];
    let mut faces = Vec::new();
    for u in 0..n {
        let mut starts: Vec<(usize, usize)> = r.order[u]
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, r.offsets[u] + i))
            .collect();
        starts.sort_unstable();
        for (_, start) in starts {
            if visited[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !visited[d] {
                visited[d] = true;
                walk.push((r.tail(d), r.head(d)));
                d = r.next_in_face(d);
            }
            let mut vertices: Vec<usize> = walk.iter().map(|&(u, _)| u).collect();
            vertices.sort_unstable();
            vertices.dedup();
            faces.push(Face { walk, vertices });
        }
    }
    FaceSet { n, m: r.m(), faces }
}

/// Euler genus of the embedding of a connected graph: `n - m + f = 2 - 2g`.
pub fn genus(r: &RotationSystem) -> Result<usize> {
    if !r.graph().is_connected() {
        return Err(Error::UnsupportedInput(
            "genus needs a connected graph".into(),
        ));
    }
    let f = trace_faces(r).len() as i64;
    let excess = 2 - r.n() as i64 + r.m() as i64 - f;
    debug_assert!(
        excess >= 0 && excess % 2 == 0,
        "Euler characteristic parity"
    );
    Ok((excess / 2) as usize)
}

pub fn is_planar_embedding(r: &RotationSystem) -> bool {
    matches!(genus(r), Ok(0))
}

/// Face counts by walk length: `s[ℓ]` is the number of faces of length `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceProfile {
    pub s: BTreeMap<usize, usize>,
    pub f: usize,
}

impl FaceProfile {
    pub fn count(&self, len: usize) -> usize {
        self.s.get(&len).copied().unwrap_or(0)
    }

    /// `Σ (ℓ - 2) s_ℓ`, which is `2n - 4` for a connected plane embedding.
    pub fn euler_sum(&self) -> usize {
        self.s.iter().map(|(&l, &c)| (l - 2) * c).sum()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.s.keys().next_back().copied()
    }

    /// `(s_3, ..., s_{k-1})`.
    pub fn truncated(&self, k: usize) -> Vec<u64> {
        (3..k).map(|l| self.count(l) as u64).collect()
    }
}

/// Rejects faces of length 1 or 2, which a simple connected graph on at
/// least three vertices cannot have.
pub fn face_profile(fs: &FaceSet) -> Result<FaceProfile> {
    let mut s = BTreeMap::new();
    for face in &fs.faces {
        if face.len() < 3 {
            return Err(Error::UnsupportedInput(format!(
                "face of length {} cannot occur in a simple connected graph with n >= 3",
                face.len()
            )));
        }
        *s.entry(face.len()).or_insert(0) += 1;
    }
    Ok(FaceProfile { s, f: fs.len() })
}

/// Whether `u` and `v` lie on a common face.
pub fn cofacial(fs: &FaceSet, u: usize, v: usize) -> bool {
    fs.common_face(u, v).is_some()
}

/// Number of rotation systems of `g` with pinned first neighbors: `Π (deg(v) - 1)!`.
pub fn rotation_count(g: &Graph) -> u128 {
    (0..g.n())
        .map(|v| factorial(g.degree(v).saturating_sub(1)))
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// Every rotation system of a connected graph, in lexicographic order.
///
/// Vertex 0 is the most significant position; within a vertex the
/// non-pinned neighbors run through their permutations lexicographically.
/// [`RotationEnumerator::get`] gives random access so disjoint index ranges
/// can be handed to separate workers.
#[derive(Clone, Debug)]
pub struct RotationEnumerator {
    neighbors: Vec<Vec<usize>>,
    radix: Vec<u128>,
    total: u128,
}

impl RotationEnumerator {
    pub fn new(g: &Graph, budget: u128) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::UnsupportedInput(
                "rotation enumeration needs a connected graph".into(),
            ));
        }
        let total = rotation_count(g);
        if total > budget {
            return Err(Error::SearchBudget(format!(
                "graph has {total} rotation systems (product of (deg-1)!), budget is {budget}"
            )));
        }
        Ok(RotationEnumerator {
            neighbors: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
            radix: (0..g.n())
                .map(|v| factorial(g.degree(v).saturating_sub(1)))
                .collect(),
            total,
        })
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn get(&self, mut index: u128) -> RotationSystem {
        assert!(index < self.total, "rotation index out of range");
        let n = self.neighbors.len();
        let mut order = vec![Vec::new(); n];
        for v in (0..n).rev() {
            let digit = index % self.radix[v];
            index /= self.radix[v];
            let nb = &self.neighbors[v];
            if nb.is_empty() {
                continue;
            }
            let mut cyc = Vec::with_capacity(nb.len());
            cyc.push(nb[0]);
            cyc.extend(nth_permutation(&nb[1..], digit));
            order[v] = cyc;
        }
        RotationSystem::build(order)
    }

    pub fn iter(&self) -> impl Iterator<Item = RotationSystem> + '_ {
        (0..self.total).map(move |i| self.get(i))
    }
}

/// Lexicographic `k`-th permutation of a sorted slice (factorial number system).
fn nth_permutation(items: &[usize], mut k: u128) -> Vec<usize> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(items.len());
    for i in (0..items.len()).rev() {
        let f = factorial(i);
        let j = (k / f) as usize;
        k %= f;
        out.push(pool.remove(j));
    }
    out
}

pub fn enumerate_rotation_systems(
    g: &Graph,
    budget: u128,
) -> Result<impl Iterator<Item = RotationSystem>> {
    let e = RotationEnumerator::new(g, budget)?;
    Ok((0..e.total).map(move |i| e.get(i)))
}
