//! Simple undirected graphs on dense vertex ids, the standard generators,
//! structural predicates and the edge-list text format.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_rational::Ratio;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Edge = (usize, usize);

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v` in ascending order, so
/// iteration is deterministic everywhere downstream.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {u}-{v} has an endpoint >= n = {n}"
                )));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of `{u, v}` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Spanning subgraph on the same vertex set with the given edges.
    pub fn spanning_subgraph(&self, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let sub = Graph::new(self.n, edges)?;
        if let Some(&(u, v)) = sub.edges.iter().find(|&&(u, v)| !self.has_edge(u, v)) {
            return Err(Error::InvalidParameter(format!(
                "edge {u}-{v} is not in the graph"
            )));
        }
        Ok(sub)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// Returns `(a, b)` with `a <= b` if the graph is `K_{a,b}`.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        if self.n < 2 || !self.is_connected() {
            return None;
        }
        let mut side = vec![usize::MAX; self.n];
        side[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
        let a = side.iter().filter(|&&s| s == 0).count();
        let b = self.n - a;
        (a * b == self.m()).then_some((a.min(b), a.max(b)))
    }
}

/// Summary statistics; `density` is the exact rational `m / n²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub density: Ratio<u64>,
    pub connected: bool,
    pub triangle_free: bool,
}

pub fn analyze(g: &Graph) -> GraphStats {
    let n = g.n() as u64;
    GraphStats {
        n: g.n(),
        m: g.m(),
        density: Ratio::new(g.m() as u64, n * n),
        connected: g.is_connected(),
        triangle_free: g.is_triangle_free(),
    }
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("K_n needs n >= 1".into()));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_sorted(n, edges))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("K_{a,b} needs a, b >= 1".into()));
    }
    let edges = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_sorted(a + b, edges))
}

/// Wheel `W_n`: hub 0 joined to the rim cycle `1..n-1`.
pub fn make_wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "wheel W_n needs n >= 4, got {n}"
        )));
    }
    let spokes = (1..n).map(|v| (0, v));
    let rim = (1..n).map(|v| (v, if v + 1 < n { v + 1 } else { 1 }));
    Graph::new(n, spokes.chain(rim))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle C_n needs n >= 3, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn make_path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// The 3-cube `Q_3`: vertices are 3-bit words, adjacent when they differ in one bit.
pub fn make_cube() -> Graph {
    let edges = (0..8usize)
        .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v);
    Graph::new(8, edges).expect("cube is simple")
}

/// Uniform simple graph with exactly `m` edges; a pure function of `(n, m, seed)`.
pub fn make_random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("G(n, m) needs n >= 1".into()));
    }
    let total = n * (n - 1) / 2;
    if m > total {
        return Err(Error::InvalidParameter(format!(
            "m = {m} exceeds n(n-1)/2 = {total}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Edge> = sample(&mut rng, total, m)
        .into_iter()
        .map(|i| pair_from_index(n, i))
        .collect();
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

// Inverse of the row-major enumeration of pairs u < v.
fn pair_from_index(n: usize, mut i: usize) -> Edge {
    let mut u = 0;
    while i >= n - 1 - u {
        i -= n - 1 - u;
        u += 1;
    }
    (u, u + 1 + i)
}

/// Parses the edge-list format: a header `n m` followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header"))?;
    let (n, m) = parse_pair(header).ok_or_else(|| Error::parse(1, "header must be `n m`"))?;
    if n == 0 {
        return Err(Error::parse(1, "n must be at least 1"));
    }
    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(Error::parse(lineno, format!("more than {m} edge lines")));
        }
        let (u, v) =
            parse_pair(line).ok_or_else(|| Error::parse(lineno, "edge line must be `u v`"))?;
        if u == v {
            return Err(Error::parse(lineno, format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::parse(lineno, format!("endpoint >= n = {n}")));
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return Err(Error::parse(
                lineno,
                format!("duplicate edge {} {}", e.0, e.1),
            ));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// All connected graphs on `n` vertices, one per isomorphism class.
///
/// Brute force: every labelled graph is reduced to the minimum edge bitmask
/// over all vertex permutations. Intended for `n <= 7`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=7).contains(&n),
        "brute-force enumeration supports 1 <= n <= 7"
    );
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| pairs.binary_search(&(u.min(v), u.max(v))).unwrap();

    let perms = permutations(n);
    let relabel: Vec<Vec<u32>> = perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| index(p[u], p[v]) as u32)
                .collect()
        })
        .collect();

    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let g = Graph::from_sorted(
            n,
            (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect(),
        );
        if !g.is_connected() {
            continue;
        }
        let canon = relabel
            .iter()
            .map(|map| {
                map.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.into_iter()
        .map(|mask| {
            Graph::from_sorted(
                n,
                (0..pairs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| pairs[i])
                    .collect(),
            )
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}
