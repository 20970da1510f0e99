//! Enumeration of the plane embeddings of a small connected graph.
//!
//! Rather than walking all `Π (deg - 1)!` rotation systems and discarding
//! those of positive genus, embeddings are grown from a spanning tree: every
//! rotation system of a tree is planar, and inserting an edge between two
//! corners of one face keeps the embedding planar. Deleting the non-tree
//! edges of a plane embedding in reverse insertion order recovers the tree
//! rotation and the corner choices, so every plane rotation system of the
//! graph is produced exactly once.
//!
//! Inserting an edge splits a face, and the vertex sets of the two halves
//! are subsets of the original. Co-faciality can therefore only be lost as
//! edges are added, which lets the search prune partial embeddings.

use std::time::Instant;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Edge;

pub(crate) struct EmbeddingSearch<'a> {
    tree_nbrs: Vec<Vec<usize>>,
    pending: Vec<Edge>,
    /// Pairs that must stay on a common face: the edges outside the subgraph.
    required: &'a [Edge],
    deadline: Option<Instant>,
    steps: u64,
}

struct Face {
    darts: Vec<Edge>,
    mask: u64,
}

impl<'a> EmbeddingSearch<'a> {
    /// `edges` must form a connected spanning subgraph on `n <= 64` vertices.
    pub(crate) fn new(
        n: usize,
        edges: &[Edge],
        required: &'a [Edge],
        deadline: Option<Instant>,
    ) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let mut tree_nbrs = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut tree = Vec::new();
        let mut queue = std::collections::VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    tree.push((u.min(w), u.max(w)));
                    tree_nbrs[u].push(w);
                    tree_nbrs[w].push(u);
                    queue.push_back(w);
                }
            }
        }
        for t in &mut tree_nbrs {
            t.sort_unstable();
        }
        tree.sort_unstable();
        let pending = edges
            .iter()
            .copied()
            .filter(|e| tree.binary_search(e).is_err())
            .collect();
        EmbeddingSearch {
            tree_nbrs,
            pending,
            required,
            deadline,
            steps: 0,
        }
    }

    /// First plane rotation system, in search order, that keeps every
    /// required pair co-facial.
    pub(crate) fn first(&mut self) -> Result<Option<Vec<Vec<usize>>>> {
        let mut found = None;
        self.visit(&mut |rot| {
            found = Some(rot.to_vec());
            true
        })?;
        Ok(found)
    }

    /// Calls `f` on each admissible plane rotation system until it returns true.
    pub(crate) fn visit(&mut self, f: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> Result<bool> {
        let choices: Vec<Vec<Vec<usize>>> = self
            .tree_nbrs
            .iter()
            .map(|nb| match nb.split_first() {
                None => vec![Vec::new()],
                Some((&first, rest)) => rest
                    .iter()
                    .copied()
                    .permutations(rest.len())
                    .map(|p| std::iter::once(first).chain(p).collect())
                    .collect(),
            })
            .collect();
        for combo in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
            let mut rot: Vec<Vec<usize>> = combo.into_iter().cloned().collect();
            if self.extend(&mut rot, 0, f)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn extend(
        &mut self,
        rot: &mut Vec<Vec<usize>>,
        step: usize,
        f: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    ) -> Result<bool> {
        self.steps += 1;
        if self.steps.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::SearchBudget("time budget exhausted".into()));
                }
            }
        }

        let faces = trace(rot);
        let cofacial = |&(u, v): &Edge| {
            let want = 1u64 << u | 1u64 << v;
            faces.iter().any(|f| f.mask & want == want)
        };
        if !self.required.iter().all(cofacial) || !self.pending[step..].iter().all(cofacial) {
            return Ok(false);
        }
        if step == self.pending.len() {
            return Ok(f(rot));
        }

        let (u, v) = self.pending[step];
        let want = 1u64 << u | 1u64 << v;
        for face in faces.iter().filter(|f| f.mask & want == want) {
            // A corner is identified by the dart entering it.
            let into_u: Vec<usize> = face
                .darts
                .iter()
                .filter(|d| d.1 == u)
                .map(|d| d.0)
                .collect();
            let into_v: Vec<usize> = face
                .darts
                .iter()
                .filter(|d| d.1 == v)
                .map(|d| d.0)
                .collect();
            for &pu in &into_u {
                for &pv in &into_v {
                    let iu = insert_after(&mut rot[u], pu, v);
                    let iv = insert_after(&mut rot[v], pv, u);
                    let done = self.extend(rot, step + 1, f)?;
                    rot[v].remove(iv);
                    rot[u].remove(iu);
                    if done {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }
}

fn insert_after(cyc: &mut Vec<usize>, after: usize, x: usize) -> usize {
    let i = cyc
        .iter()
        .position(|&w| w == after)
        .expect("corner neighbor present")
        + 1;
    cyc.insert(i, x);
    i
}

fn trace(rot: &[Vec<usize>]) -> Vec<Face> {
    let offsets: Vec<usize> = rot
        .iter()
        .scan(0, |acc, c| {
            let o = *acc;
            *acc += c.len();
            Some(o)
        })
        .collect();
    let total: usize = rot.iter().map(Vec::len).sum();
    let mut visited = vec![false; total];
    let mut faces = Vec::new();
    for u in 0..rot.len() {
        for i in 0..rot[u].len() {
            if visited[offsets[u] + i] {
                continue;
            }
            let mut darts = Vec::new();
            let mut mask = 0u64;
            let (mut a, mut j) = (u, i);
            while !visited[offsets[a] + j] {
                visited[offsets[a] + j] = true;
                let b = rot[a][j];
                darts.push((a, b));
                mask |= 1 << a;
                let back = rot[b].iter().position(|&w| w == a).unwrap();
                j = (back + 1) % rot[b].len();
                a = b;
            }
            faces.push(Face { darts, mask });
        }
    }
    faces
}
