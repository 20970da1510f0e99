use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::embedding::{genus, trace_faces, FaceSet, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Witness that `h(G) >= |H|`.
///
/// `H` is embedded in the plane by `rotation`, and every other edge of `G`
/// is assigned to a face of that embedding containing both of its
/// endpoints. Drawing each assigned edge inside its face crosses no edge of
/// `H` (the assigned edges may cross each other), so all of `H` stays
/// uncrossed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdrawingCertificate {
    pub graph: Graph,
    pub uncrossed: Vec<Edge>,
    pub rotation: RotationSystem,
    /// Face index, in `trace_faces(rotation)` order, for every edge of `G` outside `H`.
    pub assignment: BTreeMap<Edge, usize>,
}

/// Why a well-formed certificate fails to verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotConnected,
    NotSpanning,
    NotPlanar { genus: usize },
    NotCofacial { edge: Edge, face: usize },
    TooManyEdges { uncrossed: usize, limit: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotConnected => write!(f, "uncrossed subgraph is disconnected"),
            Violation::NotSpanning => write!(f, "uncrossed subgraph misses a vertex"),
            Violation::NotPlanar { genus } => write!(f, "embedding has genus {genus}"),
            Violation::NotCofacial { edge, face } => {
                write!(f, "edge {}-{} does not lie on face {face}", edge.0, edge.1)
            }
            Violation::TooManyEdges { uncrossed, limit } => {
                write!(f, "{uncrossed} uncrossed edges exceed 3n-6 = {limit}")
            }
        }
    }
}

impl SubdrawingCertificate {
    pub fn size(&self) -> usize {
        self.uncrossed.len()
    }

    pub fn faces(&self) -> FaceSet {
        trace_faces(&self.rotation)
    }

    pub fn uncrossed_graph(&self) -> Graph {
        self.rotation.graph()
    }

    /// Checks the structure: `H ⊆ E(G)`, the rotation describes `H`, and
    /// the assignment covers exactly `E(G) \ H` with existing face indices.
    pub fn check_structure(&self) -> Result<()> {
        let n = self.graph.n();
        if self.rotation.n() != n {
            return Err(Error::MalformedCertificate(format!(
                "rotation has {} vertices, graph has {n}",
                self.rotation.n()
            )));
        }
        let mut h = self.uncrossed.clone();
        h.sort_unstable();
        h.dedup();
        if h.len() != self.uncrossed.len() {
            return Err(Error::MalformedCertificate(
                "uncrossed set repeats an edge".into(),
            ));
        }
        if let Some(&(u, v)) = h.iter().find(|&&(u, v)| !self.graph.has_edge(u, v)) {
            return Err(Error::MalformedCertificate(format!(
                "edge {u}-{v} is not in the graph"
            )));
        }
        if self.rotation.graph().edges() != h.as_slice() {
            return Err(Error::MalformedCertificate(
                "rotation system does not describe the uncrossed edges".into(),
            ));
        }
        let faces = trace_faces(&self.rotation).len();
        for (&(u, v), &face) in &self.assignment {
            if !self.graph.has_edge(u, v) || u > v {
                return Err(Error::MalformedCertificate(format!(
                    "assigned edge {u}-{v} is not in the graph"
                )));
            }
            if h.binary_search(&(u, v)).is_ok() {
                return Err(Error::MalformedCertificate(format!(
                    "edge {u}-{v} is both uncrossed and assigned"
                )));
            }
            if face >= faces {
                return Err(Error::MalformedCertificate(format!(
                    "edge {u}-{v} assigned to face {face}, embedding has {faces}"
                )));
            }
        }
        if self.assignment.len() + h.len() != self.graph.m() {
            return Err(Error::MalformedCertificate(
                "some edge is neither uncrossed nor assigned".into(),
            ));
        }
        Ok(())
    }

    /// The first failed invariant, or `None` if the certificate is valid.
    pub fn first_violation(&self) -> Result<Option<Violation>> {
        self.check_structure()?;
        let n = self.graph.n();
        let h = self.rotation.graph();
        if n > 1 && (0..n).any(|v| h.degree(v) == 0) {
            return Ok(Some(Violation::NotSpanning));
        }
        if !h.is_connected() {
            return Ok(Some(Violation::NotConnected));
        }
        let g = genus(&self.rotation)?;
        if g != 0 {
            return Ok(Some(Violation::NotPlanar { genus: g }));
        }
        if n >= 3 && h.m() > 3 * n - 6 {
            return Ok(Some(Violation::TooManyEdges {
                uncrossed: h.m(),
                limit: 3 * n - 6,
            }));
        }
        let fs = trace_faces(&self.rotation);
        for (&(u, v), &face) in &self.assignment {
            let f = &fs.faces[face];
            if !(f.contains(u) && f.contains(v)) {
                return Ok(Some(Violation::NotCofacial { edge: (u, v), face }));
            }
        }
        Ok(None)
    }
}

/// True iff the certificate is valid; structural defects are errors.
pub fn verify_certificate(c: &SubdrawingCertificate) -> Result<bool> {
    Ok(c.first_violation()?.is_none())
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    n: usize,
    uncrossed: Vec<[usize; 2]>,
    rotation: Vec<Vec<usize>>,
    assignment: BTreeMap<String, usize>,
}

impl Serialize for SubdrawingCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateRepr {
            n: self.graph.n(),
            uncrossed: self.uncrossed.iter().map(|&(u, v)| [u, v]).collect(),
            rotation: self.rotation.orders().to_vec(),
            assignment: self
                .assignment
                .iter()
                .map(|(&(u, v), &f)| (format!("{u}-{v}"), f))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubdrawingCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CertificateRepr::deserialize(d)?;
        SubdrawingCertificate::try_from(repr).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<CertificateRepr> for SubdrawingCertificate {
    type Error = Error;

    fn try_from(r: CertificateRepr) -> Result<Self> {
        let malformed = |e: Error| Error::MalformedCertificate(e.to_string());
        if r.rotation.len() != r.n {
            return Err(Error::MalformedCertificate(format!(
                "rotation lists {} vertices, n = {}",
                r.rotation.len(),
                r.n
            )));
        }
        let mut assignment = BTreeMap::new();
        for (key, face) in r.assignment {
            let (u, v) = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                .ok_or_else(|| {
                    Error::MalformedCertificate(format!("bad assignment key {key:?}"))
                })?;
            assignment.insert((u.min(v), u.max(v)), face);
        }
        let uncrossed: Vec<Edge> = r
            .uncrossed
            .iter()
            .map(|&[u, v]| (u.min(v), u.max(v)))
            .collect();
        let graph = Graph::new(
            r.n,
            uncrossed.iter().copied().chain(assignment.keys().copied()),
        )
        .map_err(malformed)?;
        let rotation = RotationSystem::from_order(r.rotation).map_err(malformed)?;
        Ok(SubdrawingCertificate {
            graph,
            uncrossed,
            rotation,
            assignment,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_wheel};

    /// K_5 with the wheel W_5 uncrossed (hub 0, rim 1-2-3-4) and the two
    /// rim diagonals drawn in the outer face.
    pub(crate) fn k5_wheel_certificate() -> SubdrawingCertificate {
        let g = make_complete(5).unwrap();
        let wheel = make_wheel(5).unwrap();
        let rotation = RotationSystem::new(
            &wheel,
            vec![
                vec![1, 2, 3, 4],
                vec![0, 4, 2],
                vec![0, 1, 3],
                vec![0, 2, 4],
                vec![0, 3, 1],
            ],
        )
        .unwrap();
        let fs = trace_faces(&rotation);
        let outer = fs.faces.iter().position(|f| f.len() == 4).unwrap();
        SubdrawingCertificate {
            graph: g,
            uncrossed: wheel.edges().to_vec(),
            rotation,
            assignment: BTreeMap::from([((1, 3), outer), ((2, 4), outer)]),
        }
    }

    #[test]
    fn wheel_certificate_for_k5() {
        let c = k5_wheel_certificate();
        assert_eq!(c.first_violation().unwrap(), None);
        assert!(verify_certificate(&c).unwrap());
        assert_eq!(c.size(), 8);
    }

    #[test]
    fn diagonal_in_a_triangle_fails() {
        let mut c = k5_wheel_certificate();
        let fs = c.faces();
        let tri = fs
            .faces
            .iter()
            .position(|f| f.len() == 3 && !(f.contains(1) && f.contains(3)))
            .unwrap();
        c.assignment.insert((1, 3), tri);
        assert!(!verify_certificate(&c).unwrap());
        assert_eq!(
            c.first_violation().unwrap(),
            Some(Violation::NotCofacial {
                edge: (1, 3),
                face: tri
            })
        );
    }

    #[test]
    fn malformed_certificates() {
        let mut c = k5_wheel_certificate();
        c.assignment.insert((1, 3), 99);
        assert!(matches!(
            verify_certificate(&c),
            Err(Error::MalformedCertificate(_))
        ));

        let mut c = k5_wheel_certificate();
        c.assignment.remove(&(2, 4));
        assert!(matches!(
            verify_certificate(&c),
            Err(Error::MalformedCertificate(_))
        ));

        let mut c = k5_wheel_certificate();
        c.graph = crate::graph::make_wheel(5).unwrap();
        assert!(matches!(
            verify_certificate(&c),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn non_planar_rotation_fails() {
        let g = make_complete(4).unwrap();
        let torus = crate::embedding::enumerate_rotation_systems(&g, 100)
            .unwrap()
            .find(|r| trace_faces(r).len() == 2)
            .unwrap();
        let c = SubdrawingCertificate {
            graph: g.clone(),
            uncrossed: g.edges().to_vec(),
            rotation: torus,
            assignment: BTreeMap::new(),
        };
        assert_eq!(
            c.first_violation().unwrap(),
            Some(Violation::NotPlanar { genus: 1 })
        );
    }

    #[test]
    fn json_round_trip() {
        let c = k5_wheel_certificate();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.starts_with(r#"{"n":5,"uncrossed":[[0,1],"#));
        assert!(json.contains(r#""assignment":{"1-3":"#));
        let back: SubdrawingCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
