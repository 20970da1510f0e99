//! The tight family `G_{x,n}`.
//!
//! Start from the wheel `W_{x+1}` (hub 0, rim `1..=x`), make the rim a
//! clique by drawing every rim chord in the outer face, then stack the
//! remaining `n - x - 1` vertices into interior triangles. The wheel and the
//! stacked edges stay uncrossed: `m' = 3n - 3 - x` of the
//! `m = 3n - 3 + x(x-5)/2` edges.

use std::collections::BTreeSet;
use std::f64::consts::TAU;

use num_rational::Ratio;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::bounds::h_upper;
use crate::embedding::{trace_faces, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::oracle::{verify_certificate, SubdrawingCertificate};

pub type Rational = Ratio<i64>;

/// Float tolerance for the irrational side of the tightness checks.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XChoice {
    pub x: usize,
    /// `5/2 + √((5/2)² + 2(εn² - 3(n-1)))`, the real root of `m(x) = εn²`.
    pub x0: f64,
}

/// Picks `x = ⌈x0⌉` so that `G_{x,n}` has density at least `ε`.
///
/// The ceiling is decided in exact arithmetic: `x` is the least integer with
/// `(2x - 5)² >= 25 + 8(εn² - 3(n-1))`.
pub fn choose_x(epsilon: Rational, n: usize) -> Result<XChoice> {
    let eps = Ratio::new(*epsilon.numer() as i128, *epsilon.denom() as i128);
    let nn = n as i128;
    if !eps.is_positive() {
        return Err(Error::NotApplicable(format!(
            "ε = {epsilon} must be positive"
        )));
    }
    if eps * nn < Ratio::from_integer(3) {
        return Err(Error::NotApplicable(format!(
            "n < 3/ε: n = {n}, ε = {epsilon}"
        )));
    }
    if eps > Ratio::new(nn - 1, 2 * nn) {
        return Err(Error::NotApplicable(format!(
            "ε > (n-1)/(2n): ε = {epsilon}, n = {n}"
        )));
    }
    let target = eps * (nn * nn);
    let four_disc = Ratio::from_integer(25) + (target - 3 * (nn - 1)) * 8;
    debug_assert!(four_disc.is_positive());
    let disc = four_disc / 4;
    let x0 = 2.5 + (*disc.numer() as f64 / *disc.denom() as f64).sqrt();

    let covers = |x: i128| {
        let y = 2 * x - 5;
        y >= 0 && Ratio::from_integer(y * y) >= four_disc
    };
    let mut x = x0.ceil() as i128;
    while x > 0 && covers(x - 1) {
        x -= 1;
    }
    while !covers(x) {
        x += 1;
    }
    debug_assert!((3..nn).contains(&x), "x = {x} outside [3, n-1]");
    Ok(XChoice {
        x: x.clamp(3, nn - 1) as usize,
        x0,
    })
}

mod rational_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse()
            .map_err(|_| serde::de::Error::custom(format!("bad rational {s:?}")))
    }

    pub mod option {
        use super::Rational;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_str(&r.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| {
                    s.parse()
                        .map_err(|_| serde::de::Error::custom(format!("bad rational {s:?}")))
                })
                .transpose()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionStats {
    pub m: usize,
    /// Uncrossed edges: the wheel plus the stacked edges.
    pub m_prime: usize,
    /// Interior triangles of the uncrossed part.
    pub t: usize,
    /// Faces of the uncrossed part, outer face included.
    pub f: usize,
    #[serde(with = "rational_str")]
    pub density: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionRecord {
    #[serde(with = "rational_str::option")]
    pub epsilon_target: Option<Rational>,
    pub n: usize,
    pub x: usize,
    pub x0: Option<f64>,
    pub graph: Graph,
    pub certificate: SubdrawingCertificate,
    /// The rim chords, all drawn in the outer face.
    pub crossed_edges: Vec<Edge>,
    /// Host triangle of each stacked vertex `x+1, ..., n-1`, in insertion order.
    pub hosts: Vec<[usize; 3]>,
    pub coordinates: Vec<[f64; 2]>,
    pub stats: ConstructionStats,
}

/// `G_{ε,n}`: [`choose_x`] followed by [`build_construction`].
pub fn construct(epsilon: Rational, n: usize) -> Result<ConstructionRecord> {
    let choice = choose_x(epsilon, n)?;
    let mut rec = build_construction(choice.x, n)?;
    rec.epsilon_target = Some(epsilon);
    rec.x0 = Some(choice.x0);
    Ok(rec)
}

fn rim_next(i: usize, x: usize) -> usize {
    if i == x {
        1
    } else {
        i + 1
    }
}

fn rim_prev(i: usize, x: usize) -> usize {
    if i == 1 {
        x
    } else {
        i - 1
    }
}

/// Builds `G_{x,n}` with its drawing certificate.
///
/// Each stacked vertex goes into the interior triangle with the
/// lexicographically smallest sorted corner triple.
pub fn build_construction(x: usize, n: usize) -> Result<ConstructionRecord> {
    if x < 3 || x + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "needs 3 <= x <= n-1, got x = {x}, n = {n}"
        )));
    }
    // Orders are counter-clockwise for the layout below.
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    rot[0] = (1..=x).collect();
    for (i, r) in rot.iter_mut().enumerate().take(x + 1).skip(1) {
        *r = vec![rim_next(i, x), 0, rim_prev(i, x)];
    }
    let mut uncrossed: Vec<Edge> = (1..=x).map(|i| (0, i)).collect();
    uncrossed.extend((1..=x).map(|i| (i.min(rim_next(i, x)), i.max(rim_next(i, x)))));
    let mut triangles: BTreeSet<[usize; 3]> =
        (1..=x).map(|i| sorted3([0, i, rim_next(i, x)])).collect();

    let mut hosts = Vec::with_capacity(n - x - 1);
    for w in x + 1..n {
        let host = triangles.pop_first().expect("an interior triangle remains");
        let [a, b, c] = face_walk(&rot, host);
        insert_after(&mut rot[b], a, w);
        insert_after(&mut rot[c], b, w);
        insert_after(&mut rot[a], c, w);
        rot[w] = vec![a, c, b];
        uncrossed.extend([(a.min(w), w), (b.min(w), w), (c.min(w), w)]);
        triangles.extend([sorted3([a, b, w]), sorted3([b, c, w]), sorted3([a, c, w])]);
        hosts.push(host);
    }
    uncrossed.sort_unstable();

    let crossed_edges: Vec<Edge> = (1..=x)
        .flat_map(|i| (i + 1..=x).map(move |j| (i, j)))
        .filter(|&(i, j)| j != i + 1 && !(i == 1 && j == x))
        .collect();
    let graph = Graph::new(
        n,
        uncrossed
            .iter()
            .copied()
            .chain(crossed_edges.iter().copied()),
    )?;
    let sub = Graph::new(n, uncrossed.iter().copied())?;
    let rotation = RotationSystem::new(&sub, rot)?;
    let fs = trace_faces(&rotation);
    let rim: Vec<usize> = (1..=x).collect();
    let outer = fs
        .faces
        .iter()
        .position(|f| f.vertices == rim && f.len() == x)
        .ok_or_else(|| Error::ConstructionIntegrity("no face bounded by the rim cycle".into()))?;
    let certificate = SubdrawingCertificate {
        graph: graph.clone(),
        uncrossed,
        rotation,
        assignment: crossed_edges.iter().map(|&e| (e, outer)).collect(),
    };

    let nn = n as i64;
    let stats = ConstructionStats {
        m: graph.m(),
        m_prime: certificate.size(),
        t: triangles.len(),
        f: fs.len(),
        density: Ratio::new(graph.m() as i64, nn * nn),
    };
    let coordinates = stacked_layout(x, n, &hosts);
    let rec = ConstructionRecord {
        epsilon_target: None,
        n,
        x,
        x0: None,
        graph,
        certificate,
        crossed_edges,
        hosts,
        coordinates,
        stats,
    };
    check_identities(&rec)?;
    Ok(rec)
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

fn insert_after(cyc: &mut Vec<usize>, after: usize, w: usize) {
    let i = cyc
        .iter()
        .position(|&v| v == after)
        .expect("corner present");
    cyc.insert(i + 1, w);
}

fn successor(rot: &[Vec<usize>], v: usize, u: usize) -> usize {
    let cyc = &rot[v];
    let i = cyc.iter().position(|&w| w == u).expect("adjacent");
    cyc[(i + 1) % cyc.len()]
}

// Orients a triangular face as the walk a -> b -> c traced by the rotation.
fn face_walk(rot: &[Vec<usize>], [a, b, c]: [usize; 3]) -> [usize; 3] {
    if successor(rot, b, a) == c && successor(rot, c, b) == a {
        [a, b, c]
    } else {
        [a, c, b]
    }
}

/// Checks the counting identities of `G_{x,n}` against the record.
pub fn check_identities(rec: &ConstructionRecord) -> Result<()> {
    let (n, x) = (rec.n as i64, rec.x as i64);
    let s = &rec.stats;
    let fail = |what: String| Err(Error::ConstructionIntegrity(what));
    let m_expected = 3 * n - 3 + x * (x - 5) / 2;
    if s.m as i64 != m_expected || rec.graph.m() != s.m {
        return fail(format!("m = {} but 3n-3+x(x-5)/2 = {m_expected}", s.m));
    }
    if s.m_prime as i64 != 3 * n - 3 - x || rec.certificate.size() != s.m_prime {
        return fail(format!(
            "m' = {} (certificate {}) but 3n-3-x = {}",
            s.m_prime,
            rec.certificate.size(),
            3 * n - 3 - x
        ));
    }
    if s.t as i64 != 2 * n - 2 - x || s.f != s.t + 1 {
        return fail(format!(
            "t = {}, f = {} but t should be 2n-2-x = {}",
            s.t,
            s.f,
            2 * n - 2 - x
        ));
    }
    if rec.crossed_edges.len() as i64 != x * (x - 3) / 2 {
        return fail(format!(
            "{} crossed chords, expected x(x-3)/2",
            rec.crossed_edges.len()
        ));
    }
    if (2.0 * s.m as f64).sqrt() + FLOAT_TOL < x as f64 {
        return fail(format!("√(2m) < x for m = {}", s.m));
    }
    if s.density != Ratio::new(s.m as i64, n * n) {
        return fail("density is not m/n²".into());
    }
    if !verify_certificate(&rec.certificate)? {
        return fail("certificate does not verify".into());
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TightnessReport {
    /// `3n - 3 - √(2m)`.
    pub lower: f64,
    /// `h_upper(n, m)`.
    pub upper: f64,
    pub m_prime: usize,
    #[serde(with = "rational_str")]
    pub epsilon: Rational,
    #[serde(with = "rational_str")]
    pub density: Rational,
    #[serde(with = "rational_str")]
    pub density_ceiling: Rational,
}

/// Verifies `m' >= 3n - 3 - √(2m)`, `ε <= m/n² <= ε + 1/n + 1/(2n²)` (exactly)
/// and `m' <= h_upper(n, m)` for a record built by [`construct`].
pub fn check_tightness(rec: &ConstructionRecord) -> Result<TightnessReport> {
    let eps = rec
        .epsilon_target
        .ok_or_else(|| Error::InvalidParameter("record was not built from a target ε".into()))?;
    check_identities(rec)?;
    let (n, m) = (rec.n, rec.stats.m);
    let lower = 3.0 * n as f64 - 3.0 - (2.0 * m as f64).sqrt();
    let upper = h_upper(n, m)?;
    let m_prime = rec.stats.m_prime as f64;
    if m_prime + FLOAT_TOL < lower {
        return Err(Error::ConstructionIntegrity(format!(
            "m' = {m_prime} < 3n-3-√(2m) = {lower}"
        )));
    }
    if m_prime > upper + FLOAT_TOL {
        return Err(Error::ConstructionIntegrity(format!(
            "m' = {m_prime} exceeds h_upper = {upper}"
        )));
    }
    let nn = n as i64;
    let density = Ratio::new(m as i64, nn * nn);
    let ceiling = eps + Ratio::new(1, nn) + Ratio::new(1, 2 * nn * nn);
    if density < eps || density > ceiling {
        return Err(Error::ConstructionIntegrity(format!(
            "density {density} outside [{eps}, {ceiling}]"
        )));
    }
    Ok(TightnessReport {
        lower,
        upper,
        m_prime: rec.stats.m_prime,
        epsilon: eps,
        density,
        density_ceiling: ceiling,
    })
}

/// Hub at the origin, rim on the unit circle, stacked vertices at the
/// centroid of their host triangle.
pub fn layout_coordinates(rec: &ConstructionRecord) -> Vec<[f64; 2]> {
    stacked_layout(rec.x, rec.n, &rec.hosts)
}

fn stacked_layout(x: usize, n: usize, hosts: &[[usize; 3]]) -> Vec<[f64; 2]> {
    let mut pos = vec![[0.0, 0.0]; n];
    for (i, p) in pos.iter_mut().enumerate().take(x + 1).skip(1) {
        let theta = TAU * (i - 1) as f64 / x as f64;
        *p = [theta.cos(), theta.sin()];
    }
    for (k, host) in hosts.iter().enumerate() {
        let c = host.iter().fold([0.0, 0.0], |acc, &v| {
            [acc[0] + pos[v][0], acc[1] + pos[v][1]]
        });
        pos[x + 1 + k] = [c[0] / 3.0, c[1] / 3.0];
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{face_profile, genus};
    use crate::graph::make_complete;

    fn r(p: i64, q: i64) -> Rational {
        Ratio::new(p, q)
    }

    #[test]
    fn choose_x_examples() {
        let c = choose_x(r(3, 10), 20).unwrap();
        assert_eq!(c.x, 14);
        assert!((c.x0 - 14.0).abs() < 1e-12);
        let c = choose_x(r(45, 100), 10).unwrap();
        assert_eq!(c.x, 9);
        assert!((c.x0 - 9.0).abs() < 1e-12);
        match choose_x(r(3, 10), 9) {
            Err(Error::NotApplicable(msg)) => assert!(msg.contains("n < 3/ε")),
            other => panic!("{other:?}"),
        }
        assert!(choose_x(r(1, 2), 10).is_err());
        assert!(choose_x(r(0, 1), 10).is_err());
    }

    #[test]
    fn build_examples() {
        let rec = build_construction(14, 20).unwrap();
        let s = &rec.stats;
        assert_eq!((s.m, s.m_prime, s.t, s.f), (120, 43, 24, 25));

        let k4 = build_construction(3, 4).unwrap();
        assert_eq!((k4.stats.m, k4.stats.m_prime), (6, 6));
        assert!(k4.crossed_edges.is_empty());
        assert_eq!(k4.graph, make_complete(4).unwrap());

        let k10 = build_construction(9, 10).unwrap();
        assert_eq!(k10.graph, make_complete(10).unwrap());
        assert_eq!((k10.stats.m, k10.stats.m_prime), (45, 18));

        assert!(build_construction(2, 5).is_err());
        assert!(build_construction(5, 5).is_err());
    }

    #[test]
    fn uncrossed_part_is_a_plane_near_triangulation() {
        for n in 4..=20 {
            for x in 3..n {
                let rec = build_construction(x, n).unwrap();
                let rot = &rec.certificate.rotation;
                assert_eq!(genus(rot).unwrap(), 0);
                let p = face_profile(&trace_faces(rot)).unwrap();
                assert_eq!(p.euler_sum(), 2 * n - 4);
                let t = 2 * n - 2 - x;
                assert_eq!(p.count(3), if x == 3 { t + 1 } else { t }, "x={x} n={n}");
                assert_eq!(rec.stats.t, t);
            }
        }
    }

    #[test]
    fn tightness_examples() {
        let rec = construct(r(3, 10), 20).unwrap();
        let t = check_tightness(&rec).unwrap();
        assert!((t.lower - (57.0 - 240f64.sqrt())).abs() < 1e-12);
        assert!(43.0 >= t.lower);
        assert_eq!(t.density, r(3, 10));
        assert_eq!(t.density_ceiling, r(3, 10) + r(1, 20) + r(1, 800));

        let rec = construct(r(45, 100), 10).unwrap();
        assert_eq!(check_tightness(&rec).unwrap().density, r(45, 100));
    }

    #[test]
    fn tampered_record_is_rejected() {
        let mut rec = construct(r(3, 10), 20).unwrap();
        rec.stats.m_prime = 44;
        assert!(matches!(
            check_tightness(&rec),
            Err(Error::ConstructionIntegrity(_))
        ));

        let mut rec = construct(r(3, 10), 20).unwrap();
        rec.epsilon_target = Some(r(31, 100));
        assert!(matches!(
            check_tightness(&rec),
            Err(Error::ConstructionIntegrity(_))
        ));

        assert!(check_tightness(&build_construction(14, 20).unwrap()).is_err());
    }

    fn inside(p: [f64; 2], t: [[f64; 2]; 3]) -> bool {
        let cross = |a: [f64; 2], b: [f64; 2], c: [f64; 2]| {
            (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        };
        let d = [
            cross(t[0], t[1], p),
            cross(t[1], t[2], p),
            cross(t[2], t[0], p),
        ];
        d.iter().all(|&v| v > 0.0) || d.iter().all(|&v| v < 0.0)
    }

    #[test]
    fn layout() {
        let wheel = build_construction(4, 5).unwrap();
        assert_eq!(wheel.coordinates[0], [0.0, 0.0]);
        for p in &wheel.coordinates[1..] {
            assert!((p[0].hypot(p[1]) - 1.0).abs() < 1e-12);
        }

        let rec = build_construction(14, 20).unwrap();
        assert_eq!(rec.hosts.len(), 5);
        for (k, host) in rec.hosts.iter().enumerate() {
            let tri = host.map(|v| rec.coordinates[v]);
            assert!(inside(rec.coordinates[15 + k], tri));
        }
        assert_eq!(layout_coordinates(&rec), rec.coordinates);
        assert_eq!(
            build_construction(14, 20).unwrap().coordinates,
            rec.coordinates
        );
    }

    #[test]
    fn record_json_round_trip() {
        let rec = construct(r(3, 10), 20).unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains(r#""epsilon_target":"3/10""#));
        let back: ConstructionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
    }
}
