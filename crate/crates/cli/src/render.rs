//! SVG export. Uncrossed edges are solid segments, crossed edges dotted.
//!
//! Construction records carry their own coordinates. Certificates are laid
//! out with a barycentric (Tutte) embedding: the first traced face is pinned
//! to the unit circle and every other vertex sits at the mean of its
//! neighbours. Edges drawn in the outer face become arcs bulging outward;
//! edges drawn in an inner face are straight, since inner faces are convex.

use std::f64::consts::{PI, TAU};
use std::fmt::Write;

use nalgebra::{DMatrix, DVector};
use serde_json::Value;

use uncrossed::oracle::verify_certificate;
use uncrossed::{ConstructionRecord, Edge, Error, Result, SubdrawingCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Straight,
    /// Through the region outside the unit circle.
    OuterArc,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub positions: Vec<[f64; 2]>,
    pub solid: Vec<Edge>,
    pub dotted: Vec<(Edge, Route)>,
}

/// A construction record, a certificate, or an oracle result holding one.
pub fn scene_from_json(v: &Value) -> Result<Scene> {
    let bad = |e: serde_json::Error| Error::UnsupportedInput(format!("render input: {e}"));
    if v.get("hosts").is_some() {
        let rec: ConstructionRecord = serde_json::from_value(v.clone()).map_err(bad)?;
        return record_scene(&rec);
    }
    let cert = match v.get("certificate") {
        Some(c) => c,
        None => v,
    };
    if cert.get("rotation").is_none() {
        return Err(Error::UnsupportedInput(
            "render input is neither a construction record nor a certificate".into(),
        ));
    }
    let cert: SubdrawingCertificate = serde_json::from_value(cert.clone()).map_err(bad)?;
    certificate_scene(&cert)
}

pub fn record_scene(rec: &ConstructionRecord) -> Result<Scene> {
    if rec.coordinates.len() != rec.n {
        return Err(Error::UnsupportedInput(format!(
            "render error: {} coordinates for {} vertices",
            rec.coordinates.len(),
            rec.n
        )));
    }
    Ok(Scene {
        positions: rec.coordinates.clone(),
        solid: rec.certificate.uncrossed.clone(),
        dotted: rec
            .crossed_edges
            .iter()
            .map(|&e| (e, Route::OuterArc))
            .collect(),
    })
}

pub fn certificate_scene(cert: &SubdrawingCertificate) -> Result<Scene> {
    if !verify_certificate(cert)? {
        let why = cert
            .first_violation()?
            .map(|v| v.to_string())
            .unwrap_or_default();
        return Err(Error::MalformedCertificate(format!(
            "certificate does not verify: {why}"
        )));
    }
    let faces = cert.faces();
    let outer: Vec<usize> = match faces.faces.first() {
        Some(f) => {
            let mut seen = Vec::new();
            for &(u, _) in &f.walk {
                if !seen.contains(&u) {
                    seen.push(u);
                }
            }
            seen
        }
        None => vec![0],
    };
    let h = cert.uncrossed_graph();
    let adj: Vec<Vec<usize>> = (0..h.n()).map(|v| h.neighbors(v).to_vec()).collect();
    let positions = tutte_layout(&adj, &outer);
    Ok(Scene {
        positions,
        solid: cert.uncrossed.clone(),
        dotted: cert
            .assignment
            .iter()
            .map(|(&e, &f)| {
                (
                    e,
                    if f == 0 {
                        Route::OuterArc
                    } else {
                        Route::Straight
                    },
                )
            })
            .collect(),
    })
}

/// Pins `outer` to the unit circle and solves for the barycentric positions
/// of the remaining vertices.
pub fn tutte_layout(adj: &[Vec<usize>], outer: &[usize]) -> Vec<[f64; 2]> {
    let n = adj.len();
    let mut pos = vec![[0.0, 0.0]; n];
    let mut fixed = vec![false; n];
    let k = outer.len();
    for (i, &v) in outer.iter().enumerate() {
        let theta = PI / 2.0 + TAU * i as f64 / k as f64;
        pos[v] = if k == 1 {
            [0.0, 0.0]
        } else {
            [theta.cos(), theta.sin()]
        };
        fixed[v] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&v| !fixed[v]).collect();
    if free.is_empty() {
        return pos;
    }
    let mut index = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        index[v] = i;
    }
    let mut a = DMatrix::<f64>::zeros(free.len(), free.len());
    let mut bx = DVector::<f64>::zeros(free.len());
    let mut by = DVector::<f64>::zeros(free.len());
    for (i, &v) in free.iter().enumerate() {
        a[(i, i)] = adj[v].len() as f64;
        for &w in &adj[v] {
            if fixed[w] {
                bx[i] += pos[w][0];
                by[i] += pos[w][1];
            } else {
                a[(i, index[w])] -= 1.0;
            }
        }
    }
    let lu = a.lu();
    let (x, y) = (
        lu.solve(&bx)
            .expect("connected graph gives a nonsingular Laplacian block"),
        lu.solve(&by)
            .expect("connected graph gives a nonsingular Laplacian block"),
    );
    for (i, &v) in free.iter().enumerate() {
        pos[v] = [x[i], y[i]];
    }
    pos
}

fn outer_arc(p: [f64; 2], q: [f64; 2]) -> Vec<[f64; 2]> {
    let (a, b) = (p[1].atan2(p[0]), q[1].atan2(q[0]));
    let mut span = b - a;
    if span > PI {
        span -= TAU;
    } else if span < -PI {
        span += TAU;
    }
    let (ra, rb) = (p[0].hypot(p[1]), q[0].hypot(q[1]));
    let bulge = 0.06 + 0.22 * span.abs() / PI;
    const STEPS: usize = 32;
    (0..=STEPS)
        .map(|i| {
            let t = i as f64 / STEPS as f64;
            let r = ra + (rb - ra) * t + bulge * (PI * t).sin();
            let theta = a + span * t;
            [r * theta.cos(), r * theta.sin()]
        })
        .collect()
}

fn pt(out: &mut String, p: [f64; 2]) {
    // SVG's y axis points down.
    let _ = write!(out, "{:.4},{:.4}", p[0], -p[1] + 0.0);
}

/// Serialises a scene. Output depends only on the scene, so identical input
/// gives identical bytes.
pub fn to_svg(scene: &Scene) -> String {
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.45 -1.45 2.9 2.9\" width=\"640\" height=\"640\">\n",
    );
    s.push_str("<rect x=\"-1.45\" y=\"-1.45\" width=\"2.9\" height=\"2.9\" fill=\"white\"/>\n");
    s.push_str(
        "<g class=\"crossed\" stroke=\"#b03a2e\" stroke-width=\"0.008\" stroke-dasharray=\"0.004 0.016\" stroke-linecap=\"round\" fill=\"none\">\n",
    );
    for &((u, v), route) in &scene.dotted {
        let (p, q) = (scene.positions[u], scene.positions[v]);
        let points = match route {
            Route::Straight => vec![p, q],
            Route::OuterArc => outer_arc(p, q),
        };
        s.push_str("<polyline points=\"");
        for (i, &p) in points.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            pt(&mut s, p);
        }
        let _ = writeln!(s, "\"><title>{u}-{v}</title></polyline>");
    }
    s.push_str("</g>\n<g class=\"uncrossed\" stroke=\"#1b2631\" stroke-width=\"0.012\">\n");
    for &(u, v) in &scene.solid {
        let (p, q) = (scene.positions[u], scene.positions[v]);
        let _ = writeln!(
            s,
            "<line x1=\"{:.4}\" y1=\"{:.4}\" x2=\"{:.4}\" y2=\"{:.4}\"/>",
            p[0],
            -p[1] + 0.0,
            q[0],
            -q[1] + 0.0
        );
    }
    s.push_str(
        "</g>\n<g class=\"vertices\" fill=\"white\" stroke=\"#1b2631\" stroke-width=\"0.01\">\n",
    );
    for (v, p) in scene.positions.iter().enumerate() {
        let _ = writeln!(
            s,
            "<circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"0.028\"><title>{v}</title></circle>",
            p[0],
            -p[1] + 0.0
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}
