//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uncrossed::bounds::{alpha_bound, exact_unc_complete, h_upper, unc_lower_new, unc_lower_old};
use uncrossed::construction::{check_tightness, construct};
use uncrossed::embedding::{face_profile, genus, trace_faces, RotationSystem};
use uncrossed::graph::{
    connected_graphs, make_complete, make_complete_bipartite, make_random_gnm, serialize_edge_list,
};
use uncrossed::oracle::{exact_h, sandwich, verify_certificate, SearchLimits};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_values() -> Outcome {
    let cases = [
        ("K4", make_complete(4).unwrap(), 6, Duration::from_secs(60)),
        ("K5", make_complete(5).unwrap(), 8, Duration::from_secs(60)),
        (
            "K6",
            make_complete(6).unwrap(),
            10,
            Duration::from_secs(1800),
        ),
        (
            "K3,3",
            make_complete_bipartite(3, 3).unwrap(),
            7,
            Duration::from_secs(60),
        ),
    ];
    let mut notes = Vec::new();
    for (name, g, want, limit) in cases {
        let start = Instant::now();
        let (h, cert) = exact_h(&g, SearchLimits::default()).map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        ensure(h == want, || format!("h({name}) = {h}, expected {want}"))?;
        ensure(verify_certificate(&cert).unwrap(), || {
            format!("{name}: witness fails")
        })?;
        ensure(took <= limit, || format!("{name} took {took:?}"))?;
        notes.push(format!("h({name})={h} in {:.0?}", took));
    }
    Ok(notes.join(", "))
}

fn construction_identities() -> Outcome {
    let mut rows = 0;
    for i in 3..=9 {
        let eps = Ratio::new(i, 20);
        for n in [20usize, 40, 80] {
            let rec = construct(eps, n).map_err(|e| format!("ε={eps}, n={n}: {e}"))?;
            let (x, s) = (rec.x as i64, &rec.stats);
            let ni = n as i64;
            ensure(s.m as i64 == 3 * ni - 3 + x * (x - 5) / 2, || {
                format!("m at ε={eps}, n={n}")
            })?;
            ensure(s.m_prime as i64 == 3 * ni - 3 - x, || {
                format!("m' at ε={eps}, n={n}")
            })?;
            ensure(s.t as i64 == 2 * ni - 2 - x, || {
                format!("t at ε={eps}, n={n}")
            })?;
            check_tightness(&rec).map_err(|e| format!("ε={eps}, n={n}: {e}"))?;
            ensure(verify_certificate(&rec.certificate).unwrap(), || {
                format!("certificate at ε={eps}, n={n}")
            })?;
            rows += 1;
        }
    }
    let spot = construct(Ratio::new(3, 10), 20).unwrap();
    ensure(
        (spot.x, spot.stats.m, spot.stats.m_prime) == (14, 120, 43),
        || {
            format!(
                "spot (ε=3/10, n=20): x={}, m={}, m'={}",
                spot.x, spot.stats.m, spot.stats.m_prime
            )
        },
    )?;
    Ok(format!("{rows} sweep cells; spot x=14, m=120, m'=43"))
}

fn alpha_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let n = rng.gen_range(4..=10_000usize);
        let m = rng.gen_range(n - 1..=n * (n - 1) / 2);
        let alpha = ((3 * n - 6) as f64 / m as f64).sqrt();
        let a = alpha_bound(n, m, alpha)
            .map_err(|e| format!("n={n}, m={m}: {e}"))?
            .value;
        let diff = (a - h_upper(n, m).unwrap()).abs();
        worst = worst.max(diff);
        ensure(diff <= 1e-9, || {
            format!("n={n}, m={m}: difference {diff:e}")
        })?;
    }
    for n in 3..=10_000usize {
        ensure(h_upper(n, 3 * n - 6).unwrap() == (3 * n - 6) as f64, || {
            format!("h_upper({n}, 3n-6) is not exactly 3n-6")
        })?;
    }
    Ok(format!(
        "1000 pairs, max difference {worst:.1e}; h_upper(n,3n-6)=3n-6 for n≤10^4"
    ))
}

fn corpus_sandwich() -> Outcome {
    let mut graphs = 0;
    let mut k_checks = 0;
    for n in 2..=6 {
        for g in connected_graphs(n) {
            if n == 2 {
                let (h, _) = exact_h(&g, SearchLimits::for_unc()).map_err(|e| e.to_string())?;
                ensure(h == 1, || "h(K2) != 1".into())?;
            } else {
                let row = sandwich(&g, SearchLimits::for_unc()).map_err(|e| e.to_string())?;
                ensure(row.violations.is_empty(), || {
                    format!(
                        "{}: {}",
                        serialize_edge_list(&g).replace('\n', ";"),
                        row.violations.join("; ")
                    )
                })?;
                k_checks += row.k_checked;
            }
            graphs += 1;
        }
    }
    Ok(format!(
        "{graphs} graphs, {k_checks} face-profile checks, zero violations"
    ))
}

fn euler_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut planar = 0;
    for i in 0..10_000 {
        let n = rng.gen_range(3..=12usize);
        let m = rng.gen_range(n - 1..=n * (n - 1) / 2);
        let g = make_random_gnm(n, m, i).unwrap();
        let order = (0..n)
            .map(|v| {
                let mut nb = g.neighbors(v).to_vec();
                nb.shuffle(&mut rng);
                nb
            })
            .collect();
        let r = RotationSystem::new(&g, order).unwrap();
        let fs = trace_faces(&r);
        let total: usize = fs.faces.iter().map(|f| f.len()).sum();
        ensure(total == 2 * m, || {
            format!("sample {i}: Σ|F| = {total} != 2m")
        })?;
        if g.is_connected() {
            let gen = genus(&r).unwrap();
            let chi = n as i64 - m as i64 + fs.len() as i64;
            ensure(chi == 2 - 2 * gen as i64, || {
                format!("sample {i}: non-integer genus")
            })?;
            if gen == 0 {
                let sum = face_profile(&fs).unwrap().euler_sum();
                ensure(sum == 2 * n - 4, || {
                    format!("sample {i}: Σ(ℓ-2)s_ℓ = {sum}")
                })?;
                planar += 1;
            }
        }
    }
    Ok(format!("10^4 samples, {planar} planar"))
}

fn dense_asymptotics() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for n in [1_000usize, 10_000] {
        let m = n * (n - 1) / 2;
        let new = unc_lower_new(n, m).unwrap();
        let old = unc_lower_old(n, m).unwrap();
        let ratio = new as f64 / exact_unc_complete(n).unwrap() as f64;
        ensure((0.95..=1.0).contains(&ratio), || {
            format!("K_{n}: ratio {ratio}")
        })?;
        ensure(new >= old, || format!("K_{n}: new {new} < old {old}"))?;
        notes.push(format!("K_{n} ratio {ratio:.4}"));
    }
    let n = 1_000_000usize;
    for i in 1..=4 {
        let eps = i as f64 / 10.0;
        let m = (n * n / 10) * i;
        let ratio = h_upper(n, m).unwrap() / ((3.0 - (2.0 * eps).sqrt()) * n as f64);
        ensure((0.99..=1.01).contains(&ratio), || {
            format!("ε={eps}: ratio {ratio}")
        })?;
    }
    notes.push(format!(
        "n=10^6 denominators within 1%, {:.1?}",
        start.elapsed()
    ));
    Ok(notes.join(", "))
}

fn run_cli(args: &[&str], cwd: &Path) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_uncrossed"))
        .args(args)
        .current_dir(cwd)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn snapshot(dir: &Path) -> Vec<(PathBuf, Vec<u8>)> {
    let mut files: Vec<_> = walk(dir)
        .into_iter()
        .map(|p| {
            (
                p.strip_prefix(dir).unwrap().to_path_buf(),
                std::fs::read(&p).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

fn walk(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else {
            out.push(p);
        }
    }
    out
}

fn determinism() -> Outcome {
    let runs: Vec<Vec<&str>> = vec![
        vec!["bounds", "--in", "k5.txt", "--out", "b"],
        vec![
            "construct",
            "--epsilon",
            "3/10",
            "--n",
            "20",
            "--out",
            "c",
            "--svg",
        ],
        vec!["oracle-h", "--in", "k5.txt", "--out", "h.json"],
        vec!["oracle-unc", "--in", "k5.txt", "--out", "u.json"],
        vec!["verify-tightness", "--out", "vt.csv"],
        vec!["compare-bounds", "--ns", "10,1000", "--out", "cb.csv"],
        vec!["render", "--in", "c/record.json", "--out", "r1.svg"],
        vec!["render", "--in", "h.json", "--out", "r2.svg"],
    ];
    let mut snaps = Vec::new();
    for _ in 0..2 {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        std::fs::write(
            dir.path().join("k5.txt"),
            serialize_edge_list(&make_complete(5).unwrap()),
        )
        .unwrap();
        let mut stdout = Vec::new();
        for args in &runs {
            stdout.push(run_cli(args, dir.path())?);
        }
        snaps.push((stdout, snapshot(dir.path())));
    }
    ensure(snaps[0] == snaps[1], || {
        "outputs differ between identical runs".into()
    })?;
    Ok(format!(
        "{} subcommand runs, {} files byte-identical",
        runs.len(),
        snaps[0].1.len()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("exact values of h for K4, K5, K6, K3,3", exact_values),
        (
            "construction identities and tightness sweep",
            construction_identities,
        ),
        ("alpha instantiation reproduces h_upper", alpha_identity),
        (
            "sandwich on all connected graphs with n <= 6",
            corpus_sandwich,
        ),
        ("Euler and face-length invariants", euler_properties),
        ("dense-regime asymptotics", dense_asymptotics),
        ("deterministic CLI output", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
