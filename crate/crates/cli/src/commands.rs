use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use uncrossed::bounds::{report_all, BoundReport, BoundValue};
use uncrossed::construction::{check_tightness, construct};
use uncrossed::graph::{parse_edge_list, serialize_edge_list};
use uncrossed::oracle::{exact_h, exact_unc, verify_certificate, SearchLimits};
use uncrossed::{Error, Graph, SubdrawingCertificate};

use crate::format::sig10;
use crate::render::{scene_from_json, to_svg};
use crate::sweep::{compare_bounds, verify_tightness, CompareRow, TightnessRow};
use crate::{Command, Failure, OracleArgs, EXIT_INTEGRITY};

pub fn dispatch(cmd: Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Bounds {
            input,
            triangle_free_check,
            out,
        } => bounds(&input, triangle_free_check, out.as_deref(), stdout),
        Command::Construct {
            epsilon,
            n,
            out,
            svg,
        } => {
            let rec = construct(epsilon, n)?;
            let tight = check_tightness(&rec)?;
            fs::create_dir_all(&out).map_err(|e| Failure::io(&out, e))?;
            write_file(&out.join("record.json"), &pretty(&rec))?;
            write_file(&out.join("graph.txt"), &serialize_edge_list(&rec.graph))?;
            write_file(&out.join("tightness.json"), &pretty(&tight))?;
            if svg {
                let scene = crate::render::record_scene(&rec)?;
                write_file(&out.join("construction.svg"), &to_svg(&scene))?;
            }
            emit(
                stdout,
                &format!(
                    "epsilon={} n={} x={} m={} m_prime={} lower={} upper={}\n",
                    epsilon,
                    rec.n,
                    rec.x,
                    rec.stats.m,
                    rec.stats.m_prime,
                    sig10(tight.lower),
                    sig10(tight.upper)
                ),
            )
        }
        Command::OracleH(args) => {
            let (g, limits) = oracle_input(&args, 8)?;
            let (h, cert) = exact_h(&g, limits)?;
            let result =
                json!({ "n": g.n(), "m": g.m(), "h": h, "certificate": reverified(&cert)? });
            write_or_print(args.out.as_deref(), &pretty(&result), stdout)
        }
        Command::OracleUnc(args) => {
            let (g, limits) = oracle_input(&args, 6)?;
            let r = exact_unc(&g, limits)?;
            let cover = r
                .cover
                .iter()
                .map(reverified)
                .collect::<Result<Vec<_>, _>>()?;
            let result = json!({ "n": g.n(), "m": g.m(), "unc": r.unc, "h": r.h, "cover": cover });
            write_or_print(args.out.as_deref(), &pretty(&result), stdout)
        }
        Command::VerifyTightness { epsilons, ns, out } => {
            let rows = verify_tightness(&epsilons, &ns)?;
            let text = csv_text(&TightnessRow::HEADER, rows.iter().map(TightnessRow::record))?;
            write_or_print(out.as_deref(), &text, stdout)
        }
        Command::CompareBounds { ns, epsilons, out } => {
            let rows = compare_bounds(&ns, &epsilons)?;
            let text = csv_text(&CompareRow::HEADER, rows.iter().map(CompareRow::record))?;
            write_or_print(out.as_deref(), &text, stdout)
        }
        Command::Render { input, out } => {
            let text = fs::read_to_string(&input).map_err(|e| Failure::io(&input, e))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| {
                Failure::from(Error::UnsupportedInput(format!("render input: {e}")))
            })?;
            let scene = scene_from_json(&v)?;
            write_file(&out, &to_svg(&scene))
        }
    }
}

/// Reads an edge list, or a graph JSON object when the file starts with `{`.
pub fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    if text.trim_start().starts_with('{') {
        serde_json::from_str(&text)
            .map_err(|e| Error::UnsupportedInput(format!("graph JSON: {e}")).into())
    } else {
        Ok(parse_edge_list(&text)?)
    }
}

fn bounds(
    input: &Path,
    triangle_free_check: bool,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let g = read_graph(input)?;
    if !g.is_connected() {
        return Err(Error::UnsupportedInput("bounds need a connected graph".into()).into());
    }
    if triangle_free_check && !g.is_triangle_free() {
        return Err(Error::NotApplicable(
            "--triangle-free-check: graph contains a triangle".into(),
        )
        .into());
    }
    let rows = report_all(&g)?;
    let text = csv_text(
        &["name", "value", "applicable", "k", "alpha", "reason"],
        rows.iter().map(bound_record),
    )?;
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
        write_file(&dir.join("bounds.csv"), &text)?;
        let doc = json!({ "n": g.n(), "m": g.m(), "rows": rows });
        write_file(&dir.join("bounds.json"), &pretty(&doc))?;
    }
    emit(stdout, &text)
}

fn bound_record(r: &BoundReport) -> Vec<String> {
    vec![
        r.name.clone(),
        match r.value {
            Some(BoundValue::Integer(v)) => v.to_string(),
            Some(BoundValue::Real(v)) => sig10(v),
            None => String::new(),
        },
        r.applicable.to_string(),
        r.k().map(|k| k.to_string()).unwrap_or_default(),
        r.alpha().map(sig10).unwrap_or_default(),
        r.reason.clone().unwrap_or_default(),
    ]
}

fn oracle_input(args: &OracleArgs, default_max_n: usize) -> Result<(Graph, SearchLimits), Failure> {
    let limits = SearchLimits {
        max_n: args.max_n.unwrap_or(default_max_n),
        max_rotation_budget: args.budget,
        time_budget: match args.time_limit {
            Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => {
                return Err(Error::InvalidParameter(format!(
                    "time limit must be positive, got {s}"
                ))
                .into())
            }
            None => None,
        },
    };
    limits.validate()?;
    Ok((read_graph(&args.input)?, limits))
}

/// Round-trips a certificate through JSON and verifies the copy.
fn reverified(cert: &SubdrawingCertificate) -> Result<Value, Failure> {
    let v = serde_json::to_value(cert).expect("certificates serialise");
    let back: SubdrawingCertificate = serde_json::from_value(v.clone())
        .map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    if !verify_certificate(&back)? {
        return Err(Failure {
            code: EXIT_INTEGRITY,
            message: "witness failed verification after serialisation".into(),
        });
    }
    Ok(v)
}

fn csv_text(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| Failure {
        code: EXIT_INTEGRITY,
        message: e.to_string(),
    };
    w.write_record(header).map_err(fail)?;
    for r in rows {
        w.write_record(&r).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure {
        code: EXIT_INTEGRITY,
        message: e.to_string(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output types serialise");
    s.push('\n');
    s
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| Failure::io(Path::new("<stdout>"), e))
}

fn write_or_print(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => write_file(p, text),
        None => emit(stdout, text),
    }
}
