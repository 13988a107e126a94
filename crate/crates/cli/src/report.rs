//! Consolidated markdown report built from stored run artifacts.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use evohab_core::benchmarks::{CONSTRAINED, UNCONSTRAINED};
use evohab_core::cdhs::{CdhsResult, PlanetParams};
use serde::{Deserialize, Serialize};

use crate::manifest::{RunManifest, MANIFEST_SUFFIX};

pub const REPORT_FILE: &str = "report.md";

/// One row of a `bench` CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub function: String,
    pub kind: String,
    pub actual: f64,
    pub obtained: f64,
    pub gap: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub seed: u64,
    /// Space-separated decision vector of the best individual.
    pub solution: String,
}

/// JSON artifact of one `cdhs` planet run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CdhsRecord {
    pub planet: String,
    pub mode: String,
    pub params: PlanetParams,
    pub result: CdhsResult,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("no run manifests (*{MANIFEST_SUFFIX}) in {0}")]
    Empty(String),
    #[error(transparent)]
    Other(#[from] anyhow::Error),
}

#[derive(Default)]
struct Collected {
    bench: BTreeMap<String, BenchRow>,
    cdhs: BTreeMap<(String, String), CdhsRecord>,
    mo: BTreeMap<String, BTreeMap<String, f64>>,
    manifests: usize,
}

fn manifest_paths(dir: &Path) -> anyhow::Result<Vec<std::path::PathBuf>> {
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        let is_manifest = path
            .file_name()
            .and_then(|n| n.to_str())
            .is_some_and(|n| n.ends_with(MANIFEST_SUFFIX));
        if is_manifest && path.is_file() {
            paths.push(path);
        }
    }
    paths.sort();
    Ok(paths)
}

fn collect(dir: &Path) -> anyhow::Result<Collected> {
    let mut c = Collected::default();
    for path in manifest_paths(dir)? {
        let manifest = RunManifest::read(&path)?;
        c.manifests += 1;
        match manifest.command.as_str() {
            "bench" => {
                for name in manifest.outputs.iter().filter(|o| o.ends_with(".csv")) {
                    let mut reader = csv::Reader::from_path(dir.join(name))?;
                    for row in reader.deserialize::<BenchRow>() {
                        let row = row?;
                        c.bench.insert(row.function.clone(), row);
                    }
                }
            }
            "cdhs" => {
                for name in manifest.outputs.iter().filter(|o| o.ends_with(".json")) {
                    let record: CdhsRecord =
                        serde_json::from_slice(&std::fs::read(dir.join(name))?)?;
                    c.cdhs
                        .insert((record.planet.clone(), record.mode.clone()), record);
                }
            }
            "mo" => {
                c.mo.insert(manifest.target.clone(), manifest.metrics.clone());
            }
            _ => {}
        }
    }
    Ok(c)
}

fn markdown_table(out: &mut String, headers: &[&str], rows: &[Vec<String>]) {
    let _ = writeln!(out, "| {} |", headers.join(" | "));
    let _ = writeln!(
        out,
        "|{}",
        headers.iter().map(|_| "---|").collect::<String>()
    );
    if rows.is_empty() {
        let _ = writeln!(
            out,
            "| _no runs recorded_ |{}",
            " |".repeat(headers.len() - 1)
        );
    }
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out.push('\n');
}

fn bench_rows(bench: &BTreeMap<String, BenchRow>, names: &[&str]) -> Vec<Vec<String>> {
    names
        .iter()
        .filter_map(|n| bench.get(*n))
        .map(|r| {
            vec![
                r.function.clone(),
                format!("{}", r.actual),
                format!("{:.6}", r.obtained),
                format!("{:.2e}", r.gap),
                format!("{}", r.tolerance),
                if r.passed { "pass" } else { "FAIL" }.to_string(),
            ]
        })
        .collect()
}

/// Renders the report text from the artifacts in `dir`.
pub fn build_report(dir: &Path) -> Result<String, ReportError> {
    let c = collect(dir)?;
    if c.manifests == 0 {
        return Err(ReportError::Empty(dir.display().to_string()));
    }
    let mut out = String::from("# evohab run report\n\n");
    let _ = writeln!(out, "Built from {} run manifest(s).\n", c.manifests);

    let bench_headers = [
        "Function",
        "Actual",
        "Obtained",
        "Gap",
        "Tolerance",
        "Result",
    ];
    out.push_str("## Table 1. Unconstrained benchmarks\n\n");
    markdown_table(
        &mut out,
        &bench_headers,
        &bench_rows(&c.bench, &UNCONSTRAINED),
    );
    out.push_str("## Table 2. Constrained benchmarks\n\n");
    markdown_table(
        &mut out,
        &bench_headers,
        &bench_rows(&c.bench, &CONSTRAINED),
    );

    let mut planets: Vec<&String> = c.cdhs.keys().map(|(p, _)| p).collect();
    planets.dedup();

    out.push_str("## Table 3. Bi-objective CDHS\n\n");
    let rows: Vec<Vec<String>> = planets
        .iter()
        .filter_map(|p| c.cdhs.get(&((*p).clone(), "bi".to_string())))
        .map(|r| {
            let e = &r.result.elasticities;
            vec![
                r.planet.clone(),
                format!("{:.4}", r.result.interior_score),
                format!("{:.4}", r.result.surface_score),
                format!("{:.4}", r.result.combined),
                format!("{:.4}", e.alpha),
                format!("{:.4}", e.beta),
                format!("{:.4}", e.gamma),
                format!("{:.4}", e.delta),
                r.result
                    .coupling_c
                    .map_or("-".into(), |v| format!("{v:.4}")),
            ]
        })
        .collect();
    markdown_table(
        &mut out,
        &[
            "Planet", "Y_i", "Y_s", "CDHS", "alpha", "beta", "gamma", "delta", "C",
        ],
        &rows,
    );

    out.push_str("## Table 4. Bi-objective vs single-objective CDHS\n\n");
    let rows: Vec<Vec<String>> = planets
        .iter()
        .map(|p| {
            let get = |mode: &str| {
                c.cdhs
                    .get(&((*p).clone(), mode.to_string()))
                    .map(|r| r.result.combined)
            };
            let (bi, single) = (get("bi"), get("single"));
            let fmt = |v: Option<f64>| v.map_or("-".into(), |v| format!("{v:.4}"));
            let diff = match (bi, single) {
                (Some(b), Some(s)) => format!("{:.4}", (b - s).abs()),
                _ => "-".into(),
            };
            vec![(*p).clone(), fmt(bi), fmt(single), diff]
        })
        .collect();
    markdown_table(
        &mut out,
        &["Planet", "CDHS (bi)", "CDHS (single)", "Abs. difference"],
        &rows,
    );

    if !c.mo.is_empty() {
        out.push_str("## Multi-objective fronts\n\n");
        let rows: Vec<Vec<String>> =
            c.mo.iter()
                .map(|(name, m)| {
                    let get = |k: &str| m.get(k).map_or("-".into(), |v| format!("{v}"));
                    let igd = m.get("igd").map_or("-".into(), |v| format!("{v:.4}"));
                    let verdict = match (m.get("igd"), m.get("igd_threshold")) {
                        (Some(i), Some(t)) if i <= t => "pass",
                        (Some(_), Some(_)) => "FAIL",
                        _ => "-",
                    };
                    vec![
                        name.clone(),
                        get("front_points"),
                        get("reference_points"),
                        igd,
                        get("igd_threshold"),
                        verdict.into(),
                    ]
                })
                .collect();
        markdown_table(
            &mut out,
            &[
                "Problem",
                "Front points",
                "Reference points",
                "IGD",
                "Threshold",
                "Result",
            ],
            &rows,
        );
    }
    while out.ends_with("\n\n") {
        out.pop();
    }
    Ok(out)
}
