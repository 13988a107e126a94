use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use evohab_core::benchmarks::{
    self, Benchmark, BenchmarkCase, BenchmarkError, CONSTRAINED, UNCONSTRAINED,
};
use evohab_core::cdhs::{self, CdhsError, CdhsResult, WeightPair};
use evohab_core::{ga, nsga2, GaConfig, Individual};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, CatalogError, ColumnMapping};
use crate::cli::{BenchArgs, CdhsArgs, Failure, MoArgs, Mode, ReportArgs, Status};
use crate::manifest::{RunManifest, MANIFEST_SUFFIX};
use crate::output::{csv_bytes, json_bytes, slug, write_atomic};
use crate::report::{build_report, BenchRow, CdhsRecord, ReportError, REPORT_FILE};

type CmdResult = Result<Status, Failure>;

/// Aligned plain-text table with two spaces between columns.
fn text_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn validated(config: GaConfig) -> Result<GaConfig, Failure> {
    config
        .validate()
        .map_err(|e| Failure::new(Status::Usage, e))?;
    Ok(config)
}

fn args_seed_config(ga: &crate::cli::GaArgs) -> Result<GaConfig, Failure> {
    if !ga.sigma_fraction.is_finite() {
        return Err(Failure::usage("--sigma-fraction must be finite"));
    }
    validated(ga.config())
}

fn write_manifest(path: &Path, manifest: &RunManifest) -> Result<(), Failure> {
    manifest
        .write(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default()
}

// ---- bench ----

fn best_of(
    case: &BenchmarkCase,
    config: &GaConfig,
    restarts: u64,
) -> Result<(Individual, u64), Failure> {
    let mut best: Option<(Individual, u64)> = None;
    for r in 0..restarts {
        let seed = config.seed.wrapping_add(r);
        let run = ga::run(&case.problem, &config.clone().with_seed(seed))
            .with_context(|| format!("running {}", case.name))?;
        let better = best.as_ref().is_none_or(|(b, _)| {
            case.problem
                .direction()
                .is_better(run.best.fitness(), b.fitness())
        });
        if better {
            best = Some((run.best, seed));
        }
    }
    Ok(best.expect("restarts is at least 1"))
}

fn bench_row(case: &BenchmarkCase, best: &Individual, seed: u64) -> BenchRow {
    let obtained = best.fitness();
    BenchRow {
        function: case.name.to_string(),
        kind: if case.is_constrained() {
            "constrained"
        } else {
            "unconstrained"
        }
        .to_string(),
        actual: case.published_optimum,
        obtained,
        gap: case.gap(obtained),
        tolerance: case.tolerance,
        passed: case.passes(obtained),
        seed,
        solution: best
            .genes()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    }
}

fn unknown_benchmark(name: &str) -> Failure {
    match benchmarks::single(name) {
        Err(e) => Failure::new(Status::Usage, e),
        Ok(_) => unreachable!("caller checked the name"),
    }
}

pub fn bench(args: &BenchArgs) -> CmdResult {
    let cases: Vec<BenchmarkCase> = if args.function == "all" {
        UNCONSTRAINED
            .into_iter()
            .chain(CONSTRAINED)
            .map(|n| benchmarks::single(n).expect("registered name"))
            .collect()
    } else {
        match benchmarks::lookup(&args.function) {
            Ok(Benchmark::Single(case)) => vec![case],
            Ok(Benchmark::Multi(_)) => {
                return Err(Failure::usage(format!(
                    "`{0}` is multi-objective; run `evohab mo {0}` instead",
                    args.function
                )))
            }
            Err(_) => return Err(unknown_benchmark(&args.function)),
        }
    };
    if args.restarts == 0 {
        return Err(Failure::usage("--restarts must be at least 1"));
    }
    let config = args_seed_config(&args.ga)?;

    let started = Instant::now();
    // Collecting a parallel iterator keeps registry order.
    let rows: Vec<BenchRow> = cases
        .par_iter()
        .map(|case| {
            best_of(case, &config, args.restarts).map(|(best, seed)| bench_row(case, &best, seed))
        })
        .collect::<Result<_, _>>()?;
    let wall = started.elapsed().as_secs_f64();

    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.function.clone(),
                r.kind.clone(),
                format!("{}", r.actual),
                format!("{:.6}", r.obtained),
                format!("{:.3e}", r.gap),
                format!("{}", r.tolerance),
                if r.passed { "pass" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    print!(
        "{}",
        text_table(
            &[
                "function",
                "type",
                "actual",
                "obtained",
                "gap",
                "tolerance",
                "result"
            ],
            &table
        )
    );
    let passed = rows.iter().filter(|r| r.passed).count();
    println!("summary: {passed}/{} within tolerance", rows.len());

    if let Some(dir) = &args.out {
        let mut outputs = Vec::new();
        for row in &rows {
            let name = format!("bench-{}.csv", row.function);
            write_atomic(&dir.join(&name), &csv_bytes(std::slice::from_ref(row))?)?;
            outputs.push(name);
        }
        let metrics = BTreeMap::from([
            ("passed".to_string(), passed as f64),
            ("cases".to_string(), rows.len() as f64),
        ]);
        let manifest = RunManifest {
            command: "bench".into(),
            target: args.function.clone(),
            config: config.clone(),
            seed: config.seed,
            inputs: Vec::new(),
            outputs,
            metrics,
            wall_time_seconds: wall,
        };
        write_manifest(
            &dir.join(format!("bench-{}{MANIFEST_SUFFIX}", args.function)),
            &manifest,
        )?;
    }
    Ok(if passed == rows.len() {
        Status::Success
    } else {
        Status::Tolerance
    })
}

// ---- mo ----

#[derive(Serialize)]
struct ObjectiveRow {
    f1: f64,
    f2: f64,
}

fn objective_rows(points: &[Vec<f64>]) -> Vec<ObjectiveRow> {
    let mut rows: Vec<ObjectiveRow> = points
        .iter()
        .map(|p| ObjectiveRow { f1: p[0], f2: p[1] })
        .collect();
    rows.sort_by(|a, b| a.f1.total_cmp(&b.f1).then(a.f2.total_cmp(&b.f2)));
    rows
}

/// `front.csv` becomes `front-<suffix>` in the same directory.
fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "front".into());
    path.with_file_name(format!("{stem}-{suffix}"))
}

pub fn mo(args: &MoArgs) -> CmdResult {
    let case = match benchmarks::multi(&args.problem) {
        Ok(case) => case,
        Err(e) if benchmarks::single(&args.problem).is_ok() => {
            return Err(Failure::usage(format!(
                "`{0}` is single-objective; run `evohab bench {0}` instead ({e})",
                args.problem
            )))
        }
        Err(e) => return Err(Failure::new(Status::Usage, e)),
    };
    let config = args_seed_config(&args.ga)?;
    let resolution = args.resolution.unwrap_or(case.reference_front_resolution);
    if resolution < 2 {
        return Err(Failure::usage("--resolution must be at least 2"));
    }

    let started = Instant::now();
    let run = nsga2::nsga2_run(&case.problem, &config)
        .with_context(|| format!("running {}", case.name))?;
    let obtained = run.front.objective_vectors();
    let reference = benchmarks::reference_front_at(&case.problem, resolution);
    let igd = benchmarks::igd(&obtained, &reference)
        .map_err(|e: BenchmarkError| Failure::new(Status::Failure, e))?;
    let wall = started.elapsed().as_secs_f64();
    let passed = igd <= case.igd_threshold;

    println!("problem           {}", case.name);
    println!("front points      {}", obtained.len());
    println!("reference points  {}", reference.len());
    println!(
        "IGD               {igd:.6} (threshold {}) {}",
        case.igd_threshold,
        if passed { "pass" } else { "FAIL" }
    );

    let front_path = args
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}-front.csv", case.name)));
    let reference_path = sibling(&front_path, "reference.csv");
    write_atomic(&front_path, &csv_bytes(&objective_rows(&obtained))?)?;
    write_atomic(&reference_path, &csv_bytes(&objective_rows(&reference))?)?;
    let metrics = BTreeMap::from([
        ("igd".to_string(), igd),
        ("igd_threshold".to_string(), case.igd_threshold),
        ("front_points".to_string(), obtained.len() as f64),
        ("reference_points".to_string(), reference.len() as f64),
        ("resolution".to_string(), resolution as f64),
    ]);
    let manifest = RunManifest {
        command: "mo".into(),
        target: case.name.to_string(),
        config: config.clone(),
        seed: config.seed,
        inputs: Vec::new(),
        outputs: vec![file_name(&front_path), file_name(&reference_path)],
        metrics,
        wall_time_seconds: wall,
    };
    let stem_path = front_path.with_extension("");
    write_manifest(
        &PathBuf::from(format!("{}{MANIFEST_SUFFIX}", stem_path.display())),
        &manifest,
    )?;
    Ok(if passed {
        Status::Success
    } else {
        Status::Tolerance
    })
}

// ---- cdhs ----

#[derive(Serialize)]
struct FrontRow {
    y_interior: f64,
    y_surface: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    delta: f64,
    c: f64,
}

#[derive(Serialize)]
struct SweepRow {
    w_interior: f64,
    combined: f64,
}

fn catalog_failure(e: CatalogError) -> Failure {
    let status = match e {
        CatalogError::Csv(_) => Status::Failure,
        _ => Status::Usage,
    };
    Failure::new(status, e)
}

fn cdhs_failure(planet: &str, e: CdhsError) -> Failure {
    let status = match e {
        CdhsError::InfeasibleCoupling => Status::Infeasible,
        CdhsError::DomainError { .. } | CdhsError::InvalidWeights { .. } | CdhsError::ZeroSteps => {
            Status::Usage
        }
        CdhsError::Evo(evohab_core::EvoError::InvalidConfig(_)) => Status::Usage,
        _ => Status::Failure,
    };
    Failure::new(
        status,
        anyhow::Error::new(e).context(format!("scoring {planet}")),
    )
}

fn write_cdhs_artifacts(
    dir: &Path,
    record: &CdhsRecord,
    args: &CdhsArgs,
) -> Result<Vec<String>, Failure> {
    let base = format!("cdhs-{}-{}", slug(&record.planet), record.mode);
    let mut outputs = Vec::new();
    let json_name = format!("{base}.json");
    write_atomic(&dir.join(&json_name), &json_bytes(record)?)?;
    outputs.push(json_name);

    if let Some(front) = &record.result.front {
        let mut rows: Vec<FrontRow> = front
            .iter()
            .map(|m| FrontRow {
                y_interior: m.y_interior,
                y_surface: m.y_surface,
                alpha: m.elasticities.alpha,
                beta: m.elasticities.beta,
                gamma: m.elasticities.gamma,
                delta: m.elasticities.delta,
                c: m.coupling_c,
            })
            .collect();
        rows.sort_by(|a, b| {
            a.y_interior
                .total_cmp(&b.y_interior)
                .then(a.y_surface.total_cmp(&b.y_surface))
        });
        let front_name = format!("{base}-front.csv");
        write_atomic(&dir.join(&front_name), &csv_bytes(&rows)?)?;
        outputs.push(front_name);

        let scores = record.result.front_scores().unwrap_or_default();
        let sweep = cdhs::weight_sweep(&scores, args.sweep_steps)
            .map_err(|e| cdhs_failure(&record.planet, e))?;
        let rows: Vec<SweepRow> = sweep
            .into_iter()
            .map(|(w_interior, combined)| SweepRow {
                w_interior,
                combined,
            })
            .collect();
        let sweep_name = format!("{base}-sweep.csv");
        write_atomic(&dir.join(&sweep_name), &csv_bytes(&rows)?)?;
        outputs.push(sweep_name);
    }
    Ok(outputs)
}

fn result_row(planet: &str, mode: Mode, r: &CdhsResult) -> Vec<String> {
    let e = &r.elasticities;
    vec![
        planet.to_string(),
        mode.as_str().to_string(),
        format!("{:.4}", r.interior_score),
        format!("{:.4}", r.surface_score),
        format!("{:.4}", r.combined),
        format!("{:.4}", e.alpha),
        format!("{:.4}", e.beta),
        format!("{:.4}", e.gamma),
        format!("{:.4}", e.delta),
        r.coupling_c.map_or("-".into(), |c| format!("{c:.4}")),
    ]
}

pub fn cdhs(args: &CdhsArgs) -> CmdResult {
    let mut mapping = ColumnMapping::default();
    if let Some(path) = &args.mapping {
        mapping
            .apply_file(path)
            .map_err(|e| Failure::new(Status::Usage, e))?;
    }
    for assignment in &args.columns {
        mapping
            .apply(assignment)
            .map_err(|e| Failure::new(Status::Usage, e))?;
    }
    let weights = WeightPair::new(args.wi).map_err(|e| Failure::new(Status::Usage, e))?;
    if !(args.earth_temp.is_finite() && args.earth_temp > 0.0) {
        return Err(Failure::usage(
            "--earth-temp must be a positive temperature in Kelvin",
        ));
    }
    if args.sweep_steps == 0 {
        return Err(Failure::new(Status::Usage, CdhsError::ZeroSteps));
    }
    let config = args_seed_config(&args.ga)?;

    let (records, load_report) =
        catalog::load_catalog(&args.catalog, &mapping).map_err(catalog_failure)?;
    for skipped in &load_report.skipped {
        eprintln!(
            "warning: skipped catalog row {}: {}",
            skipped.row, skipped.reason
        );
    }
    let selected = if args.planets.is_empty() {
        records.clone()
    } else {
        let selection = catalog::select_planets(&records, &args.planets);
        if !selection.not_found.is_empty() {
            let available: Vec<&str> = records.iter().map(|r| r.name.as_str()).collect();
            return Err(Failure::usage(format!(
                "planet(s) not found: {}; catalog has: {}",
                selection.not_found.join(", "),
                available.join(", ")
            )));
        }
        selection.found
    };
    if selected.is_empty() {
        return Err(Failure::usage(format!(
            "no planets in {}",
            args.catalog.display()
        )));
    }

    let mut table = Vec::new();
    for record in &selected {
        let params = catalog::to_planet_params(record, args.earth_temp).map_err(|e| {
            Failure::new(
                Status::Usage,
                anyhow::Error::new(e).context(record.name.clone()),
            )
        })?;
        let started = Instant::now();
        let result = match args.mode {
            Mode::Bi => cdhs::optimize_cdhs_bi(&params, &weights, &config, args.c_max),
            Mode::Single => cdhs::optimize_cdhs_single(&params, &weights, &config),
        }
        .map_err(|e| cdhs_failure(&record.name, e))?;
        let wall = started.elapsed().as_secs_f64();
        table.push(result_row(&record.name, args.mode, &result));

        if let Some(dir) = &args.out {
            let cdhs_record = CdhsRecord {
                planet: record.name.clone(),
                mode: args.mode.as_str().into(),
                params,
                result,
            };
            let outputs = write_cdhs_artifacts(dir, &cdhs_record, args)?;
            let mut metrics = BTreeMap::from([
                ("combined".to_string(), cdhs_record.result.combined),
                ("w_interior".to_string(), weights.w_interior),
            ]);
            if args.mode == Mode::Bi {
                metrics.insert("c_max".into(), args.c_max);
            }
            let manifest = RunManifest {
                command: "cdhs".into(),
                target: record.name.clone(),
                config: config.clone(),
                seed: config.seed,
                inputs: vec![args.catalog.display().to_string()],
                outputs,
                metrics,
                wall_time_seconds: wall,
            };
            let name = format!(
                "cdhs-{}-{}{MANIFEST_SUFFIX}",
                slug(&record.name),
                args.mode.as_str()
            );
            write_manifest(&dir.join(name), &manifest)?;
        }
    }
    print!(
        "{}",
        text_table(
            &["planet", "mode", "Y_i", "Y_s", "Y", "alpha", "beta", "gamma", "delta", "C"],
            &table
        )
    );
    Ok(Status::Success)
}

// ---- report ----

pub fn report(args: &ReportArgs) -> CmdResult {
    if !args.out.is_dir() {
        return Err(Failure::usage(format!(
            "{} is not a directory",
            args.out.display()
        )));
    }
    let text = build_report(&args.out).map_err(|e| match e {
        ReportError::Empty(_) => Failure::new(Status::Usage, e),
        ReportError::Other(inner) => Failure::new(Status::Failure, inner),
    })?;
    write_atomic(&args.out.join(REPORT_FILE), text.as_bytes())?;
    print!("{text}");
    Ok(Status::Success)
}
