//! Registry of the benchmark problems.
//!
//! Sixteen single-objective cases (eleven box-bounded, five with extra
//! constraints) and six two-objective cases. All are two-variable problems
//! except Schaffer N.1, which has one decision variable.
//!
//! Each single-objective case records two optimum values: the exact value
//! at the canonical minimizer (`known_optimum_value`) and the rounded value
//! usually quoted in comparison tables (`published_optimum`). Tolerances are
//! applied against the published value.

mod front;
pub mod functions;

// Resolves float math when std is not linked.
use alloc::{string::String, vec, vec::Vec};
use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

pub use front::{igd, reference_front, reference_front_at};

use crate::nsga2::MultiObjectiveProblem;
use crate::{Constraint, Direction, OptimizationProblem, SearchDomain};
use functions as f;

pub const UNCONSTRAINED: [&str; 11] = [
    "easom",
    "rastrigin",
    "ackley",
    "beale",
    "goldstein-price",
    "mishra4",
    "cross-in-tray",
    "eggholder",
    "holder-table",
    "mccormick",
    "schaffer4",
];

pub const CONSTRAINED: [&str; 5] = [
    "rosenbrock-cubic-line",
    "rosenbrock-disk",
    "mishra-bird",
    "townsend",
    "simionescu",
];

pub const MULTI_OBJECTIVE: [&str; 6] = [
    "poloni",
    "schaffer1",
    "ctp1",
    "constr-ex",
    "binh-korn",
    "chakong-haimes",
];

/// Default acceptance gap against the published optimum.
pub const DEFAULT_TOLERANCE: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BenchmarkError {
    #[error("unknown benchmark `{name}`; valid names: {valid}")]
    UnknownBenchmark { name: String, valid: String },
    #[error("benchmark `{0}` has no known optimum location")]
    NoKnownLocation(String),
    #[error("IGD needs non-empty obtained and reference sets")]
    EmptySet,
}

/// A single-objective test problem with its known minimum.
#[derive(Debug, Clone)]
pub struct BenchmarkCase {
    pub name: &'static str,
    pub problem: OptimizationProblem,
    pub known_optimum_value: f64,
    pub published_optimum: f64,
    pub tolerance: f64,
    pub known_optimum_location: Option<Vec<f64>>,
}

impl BenchmarkCase {
    pub fn is_constrained(&self) -> bool {
        !self.problem.constraints().is_empty()
    }

    /// Absolute distance of `obtained` from the published optimum.
    pub fn gap(&self, obtained: f64) -> f64 {
        (obtained - self.published_optimum).abs()
    }

    pub fn passes(&self, obtained: f64) -> bool {
        self.gap(obtained) <= self.tolerance
    }
}

/// A two-objective test problem plus the settings of its grid reference front.
#[derive(Debug, Clone)]
pub struct MoBenchmarkCase {
    pub name: &'static str,
    pub problem: MultiObjectiveProblem,
    /// Grid points per decision dimension.
    pub reference_front_resolution: usize,
    /// Largest acceptable IGD against the reference front.
    pub igd_threshold: f64,
}

#[derive(Debug, Clone)]
pub enum Benchmark {
    Single(BenchmarkCase),
    Multi(MoBenchmarkCase),
}

impl Benchmark {
    pub fn name(&self) -> &'static str {
        match self {
            Benchmark::Single(c) => c.name,
            Benchmark::Multi(c) => c.name,
        }
    }
}

/// Every registered name: unconstrained, constrained, then multi-objective.
pub fn names() -> impl Iterator<Item = &'static str> {
    UNCONSTRAINED
        .into_iter()
        .chain(CONSTRAINED)
        .chain(MULTI_OBJECTIVE)
}

fn unknown(name: &str) -> BenchmarkError {
    let valid: Vec<&str> = names().collect();
    BenchmarkError::UnknownBenchmark {
        name: name.into(),
        valid: valid.join(", "),
    }
}

pub fn lookup(name: &str) -> Result<Benchmark, BenchmarkError> {
    if let Some(case) = single_case(name) {
        return Ok(Benchmark::Single(case));
    }
    multi_case(name)
        .map(Benchmark::Multi)
        .ok_or_else(|| unknown(name))
}

/// Looks up a single-objective case only.
pub fn single(name: &str) -> Result<BenchmarkCase, BenchmarkError> {
    single_case(name).ok_or_else(|| unknown(name))
}

/// Looks up a multi-objective case only.
pub fn multi(name: &str) -> Result<MoBenchmarkCase, BenchmarkError> {
    multi_case(name).ok_or_else(|| unknown(name))
}

/// Objective value at the case's canonical minimizer.
pub fn evaluate_at_optimum(case: &BenchmarkCase) -> Result<f64, BenchmarkError> {
    case.known_optimum_location
        .as_deref()
        .map(|x| case.problem.evaluate(x))
        .ok_or_else(|| BenchmarkError::NoKnownLocation(case.name.into()))
}

fn square(lo: f64, hi: f64) -> SearchDomain {
    SearchDomain::cube(2, lo, hi).expect("static domain")
}

fn rect(x: (f64, f64), y: (f64, f64)) -> SearchDomain {
    SearchDomain::new(vec![x.0, y.0], vec![x.1, y.1]).expect("static domain")
}

struct CaseDef {
    domain: SearchDomain,
    objective: fn(&[f64]) -> f64,
    known: f64,
    published: f64,
    tolerance: f64,
    location: [f64; 2],
}

fn case(name: &'static str, def: CaseDef, constraints: Vec<Constraint>) -> BenchmarkCase {
    let mut problem = OptimizationProblem::new(def.domain, Direction::Minimize, def.objective);
    for c in constraints {
        problem = problem.with_constraint(c);
    }
    BenchmarkCase {
        name,
        problem,
        known_optimum_value: def.known,
        published_optimum: def.published,
        tolerance: def.tolerance,
        known_optimum_location: Some(def.location.to_vec()),
    }
}

fn single_case(name: &str) -> Option<BenchmarkCase> {
    let tol = DEFAULT_TOLERANCE;
    let built = match name {
        "easom" => case(
            "easom",
            CaseDef {
                domain: square(-100.0, 100.0),
                objective: f::easom,
                known: -1.0,
                published: -1.0,
                tolerance: tol,
                location: [PI, PI],
            },
            vec![],
        ),
        "rastrigin" => case(
            "rastrigin",
            CaseDef {
                domain: square(-5.12, 5.12),
                objective: f::rastrigin,
                known: 0.0,
                published: 0.0,
                tolerance: tol,
                location: [0.0, 0.0],
            },
            vec![],
        ),
        "ackley" => case(
            "ackley",
            CaseDef {
                domain: square(-5.0, 5.0),
                objective: f::ackley,
                known: 0.0,
                published: 0.0,
                tolerance: 2e-2,
                location: [0.0, 0.0],
            },
            vec![],
        ),
        "beale" => case(
            "beale",
            CaseDef {
                domain: square(-4.5, 4.5),
                objective: f::beale,
                known: 0.0,
                published: 0.0,
                tolerance: tol,
                location: [3.0, 0.5],
            },
            vec![],
        ),
        "goldstein-price" => case(
            "goldstein-price",
            CaseDef {
                domain: square(-2.0, 2.0),
                objective: f::goldstein_price,
                known: 3.0,
                published: 3.0,
                tolerance: tol,
                location: [0.0, -1.0],
            },
            vec![],
        ),
        "mishra4" => case(
            "mishra4",
            CaseDef {
                domain: square(-10.0, 10.0),
                objective: f::mishra4,
                known: -0.199_411_488_073_463_7,
                published: -0.199,
                tolerance: tol,
                location: [-(9.0 * PI * PI + 10.0).sqrt(), -10.0],
            },
            vec![],
        ),
        "cross-in-tray" => case(
            "cross-in-tray",
            CaseDef {
                domain: square(-10.0, 10.0),
                objective: f::cross_in_tray,
                known: -2.062_611_870_822_74,
                published: -2.06,
                tolerance: tol,
                location: [1.349_406_616_242_184_5, 1.349_406_650_276_671_5],
            },
            vec![],
        ),
        "eggholder" => case(
            "eggholder",
            CaseDef {
                domain: square(-512.0, 512.0),
                objective: f::eggholder,
                known: -959.640_662_720_850_7,
                published: -959.64,
                tolerance: 1.0,
                location: [512.0, 404.231_804_993_864_6],
            },
            vec![],
        ),
        "holder-table" => case(
            "holder-table",
            CaseDef {
                domain: square(-10.0, 10.0),
                objective: f::holder_table,
                known: -19.208_502_567_886_747,
                published: -19.208,
                tolerance: tol,
                location: [8.055_023_471_206_848, 9.664_590_017_303_397],
            },
            vec![],
        ),
        "mccormick" => case(
            "mccormick",
            CaseDef {
                domain: rect((-1.5, 4.0), (-3.0, 4.0)),
                objective: f::mccormick,
                // -sqrt(3)/2 - pi/3 at (1/2 - pi/3, -1/2 - pi/3)
                known: -(3.0_f64.sqrt()) / 2.0 - PI / 3.0,
                published: -1.913,
                tolerance: tol,
                location: [0.5 - PI / 3.0, -0.5 - PI / 3.0],
            },
            vec![],
        ),
        "schaffer4" => case(
            "schaffer4",
            CaseDef {
                domain: square(-100.0, 100.0),
                objective: f::schaffer4,
                known: 0.292_578_632_035_980_45,
                published: 0.292,
                tolerance: tol,
                location: [0.0, 1.253_131_828_927_371_4],
            },
            vec![],
        ),
        "rosenbrock-cubic-line" => case(
            "rosenbrock-cubic-line",
            CaseDef {
                domain: rect((-1.5, 1.5), (-0.5, 2.5)),
                objective: f::rosenbrock,
                known: 0.0,
                published: 0.0,
                tolerance: tol,
                location: [1.0, 1.0],
            },
            vec![
                Constraint::new("(x-1)^3 - y + 1 <= 0", |v| {
                    (v[0] - 1.0).powi(3) - v[1] + 1.0 <= 0.0
                }),
                Constraint::new("x + y - 2 <= 0", |v| v[0] + v[1] - 2.0 <= 0.0),
            ],
        ),
        "rosenbrock-disk" => case(
            "rosenbrock-disk",
            CaseDef {
                domain: square(-1.5, 1.5),
                objective: f::rosenbrock,
                known: 0.0,
                published: 0.0,
                tolerance: tol,
                location: [1.0, 1.0],
            },
            vec![Constraint::new("x^2 + y^2 <= 2", |v| {
                v[0] * v[0] + v[1] * v[1] <= 2.0
            })],
        ),
        "mishra-bird" => case(
            "mishra-bird",
            CaseDef {
                domain: rect((-10.0, 0.0), (-6.5, 0.0)),
                objective: f::mishra_bird,
                known: -106.764_536_749_264_75,
                published: -106.76,
                tolerance: 0.05,
                location: [-3.130_246_806_450_589_5, -1.582_142_173_867_167_5],
            },
            vec![Constraint::new("(x+5)^2 + (y+5)^2 < 25", |v| {
                (v[0] + 5.0).powi(2) + (v[1] + 5.0).powi(2) < 25.0
            })],
        ),
        // Modified Townsend: the feasible region is a heart-shaped curve in
        // polar form, which gives the -2.02 minimum.
        "townsend" => case(
            "townsend",
            CaseDef {
                domain: rect((-2.25, 2.25), (-2.5, 1.75)),
                objective: f::townsend,
                known: -2.023_988_304_979_936_5,
                published: -2.02,
                tolerance: tol,
                location: [2.005_293_8, 1.194_450_9],
            },
            vec![Constraint::new("x^2 + y^2 < r(atan2(x, y))^2", |v| {
                v[0] * v[0] + v[1] * v[1] < f::townsend_radius_sq(v)
            })],
        ),
        "simionescu" => case(
            "simionescu",
            CaseDef {
                domain: square(-1.25, 1.25),
                objective: f::simionescu,
                known: -0.072,
                published: -0.072,
                tolerance: tol,
                // Nudged inside the flower boundary, which passes through the exact minimizer.
                location: [
                    0.848_528_137_423_857 * (1.0 - 1e-12),
                    -0.848_528_137_423_857 * (1.0 - 1e-12),
                ],
            },
            vec![Constraint::new(
                "x^2 + y^2 <= (1 + 0.2 cos(8 atan(x/y)))^2",
                |v| v[0] * v[0] + v[1] * v[1] <= f::simionescu_radius_sq(v),
            )],
        ),
        _ => return None,
    };
    Some(built)
}

fn mo(
    name: &'static str,
    domain: SearchDomain,
    f1: fn(&[f64]) -> f64,
    f2: fn(&[f64]) -> f64,
    constraints: Vec<Constraint>,
    resolution: usize,
    igd_threshold: f64,
) -> MoBenchmarkCase {
    let mut problem = MultiObjectiveProblem::new(domain)
        .with_objective(Direction::Minimize, f1)
        .with_objective(Direction::Minimize, f2);
    for c in constraints {
        problem = problem.with_constraint(c);
    }
    MoBenchmarkCase {
        name,
        problem,
        reference_front_resolution: resolution,
        igd_threshold,
    }
}

fn first(v: &[f64]) -> f64 {
    v[0]
}

fn multi_case(name: &str) -> Option<MoBenchmarkCase> {
    let built = match name {
        "poloni" => mo(
            "poloni",
            square(-PI, PI),
            f::poloni_f1,
            f::poloni_f2,
            vec![],
            1000,
            0.5,
        ),
        "schaffer1" => mo(
            "schaffer1",
            SearchDomain::cube(1, -10.0, 10.0).expect("static domain"),
            f::schaffer1_f1,
            f::schaffer1_f2,
            vec![],
            100_000,
            0.05,
        ),
        // Two-constraint CTP1 instance.
        "ctp1" => mo(
            "ctp1",
            square(0.0, 1.0),
            first,
            f::ctp1_f2,
            vec![
                Constraint::new("f2 / exp(-0.858 f1 + 0.541) >= 1", |v| {
                    f::ctp1_f2(v) / (-0.858 * v[0] + 0.541).exp() >= 1.0
                }),
                Constraint::new("f2 / exp(-0.728 f1 + 0.295) >= 1", |v| {
                    f::ctp1_f2(v) / (-0.728 * v[0] + 0.295).exp() >= 1.0
                }),
            ],
            1000,
            0.05,
        ),
        "constr-ex" => mo(
            "constr-ex",
            rect((0.1, 1.0), (0.0, 5.0)),
            first,
            f::constr_ex_f2,
            vec![
                Constraint::new("y + 9x >= 6", |v| v[1] + 9.0 * v[0] >= 6.0),
                Constraint::new("-y + 9x >= 1", |v| -v[1] + 9.0 * v[0] >= 1.0),
            ],
            1000,
            0.05,
        ),
        "binh-korn" => mo(
            "binh-korn",
            rect((0.0, 5.0), (0.0, 3.0)),
            f::binh_korn_f1,
            f::binh_korn_f2,
            vec![
                Constraint::new("(x-5)^2 + y^2 <= 25", |v| {
                    (v[0] - 5.0).powi(2) + v[1] * v[1] <= 25.0
                }),
                Constraint::new("(x-8)^2 + (y+3)^2 >= 7.7", |v| {
                    (v[0] - 8.0).powi(2) + (v[1] + 3.0).powi(2) >= 7.7
                }),
            ],
            1000,
            1.0,
        ),
        "chakong-haimes" => mo(
            "chakong-haimes",
            square(-20.0, 20.0),
            f::chakong_haimes_f1,
            f::chakong_haimes_f2,
            vec![
                Constraint::new("x^2 + y^2 <= 225", |v| v[0] * v[0] + v[1] * v[1] <= 225.0),
                Constraint::new("x - 3y + 10 <= 0", |v| v[0] - 3.0 * v[1] + 10.0 <= 0.0),
            ],
            1000,
            1.0,
        ),
        _ => return None,
    };
    Some(built)
}
