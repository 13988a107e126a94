//! Cobb-Douglas habitability scores.
//!
//! A planet is described by four parameters in Earth Units (radius,
//! density, escape velocity and mean surface temperature). With
//! elasticities `alpha, beta, gamma, delta` the interior score is
//! `R^alpha * D^beta`, the surface score is `Ve^delta * Ts^gamma`, and the
//! full score is their product. Elasticities lie in the open unit interval
//! (enforced as `[EPSILON, 1 - EPSILON]`) with `alpha + beta <= 1` and
//! `delta + gamma <= 1`.
//!
//! Two optimizers are provided:
//!
//! * [`optimize_cdhs_bi`] maximizes `(Y_i, Y_s)` with NSGA-II over
//!   `(alpha, beta, gamma, C)`, deriving `delta = alpha * (Ve / R) * C`,
//!   and reports the front member with the best weighted sum.
//! * [`optimize_cdhs_single`] maximizes the product directly with the
//!   proto-GA over `(alpha, beta, gamma, delta)`.

use alloc::{format, string::String, sync::Arc, vec, vec::Vec};

// Resolves float math when std is not linked.
#[allow(unused_imports)]
use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::nsga2::{nsga2_run, MultiObjectiveProblem};
use crate::{ga, Constraint, Direction, EvoError, GaConfig, OptimizationProblem, SearchDomain};

/// Margin keeping every elasticity strictly inside (0, 1).
pub const EPSILON: f64 = 1e-6;

/// Default upper bound of the coupling ratio `C`.
pub const DEFAULT_C_MAX: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CdhsError {
    #[error("planet parameter `{field}` must be strictly positive and finite, got {value}")]
    DomainError { field: &'static str, value: f64 },
    #[error("invalid elasticities: {0}")]
    InvalidElasticities(String),
    #[error("invalid weights ({w_interior}, {w_surface}): need values in [0, 1] summing to 1")]
    InvalidWeights { w_interior: f64, w_surface: f64 },
    #[error("no feasible (alpha, beta, gamma, C) found for this planet")]
    InfeasibleCoupling,
    #[error("empty front")]
    EmptyFront,
    #[error("weight sweep needs at least one step")]
    ZeroSteps,
    #[error(transparent)]
    Evo(#[from] EvoError),
}

/// Planetary parameters in Earth Units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanetParams {
    pub radius: f64,
    pub density: f64,
    pub escape_velocity: f64,
    pub surface_temp: f64,
}

impl PlanetParams {
    pub fn new(
        radius: f64,
        density: f64,
        escape_velocity: f64,
        surface_temp: f64,
    ) -> Result<Self, CdhsError> {
        let p = Self {
            radius,
            density,
            escape_velocity,
            surface_temp,
        };
        p.validate()?;
        Ok(p)
    }

    /// Earth: every parameter equal to one.
    pub fn earth() -> Self {
        Self {
            radius: 1.0,
            density: 1.0,
            escape_velocity: 1.0,
            surface_temp: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), CdhsError> {
        for (field, value) in [
            ("radius", self.radius),
            ("density", self.density),
            ("escape_velocity", self.escape_velocity),
            ("surface_temp", self.surface_temp),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(CdhsError::DomainError { field, value });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Elasticities {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl Elasticities {
    pub fn validate(&self) -> Result<(), CdhsError> {
        for (name, v) in [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
            ("delta", self.delta),
        ] {
            if !in_open_unit(v) {
                return Err(CdhsError::InvalidElasticities(format!(
                    "{name} = {v} outside [{EPSILON}, {}]",
                    1.0 - EPSILON
                )));
            }
        }
        if self.alpha + self.beta > 1.0 {
            return Err(CdhsError::InvalidElasticities(format!(
                "alpha + beta = {} exceeds 1",
                self.alpha + self.beta
            )));
        }
        if self.delta + self.gamma > 1.0 {
            return Err(CdhsError::InvalidElasticities(format!(
                "delta + gamma = {} exceeds 1",
                self.delta + self.gamma
            )));
        }
        Ok(())
    }
}

#[inline]
fn in_open_unit(v: f64) -> bool {
    (EPSILON..=1.0 - EPSILON).contains(&v)
}

/// Convex weights of the interior and surface scores.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightPair {
    pub w_interior: f64,
    pub w_surface: f64,
}

impl WeightPair {
    /// `(w_interior, 1 - w_interior)`.
    pub fn new(w_interior: f64) -> Result<Self, CdhsError> {
        Self::from_pair(w_interior, 1.0 - w_interior)
    }

    pub fn from_pair(w_interior: f64, w_surface: f64) -> Result<Self, CdhsError> {
        let ok = (0.0..=1.0).contains(&w_interior)
            && (0.0..=1.0).contains(&w_surface)
            && (w_interior + w_surface - 1.0).abs() <= 1e-12;
        if ok {
            Ok(Self {
                w_interior,
                w_surface,
            })
        } else {
            Err(CdhsError::InvalidWeights {
                w_interior,
                w_surface,
            })
        }
    }

    pub fn equal() -> Self {
        Self {
            w_interior: 0.5,
            w_surface: 0.5,
        }
    }
}

impl Default for WeightPair {
    fn default() -> Self {
        Self::equal()
    }
}

/// `Y_i = R^alpha * D^beta`.
pub fn interior_score(p: &PlanetParams, e: &Elasticities) -> f64 {
    p.radius.powf(e.alpha) * p.density.powf(e.beta)
}

/// `Y_s = Ve^delta * Ts^gamma`.
pub fn surface_score(p: &PlanetParams, e: &Elasticities) -> f64 {
    p.escape_velocity.powf(e.delta) * p.surface_temp.powf(e.gamma)
}

/// `Y = R^alpha * D^beta * Ve^delta * Ts^gamma`.
pub fn cdhs_single_objective(p: &PlanetParams, e: &Elasticities) -> Result<f64, CdhsError> {
    p.validate()?;
    Ok(interior_score(p, e) * surface_score(p, e))
}

/// `delta = alpha * (Ve / R) * C`. The result is not range-checked.
pub fn derive_delta(alpha: f64, coupling_c: f64, p: &PlanetParams) -> f64 {
    alpha * (p.escape_velocity / p.radius) * coupling_c
}

/// `w_i * y_i + w_s * y_s`.
pub fn combine(y_interior: f64, y_surface: f64, weights: &WeightPair) -> f64 {
    weights.w_interior * y_interior + weights.w_surface * y_surface
}

/// For `w_i = 0, 1/steps, ..., 1`, the best weighted combination over the
/// front. Returns `(w_i, combined)` pairs.
pub fn weight_sweep(front: &[(f64, f64)], steps: usize) -> Result<Vec<(f64, f64)>, CdhsError> {
    if front.is_empty() {
        return Err(CdhsError::EmptyFront);
    }
    if steps == 0 {
        return Err(CdhsError::ZeroSteps);
    }
    Ok((0..=steps)
        .map(|k| {
            let w = k as f64 / steps as f64;
            let weights = WeightPair {
                w_interior: w,
                w_surface: 1.0 - w,
            };
            let best = front
                .iter()
                .map(|&(yi, ys)| combine(yi, ys, &weights))
                .fold(f64::NEG_INFINITY, f64::max);
            (w, best)
        })
        .collect())
}

/// One member of a bi-objective front.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrontPoint {
    pub y_interior: f64,
    pub y_surface: f64,
    pub elasticities: Elasticities,
    pub coupling_c: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CdhsResult {
    pub interior_score: f64,
    pub surface_score: f64,
    /// Bi-objective mode: weighted sum of the two scores.
    /// Single-objective mode: the maximized product.
    pub combined: f64,
    pub elasticities: Elasticities,
    pub coupling_c: Option<f64>,
    pub weights: WeightPair,
    pub front: Option<Vec<FrontPoint>>,
}

impl CdhsResult {
    /// `(Y_i, Y_s)` pairs of the front, if any.
    pub fn front_scores(&self) -> Option<Vec<(f64, f64)>> {
        self.front
            .as_ref()
            .map(|f| f.iter().map(|m| (m.y_interior, m.y_surface)).collect())
    }
}

fn unit_interval() -> (f64, f64) {
    (EPSILON, 1.0 - EPSILON)
}

/// The bi-objective problem over `(alpha, beta, gamma, C)`.
pub fn bi_objective_problem(
    p: &PlanetParams,
    c_max: f64,
) -> Result<MultiObjectiveProblem, CdhsError> {
    p.validate()?;
    let (lo, hi) = unit_interval();
    let domain = SearchDomain::new(vec![lo, lo, lo, EPSILON], vec![hi, hi, hi, c_max])?;
    let planet = *p;
    let delta_of = move |x: &[f64]| derive_delta(x[0], x[3], &planet);
    Ok(MultiObjectiveProblem::new(domain)
        .with_shared_objective(
            Direction::Maximize,
            Arc::new(move |x: &[f64]| planet.radius.powf(x[0]) * planet.density.powf(x[1])),
        )
        .with_shared_objective(
            Direction::Maximize,
            Arc::new(move |x: &[f64]| {
                planet.escape_velocity.powf(delta_of(x)) * planet.surface_temp.powf(x[2])
            }),
        )
        .with_constraint(Constraint::new("alpha + beta <= 1", |x| x[0] + x[1] <= 1.0))
        .with_constraint(Constraint::new("derived delta in (0, 1)", move |x| {
            in_open_unit(delta_of(x))
        }))
        .with_constraint(Constraint::new("delta + gamma <= 1", move |x| {
            delta_of(x) + x[2] <= 1.0
        })))
}

/// Maximizes `(Y_i, Y_s)` with NSGA-II and reports the front member with
/// the largest weighted sum.
pub fn optimize_cdhs_bi(
    p: &PlanetParams,
    weights: &WeightPair,
    config: &GaConfig,
    c_max: f64,
) -> Result<CdhsResult, CdhsError> {
    if !(c_max.is_finite() && c_max > EPSILON) {
        return Err(CdhsError::Evo(EvoError::InvalidConfig(format!(
            "c_max must exceed {EPSILON}, got {c_max}"
        ))));
    }
    let problem = bi_objective_problem(p, c_max)?;
    let run = nsga2_run(&problem, config).map_err(|e| match e {
        EvoError::InitializationExhausted { .. } => CdhsError::InfeasibleCoupling,
        other => CdhsError::Evo(other),
    })?;

    let front: Vec<FrontPoint> = run
        .front
        .members
        .iter()
        .map(|m| {
            let (alpha, beta, gamma, c) = (m.genes[0], m.genes[1], m.genes[2], m.genes[3]);
            FrontPoint {
                y_interior: m.objectives[0],
                y_surface: m.objectives[1],
                elasticities: Elasticities {
                    alpha,
                    beta,
                    gamma,
                    delta: derive_delta(alpha, c, p),
                },
                coupling_c: c,
            }
        })
        .collect();

    let best = front
        .iter()
        .copied()
        .reduce(|best, m| {
            let (b, v) = (
                combine(best.y_interior, best.y_surface, weights),
                combine(m.y_interior, m.y_surface, weights),
            );
            if v > b {
                m
            } else {
                best
            }
        })
        .ok_or(CdhsError::EmptyFront)?;

    Ok(CdhsResult {
        interior_score: best.y_interior,
        surface_score: best.y_surface,
        combined: combine(best.y_interior, best.y_surface, weights),
        elasticities: best.elasticities,
        coupling_c: Some(best.coupling_c),
        weights: *weights,
        front: Some(front),
    })
}

/// The single-objective problem over `(alpha, beta, gamma, delta)`.
pub fn single_objective_problem(p: &PlanetParams) -> Result<OptimizationProblem, CdhsError> {
    p.validate()?;
    let (lo, hi) = unit_interval();
    let planet = *p;
    let domain = SearchDomain::cube(4, lo, hi)?;
    Ok(
        OptimizationProblem::new(domain, Direction::Maximize, move |x| {
            planet.radius.powf(x[0])
                * planet.density.powf(x[1])
                * planet.escape_velocity.powf(x[3])
                * planet.surface_temp.powf(x[2])
        })
        .with_constraint(Constraint::new("alpha + beta <= 1", |x| x[0] + x[1] <= 1.0))
        .with_constraint(Constraint::new("delta + gamma <= 1", |x| {
            x[3] + x[2] <= 1.0
        })),
    )
}

/// Maximizes the full product with the proto-GA.
pub fn optimize_cdhs_single(
    p: &PlanetParams,
    weights: &WeightPair,
    config: &GaConfig,
) -> Result<CdhsResult, CdhsError> {
    let problem = single_objective_problem(p)?;
    let run = ga::run(&problem, config)?;
    let g = run.best.genes();
    let elasticities = Elasticities {
        alpha: g[0],
        beta: g[1],
        gamma: g[2],
        delta: g[3],
    };
    Ok(CdhsResult {
        interior_score: interior_score(p, &elasticities),
        surface_score: surface_score(p, &elasticities),
        combined: run.best.fitness(),
        elasticities,
        coupling_c: None,
        weights: *weights,
        front: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Elasticities {
        Elasticities {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    fn planet(r: f64, d: f64, v: f64, t: f64) -> PlanetParams {
        PlanetParams::new(r, d, v, t).unwrap()
    }

    #[test]
    fn interior_examples() {
        assert_eq!(
            interior_score(&PlanetParams::earth(), &e(0.3, 0.6, 0.2, 0.2)),
            1.0
        );
        assert_eq!(
            interior_score(&planet(4.0, 1.0, 1.0, 1.0), &e(0.5, 0.3, 0.2, 0.2)),
            2.0
        );
        let v = interior_score(&planet(2.0, 2.0, 1.0, 1.0), &e(0.5, 0.5, 0.2, 0.2));
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn surface_examples() {
        assert_eq!(
            surface_score(&PlanetParams::earth(), &e(0.3, 0.3, 0.4, 0.5)),
            1.0
        );
        assert_eq!(
            surface_score(&planet(1.0, 1.0, 1.0, 4.0), &e(0.3, 0.3, 0.5, 0.2)),
            2.0
        );
        assert_eq!(
            surface_score(&planet(1.0, 1.0, 9.0, 1.0), &e(0.3, 0.3, 0.2, 0.5)),
            3.0
        );
    }

    #[test]
    fn single_objective_rejects_non_positive() {
        let p = PlanetParams {
            radius: 0.0,
            ..PlanetParams::earth()
        };
        assert_eq!(
            cdhs_single_objective(&p, &e(0.5, 0.5, 0.5, 0.5)),
            Err(CdhsError::DomainError {
                field: "radius",
                value: 0.0
            })
        );
        assert!(PlanetParams::new(1.0, -2.0, 1.0, 1.0).is_err());
        assert!(PlanetParams::new(1.0, 1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn delta_examples() {
        let p = planet(1.3, 1.0, 1.3, 1.0);
        assert_eq!(derive_delta(0.5, 1.0, &p), 0.5);
        let p = planet(1.0, 1.0, 2.0, 1.0);
        assert!((derive_delta(0.4, 0.5, &p) - 0.4).abs() < 1e-15);
        assert_eq!(derive_delta(0.2, 0.7, &p) * 2.0, derive_delta(0.4, 0.7, &p));
    }

    #[test]
    fn combine_examples() {
        let w = WeightPair::new(0.3).unwrap();
        assert_eq!(combine(1.7, 1.7, &w), 1.7);
        assert_eq!(
            combine(1.2, 0.8, &WeightPair::from_pair(1.0, 0.0).unwrap()),
            1.2
        );
        assert_eq!(combine(1.2, 0.8, &WeightPair::equal()), 1.0);
    }

    #[test]
    fn weights_validated() {
        assert!(WeightPair::new(1.5).is_err());
        assert!(WeightPair::from_pair(0.5, 0.6).is_err());
        assert!(WeightPair::new(0.0).is_ok());
    }

    #[test]
    fn elasticities_validated() {
        assert!(e(0.5, 0.5, 0.5, 0.5).validate().is_ok());
        assert!(e(0.6, 0.5, 0.5, 0.5).validate().is_err());
        assert!(e(0.5, 0.5, 0.5, 0.6).validate().is_err());
        assert!(e(0.0, 0.5, 0.5, 0.5).validate().is_err());
        assert!(e(1.0, 0.0, 0.5, 0.5).validate().is_err());
    }

    #[test]
    fn sweep_examples() {
        let single = weight_sweep(&[(3.0, 1.0)], 4).unwrap();
        assert_eq!(
            single,
            vec![(0.0, 1.0), (0.25, 1.5), (0.5, 2.0), (0.75, 2.5), (1.0, 3.0)]
        );
        let ends = weight_sweep(&[(1.5, 0.9), (1.1, 1.3)], 1).unwrap();
        assert_eq!(ends, vec![(0.0, 1.3), (1.0, 1.5)]);
        assert!(weight_sweep(&[(1.0, 1.0)], 10)
            .unwrap()
            .iter()
            .all(|&(_, y)| y == 1.0));
        assert_eq!(weight_sweep(&[], 3), Err(CdhsError::EmptyFront));
        assert_eq!(weight_sweep(&[(1.0, 1.0)], 0), Err(CdhsError::ZeroSteps));
    }
}
