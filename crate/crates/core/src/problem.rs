use alloc::{format, string::String, sync::Arc, vec::Vec};
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::EvoError;

/// Shared, thread-safe objective function over a decision vector.
pub type ObjectiveFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

type PredicateFn = Arc<dyn Fn(&[f64]) -> bool + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Minimize,
    Maximize,
}

impl Direction {
    /// Maps an objective value onto a lower-is-better scale. NaN maps to
    /// `+inf` so that undefined evaluations always lose.
    #[inline]
    pub fn cost(self, value: f64) -> f64 {
        let cost = match self {
            Direction::Minimize => value,
            Direction::Maximize => -value,
        };
        if cost.is_nan() {
            f64::INFINITY
        } else {
            cost
        }
    }

    /// True when `a` is strictly better than `b`.
    #[inline]
    pub fn is_better(self, a: f64, b: f64) -> bool {
        self.cost(a) < self.cost(b)
    }
}

/// Axis-aligned box of admissible decision vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchDomain {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchDomain {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, EvoError> {
        if lower.is_empty() {
            return Err(EvoError::InvalidDomain(
                "domain needs at least one dimension".into(),
            ));
        }
        if lower.len() != upper.len() {
            return Err(EvoError::InvalidDomain(format!(
                "{} lower bounds but {} upper bounds",
                lower.len(),
                upper.len()
            )));
        }
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(EvoError::InvalidDomain(format!(
                    "dimension {i}: need finite lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval on every dimension.
    pub fn cube(dims: usize, lower: f64, upper: f64) -> Result<Self, EvoError> {
        Self::new(alloc::vec![lower; dims], alloc::vec![upper; dims])
    }

    pub fn dims(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn width(&self, dim: usize) -> f64 {
        self.upper[dim] - self.lower[dim]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dims()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *lo <= *v && *v <= *hi)
    }

    pub fn clamp(&self, x: &mut [f64]) {
        for (v, (lo, hi)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*lo, *hi);
        }
    }
}

/// A named feasibility predicate beyond the box bounds.
#[derive(Clone)]
pub struct Constraint {
    label: String,
    predicate: PredicateFn,
}

impl Constraint {
    pub fn new<F>(label: impl Into<String>, predicate: F) -> Self
    where
        F: Fn(&[f64]) -> bool + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            predicate: Arc::new(predicate),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_satisfied(&self, x: &[f64]) -> bool {
        (self.predicate)(x)
    }
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Constraint").field(&self.label).finish()
    }
}

pub(crate) fn satisfies_all(constraints: &[Constraint], x: &[f64]) -> bool {
    constraints.iter().all(|c| c.is_satisfied(x))
}

/// A single-objective, optionally constrained, box-bounded problem.
#[derive(Clone)]
pub struct OptimizationProblem {
    objective: ObjectiveFn,
    direction: Direction,
    domain: SearchDomain,
    constraints: Vec<Constraint>,
}

impl OptimizationProblem {
    pub fn new<F>(domain: SearchDomain, direction: Direction, objective: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::from_shared(domain, direction, Arc::new(objective))
    }

    pub fn from_shared(domain: SearchDomain, direction: Direction, objective: ObjectiveFn) -> Self {
        Self {
            objective,
            direction,
            domain,
            constraints: Vec::new(),
        }
    }

    pub fn with_constraint(mut self, constraint: Constraint) -> Self {
        self.constraints.push(constraint);
        self
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn domain(&self) -> &SearchDomain {
        &self.domain
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        (self.objective)(x)
    }

    /// In bounds and satisfying every constraint.
    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.domain.contains(x) && satisfies_all(&self.constraints, x)
    }
}

impl fmt::Debug for OptimizationProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OptimizationProblem")
            .field("direction", &self.direction)
            .field("domain", &self.domain)
            .field("constraints", &self.constraints)
            .finish_non_exhaustive()
    }
}

/// An evaluated decision vector. The fitness is computed once, at
/// construction, and the individual is immutable afterwards.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Individual {
    genes: Vec<f64>,
    fitness: f64,
}

impl Individual {
    pub fn evaluate(genes: Vec<f64>, problem: &OptimizationProblem) -> Self {
        let fitness = problem.evaluate(&genes);
        Self { genes, fitness }
    }

    pub fn genes(&self) -> &[f64] {
        &self.genes
    }

    pub fn fitness(&self) -> f64 {
        self.fitness
    }
}
