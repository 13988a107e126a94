//! Multi-objective optimization with NSGA-II ranking on top of the
//! proto-GA reproduction operator.
//!
//! Per generation the population is ranked into non-dominated fronts and
//! crowding distances are assigned within each front. The best half by
//! crowded comparison (lower rank first, then larger crowding distance)
//! become parents, each produces one Gaussian child, and the best
//! `population_size` of parents plus children survive by the same order.

use alloc::{vec, vec::Vec};
use core::cmp::Ordering;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::ga::{base_sigma, gaussian_child, sample_feasible};
use crate::problem::satisfies_all;
use crate::rng::{stream, INIT_STREAM};
use crate::{Constraint, Direction, EvoError, GaConfig, ObjectiveFn, SearchDomain};

/// Box-bounded, optionally constrained problem with two or more objectives.
#[derive(Clone)]
pub struct MultiObjectiveProblem {
    objectives: Vec<ObjectiveFn>,
    directions: Vec<Direction>,
    domain: SearchDomain,
    constraints: Vec<Constraint>,
}

impl MultiObjectiveProblem {
    pub fn new(domain: SearchDomain) -> Self {
        Self {
            objectives: Vec::new(),
            directions: Vec::new(),
            domain,
            constraints: Vec::new(),
        }
    }

    pub fn with_objective<F>(self, direction: Direction, objective: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        self.with_shared_objective(direction, alloc::sync::Arc::new(objective))
    }

    pub fn with_shared_objective(mut self, direction: Direction, objective: ObjectiveFn) -> Self {
        self.objectives.push(objective);
        self.directions.push(direction);
        self
    }

    pub fn with_constraint(mut self, constraint: Constraint) -> Self {
        self.constraints.push(constraint);
        self
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn domain(&self) -> &SearchDomain {
        &self.domain
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn num_objectives(&self) -> usize {
        self.objectives.len()
    }

    pub fn evaluate(&self, x: &[f64]) -> Vec<f64> {
        self.objectives.iter().map(|f| f(x)).collect()
    }

    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.domain.contains(x) && satisfies_all(&self.constraints, x)
    }

    pub fn validate(&self) -> Result<(), EvoError> {
        if self.objectives.len() < 2 {
            return Err(EvoError::InvalidProblem(alloc::format!(
                "a multi-objective problem needs at least two objectives, got {}",
                self.objectives.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for MultiObjectiveProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiObjectiveProblem")
            .field("directions", &self.directions)
            .field("domain", &self.domain)
            .field("constraints", &self.constraints)
            .finish_non_exhaustive()
    }
}

/// Pareto dominance: `a` is at least as good as `b` everywhere and strictly
/// better somewhere.
pub fn dominates(a: &[f64], b: &[f64], directions: &[Direction]) -> Result<bool, EvoError> {
    if a.len() != b.len() {
        return Err(EvoError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() != directions.len() {
        return Err(EvoError::LengthMismatch {
            left: a.len(),
            right: directions.len(),
        });
    }
    Ok(dominates_unchecked(a, b, directions))
}

#[inline]
fn dominates_unchecked(a: &[f64], b: &[f64], directions: &[Direction]) -> bool {
    let mut strictly = false;
    for ((&x, &y), d) in a.iter().zip(b).zip(directions) {
        let (cx, cy) = (d.cost(x), d.cost(y));
        if cx > cy {
            return false;
        }
        if cx < cy {
            strictly = true;
        }
    }
    strictly
}

/// Partitions `points` into successive non-dominated fronts of indices.
///
/// Front 0 is the non-dominated set; every member of front `k > 0` is
/// dominated by some member of front `k - 1`. Indices within a front are
/// ascending.
///
/// # Panics
///
/// If a point's length differs from `directions.len()`.
pub fn fast_non_dominated_sort<V: AsRef<[f64]>>(
    points: &[V],
    directions: &[Direction],
) -> Vec<Vec<usize>> {
    let n = points.len();
    for p in points {
        assert_eq!(
            p.as_ref().len(),
            directions.len(),
            "objective vector length mismatch"
        );
    }
    let mut dominated_count = vec![0usize; n];
    let mut dominated_set: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (points[i].as_ref(), points[j].as_ref());
            if dominates_unchecked(a, b, directions) {
                dominated_set[i].push(j);
                dominated_count[j] += 1;
            } else if dominates_unchecked(b, a, directions) {
                dominated_set[j].push(i);
                dominated_count[i] += 1;
            }
        }
    }

    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            for &q in &dominated_set[p] {
                dominated_count[q] -= 1;
                if dominated_count[q] == 0 {
                    next.push(q);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current);
        current = next;
    }
    fronts
}

/// Crowding distance of each member of one front.
///
/// For every objective the front is sorted by that objective; the two
/// extreme members get `+inf` and each interior member accumulates the
/// normalized gap `(next - previous) / (max - min)`. An objective with zero
/// range contributes nothing. Direction does not affect the distances.
pub fn crowding_distance<V: AsRef<[f64]>>(front: &[V]) -> Vec<f64> {
    let n = front.len();
    if n <= 2 {
        return vec![f64::INFINITY; n];
    }
    let m = front[0].as_ref().len();
    let mut distance = vec![0.0; n];
    let mut order: Vec<usize> = (0..n).collect();
    for k in 0..m {
        let value = |i: usize| front[i].as_ref()[k];
        order.sort_by(|&a, &b| value(a).total_cmp(&value(b)).then(a.cmp(&b)));
        let (first, last) = (order[0], order[n - 1]);
        distance[first] = f64::INFINITY;
        distance[last] = f64::INFINITY;
        let range = value(last) - value(first);
        if range > 0.0 && range.is_finite() {
            for w in 1..n - 1 {
                distance[order[w]] += (value(order[w + 1]) - value(order[w - 1])) / range;
            }
        }
    }
    distance
}

/// A member of a ranked population.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedIndividual {
    pub genes: Vec<f64>,
    pub objectives: Vec<f64>,
    /// Front index; 0 is non-dominated.
    pub rank: usize,
    pub crowding: f64,
}

/// Crowded-comparison order: lower rank first, then larger crowding distance.
pub fn crowded_cmp(a: &RankedIndividual, b: &RankedIndividual) -> Ordering {
    a.rank.cmp(&b.rank).then(b.crowding.total_cmp(&a.crowding))
}

/// Mutually non-dominated members of a final population.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParetoFront {
    pub members: Vec<RankedIndividual>,
}

impl ParetoFront {
    pub fn objective_vectors(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|m| m.objectives.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Assigns ranks and crowding distances to every `(genes, objectives)` pair.
pub fn rank_population(
    members: Vec<(Vec<f64>, Vec<f64>)>,
    directions: &[Direction],
) -> Vec<RankedIndividual> {
    let objectives: Vec<&[f64]> = members.iter().map(|(_, o)| o.as_slice()).collect();
    let fronts = fast_non_dominated_sort(&objectives, directions);
    let mut rank = vec![0usize; members.len()];
    let mut crowding = vec![0.0; members.len()];
    for (r, front) in fronts.iter().enumerate() {
        let points: Vec<&[f64]> = front.iter().map(|&i| objectives[i]).collect();
        for (&i, d) in front.iter().zip(crowding_distance(&points)) {
            rank[i] = r;
            crowding[i] = d;
        }
    }
    members
        .into_iter()
        .enumerate()
        .map(|(i, (genes, objectives))| RankedIndividual {
            genes,
            objectives,
            rank: rank[i],
            crowding: crowding[i],
        })
        .collect()
}

/// Indices of the `count` survivors among `points`: whole fronts in rank
/// order, the last one truncated by descending crowding distance.
pub fn select_survivors<V: AsRef<[f64]>>(
    points: &[V],
    directions: &[Direction],
    count: usize,
) -> Vec<usize> {
    let mut chosen = Vec::with_capacity(count);
    for front in fast_non_dominated_sort(points, directions) {
        if chosen.len() == count {
            break;
        }
        if chosen.len() + front.len() <= count {
            chosen.extend_from_slice(&front);
            continue;
        }
        let members: Vec<&[f64]> = front.iter().map(|&i| points[i].as_ref()).collect();
        let distance = crowding_distance(&members);
        let mut order: Vec<usize> = (0..front.len()).collect();
        order.sort_by(|&a, &b| distance[b].total_cmp(&distance[a]));
        let missing = count - chosen.len();
        chosen.extend(order[..missing].iter().map(|&k| front[k]));
    }
    chosen
}

/// Outcome of [`nsga2_run`].
#[derive(Debug, Clone, PartialEq)]
pub struct Nsga2Run {
    pub front: ParetoFront,
    pub population: Vec<RankedIndividual>,
}

pub fn nsga2_run(problem: &MultiObjectiveProblem, config: &GaConfig) -> Result<Nsga2Run, EvoError> {
    nsga2_run_observed(problem, config, |_, _| {})
}

/// Like [`nsga2_run`], calling `observer(generation, population)` for the
/// initial population and after every generation.
pub fn nsga2_run_observed<F>(
    problem: &MultiObjectiveProblem,
    config: &GaConfig,
    mut observer: F,
) -> Result<Nsga2Run, EvoError>
where
    F: FnMut(usize, &[RankedIndividual]),
{
    problem.validate()?;
    config.validate()?;
    let n = config.population_size;
    let directions = problem.directions();

    let mut rng = stream(config.seed, INIT_STREAM, 0);
    let start = sample_feasible(
        problem.domain(),
        problem.constraints(),
        n,
        config.max_rejections.saturating_mul(n),
        &mut rng,
    )?;
    let members = start
        .into_iter()
        .map(|x| {
            let objectives = problem.evaluate(&x);
            (x, objectives)
        })
        .collect();
    let mut population = rank_population(members, directions);
    observer(0, &population);

    let sigma = base_sigma(problem.domain(), config.sigma_fraction);
    for generation in 0..config.generations {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| crowded_cmp(&population[a], &population[b]));

        let mut pool: Vec<(Vec<f64>, Vec<f64>)> = population
            .drain(..)
            .map(|m| (m.genes, m.objectives))
            .collect();
        for (i, &parent) in order[..n / 2].iter().enumerate() {
            let mut rng = stream(config.seed, generation as u64, i as u64);
            let (genes, _) = &pool[parent];
            let child = match gaussian_child(
                genes,
                &sigma,
                problem.domain(),
                problem.constraints(),
                config,
                &mut rng,
            ) {
                Ok(draw) => {
                    let objectives = problem.evaluate(&draw.genes);
                    (draw.genes, objectives)
                }
                Err(EvoError::ReproductionExhausted { .. }) => pool[parent].clone(),
                Err(e) => return Err(e),
            };
            pool.push(child);
        }

        let objectives: Vec<&[f64]> = pool.iter().map(|(_, o)| o.as_slice()).collect();
        let mut keep = select_survivors(&objectives, directions, n);
        keep.sort_unstable();
        let mut slots: Vec<Option<(Vec<f64>, Vec<f64>)>> = pool.into_iter().map(Some).collect();
        let survivors = keep
            .into_iter()
            .map(|i| slots[i].take().expect("survivor selected twice"))
            .collect();
        population = rank_population(survivors, directions);
        observer(generation + 1, &population);
    }

    let members = population.iter().filter(|m| m.rank == 0).cloned().collect();
    Ok(Nsga2Run {
        front: ParetoFront { members },
        population,
    })
}
