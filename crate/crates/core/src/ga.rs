//! The proto-genetic algorithm.
//!
//! Each generation the population is ranked by fitness, the best half
//! become parents, and every parent produces exactly one child by sampling
//! a Gaussian centred on its own genes. Parents and children are then
//! pooled and the best `population_size` individuals survive, so the
//! incumbent best can never be lost.
//!
//! Bounds are enforced by clamping. Other constraints are enforced by
//! rejection: an infeasible draw is retried, and after every
//! `max_rejections` consecutive rejections the standard deviation is
//! multiplied by `sigma_growth` to widen the search. The widening is local
//! to a single child.

use alloc::vec::Vec;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::problem::satisfies_all;
use crate::rng::{stream, INIT_STREAM};
use crate::{
    Constraint, Direction, EvoError, GaConfig, Individual, OptimizationProblem, SearchDomain,
};

/// Per-dimension base standard deviation: `sigma_fraction * (upper - lower)`.
pub fn base_sigma(domain: &SearchDomain, sigma_fraction: f64) -> Vec<f64> {
    (0..domain.dims())
        .map(|i| sigma_fraction * domain.width(i))
        .collect()
}

/// Draws `count` uniform points from the box that satisfy every constraint.
pub(crate) fn sample_feasible<R: Rng + ?Sized>(
    domain: &SearchDomain,
    constraints: &[Constraint],
    count: usize,
    max_draws: usize,
    rng: &mut R,
) -> Result<Vec<Vec<f64>>, EvoError> {
    let mut points = Vec::with_capacity(count);
    let mut draws = 0usize;
    while points.len() < count {
        if draws >= max_draws {
            return Err(EvoError::InitializationExhausted { attempts: draws });
        }
        draws += 1;
        let x: Vec<f64> = domain
            .lower()
            .iter()
            .zip(domain.upper())
            .map(|(lo, hi)| {
                let u: f64 = rng.random();
                (lo + u * (hi - lo)).min(*hi)
            })
            .collect();
        if satisfies_all(constraints, &x) {
            points.push(x);
        }
    }
    Ok(points)
}

/// Random feasible population with cached fitness.
pub fn init_population<R: Rng + ?Sized>(
    problem: &OptimizationProblem,
    config: &GaConfig,
    rng: &mut R,
) -> Result<Vec<Individual>, EvoError> {
    config.validate()?;
    let max_draws = config.max_rejections.saturating_mul(config.population_size);
    let points = sample_feasible(
        problem.domain(),
        problem.constraints(),
        config.population_size,
        max_draws,
        rng,
    )?;
    Ok(points
        .into_iter()
        .map(|x| Individual::evaluate(x, problem))
        .collect())
}

/// Genes of an accepted Gaussian draw plus the rejection bookkeeping.
pub(crate) struct Draw {
    pub genes: Vec<f64>,
    pub rejections: usize,
    pub sigma_scale: f64,
}

pub(crate) fn gaussian_child<R: Rng + ?Sized>(
    parent: &[f64],
    sigma: &[f64],
    domain: &SearchDomain,
    constraints: &[Constraint],
    config: &GaConfig,
    rng: &mut R,
) -> Result<Draw, EvoError> {
    let mut scale = 1.0;
    let mut rejections = 0usize;
    loop {
        let mut genes: Vec<f64> = parent
            .iter()
            .zip(sigma)
            .map(|(&g, &s)| {
                let s = s * scale;
                if s > 0.0 {
                    let z: f64 = rng.sample(StandardNormal);
                    g + s * z
                } else {
                    g
                }
            })
            .collect();
        domain.clamp(&mut genes);
        if satisfies_all(constraints, &genes) {
            return Ok(Draw {
                genes,
                rejections,
                sigma_scale: scale,
            });
        }
        rejections += 1;
        if rejections >= config.retry_cap {
            return Err(EvoError::ReproductionExhausted {
                retries: rejections,
            });
        }
        if rejections.is_multiple_of(config.max_rejections) {
            scale *= config.sigma_growth;
        }
    }
}

/// A child together with how hard it was to place.
#[derive(Debug, Clone, PartialEq)]
pub struct Offspring {
    pub child: Individual,
    /// Rejected draws before the accepted one.
    pub rejections: usize,
    /// Multiplier that was applied to `sigma` for the accepted draw.
    pub sigma_scale: f64,
}

/// Single-parent Gaussian reproduction.
///
/// Returns [`EvoError::ReproductionExhausted`] once `config.retry_cap`
/// draws in a row were infeasible; callers are expected to fall back to a
/// copy of the parent.
pub fn reproduce<R: Rng + ?Sized>(
    parent: &Individual,
    sigma: &[f64],
    problem: &OptimizationProblem,
    config: &GaConfig,
    rng: &mut R,
) -> Result<Offspring, EvoError> {
    let draw = gaussian_child(
        parent.genes(),
        sigma,
        problem.domain(),
        problem.constraints(),
        config,
        rng,
    )?;
    Ok(Offspring {
        child: Individual::evaluate(draw.genes, problem),
        rejections: draw.rejections,
        sigma_scale: draw.sigma_scale,
    })
}

/// Stable best-first sort; ties keep their current order.
pub fn sort_by_fitness(population: &mut [Individual], direction: Direction) {
    population.sort_by(|a, b| {
        direction
            .cost(a.fitness())
            .total_cmp(&direction.cost(b.fitness()))
    });
}

/// The parents of the next generation: the best half of `population`.
pub fn best_half(population: &[Individual], direction: Direction) -> Vec<Individual> {
    let mut sorted = population.to_vec();
    sort_by_fitness(&mut sorted, direction);
    sorted.truncate(population.len() / 2);
    sorted
}

/// One generation. The returned population is sorted best-first.
///
/// Child `i` of generation `generation` draws from its own RNG stream
/// derived from `(config.seed, generation, i)`.
pub fn evolve_step(
    population: Vec<Individual>,
    problem: &OptimizationProblem,
    config: &GaConfig,
    generation: u64,
) -> Result<Vec<Individual>, EvoError> {
    let n = config.population_size;
    if population.len() != n {
        return Err(EvoError::PopulationSize {
            expected: n,
            found: population.len(),
        });
    }
    let direction = problem.direction();
    let sigma = base_sigma(problem.domain(), config.sigma_fraction);

    let mut pool = population;
    sort_by_fitness(&mut pool, direction);

    let mut children = Vec::with_capacity(n / 2);
    for (i, parent) in pool[..n / 2].iter().enumerate() {
        let mut rng = stream(config.seed, generation, i as u64);
        let child = match reproduce(parent, &sigma, problem, config, &mut rng) {
            Ok(offspring) => offspring.child,
            Err(EvoError::ReproductionExhausted { .. }) => parent.clone(),
            Err(e) => return Err(e),
        };
        children.push(child);
    }

    pool.extend(children);
    sort_by_fitness(&mut pool, direction);
    pool.truncate(n);
    Ok(pool)
}

/// Outcome of [`run`].
#[derive(Debug, Clone, PartialEq)]
pub struct GaRun {
    pub best: Individual,
    /// Best fitness of the initial population followed by one entry per generation.
    pub history: Vec<f64>,
    /// Final population, best-first.
    pub population: Vec<Individual>,
}

pub fn run(problem: &OptimizationProblem, config: &GaConfig) -> Result<GaRun, EvoError> {
    run_observed(problem, config, |_, _| {})
}

/// Like [`run`], calling `observer(generation, population)` for the
/// initial population (generation 0) and after every step.
pub fn run_observed<F>(
    problem: &OptimizationProblem,
    config: &GaConfig,
    mut observer: F,
) -> Result<GaRun, EvoError>
where
    F: FnMut(usize, &[Individual]),
{
    config.validate()?;
    let mut rng = stream(config.seed, INIT_STREAM, 0);
    let mut population = init_population(problem, config, &mut rng)?;
    sort_by_fitness(&mut population, problem.direction());

    let mut history = Vec::with_capacity(config.generations + 1);
    observer(0, &population);
    history.push(population[0].fitness());

    for generation in 0..config.generations {
        population = evolve_step(population, problem, config, generation as u64)?;
        observer(generation + 1, &population);
        history.push(population[0].fitness());
    }

    Ok(GaRun {
        best: population[0].clone(),
        history,
        population,
    })
}
