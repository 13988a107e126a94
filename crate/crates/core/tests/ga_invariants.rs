use evohab_core::benchmarks::{self, CONSTRAINED, UNCONSTRAINED};
use evohab_core::ga::{self, init_population};
use evohab_core::{Direction, GaConfig, Individual};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_single_cases() -> Vec<benchmarks::BenchmarkCase> {
    UNCONSTRAINED
        .iter()
        .chain(CONSTRAINED.iter())
        .map(|n| benchmarks::single(n).unwrap())
        .collect()
}

fn no_worse(direction: Direction, next: f64, prev: f64) -> bool {
    direction.cost(next) <= direction.cost(prev)
}

#[test]
fn every_benchmark_run_is_elitist_feasible_and_fixed_size() {
    let config = GaConfig::default();
    for case in all_single_cases() {
        let problem = &case.problem;
        let mut violations = Vec::new();
        let run = ga::run_observed(problem, &config, |generation, population: &[Individual]| {
            if population.len() != config.population_size {
                violations.push(format!(
                    "generation {generation}: size {}",
                    population.len()
                ));
            }
            for ind in population {
                if !problem.domain().contains(ind.genes()) || !problem.is_feasible(ind.genes()) {
                    violations.push(format!(
                        "generation {generation}: infeasible {:?}",
                        ind.genes()
                    ));
                }
                if ind.fitness().to_bits() != problem.evaluate(ind.genes()).to_bits() {
                    violations.push(format!("generation {generation}: stale fitness"));
                }
            }
        })
        .unwrap();
        assert!(
            violations.is_empty(),
            "{}: {:?}",
            case.name,
            &violations[..violations.len().min(5)]
        );
        assert_eq!(run.history.len(), config.generations + 1);
        for (g, pair) in run.history.windows(2).enumerate() {
            assert!(
                no_worse(problem.direction(), pair[1], pair[0]),
                "{}: history worsened at {g}",
                case.name
            );
        }
        assert_eq!(run.best.fitness(), *run.history.last().unwrap());
    }
}

#[test]
fn same_seed_same_history() {
    let case = benchmarks::single("mishra-bird").unwrap();
    let config = GaConfig::default().with_generations(200).with_seed(11);
    let a = ga::run(&case.problem, &config).unwrap();
    let b = ga::run(&case.problem, &config).unwrap();
    assert_eq!(a, b);
    let c = ga::run(&case.problem, &config.clone().with_seed(12)).unwrap();
    assert_ne!(a.history, c.history);
}

#[test]
fn zero_sigma_population_is_a_fixed_point() {
    for name in ["rastrigin", "townsend"] {
        let case = benchmarks::single(name).unwrap();
        let config = GaConfig::default()
            .with_population(50)
            .with_generations(30)
            .with_sigma_fraction(0.0);
        let mut generations: Vec<Vec<Individual>> = Vec::new();
        ga::run_observed(&case.problem, &config, |_, population| {
            generations.push(population.to_vec())
        })
        .unwrap();
        for (g, pair) in generations.windows(2).enumerate() {
            assert_eq!(
                pair[0][0].fitness(),
                pair[1][0].fitness(),
                "{name}: best changed at {g}"
            );
            for ind in &pair[1] {
                assert!(
                    pair[0].iter().any(|prev| prev.genes() == ind.genes()),
                    "{name}: generation {} introduced new genes {:?}",
                    g + 1,
                    ind.genes()
                );
            }
        }
    }
}

#[test]
fn rastrigin_init_example() {
    let case = benchmarks::single("rastrigin").unwrap();
    let config = GaConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let population = init_population(&case.problem, &config, &mut rng).unwrap();
    assert_eq!(population.len(), 200);
    for ind in &population {
        assert!(ind.genes().iter().all(|g| (-5.12..=5.12).contains(g)));
        assert!(ind.fitness() >= 0.0);
    }
}

#[test]
fn mishra_bird_init_respects_disk() {
    let case = benchmarks::single("mishra-bird").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for ind in init_population(&case.problem, &GaConfig::default(), &mut rng).unwrap() {
        let (x, y) = (ind.genes()[0], ind.genes()[1]);
        assert!((x + 5.0).powi(2) + (y + 5.0).powi(2) < 25.0);
    }
}

#[test]
fn beale_converges() {
    let case = benchmarks::single("beale").unwrap();
    let run = ga::run(&case.problem, &GaConfig::default()).unwrap();
    assert!(
        run.best.fitness().abs() < 1e-3,
        "beale best {}",
        run.best.fitness()
    );
}

#[test]
fn mishra_bird_converges() {
    let case = benchmarks::single("mishra-bird").unwrap();
    let run = ga::run(&case.problem, &GaConfig::default()).unwrap();
    assert!(
        (run.best.fitness() + 106.76).abs() <= 0.05,
        "mishra-bird best {}",
        run.best.fitness()
    );
}

#[test]
fn rastrigin_converges_with_seed_seven() {
    let case = benchmarks::single("rastrigin").unwrap();
    let run = ga::run(&case.problem, &GaConfig::default().with_seed(7)).unwrap();
    assert!(
        run.best.fitness() <= 0.01,
        "rastrigin best {}",
        run.best.fitness()
    );
}
