// Resolves float math when std is not linked.
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use super::{BenchmarkError, MoBenchmarkCase};
use crate::nsga2::{fast_non_dominated_sort, MultiObjectiveProblem};
use crate::Direction;

/// Grid-sweep reference front at the case's own resolution.
pub fn reference_front(case: &MoBenchmarkCase) -> Vec<Vec<f64>> {
    reference_front_at(&case.problem, case.reference_front_resolution)
}

/// Evaluates `problem` on a uniform grid of `resolution` points per
/// dimension (bounds included), drops infeasible points, and returns the
/// distinct non-dominated objective vectors sorted by the first objective.
///
/// # Panics
///
/// If `resolution < 2`.
pub fn reference_front_at(problem: &MultiObjectiveProblem, resolution: usize) -> Vec<Vec<f64>> {
    assert!(resolution >= 2, "grid resolution must be at least 2");
    let domain = problem.domain();
    let dims = domain.dims();
    let axes: Vec<Vec<f64>> = (0..dims)
        .map(|d| {
            let (lo, hi) = (domain.lower()[d], domain.upper()[d]);
            (0..resolution)
                .map(|i| (lo + (hi - lo) * i as f64 / (resolution - 1) as f64).min(hi))
                .collect()
        })
        .collect();

    let mut points = Vec::new();
    let mut counter = alloc::vec![0usize; dims];
    let mut x = alloc::vec![0.0; dims];
    'grid: loop {
        for d in 0..dims {
            x[d] = axes[d][counter[d]];
        }
        if problem.is_feasible(&x) {
            points.push(problem.evaluate(&x));
        }
        for c in counter.iter_mut() {
            *c += 1;
            if *c < resolution {
                continue 'grid;
            }
            *c = 0;
        }
        break;
    }

    let mut front = non_dominated(points, problem.directions());
    front.sort_by(|a, b| {
        a[0].total_cmp(&b[0]).then(
            a[1..]
                .iter()
                .partial_cmp(b[1..].iter())
                .unwrap_or(core::cmp::Ordering::Equal),
        )
    });
    front
}

fn non_dominated(points: Vec<Vec<f64>>, directions: &[Direction]) -> Vec<Vec<f64>> {
    if directions.len() != 2 {
        let fronts = fast_non_dominated_sort(&points, directions);
        let mut front: Vec<Vec<f64>> = fronts
            .first()
            .map(|f| f.iter().map(|&i| points[i].clone()).collect())
            .unwrap_or_default();
        front.dedup();
        return front;
    }
    // Two objectives: sweep by the first cost, keep strict improvements of the second.
    let cost = |p: &[f64]| (directions[0].cost(p[0]), directions[1].cost(p[1]));
    let mut sorted = points;
    sorted.sort_by(|a, b| {
        let (a0, a1) = cost(a);
        let (b0, b1) = cost(b);
        a0.total_cmp(&b0).then(a1.total_cmp(&b1))
    });
    let mut best = f64::INFINITY;
    sorted
        .into_iter()
        .filter(|p| {
            let (_, c1) = cost(p);
            if c1 < best {
                best = c1;
                true
            } else {
                false
            }
        })
        .collect()
}

/// Inverted generational distance: the mean, over reference points, of the
/// Euclidean distance to the nearest obtained point.
pub fn igd<A: AsRef<[f64]>, R: AsRef<[f64]>>(
    obtained: &[A],
    reference: &[R],
) -> Result<f64, BenchmarkError> {
    if obtained.is_empty() || reference.is_empty() {
        return Err(BenchmarkError::EmptySet);
    }
    let total: f64 = reference
        .iter()
        .map(|r| {
            obtained
                .iter()
                .map(|a| {
                    a.as_ref()
                        .iter()
                        .zip(r.as_ref())
                        .map(|(x, y)| (x - y) * (x - y))
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    Ok(total / reference.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::multi;
    use crate::nsga2::dominates;
    use alloc::vec;

    #[test]
    fn igd_examples() {
        let r = vec![vec![0.0, 0.0], vec![2.0, 0.0]];
        assert_eq!(igd(&r, &r).unwrap(), 0.0);
        assert_eq!(igd(&[[3.0, 4.0]], &[[0.0, 0.0]]).unwrap(), 5.0);
        assert_eq!(igd(&[[0.0, 0.0]], &r).unwrap(), 1.0);
        let empty: [[f64; 2]; 0] = [];
        assert_eq!(igd(&empty, &r), Err(BenchmarkError::EmptySet));
        assert_eq!(igd(&r, &empty), Err(BenchmarkError::EmptySet));
    }

    #[test]
    fn reference_front_is_mutually_non_dominated() {
        let case = multi("binh-korn").unwrap();
        let front = reference_front_at(&case.problem, 120);
        let dirs = case.problem.directions();
        for a in &front {
            for b in &front {
                assert!(!dominates(a, b, dirs).unwrap());
            }
        }
        assert!(front.windows(2).all(|w| w[0][0] <= w[1][0]));
    }

    #[test]
    fn reference_front_matches_brute_force_filter() {
        let case = multi("ctp1").unwrap();
        let swept = reference_front_at(&case.problem, 60);
        // Brute-force: grid points not dominated by any other grid point.
        let dirs = case.problem.directions();
        let mut all = Vec::new();
        for i in 0..60 {
            for j in 0..60 {
                let x = [i as f64 / 59.0, j as f64 / 59.0];
                if case.problem.is_feasible(&x) {
                    all.push(case.problem.evaluate(&x));
                }
            }
        }
        let mut brute: Vec<Vec<f64>> = all
            .iter()
            .filter(|p| !all.iter().any(|q| dominates(q, p, dirs).unwrap()))
            .cloned()
            .collect();
        brute.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
        brute.dedup();
        assert_eq!(swept, brute);
    }
}
