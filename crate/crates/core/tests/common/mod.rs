//! Independent oracles. Nothing here calls the crate's own dominance,
//! sorting or optimization code.

#![allow(dead_code)]

use evohab_core::cdhs::{PlanetParams, EPSILON};
use evohab_core::Direction;

/// Dominance written out directly from the definition.
pub fn oracle_dominates(a: &[f64], b: &[f64], dirs: &[Direction]) -> bool {
    let mut strictly = false;
    for ((&x, &y), d) in a.iter().zip(b).zip(dirs) {
        let (x, y) = match d {
            Direction::Minimize => (x, y),
            Direction::Maximize => (-x, -y),
        };
        if x > y {
            return false;
        }
        if x < y {
            strictly = true;
        }
    }
    strictly
}

/// O(n^2) per layer front peeling; indices ascending within each front.
pub fn oracle_fronts(points: &[Vec<f64>], dirs: &[Direction]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..points.len()).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let front: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| {
                !remaining
                    .iter()
                    .any(|&j| oracle_dominates(&points[j], &points[i], dirs))
            })
            .collect();
        remaining.retain(|i| !front.contains(i));
        fronts.push(front);
    }
    fronts
}

fn lo() -> f64 {
    EPSILON
}

fn hi() -> f64 {
    1.0 - EPSILON
}

/// Max of `a^x * b^y` over `x, y in [eps, 1 - eps]`, `x + y <= 1`. The
/// objective is log-linear, so the maximum sits on a vertex.
pub fn max_pair_on_simplex(a: f64, b: f64) -> f64 {
    [(lo(), lo()), (hi(), lo()), (lo(), hi())]
        .iter()
        .map(|&(x, y)| a.powf(x) * b.powf(y))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Exact maximum of the single-objective CDHS product.
pub fn single_mode_optimum(p: &PlanetParams) -> f64 {
    max_pair_on_simplex(p.radius, p.density)
        * max_pair_on_simplex(p.escape_velocity, p.surface_temp)
}

/// Max of `Ve^delta * Ts^gamma` with delta confined to `[d_lo, d_hi]`,
/// `gamma in [eps, 1 - eps]` and `delta + gamma <= 1`, by vertex enumeration.
fn max_surface(p: &PlanetParams, d_lo: f64, d_hi: f64) -> Option<f64> {
    if d_lo > d_hi {
        return None;
    }
    let mut best: Option<f64> = None;
    for delta in [d_lo, d_hi, lo(), hi()] {
        if delta < d_lo || delta > d_hi {
            continue;
        }
        for gamma in [lo(), hi(), 1.0 - delta] {
            if gamma < lo() - 1e-15 || gamma > hi() + 1e-15 || delta + gamma > 1.0 + 1e-15 {
                continue;
            }
            let v = p.escape_velocity.powf(delta) * p.surface_temp.powf(gamma);
            best = Some(best.map_or(v, |b: f64| b.max(v)));
        }
    }
    best
}

/// Best `w * Y_i + (1 - w) * Y_s` over the coupled feasible set, with
/// alpha on a grid of `steps + 1` points. For fixed alpha the interior and
/// surface parts separate, and each is log-linear in its free exponents.
pub fn bi_mode_weighted_optimum(p: &PlanetParams, w: f64, c_max: f64, steps: usize) -> f64 {
    let ratio = p.escape_velocity / p.radius;
    let mut best = f64::NEG_INFINITY;
    for k in 0..=steps {
        let alpha = lo() + (hi() - lo()) * k as f64 / steps as f64;
        let beta_hi = 1.0 - alpha;
        if beta_hi < lo() {
            continue;
        }
        let y_i = [lo(), beta_hi]
            .iter()
            .map(|&beta| p.radius.powf(alpha) * p.density.powf(beta))
            .fold(f64::NEG_INFINITY, f64::max);
        let d_lo = (alpha * ratio * EPSILON).max(lo());
        let d_hi = (alpha * ratio * c_max).min(hi());
        if let Some(y_s) = max_surface(p, d_lo, d_hi) {
            best = best.max(w * y_i + (1.0 - w) * y_s);
        }
    }
    best
}
