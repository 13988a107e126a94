//! Two-variable test functions. Every function takes a decision vector of
//! length two (one for Schaffer N.1) and never panics on finite input.

// Resolves float math when std is not linked.
use core::f64::consts::{E, PI};
#[allow(unused_imports)]
use num_traits::Float;

#[inline]
fn xy(v: &[f64]) -> (f64, f64) {
    (v[0], v[1])
}

pub fn easom(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    -x.cos() * y.cos() * (-((x - PI).powi(2) + (y - PI).powi(2))).exp()
}

pub fn rastrigin(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    20.0 + x * x + y * y - 10.0 * ((2.0 * PI * x).cos() + (2.0 * PI * y).cos())
}

pub fn ackley(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    -20.0 * (-0.2 * (0.5 * (x * x + y * y)).sqrt()).exp()
        - (0.5 * ((2.0 * PI * x).cos() + (2.0 * PI * y).cos())).exp()
        + E
        + 20.0
}

pub fn beale(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (1.5 - x + x * y).powi(2) + (2.25 - x + x * y * y).powi(2) + (2.625 - x + x * y.powi(3)).powi(2)
}

pub fn goldstein_price(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    let a = 1.0
        + (x + y + 1.0).powi(2)
            * (19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y);
    let b = 30.0
        + (2.0 * x - 3.0 * y).powi(2)
            * (18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y);
    a * b
}

/// Mishra's function no. 4, `sqrt|sin sqrt|x^2 + y|| + 0.01 (x + y)`.
///
/// The commonly quoted minimizer `(-9.94112, -10)` is too coarsely rounded
/// for this cusp-shaped minimum: evaluated there it gives about -0.1939.
/// The true minimizer is `x = -sqrt(9 pi^2 + 10)`, where the sine vanishes,
/// giving `0.01 (x - 10) = -0.199411...`.
pub fn mishra4(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (x * x + y).abs().sqrt().sin().abs().sqrt() + 0.01 * (x + y)
}

pub fn cross_in_tray(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    let r = (x * x + y * y).sqrt();
    -1e-4 * ((x.sin() * y.sin() * (100.0 - r / PI).abs().exp()).abs() + 1.0).powf(0.1)
}

pub fn eggholder(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    -(y + 47.0) * (x / 2.0 + y + 47.0).abs().sqrt().sin() - x * (x - (y + 47.0)).abs().sqrt().sin()
}

pub fn holder_table(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    -(x.sin() * y.cos() * (1.0 - (x * x + y * y).sqrt() / PI).abs().exp()).abs()
}

pub fn mccormick(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (x + y).sin() + (x - y).powi(2) - 1.5 * x + 2.5 * y + 1.0
}

pub fn schaffer4(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    let num = (x * x - y * y).abs().sin().cos().powi(2) - 0.5;
    let den = (1.0 + 0.001 * (x * x + y * y)).powi(2);
    0.5 + num / den
}

pub fn rosenbrock(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (1.0 - x).powi(2) + 100.0 * (y - x * x).powi(2)
}

pub fn mishra_bird(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    y.sin() * (1.0 - x.cos()).powi(2).exp()
        + x.cos() * (1.0 - y.sin()).powi(2).exp()
        + (x - y).powi(2)
}

pub fn townsend(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    -((x - 0.1) * y).cos().powi(2) - x * (3.0 * x + y).sin()
}

/// Squared radius of the Townsend feasible region in direction `atan2(x, y)`.
pub fn townsend_radius_sq(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    let t = x.atan2(y);
    let a =
        2.0 * t.cos() - 0.5 * (2.0 * t).cos() - 0.25 * (3.0 * t).cos() - 0.125 * (4.0 * t).cos();
    let b = 2.0 * t.sin();
    a * a + b * b
}

pub fn simionescu(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    0.1 * x * y
}

/// Squared radius of the Simionescu flower, `(1 + 0.2 cos(8 atan(x / y)))^2`.
pub fn simionescu_radius_sq(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (1.0 + 0.2 * (8.0 * (x / y).atan()).cos()).powi(2)
}

fn poloni_terms(x: f64, y: f64) -> (f64, f64) {
    (
        0.5 * x.sin() - 2.0 * x.cos() + y.sin() - 1.5 * y.cos(),
        1.5 * x.sin() - x.cos() + 2.0 * y.sin() - 0.5 * y.cos(),
    )
}

pub fn poloni_f1(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    let (a1, a2) = poloni_terms(1.0, 2.0);
    let (b1, b2) = poloni_terms(x, y);
    1.0 + (a1 - b1).powi(2) + (a2 - b2).powi(2)
}

pub fn poloni_f2(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (x + 3.0).powi(2) + (y + 1.0).powi(2)
}

pub fn schaffer1_f1(v: &[f64]) -> f64 {
    v[0] * v[0]
}

pub fn schaffer1_f2(v: &[f64]) -> f64 {
    (v[0] - 2.0).powi(2)
}

pub fn ctp1_f2(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (1.0 + y) * (-x / (1.0 + y)).exp()
}

pub fn constr_ex_f2(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (1.0 + y) / x
}

pub fn binh_korn_f1(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    4.0 * x * x + 4.0 * y * y
}

pub fn binh_korn_f2(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    (x - 5.0).powi(2) + (y - 5.0).powi(2)
}

pub fn chakong_haimes_f1(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    2.0 + (x - 2.0).powi(2) + (y - 1.0).powi(2)
}

pub fn chakong_haimes_f2(v: &[f64]) -> f64 {
    let (x, y) = xy(v);
    9.0 * x - (y - 1.0).powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rastrigin_origin() {
        assert_eq!(rastrigin(&[0.0, 0.0]), 0.0);
        assert!(rastrigin(&[1.0, 1.0]) > 0.0);
    }

    #[test]
    fn easom_at_pi() {
        assert_eq!(easom(&[PI, PI]), -1.0);
    }

    #[test]
    fn goldstein_price_minimum() {
        assert_eq!(goldstein_price(&[0.0, -1.0]), 3.0);
    }

    #[test]
    fn mishra4_rounded_location_is_worse() {
        assert!((mishra4(&[-9.94112, -10.0]) + 0.19390).abs() < 1e-4);
    }

    #[test]
    fn simionescu_radius_on_diagonal() {
        let r = simionescu_radius_sq(&[1.0, -1.0]);
        assert!((r - 1.44).abs() < 1e-12);
    }
}
