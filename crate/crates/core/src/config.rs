use alloc::format;

use serde::{Deserialize, Serialize};

use crate::EvoError;

/// Tuning knobs shared by the proto-GA and NSGA-II loops.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaConfig {
    /// Number of individuals kept per generation. Must be even.
    pub population_size: usize,
    pub generations: usize,
    /// Base mutation width as a fraction of each dimension's range.
    pub sigma_fraction: f64,
    /// Factor applied to sigma after each run of `max_rejections` rejected draws.
    pub sigma_growth: f64,
    pub max_rejections: usize,
    /// Absolute cap on rejected draws for a single child.
    pub retry_cap: usize,
    pub seed: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            population_size: 200,
            generations: 1000,
            sigma_fraction: 0.05,
            sigma_growth: 1.5,
            max_rejections: 20,
            retry_cap: 1000,
            seed: 42,
        }
    }
}

impl GaConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_population(mut self, population_size: usize) -> Self {
        self.population_size = population_size;
        self
    }

    pub fn with_generations(mut self, generations: usize) -> Self {
        self.generations = generations;
        self
    }

    pub fn with_sigma_fraction(mut self, sigma_fraction: f64) -> Self {
        self.sigma_fraction = sigma_fraction;
        self
    }

    pub fn validate(&self) -> Result<(), EvoError> {
        if self.population_size < 2 || !self.population_size.is_multiple_of(2) {
            return Err(EvoError::InvalidConfig(format!(
                "population_size must be a positive even number, got {}",
                self.population_size
            )));
        }
        if self.generations == 0 {
            return Err(EvoError::InvalidConfig(
                "generations must be positive".into(),
            ));
        }
        // Zero is accepted so that the mutation operator can be switched off.
        if !(0.0..1.0).contains(&self.sigma_fraction) {
            return Err(EvoError::InvalidConfig(format!(
                "sigma_fraction must lie in [0, 1), got {}",
                self.sigma_fraction
            )));
        }
        if !(self.sigma_growth.is_finite() && self.sigma_growth > 1.0) {
            return Err(EvoError::InvalidConfig(format!(
                "sigma_growth must be a finite value above 1, got {}",
                self.sigma_growth
            )));
        }
        if self.max_rejections == 0 || self.retry_cap == 0 {
            return Err(EvoError::InvalidConfig(
                "max_rejections and retry_cap must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        GaConfig::default().validate().unwrap();
    }

    #[test]
    fn odd_population_rejected() {
        let err = GaConfig::default()
            .with_population(201)
            .validate()
            .unwrap_err();
        assert!(matches!(err, EvoError::InvalidConfig(_)));
    }

    #[test]
    fn sigma_growth_must_exceed_one() {
        let config = GaConfig {
            sigma_growth: 1.0,
            ..GaConfig::default()
        };
        assert!(config.validate().is_err());
    }

    #[test]
    fn zero_sigma_allowed() {
        GaConfig::default()
            .with_sigma_fraction(0.0)
            .validate()
            .unwrap();
        assert!(GaConfig::default()
            .with_sigma_fraction(1.0)
            .validate()
            .is_err());
    }
}
