use crate::error::{Error, Result};

/// Tolerances and limits for evaluating Phi. Immutable once built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    rel_tol: f64,
    max_terms: usize,
    accel_modulus: f64,
    levin_order: usize,
}

impl EvalConfig {
    pub const DEFAULT_REL_TOL: f64 = 1e-13;
    pub const DEFAULT_MAX_TERMS: usize = 1_000_000;
    pub const DEFAULT_ACCEL_MODULUS: f64 = 0.9;
    pub const DEFAULT_LEVIN_ORDER: usize = 20;
    const MAX_LEVIN_ORDER: usize = 40;

    pub fn new(rel_tol: f64, max_terms: usize, accel_modulus: f64, levin_order: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::InvalidConfig(format!("rel_tol must lie in (0, 1), got {rel_tol}")));
        }
        if max_terms < 16 {
            return Err(Error::InvalidConfig(format!("max_terms must be at least 16, got {max_terms}")));
        }
        if !(0.5..1.0).contains(&accel_modulus) {
            return Err(Error::InvalidConfig(format!(
                "accel_modulus must lie in [0.5, 1), got {accel_modulus}"
            )));
        }
        if !(2..=Self::MAX_LEVIN_ORDER).contains(&levin_order) {
            return Err(Error::InvalidConfig(format!(
                "levin_order must lie in 2..={}, got {levin_order}",
                Self::MAX_LEVIN_ORDER
            )));
        }
        Ok(Self { rel_tol, max_terms, accel_modulus, levin_order })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn accel_modulus(&self) -> f64 {
        self.accel_modulus
    }

    pub fn levin_order(&self) -> usize {
        self.levin_order
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self> {
        Self::new(rel_tol, self.max_terms, self.accel_modulus, self.levin_order)
    }

    pub fn with_max_terms(self, max_terms: usize) -> Result<Self> {
        Self::new(self.rel_tol, max_terms, self.accel_modulus, self.levin_order)
    }

    pub fn with_accel_modulus(self, accel_modulus: f64) -> Result<Self> {
        Self::new(self.rel_tol, self.max_terms, accel_modulus, self.levin_order)
    }

    pub fn with_levin_order(self, levin_order: usize) -> Result<Self> {
        Self::new(self.rel_tol, self.max_terms, self.accel_modulus, levin_order)
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            rel_tol: Self::DEFAULT_REL_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
            accel_modulus: Self::DEFAULT_ACCEL_MODULUS,
            levin_order: Self::DEFAULT_LEVIN_ORDER,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let cfg = EvalConfig::default();
        assert_eq!(cfg.rel_tol(), 1e-13);
        assert_eq!(cfg.max_terms(), 1_000_000);
        assert_eq!(cfg.accel_modulus(), 0.9);
        assert_eq!(cfg.levin_order(), 20);
        assert_eq!(EvalConfig::new(1e-13, 1_000_000, 0.9, 20).unwrap(), cfg);
    }

    #[test]
    fn rejects_out_of_range_fields() {
        assert!(EvalConfig::new(0.0, 100, 0.9, 20).is_err());
        assert!(EvalConfig::new(1.0, 100, 0.9, 20).is_err());
        assert!(EvalConfig::new(1e-10, 15, 0.9, 20).is_err());
        assert!(EvalConfig::new(1e-10, 16, 0.49, 20).is_err());
        assert!(EvalConfig::new(1e-10, 16, 1.0, 20).is_err());
        assert!(EvalConfig::new(1e-10, 16, 0.5, 1).is_err());
        assert!(EvalConfig::new(f64::NAN, 16, 0.5, 10).is_err());
        assert!(EvalConfig::default().with_rel_tol(1e-8).is_ok());
    }
}
