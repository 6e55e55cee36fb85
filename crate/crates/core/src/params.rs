//! Force constants and run-control settings for a layout run.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forces::CosineVariant;

/// Which force model drives the layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Springs and repulsion only.
    Classical,
    /// Springs, repulsion and the cosine force along the other edge.
    Parallel,
    Rotational,
    AttractRepel,
}

impl Variant {
    /// The cosine kernel used by this variant, if any.
    pub fn cosine(self) -> Option<CosineVariant> {
        match self {
            Variant::Classical => None,
            Variant::Parallel => Some(CosineVariant::Parallel),
            Variant::Rotational => Some(CosineVariant::Rotational),
            Variant::AttractRepel => Some(CosineVariant::AttractRepel),
        }
    }
}

impl From<CosineVariant> for Variant {
    fn from(v: CosineVariant) -> Self {
        match v {
            CosineVariant::Parallel => Variant::Parallel,
            CosineVariant::Rotational => Variant::Rotational,
            CosineVariant::AttractRepel => Variant::AttractRepel,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamsError {
    #[error("{name} must be positive (got {value})")]
    NotPositive { name: &'static str, value: f64 },
    #[error("k_cos must be non-negative and finite (got {0})")]
    BadCosineConstant(f64),
    #[error("max_iterations must be at least 1")]
    ZeroIterations,
}

/// Parameters of one layout run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LayoutParams {
    /// Spring constant.
    pub k_s: f64,
    /// Repulsion constant.
    pub k_r: f64,
    /// Cosine-force constant. Zero is accepted and makes the BIGCROSS
    /// variants reproduce the classical trajectory.
    pub k_cos: f64,
    /// Natural spring length.
    pub l: f64,
    pub variant: Variant,
    /// Displacement per unit force per iteration.
    pub step: f64,
    /// Cap on the length of a single vertex displacement.
    pub max_disp: f64,
    /// A run has converged once the largest per-axis movement in an
    /// iteration is at most this value on both axes.
    pub move_threshold: f64,
    pub max_iterations: u32,
}

impl Default for LayoutParams {
    fn default() -> Self {
        LayoutParams {
            k_s: 1.0,
            k_r: 1.0,
            k_cos: 1.0,
            l: 1.0,
            variant: Variant::Parallel,
            step: 0.01,
            max_disp: 0.5,
            move_threshold: 0.0005,
            max_iterations: 80_000,
        }
    }
}

impl LayoutParams {
    /// Tighter convergence for small structured graphs.
    pub fn high_quality() -> Self {
        LayoutParams {
            move_threshold: 0.00001,
            max_iterations: 100_000,
            ..LayoutParams::default()
        }
    }

    pub fn with_variant(self, variant: Variant) -> Self {
        LayoutParams { variant, ..self }
    }

    pub fn validate(&self) -> Result<(), ParamsError> {
        let positive = [
            ("k_s", self.k_s),
            ("k_r", self.k_r),
            ("l", self.l),
            ("step", self.step),
            ("max_disp", self.max_disp),
            ("move_threshold", self.move_threshold),
        ];
        for (name, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(ParamsError::NotPositive { name, value });
            }
        }
        if !(self.k_cos >= 0.0 && self.k_cos.is_finite()) {
            return Err(ParamsError::BadCosineConstant(self.k_cos));
        }
        if self.max_iterations == 0 {
            return Err(ParamsError::ZeroIterations);
        }
        Ok(())
    }
}
