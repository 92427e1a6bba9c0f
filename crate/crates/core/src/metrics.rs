//! Robustness scalars, label vectors and the prediction clamp.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Mean of an attack curve. Over the node-removal grid this is `R_n`, over
/// the edge-removal grid `R_e`; the two share one formula.
pub fn robustness(curve: &[f64]) -> Result<f64> {
    if curve.is_empty() {
        return Err(Error::param("robustness of an empty curve"));
    }
    Ok(curve.iter().sum::<f64>() / curve.len() as f64)
}

/// Attack curve with its robustness appended, the training target of the
/// surrogate model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelVector {
    curve: Vec<f64>,
    robustness: f64,
}

impl LabelVector {
    pub fn from_curve(curve: Vec<f64>) -> Result<Self> {
        let robustness = robustness(&curve)?;
        Ok(LabelVector { curve, robustness })
    }

    /// Splits a flat `steps + 1` vector into curve and trailing scalar. The
    /// scalar is taken as given, so predicted vectors keep their directly
    /// predicted robustness.
    pub fn from_flat(mut values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::param(
                "label vector needs at least one curve value and a robustness value",
            ));
        }
        let robustness = values.pop().unwrap();
        Ok(LabelVector {
            curve: values,
            robustness,
        })
    }

    pub fn curve(&self) -> &[f64] {
        &self.curve
    }

    pub fn robustness(&self) -> f64 {
        self.robustness
    }

    /// `steps + 1`.
    pub fn dim(&self) -> usize {
        self.curve.len() + 1
    }

    pub fn to_flat(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.dim());
        v.extend_from_slice(&self.curve);
        v.push(self.robustness);
        v
    }
}

/// `(curve, robustness(curve))` as a flat vector of length `steps + 1`.
pub fn label_vector(curve: &[f64]) -> Result<Vec<f64>> {
    Ok(LabelVector::from_curve(curve.to_vec())?.to_flat())
}

/// Clamps every element into `[0, 1]`. NaN maps to 0. No monotonicity is
/// imposed on the result.
pub fn clamp_filter(values: &[f64]) -> Vec<f64> {
    values.iter().map(|&x| clamp_unit(x)).collect()
}

pub fn clamp_unit(x: f64) -> f64 {
    if x.is_nan() {
        0.0
    } else {
        x.clamp(0.0, 1.0)
    }
}
