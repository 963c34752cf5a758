//! Ordered products of quadrature axes.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::scalar::Real;

use super::axis::Axis;

/// Product grid: an ordered sequence of axes with pairwise distinct labels.
/// Value storage over a grid is row-major in axis order (last axis fastest).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid<T> {
    axes: Vec<Axis<T>>,
}

impl<T: Real> Grid<T> {
    /// Builds a grid, validating each axis and label distinctness.
    pub fn new(axes: Vec<Axis<T>>) -> Result<Self, CoreError> {
        for (i, ax) in axes.iter().enumerate() {
            ax.validate()?;
            for other in &axes[..i] {
                if other.label == ax.label {
                    return Err(CoreError::DuplicateAxis {
                        label: ax.label.clone(),
                    });
                }
            }
        }
        Ok(Self { axes })
    }

    /// Axes in order.
    pub fn axes(&self) -> &[Axis<T>] {
        &self.axes
    }

    /// Number of axes.
    pub fn rank(&self) -> usize {
        self.axes.len()
    }

    /// Node counts per axis.
    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(Axis::len).collect()
    }

    /// Total number of grid points.
    pub fn len(&self) -> usize {
        self.axes.iter().map(Axis::len).product()
    }

    /// True when some axis is empty.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Axis by label.
    pub fn axis(&self, label: &str) -> Result<&Axis<T>, CoreError> {
        self.axes
            .iter()
            .find(|ax| ax.label == label)
            .ok_or_else(|| CoreError::MissingAxis {
                label: label.to_string(),
            })
    }

    /// Position of an axis by label.
    pub fn axis_index(&self, label: &str) -> Result<usize, CoreError> {
        self.axes
            .iter()
            .position(|ax| ax.label == label)
            .ok_or_else(|| CoreError::MissingAxis {
                label: label.to_string(),
            })
    }

    /// Writes the multi-index of flat position `flat` into `idx`.
    pub fn unravel(&self, mut flat: usize, idx: &mut [usize]) {
        debug_assert_eq!(idx.len(), self.rank());
        for (k, ax) in self.axes.iter().enumerate().rev() {
            let n = ax.len();
            idx[k] = flat % n;
            flat /= n;
        }
    }

    /// Writes the coordinates of flat position `flat` into `coords`.
    pub fn coords_at(&self, flat: usize, coords: &mut [T]) {
        debug_assert_eq!(coords.len(), self.rank());
        let mut rem = flat;
        for (k, ax) in self.axes.iter().enumerate().rev() {
            let n = ax.len();
            coords[k] = ax.nodes[rem % n];
            rem /= n;
        }
    }

    /// Product quadrature weight at flat position `flat`.
    pub fn weight_at(&self, flat: usize) -> T {
        let mut rem = flat;
        let mut w = T::one();
        for ax in self.axes.iter().rev() {
            let n = ax.len();
            w = w * ax.weights[rem % n];
            rem /= n;
        }
        w
    }

    /// Short spec string for reports, e.g. `phi:64[4.0] x n:256[10.0]`.
    pub fn spec_string(&self) -> String {
        self.axes
            .iter()
            .map(|ax| format!("{}:{}[{:.3}]", ax.label, ax.len(), ax.truncation().as_f64()))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}
