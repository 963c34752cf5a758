//! Quadrature grids and Haar-measure integration.
//!
//! Axes are one-dimensional rules (nodes + positive weights + a measure
//! tag); grids are ordered products of axes.  Integration is a weighted sum
//! in deterministic pairwise order, so residuals are reproducible
//! bit-for-bit.

pub mod axis;
pub mod grid;
pub mod integrate;
pub mod sum;

pub use axis::{Axis, LineScheme, MeasureTag};
pub use grid::Grid;
pub use integrate::{integrate, integrate_g, SHEAR_DIM_RHO};
pub use sum::{pairwise_sum, pairwise_sum_by};
