//! Complex-valued functions sampled on a product grid, optionally backed by
//! the closed-form evaluator they were sampled from.
//!
//! Values are stored once, row-major in grid axis order, and treated as
//! immutable; derived functions allocate fresh storage.  Lifts, involutions
//! and convolutions require the evaluator — translated arguments move off
//! the grid and interpolation is deliberately not offered, so identity
//! checks stay exact to quadrature precision.

use std::sync::Arc;

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CoreError;
use crate::quad::grid::Grid;
use crate::scalar::Real;

/// Closed-form rule mapping grid coordinates to a complex value.
pub type Evaluator<T> = Arc<dyn Fn(&[T]) -> Complex<T> + Send + Sync>;

/// A function sampled on a product quadrature grid.
#[derive(Clone)]
pub struct GridFunction<T> {
    grid: Grid<T>,
    values: Vec<Complex<T>>,
    evaluator: Option<Evaluator<T>>,
}

impl<T: Real> GridFunction<T> {
    /// Wraps precomputed values (no evaluator attached).
    pub fn from_values(grid: Grid<T>, values: Vec<Complex<T>>) -> Result<Self, CoreError> {
        if values.len() != grid.len() {
            return Err(CoreError::ShapeMismatch {
                got: values.len(),
                want: grid.len(),
            });
        }
        Ok(Self {
            grid,
            values,
            evaluator: None,
        })
    }

    /// Samples `eval` pointwise over the grid and attaches it.
    pub fn sample(grid: Grid<T>, eval: Evaluator<T>) -> Result<Self, CoreError> {
        let rank = grid.rank();
        let mut values = Vec::with_capacity(grid.len());
        let mut coords = vec![T::zero(); rank];
        for flat in 0..grid.len() {
            grid.coords_at(flat, &mut coords);
            values.push(eval(&coords));
        }
        Ok(Self {
            grid,
            values,
            evaluator: Some(eval),
        })
    }

    /// The grid.
    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    /// The stored values, row-major in axis order.
    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    /// The attached evaluator, if any.
    pub fn evaluator(&self) -> Option<&Evaluator<T>> {
        self.evaluator.as_ref()
    }

    /// Clones the evaluator or errors for operations that need it.
    pub fn require_evaluator(&self, oper: &'static str) -> Result<Evaluator<T>, CoreError> {
        self.evaluator
            .clone()
            .ok_or(CoreError::MissingEvaluator { oper })
    }

    /// Evaluates the closed form at arbitrary coordinates.
    pub fn eval_at(&self, coords: &[T]) -> Result<Complex<T>, CoreError> {
        let eval = self.require_evaluator("eval_at")?;
        Ok(eval(coords))
    }

    /// `α·self + β·other` with fresh storage (grids must match).
    pub fn linear_combination(
        &self,
        alpha: Complex<T>,
        other: &Self,
        beta: Complex<T>,
    ) -> Result<Self, CoreError> {
        if self.grid != other.grid {
            return Err(CoreError::ShapeMismatch {
                got: other.values.len(),
                want: self.values.len(),
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| *a * alpha + *b * beta)
            .collect();
        let evaluator = match (self.evaluator.clone(), other.evaluator.clone()) {
            (Some(f), Some(g)) => Some(Arc::new(move |c: &[T]| f(c) * alpha + g(c) * beta)
                as Evaluator<T>),
            _ => None,
        };
        Ok(Self {
            grid: self.grid.clone(),
            values,
            evaluator,
        })
    }

    /// Pointwise `|f|²` (drops the evaluator unless present, in which case it
    /// is composed).
    pub fn abs_squared(&self) -> Self {
        let values = self
            .values
            .iter()
            .map(|v| Complex::new(v.norm_sqr(), T::zero()))
            .collect();
        let evaluator = self.evaluator.clone().map(|f| {
            Arc::new(move |c: &[T]| Complex::new(f(c).norm_sqr(), T::zero())) as Evaluator<T>
        });
        Self {
            grid: self.grid.clone(),
            values,
            evaluator,
        }
    }

    /// Re-samples from the evaluator; bit-identical to the stored values.
    pub fn resample(&self) -> Result<Self, CoreError> {
        let eval = self.require_evaluator("resample")?;
        Self::sample(self.grid.clone(), eval)
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for GridFunction<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GridFunction")
            .field("grid", &self.grid)
            .field("values_len", &self.values.len())
            .field("has_evaluator", &self.evaluator.is_some())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GridFunctionRepr<T> {
    axes: Vec<crate::quad::axis::Axis<T>>,
    /// Interleaved `[re, im, re, im, ...]`, row-major in axis order.
    values: Vec<T>,
}

impl<T: Real + Serialize> Serialize for GridFunction<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut flat = Vec::with_capacity(self.values.len() * 2);
        for v in &self.values {
            flat.push(v.re);
            flat.push(v.im);
        }
        GridFunctionRepr {
            axes: self.grid.axes().to_vec(),
            values: flat,
        }
        .serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for GridFunction<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GridFunctionRepr::<T>::deserialize(deserializer)?;
        let grid = Grid::new(repr.axes).map_err(D::Error::custom)?;
        if repr.values.len() != grid.len() * 2 {
            return Err(D::Error::custom(format!(
                "interleaved value buffer has {} scalars, expected {}",
                repr.values.len(),
                grid.len() * 2
            )));
        }
        let values = repr
            .values
            .chunks_exact(2)
            .map(|c| Complex::new(c[0], c[1]))
            .collect();
        GridFunction::from_values(grid, values).map_err(D::Error::custom)
    }
}
