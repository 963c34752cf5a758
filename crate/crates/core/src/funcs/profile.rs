//! Closed-form test-function families: one-dimensional profiles combined
//! into separable products, and complex-linear combinations of those.
//!
//! Everything the harness integrates or transforms is built from these, so
//! tail bounds and band limits are known by construction.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::CoreError;
use crate::quad::grid::Grid;
use crate::scalar::{cis, Real};

use super::gridfn::{Evaluator, GridFunction};

/// One-dimensional closed-form profile.
#[derive(Clone, Debug)]
pub enum Profile<T> {
    /// `exp(−(x−center)²/(2σ²))`, σ > 0.
    Gaussian {
        /// Centre.
        center: T,
        /// Width σ.
        sigma: T,
    },
    /// Periodized Gaussian on the circle (three wrap images; adequate for
    /// σ ≲ 1).
    WrappedGaussian {
        /// Centre angle.
        center: T,
        /// Width σ.
        sigma: T,
    },
    /// Trigonometric polynomial `Σ c_m e^{imφ}`.
    TrigPoly {
        /// `(m, c_m)` pairs.
        coeffs: Vec<(i64, Complex<T>)>,
    },
    /// Constant profile.
    Constant {
        /// The value.
        value: Complex<T>,
    },
}

impl<T: Real> Profile<T> {
    /// Unit-mass Gaussian with respect to Lebesgue measure.
    pub fn mollifier(sigma: T) -> Self {
        Profile::Gaussian {
            center: T::zero(),
            sigma,
        }
    }

    /// Evaluates the profile.
    pub fn eval(&self, x: T) -> Complex<T> {
        match self {
            Profile::Gaussian { center, sigma } => {
                let u = (x - *center) / *sigma;
                Complex::new((-u * u / T::of(2.0)).exp(), T::zero())
            }
            Profile::WrappedGaussian { center, sigma } => {
                let tau = T::TAU();
                let mut s = T::zero();
                for k in [-T::one(), T::zero(), T::one()] {
                    let u = (x - *center + k * tau) / *sigma;
                    s = s + (-u * u / T::of(2.0)).exp();
                }
                Complex::new(s, T::zero())
            }
            Profile::TrigPoly { coeffs } => coeffs
                .iter()
                .map(|(m, c)| *c * cis(T::of(*m as f64) * x))
                .fold(Complex::new(T::zero(), T::zero()), |a, b| a + b),
            Profile::Constant { value } => *value,
        }
    }

    /// Maximum frequency present (for circle Nyquist checks).
    pub fn degree(&self) -> Option<i64> {
        match self {
            Profile::TrigPoly { coeffs } => coeffs.iter().map(|(m, _)| m.abs()).max(),
            _ => None,
        }
    }

    /// Mass `∫ profile dx` with Lebesgue measure, when closed-form.
    pub fn lebesgue_mass(&self) -> Option<Complex<T>> {
        match self {
            Profile::Gaussian { sigma, .. } => Some(Complex::new(
                *sigma * T::TAU().sqrt() / T::of(2.0f64.sqrt()) * T::of(2.0f64.sqrt()),
                T::zero(),
            )),
            _ => None,
        }
    }
}

/// A weighted separable product of per-axis profiles, matched by axis label.
#[derive(Clone, Debug)]
pub struct SeparableTerm<T> {
    /// Scalar weight of the term.
    pub weight: Complex<T>,
    /// `(axis label, profile)` pairs.
    pub profiles: Vec<(String, Profile<T>)>,
}

impl<T: Real> SeparableTerm<T> {
    /// Builds a term with unit weight.
    pub fn new(profiles: Vec<(&str, Profile<T>)>) -> Self {
        Self {
            weight: Complex::new(T::one(), T::zero()),
            profiles: profiles
                .into_iter()
                .map(|(l, p)| (l.to_string(), p))
                .collect(),
        }
    }

    /// Sets the weight.
    pub fn with_weight(mut self, w: Complex<T>) -> Self {
        self.weight = w;
        self
    }

    fn profile_for(&self, label: &str) -> Option<&Profile<T>> {
        self.profiles
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, p)| p)
    }
}

/// A complex-linear combination of separable terms: the test-function class
/// used by every suite.
#[derive(Clone, Debug)]
pub struct TestFunction<T> {
    /// Terms of the sum.
    pub terms: Vec<SeparableTerm<T>>,
}

impl<T: Real> TestFunction<T> {
    /// Single separable term.
    pub fn separable(profiles: Vec<(&str, Profile<T>)>) -> Self {
        Self {
            terms: vec![SeparableTerm::new(profiles)],
        }
    }

    /// Zero function (empty sum).
    pub fn zero() -> Self {
        Self { terms: vec![] }
    }

    /// True when a single separable term.
    pub fn is_separable(&self) -> bool {
        self.terms.len() == 1
    }

    /// Checks that every grid axis is covered by every term.
    pub fn signature_check(&self, grid: &Grid<T>) -> Result<(), CoreError> {
        for ax in grid.axes() {
            for term in &self.terms {
                if term.profile_for(&ax.label).is_none() {
                    return Err(CoreError::SignatureMismatch {
                        label: ax.label.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Evaluates at labelled coordinates.
    pub fn eval(&self, labels: &[String], coords: &[T]) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for term in &self.terms {
            let mut v = term.weight;
            for (label, x) in labels.iter().zip(coords) {
                match term.profile_for(label) {
                    Some(p) => v = v * p.eval(*x),
                    None => v = Complex::new(T::zero(), T::zero()),
                }
            }
            acc = acc + v;
        }
        acc
    }

    /// Closed-form evaluator bound to a grid's axis order.
    pub fn evaluator(&self, grid: &Grid<T>) -> Result<Evaluator<T>, CoreError> {
        self.signature_check(grid)?;
        let labels: Vec<String> = grid.axes().iter().map(|a| a.label.clone()).collect();
        let tf = self.clone();
        Ok(Arc::new(move |coords: &[T]| tf.eval(&labels, coords)))
    }

    /// Samples onto a grid with the evaluator attached.
    pub fn sample(&self, grid: &Grid<T>) -> Result<GridFunction<T>, CoreError> {
        let eval = self.evaluator(grid)?;
        GridFunction::sample(grid.clone(), eval)
    }

    /// Per-axis profile of a separable test function.
    pub fn profile(&self, label: &str) -> Option<&Profile<T>> {
        if self.terms.len() == 1 {
            self.terms[0].profile_for(label)
        } else {
            None
        }
    }
}
