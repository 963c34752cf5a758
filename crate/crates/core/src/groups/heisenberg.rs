//! The 3-dimensional Heisenberg group under its two multiplication
//! conventions.
//!
//! The *polarized* law is the one realised by upper unitriangular 3×3
//! matrices (central cocycle `x₁·y₂`); the *symplectic* law uses the
//! antisymmetrized cocycle `x₁·y₂ − x₂·y₁`.  The two are isomorphic but not
//! equal, and only the symplectic cocycle is preserved by unimodular linear
//! substitutions of `(y, x)` — which is why the Jacobi context defaults to
//! it.
//!
//! The laws are polynomial, so everything here is generic over any signed
//! ring (in particular exact rationals in tests).

use num_traits::Num;
use std::ops::Neg;

/// Multiplication convention selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeisConvention {
    /// `z₁ + z₂ + x₁·y₂` (matrix realisation).
    Polarized,
    /// `z₁ + z₂ + x₁·y₂ − x₂·y₁`.
    Symplectic,
}

impl HeisConvention {
    /// Lower-case name used by the CLI.
    pub fn name(self) -> &'static str {
        match self {
            HeisConvention::Polarized => "polarized",
            HeisConvention::Symplectic => "symplectic",
        }
    }

    /// Parses a CLI name.
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "polarized" => Some(HeisConvention::Polarized),
            "symplectic" => Some(HeisConvention::Symplectic),
            _ => None,
        }
    }
}

/// A point of the Heisenberg group in `(z, y, x)` coordinates; `z` is the
/// central coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeisenbergPoint<T> {
    /// Central coordinate.
    pub z: T,
    /// Second coordinate.
    pub y: T,
    /// Acting coordinate (the one that shears `z` in the polarized picture).
    pub x: T,
}

impl<T> HeisenbergPoint<T> {
    /// Packs coordinates.
    pub fn new(z: T, y: T, x: T) -> Self {
        Self { z, y, x }
    }
}

impl<T: Clone + Num + Neg<Output = T>> HeisenbergPoint<T> {
    /// Group identity `(0, 0, 0)`.
    pub fn identity() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    /// Group law under the chosen convention.
    pub fn mul(&self, rhs: &Self, convention: HeisConvention) -> Self {
        let cocycle = match convention {
            HeisConvention::Polarized => self.x.clone() * rhs.y.clone(),
            HeisConvention::Symplectic => {
                self.x.clone() * rhs.y.clone() - rhs.x.clone() * self.y.clone()
            }
        };
        Self::new(
            self.z.clone() + rhs.z.clone() + cocycle,
            self.y.clone() + rhs.y.clone(),
            self.x.clone() + rhs.x.clone(),
        )
    }

    /// Group inverse: `(−z, −y, −x)` symplectic, `(−z + x·y, −y, −x)`
    /// polarized.
    pub fn inv(&self, convention: HeisConvention) -> Self {
        match convention {
            HeisConvention::Symplectic => {
                Self::new(-self.z.clone(), -self.y.clone(), -self.x.clone())
            }
            HeisConvention::Polarized => Self::new(
                -self.z.clone() + self.x.clone() * self.y.clone(),
                -self.y.clone(),
                -self.x.clone(),
            ),
        }
    }
}

impl<T: crate::scalar::Real> HeisenbergPoint<T> {
    /// Max-abs coordinate distance.
    pub fn distance(&self, rhs: &Self) -> T {
        (self.z - rhs.z)
            .abs()
            .max((self.y - rhs.y).abs())
            .max((self.x - rhs.x).abs())
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> T {
        self.z.abs().max(self.y.abs()).max(self.x.abs())
    }
}
