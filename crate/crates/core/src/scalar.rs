//! Scalar abstraction: every floating-point routine in the crate is generic
//! over [`Real`], implemented for `f32` and `f64`.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};
use std::fmt::{Debug, Display};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal must be representable in the scalar type")
    }

    /// Widens to `f64` for reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar must widen to f64")
    }

    /// Construction tolerance for structural invariants (unimodularity,
    /// factor roundtrips).  `1e-12` in `f64`; scaled up for coarser scalars.
    fn strict_tol() -> Self {
        Self::of(1e-12).max(Self::epsilon() * Self::of(64.0))
    }

    /// Drift tolerance re-checked after products.
    fn drift_tol() -> Self {
        Self::of(1e-9).max(Self::epsilon() * Self::of(4096.0))
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over a [`Real`] scalar.
pub type C<T> = Complex<T>;

/// `e^{iθ}` as a complex number.
pub fn cis<T: Real>(theta: T) -> C<T> {
    C::new(theta.cos(), theta.sin())
}

/// Reduces an angle into `[0, 2π)` (half-open; `2π` maps to `0`).
pub fn wrap_angle<T: Real>(phi: T) -> T {
    let tau = T::TAU();
    let mut r = phi % tau;
    if r < T::zero() {
        r = r + tau;
    }
    // `phi % tau` can round up to exactly tau for phi slightly below zero.
    if r >= tau {
        r = r - tau;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_angle_half_open() {
        assert_eq!(wrap_angle(0.0f64), 0.0);
        assert_eq!(wrap_angle(std::f64::consts::TAU), 0.0);
        assert!(wrap_angle(-1e-300f64) < std::f64::consts::TAU);
        let w = wrap_angle(-0.5f64);
        assert!((w - (std::f64::consts::TAU - 0.5)).abs() < 1e-15);
    }

    #[test]
    fn cis_is_unit() {
        for k in 0..8 {
            let t = 0.7 * k as f64;
            assert!((cis(t).norm() - 1.0).abs() < 1e-15);
        }
    }
}
