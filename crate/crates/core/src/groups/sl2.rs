//! Real 2×2 matrices of determinant one, with the rotation, shear and
//! dilation one-parameter subgroups used throughout the crate.

use crate::error::CoreError;
use crate::scalar::Real;

/// A real 2×2 matrix with `a·d − b·c = 1`.
///
/// Products renormalize by `1/√det` so that determinant drift stays at the
/// roundoff level across long chains of multiplications.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sl2Element<T> {
    /// Top-left entry.
    pub a: T,
    /// Top-right entry.
    pub b: T,
    /// Bottom-left entry.
    pub c: T,
    /// Bottom-right entry.
    pub d: T,
}

impl<T: Real> Sl2Element<T> {
    /// Validating constructor: `|det − 1| ≤ 1e−12` (in `f64`).
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self, CoreError> {
        let m = Self { a, b, c, d };
        m.validate(T::strict_tol())?;
        Ok(m)
    }

    /// Constructor for entries already known to be unimodular (identities,
    /// generator matrices, renormalized products).
    pub fn from_entries_unchecked(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    /// Identity matrix.
    pub fn identity() -> Self {
        Self {
            a: T::one(),
            b: T::zero(),
            c: T::zero(),
            d: T::one(),
        }
    }

    /// Rotation by `phi`: `[[cos φ, −sin φ], [sin φ, cos φ]]`.
    pub fn rotation(phi: T) -> Self {
        let (s, c) = phi.sin_cos();
        Self {
            a: c,
            b: -s,
            c: s,
            d: c,
        }
    }

    /// Upper unitriangular shear `[[1, n], [0, 1]]`.
    pub fn shear(n: T) -> Self {
        Self {
            a: T::one(),
            b: n,
            c: T::zero(),
            d: T::one(),
        }
    }

    /// Dilation `diag(e^t, e^{−t})`; the parameter is the log-scale `t`.
    pub fn dilation(t: T) -> Self {
        let e = t.exp();
        Self {
            a: e,
            b: T::zero(),
            c: T::zero(),
            d: e.recip(),
        }
    }

    /// Generator dispatch by kind; errors on non-finite parameters.
    pub fn generator(kind: GeneratorKind, param: T) -> Result<Self, CoreError> {
        if !param.is_finite() {
            return Err(CoreError::NonFinite { name: "param" });
        }
        Ok(match kind {
            GeneratorKind::Rotation => Self::rotation(param),
            GeneratorKind::Shear => Self::shear(param),
            GeneratorKind::Dilation => Self::dilation(param),
        })
    }

    /// Determinant.
    pub fn det(&self) -> T {
        self.a * self.d - self.b * self.c
    }

    /// Checks `|det − 1| ≤ tol`.
    pub fn validate(&self, tol: T) -> Result<(), CoreError> {
        let drift = (self.det() - T::one()).abs();
        if drift <= tol && drift.is_finite() {
            Ok(())
        } else {
            Err(CoreError::NotUnimodular {
                drift: drift.as_f64(),
            })
        }
    }

    /// Matrix product, renormalized by `1/√det`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let a = self.a * rhs.a + self.b * rhs.c;
        let b = self.a * rhs.b + self.b * rhs.d;
        let c = self.c * rhs.a + self.d * rhs.c;
        let d = self.c * rhs.b + self.d * rhs.d;
        let raw = Self { a, b, c, d };
        raw.renormalized()
    }

    /// Product that reports determinant drift beyond the re-validation
    /// tolerance instead of silently renormalizing bad input.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, CoreError> {
        let a = self.a * rhs.a + self.b * rhs.c;
        let b = self.a * rhs.b + self.b * rhs.d;
        let c = self.c * rhs.a + self.d * rhs.c;
        let d = self.c * rhs.b + self.d * rhs.d;
        let raw = Self { a, b, c, d };
        raw.validate(T::drift_tol())?;
        Ok(raw.renormalized())
    }

    /// Inverse by the adjugate: `[[d, −b], [−c, a]]`.
    pub fn inv(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Largest absolute entry; used for relative residuals.
    pub fn max_abs(&self) -> T {
        self.a
            .abs()
            .max(self.b.abs())
            .max(self.c.abs())
            .max(self.d.abs())
    }

    /// Max-abs entrywise distance to `rhs`.
    pub fn distance(&self, rhs: &Self) -> T {
        (self.a - rhs.a)
            .abs()
            .max((self.b - rhs.b).abs())
            .max((self.c - rhs.c).abs())
            .max((self.d - rhs.d).abs())
    }

    /// Squared Frobenius norm `a² + b² + c² + d²`.
    pub fn frobenius_sq(&self) -> T {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    fn renormalized(self) -> Self {
        let det = self.det();
        if det > T::of(0.25) && det.is_finite() {
            let s = det.sqrt().recip();
            Self {
                a: self.a * s,
                b: self.b * s,
                c: self.c * s,
                d: self.d * s,
            }
        } else {
            // Leave pathological input alone; validate() catches it downstream.
            self
        }
    }
}

/// One-parameter subgroup selector for [`Sl2Element::generator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Rotation subgroup (compact factor).
    Rotation,
    /// Upper unitriangular shears (nilpotent factor).
    Shear,
    /// Positive diagonal dilations (abelian factor), parameterized by log-scale.
    Dilation,
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Sl2Element<f64>;

    #[test]
    fn identity_is_neutral() {
        let g = M::new(2.0, 1.0, 0.0, 0.5).unwrap();
        assert!(M::identity().mul(&g).distance(&g) < 1e-15);
        assert!(g.mul(&M::identity()).distance(&g) < 1e-15);
    }

    #[test]
    fn rotations_add_angles() {
        let r = M::rotation(0.4).mul(&M::rotation(1.1));
        assert!(r.distance(&M::rotation(1.5)) < 1e-14);
    }

    #[test]
    fn product_matches_entrywise_arithmetic() {
        // [[2,0],[0,0.5]] · [[1,1],[0,1]] = [[2,2],[0,0.5]]
        let a = M::new(2.0, 0.0, 0.0, 0.5).unwrap();
        let b = M::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let p = a.mul(&b);
        assert!(p.distance(&M::new(2.0, 2.0, 0.0, 0.5).unwrap()) < 1e-15);
    }

    #[test]
    fn inverse_is_adjugate() {
        // [[2,1],[0,0.5]]⁻¹ = [[0.5,−1],[0,2]]
        let g = M::new(2.0, 1.0, 0.0, 0.5).unwrap();
        let inv = g.inv();
        assert!(inv.distance(&M::new(0.5, -1.0, 0.0, 2.0).unwrap()) < 1e-15);
        assert!(g.mul(&inv).distance(&M::identity()) < 1e-15);
        assert!(M::rotation(0.3).inv().distance(&M::rotation(-0.3)) < 1e-15);
        assert!(M::identity().inv().distance(&M::identity()) == 0.0);
    }

    #[test]
    fn generators_match_displays() {
        assert!(M::generator(GeneratorKind::Rotation, 0.0)
            .unwrap()
            .distance(&M::identity())
            .abs()
            < 1e-15);
        let n = M::generator(GeneratorKind::Shear, 0.5).unwrap();
        assert_eq!((n.a, n.b, n.c, n.d), (1.0, 0.5, 0.0, 1.0));
        let a = M::generator(GeneratorKind::Dilation, 2f64.ln()).unwrap();
        assert!((a.a - 2.0).abs() < 1e-15 && (a.d - 0.5).abs() < 1e-15);
        assert!(M::generator(GeneratorKind::Shear, f64::NAN).is_err());
    }

    #[test]
    fn non_unimodular_rejected() {
        assert!(M::new(1.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn determinant_stable_over_long_chains() {
        let gens = [
            M::rotation(0.7),
            M::dilation(0.3),
            M::shear(-0.9),
            M::rotation(-1.2),
            M::dilation(-0.25),
            M::shear(0.4),
        ];
        let mut g = M::identity();
        for k in 0..10_000 {
            g = g.mul(&gens[k % gens.len()]);
        }
        assert!((g.det() - 1.0).abs() < 1e-12);
    }
}
