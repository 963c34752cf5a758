//! Extension groups and abelian companions used by the lift machinery.
//!
//! * `Q` — Heisenberg × SL(2,ℝ) × SL(2,ℝ) with the second matrix slot acting
//!   on the Heisenberg part; the Jacobi group embeds as `(X, I, M)` and the
//!   companion `A = N × SL(2,ℝ)` as the direct-product slice `(X, M, I)`.
//! * `E` — ℝ² × ℝ × ℝ with the last slot shearing the ℝ² part:
//!   `(n,a,b)(m,x,y) = (n + σ(b)m, a+x, b+y)`, `σ(b)(m_z, m_y) = (m_z + b·m_y, m_y)`.
//! * `𝔣` (here `FrakPoint`) — the abelian companion ℝ² × ℝ.
//! * `S` — ℝ ⋊ ℝ₊* with `(n₁,a₁)(n₂,a₂) = (n₁ + a₁²·n₂, a₁a₂)`.
//! * `W` — ℝ × ℝ₊* × ℝ₊* with the last slot acting:
//!   `(n,x,y)(m,a,b) = (n + y²·m, x·a, y·b)`.
//! * `K₆` — the abelian companion ℝ × ℝ₊* of `S` (direct product slice of `W`).
//! * `V` — ℝ⁴ ⋊-style nilpotent part (third slot inert, fourth slot
//!   shearing) in direct product with `S`; `B` is its abelian companion.
//!
//! Shear-type laws are polynomial and generic over any signed ring; the
//! multiplicative laws additionally need division and an order (exact
//! rationals still qualify).

use num_traits::Num;
use std::ops::Neg;

use crate::error::CoreError;
use crate::scalar::Real;

use super::heisenberg::HeisenbergPoint;
use super::jacobi::{sl2_action, JacobiContext};
use super::sl2::Sl2Element;

/// Shear of the plane: `σ(b)(z, y) = (z + b·y, y)`.
pub fn plane_shear<T: Clone + Num>(b: T, z: T, y: T) -> (T, T) {
    (z + b * y.clone(), y)
}

/// Squared-scale action on the line: `ϱ(a)(n) = a²·n`.
pub fn squared_scale<T: Clone + Num>(a: T, n: T) -> T {
    a.clone() * a * n
}

// ---------------------------------------------------------------------------
// E and its abelian companion 𝔣
// ---------------------------------------------------------------------------

/// Point of the extension group `E = ℝ² × ℝ × ℝ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EPoint<T> {
    /// First plane coordinate (sheared slot).
    pub nz: T,
    /// Second plane coordinate.
    pub ny: T,
    /// Inert line coordinate.
    pub a: T,
    /// Acting line coordinate.
    pub b: T,
}

impl<T: Clone + Num + Neg<Output = T>> EPoint<T> {
    /// Packs coordinates.
    pub fn new(nz: T, ny: T, a: T, b: T) -> Self {
        Self { nz, ny, a, b }
    }

    /// Identity `((0,0),0,0)`.
    pub fn identity() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    /// `(n,a,b)(m,x,y) = (n + σ(b)m, a+x, b+y)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (mz, my) = plane_shear(self.b.clone(), rhs.nz.clone(), rhs.ny.clone());
        Self::new(
            self.nz.clone() + mz,
            self.ny.clone() + my,
            self.a.clone() + rhs.a.clone(),
            self.b.clone() + rhs.b.clone(),
        )
    }

    /// `(n,a,b)⁻¹ = (−σ(−b)n, −a, −b)`.
    pub fn inv(&self) -> Self {
        let (wz, wy) = plane_shear(-self.b.clone(), self.nz.clone(), self.ny.clone());
        Self::new(-wz, -wy, -self.a.clone(), -self.b.clone())
    }
}

impl<T: Real> EPoint<T> {
    /// Max-abs coordinate distance.
    pub fn distance(&self, rhs: &Self) -> T {
        (self.nz - rhs.nz)
            .abs()
            .max((self.ny - rhs.ny).abs())
            .max((self.a - rhs.a).abs())
            .max((self.b - rhs.b).abs())
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> T {
        self.nz.abs().max(self.ny.abs()).max(self.a.abs()).max(self.b.abs())
    }
}

/// Point of the abelian companion `𝔣 = ℝ² × ℝ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrakPoint<T> {
    /// First plane coordinate.
    pub nz: T,
    /// Second plane coordinate.
    pub ny: T,
    /// Line coordinate.
    pub a: T,
}

impl<T: Clone + Num + Neg<Output = T>> FrakPoint<T> {
    /// Packs coordinates.
    pub fn new(nz: T, ny: T, a: T) -> Self {
        Self { nz, ny, a }
    }

    /// Identity.
    pub fn identity() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    /// Componentwise addition.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.nz.clone() + rhs.nz.clone(),
            self.ny.clone() + rhs.ny.clone(),
            self.a.clone() + rhs.a.clone(),
        )
    }

    /// Componentwise negation.
    pub fn inv(&self) -> Self {
        Self::new(-self.nz.clone(), -self.ny.clone(), -self.a.clone())
    }
}

// ---------------------------------------------------------------------------
// S, W and the abelian companion K₆
// ---------------------------------------------------------------------------

/// Point of the solvable group `S = ℝ ⋊ ℝ₊*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SPoint<T> {
    /// Translation coordinate.
    pub n: T,
    /// Multiplicative coordinate (strictly positive).
    pub a: T,
}

impl<T: Clone + Num + Neg<Output = T> + PartialOrd> SPoint<T> {
    /// Validating constructor.
    pub fn new(n: T, a: T) -> Result<Self, CoreError>
    where
        T: Real,
    {
        if a <= T::zero() {
            return Err(CoreError::NonPositive {
                name: "a",
                value: a.as_f64(),
            });
        }
        Ok(Self { n, a })
    }

    /// Constructor without the positivity check (exact arithmetic tests).
    pub fn new_unchecked(n: T, a: T) -> Self {
        Self { n, a }
    }

    /// Identity `(0, 1)`.
    pub fn identity() -> Self {
        Self {
            n: T::zero(),
            a: T::one(),
        }
    }

    /// `(n₁,a₁)(n₂,a₂) = (n₁ + a₁²·n₂, a₁·a₂)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            n: self.n.clone() + squared_scale(self.a.clone(), rhs.n.clone()),
            a: self.a.clone() * rhs.a.clone(),
        }
    }

    /// `(n,a)⁻¹ = (−n/a², 1/a)`.
    pub fn inv(&self) -> Self {
        let ainv = T::one() / self.a.clone();
        Self {
            n: -squared_scale(ainv.clone(), self.n.clone()),
            a: ainv,
        }
    }
}

impl<T: Real> SPoint<T> {
    /// Max-abs coordinate distance (log-scale on the multiplicative slot).
    pub fn distance(&self, rhs: &Self) -> T {
        (self.n - rhs.n).abs().max((self.a.ln() - rhs.a.ln()).abs())
    }
}

/// Point of the extension group `W = ℝ × ℝ₊* × ℝ₊*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WPoint<T> {
    /// Translation coordinate.
    pub n: T,
    /// Inert multiplicative coordinate.
    pub x: T,
    /// Acting multiplicative coordinate.
    pub y: T,
}

impl<T: Clone + Num + Neg<Output = T> + PartialOrd> WPoint<T> {
    /// Validating constructor.
    pub fn new(n: T, x: T, y: T) -> Result<Self, CoreError>
    where
        T: Real,
    {
        if x <= T::zero() {
            return Err(CoreError::NonPositive {
                name: "x",
                value: x.as_f64(),
            });
        }
        if y <= T::zero() {
            return Err(CoreError::NonPositive {
                name: "y",
                value: y.as_f64(),
            });
        }
        Ok(Self { n, x, y })
    }

    /// Constructor without the positivity check.
    pub fn new_unchecked(n: T, x: T, y: T) -> Self {
        Self { n, x, y }
    }

    /// Identity `(0, 1, 1)`.
    pub fn identity() -> Self {
        Self {
            n: T::zero(),
            x: T::one(),
            y: T::one(),
        }
    }

    /// `(n,x,y)(m,a,b) = (n + y²·m, x·a, y·b)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            n: self.n.clone() + squared_scale(self.y.clone(), rhs.n.clone()),
            x: self.x.clone() * rhs.x.clone(),
            y: self.y.clone() * rhs.y.clone(),
        }
    }

    /// Inverse.
    pub fn inv(&self) -> Self {
        let yinv = T::one() / self.y.clone();
        Self {
            n: -squared_scale(yinv.clone(), self.n.clone()),
            x: T::one() / self.x.clone(),
            y: yinv,
        }
    }
}

impl<T: Real> WPoint<T> {
    /// Max-abs coordinate distance (log-scale on multiplicative slots).
    pub fn distance(&self, rhs: &Self) -> T {
        (self.n - rhs.n)
            .abs()
            .max((self.x.ln() - rhs.x.ln()).abs())
            .max((self.y.ln() - rhs.y.ln()).abs())
    }
}

/// Point of the abelian companion `K₆ = ℝ × ℝ₊*` (the inert slice of `W`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K6Point<T> {
    /// Translation coordinate.
    pub n: T,
    /// Multiplicative coordinate.
    pub a: T,
}

impl<T: Clone + Num + Neg<Output = T>> K6Point<T> {
    /// Identity `(0, 1)`.
    pub fn identity() -> Self {
        Self {
            n: T::zero(),
            a: T::one(),
        }
    }

    /// Direct product law `(n₁,a₁)(n₂,a₂) = (n₁+n₂, a₁·a₂)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            n: self.n.clone() + rhs.n.clone(),
            a: self.a.clone() * rhs.a.clone(),
        }
    }

    /// Inverse.
    pub fn inv(&self) -> Self {
        Self {
            n: -self.n.clone(),
            a: T::one() / self.a.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

/// Element of `Q = H × SL(2,ℝ) ⋊ SL(2,ℝ)`; the second matrix slot acts on
/// the Heisenberg part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QElement<T> {
    /// Heisenberg component.
    pub h: HeisenbergPoint<T>,
    /// Inert matrix slot.
    pub m1: Sl2Element<T>,
    /// Acting matrix slot.
    pub m2: Sl2Element<T>,
}

impl<T: Real> QElement<T> {
    /// Packs the three components.
    pub fn new(h: HeisenbergPoint<T>, m1: Sl2Element<T>, m2: Sl2Element<T>) -> Self {
        Self { h, m1, m2 }
    }

    /// Identity element.
    pub fn identity() -> Self {
        Self::new(
            HeisenbergPoint::identity(),
            Sl2Element::identity(),
            Sl2Element::identity(),
        )
    }

    /// `(X₁,M₁,M₂)(Y₁,N₁,N₂) = (X₁ · act(M₂)(Y₁), M₁N₁, M₂N₂)` under `ctx`.
    pub fn mul(&self, rhs: &Self, ctx: &JacobiContext) -> Self {
        Self::new(
            self.h
                .mul(&sl2_action(&self.m2, &rhs.h, ctx.action), ctx.heis),
            self.m1.mul(&rhs.m1),
            self.m2.mul(&rhs.m2),
        )
    }

    /// Inverse `(act(M₂⁻¹)(X⁻¹), M₁⁻¹, M₂⁻¹)` under `ctx`.
    pub fn inv(&self, ctx: &JacobiContext) -> Self {
        let m2inv = self.m2.inv();
        Self::new(
            sl2_action(&m2inv, &self.h.inv(ctx.heis), ctx.action),
            self.m1.inv(),
            m2inv,
        )
    }

    /// Max-abs distance across all coordinates.
    pub fn distance(&self, rhs: &Self) -> T {
        self.h
            .distance(&rhs.h)
            .max(self.m1.distance(&rhs.m1))
            .max(self.m2.distance(&rhs.m2))
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> T {
        self.h.max_abs().max(self.m1.max_abs()).max(self.m2.max_abs())
    }
}

// ---------------------------------------------------------------------------
// V and its abelian companion B
// ---------------------------------------------------------------------------

/// Element of `V`: four nilpotent coordinates (fourth slot shears the first)
/// in direct product with `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VPoint<T> {
    /// Sheared slot.
    pub n3: T,
    /// Shearing partner of `n3`.
    pub n2: T,
    /// Inert slot.
    pub n1: T,
    /// Acting slot.
    pub n4: T,
    /// Direct `S` factor.
    pub s: SPoint<T>,
}

impl<T: Clone + Num + Neg<Output = T> + PartialOrd> VPoint<T> {
    /// Packs coordinates.
    pub fn new(n3: T, n2: T, n1: T, n4: T, s: SPoint<T>) -> Self {
        Self { n3, n2, n1, n4, s }
    }

    /// Identity.
    pub fn identity() -> Self {
        Self::new(
            T::zero(),
            T::zero(),
            T::zero(),
            T::zero(),
            SPoint::identity(),
        )
    }

    /// `(n₃,n₂,n₁,n₄)(m₃,m₂,m₁,m₄) = (n₃+m₃+n₄·m₂, n₂+m₂, n₁+m₁, n₄+m₄)`,
    /// direct product with the `S` law.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.n3.clone() + rhs.n3.clone() + self.n4.clone() * rhs.n2.clone(),
            self.n2.clone() + rhs.n2.clone(),
            self.n1.clone() + rhs.n1.clone(),
            self.n4.clone() + rhs.n4.clone(),
            self.s.mul(&rhs.s),
        )
    }

    /// Inverse.
    pub fn inv(&self) -> Self {
        Self::new(
            -self.n3.clone() + self.n4.clone() * self.n2.clone(),
            -self.n2.clone(),
            -self.n1.clone(),
            -self.n4.clone(),
            self.s.inv(),
        )
    }
}

impl<T: Real> VPoint<T> {
    /// Max-abs coordinate distance.
    pub fn distance(&self, rhs: &Self) -> T {
        (self.n3 - rhs.n3)
            .abs()
            .max((self.n2 - rhs.n2).abs())
            .max((self.n1 - rhs.n1).abs())
            .max((self.n4 - rhs.n4).abs())
            .max(self.s.distance(&rhs.s))
    }
}

/// Element of the companion `B = ℝ² × ℝ × S` (abelian in the first three
/// slots, direct product with `S`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BPoint<T> {
    /// First abelian slot.
    pub n3: T,
    /// Second abelian slot.
    pub n2: T,
    /// Third abelian slot.
    pub n1: T,
    /// Direct `S` factor.
    pub s: SPoint<T>,
}

impl<T: Clone + Num + Neg<Output = T> + PartialOrd> BPoint<T> {
    /// Identity.
    pub fn identity() -> Self {
        Self {
            n3: T::zero(),
            n2: T::zero(),
            n1: T::zero(),
            s: SPoint::identity(),
        }
    }

    /// Componentwise addition on the abelian slots, `S` law on the factor.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            n3: self.n3.clone() + rhs.n3.clone(),
            n2: self.n2.clone() + rhs.n2.clone(),
            n1: self.n1.clone() + rhs.n1.clone(),
            s: self.s.mul(&rhs.s),
        }
    }

    /// Inverse.
    pub fn inv(&self) -> Self {
        Self {
            n3: -self.n3.clone(),
            n2: -self.n2.clone(),
            n1: -self.n1.clone(),
            s: self.s.inv(),
        }
    }
}
