//! Uniform interface over the group laws, used by the randomized axiom
//! checker and the CLI.

use rand::Rng;

use crate::scalar::Real;

use super::extended::{BPoint, EPoint, FrakPoint, QElement, SPoint, VPoint, WPoint};
use super::heisenberg::{HeisConvention, HeisenbergPoint};
use super::jacobi::{sl2_action, JacobiContext, JacobiElement};
use super::sl2::Sl2Element;

/// A group law together with bounded random sampling and a residual metric.
pub trait GroupLaw<T: Real> {
    /// Element type.
    type Point: Clone;

    /// Display name.
    fn name(&self) -> &'static str;

    /// Group product.
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point;

    /// Group inverse.
    fn inv(&self, p: &Self::Point) -> Self::Point;

    /// Identity element.
    fn identity(&self) -> Self::Point;

    /// Draws a bounded random element.
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point;

    /// Max-abs coordinate distance between two elements.
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T;

    /// Scale of an element, for relative residuals.
    fn magnitude(&self, p: &Self::Point) -> T;

    /// For semidirect laws: residual of the acting maps being group
    /// automorphisms, measured on a random triple.  `None` when the law has
    /// no acting part.
    fn automorphism_residual<R: Rng>(&self, _rng: &mut R) -> Option<T> {
        None
    }
}

fn uniform<T: Real, R: Rng>(rng: &mut R, lo: f64, hi: f64) -> T {
    T::of(rng.gen_range(lo..hi))
}

/// Bounded random unimodular matrix (product of bounded generators).
pub fn sample_sl2<T: Real, R: Rng>(rng: &mut R) -> Sl2Element<T> {
    Sl2Element::rotation(uniform(rng, 0.0, std::f64::consts::TAU))
        .mul(&Sl2Element::dilation(uniform(rng, -1.0, 1.0)))
        .mul(&Sl2Element::shear(uniform(rng, -1.0, 1.0)))
}

/// Bounded random Heisenberg point.
pub fn sample_heis<T: Real, R: Rng>(rng: &mut R) -> HeisenbergPoint<T> {
    HeisenbergPoint::new(
        uniform(rng, -1.0, 1.0),
        uniform(rng, -1.0, 1.0),
        uniform(rng, -1.0, 1.0),
    )
}

fn sample_s<T: Real, R: Rng>(rng: &mut R) -> SPoint<T> {
    SPoint::new_unchecked(uniform(rng, -1.0, 1.0), uniform::<T, _>(rng, -0.8, 0.8).exp())
}

// --- SL(2,ℝ) ---------------------------------------------------------------

/// Law object for `SL(2,ℝ)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sl2Law;

impl<T: Real> GroupLaw<T> for Sl2Law {
    type Point = Sl2Element<T>;

    fn name(&self) -> &'static str {
        "sl2"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv()
    }
    fn identity(&self) -> Self::Point {
        Sl2Element::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        sample_sl2(rng)
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        p.distance(q)
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.max_abs()
    }
}

// --- Heisenberg -------------------------------------------------------------

/// Law object for a Heisenberg convention.
#[derive(Clone, Copy, Debug)]
pub struct HeisLaw(pub HeisConvention);

impl<T: Real> GroupLaw<T> for HeisLaw {
    type Point = HeisenbergPoint<T>;

    fn name(&self) -> &'static str {
        match self.0 {
            HeisConvention::Polarized => "heisenberg-polarized",
            HeisConvention::Symplectic => "heisenberg-symplectic",
        }
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q, self.0)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv(self.0)
    }
    fn identity(&self) -> Self::Point {
        HeisenbergPoint::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        sample_heis(rng)
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        p.distance(q)
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.max_abs()
    }
}

// --- Jacobi -----------------------------------------------------------------

/// Law object for the Jacobi group under a convention pair.
#[derive(Clone, Copy, Debug)]
pub struct JacobiLaw(pub JacobiContext);

impl<T: Real> GroupLaw<T> for JacobiLaw {
    type Point = JacobiElement<T>;

    fn name(&self) -> &'static str {
        "jacobi"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        self.0.mul(p, q)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        self.0.inv(p)
    }
    fn identity(&self) -> Self::Point {
        self.0.identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        JacobiElement::new(sample_heis(rng), sample_sl2(rng))
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        p.distance(q)
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.max_abs()
    }
    fn automorphism_residual<R: Rng>(&self, rng: &mut R) -> Option<T> {
        let m = sample_sl2(rng);
        let (p, q) = (sample_heis(rng), sample_heis(rng));
        let lhs = sl2_action(&m, &p.mul(&q, self.0.heis), self.0.action);
        let rhs = sl2_action(&m, &p, self.0.action)
            .mul(&sl2_action(&m, &q, self.0.action), self.0.heis);
        Some(lhs.distance(&rhs))
    }
}

// --- Q ----------------------------------------------------------------------

/// Law object for the extension group `Q`.
#[derive(Clone, Copy, Debug)]
pub struct QLaw(pub JacobiContext);

impl<T: Real> GroupLaw<T> for QLaw {
    type Point = QElement<T>;

    fn name(&self) -> &'static str {
        "q"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q, &self.0)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv(&self.0)
    }
    fn identity(&self) -> Self::Point {
        QElement::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        QElement::new(sample_heis(rng), sample_sl2(rng), sample_sl2(rng))
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        p.distance(q)
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.max_abs()
    }
    fn automorphism_residual<R: Rng>(&self, rng: &mut R) -> Option<T> {
        JacobiLaw(self.0).automorphism_residual(rng)
    }
}

// --- E ------------------------------------------------------------------

/// Law object for the extension group `E`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ELaw;

impl<T: Real> GroupLaw<T> for ELaw {
    type Point = EPoint<T>;

    fn name(&self) -> &'static str {
        "e"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv()
    }
    fn identity(&self) -> Self::Point {
        EPoint::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        EPoint::new(
            uniform(rng, -1.0, 1.0),
            uniform(rng, -1.0, 1.0),
            uniform(rng, -1.0, 1.0),
            uniform(rng, -1.0, 1.0),
        )
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        p.distance(q)
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.max_abs()
    }
    fn automorphism_residual<R: Rng>(&self, rng: &mut R) -> Option<T> {
        // σ(b) is additive on the plane: exact automorphism of (ℝ², +).
        let b: T = uniform(rng, -1.0, 1.0);
        let (p1, p2): (T, T) = (uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
        let (q1, q2): (T, T) = (uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
        let (sz, sy) = super::extended::plane_shear(b, p1 + q1, p2 + q2);
        let (az, ay) = super::extended::plane_shear(b, p1, p2);
        let (bz, by) = super::extended::plane_shear(b, q1, q2);
        Some((sz - (az + bz)).abs().max((sy - (ay + by)).abs()))
    }
}

// --- S ------------------------------------------------------------------

/// Law object for the solvable group `S`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SLaw;

impl<T: Real> GroupLaw<T> for SLaw {
    type Point = SPoint<T>;

    fn name(&self) -> &'static str {
        "s"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv()
    }
    fn identity(&self) -> Self::Point {
        SPoint::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        sample_s(rng)
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        p.distance(q)
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.n.abs().max(p.a.ln().abs()).max(T::one())
    }
    fn automorphism_residual<R: Rng>(&self, rng: &mut R) -> Option<T> {
        // ϱ(a) is linear on ℝ: exact automorphism.
        let a: T = uniform::<T, _>(rng, -0.8, 0.8).exp();
        let (m, n): (T, T) = (uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
        let lhs = super::extended::squared_scale(a, m + n);
        let rhs = super::extended::squared_scale(a, m) + super::extended::squared_scale(a, n);
        Some((lhs - rhs).abs())
    }
}

// --- W ------------------------------------------------------------------

/// Law object for the extension group `W`.
#[derive(Clone, Copy, Debug, Default)]
pub struct WLaw;

impl<T: Real> GroupLaw<T> for WLaw {
    type Point = WPoint<T>;

    fn name(&self) -> &'static str {
        "w"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv()
    }
    fn identity(&self) -> Self::Point {
        WPoint::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        WPoint::new_unchecked(
            uniform(rng, -1.0, 1.0),
            uniform::<T, _>(rng, -0.8, 0.8).exp(),
            uniform::<T, _>(rng, -0.8, 0.8).exp(),
        )
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        p.distance(q)
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.n.abs().max(T::one())
    }
    fn automorphism_residual<R: Rng>(&self, rng: &mut R) -> Option<T> {
        <SLaw as GroupLaw<T>>::automorphism_residual(&SLaw, rng)
    }
}

// --- V ------------------------------------------------------------------

/// Law object for the extension group `V`.
#[derive(Clone, Copy, Debug, Default)]
pub struct VLaw;

impl<T: Real> GroupLaw<T> for VLaw {
    type Point = VPoint<T>;

    fn name(&self) -> &'static str {
        "v"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv()
    }
    fn identity(&self) -> Self::Point {
        VPoint::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        VPoint::new(
            uniform(rng, -1.0, 1.0),
            uniform(rng, -1.0, 1.0),
            uniform(rng, -1.0, 1.0),
            uniform(rng, -1.0, 1.0),
            sample_s(rng),
        )
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        p.distance(q)
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.n3.abs()
            .max(p.n2.abs())
            .max(p.n1.abs())
            .max(p.n4.abs())
            .max(T::one())
    }
    fn automorphism_residual<R: Rng>(&self, rng: &mut R) -> Option<T> {
        <ELaw as GroupLaw<T>>::automorphism_residual(&ELaw, rng)
    }
}

// --- abelian companions --------------------------------------------------

/// Law object for the abelian companion `𝔣`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FrakLaw;

impl<T: Real> GroupLaw<T> for FrakLaw {
    type Point = FrakPoint<T>;

    fn name(&self) -> &'static str {
        "frak"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv()
    }
    fn identity(&self) -> Self::Point {
        FrakPoint::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        FrakPoint::new(
            uniform(rng, -1.0, 1.0),
            uniform(rng, -1.0, 1.0),
            uniform(rng, -1.0, 1.0),
        )
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        (p.nz - q.nz)
            .abs()
            .max((p.ny - q.ny).abs())
            .max((p.a - q.a).abs())
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.nz.abs().max(p.ny.abs()).max(p.a.abs()).max(T::one())
    }
}

/// Law object for the companion `B`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BLaw;

impl<T: Real> GroupLaw<T> for BLaw {
    type Point = BPoint<T>;

    fn name(&self) -> &'static str {
        "b"
    }
    fn mul(&self, p: &Self::Point, q: &Self::Point) -> Self::Point {
        p.mul(q)
    }
    fn inv(&self, p: &Self::Point) -> Self::Point {
        p.inv()
    }
    fn identity(&self) -> Self::Point {
        BPoint::identity()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Point {
        BPoint {
            n3: uniform(rng, -1.0, 1.0),
            n2: uniform(rng, -1.0, 1.0),
            n1: uniform(rng, -1.0, 1.0),
            s: sample_s(rng),
        }
    }
    fn distance(&self, p: &Self::Point, q: &Self::Point) -> T {
        (p.n3 - q.n3)
            .abs()
            .max((p.n2 - q.n2).abs())
            .max((p.n1 - q.n1).abs())
            .max(p.s.distance(&q.s))
    }
    fn magnitude(&self, p: &Self::Point) -> T {
        p.n3.abs().max(p.n2.abs()).max(p.n1.abs()).max(T::one())
    }
}
