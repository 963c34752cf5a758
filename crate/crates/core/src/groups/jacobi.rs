//! The Jacobi group: Heisenberg points extended by unimodular matrices
//! acting linearly on the `(y, x)` plane.
//!
//! The raw row-vector substitution `(y, x) ↦ (y, x)·M` composes
//! contravariantly (`act(M₁)∘act(M₂) = act(M₂·M₁)`), so it is a *right*
//! action; replacing `M` by `M⁻¹` turns it into a genuine left action.  Both
//! conventions are available, but only the left action combined with the
//! symplectic Heisenberg law satisfies the semidirect-product axioms — the
//! context constructor enforces exactly that pair, and the axiom checker
//! measures what fails for the other combinations.

use crate::error::CoreError;
use crate::scalar::Real;

use super::heisenberg::{HeisConvention, HeisenbergPoint};
use super::sl2::Sl2Element;

/// How a matrix acts on a Heisenberg point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionConvention {
    /// Row-vector substitution `(z, y·a + x·c, y·b + x·d)` — composes
    /// contravariantly.
    PaperRight,
    /// The same substitution with `M⁻¹`; a genuine left action.
    InverseLeft,
}

impl ActionConvention {
    /// Lower-case name used by the CLI.
    pub fn name(self) -> &'static str {
        match self {
            ActionConvention::PaperRight => "paper_right",
            ActionConvention::InverseLeft => "inverse_left",
        }
    }

    /// Parses a CLI name.
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paper_right" => Some(ActionConvention::PaperRight),
            "inverse_left" => Some(ActionConvention::InverseLeft),
            _ => None,
        }
    }
}

/// Applies the configured linear substitution to the `(y, x)` plane, fixing
/// the centre.
pub fn sl2_action<T: Real>(
    m: &Sl2Element<T>,
    p: &HeisenbergPoint<T>,
    convention: ActionConvention,
) -> HeisenbergPoint<T> {
    let w = match convention {
        ActionConvention::PaperRight => *m,
        ActionConvention::InverseLeft => m.inv(),
    };
    HeisenbergPoint::new(
        p.z,
        p.y * w.a + p.x * w.c,
        p.y * w.b + p.x * w.d,
    )
}

/// Convention pair defining the semidirect product structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JacobiContext {
    /// Heisenberg multiplication convention.
    pub heis: HeisConvention,
    /// Action convention.
    pub action: ActionConvention,
}

impl JacobiContext {
    /// Validating constructor.
    ///
    /// Rejects pairs that fail the group axioms: the polarized cocycle is
    /// not preserved by the linear substitutions, and the right action
    /// composes contravariantly, so only symplectic + inverse-left survives.
    pub fn new(heis: HeisConvention, action: ActionConvention) -> Result<Self, CoreError> {
        match (heis, action) {
            (HeisConvention::Symplectic, ActionConvention::InverseLeft) => {
                Ok(Self { heis, action })
            }
            (HeisConvention::Polarized, _) => Err(CoreError::BadContext {
                reason: "the linear substitution is not an automorphism of the polarized law"
                    .into(),
            }),
            (_, ActionConvention::PaperRight) => Err(CoreError::BadContext {
                reason: "the row-vector substitution composes contravariantly; the semidirect \
                         law is not associative with it"
                    .into(),
            }),
        }
    }

    /// Default context: symplectic law, inverse-left action.
    pub fn standard() -> Self {
        Self {
            heis: HeisConvention::Symplectic,
            action: ActionConvention::InverseLeft,
        }
    }

    /// Bypasses validation so the axiom checker (and the harness) can measure
    /// exactly how the rejected combinations fail.
    pub fn unchecked(heis: HeisConvention, action: ActionConvention) -> Self {
        Self { heis, action }
    }

    /// Semidirect product `(X₁, M₁)(X₂, M₂) = (X₁ · act(M₁)(X₂), M₁M₂)`.
    pub fn mul<T: Real>(&self, g1: &JacobiElement<T>, g2: &JacobiElement<T>) -> JacobiElement<T> {
        JacobiElement {
            h: g1
                .h
                .mul(&sl2_action(&g1.m, &g2.h, self.action), self.heis),
            m: g1.m.mul(&g2.m),
        }
    }

    /// Inverse `(act(M⁻¹)(X⁻¹), M⁻¹)`.
    pub fn inv<T: Real>(&self, g: &JacobiElement<T>) -> JacobiElement<T> {
        let minv = g.m.inv();
        JacobiElement {
            h: sl2_action(&minv, &g.h.inv(self.heis), self.action),
            m: minv,
        }
    }

    /// Identity element `((0,0,0), I)`.
    pub fn identity<T: Real>(&self) -> JacobiElement<T> {
        JacobiElement {
            h: HeisenbergPoint::identity(),
            m: Sl2Element::identity(),
        }
    }
}

/// Element of the Jacobi group: a Heisenberg point paired with a unimodular
/// matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiElement<T> {
    /// Heisenberg component.
    pub h: HeisenbergPoint<T>,
    /// Matrix component.
    pub m: Sl2Element<T>,
}

impl<T: Real> JacobiElement<T> {
    /// Packs the two components.
    pub fn new(h: HeisenbergPoint<T>, m: Sl2Element<T>) -> Self {
        Self { h, m }
    }

    /// Max-abs distance across all coordinates.
    pub fn distance(&self, rhs: &Self) -> T {
        self.h.distance(&rhs.h).max(self.m.distance(&rhs.m))
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> T {
        self.h.max_abs().max(self.m.max_abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type M = Sl2Element<f64>;
    type H = HeisenbergPoint<f64>;

    fn rand_m(rng: &mut ChaCha8Rng) -> M {
        M::rotation(rng.gen_range(0.0..std::f64::consts::TAU))
            .mul(&M::dilation(rng.gen_range(-1.0..1.0)))
            .mul(&M::shear(rng.gen_range(-1.0..1.0)))
    }

    fn rand_h(rng: &mut ChaCha8Rng) -> H {
        H::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
    }

    #[test]
    fn paper_right_matches_row_vector_formula() {
        let m = M::new(2.0, 1.0, 0.0, 0.5).unwrap();
        let p = H::new(5.0, 1.0, 2.0);
        let q = sl2_action(&m, &p, ActionConvention::PaperRight);
        // (z, y·a + x·c, y·b + x·d) = (5, a + 2c, b + 2d)
        assert_eq!((q.z, q.y, q.x), (5.0, 2.0, 2.0));
    }

    #[test]
    fn identity_acts_trivially() {
        let p = H::new(0.4, -0.7, 1.1);
        for conv in [ActionConvention::PaperRight, ActionConvention::InverseLeft] {
            assert_eq!(sl2_action(&M::identity(), &p, conv), p);
        }
    }

    #[test]
    fn composition_covariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let (m1, m2) = (rand_m(&mut rng), rand_m(&mut rng));
            let p = rand_h(&mut rng);
            // inverse_left: act(M₁)∘act(M₂) = act(M₁·M₂)
            let left = sl2_action(
                &m1,
                &sl2_action(&m2, &p, ActionConvention::InverseLeft),
                ActionConvention::InverseLeft,
            );
            let fused = sl2_action(&m1.mul(&m2), &p, ActionConvention::InverseLeft);
            assert!(left.distance(&fused) < 1e-12);
            // paper_right: act(M₁)∘act(M₂) = act(M₂·M₁)
            let right = sl2_action(
                &m1,
                &sl2_action(&m2, &p, ActionConvention::PaperRight),
                ActionConvention::PaperRight,
            );
            let fused_r = sl2_action(&m2.mul(&m1), &p, ActionConvention::PaperRight);
            assert!(right.distance(&fused_r) < 1e-12);
        }
    }

    #[test]
    fn symplectic_action_is_an_automorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let m = rand_m(&mut rng);
            let (p, q) = (rand_h(&mut rng), rand_h(&mut rng));
            for conv in [ActionConvention::PaperRight, ActionConvention::InverseLeft] {
                let lhs = sl2_action(&m, &p.mul(&q, HeisConvention::Symplectic), conv);
                let rhs = sl2_action(&m, &p, conv)
                    .mul(&sl2_action(&m, &q, conv), HeisConvention::Symplectic);
                assert!(lhs.distance(&rhs) < 1e-12);
            }
        }
    }

    #[test]
    fn context_rejects_inconsistent_pairs() {
        assert!(JacobiContext::new(HeisConvention::Symplectic, ActionConvention::InverseLeft)
            .is_ok());
        assert!(
            JacobiContext::new(HeisConvention::Polarized, ActionConvention::PaperRight).is_err()
        );
        assert!(
            JacobiContext::new(HeisConvention::Polarized, ActionConvention::InverseLeft).is_err()
        );
        assert!(
            JacobiContext::new(HeisConvention::Symplectic, ActionConvention::PaperRight).is_err()
        );
    }

    #[test]
    fn embeddings() {
        let ctx = JacobiContext::standard();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            // Heisenberg embedding: (X₁, I)(X₂, I) = (X₁·X₂, I).
            let (x1, x2) = (rand_h(&mut rng), rand_h(&mut rng));
            let p = ctx.mul(
                &JacobiElement::new(x1, M::identity()),
                &JacobiElement::new(x2, M::identity()),
            );
            assert!(p.h.distance(&x1.mul(&x2, ctx.heis)) < 1e-14);
            assert!(p.m.distance(&M::identity()) < 1e-14);
            // SL2 embedding: (0, M₁)(0, M₂) = (0, M₁M₂).
            let (m1, m2) = (rand_m(&mut rng), rand_m(&mut rng));
            let q = ctx.mul(
                &JacobiElement::new(H::identity(), m1),
                &JacobiElement::new(H::identity(), m2),
            );
            assert!(q.h.distance(&H::identity()) < 1e-14);
            assert!(q.m.distance(&m1.mul(&m2)) < 1e-12);
        }
    }

    #[test]
    fn expanded_product_matches_componentwise_expansion() {
        let ctx = JacobiContext::standard();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let g1 = JacobiElement::new(rand_h(&mut rng), rand_m(&mut rng));
            let g2 = JacobiElement::new(rand_h(&mut rng), rand_m(&mut rng));
            let p = ctx.mul(&g1, &g2);
            // Manual expansion: (y₂', x₂') = (y₂, x₂)·M₁⁻¹, then the
            // symplectic Heisenberg product.
            let w = g1.m.inv();
            let y2p = g2.h.y * w.a + g2.h.x * w.c;
            let x2p = g2.h.y * w.b + g2.h.x * w.d;
            let z = g1.h.z + g2.h.z + g1.h.x * y2p - x2p * g1.h.y;
            assert!((p.h.z - z).abs() < 1e-12);
            assert!((p.h.y - (g1.h.y + y2p)).abs() < 1e-12);
            assert!((p.h.x - (g1.h.x + x2p)).abs() < 1e-12);
            // Inverse law.
            let e = ctx.mul(&g1, &ctx.inv(&g1));
            assert!(e.distance(&ctx.identity()) < 1e-12);
        }
    }
}
