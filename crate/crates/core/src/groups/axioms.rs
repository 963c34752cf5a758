//! Randomized group-axiom checker.
//!
//! Draws bounded random elements and measures the worst residual of
//! associativity, the identity laws, the inverse laws and — for semidirect
//! laws — the acting maps being automorphisms.  Failures are report entries,
//! never errors: the point is to document which convention combinations form
//! groups and which do not.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::Real;

use super::law::GroupLaw;

/// Worst-case residuals per axiom over a sample run.
#[derive(Clone, Copy, Debug)]
pub struct AxiomReport<T> {
    /// Sample count used.
    pub samples: usize,
    /// `max |(pq)r − p(qr)|` relative to the operand scale.
    pub associativity: T,
    /// `max(|ep − p|, |pe − p|)`.
    pub identity: T,
    /// `max(|p p⁻¹ − e|, |p⁻¹ p − e|)`.
    pub inverse: T,
    /// Automorphism residual of the acting maps, when the law has one.
    pub automorphism: Option<T>,
}

impl<T: Real> AxiomReport<T> {
    /// Largest residual across all checked axioms.
    pub fn max_residual(&self) -> T {
        let mut r = self.associativity.max(self.identity).max(self.inverse);
        if let Some(a) = self.automorphism {
            r = r.max(a);
        }
        r
    }

    /// True when every residual is at most `tol`.
    pub fn passes(&self, tol: T) -> bool {
        self.max_residual() <= tol
    }
}

/// Runs the axiom checks for `law` with `samples` random draws.
///
/// Deterministic in `(law, samples, seed)`.
pub fn check_group_axioms<T: Real, L: GroupLaw<T>>(
    law: &L,
    samples: usize,
    seed: u64,
) -> AxiomReport<T> {
    let samples = samples.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(law.name()));
    let e = law.identity();

    let mut assoc = T::zero();
    let mut ident = T::zero();
    let mut inver = T::zero();
    let mut auto: Option<T> = None;

    for _ in 0..samples {
        let p = law.sample(&mut rng);
        let q = law.sample(&mut rng);
        let r = law.sample(&mut rng);

        let scale = T::one()
            .max(law.magnitude(&p))
            .max(law.magnitude(&q))
            .max(law.magnitude(&r));

        let lhs = law.mul(&law.mul(&p, &q), &r);
        let rhs = law.mul(&p, &law.mul(&q, &r));
        assoc = assoc.max(law.distance(&lhs, &rhs) / scale);

        ident = ident
            .max(law.distance(&law.mul(&e, &p), &p) / scale)
            .max(law.distance(&law.mul(&p, &e), &p) / scale);

        let pinv = law.inv(&p);
        inver = inver
            .max(law.distance(&law.mul(&p, &pinv), &e) / scale)
            .max(law.distance(&law.mul(&pinv, &p), &e) / scale);

        if let Some(a) = law.automorphism_residual(&mut rng) {
            let worst = auto.unwrap_or_else(T::zero).max(a);
            auto = Some(worst);
        }
    }

    AxiomReport {
        samples,
        associativity: assoc,
        identity: ident,
        inverse: inver,
        automorphism: auto,
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::heisenberg::HeisConvention;
    use crate::groups::jacobi::{ActionConvention, JacobiContext};
    use crate::groups::law::*;

    #[test]
    fn standard_laws_pass() {
        assert!(check_group_axioms::<f64, _>(&Sl2Law, 400, 0).passes(1e-12));
        assert!(
            check_group_axioms::<f64, _>(&HeisLaw(HeisConvention::Symplectic), 400, 0)
                .passes(1e-12)
        );
        assert!(
            check_group_axioms::<f64, _>(&HeisLaw(HeisConvention::Polarized), 400, 0)
                .passes(1e-12)
        );
        let ctx = JacobiContext::standard();
        assert!(check_group_axioms::<f64, _>(&JacobiLaw(ctx), 400, 0).passes(1e-10));
        assert!(check_group_axioms::<f64, _>(&QLaw(ctx), 400, 0).passes(1e-10));
        assert!(check_group_axioms::<f64, _>(&ELaw, 400, 0).passes(1e-12));
        assert!(check_group_axioms::<f64, _>(&SLaw, 400, 0).passes(1e-12));
        assert!(check_group_axioms::<f64, _>(&WLaw, 400, 0).passes(1e-12));
        assert!(check_group_axioms::<f64, _>(&VLaw, 400, 0).passes(1e-12));
        assert!(check_group_axioms::<f64, _>(&FrakLaw, 400, 0).passes(1e-12));
        assert!(check_group_axioms::<f64, _>(&BLaw, 400, 0).passes(1e-12));
    }

    /// The row-vector action on the polarized law is not by automorphisms;
    /// the checker reports it rather than erroring.
    #[test]
    fn inconsistent_combination_is_reported_not_thrown() {
        let bad = JacobiContext::unchecked(HeisConvention::Polarized, ActionConvention::PaperRight);
        let report = check_group_axioms::<f64, _>(&JacobiLaw(bad), 400, 0);
        assert!(report.automorphism.unwrap() > 1e-3);
        assert!(!report.passes(1e-10));
    }

    /// Right action + symplectic law: automorphisms, but associativity fails.
    #[test]
    fn right_action_breaks_associativity() {
        let bad =
            JacobiContext::unchecked(HeisConvention::Symplectic, ActionConvention::PaperRight);
        let report = check_group_axioms::<f64, _>(&JacobiLaw(bad), 400, 0);
        assert!(report.automorphism.unwrap() <= 1e-12);
        assert!(report.associativity > 1e-3);
    }

    #[test]
    fn deterministic_given_seed() {
        let a = check_group_axioms::<f64, _>(&Sl2Law, 100, 42);
        let b = check_group_axioms::<f64, _>(&Sl2Law, 100, 42);
        assert_eq!(a.associativity, b.associativity);
        assert_eq!(a.inverse, b.inverse);
    }
}
