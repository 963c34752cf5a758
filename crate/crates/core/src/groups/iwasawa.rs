//! Factorisation of a unimodular matrix into rotation (K), dilation (A) and
//! shear (N) factors, in any of the four orders used by the integration
//! formulas.
//!
//! Writing `K(φ)` for the rotation, `A(t) = diag(e^t, e^{−t})` and
//! `N(ν) = [[1, ν], [0, 1]]`, the four supported factorisations are
//! `KAN`, `KNA`, `ANK`, `NAK`.  The rotation angle and log-scale agree
//! between `KAN`/`KNA` (first-column data) and between `ANK`/`NAK`
//! (bottom-row data); the shear parameters differ by the conjugation rule
//! `A(t) N(ν) A(−t) = N(e^{2t} ν)`.

use crate::error::CoreError;
use crate::scalar::{wrap_angle, Real};

use super::sl2::Sl2Element;

/// Factor ordering tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IwasawaOrder {
    /// rotation · dilation · shear
    Kan,
    /// rotation · shear · dilation
    Kna,
    /// dilation · shear · rotation
    Ank,
    /// shear · dilation · rotation
    Nak,
}

impl IwasawaOrder {
    /// All four orders, in a fixed iteration order.
    pub const ALL: [IwasawaOrder; 4] = [
        IwasawaOrder::Kan,
        IwasawaOrder::Kna,
        IwasawaOrder::Ank,
        IwasawaOrder::Nak,
    ];

    /// Lower-case name used by the CLI.
    pub fn name(self) -> &'static str {
        match self {
            IwasawaOrder::Kan => "kan",
            IwasawaOrder::Kna => "kna",
            IwasawaOrder::Ank => "ank",
            IwasawaOrder::Nak => "nak",
        }
    }

    /// Parses a CLI name.
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "kan" => Some(IwasawaOrder::Kan),
            "kna" => Some(IwasawaOrder::Kna),
            "ank" => Some(IwasawaOrder::Ank),
            "nak" => Some(IwasawaOrder::Nak),
            _ => None,
        }
    }
}

/// Rotation angle, log-scale and shear of a factorised matrix, together with
/// the order they compose in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IwasawaFactors<T> {
    /// Rotation angle, reduced into `[0, 2π)`.
    pub phi: T,
    /// Log-scale `t` of the dilation factor (`a = e^t`).
    pub log_scale: T,
    /// Shear parameter of the unitriangular factor.
    pub shear: T,
    /// Declared composition order.
    pub order: IwasawaOrder,
}

impl<T: Real> IwasawaFactors<T> {
    /// Multiplies the three generator matrices in the declared order.
    pub fn compose(&self) -> Sl2Element<T> {
        let k = Sl2Element::rotation(self.phi);
        let a = Sl2Element::dilation(self.log_scale);
        let n = Sl2Element::shear(self.shear);
        match self.order {
            IwasawaOrder::Kan => k.mul(&a).mul(&n),
            IwasawaOrder::Kna => k.mul(&n).mul(&a),
            IwasawaOrder::Ank => a.mul(&n).mul(&k),
            IwasawaOrder::Nak => n.mul(&a).mul(&k),
        }
    }
}

/// Factorises `g` in the requested order.
///
/// The decomposition exists and is unique for every unimodular matrix; the
/// factors recompose to `g` entrywise within `1e−12` (`f64`).
pub fn decompose<T: Real>(g: &Sl2Element<T>, order: IwasawaOrder) -> IwasawaFactors<T> {
    match order {
        IwasawaOrder::Kan | IwasawaOrder::Kna => {
            // First column: g·e₁ = e^t (cos φ, sin φ).
            let r = g.a.hypot(g.c);
            let phi = wrap_angle(g.c.atan2(g.a));
            let t = r.ln();
            let shear_kan = (g.a * g.b + g.c * g.d) / (r * r);
            let shear = if order == IwasawaOrder::Kan {
                shear_kan
            } else {
                (T::of(2.0) * t).exp() * shear_kan
            };
            IwasawaFactors {
                phi,
                log_scale: t,
                shear,
                order,
            }
        }
        IwasawaOrder::Ank | IwasawaOrder::Nak => {
            // Bottom row: e₂ᵀ·g = e^{−t} (sin φ, cos φ).
            let s = g.c.hypot(g.d);
            let phi = wrap_angle(g.c.atan2(g.d));
            let t = -s.ln();
            // g·K(−φ) = A(t)·N(ν): read ν off the first row.
            let w = g.mul(&Sl2Element::rotation(-phi));
            let shear_ank = w.b / w.a;
            let shear = if order == IwasawaOrder::Ank {
                shear_ank
            } else {
                (T::of(2.0) * t).exp() * shear_ank
            };
            IwasawaFactors {
                phi,
                log_scale: t,
                shear,
                order,
            }
        }
    }
}

/// Convenience: decomposes and reports the recomposition residual.
pub fn roundtrip_residual<T: Real>(g: &Sl2Element<T>, order: IwasawaOrder) -> T {
    decompose(g, order).compose().distance(g)
}

/// Errors unless `g` is unimodular, then decomposes.
pub fn try_decompose<T: Real>(
    g: &Sl2Element<T>,
    order: IwasawaOrder,
) -> Result<IwasawaFactors<T>, CoreError> {
    g.validate(T::drift_tol())?;
    Ok(decompose(g, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Sl2Element<f64>;

    #[test]
    fn identity_decomposes_to_zero() {
        for order in IwasawaOrder::ALL {
            let f = decompose(&M::identity(), order);
            assert_eq!((f.phi, f.log_scale, f.shear), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn rotation_is_a_fixed_point() {
        for order in IwasawaOrder::ALL {
            let f = decompose(&M::rotation(0.7), order);
            assert!((f.phi - 0.7).abs() < 1e-15);
            assert!(f.log_scale.abs() < 1e-15);
            assert!(f.shear.abs() < 1e-15);
        }
    }

    #[test]
    fn upper_triangular_kan_example() {
        // [[2,1],[0,0.5]] = diag(2, 0.5) · N(0.5) with no rotation.
        let g = M::new(2.0, 1.0, 0.0, 0.5).unwrap();
        let f = decompose(&g, IwasawaOrder::Kan);
        assert!(f.phi.abs() < 1e-15);
        assert!((f.log_scale - 2f64.ln()).abs() < 1e-15);
        assert!((f.shear - 0.5).abs() < 1e-15);
    }

    #[test]
    fn kan_vs_kna_shear_rescaling() {
        let g = M::rotation(0.3)
            .mul(&M::dilation(0.8))
            .mul(&M::shear(-0.4));
        let kan = decompose(&g, IwasawaOrder::Kan);
        let kna = decompose(&g, IwasawaOrder::Kna);
        assert!((kna.shear - (2.0 * kan.log_scale).exp() * kan.shear).abs() < 1e-13);
        assert!(kna.compose().distance(&g) < 1e-13);
    }

    #[test]
    fn roundtrip_all_orders() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let g = M::rotation(rng.gen_range(0.0..std::f64::consts::TAU))
                .mul(&M::dilation(rng.gen_range(-1.5..1.5)))
                .mul(&M::shear(rng.gen_range(-2.0..2.0)));
            for order in IwasawaOrder::ALL {
                assert!(
                    roundtrip_residual(&g, order) < 1e-12,
                    "roundtrip failed for {order:?}"
                );
            }
        }
    }
}
