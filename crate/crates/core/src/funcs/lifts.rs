//! Lift and restriction maps between groups and their extensions or abelian
//! companions, implemented as compositions of closed-form evaluators.
//!
//! All maps are pure closure compositions: no grid interpolation is involved
//! anywhere, so the invariance identities they satisfy hold to roundoff.
//!
//! Coordinate conventions for the plane-shear groups: a function on the
//! shear realisation of the Heisenberg group (`ℝ² ⋊ ℝ`, polarized law) is a
//! [`HFn`] of `(z, y, x)` where `(z, y)` is the plane slot and `x` the acting
//! slot.

use std::sync::Arc;

use num_complex::Complex;

use crate::groups::extended::{plane_shear, EPoint, FrakPoint, K6Point, QElement, SPoint, VPoint, WPoint};
use crate::groups::heisenberg::HeisenbergPoint;
use crate::groups::iwasawa::{decompose, IwasawaOrder};
use crate::groups::jacobi::{sl2_action, JacobiContext, JacobiElement};
use crate::groups::sl2::Sl2Element;
use crate::scalar::Real;

use super::profile::TestFunction;

/// Closed-form complex function on points of type `P`.
pub type PointFn<P, T> = Arc<dyn Fn(&P) -> Complex<T> + Send + Sync>;

/// Function on the matrix group.
pub type GFn<T> = PointFn<Sl2Element<T>, T>;
/// Function on Heisenberg points.
pub type HFn<T> = PointFn<HeisenbergPoint<T>, T>;
/// Function on the Jacobi group.
pub type JFn<T> = PointFn<JacobiElement<T>, T>;
/// Function on the extension group `Q`.
pub type QFn<T> = PointFn<QElement<T>, T>;
/// Function on the extension group `E`.
pub type EFn<T> = PointFn<EPoint<T>, T>;
/// Function on the extension group `W`.
pub type WFn<T> = PointFn<WPoint<T>, T>;
/// Function on the solvable group `S`.
pub type SFn<T> = PointFn<SPoint<T>, T>;
/// Function on the abelian companion `𝔣`.
pub type FrakFn<T> = PointFn<FrakPoint<T>, T>;
/// Function on the abelian companion `K₆`.
pub type K6Fn<T> = PointFn<K6Point<T>, T>;
/// Function on the extension group `V`.
pub type VFn<T> = PointFn<VPoint<T>, T>;
/// Function on the direct product `M = N × S`.
pub type MFn<T> = Arc<dyn Fn(&HeisenbergPoint<T>, &SPoint<T>) -> Complex<T> + Send + Sync>;
/// Function on `G × K` (second argument is the rotation angle).
pub type GKFn<T> = Arc<dyn Fn(&Sl2Element<T>, T) -> Complex<T> + Send + Sync>;

/// Builds a function on the matrix group from a separable test function over
/// the `(phi, n, t)` coordinate box of the given factorisation order.
pub fn g_fn_from_test<T: Real>(tf: &TestFunction<T>, order: IwasawaOrder) -> GFn<T> {
    let tf = tf.clone();
    let labels = vec!["phi".to_string(), "n".to_string(), "t".to_string()];
    Arc::new(move |g: &Sl2Element<T>| {
        let f = decompose(g, order);
        tf.eval(&labels, &[f.phi, f.shear, f.log_scale])
    })
}

/// Builds a Heisenberg function from a test function over `(z, y, x)`.
pub fn h_fn_from_test<T: Real>(tf: &TestFunction<T>) -> HFn<T> {
    let tf = tf.clone();
    let labels = vec!["z".to_string(), "y".to_string(), "x".to_string()];
    Arc::new(move |p: &HeisenbergPoint<T>| tf.eval(&labels, &[p.z, p.y, p.x]))
}

/// Builds an `S`-function from a test function over `(n, t)` with `t = log a`.
pub fn s_fn_from_test<T: Real>(tf: &TestFunction<T>) -> SFn<T> {
    let tf = tf.clone();
    let labels = vec!["n".to_string(), "t".to_string()];
    Arc::new(move |p: &SPoint<T>| tf.eval(&labels, &[p.n, p.a.ln()]))
}

/// `Υ`: lifts a function on `G` to `G × K` by `Υ(f)(g, k₁) = f(g·k(k₁))`.
pub fn upsilon<T: Real>(f: GFn<T>) -> GKFn<T> {
    Arc::new(move |g: &Sl2Element<T>, k1: T| f(&g.mul(&Sl2Element::rotation(k1))))
}

/// Restriction of a `G × K` function at `k₁ = 0`; inverse of [`upsilon`] on
/// its image.
pub fn upsilon_restrict<T: Real>(f: GKFn<T>) -> GFn<T> {
    Arc::new(move |g: &Sl2Element<T>| f(g, T::zero()))
}

/// `Γ_{k₁}`: right-translates the matrix argument of a Jacobi function by a
/// rotation.
pub fn gamma_shift<T: Real>(psi: JFn<T>, k1: T) -> JFn<T> {
    let rot = Sl2Element::rotation(k1);
    Arc::new(move |g: &JacobiElement<T>| psi(&JacobiElement::new(g.h, g.m.mul(&rot))))
}

/// `~`: lifts a Jacobi function to `Q` by `f̃(X, M₁, M₂) = f(act(M₁)X, M₁M₂)`.
///
/// The restriction to the slice `M₁ = I` recovers `f`.
pub fn tilde<T: Real>(f: JFn<T>, ctx: JacobiContext) -> QFn<T> {
    Arc::new(move |q: &QElement<T>| {
        f(&JacobiElement::new(
            sl2_action(&q.m1, &q.h, ctx.action),
            q.m1.mul(&q.m2),
        ))
    })
}

/// Restriction of a `Q`-function to the Jacobi slice `(X, I, M)`.
pub fn tilde_restrict<T: Real>(f: QFn<T>) -> JFn<T> {
    Arc::new(move |g: &JacobiElement<T>| {
        f(&QElement::new(g.h, Sl2Element::identity(), g.m))
    })
}

/// `τ` (additive variant): lifts a function on the shear group `N` to `E` by
/// `τf(n, a, b) = f(σ(a)n, a + b)`.
pub fn tau_e<T: Real>(f: HFn<T>) -> EFn<T> {
    Arc::new(move |p: &EPoint<T>| {
        let (z, y) = plane_shear(p.a, p.nz, p.ny);
        f(&HeisenbergPoint::new(z, y, p.a + p.b))
    })
}

/// `τ` (multiplicative variant): lifts a function on `S` to `W` by
/// `τf(n, x, y) = f(ϱ(x)n, x·y)`.
pub fn tau_w<T: Real>(f: SFn<T>) -> WFn<T> {
    Arc::new(move |p: &WPoint<T>| {
        f(&SPoint::new_unchecked(p.x * p.x * p.n, p.x * p.y))
    })
}

/// `Λ⁻¹`: transports a function on `N` to the abelian companion `𝔣` by
/// `Λ⁻¹(f)(n, a) = f(σ(a)n, a)`.
pub fn lambda_inv<T: Real>(f: HFn<T>) -> FrakFn<T> {
    Arc::new(move |p: &FrakPoint<T>| {
        let (z, y) = plane_shear(p.a, p.nz, p.ny);
        f(&HeisenbergPoint::new(z, y, p.a))
    })
}

/// `Λ`: transports a function on `𝔣` back to `N` by
/// `Λ(g)(n, x) = g(σ(−x)n, x)`; mutually inverse with [`lambda_inv`].
pub fn lambda_map<T: Real>(g: FrakFn<T>) -> HFn<T> {
    Arc::new(move |p: &HeisenbergPoint<T>| {
        let (z, y) = plane_shear(-p.x, p.z, p.y);
        g(&FrakPoint::new(z, y, p.x))
    })
}

/// `χ⁻¹`: transports a function on `S` to the companion `K₆` by
/// `χ⁻¹(f)(n, a) = f(a²n, a)`.
pub fn chi_inv<T: Real>(f: SFn<T>) -> K6Fn<T> {
    Arc::new(move |p: &K6Point<T>| f(&SPoint::new_unchecked(p.a * p.a * p.n, p.a)))
}

/// `χ`: transports a function on `K₆` back to `S` by
/// `χ(g)(n, a) = g(a⁻²n, a)`; mutually inverse with [`chi_inv`].
pub fn chi_map<T: Real>(g: K6Fn<T>) -> SFn<T> {
    Arc::new(move |p: &SPoint<T>| {
        g(&K6Point {
            n: p.n / (p.a * p.a),
            a: p.a,
        })
    })
}

/// `Ξ`: extends a function on `M = N × S` to `V` by
/// `Ξψ((n₃,n₂,n₁,n₄), s) = ψ((n₃ + n₁n₂, n₂, n₁ + n₄), s)`.
pub fn xi<T: Real>(psi: MFn<T>) -> VFn<T> {
    Arc::new(move |p: &VPoint<T>| {
        psi(
            &HeisenbergPoint::new(p.n3 + p.n1 * p.n2, p.n2, p.n1 + p.n4),
            &p.s,
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcs::profile::Profile;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gaussian3() -> TestFunction<f64> {
        TestFunction::separable(vec![
            ("z", Profile::Gaussian { center: 0.1, sigma: 1.0 }),
            ("y", Profile::Gaussian { center: -0.2, sigma: 0.8 }),
            ("x", Profile::Gaussian { center: 0.3, sigma: 1.2 }),
        ])
    }

    #[test]
    fn upsilon_restriction_recovers_f() {
        let tf = TestFunction::separable(vec![
            (
                "phi",
                Profile::TrigPoly {
                    coeffs: vec![(1, Complex::new(1.0, 0.0)), (2, Complex::new(0.0, 0.5))],
                },
            ),
            ("n", Profile::Gaussian { center: 0.0, sigma: 1.0 }),
            ("t", Profile::Gaussian { center: 0.0, sigma: 0.7 }),
        ]);
        let f = g_fn_from_test(&tf, IwasawaOrder::Ank);
        let lifted = upsilon(f.clone());
        let back = upsilon_restrict(lifted);
        let g = Sl2Element::rotation(0.5)
            .mul(&Sl2Element::dilation(0.3))
            .mul(&Sl2Element::shear(-0.7));
        assert!((f(&g) - back(&g)).norm() < 1e-13);
    }

    #[test]
    fn upsilon_invariance_under_rotation_transfer() {
        let tf = TestFunction::separable(vec![
            (
                "phi",
                Profile::TrigPoly {
                    coeffs: vec![(0, Complex::new(0.6, 0.0)), (3, Complex::new(0.4, -0.1))],
                },
            ),
            ("n", Profile::Gaussian { center: 0.0, sigma: 1.0 }),
            ("t", Profile::Gaussian { center: 0.0, sigma: 1.0 }),
        ]);
        let lifted = upsilon(g_fn_from_test(&tf, IwasawaOrder::Ank));
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let g = Sl2Element::rotation(rng.gen_range(0.0..6.28))
                .mul(&Sl2Element::dilation(rng.gen_range(-1.0..1.0)))
                .mul(&Sl2Element::shear(rng.gen_range(-1.0..1.0)));
            let h = rng.gen_range(0.0..std::f64::consts::TAU);
            let k1 = rng.gen_range(0.0..std::f64::consts::TAU);
            let lhs = lifted(&g.mul(&Sl2Element::rotation(h)), k1 - h);
            let rhs = lifted(&g, k1);
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn gamma_shifts_compose_and_act_by_characters() {
        let ctx = JacobiContext::standard();
        let _ = ctx;
        let htf = gaussian3();
        let hf = h_fn_from_test(&htf);
        // Ψ(v, g) = h(v) · e^{i 2 φ(g)} with φ the rotation angle in ank order.
        let psi: JFn<f64> = Arc::new(move |j: &JacobiElement<f64>| {
            let f = decompose(&j.m, IwasawaOrder::Ank);
            hf(&j.h) * crate::scalar::cis(2.0 * f.phi)
        });
        let a = 0.4;
        let b = -0.9;
        let once = gamma_shift(gamma_shift(psi.clone(), a), b);
        let fused = gamma_shift(psi.clone(), a + b);
        let j = JacobiElement::new(
            HeisenbergPoint::new(0.2, 0.1, -0.3),
            Sl2Element::dilation(0.25).mul(&Sl2Element::shear(0.5)),
        );
        assert!((once(&j) - fused(&j)).norm() < 1e-12);
        // Equivariant Ψ picks up the character e^{i·2·k₁}... on ank-coordinates
        // the rotation angle adds on the right for elements of the rotation
        // subgroup, so check on a pure rotation.
        let jr = JacobiElement::new(HeisenbergPoint::new(0.2, 0.1, -0.3), Sl2Element::rotation(0.3));
        let shifted = gamma_shift(psi.clone(), 0.7);
        let expect = psi(&jr) * crate::scalar::cis(2.0 * 0.7);
        assert!((shifted(&jr) - expect).norm() < 1e-12);
    }

    #[test]
    fn tilde_restriction_and_invariance() {
        let ctx = JacobiContext::standard();
        let htf = gaussian3();
        let hf = h_fn_from_test(&htf);
        let gf = g_fn_from_test(
            &TestFunction::separable(vec![
                ("phi", Profile::TrigPoly { coeffs: vec![(0, Complex::new(1.0, 0.0)), (1, Complex::new(0.3, 0.2))] }),
                ("n", Profile::Gaussian { center: 0.0, sigma: 1.1 }),
                ("t", Profile::Gaussian { center: 0.0, sigma: 0.9 }),
            ]),
            IwasawaOrder::Ank,
        );
        let f: JFn<f64> = Arc::new(move |j: &JacobiElement<f64>| hf(&j.h) * gf(&j.m));
        let lifted = tilde(f.clone(), ctx);
        // M₁ = I slice.
        let j = JacobiElement::new(
            HeisenbergPoint::new(0.4, -0.2, 0.6),
            Sl2Element::rotation(1.1).mul(&Sl2Element::shear(-0.4)),
        );
        let q = QElement::new(j.h, Sl2Element::identity(), j.m);
        assert!((lifted(&q) - f(&j)).norm() < 1e-13);
        // Reconstructed invariance: f̃(act(N⁻¹)X, M₁N, N⁻¹M₂) = f̃(X, M₁, M₂).
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let x = HeisenbergPoint::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            let m1 = Sl2Element::rotation(rng.gen_range(0.0..6.28))
                .mul(&Sl2Element::shear(rng.gen_range(-0.5..0.5)));
            let m2 = Sl2Element::dilation(rng.gen_range(-0.7..0.7))
                .mul(&Sl2Element::shear(rng.gen_range(-0.5..0.5)));
            let n = Sl2Element::rotation(rng.gen_range(0.0..6.28))
                .mul(&Sl2Element::dilation(rng.gen_range(-0.5..0.5)));
            let ninv = n.inv();
            let moved = QElement::new(
                sl2_action(&ninv, &x, ctx.action),
                m1.mul(&n),
                ninv.mul(&m2),
            );
            let base = QElement::new(x, m1, m2);
            assert!((lifted(&moved) - lifted(&base)).norm() < 1e-12);
        }
    }

    #[test]
    fn tau_e_slices_and_invariance() {
        let f = h_fn_from_test(&gaussian3());
        let lifted = tau_e(f.clone());
        // a = 0 slice recovers f.
        let p = HeisenbergPoint::new(0.3, -0.8, 0.5);
        assert!((lifted(&EPoint::new(p.z, p.y, 0.0, p.x)) - f(&p)).norm() < 1e-15);
        // τf(σ(−x)n, a+x, b−x) = τf(n, a, b).
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..100 {
            let e = EPoint::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            let s = rng.gen_range(-1.0..1.0);
            let (mz, my) = plane_shear(-s, e.nz, e.ny);
            let moved = EPoint::new(mz, my, e.a + s, e.b - s);
            assert!((lifted(&moved) - lifted(&e)).norm() < 1e-13);
        }
    }

    #[test]
    fn tau_w_slices_and_invariance() {
        let stf = TestFunction::separable(vec![
            ("n", Profile::Gaussian { center: 0.0, sigma: 1.0 }),
            ("t", Profile::Gaussian { center: 0.0, sigma: 0.8 }),
        ]);
        let f = s_fn_from_test(&stf);
        let lifted = tau_w(f.clone());
        // x = 1 slice recovers f.
        let s = SPoint::new(0.4, 1.7).unwrap();
        assert!((lifted(&WPoint::new_unchecked(s.n, 1.0, s.a)) - f(&s)).norm() < 1e-15);
        // τf(ϱ(x⁻¹)n, x·a, x⁻¹·b) = τf(n, a, b).
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..100 {
            let w = WPoint::new_unchecked(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(0.4..2.5),
                rng.gen_range(0.4..2.5),
            );
            let x: f64 = rng.gen_range(0.4..2.5);
            let moved = WPoint::new_unchecked(w.n / (x * x), x * w.x, w.y / x);
            assert!((lifted(&moved) - lifted(&w)).norm() < 1e-13);
        }
    }

    #[test]
    fn lambda_roundtrip_and_example() {
        let f = h_fn_from_test(&gaussian3());
        let there = lambda_inv(f.clone());
        let back = lambda_map(there.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..200 {
            let p = HeisenbergPoint::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            assert!((back(&p) - f(&p)).norm() < 1e-13);
        }
        // Λ⁻¹ of f(n_z, n_y, a) = n_z at ((1,1), 2) is 3.
        let coord: HFn<f64> = Arc::new(|p: &HeisenbergPoint<f64>| Complex::new(p.z, 0.0));
        let v = lambda_inv(coord)(&FrakPoint::new(1.0, 1.0, 2.0));
        assert!((v.re - 3.0).abs() < 1e-15);
    }

    #[test]
    fn chi_roundtrip_and_example() {
        let stf = TestFunction::separable(vec![
            ("n", Profile::Gaussian { center: 0.2, sigma: 1.0 }),
            ("t", Profile::Gaussian { center: -0.1, sigma: 0.9 }),
        ]);
        let f = s_fn_from_test(&stf);
        let there = chi_inv(f.clone());
        let back = chi_map(there.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(66);
        for _ in 0..200 {
            let p = SPoint::new_unchecked(rng.gen_range(-2.0..2.0), rng.gen_range(0.3..3.0));
            assert!((back(&p) - f(&p)).norm() < 1e-13);
        }
        // χ⁻¹(f)(1, 2) = f(4, 2).
        let probe: SFn<f64> = Arc::new(|p: &SPoint<f64>| Complex::new(p.n + 10.0 * p.a, 0.0));
        let v = chi_inv(probe)(&K6Point { n: 1.0, a: 2.0 });
        assert!((v.re - 24.0).abs() < 1e-15);
    }

    #[test]
    fn xi_examples_and_equivariance() {
        let hf = h_fn_from_test(&gaussian3());
        let psi: MFn<f64> = Arc::new(move |h: &HeisenbergPoint<f64>, s: &SPoint<f64>| {
            hf(h) * Complex::new(s.n + s.a, 0.0)
        });
        let lifted = xi(psi.clone());
        let s = SPoint::new(0.3, 1.4).unwrap();
        // n₁ = 0 slice.
        let v = lifted(&VPoint::new(0.1, 0.2, 0.0, 0.5, s));
        assert!((v - psi(&HeisenbergPoint::new(0.1, 0.2, 0.5), &s)).norm() < 1e-15);
        // Ξψ((0,1,1,0), s) = ψ((1,1,1), s).
        let v = lifted(&VPoint::new(0.0, 1.0, 1.0, 0.0, s));
        assert!((v - psi(&HeisenbergPoint::new(1.0, 1.0, 1.0), &s)).norm() < 1e-15);
        // Right S-translation commutes with the lift.
        let s2 = SPoint::new(-0.4, 0.8).unwrap();
        let translated: MFn<f64> = {
            let psi = psi.clone();
            Arc::new(move |h: &HeisenbergPoint<f64>, s: &SPoint<f64>| psi(h, &s.mul(&s2)))
        };
        let a = xi(translated)(&VPoint::new(0.2, -0.1, 0.4, 0.3, s));
        let b = lifted(&VPoint::new(0.2, -0.1, 0.4, 0.3, s.mul(&s2)));
        assert!((a - b).norm() < 1e-15);
    }
}
