//! Numerical harmonic analysis on `SL(2,ℝ)`, the Heisenberg group, the Jacobi
//! group and their solvable/abelian companions.
//!
//! The crate is organised around five layers:
//!
//! * [`groups`] — exact group arithmetic: unimodular 2×2 matrices and their
//!   rotation/scale/shear factorisations, Heisenberg points under both the
//!   polarized and symplectic laws, the Jacobi semidirect product, and the
//!   extension groups used by the lift machinery, plus a randomized
//!   group-axiom checker that turns convention choices into measured facts.
//! * [`quad`] — quadrature axes (uniform circle rule, truncated line rules,
//!   log-scale rules for the multiplicative group), product grids, and
//!   deterministic pairwise-summation integration, including the
//!   order-dependent modulus weights for integrating over `SL(2,ℝ)` in
//!   different factorisation orders.
//! * [`funcs`] — sampled complex-valued functions on product grids, closed
//!   form separable test-function families, involutions, and every lift /
//!   restriction map between a group and its extension or abelian companion.
//! * [`transform`] — circle Fourier coefficients, direct (non-fast) Euclidean
//!   transforms, and the composite transforms on `G = SL(2,ℝ)`, the
//!   Heisenberg group, and the Jacobi group.
//! * [`conv`] — convolution engines: componentwise convolution on the abelian
//!   companions, group convolution with the correct left Haar weights, the
//!   lifted convolution on `G × K`, and the two-sided product used by the
//!   convolution-commutation check.
//!
//! All floating-point code is generic over the scalar type via [`Real`]
//! (`f32` or `f64`); the purely algebraic group laws are additionally generic
//! over any signed ring, so they can be exercised in exact rational
//! arithmetic.  Concrete `f64` aliases live at the crate root.

pub mod conv;
pub mod error;
pub mod funcs;
pub mod groups;
pub mod quad;
pub mod scalar;
pub mod transform;

pub use error::CoreError;
pub use scalar::Real;

/// Default scalar used by the verification harness and the CLI.
pub type Scalar = f64;

/// 2×2 unimodular matrix over the default scalar.
pub type Sl2 = groups::sl2::Sl2Element<Scalar>;
/// Rotation/scale/shear factorisation over the default scalar.
pub type Iwasawa = groups::iwasawa::IwasawaFactors<Scalar>;
/// Heisenberg point over the default scalar.
pub type Heis = groups::heisenberg::HeisenbergPoint<Scalar>;
/// Jacobi group element over the default scalar.
pub type Jacobi = groups::jacobi::JacobiElement<Scalar>;
/// Quadrature axis over the default scalar.
pub type Axis = quad::axis::Axis<Scalar>;
/// Product quadrature grid over the default scalar.
pub type Grid = quad::grid::Grid<Scalar>;
/// Sampled grid function over the default scalar.
pub type GridFunction = funcs::gridfn::GridFunction<Scalar>;
/// Separable test function over the default scalar.
pub type TestFunction = funcs::profile::TestFunction<Scalar>;
/// Complex number over the default scalar.
pub type Cplx = num_complex::Complex<Scalar>;
