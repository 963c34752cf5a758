//! The involution `f ↦ f̌`, `f̌(g) = conj(f(g⁻¹))`, per group.

use std::sync::Arc;

use crate::groups::heisenberg::HeisConvention;
use crate::groups::jacobi::JacobiContext;
use crate::scalar::Real;

use super::lifts::{GFn, HFn, JFn, SFn};

/// Involution on the matrix group.
pub fn involution_g<T: Real>(f: GFn<T>) -> GFn<T> {
    Arc::new(move |g| f(&g.inv()).conj())
}

/// Involution on Heisenberg points under the given convention.
pub fn involution_h<T: Real>(f: HFn<T>, convention: HeisConvention) -> HFn<T> {
    Arc::new(move |p| f(&p.inv(convention)).conj())
}

/// Involution on the Jacobi group.
pub fn involution_j<T: Real>(f: JFn<T>, ctx: JacobiContext) -> JFn<T> {
    Arc::new(move |g| f(&ctx.inv(g)).conj())
}

/// Involution on the solvable group `S`.
pub fn involution_s<T: Real>(f: SFn<T>) -> SFn<T> {
    Arc::new(move |p| f(&p.inv()).conj())
}
