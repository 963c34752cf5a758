//! Weighted integration over product grids, including the order-dependent
//! modulus weights for the unimodular-matrix group.

use num_complex::Complex;

use crate::error::CoreError;
use crate::funcs::gridfn::GridFunction;
use crate::groups::iwasawa::IwasawaOrder;
use crate::scalar::Real;

use super::sum::pairwise_sum_by;

/// Dimension of the shear factor `N`; the modulus of the conjugation
/// `n ↦ a n a⁻¹` scales the shear measure by `a^{2ρ}`, which is the exponent
/// applied when reordering the scale and shear integrations.
pub const SHEAR_DIM_RHO: u32 = 1;

/// Weighted sum over the product grid, in deterministic pairwise order.
pub fn integrate<T: Real>(f: &GridFunction<T>) -> Complex<T> {
    let grid = f.grid();
    let values = f.values();
    pairwise_sum_by(values.len(), &|i| values[i] * grid.weight_at(i))
}

/// Integral of `f · w` where `w` is a real weight of the grid coordinates.
pub fn integrate_weighted<T: Real>(
    f: &GridFunction<T>,
    weight: impl Fn(&[T]) -> T,
) -> Complex<T> {
    let grid = f.grid();
    let values = f.values();
    let rank = grid.rank();
    pairwise_sum_by(values.len(), &|i| {
        let mut coords = vec![T::zero(); rank];
        grid.coords_at(i, &mut coords);
        values[i] * (grid.weight_at(i) * weight(&coords))
    })
}

/// Integral over the matrix group in factorisation-order coordinates.
///
/// The grid must carry the axes `phi`, `n` and `t`.  In scale–shear–rotation
/// order (and in rotation–shear–scale order) the Haar measure is the plain
/// product measure; swapping scale past shear picks up the modulus factor:
/// shear-first (`nak`) needs `e^{−2ρt}`, rotation–scale–shear (`kan`) needs
/// `e^{+2ρt}`.
pub fn integrate_g<T: Real>(
    f: &GridFunction<T>,
    order: IwasawaOrder,
) -> Result<Complex<T>, CoreError> {
    let grid = f.grid();
    grid.axis("phi")?;
    grid.axis("n")?;
    let t_pos = grid.axis_index("t")?;
    let exponent = g_jacobian_exponent(order);
    if exponent == 0 {
        return Ok(integrate(f));
    }
    let e = T::of(f64::from(exponent));
    let values = f.values();
    let rank = grid.rank();
    Ok(pairwise_sum_by(values.len(), &|i| {
        let mut coords = vec![T::zero(); rank];
        grid.coords_at(i, &mut coords);
        values[i] * (grid.weight_at(i) * (e * coords[t_pos]).exp())
    }))
}

/// Exponent `k` in the order-dependent weight `e^{k·t}`.
pub fn g_jacobian_exponent(order: IwasawaOrder) -> i32 {
    let two_rho = 2 * SHEAR_DIM_RHO as i32;
    match order {
        IwasawaOrder::Ank | IwasawaOrder::Kna => 0,
        IwasawaOrder::Nak => -two_rho,
        IwasawaOrder::Kan => two_rho,
    }
}
