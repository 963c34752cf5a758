//! Deterministic pairwise summation.
//!
//! The reduction order is a fixed recursive halving of the index range
//! (leaves of up to 32 terms summed left-to-right), independent of thread
//! count, so every integral in the crate is reproducible bit-for-bit.

use num_complex::Complex;

use crate::scalar::Real;

const LEAF: usize = 32;

/// Pairwise sum of `f(i)` for `i` in `0..n` in the documented fixed order.
pub fn pairwise_sum_by<T: Real>(n: usize, f: &impl Fn(usize) -> Complex<T>) -> Complex<T> {
    fn go<T: Real>(lo: usize, hi: usize, f: &impl Fn(usize) -> Complex<T>) -> Complex<T> {
        if hi - lo <= LEAF {
            let mut acc = Complex::new(T::zero(), T::zero());
            for i in lo..hi {
                acc = acc + f(i);
            }
            acc
        } else {
            let mid = lo + (hi - lo) / 2;
            go(lo, mid, f) + go(mid, hi, f)
        }
    }
    if n == 0 {
        return Complex::new(T::zero(), T::zero());
    }
    go(0, n, f)
}

/// Pairwise sum of a slice.
pub fn pairwise_sum<T: Real>(xs: &[Complex<T>]) -> Complex<T> {
    pairwise_sum_by(xs.len(), &|i| xs[i])
}
