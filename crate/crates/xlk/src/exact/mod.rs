//! Exact and floating scalar arithmetic, Laurent polynomials, 2×2 matrices
//! over a commutative ring, and free-group words.
//!
//! Exact arithmetic happens in the Gaussian rationals ℚ(i) with
//! arbitrary-precision components; no rounding ever occurs there. Floating
//! computation uses `Complex64` and every comparison goes through an explicit
//! tolerance.

mod gauss;
mod linsolve;
mod mat2;
mod poly;
mod scalar;
mod word;

pub use gauss::GaussRat;
pub use linsolve::{solve_column_space, SparseVec};
pub use mat2::{trace_commutator, Mat2};
pub use poly::{LaurentPoly, Vars};
pub use scalar::Scalar;
pub use word::FreeWord;

/// Commutative ring operations used by generic code (matrices, coordinate
/// polynomials, word evaluation). Zero and one are derived from an existing
/// element so that context-carrying rings (Laurent polynomials with a
/// variable set) can participate.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
}

impl Ring for num_complex::Complex64 {
    fn zero_like(&self) -> Self {
        num_complex::Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        num_complex::Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}
