//! 2×2 matrices over a commutative ring.

use num_complex::Complex64;

use super::Ring;

/// A 2×2 matrix with entries in `R`. Representation images are expected to
/// have determinant one; the adjugate inverse is exact under that contract.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity_like(&self) -> Self {
        let one = self.a.one_like();
        let zero = self.a.zero_like();
        Mat2::new(one.clone(), zero.clone(), zero, one)
    }

    pub fn det(&self) -> R {
        self.a.ring_mul(&self.d).ring_sub(&self.b.ring_mul(&self.c))
    }

    pub fn trace(&self) -> R {
        self.a.ring_add(&self.d)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.a.ring_mul(&rhs.a).ring_add(&self.b.ring_mul(&rhs.c)),
            self.a.ring_mul(&rhs.b).ring_add(&self.b.ring_mul(&rhs.d)),
            self.c.ring_mul(&rhs.a).ring_add(&self.d.ring_mul(&rhs.c)),
            self.c.ring_mul(&rhs.b).ring_add(&self.d.ring_mul(&rhs.d)),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.a.ring_add(&rhs.a),
            self.b.ring_add(&rhs.b),
            self.c.ring_add(&rhs.c),
            self.d.ring_add(&rhs.d),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.a.ring_sub(&rhs.a),
            self.b.ring_sub(&rhs.b),
            self.c.ring_sub(&rhs.c),
            self.d.ring_sub(&rhs.d),
        )
    }

    pub fn neg(&self) -> Self {
        Mat2::new(
            self.a.ring_neg(),
            self.b.ring_neg(),
            self.c.ring_neg(),
            self.d.ring_neg(),
        )
    }

    pub fn scale(&self, s: &R) -> Self {
        Mat2::new(
            self.a.ring_mul(s),
            self.b.ring_mul(s),
            self.c.ring_mul(s),
            self.d.ring_mul(s),
        )
    }

    /// Adjugate inverse. Satisfies `M * M.inv_det1() == I` exactly whenever
    /// `det M == 1`.
    pub fn inv_det1(&self) -> Self {
        Mat2::new(
            self.d.clone(),
            self.b.ring_neg(),
            self.c.ring_neg(),
            self.a.clone(),
        )
    }

    /// `self * x * self⁻¹` (adjugate inverse).
    pub fn conj(&self, x: &Self) -> Self {
        self.mul(x).mul(&self.inv_det1())
    }

    pub fn is_identity(&self) -> bool {
        let one = self.a.one_like();
        self.a == one && self.d == one && self.b.is_zero() && self.c.is_zero()
    }
}

/// tr(X Y X⁻¹ Y⁻¹) for determinant-one matrices. Equals 2 exactly when the
/// pair shares an eigenvector.
pub fn trace_commutator<R: Ring>(x: &Mat2<R>, y: &Mat2<R>) -> R {
    x.mul(y)
        .mul(&x.inv_det1())
        .mul(&y.inv_det1())
        .trace()
}

impl Mat2<Complex64> {
    pub fn from_rows(rows: [[Complex64; 2]; 2]) -> Self {
        Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    /// Maximum absolute entry.
    pub fn norm_max(&self) -> f64 {
        self.a
            .norm()
            .max(self.b.norm())
            .max(self.c.norm())
            .max(self.d.norm())
    }

    /// Max entry deviation from another matrix.
    pub fn dist(&self, rhs: &Self) -> f64 {
        self.sub(rhs).norm_max()
    }

    /// True inverse (divides by the determinant); prefer `inv_det1` for
    /// representation images.
    pub fn inv(&self) -> Self {
        let det = self.det();
        Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussRat;

    fn gmat(a: i64, b: i64, c: i64, d: i64) -> Mat2<GaussRat> {
        Mat2::new(
            GaussRat::from_int(a),
            GaussRat::from_int(b),
            GaussRat::from_int(c),
            GaussRat::from_int(d),
        )
    }

    #[test]
    fn adjugate_inverse_exact() {
        let m = gmat(3, 1, 2, 1); // det 1
        assert!(m.det().is_one());
        assert!(m.mul(&m.inv_det1()).is_identity());
        assert!(m.inv_det1().mul(&m).is_identity());
    }

    #[test]
    fn commutator_trace_examples() {
        // X = Y commuting pair
        let x = gmat(2, 1, 1, 1);
        assert_eq!(trace_commutator(&x, &x), GaussRat::from_int(2));
        // upper triangular pair shares an eigenvector
        let u1 = gmat(1, 5, 0, 1);
        let u2 = gmat(1, -3, 0, 1);
        assert_eq!(trace_commutator(&u1, &u2), GaussRat::from_int(2));
        // the parabolic pair from the trefoil has commutator trace 3
        let g = gmat(1, 1, 0, 1);
        let h = gmat(1, 0, -1, 1);
        assert_eq!(trace_commutator(&g, &h), GaussRat::from_int(3));
    }
}
