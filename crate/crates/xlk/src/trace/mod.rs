//! The equal-trace slice V of the rank-3 character variety in the
//! coordinates (x, y, z, b, c), the Fricke polynomial P cutting out its
//! coordinate ring, and the exact B₃ action.
//!
//! Coordinate dictionary, fixed once: for a triple (G₁, G₂, G₃) with a
//! common trace a,
//!
//! ```text
//! (x, y, z) = (tr G₁G₂, tr G₁G₃, tr G₂G₃)
//! b = a·(a + T),      T = tr G₁G₂G₃
//! c = 4 − 3a² − T² − a³·T
//! P = xyz + x² + y² + z² − b(x + y + z) − c = 0
//! ```

mod claim;
mod upoints;

pub use claim::{quotient_claim_check, MembershipCertificate, QuotientClaimReport};
pub use upoints::{find_u_points, lift_triple, u_slice_family, UPoint, USlice};

use std::sync::Arc;

use num_complex::Complex64;

use crate::braid::BraidWord;
use crate::exact::{LaurentPoly, Mat2, Ring, Vars};
use crate::{Error, Result};

/// A point (or symbolic point) of the equal-trace slice, optionally
/// carrying the common meridian trace.
#[derive(Clone, PartialEq, Debug)]
pub struct TraceCoord<R> {
    pub x: R,
    pub y: R,
    pub z: R,
    pub b: R,
    pub c: R,
    /// Common value tr G₁ = tr G₂ = tr G₃ when known.
    pub a: Option<R>,
}

impl<R: Ring> TraceCoord<R> {
    pub fn new(x: R, y: R, z: R, b: R, c: R) -> Self {
        TraceCoord {
            x,
            y,
            z,
            b,
            c,
            a: None,
        }
    }

    pub fn as_array(&self) -> [R; 5] {
        [
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
            self.b.clone(),
            self.c.clone(),
        ]
    }
}

impl TraceCoord<Complex64> {
    pub fn from_slice(v: &[Complex64]) -> Self {
        TraceCoord::new(v[0], v[1], v[2], v[3], v[4])
    }
}

/// The variable set ["x","y","z","b","c"] of ℂ[V].
pub fn coordinate_vars() -> Arc<Vars> {
    Vars::new(&["x", "y", "z", "b", "c"])
}

/// The symbolic coordinate tuple over its own ring.
pub fn symbolic_coords(vars: &Arc<Vars>) -> Result<TraceCoord<LaurentPoly>> {
    Ok(TraceCoord::new(
        LaurentPoly::var(vars, "x")?,
        LaurentPoly::var(vars, "y")?,
        LaurentPoly::var(vars, "z")?,
        LaurentPoly::var(vars, "b")?,
        LaurentPoly::var(vars, "c")?,
    ))
}

/// Evaluate the Fricke polynomial P at a coordinate tuple, in any ring.
pub fn fricke_p<R: Ring>(coords: &TraceCoord<R>) -> R {
    let TraceCoord { x, y, z, b, c, .. } = coords;
    let xyz = x.ring_mul(y).ring_mul(z);
    let squares = x
        .ring_mul(x)
        .ring_add(&y.ring_mul(y))
        .ring_add(&z.ring_mul(z));
    let lin = b.ring_mul(&x.ring_add(y).ring_add(z));
    xyz.ring_add(&squares).ring_sub(&lin).ring_sub(c)
}

/// P as an element of ℂ[x,y,z,b,c].
pub fn fricke_poly(vars: &Arc<Vars>) -> Result<LaurentPoly> {
    Ok(fricke_p(&symbolic_coords(vars)?))
}

/// The coordinate dictionary applied to an equal-trace triple. Trace
/// equality is required exactly; use [`coords_from_triple_numeric`] for
/// floating input.
pub fn coords_from_triple<R: Ring>(g: &[Mat2<R>; 3]) -> Result<TraceCoord<R>> {
    let a = g[0].trace();
    if g[1].trace() != a || g[2].trace() != a {
        return Err(Error::UnequalTraces("exact trace mismatch".into()));
    }
    Ok(coords_from_triple_unchecked(g))
}

/// The dictionary for floating triples, with a tolerance on the trace
/// precondition.
pub fn coords_from_triple_numeric(
    g: &[Mat2<Complex64>; 3],
    tol: f64,
) -> Result<TraceCoord<Complex64>> {
    let a = g[0].trace();
    for gi in g.iter().skip(1) {
        let d = (gi.trace() - a).norm();
        if d > tol {
            return Err(Error::UnequalTraces(format!(
                "trace deviation {d:.3e} exceeds {tol:.1e}"
            )));
        }
    }
    Ok(coords_from_triple_unchecked(g))
}

fn coords_from_triple_unchecked<R: Ring>(g: &[Mat2<R>; 3]) -> TraceCoord<R> {
    let a = g[0].trace();
    let x = g[0].mul(&g[1]).trace();
    let y = g[0].mul(&g[2]).trace();
    let z = g[1].mul(&g[2]).trace();
    let t = g[0].mul(&g[1]).mul(&g[2]).trace();
    let b = a.ring_mul(&a.ring_add(&t));
    // c = 4 − 3a² − T² − a³T
    let four = a.one_like().ring_add(&a.one_like()).ring_add(&a.one_like()).ring_add(&a.one_like());
    let three = a.one_like().ring_add(&a.one_like()).ring_add(&a.one_like());
    let a2 = a.ring_mul(&a);
    let c = four
        .ring_sub(&three.ring_mul(&a2))
        .ring_sub(&t.ring_mul(&t))
        .ring_sub(&a2.ring_mul(&a).ring_mul(&t));
    let mut coords = TraceCoord::new(x, y, z, b, c);
    coords.a = Some(a);
    coords
}

/// The displayed action of one braid letter on (x, y, z, b, c).
pub fn act<R: Ring>(letter: (usize, i8), coords: &TraceCoord<R>) -> Result<TraceCoord<R>> {
    let TraceCoord { x, y, z, b, c, a } = coords;
    let (nx, ny, nz) = match letter {
        (1, 1) => (
            x.clone(),
            z.clone(),
            b.ring_sub(y).ring_sub(&x.ring_mul(z)),
        ),
        (1, -1) => (
            x.clone(),
            b.ring_sub(z).ring_sub(&x.ring_mul(y)),
            y.clone(),
        ),
        (2, 1) => (
            y.clone(),
            b.ring_sub(x).ring_sub(&y.ring_mul(z)),
            z.clone(),
        ),
        (2, -1) => (
            b.ring_sub(y).ring_sub(&x.ring_mul(z)),
            x.clone(),
            z.clone(),
        ),
        (i, e) => {
            return Err(Error::Domain(format!(
                "letter σ{i}^{e} outside the B₃ alphabet"
            )))
        }
    };
    Ok(TraceCoord {
        x: nx,
        y: ny,
        z: nz,
        b: b.clone(),
        c: c.clone(),
        a: a.clone(),
    })
}

/// Left-to-right fold of [`act`] over a 3-strand braid word.
pub fn act_word<R: Ring>(b: &BraidWord, coords: &TraceCoord<R>) -> Result<TraceCoord<R>> {
    if b.strands() != 3 {
        return Err(Error::StrandMismatch {
            expected: 3,
            got: b.strands(),
        });
    }
    let mut cur = coords.clone();
    for &letter in b.letters() {
        cur = act(letter, &cur)?;
    }
    Ok(cur)
}
