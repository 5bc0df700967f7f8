//! Numeric location of the symmetric subvariety U and lifting trace
//! coordinates back to matrix triples.
//!
//! U is cut out, inside the equal-trace slice, by X = z, Z = x, Y = y for
//! (X, Y, Z) the braid image of (x, y, z). Points are found by damped
//! Gauss–Newton on the square system {P, X−z, Z−x, Y−y} in (x, y, z, b)
//! with c swept as a parameter from seeded random starts. Returned points
//! must keep the triple-product trace away from ±2 and sit on the branch
//! where Y − b + y + xz is bounded away from zero.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::exact::{LaurentPoly, Mat2};
use crate::numeric::{max_abs, newton_solve, poly_roots, sample_complex, NewtonOptions, C64};
use crate::trace::{act_word, coordinate_vars, fricke_poly, symbolic_coords, TraceCoord};
use crate::{Error, Result, Tolerances};

/// A certified numeric point of U.
#[derive(Clone, Debug, serde::Serialize)]
pub struct UPoint {
    /// (x, y, z, b, c) as (re, im) pairs.
    pub coords: [[f64; 2]; 5],
    /// Maximum residual over {P, X−z, Z−x, Y−y}.
    pub residual: f64,
    /// Common meridian trace a.
    pub meridian_trace: [f64; 2],
    /// Triple-product trace T = tr G₁G₂G₃.
    pub triple_trace: [f64; 2],
    /// Branch value Y − b + y + xz (bounded away from 0 on U).
    pub branch: [f64; 2],
}

impl UPoint {
    pub fn coords_c64(&self) -> [C64; 5] {
        self.coords.map(|[re, im]| C64::new(re, im))
    }

    pub fn a(&self) -> C64 {
        C64::new(self.meridian_trace[0], self.meridian_trace[1])
    }

    pub fn t(&self) -> C64 {
        C64::new(self.triple_trace[0], self.triple_trace[1])
    }
}

fn c64_pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

/// Symbolic data shared by the U-point solver and the local chart.
struct Equations {
    /// P, X−z, Z−x, Y−y.
    eqs: Vec<LaurentPoly>,
    /// Partials of each equation with respect to (x, y, z, b, c).
    partials: Vec<[LaurentPoly; 5]>,
    /// Branch polynomial Y − b + y + xz.
    branch: LaurentPoly,
}

fn build_equations(braid: &BraidWord) -> Result<Equations> {
    let vars = coordinate_vars();
    let coords = symbolic_coords(&vars)?;
    let image = act_word(braid, &coords)?;
    let p = fricke_poly(&vars)?;
    let x = LaurentPoly::var(&vars, "x")?;
    let y = LaurentPoly::var(&vars, "y")?;
    let z = LaurentPoly::var(&vars, "z")?;
    let b = LaurentPoly::var(&vars, "b")?;
    let eqs = vec![
        p,
        image.x.sub(&z),
        image.z.sub(&x),
        image.y.sub(&y),
    ];
    let branch = image.y.sub(&b).add(&y).add(&x.mul(&z));
    let names = ["x", "y", "z", "b", "c"];
    let mut partials = Vec::with_capacity(eqs.len());
    for e in &eqs {
        let row: Vec<LaurentPoly> = names.iter().map(|n| e.partial(n).unwrap()).collect();
        partials.push(row.try_into().expect("five partials"));
    }
    Ok(Equations {
        eqs,
        partials,
        branch,
    })
}

/// Solve for the meridian trace: s = a² is a root of
/// s³ − (4+b)s² + (4+2b−c)s − b² and T = b/a − a must reproduce c.
fn meridian_from_bc(b: C64, c: C64, tol: &Tolerances) -> Option<(C64, C64)> {
    let four = C64::new(4.0, 0.0);
    let two = C64::new(2.0, 0.0);
    let coeffs = [
        -b * b,
        four + two * b - c,
        -(four + b),
        C64::new(1.0, 0.0),
    ];
    for s in poly_roots(&coeffs) {
        if s.norm() < 1e-8 {
            continue;
        }
        let a = s.sqrt();
        if a.norm() < tol.trace_margin {
            continue;
        }
        let t = b / a - a;
        let c_check = four - 3.0 * a * a - t * t - a * a * a * t;
        if (c_check - c).norm() > 1e-6 * (1.0 + c.norm()) {
            continue;
        }
        if (t - two).norm() <= tol.trace_margin || (t + two).norm() <= tol.trace_margin {
            continue;
        }
        return Some((a, t));
    }
    None
}

/// Locate `count` distinct U-points for a 3-strand braid. Deterministic for
/// a fixed seed; points are sorted canonically before return.
pub fn find_u_points(
    braid: &BraidWord,
    count: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<Vec<UPoint>> {
    let equations = build_equations(braid)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<UPoint> = Vec::new();
    let max_attempts = 120 * count.max(1);
    let mut attempts = 0;
    let mut rejected_margin = 0;
    let mut rejected_branch = 0;

    while found.len() < count && attempts < max_attempts {
        attempts += 1;
        let c_param = sample_complex(&mut rng, -1.5, 1.5);
        let start: Vec<C64> = (0..4).map(|_| sample_complex(&mut rng, -2.0, 2.0)).collect();

        let eval_point = |u: &[C64]| -> [C64; 5] { [u[0], u[1], u[2], u[3], c_param] };
        let f = |u: &[C64]| -> Result<Vec<C64>> {
            let pt = eval_point(u);
            Ok(equations.eqs.iter().map(|e| e.eval_complex(&pt)).collect())
        };
        let jac = |u: &[C64]| -> Result<Vec<C64>> {
            let pt = eval_point(u);
            let mut out = Vec::with_capacity(16);
            for row in &equations.partials {
                for col in 0..4 {
                    out.push(row[col].eval_complex(&pt));
                }
            }
            Ok(out)
        };
        let opts = NewtonOptions {
            max_iter: 100,
            target: 1e-12,
            fd_step: 1e-7,
        };
        let Ok((sol, _res)) = newton_solve(&f, &jac, &start, &opts) else {
            continue;
        };
        let pt = eval_point(&sol);
        let residual = max_abs(&f(&sol)?);
        if residual >= tol.residual {
            continue;
        }
        let Some((a, t)) = meridian_from_bc(pt[3], pt[4], tol) else {
            rejected_margin += 1;
            continue;
        };
        let branch = equations.branch.eval_complex(&pt);
        if branch.norm() < tol.trace_margin {
            rejected_branch += 1;
            continue;
        }
        if found.iter().any(|q| {
            q.coords_c64()
                .iter()
                .zip(&pt)
                .map(|(u, v)| (u - v).norm_sqr())
                .sum::<f64>()
                .sqrt()
                <= tol.distinct
        }) {
            continue;
        }
        found.push(UPoint {
            coords: pt.map(c64_pair),
            residual,
            meridian_trace: c64_pair(a),
            triple_trace: c64_pair(t),
            branch: c64_pair(branch),
        });
    }

    if found.len() < count {
        return Err(Error::NoPoints(format!(
            "found {}/{} points in {} attempts ({} failed the trace margin, {} on the wrong branch)",
            found.len(),
            count,
            attempts,
            rejected_margin,
            rejected_branch
        )));
    }
    // canonical order: lexicographic by rounded coordinates
    found.sort_by(|p, q| {
        let key = |u: &UPoint| -> Vec<i64> {
            u.coords
                .iter()
                .flat_map(|[re, im]| [(re * 1e8).round() as i64, (im * 1e8).round() as i64])
                .collect()
        };
        key(p).cmp(&key(q))
    });
    Ok(found)
}

/// Lift numeric trace coordinates (with meridian trace a) to an explicit
/// matrix triple in the standard frame:
/// G₁ = [[α, 1], [0, α⁻¹]], G₂ = [[α, 0], [r, α⁻¹]],
/// G₃ solved from tr G₃ = a, tr G₁G₃ = y, tr G₂G₃ = z, det G₃ = 1, taking
/// the quadratic root whose triple-product trace matches T = b/a − a.
pub fn lift_triple(coords: &TraceCoord<C64>, a: C64) -> Result<[Mat2<C64>; 3]> {
    let (x, y, z, b) = (coords.x, coords.y, coords.z, coords.b);
    if a.norm() < 1e-8 {
        return Err(Error::Domain(
            "meridian trace a = 0 is outside the lift's domain".into(),
        ));
    }
    // reducible locus: commutator traces of all three pairs equal to 2
    let comm = |w: C64| 2.0 * a * a + w * w - a * a * w - 2.0;
    let two = C64::new(2.0, 0.0);
    if [x, y, z]
        .iter()
        .all(|&w| (comm(w) - two).norm() < 1e-8)
    {
        return Err(Error::ReducibleCoords);
    }
    let t_target = b / a - a;

    let alpha = {
        let d = (a * a - 4.0).sqrt();
        let cand = (a + d) / 2.0;
        if cand.norm() < 1e-12 {
            (a - d) / 2.0
        } else {
            cand
        }
    };
    let ainv = 1.0 / alpha;
    let r = x - alpha * alpha - ainv * ainv;
    if r.norm() < 1e-10 {
        return Err(Error::DegenerateLift(
            "anchor pair (G1, G2) is reducible at these coordinates".into(),
        ));
    }
    let g1 = Mat2::new(alpha, C64::new(1.0, 0.0), C64::new(0.0, 0.0), ainv);
    let g2 = Mat2::new(alpha, C64::new(0.0, 0.0), r, ainv);

    // G3 = [[p, q], [r3, s]]: three linear conditions leave a quadratic in p.
    let delta = ainv - alpha;
    let ya = y - a * ainv;
    let za = z - a * ainv;
    let qa = -(r + delta * delta);
    let qb = r * a - delta * (ya + za);
    let qc = -(za * ya) - r;
    let mut candidates = Vec::new();
    if qa.norm() < 1e-14 {
        if qb.norm() > 1e-14 {
            candidates.push(-qc / qb);
        }
    } else {
        let disc = (qb * qb - 4.0 * qa * qc).sqrt();
        candidates.push((-qb + disc) / (2.0 * qa));
        candidates.push((-qb - disc) / (2.0 * qa));
    }
    for p in candidates {
        let s = a - p;
        let r3 = ya + p * delta;
        let q = (za + p * delta) / r;
        let g3 = Mat2::new(p, q, r3, s);
        if (g3.det() - C64::new(1.0, 0.0)).norm() > 1e-8 {
            continue;
        }
        let t_got = g1.mul(&g2).mul(&g3).trace();
        if (t_got - t_target).norm() < 1e-6 * (1.0 + t_target.norm()) {
            return Ok([g1, g2, g3]);
        }
    }
    Err(Error::DegenerateLift(
        "no quadratic root matches the required triple-product trace".into(),
    ))
}

/// A local two-parameter chart of U at a base point: two coordinates are
/// freed as parameters, the remaining three are solved from
/// {P, X−z, Z−x} by Newton iteration from the base point.
pub struct USlice {
    eqs: [LaurentPoly; 3],
    partials: [[LaurentPoly; 5]; 3],
    base: [C64; 5],
    /// Indices (into x,y,z,b,c) of the two free parameters.
    pub free: [usize; 2],
}

/// Build the chart, choosing the freed pair so the remaining 3×3 Jacobian
/// minor at the base point is best conditioned.
pub fn u_slice_family(braid: &BraidWord, base: &UPoint) -> Result<USlice> {
    let equations = build_equations(braid)?;
    let eqs: [LaurentPoly; 3] = [
        equations.eqs[0].clone(),
        equations.eqs[1].clone(),
        equations.eqs[2].clone(),
    ];
    let partials: [[LaurentPoly; 5]; 3] = [
        equations.partials[0].clone(),
        equations.partials[1].clone(),
        equations.partials[2].clone(),
    ];
    let base_pt = base.coords_c64();
    // full 3×5 Jacobian at the base point
    let mut j = [[C64::new(0.0, 0.0); 5]; 3];
    for (i, row) in partials.iter().enumerate() {
        for (k, p) in row.iter().enumerate() {
            j[i][k] = p.eval_complex(&base_pt);
        }
    }
    let mut best: Option<([usize; 2], f64)> = None;
    for f0 in 0..5 {
        for f1 in (f0 + 1)..5 {
            let cols: Vec<usize> = (0..5).filter(|&k| k != f0 && k != f1).collect();
            let det = det3(&j, &cols);
            let score = det.norm();
            if best.map_or(true, |(_, s)| score > s) {
                best = Some(([f0, f1], score));
            }
        }
    }
    let (free, score) = best.unwrap();
    if score < 1e-10 {
        return Err(Error::SolverFailed(
            "U chart is singular at the base point".into(),
        ));
    }
    Ok(USlice {
        eqs,
        partials,
        base: base_pt,
        free,
    })
}

fn det3(j: &[[C64; 5]; 3], cols: &[usize]) -> C64 {
    let m = |r: usize, c: usize| j[r][cols[c]];
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

impl USlice {
    /// Parameter values of the base point.
    pub fn params_at_base(&self) -> [C64; 2] {
        [self.base[self.free[0]], self.base[self.free[1]]]
    }

    /// Solve the chart at the given parameters. Returns the full coordinate
    /// tuple and the max equation residual.
    pub fn solve(&self, params: [C64; 2]) -> Result<([C64; 5], f64)> {
        let solved: Vec<usize> = (0..5).filter(|k| !self.free.contains(k)).collect();
        let assemble = |u: &[C64]| -> [C64; 5] {
            let mut pt = self.base;
            pt[self.free[0]] = params[0];
            pt[self.free[1]] = params[1];
            for (j, &k) in solved.iter().enumerate() {
                pt[k] = u[j];
            }
            pt
        };
        let f = |u: &[C64]| -> Result<Vec<C64>> {
            let pt = assemble(u);
            Ok(self.eqs.iter().map(|e| e.eval_complex(&pt)).collect())
        };
        let jac = |u: &[C64]| -> Result<Vec<C64>> {
            let pt = assemble(u);
            let mut out = Vec::with_capacity(9);
            for row in &self.partials {
                for &k in &solved {
                    out.push(row[k].eval_complex(&pt));
                }
            }
            Ok(out)
        };
        let start: Vec<C64> = solved.iter().map(|&k| self.base[k]).collect();
        let opts = NewtonOptions {
            max_iter: 60,
            target: 1e-12,
            fd_step: 1e-7,
        };
        let (sol, res) = newton_solve(&f, &jac, &start, &opts)?;
        Ok((assemble(&sol), res))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::coords_from_triple_numeric;

    fn braid_10_123() -> BraidWord {
        BraidWord::parse(3, "s1 S2 s1 S2 s1").unwrap()
    }

    #[test]
    fn five_points_for_10_123() {
        let tol = Tolerances::default();
        let pts = find_u_points(&braid_10_123(), 5, 42, &tol).unwrap();
        assert_eq!(pts.len(), 5);
        for p in &pts {
            assert!(p.residual < 1e-10, "residual {}", p.residual);
            let t = p.t();
            assert!((t - C64::new(2.0, 0.0)).norm() > 1e-3);
            assert!((t + C64::new(2.0, 0.0)).norm() > 1e-3);
            assert!(C64::new(p.branch[0], p.branch[1]).norm() >= 1e-3);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let tol = Tolerances::default();
        let a = find_u_points(&braid_10_123(), 3, 7, &tol).unwrap();
        let b = find_u_points(&braid_10_123(), 3, 7, &tol).unwrap();
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.coords, q.coords);
        }
    }

    #[test]
    fn lift_roundtrip_on_u_points() {
        let tol = Tolerances::default();
        let pts = find_u_points(&braid_10_123(), 3, 11, &tol).unwrap();
        for p in &pts {
            let coords = TraceCoord::from_slice(&p.coords_c64());
            let g = lift_triple(&coords, p.a()).unwrap();
            let back = coords_from_triple_numeric(&g, 1e-8).unwrap();
            let orig = p.coords_c64();
            let got = back.as_array();
            for k in 0..5 {
                assert!(
                    (got[k] - orig[k]).norm() < 1e-9,
                    "coordinate {k} deviates by {:.2e}",
                    (got[k] - orig[k]).norm()
                );
            }
            // b = a(a+T) at every successful lift
            let b_identity = p.a() * (p.a() + p.t());
            assert!((b_identity - orig[3]).norm() < 1e-9);
        }
    }

    #[test]
    fn identity_triple_is_rejected() {
        let one = C64::new(1.0, 0.0);
        let id = Mat2::new(one, C64::new(0.0, 0.0), C64::new(0.0, 0.0), one);
        let coords =
            coords_from_triple_numeric(&[id.clone(), id.clone(), id], 1e-12).unwrap();
        assert!(matches!(
            lift_triple(&coords, C64::new(2.0, 0.0)),
            Err(Error::ReducibleCoords)
        ));
    }

    #[test]
    fn chart_solves_near_base() {
        let tol = Tolerances::default();
        let pts = find_u_points(&braid_10_123(), 2, 5, &tol).unwrap();
        let chart = u_slice_family(&braid_10_123(), &pts[0]).unwrap();
        let base_params = chart.params_at_base();
        let (pt, res) = chart.solve(base_params).unwrap();
        assert!(res < 1e-11);
        let orig = pts[0].coords_c64();
        for k in 0..5 {
            assert!((pt[k] - orig[k]).norm() < 1e-8);
        }
        // a genuinely moved point still solves
        let moved = [
            base_params[0] + C64::new(1e-3, 2e-4),
            base_params[1] - C64::new(2e-4, 1e-3),
        ];
        let (_pt2, res2) = chart.solve(moved).unwrap();
        assert!(res2 < 1e-11);
    }
}
