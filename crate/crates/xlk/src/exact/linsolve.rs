//! Exact sparse linear algebra over ℚ(i), sized for bounded-degree ideal
//! membership certificates (tens to hundreds of columns).

use std::collections::HashMap;

use super::GaussRat;

/// A sparse vector indexed by `usize` rows.
pub type SparseVec = HashMap<usize, GaussRat>;

fn axpy(dst: &mut SparseVec, coeff: &GaussRat, src: &SparseVec) {
    for (row, v) in src {
        let add = coeff * v;
        match dst.get_mut(row) {
            Some(cur) => {
                let s = &*cur + &add;
                if s.is_zero() {
                    dst.remove(row);
                } else {
                    *cur = s;
                }
            }
            None => {
                if !add.is_zero() {
                    dst.insert(*row, add);
                }
            }
        }
    }
}

/// Decide whether `target` lies in the column space of `columns`, and if so
/// return one coefficient vector expressing it. Exact Gaussian elimination
/// with sparse columns.
pub fn solve_column_space(columns: &[SparseVec], target: &SparseVec) -> Option<Vec<GaussRat>> {
    // echelon basis: (pivot_row, vector, combination over original columns)
    let mut basis: Vec<(usize, SparseVec, Vec<GaussRat>)> = Vec::new();
    let ncols = columns.len();

    let reduce =
        |v: &mut SparseVec, comb: &mut Vec<GaussRat>, basis: &[(usize, SparseVec, Vec<GaussRat>)]| {
            for (pivot, bv, bcomb) in basis {
                if let Some(c) = v.get(pivot).cloned() {
                    let factor = -&c;
                    axpy(v, &factor, bv);
                    for (k, bc) in bcomb.iter().enumerate() {
                        comb[k] = &comb[k] + &(&factor * bc);
                    }
                }
            }
        };

    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut comb = vec![GaussRat::zero(); ncols];
        comb[j] = GaussRat::one();
        reduce(&mut v, &mut comb, &basis);
        if v.is_empty() {
            continue; // dependent column
        }
        // normalize on a deterministic pivot: the smallest row index
        let pivot = *v.keys().min().unwrap();
        let inv = v[&pivot].inv().unwrap();
        for val in v.values_mut() {
            *val = &*val * &inv;
        }
        for c in comb.iter_mut() {
            *c = &*c * &inv;
        }
        basis.push((pivot, v, comb));
        // keep the basis triangular: earlier vectors reduced by the new one
        let (pivot, bv, bcomb) = basis.last().unwrap().clone();
        for k in 0..basis.len() - 1 {
            if let Some(c) = basis[k].1.get(&pivot).cloned() {
                let factor = -&c;
                axpy(&mut basis[k].1, &factor, &bv);
                for (t, bc) in bcomb.iter().enumerate() {
                    basis[k].2[t] = &basis[k].2[t] + &(&factor * bc);
                }
            }
        }
    }

    let mut v = target.clone();
    let mut comb = vec![GaussRat::zero(); ncols];
    reduce(&mut v, &mut comb, &basis);
    if v.is_empty() {
        // target = sum over basis of eliminated parts: comb currently holds
        // the NEGATED combination used to cancel target, so negate it back.
        Some(comb.iter().map(|c| -c).collect())
    } else {
        None
    }
}
