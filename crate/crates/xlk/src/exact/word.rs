//! Words in a free group, with evaluation at matrix assignments.

use std::collections::HashMap;
use std::fmt;

use super::{Mat2, Ring};
use crate::{Error, Result};

/// A word in the free group on an indexed generator alphabet: a sequence of
/// `(generator, ±1)` letters.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn gen(i: usize) -> Self {
        FreeWord {
            letters: vec![(i, 1)],
        }
    }

    pub fn gen_inv(i: usize) -> Self {
        FreeWord {
            letters: vec![(i, -1)],
        }
    }

    pub fn from_letters(letters: &[(usize, i8)]) -> Self {
        FreeWord {
            letters: letters.to_vec(),
        }
        .reduced()
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Free reduction: no adjacent cancelling pairs remain.
    pub fn reduced(&self) -> FreeWord {
        let mut stack: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            if e == 0 {
                continue;
            }
            match stack.last() {
                Some(&(tg, te)) if tg == g && te == -e => {
                    stack.pop();
                }
                _ => stack.push((g, e)),
            }
        }
        FreeWord { letters: stack }
    }

    pub fn concat(&self, rhs: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        FreeWord { letters }.reduced()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    pub fn conj_by(&self, w: &FreeWord) -> FreeWord {
        w.concat(self).concat(&w.inverse())
    }

    /// Sum of exponents of one generator.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters
            .iter()
            .filter(|(g, _)| *g == gen)
            .map(|&(_, e)| e as i64)
            .sum()
    }

    /// Substitute a word for each generator.
    pub fn map_letters(&self, f: impl Fn(usize, i8) -> FreeWord) -> FreeWord {
        let mut out = FreeWord::empty();
        for &(g, e) in &self.letters {
            out = out.concat(&f(g, e));
        }
        out
    }

    /// Evaluate the word at a matrix assignment. Inverses use the adjugate,
    /// so assigned matrices must have determinant one.
    pub fn eval<R: Ring>(&self, assign: &HashMap<usize, Mat2<R>>) -> Result<Mat2<R>> {
        let sample = assign
            .values()
            .next()
            .ok_or(Error::UnboundGenerator(usize::MAX))?;
        let mut acc = sample.identity_like();
        for &(g, e) in &self.letters {
            let m = assign.get(&g).ok_or(Error::UnboundGenerator(g))?;
            let m = if e >= 0 { m.clone() } else { m.inv_det1() };
            acc = acc.mul(&m);
        }
        Ok(acc)
    }

    /// Evaluate against a dense tuple (generator `i` ↦ `mats[i]`).
    pub fn eval_tuple<R: Ring>(&self, mats: &[Mat2<R>]) -> Result<Mat2<R>> {
        let sample = mats.first().ok_or(Error::UnboundGenerator(usize::MAX))?;
        let mut acc = sample.identity_like();
        for &(g, e) in &self.letters {
            let m = mats.get(g).ok_or(Error::UnboundGenerator(g))?;
            let m = if e >= 0 { m.clone() } else { m.inv_det1() };
            acc = acc.mul(&m);
        }
        Ok(acc)
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "g{g}")?;
            if e < 0 {
                write!(f, "⁻¹")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussRat;
    use rand::{Rng, SeedableRng};

    fn gmat(a: i64, b: i64, c: i64, d: i64) -> Mat2<GaussRat> {
        Mat2::new(
            GaussRat::from_int(a),
            GaussRat::from_int(b),
            GaussRat::from_int(c),
            GaussRat::from_int(d),
        )
    }

    #[test]
    fn empty_word_is_identity() {
        let assign: HashMap<usize, Mat2<GaussRat>> = [(0, gmat(1, 1, 0, 1))].into();
        assert!(FreeWord::empty().eval(&assign).unwrap().is_identity());
    }

    #[test]
    fn cancellation() {
        let w = FreeWord::gen(0).concat(&FreeWord::gen_inv(0));
        assert!(w.is_empty());
        let assign: HashMap<usize, Mat2<GaussRat>> = [(0, gmat(2, 1, 1, 1))].into();
        assert!(w.eval(&assign).unwrap().is_identity());
    }

    #[test]
    fn hand_multiplied_product() {
        // x ↦ [[1,1],[0,1]], y ↦ [[1,0],[-1,1]]: xy = [[0,1],[-1,1]]
        let w = FreeWord::gen(0).concat(&FreeWord::gen(1));
        let assign: HashMap<usize, Mat2<GaussRat>> =
            [(0, gmat(1, 1, 0, 1)), (1, gmat(1, 0, -1, 1))].into();
        assert_eq!(w.eval(&assign).unwrap(), gmat(0, 1, -1, 1));
    }

    #[test]
    fn missing_generator_errors() {
        let w = FreeWord::gen(3);
        let assign: HashMap<usize, Mat2<GaussRat>> = [(0, gmat(1, 1, 0, 1))].into();
        assert!(matches!(
            w.eval(&assign),
            Err(Error::UnboundGenerator(3))
        ));
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mats = [gmat(1, 1, 0, 1), gmat(1, 0, -1, 1), gmat(2, 1, 1, 1)];
        let assign: HashMap<usize, Mat2<GaussRat>> =
            mats.iter().cloned().enumerate().collect();
        for _ in 0..100 {
            let rand_word = |rng: &mut rand_chacha::ChaCha8Rng| {
                let letters: Vec<(usize, i8)> = (0..rng.gen_range(0..6))
                    .map(|_| (rng.gen_range(0..3), if rng.gen() { 1 } else { -1 }))
                    .collect();
                FreeWord::from_letters(&letters)
            };
            let w1 = rand_word(&mut rng);
            let w2 = rand_word(&mut rng);
            let lhs = w1.concat(&w2).eval(&assign).unwrap();
            let rhs = w1.eval(&assign).unwrap().mul(&w2.eval(&assign).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
