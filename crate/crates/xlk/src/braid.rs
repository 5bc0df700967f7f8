//! Braid words, orientation-reversing involutions, permutation images, the
//! Artin action on matrix tuples, Turk's head braids, and strand holonomy
//! words for mapping-torus boundary subgroups.
//!
//! Conventions, fixed globally:
//!
//! * braids compose left to right (drawn horizontally);
//! * the Artin action of a positive generator is
//!   σᵢ: (Mᵢ, Mᵢ₊₁) ↦ (Mᵢ₊₁, Mᵢ₊₁⁻¹ Mᵢ Mᵢ₊₁),
//!   σᵢ⁻¹: (Mᵢ, Mᵢ₊₁) ↦ (Mᵢ Mᵢ₊₁ Mᵢ⁻¹, Mᵢ),
//!   the variant that matches the trace-coordinate action on the
//!   equal-trace slice (see the `trace` module oracle tests);
//! * permutations act with letters applied left to right.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exact::{FreeWord, Mat2, Ring};
use crate::{Error, Result};

/// A word in the Artin generators of Bₙ.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    /// (generator index 1..=n-1, sign ±1)
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: &[(usize, i8)]) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Domain("need at least 2 strands".into()));
        }
        for &(i, e) in letters {
            if i == 0 || i >= strands {
                return Err(Error::GeneratorRange {
                    index: i,
                    strands,
                });
            }
            if e != 1 && e != -1 {
                return Err(Error::Domain(format!("letter sign must be ±1, got {e}")));
            }
        }
        Ok(BraidWord {
            strands,
            letters: letters.to_vec(),
        })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn compose(&self, rhs: &BraidWord) -> Result<BraidWord> {
        if self.strands != rhs.strands {
            return Err(Error::StrandMismatch {
                expected: self.strands,
                got: rhs.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn repeat(&self, k: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Parse the whitespace token format `s1 S2 s1` (lowercase positive,
    /// uppercase inverse).
    pub fn parse(strands: usize, text: &str) -> Result<BraidWord> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (head, rest) = tok.split_at(1);
            let sign = match head {
                "s" => 1,
                "S" => -1,
                _ => {
                    return Err(Error::Parse(format!(
                        "braid token `{tok}` must start with s or S"
                    )))
                }
            };
            let idx: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad braid token `{tok}`")))?;
            letters.push((idx, sign));
        }
        BraidWord::new(strands, &letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| format!("{}{}", if e > 0 { "s" } else { "S" }, i))
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// The two orientation-reversing involution families of the punctured disc.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionKind {
    /// Interchanges punctures pᵢ and p_{n+1−i}; on letters σᵢ^± ↦ σ_{n−i}^∓.
    Reflect,
    /// Fixes each puncture; on letters σᵢ^± ↦ σᵢ^∓ (mirror image).
    Mirror,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Involution {
    pub kind: InvolutionKind,
    pub strands: usize,
}

impl Involution {
    pub fn reflect(strands: usize) -> Self {
        Involution {
            kind: InvolutionKind::Reflect,
            strands,
        }
    }

    pub fn mirror(strands: usize) -> Self {
        Involution {
            kind: InvolutionKind::Mirror,
            strands,
        }
    }

    /// Puncture permutation (0-based).
    pub fn perm(&self) -> Perm {
        match self.kind {
            InvolutionKind::Reflect => {
                Perm::new((0..self.strands).rev().collect()).expect("valid")
            }
            InvolutionKind::Mirror => Perm::identity(self.strands),
        }
    }

    /// Index image (0-based strand index).
    pub fn apply_index(&self, i: usize) -> usize {
        match self.kind {
            InvolutionKind::Reflect => self.strands - 1 - i,
            InvolutionKind::Mirror => i,
        }
    }
}

impl FromStr for InvolutionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "reflect" => Ok(InvolutionKind::Reflect),
            "mirror" => Ok(InvolutionKind::Mirror),
            _ => Err(Error::Parse(format!(
                "involution must be `reflect` or `mirror`, got `{s}`"
            ))),
        }
    }
}

/// Letterwise image of a braid under an involution. An involution on words:
/// `star(star(b)) == b`.
pub fn star(b: &BraidWord, tau: Involution) -> Result<BraidWord> {
    if tau.strands != b.strands {
        return Err(Error::StrandMismatch {
            expected: b.strands,
            got: tau.strands,
        });
    }
    let letters: Vec<(usize, i8)> = b
        .letters
        .iter()
        .map(|&(i, e)| match tau.kind {
            InvolutionKind::Reflect => (b.strands - i, -e),
            InvolutionKind::Mirror => (i, -e),
        })
        .collect();
    BraidWord::new(b.strands, &letters)
}

/// A permutation of {0..n-1} in one-line notation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen[v] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle type, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.0[cur];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    pub fn is_n_cycle(&self) -> bool {
        self.cycle_type() == [self.0.len()]
    }
}

/// π(b), or π(bτ) when an involution is supplied, under the fixed
/// apply-letters-left-to-right convention.
pub fn perm_image(b: &BraidWord, tau: Option<Involution>) -> Perm {
    let n = b.strands;
    let mut p = Perm::identity(n);
    for &(i, _) in &b.letters {
        p = p.then(&Perm::transposition(n, i - 1, i));
    }
    if let Some(tau) = tau {
        p = p.then(&tau.perm());
    }
    p
}

/// The closure of b·star(b, τ) is a knot iff n is odd and π(bτ) is an
/// n-cycle.
pub fn closure_is_knot(b: &BraidWord, tau: Involution) -> bool {
    b.strands % 2 == 1 && perm_image(b, Some(tau)).is_n_cycle()
}

/// Left-to-right fold of the Artin generator action over a matrix tuple.
/// The ordered product M₁⋯Mₙ is preserved.
pub fn artin_act<R: Ring>(b: &BraidWord, tuple: &[Mat2<R>]) -> Result<Vec<Mat2<R>>> {
    if tuple.len() != b.strands {
        return Err(Error::StrandMismatch {
            expected: b.strands,
            got: tuple.len(),
        });
    }
    let mut m: Vec<Mat2<R>> = tuple.to_vec();
    for &(i, e) in &b.letters {
        let i = i - 1;
        if e > 0 {
            let new_i = m[i + 1].clone();
            let new_i1 = m[i + 1].inv_det1().mul(&m[i]).mul(&m[i + 1]);
            m[i] = new_i;
            m[i + 1] = new_i1;
        } else {
            let new_i = m[i].mul(&m[i + 1]).mul(&m[i].inv_det1());
            let new_i1 = m[i].clone();
            m[i] = new_i;
            m[i + 1] = new_i1;
        }
    }
    Ok(m)
}

/// The same fold at the free-group level: transports the generator tuple
/// (g₁, …, gₙ) along the braid.
pub fn artin_transport(b: &BraidWord) -> Vec<FreeWord> {
    let mut w: Vec<FreeWord> = (0..b.strands).map(FreeWord::gen).collect();
    for &(i, e) in &b.letters {
        let i = i - 1;
        if e > 0 {
            let new_i = w[i + 1].clone();
            let new_i1 = w[i + 1].inverse().concat(&w[i]).concat(&w[i + 1]);
            w[i] = new_i;
            w[i + 1] = new_i1;
        } else {
            let new_i = w[i].concat(&w[i + 1]).concat(&w[i].inverse());
            let new_i1 = w[i].clone();
            w[i] = new_i;
            w[i + 1] = new_i1;
        }
    }
    w
}

/// Standard braid data for the Turk's head knot Th(p, q): the full braid
/// (σ₁σ₂⁻¹⋯σ_{p-2}σ_{p-1}⁻¹)^q and the half word b with
/// b·star(b, Reflect) equivalent to it (equal permutation images and Artin
/// action; word-level equality is not required since commutation moves
/// reorder letters).
pub fn turks_head(p: usize, q: usize) -> Result<(BraidWord, BraidWord)> {
    if p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 {
        return Err(Error::TurksHeadParity(p, q));
    }
    let mut period = Vec::new();
    for i in 1..p {
        period.push((i, if i % 2 == 1 { 1 } else { -1 }));
    }
    let full = BraidWord::new(p, &period)?.repeat(q);
    let odd: Vec<(usize, i8)> = (1..p).step_by(2).map(|i| (i, 1)).collect();
    let even: Vec<(usize, i8)> = (2..p).step_by(2).map(|i| (i, -1)).collect();
    let o = BraidWord::new(p, &odd)?;
    let e = BraidWord::new(p, &even)?;
    let half = o.compose(&e)?.repeat((q - 1) / 2).compose(&o)?;
    Ok((full, half))
}

/// Decompose a braid-automorphism image of a generator: every braid sends
/// gᵢ to a conjugate v·g_j·v⁻¹ with positive exponent.
fn split_conjugate(w: &FreeWord) -> Option<(FreeWord, usize)> {
    let letters = w.letters();
    let len = letters.len();
    if len % 2 == 0 {
        return None;
    }
    let mid = len / 2;
    let (g, e) = letters[mid];
    if e != 1 {
        return None;
    }
    let v = FreeWord::from_letters(&letters[..mid]);
    // verify w == v g v^{-1}
    let rebuilt = FreeWord::gen(g).conj_by(&v);
    if &rebuilt == w {
        Some((v, g))
    } else {
        None
    }
}

/// A word u over {g₁..gₙ, a} (a = generator index n) with
/// ρ(u)·Gᵢ·ρ(u)⁻¹ = Gᵢ⁻¹ for every mapping-torus representation
/// (G₁..Gₙ, A) of b·τ, where conjugation by a realizes the monodromy.
/// The word has total a-exponent n and the shape cₙ·a·c_{n-1}·a⋯c₁·a.
///
/// The relation is an implemented reading of the boundary Klein bottle of
/// the mapping torus; callers re-verify it numerically at every use.
pub fn strand_holonomy(b: &BraidWord, tau: Involution, strand: usize) -> Result<FreeWord> {
    if !closure_is_knot(b, tau) {
        return Err(Error::ClosureNotAKnot);
    }
    let n = b.strands;
    if strand >= n {
        return Err(Error::Domain(format!("strand index {strand} out of range")));
    }
    let transported = artin_transport(b);
    let mut conj: Vec<(FreeWord, usize)> = Vec::with_capacity(n);
    for w in &transported {
        conj.push(split_conjugate(w).ok_or_else(|| {
            Error::Domain("braid image is not a positive conjugate of a generator".into())
        })?);
    }
    let p = perm_image(b, None);
    let p_inv = p.inverse();
    // conjugation by C(i) := a⁻¹ vᵢ maps G_{p(i)} to G_{τ(i)}⁻¹; chain the
    // moves around the strand circle.
    let a_gen = n;
    let mut u = FreeWord::empty();
    let mut target = strand;
    for _ in 0..n {
        let i = p_inv.apply(target);
        let c = FreeWord::gen_inv(a_gen).concat(&conj[i].0);
        u = c.concat(&u);
        target = tau.apply_index(i);
    }
    if target != strand {
        return Err(Error::Domain(
            "strand chain did not close up; permutation is not an n-cycle".into(),
        ));
    }
    // u conjugates G_strand to its inverse with a-exponent −n; return the
    // inverse so the exponent is +n as in the boundary orientation.
    Ok(u.inverse())
}

/// ψ(∂) for the boundary word ∂ = g₁⋯gₙ: the image of ∂ under the
/// conjugation-by-A automorphism, as a free word. Returns the word together
/// with the conjugator w₀ satisfying ψ(∂) = w₀·∂⁻¹·w₀⁻¹, when that shape is
/// found.
pub fn boundary_transport(
    b: &BraidWord,
    tau: Involution,
) -> Result<(FreeWord, Option<FreeWord>)> {
    let n = b.strands;
    let transported = artin_transport(b);
    let mut psi_del = FreeWord::empty();
    for j in 0..n {
        let wt = &transported[tau.apply_index(j)];
        psi_del = psi_del.concat(&wt.inverse());
    }
    let del_inv: FreeWord = {
        let mut w = FreeWord::empty();
        for j in 0..n {
            w = w.concat(&FreeWord::gen(j));
        }
        w.inverse()
    };
    let target_len = del_inv.len();
    let wlen = psi_del.len();
    let conjugator = if wlen >= target_len && (wlen - target_len) % 2 == 0 {
        let l = (wlen - target_len) / 2;
        let w0 = FreeWord::from_letters(&psi_del.letters()[..l]);
        if del_inv.conj_by(&w0) == psi_del {
            Some(w0)
        } else {
            None
        }
    } else {
        None
    };
    Ok((psi_del, conjugator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussRat;
    use rand::{Rng, SeedableRng};

    fn rand_braid(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
        let letters: Vec<(usize, i8)> = (0..len)
            .map(|_| (rng.gen_range(1..n), if rng.gen() { 1 } else { -1 }))
            .collect();
        BraidWord::new(n, &letters).unwrap()
    }

    fn rand_sl2_tuple(rng: &mut impl Rng, n: usize) -> Vec<Mat2<GaussRat>> {
        (0..n)
            .map(|_| {
                // random integer det-1 matrix: [[1,a],[0,1]]·[[1,0],[c,1]]·[[1,d],[0,1]]
                let a = GaussRat::from_int(rng.gen_range(-3..4));
                let c = GaussRat::from_int(rng.gen_range(-3..4));
                let d = GaussRat::from_int(rng.gen_range(-3..4));
                let u = Mat2::new(
                    GaussRat::one(),
                    a,
                    GaussRat::zero(),
                    GaussRat::one(),
                );
                let l = Mat2::new(
                    GaussRat::one(),
                    GaussRat::zero(),
                    c,
                    GaussRat::one(),
                );
                let v = Mat2::new(
                    GaussRat::one(),
                    d,
                    GaussRat::zero(),
                    GaussRat::one(),
                );
                u.mul(&l).mul(&v)
            })
            .collect()
    }

    #[test]
    fn star_10_123_anchor() {
        let b = BraidWord::parse(3, "s1 S2 s1 S2 s1").unwrap();
        let bs = star(&b, Involution::reflect(3)).unwrap();
        assert_eq!(bs.to_string(), "S2 s1 S2 s1 S2");
    }

    #[test]
    fn star_mirror_sign_flip() {
        let b = BraidWord::parse(3, "s1 S2 S2 s1 s1").unwrap();
        let bs = star(&b, Involution::mirror(3)).unwrap();
        assert_eq!(bs.to_string(), "S1 s2 s2 S1 S1");
    }

    #[test]
    fn star_is_an_involution() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let n = *[3, 5, 7].iter().nth(rng.gen_range(0..3)).unwrap();
            let len = rng.gen_range(0..12);
            let b = rand_braid(&mut rng, n, len);
            for tau in [Involution::reflect(n), Involution::mirror(n)] {
                assert_eq!(star(&star(&b, tau).unwrap(), tau).unwrap(), b);
            }
        }
    }

    #[test]
    fn star_respects_composition() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let n = 5;
            let l1 = rng.gen_range(0..8);
            let b1 = rand_braid(&mut rng, n, l1);
            let l2 = rng.gen_range(0..8);
            let b2 = rand_braid(&mut rng, n, l2);
            for tau in [Involution::reflect(n), Involution::mirror(n)] {
                assert_eq!(
                    star(&b1.compose(&b2).unwrap(), tau).unwrap(),
                    star(&b1, tau).unwrap().compose(&star(&b2, tau).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn perm_image_basics() {
        let id = BraidWord::identity(3);
        assert!(perm_image(&id, None).is_identity());
        let s1 = BraidWord::parse(2, "s1").unwrap();
        assert_eq!(perm_image(&s1, None), Perm::transposition(2, 0, 1));
    }

    #[test]
    fn perm_image_homomorphism() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..100 {
            let n = 5;
            let l1 = rng.gen_range(0..10);
            let b1 = rand_braid(&mut rng, n, l1);
            let l2 = rng.gen_range(0..10);
            let b2 = rand_braid(&mut rng, n, l2);
            assert_eq!(
                perm_image(&b1.compose(&b2).unwrap(), None),
                perm_image(&b1, None).then(&perm_image(&b2, None))
            );
        }
    }

    #[test]
    fn half_braid_of_10_123_is_a_3_cycle_with_reflect() {
        let b = BraidWord::parse(3, "s1 S2 s1 S2 s1").unwrap();
        let p = perm_image(&b, Some(Involution::reflect(3)));
        assert_eq!(p.cycle_type(), vec![3]);
        assert!(closure_is_knot(&b, Involution::reflect(3)));
    }

    #[test]
    fn identity_braid_closure_is_not_a_knot() {
        let id = BraidWord::identity(3);
        let p = perm_image(&id, Some(Involution::reflect(3)));
        assert_eq!(p.cycle_type(), vec![2, 1]); // the transposition (1 3)
        assert!(!closure_is_knot(&id, Involution::reflect(3)));
    }

    #[test]
    fn even_strand_count_never_closes_to_a_knot() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let len = rng.gen_range(0..10);
            let b = rand_braid(&mut rng, 4, len);
            for tau in [Involution::reflect(4), Involution::mirror(4)] {
                assert!(!closure_is_knot(&b, tau));
            }
        }
    }

    #[test]
    fn closure_is_knot_star_symmetric() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for _ in 0..100 {
            let len = rng.gen_range(0..10);
            let b = rand_braid(&mut rng, 3, len);
            for tau in [Involution::reflect(3), Involution::mirror(3)] {
                assert_eq!(
                    closure_is_knot(&b, tau),
                    closure_is_knot(&star(&b, tau).unwrap(), tau)
                );
            }
        }
    }

    #[test]
    fn artin_identity_and_definition() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let t = rand_sl2_tuple(&mut rng, 3);
        assert_eq!(artin_act(&BraidWord::identity(3), &t).unwrap(), t);
        let s1 = BraidWord::parse(3, "s1").unwrap();
        let out = artin_act(&s1, &t).unwrap();
        assert_eq!(out[0], t[1]);
        assert_eq!(out[1], t[1].inv_det1().mul(&t[0]).mul(&t[1]));
        assert_eq!(out[2], t[2]);
        // inverse letter undoes it
        let s1i = BraidWord::parse(3, "S1").unwrap();
        assert_eq!(artin_act(&s1i, &out).unwrap(), t);
    }

    #[test]
    fn artin_preserves_ordered_product_and_composes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for _ in 0..100 {
            let t = rand_sl2_tuple(&mut rng, 3);
            let l1 = rng.gen_range(0..7);
            let b1 = rand_braid(&mut rng, 3, l1);
            let l2 = rng.gen_range(0..7);
            let b2 = rand_braid(&mut rng, 3, l2);
            let prod =
                |m: &[Mat2<GaussRat>]| m.iter().skip(1).fold(m[0].clone(), |a, x| a.mul(x));
            let h = artin_act(&b1, &t).unwrap();
            assert_eq!(prod(&t), prod(&h));
            let lhs = artin_act(&b1.compose(&b2).unwrap(), &t).unwrap();
            let rhs = artin_act(&b2, &h).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(artin_act(&b1.inverse(), &h).unwrap(), t);
        }
    }

    #[test]
    fn reflect_transport_fact() {
        // if b sends G to H, then star(b) sends the inverse-reversed tuple
        // of G to the inverse-reversed tuple of H
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        for _ in 0..60 {
            let n = *[3usize, 5].iter().nth(rng.gen_range(0..2)).unwrap();
            let len = rng.gen_range(1..9);
            let b = rand_braid(&mut rng, n, len);
            let g = rand_sl2_tuple(&mut rng, n);
            let h = artin_act(&b, &g).unwrap();
            let rev_inv = |m: &[Mat2<GaussRat>]| -> Vec<Mat2<GaussRat>> {
                m.iter().rev().map(|x| x.inv_det1()).collect()
            };
            let lhs = artin_act(
                &star(&b, Involution::reflect(n)).unwrap(),
                &rev_inv(&g),
            )
            .unwrap();
            assert_eq!(lhs, rev_inv(&h));
        }
    }

    #[test]
    fn turks_head_words() {
        let (full, half) = turks_head(3, 3).unwrap();
        assert_eq!(full.to_string(), "s1 S2 s1 S2 s1 S2");
        assert_eq!(half.to_string(), "s1 S2 s1");
        let (_, half35) = turks_head(3, 5).unwrap();
        assert_eq!(half35.to_string(), "s1 S2 s1 S2 s1");
        assert!(turks_head(4, 3).is_err());
        assert!(turks_head(3, 2).is_err());
    }

    #[test]
    fn turks_head_half_full_semantic_equality() {
        for (p, q) in [(3usize, 3usize), (3, 5), (5, 3)] {
            let (full, half) = turks_head(p, q).unwrap();
            let tau = Involution::reflect(p);
            let hh = half.compose(&star(&half, tau).unwrap()).unwrap();
            assert_eq!(perm_image(&hh, None), perm_image(&full, None));
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(53);
            for _ in 0..20 {
                let t = rand_sl2_tuple(&mut rng, p);
                assert_eq!(
                    artin_act(&hh, &t).unwrap(),
                    artin_act(&full, &t).unwrap()
                );
            }
        }
    }

    #[test]
    fn strand_holonomy_shape() {
        let b = BraidWord::parse(3, "s1 S2 s1 S2 s1").unwrap();
        let tau = Involution::reflect(3);
        let u = strand_holonomy(&b, tau, 0).unwrap();
        // total a-exponent is n (odd): orientation-reversing
        assert_eq!(u.exponent_sum(3), 3);
        // rejected when the closure is not a knot
        let bad = BraidWord::parse(3, "s1 s2 s1").unwrap();
        assert!(matches!(
            strand_holonomy(&bad, Involution::mirror(3), 0),
            Err(Error::ClosureNotAKnot)
        ));
    }

    #[test]
    fn braid_transport_fixes_boundary_word() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(59);
        for _ in 0..40 {
            let n = 3;
            let len = rng.gen_range(0..8);
            let b = rand_braid(&mut rng, n, len);
            let w = artin_transport(&b);
            let mut prod = FreeWord::empty();
            for wi in &w {
                prod = prod.concat(wi);
            }
            let mut del = FreeWord::empty();
            for j in 0..n {
                del = del.concat(&FreeWord::gen(j));
            }
            assert_eq!(prod, del);
        }
    }
}
