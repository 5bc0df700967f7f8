//! Sparse multivariate Laurent polynomials over ℚ(i).
//!
//! Negative exponents are permitted only for variables declared as units
//! (`m`, `t` style eigenvalue variables); trace coordinates are plain
//! polynomial variables. The canonical monomial order is descending
//! lexicographic on the exponent vector with respect to the declared
//! variable order, which makes the text serialization of every polynomial
//! bit-stable.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::{GaussRat, Ring};
use crate::{Error, Result};

/// An ordered variable set shared by all polynomials of one computation.
#[derive(Debug, PartialEq, Eq)]
pub struct Vars {
    names: Vec<String>,
    unit: Vec<bool>,
}

impl Vars {
    /// Plain polynomial variables (no negative exponents).
    pub fn new(names: &[&str]) -> Arc<Vars> {
        Arc::new(Vars {
            names: names.iter().map(|s| s.to_string()).collect(),
            unit: vec![false; names.len()],
        })
    }

    /// Variables with the listed subset invertible.
    pub fn with_units(names: &[&str], units: &[&str]) -> Arc<Vars> {
        Arc::new(Vars {
            names: names.iter().map(|s| s.to_string()).collect(),
            unit: names.iter().map(|n| units.contains(n)).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_unit(&self, i: usize) -> bool {
        self.unit[i]
    }
}

/// Exponent key stored so that the natural `BTreeMap` ascending order is the
/// *reverse* of the canonical (descending lexicographic) term order.
type Expo = Vec<i32>;

#[derive(Clone, PartialEq)]
pub struct LaurentPoly {
    vars: Arc<Vars>,
    terms: BTreeMap<Expo, GaussRat>,
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<Vars>) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<Vars>, c: GaussRat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Arc<Vars>) -> Self {
        Self::constant(vars, GaussRat::one())
    }

    /// The monomial `var^exp`. Negative exponents require a unit variable.
    pub fn monomial(vars: &Arc<Vars>, var: &str, exp: i32) -> Result<Self> {
        let idx = vars
            .index_of(var)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{var}`")))?;
        if exp < 0 && !vars.is_unit(idx) {
            return Err(Error::NonUnitNegativeExponent(var.to_string()));
        }
        let mut e = vec![0; vars.len()];
        e[idx] = exp;
        let mut p = Self::zero(vars);
        p.terms.insert(e, GaussRat::one());
        Ok(p)
    }

    /// The variable itself.
    pub fn var(vars: &Arc<Vars>, name: &str) -> Result<Self> {
        Self::monomial(vars, name, 1)
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> i32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<i32>())
            .max()
            .unwrap_or(0)
    }

    /// Degree in one variable (max exponent).
    pub fn degree_in(&self, var: &str) -> i32 {
        let Some(i) = self.vars.index_of(var) else {
            return 0;
        };
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Iterate terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &GaussRat)> {
        self.terms.iter().rev()
    }

    /// Leading term in the canonical order.
    pub fn leading(&self) -> Option<(&Expo, &GaussRat)> {
        self.terms.iter().next_back()
    }

    fn check_vars(&self, rhs: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &rhs.vars) || self.vars == rhs.vars,
            "laurent polynomials over different variable sets"
        );
    }

    fn insert(&mut self, e: Expo, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Expo = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// ∂/∂var, with the Laurent rule `d(x^k) = k x^{k-1}` (valid for unit
    /// variables too).
    pub fn partial(&self, var: &str) -> Result<Self> {
        let i = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{var}`")))?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.insert(e2, c * &GaussRat::from_int(e[i] as i64));
        }
        Ok(out)
    }

    /// Evaluate at exact scalars (one per variable, in declared order).
    pub fn eval_exact(&self, point: &[GaussRat]) -> Result<GaussRat> {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                term = term * pow_exact(&point[i], k)?;
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Evaluate at complex scalars.
    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut term = c.to_complex();
            for (i, &k) in e.iter().enumerate() {
                term *= point[i].powi(k);
            }
            acc += term;
        }
        acc
    }

    /// Substitute polynomials for the variables (the target variable set is
    /// that of the substituted values).
    pub fn compose(&self, values: &[LaurentPoly]) -> Result<LaurentPoly> {
        assert_eq!(values.len(), self.vars.len());
        let tvars = values
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| Vars::new(&[]));
        let mut acc = LaurentPoly::zero(&tvars);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(&tvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k < 0 {
                    return Err(Error::Domain(
                        "polynomial substitution into a negative power".into(),
                    ));
                }
                term = term.mul(&values[i].pow(k as u32));
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Normal form in ℂ[x,y,z,b,…]/(b, x², y², z²): drop every monomial with
    /// b-degree ≥ 1 or x-, y- or z-degree ≥ 2. Valid as a normal form because
    /// the ideal is generated by monomials in distinct variables.
    pub fn truncated_reduce(&self) -> Result<LaurentPoly> {
        let mut square_zero = Vec::new();
        let mut kill = None;
        for nm in ["x", "y", "z"] {
            square_zero.push(
                self.vars
                    .index_of(nm)
                    .ok_or_else(|| Error::Domain(format!("variable `{nm}` not present")))?,
            );
        }
        if let Some(i) = self.vars.index_of("b") {
            kill = Some(i);
        }
        let kill = kill.ok_or_else(|| Error::Domain("variable `b` not present".into()))?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e.iter().any(|&k| k < 0) {
                return Err(Error::Domain(
                    "truncated_reduce requires a plain polynomial".into(),
                ));
            }
            if e[kill] >= 1 || square_zero.iter().any(|&i| e[i] >= 2) {
                continue;
            }
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Exact division: returns `Some(q)` with `self = q * rhs` when the
    /// quotient exists in the Laurent ring, `None` otherwise.
    pub fn try_div_exact(&self, rhs: &Self) -> Option<LaurentPoly> {
        self.check_vars(rhs);
        let (le, lc) = rhs.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        let lc_inv = lc.inv()?;
        while let Some((re, rc)) = rem.leading() {
            let e: Expo = re.iter().zip(le).map(|(a, b)| a - b).collect();
            // a negative exponent on a non-unit variable means not divisible
            for (i, &k) in e.iter().enumerate() {
                if k < 0 && !self.vars.is_unit(i) {
                    return None;
                }
            }
            let c = rc * &lc_inv;
            let mut mono = Self::zero(&self.vars);
            mono.terms.insert(e, c);
            rem = rem.sub(&mono.mul(rhs));
            quot = quot.add(&mono);
            if quot.terms.len() > 4 * (self.terms.len() + 1) {
                return None; // diverging division
            }
        }
        Some(quot)
    }

    /// Divide by the leading coefficient, making the polynomial monic in the
    /// canonical term order. Used to normalize Riley polynomials up to a
    /// unit.
    pub fn monic(&self) -> LaurentPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Parse the canonical text form, e.g. `u + m^2 - 1 + m^-2`.
    pub fn parse(vars: &Arc<Vars>, input: &str) -> Result<LaurentPoly> {
        let mut p = Parser {
            vars,
            s: input,
            pos: 0,
        };
        p.poly()
    }
}

fn pow_exact(base: &GaussRat, k: i32) -> Result<GaussRat> {
    if k == 0 {
        return Ok(GaussRat::one());
    }
    let b = if k < 0 {
        base.inv()
            .ok_or_else(|| Error::Domain("zero raised to a negative power".into()))?
    } else {
        base.clone()
    };
    let mut acc = GaussRat::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc * b.clone();
    }
    Ok(acc)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars.name(i).to_string()
                    } else {
                        format!("{}^{}", self.vars.name(i), k)
                    }
                })
                .collect();
            let mono = mono.join("*");
            // sign handling: pure-real and pure-imaginary coefficients carry
            // their sign out front; mixed ones are parenthesized.
            let (neg, mag) = if c.is_real() && c.re < num::BigRational::from_integer(0.into()) {
                (true, (-c).to_string())
            } else if !c.is_real() && c.re == num::BigRational::from_integer(0.into()) {
                let mc = -c;
                if mc.to_string().len() < c.to_string().len() {
                    (true, mc.to_string())
                } else {
                    (false, c.to_string())
                }
            } else {
                (false, c.to_string())
            };
            let sep = match (first, neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            first = false;
            if mono.is_empty() {
                write!(f, "{sep}{mag}")?;
            } else if mag == "1" {
                write!(f, "{sep}{mono}")?;
            } else {
                write!(f, "{sep}{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Parser<'a> {
    vars: &'a Arc<Vars>,
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        let t = r.trim_start();
        self.pos += r.len() - t.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.vars);
        let mut sign = 1i64;
        if self.eat('-') {
            sign = -1;
        } else {
            let _ = self.eat('+');
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&if sign < 0 { t.neg() } else { t });
            self.skip_ws();
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        self.skip_ws();
        if !self.rest().is_empty() {
            return Err(Error::Parse(format!(
                "trailing input `{}` in polynomial",
                self.rest()
            )));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::one(self.vars);
        let mut any = false;
        loop {
            self.skip_ws();
            let r = self.rest();
            if r.is_empty() {
                break;
            }
            let c = r.chars().next().unwrap();
            if c == '(' {
                // parenthesized complex coefficient
                let close = r
                    .find(')')
                    .ok_or_else(|| Error::Parse("unbalanced parenthesis".into()))?;
                let coeff: GaussRat = r[..=close].parse()?;
                self.pos += close + 1;
                acc = acc.scale(&coeff);
                any = true;
            } else if c.is_ascii_digit() {
                let end = r
                    .find(|ch: char| !(ch.is_ascii_digit() || ch == '/'))
                    .unwrap_or(r.len());
                let coeff: GaussRat = r[..end].parse()?;
                self.pos += end;
                acc = acc.scale(&coeff);
                any = true;
            } else if c.is_ascii_alphabetic() {
                let end = r
                    .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                    .unwrap_or(r.len());
                let name = &r[..end];
                self.pos += end;
                if name == "i" && self.vars.index_of("i").is_none() {
                    acc = acc.scale(&GaussRat::i());
                } else {
                    let exp = if self.eat('^') {
                        self.skip_ws();
                        let r2 = self.rest();
                        let neg = r2.starts_with('-');
                        let body = if neg { &r2[1..] } else { r2 };
                        let end2 = body
                            .find(|ch: char| !ch.is_ascii_digit())
                            .unwrap_or(body.len());
                        let v: i32 = body[..end2]
                            .parse()
                            .map_err(|_| Error::Parse("bad exponent".into()))?;
                        self.pos += end2 + usize::from(neg);
                        if neg {
                            -v
                        } else {
                            v
                        }
                    } else {
                        1
                    };
                    acc = acc.mul(&LaurentPoly::monomial(self.vars, name, exp)?);
                }
                any = true;
            } else {
                break;
            }
            // optional explicit product
            let _ = self.eat('*');
        }
        if !any {
            return Err(Error::Parse("empty term".into()));
        }
        Ok(acc)
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.vars)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn riley_vars() -> Arc<Vars> {
        Vars::with_units(&["u", "m"], &["m"])
    }

    #[test]
    fn canonical_display() {
        let vars = riley_vars();
        let u = LaurentPoly::var(&vars, "u").unwrap();
        let m2 = LaurentPoly::monomial(&vars, "m", 2).unwrap();
        let mm2 = LaurentPoly::monomial(&vars, "m", -2).unwrap();
        let one = LaurentPoly::one(&vars);
        let p = u.add(&m2).sub(&one).add(&mm2);
        assert_eq!(p.to_string(), "u + m^2 - 1 + m^-2");
        let q = LaurentPoly::parse(&vars, "u + m^2 - 1 + m^-2").unwrap();
        assert_eq!(p, q);
        assert_eq!(q.to_string(), "u + m^2 - 1 + m^-2");
    }

    #[test]
    fn negative_exponent_guard() {
        let vars = riley_vars();
        assert!(LaurentPoly::monomial(&vars, "u", -1).is_err());
        assert!(LaurentPoly::monomial(&vars, "m", -3).is_ok());
    }

    #[test]
    fn truncated_reduce_examples() {
        let vars = Vars::new(&["x", "y", "z", "b", "c"]);
        let [x, y, z, b, c] = ["x", "y", "z", "b", "c"]
            .map(|n| LaurentPoly::var(&vars, n).unwrap());
        // b*x + c -> c
        let p = b.mul(&x).add(&c);
        assert_eq!(p.truncated_reduce().unwrap(), c);
        // x^2 y + x y -> x y
        let p = x.pow(2).mul(&y).add(&x.mul(&y));
        assert_eq!(p.truncated_reduce().unwrap(), x.mul(&y));
        // P -> xyz - c
        let p = crate::trace::fricke_poly(&vars).unwrap();
        let expect = x.mul(&y).mul(&z).sub(&c);
        assert_eq!(p.truncated_reduce().unwrap(), expect);
    }

    #[test]
    fn truncated_reduce_idempotent_linear() {
        let vars = Vars::new(&["x", "y", "z", "b", "c"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let p = random_poly(&vars, &mut rng);
            let q = random_poly(&vars, &mut rng);
            let rp = p.truncated_reduce().unwrap();
            assert_eq!(rp.truncated_reduce().unwrap(), rp);
            let sum = p.add(&q).truncated_reduce().unwrap();
            assert_eq!(sum, rp.add(&q.truncated_reduce().unwrap()));
        }
    }

    fn random_poly(vars: &Arc<Vars>, rng: &mut impl Rng) -> LaurentPoly {
        let mut p = LaurentPoly::zero(vars);
        for _ in 0..rng.gen_range(1..6) {
            let e: Vec<i32> = (0..vars.len()).map(|_| rng.gen_range(0..3)).collect();
            let c = GaussRat::from_int(rng.gen_range(-4..5));
            let mut mono = LaurentPoly::constant(vars, c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    mono = mono.mul(
                        &LaurentPoly::monomial(vars, vars.name(i), k).unwrap(),
                    );
                }
            }
            p = p.add(&mono);
        }
        p
    }

    #[test]
    fn ring_axioms_randomized() {
        // associativity and distributivity on random triples, by structural
        // equality of normal forms
        let vars = Vars::with_units(&["m", "u", "x"], &["m"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let rand_p = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut p = LaurentPoly::zero(&vars);
            for _ in 0..rng.gen_range(1..5) {
                let e = vec![
                    rng.gen_range(-2..3),
                    rng.gen_range(0..3),
                    rng.gen_range(0..2),
                ];
                let c = GaussRat::from_int(rng.gen_range(-3..4));
                if !c.is_zero() {
                    let mut mono = LaurentPoly::constant(&vars, c);
                    let names = ["m", "u", "x"];
                    for (i, &k) in e.iter().enumerate() {
                        if k != 0 {
                            mono = mono
                                .mul(&LaurentPoly::monomial(&vars, names[i], k).unwrap());
                        }
                    }
                    p = p.add(&mono);
                }
            }
            p
        };
        for _ in 0..10_000 {
            let (a, b, c) = (rand_p(&mut rng), rand_p(&mut rng), rand_p(&mut rng));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
        }
    }

    #[test]
    fn substitution_commutes_with_ops() {
        let vars = Vars::with_units(&["m", "u"], &["m"]);
        let m = LaurentPoly::monomial(&vars, "m", -1).unwrap();
        let u = LaurentPoly::var(&vars, "u").unwrap();
        let p = m.add(&u);
        let q = u.mul(&m).sub(&LaurentPoly::one(&vars));
        let pt = [GaussRat::from_ratio(2, 3), GaussRat::i()];
        let lhs = p.mul(&q).eval_exact(&pt).unwrap();
        let rhs = p.eval_exact(&pt).unwrap() * q.eval_exact(&pt).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division() {
        let vars = riley_vars();
        let r = LaurentPoly::parse(&vars, "u + m^2 - 1 + m^-2").unwrap();
        let u = LaurentPoly::var(&vars, "u").unwrap();
        let prod = r.mul(&u.neg());
        let q = prod.try_div_exact(&r).unwrap();
        assert_eq!(q, u.neg());
        assert!(u.try_div_exact(&r).is_none());
    }
}
