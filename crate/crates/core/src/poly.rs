//! Homogeneous polynomials with exact rational coefficients.
//!
//! Text format: terms like `3/2*x0^2*x1` joined by `+`/`-`. Whitespace is
//! ignored, `*` between factors is optional, and exponent or coefficient 1
//! may be omitted. Variable names come from the ring (`x0`, `x1`, …, and
//! `y1`, `y2`, … after a Cayley construction).

use crate::error::{Error, Result};
use crate::grading::DivisorClass;
use crate::rational;
use crate::ring::{CoxRing, GradedPieceBasis, Monomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A polynomial whose every term has the same class degree.
#[derive(Clone)]
pub struct GradedPolynomial {
    ring: Arc<CoxRing>,
    degree: DivisorClass,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for GradedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.degree == other.degree && self.terms == other.terms
    }
}

impl Eq for GradedPolynomial {}

impl fmt::Debug for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedPolynomial({} ; deg {})", self, self.degree)
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = self.ring.format_monomial(m);
            if mono == "1" {
                write!(f, "{}", rational::to_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rational::to_string(&abs))?;
            }
        }
        Ok(())
    }
}

impl GradedPolynomial {
    /// Nonzero polynomial; its degree is read off the terms.
    pub fn new(ring: &Arc<CoxRing>, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Result<Self> {
        let terms = collect_terms(ring, terms)?;
        let first = terms.keys().next().ok_or(Error::ZeroPolynomial)?;
        let degree = ring.degree_of(first)?;
        Self::checked(ring, degree, terms)
    }

    /// Polynomial of a prescribed degree; may be zero.
    pub fn with_degree(
        ring: &Arc<CoxRing>,
        degree: DivisorClass,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Result<Self> {
        let terms = collect_terms(ring, terms)?;
        let degree = ring.class_group().normalize(degree)?;
        Self::checked(ring, degree, terms)
    }

    fn checked(ring: &Arc<CoxRing>, degree: DivisorClass, terms: BTreeMap<Monomial, BigRational>) -> Result<Self> {
        for m in terms.keys() {
            let d = ring.degree_of(m)?;
            if d != degree {
                return Err(Error::NotHomogeneous(format!(
                    "term {} has degree {d}, expected {degree}",
                    ring.format_monomial(m)
                )));
            }
        }
        Ok(GradedPolynomial { ring: ring.clone(), degree, terms })
    }

    pub fn zero(ring: &Arc<CoxRing>, degree: DivisorClass) -> Self {
        GradedPolynomial { ring: ring.clone(), degree, terms: BTreeMap::new() }
    }

    pub fn monomial(ring: &Arc<CoxRing>, m: Monomial, c: BigRational) -> Result<Self> {
        Self::new(ring, [(m, c)])
    }

    pub fn parse(ring: &Arc<CoxRing>, text: &str) -> Result<Self> {
        let terms = parse_terms(ring, text)?;
        Self::new(ring, terms)
    }

    pub fn ring(&self) -> &Arc<CoxRing> {
        &self.ring
    }

    pub fn degree(&self) -> &DivisorClass {
        &self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-checks that every term has the stored degree.
    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().all(|m| self.ring.degree_of(m).map_or(false, |d| d == self.degree))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring, self.degree.clone());
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        GradedPolynomial { ring: self.ring.clone(), degree: self.degree.clone(), terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if self.degree != other.degree {
            return Err(Error::NotHomogeneous(format!("cannot add degrees {} and {}", self.degree, other.degree)));
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Ok(GradedPolynomial { ring: self.ring.clone(), degree: self.degree.clone(), terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let degree = self.ring.class_group().add(&self.degree, &other.degree);
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = terms.entry(m1.mul(m2)).or_insert_with(BigRational::zero);
                *e += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GradedPolynomial { ring: self.ring.clone(), degree, terms })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let degree = self.ring.class_group().add(&self.degree, &self.ring.degree_of(m).expect("monomial length"));
        let terms = self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        GradedPolynomial { ring: self.ring.clone(), degree, terms }
    }

    /// `∂f/∂x_i`, of degree `deg f − deg x_i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        let cl = self.ring.class_group();
        let degree = cl.sub(&self.degree, self.ring.var_degree(i));
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut d = m.clone();
                d.0[i] -= 1;
                terms.insert(d, c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        GradedPolynomial { ring: self.ring.clone(), degree, terms }
    }

    /// `x_i ∂f/∂x_i`, same degree as `f`.
    pub fn euler_derivative(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| (m.clone(), c * BigRational::from_integer(BigInt::from(m.0[i]))))
            .collect();
        GradedPolynomial { ring: self.ring.clone(), degree: self.degree.clone(), terms }
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::LengthMismatch { expected: self.ring.num_vars(), got: point.len() });
        }
        Ok(self.terms.iter().map(|(m, c)| c * eval_monomial(m, point)).sum())
    }

    /// Coordinates on the monomial basis of the polynomial's degree.
    pub fn coordinates(&self, basis: &GradedPieceBasis) -> Vec<(usize, BigRational)> {
        let mut out: Vec<(usize, BigRational)> = self
            .terms
            .iter()
            .map(|(m, c)| (basis.index_of(m).expect("term in basis of its own degree"), c.clone()))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }
}

pub fn eval_monomial(m: &Monomial, point: &[BigRational]) -> BigRational {
    let mut acc = BigRational::one();
    for (&e, x) in m.0.iter().zip(point) {
        if e > 0 {
            if x.is_zero() {
                return BigRational::zero();
            }
            acc *= num_traits::pow(x.clone(), e as usize);
        }
    }
    acc
}

fn collect_terms(
    ring: &CoxRing,
    terms: impl IntoIterator<Item = (Monomial, BigRational)>,
) -> Result<BTreeMap<Monomial, BigRational>> {
    let mut out: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    for (m, c) in terms {
        if m.len() != ring.num_vars() {
            return Err(Error::LengthMismatch { expected: ring.num_vars(), got: m.len() });
        }
        *out.entry(m).or_insert_with(BigRational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Parses the text format into raw terms (no homogeneity check).
pub fn parse_terms(ring: &CoxRing, text: &str) -> Result<Vec<(Monomial, BigRational)>> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { ring, chars, pos: 0 };
    p.polynomial()
}

struct Parser<'a> {
    ring: &'a CoxRing,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or_else(|| self.chars.last().map_or(0, |&(i, _)| i + 1), |&(i, _)| i)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn polynomial(&mut self) -> Result<Vec<(Monomial, BigRational)>> {
        let mut terms = Vec::new();
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut sign = BigRational::one();
        match self.peek() {
            Some('-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.peek() {
                None => break,
                Some('+') => sign = BigRational::one(),
                Some('-') => sign = -BigRational::one(),
                Some(c) => return self.err(format!("unexpected '{c}'")),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut exps = vec![0u32; self.ring.num_vars()];
        let mut coeff = BigRational::one();
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.number()?;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let (var, e) = self.power()?;
                    exps[var] = exps[var].checked_add(e).ok_or(Error::Overflow("exponent"))?;
                }
                _ => {
                    if factors == 0 {
                        return self.err("expected a coefficient or variable");
                    }
                    return Ok((Monomial(exps), coeff));
                }
            }
            factors += 1;
            if self.peek() == Some('*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                    return self.err("expected a factor after '*'");
                }
            }
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn number(&mut self) -> Result<BigRational> {
        let numer: BigInt = self.digits().parse().expect("nonempty digit run");
        if self.peek() == Some('/') {
            self.pos += 1;
            let d = self.digits();
            if d.is_empty() {
                return self.err("expected a denominator");
            }
            let denom: BigInt = d.parse().expect("digit run");
            if denom.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(numer, denom));
        }
        Ok(BigRational::from_integer(numer))
    }

    fn power(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        let mut name = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_alphabetic) {
            name.push(c);
            self.pos += 1;
        }
        name.push_str(&self.digits());
        let Some(var) = self.ring.var_index(&name) else {
            self.pos = start;
            return self.err(format!("unknown variable '{name}'"));
        };
        let mut e = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let d = self.digits();
            if d.is_empty() {
                return self.err("expected an exponent");
            }
            e = d.parse().map_err(|_| Error::Overflow("exponent"))?;
        }
        Ok((var, e))
    }
}
