//! Sparse multivariate polynomials with exact rational coefficients.

mod order;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use order::TermOrder;
pub use parse::{infer_variables, parse_poly};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An ordered list of variable names shared by every polynomial of the ring.
#[derive(Clone)]
pub struct Ring(Arc<[String]>);

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) || out.iter().any(|o| o == n) {
                return Err(Error::InvalidVariableName(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Ring(out.into()))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// The variable `name` as a polynomial.
    pub fn var(&self, name: &str) -> Result<MultiPoly> {
        let i = self.index_of(name).ok_or_else(|| Error::UnknownVariable {
            position: 0,
            name: name.to_string(),
        })?;
        Ok(MultiPoly::variable(self, i))
    }

    /// A fresh ring extending this one by `extra` (names must not collide).
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring> {
        let mut names: Vec<String> = self.0.to_vec();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Ring::new(&names)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector; its length is the number of ring variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Monomial {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If the monomial is a pure power `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Formats the monomial with the given variable names, `1` for the unit.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, names: ring.names() }
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, name) in self.m.0.iter().zip(self.names) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in a fixed [`Ring`]. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(ring: &Ring) -> MultiPoly {
        MultiPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> MultiPoly {
        let mut p = MultiPoly::zero(ring);
        p.add_term(Monomial::one(ring.nvars()), c);
        p
    }

    pub fn one(ring: &Ring) -> MultiPoly {
        MultiPoly::constant(ring, Rational::one())
    }

    pub fn variable(ring: &Ring, i: usize) -> MultiPoly {
        MultiPoly::monomial(ring, Monomial::var(ring.nvars(), i, 1), Rational::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> MultiPoly {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
        let mut p = MultiPoly::zero(ring);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(ring: &Ring, terms: I) -> MultiPoly {
        let mut p = MultiPoly::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Smallest total degree of a term (the order at the origin).
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut out = MultiPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t * m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Power truncated to terms of total degree `<= max_degree`.
    pub fn pow_truncated(&self, e: u32, max_degree: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.ring);
        for _ in 0..e {
            result = result.mul_truncated(self, max_degree);
        }
        result
    }

    pub fn mul_truncated(&self, other: &MultiPoly, max_degree: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > max_degree {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree() <= max_degree {
                    out.add_term(ma * mb, ca * cb);
                }
            }
        }
        out
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (e, x) in m.exponents().iter().zip(point) {
                if *e > 0 {
                    v *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    pub fn evaluate_at_origin(&self) -> Rational {
        self.constant_term()
    }

    /// Formal partial derivative with respect to the variable at `var`.
    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn partial_derivative(&self, var: &str) -> Result<MultiPoly> {
        let i = self.ring.index_of(var).ok_or_else(|| Error::UnknownVariable {
            position: 0,
            name: var.to_string(),
        })?;
        Ok(self.derivative(i))
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Simultaneous substitution `var_i -> images[i]`; the images may live in a
    /// different ring, which becomes the ring of the result.
    pub fn compose(&self, images: &[MultiPoly], target: &Ring) -> Result<MultiPoly> {
        self.compose_truncated(images, target, None)
    }

    pub(crate) fn compose_truncated(
        &self,
        images: &[MultiPoly],
        target: &Ring,
        max_degree: Option<u32>,
    ) -> Result<MultiPoly> {
        if images.len() != self.ring.nvars() || images.iter().any(|p| p.ring != *target) {
            return Err(Error::RingMismatch);
        }
        // cache powers per variable
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(target), p.clone()]).collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = match max_degree {
                        Some(d) => powers[i].last().unwrap().mul_truncated(&images[i], d),
                        None => powers[i].last().unwrap() * &images[i],
                    };
                    powers[i].push(next);
                }
                term = match max_degree {
                    Some(d) => term.mul_truncated(&powers[i][e as usize], d),
                    None => &term * &powers[i][e as usize],
                };
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Substitutes the named variables; unnamed variables stay fixed.
    pub fn substitute(&self, assignments: &[(&str, MultiPoly)]) -> Result<MultiPoly> {
        let mut images: Vec<MultiPoly> = (0..self.ring.nvars()).map(|i| MultiPoly::variable(&self.ring, i)).collect();
        for (name, image) in assignments {
            let i = self.ring.index_of(name).ok_or_else(|| Error::UnknownVariable {
                position: 0,
                name: name.to_string(),
            })?;
            if image.ring != self.ring {
                return Err(Error::RingMismatch);
            }
            images[i] = image.clone();
        }
        self.compose(&images, &self.ring)
    }

    /// Translation `x_i -> x_i + shift_i`, moving `shift` to the origin.
    pub fn translate(&self, shift: &[Rational]) -> MultiPoly {
        assert_eq!(shift.len(), self.ring.nvars());
        let images: Vec<MultiPoly> = shift
            .iter()
            .enumerate()
            .map(|(i, s)| &MultiPoly::variable(&self.ring, i) + &MultiPoly::constant(&self.ring, s.clone()))
            .collect();
        self.compose(&images, &self.ring).expect("same ring")
    }

    /// Re-expresses the polynomial in `target`, where variable `i` of this
    /// ring becomes variable `map[i]` of the target (`None`: must not occur).
    pub fn embed(&self, target: &Ring, map: &[Option<usize>]) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] += e,
                    None => return Err(Error::RingMismatch),
                }
            }
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Embeds by matching variable names.
    pub fn embed_by_name(&self, target: &Ring) -> Result<MultiPoly> {
        let map: Vec<Option<usize>> = self.ring.names().iter().map(|n| target.index_of(n)).collect();
        self.embed(target, &map)
    }

    /// Splits off the variables in `selected`: returns pairs
    /// `(monomial in the selected variables, coefficient polynomial in the rest)`,
    /// both expressed in this ring.
    pub fn coefficients_in(&self, selected: &[usize]) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = vec![0; self.ring.nvars()];
            let mut rest = m.exponents().to_vec();
            for &i in selected {
                key[i] = rest[i];
                rest[i] = 0;
            }
            out.entry(Monomial(key))
                .or_insert_with(|| MultiPoly::zero(&self.ring))
                .add_term(Monomial(rest), c.clone());
        }
        out
    }

    /// Indices of variables that occur in some term.
    pub fn support_variables(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.exponents()[i] > 0))
            .collect()
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &TermOrder) -> MultiPoly {
        match self.leading_term(order) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// Prints terms in decreasing `DegRevLex` order using the input grammar, so
/// the output parses back to the same polynomial.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| TermOrder::DegRevLex.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.ring))?;
            } else {
                write!(f, "{abs}*{}", m.display(&self.ring))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics when the operands live in different rings; use the
            /// `checked_*` form to get an error instead.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("ring mismatch in polynomial arithmetic")
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::string::ToString;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names).unwrap()
    }

    #[test]
    fn substitute_binomial() {
        let r = ring(&["z"]);
        let f = parse_poly("z^2", &r).unwrap();
        let z1 = parse_poly("z + 1", &r).unwrap();
        let g = f.substitute(&[("z", z1)]).unwrap();
        assert_eq!(g, parse_poly("z^2 + 2z + 1", &r).unwrap());
    }

    #[test]
    fn substitute_zero_gives_constant_term() {
        let r = ring(&["x", "y"]);
        let f = parse_poly("3 + x*y - 2y^3 + 1/2", &r).unwrap();
        let zero = MultiPoly::zero(&r);
        let g = f.substitute(&[("x", zero.clone()), ("y", zero)]).unwrap();
        assert_eq!(g, MultiPoly::constant(&r, rat(7, 2)));
    }

    #[test]
    fn a2_translation_shows_jacobian_coefficients() {
        // F = x^2+y^2+z^3+t^2 with z -> z + 2: constant 8, z-coefficient 3*2^2
        let r = ring(&["x", "y", "z", "t"]);
        let f = parse_poly("x^2+y^2+z^3+t^2", &r).unwrap();
        let g = f.substitute(&[("z", parse_poly("z+2", &r).unwrap())]).unwrap();
        assert_eq!(g.constant_term(), int(8));
        assert_eq!(g.coefficient(&Monomial::var(4, 2, 1)), int(12));
        assert_eq!(g.coefficient(&Monomial::var(4, 2, 2)), int(6));
    }

    #[test]
    fn substitute_rejects_foreign_ring() {
        let r = ring(&["x"]);
        let s = ring(&["y"]);
        let f = parse_poly("x", &r).unwrap();
        let img = parse_poly("y", &s).unwrap();
        assert_eq!(f.substitute(&[("x", img)]), Err(Error::RingMismatch));
        assert!(matches!(f.substitute(&[("q", MultiPoly::zero(&r))]), Err(Error::UnknownVariable { .. })));
    }

    #[test]
    fn partial_derivatives() {
        let r = ring(&["x", "y", "z", "t"]);
        let f = parse_poly("x^2+y^3+z^4+t^2", &r).unwrap();
        assert_eq!(f.partial_derivative("y").unwrap(), parse_poly("3y^2", &r).unwrap());
        let c = MultiPoly::constant(&r, int(5));
        assert!(c.partial_derivative("x").unwrap().is_zero());
        let d5 = parse_poly("y^2*z + z^4", &r).unwrap();
        assert_eq!(d5.partial_derivative("z").unwrap(), parse_poly("y^2 + 4z^3", &r).unwrap());
        assert!(matches!(f.partial_derivative("w"), Err(Error::UnknownVariable { .. })));
    }

    #[test]
    fn leading_terms_under_each_order() {
        let r = ring(&["x", "y"]);
        let f = parse_poly("x^2 + y^3", &r).unwrap();
        let y3 = Monomial::new(vec![0, 3]);
        let x2 = Monomial::new(vec![2, 0]);
        assert_eq!(f.leading_term(&TermOrder::DegRevLex).unwrap().0, y3);
        assert_eq!(f.leading_term(&TermOrder::Lex).unwrap().0, x2);
        assert_eq!(f.leading_term(&TermOrder::LocalDegRevLex).unwrap().0, x2);
        assert_eq!(MultiPoly::zero(&r).leading_term(&TermOrder::Lex), Err(Error::ZeroPolynomial));
    }

    /// Local order oracle: a monomial of lower degree beats every monomial
    /// of higher degree, checked pairwise on all monomials up to degree 6.
    #[test]
    fn local_order_against_pairwise_oracle() {
        let mut monos = Vec::new();
        for a in 0..=6u32 {
            for b in 0..=(6 - a) {
                monos.push(Monomial::new(vec![a, b]));
            }
        }
        let ord = TermOrder::LocalDegRevLex;
        for m in &monos {
            for n in &monos {
                let c = ord.cmp(m, n);
                if m.degree() < n.degree() {
                    assert_eq!(c, core::cmp::Ordering::Greater);
                } else if m == n {
                    assert_eq!(c, core::cmp::Ordering::Equal);
                } else {
                    assert_ne!(c, core::cmp::Ordering::Equal);
                }
            }
        }
        let best = monos.iter().max_by(|a, b| ord.cmp(a, b)).unwrap();
        assert!(best.is_one());
    }

    #[test]
    fn display_round_trips() {
        let r = ring(&["x", "y", "z"]);
        let f = parse_poly("-3/2*x^2*y + z - 7 + x*y*z^3", &r).unwrap();
        let printed = f.to_string();
        assert_eq!(parse_poly(&printed, &r).unwrap(), f);
        assert_eq!(MultiPoly::zero(&r).to_string(), "0");
    }

    #[test]
    fn ring_rejects_bad_names() {
        assert!(Ring::new(&["x", "x"]).is_err());
        assert!(Ring::new(&["1x"]).is_err());
        assert!(Ring::new(&["y_2", "lambda3"]).is_ok());
    }
}
