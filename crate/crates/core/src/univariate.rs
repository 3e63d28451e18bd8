//! Dense univariate polynomials over the rationals and exact real-root tools.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{MultiPoly, Rational};

/// Coefficients from the constant term upwards; never has a trailing zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> UPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    /// Reads a polynomial involving only the variable `var`.
    pub fn from_multipoly(p: &MultiPoly, var: usize) -> Option<UPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return None;
            }
            let d = e[var] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(lc) => {
                let inv = lc.recip();
                UPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
            None => self.clone(),
        }
    }

    pub fn neg(&self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn square_free(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        self.square_free().degree().unwrap_or(0)
    }

    /// Integer polynomial with the same roots and coprime coefficients.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    fn sturm_sequence(&self) -> Vec<UPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        seq
    }

    /// Distinct real roots, in increasing order, that are rational.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let p = self.square_free();
        let Some(deg) = p.degree() else { return Vec::new() };
        if deg == 0 {
            return Vec::new();
        }
        let ints = p.primitive_integer();
        let lc = ints.last().unwrap().abs();
        let eps = Rational::new(BigInt::one(), BigInt::from(2) * &lc * &lc);
        // Cauchy bound
        let lcq = p.leading().unwrap().abs();
        let bound = p.coeffs.iter().map(|c| c.abs() / &lcq).fold(Rational::zero(), |a, b| if b > a { b } else { a })
            + Rational::one();
        let sturm = p.sturm_sequence();
        let variations = |x: &Rational| -> usize {
            let mut last: Option<bool> = None;
            let mut count = 0;
            for q in &sturm {
                let v = q.eval(x);
                if v.is_zero() {
                    continue;
                }
                let pos = v.is_positive();
                if let Some(l) = last {
                    if l != pos {
                        count += 1;
                    }
                }
                last = Some(pos);
            }
            count
        };
        let mut found = Vec::new();
        // roots in (a, b]
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            let n = variations(&a) - variations(&b);
            if n == 0 {
                continue;
            }
            if n == 1 && &b - &a < eps {
                if p.eval(&b).is_zero() {
                    found.push(b);
                } else {
                    let s = simplest_between(&a, &b);
                    if p.eval(&s).is_zero() {
                        found.push(s);
                    }
                }
                continue;
            }
            let mid = (&a + &b) / Rational::from_integer(BigInt::from(2));
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        found.sort();
        found.dedup();
        found
    }
}

/// The rational of least denominator (then least absolute numerator) in `[a, b]`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    let (a, b) = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if !a.is_positive() && !b.is_negative() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_positive(&-b, &-a);
    }
    simplest_positive(&a, &b)
}

fn simplest_positive(a: &Rational, b: &Rational) -> Rational {
    let n = a.floor();
    if &n == a {
        return n;
    }
    let n1 = &n + Rational::one();
    if &n1 <= b {
        return n1;
    }
    let inner = simplest_positive(&(b - &n).recip(), &(a - &n).recip());
    n + inner.recip()
}

/// Exact square root of a nonnegative rational, when it is rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = exact_root(q.numer(), 2)?;
    let d = exact_root(q.denom(), 2)?;
    Some(Rational::new(n, d))
}

/// Exact real cube root of a rational, when it is rational.
pub fn rational_cbrt(q: &Rational) -> Option<Rational> {
    let n = exact_root(q.numer(), 3)?;
    let d = exact_root(q.denom(), 3)?;
    Some(Rational::new(n, d))
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let negative = n.sign() == Sign::Minus;
    if negative && k.is_multiple_of(2) {
        return None;
    }
    let r = n.abs().nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == n.abs() {
        Some(if negative { -r } else { r })
    } else {
        None
    }
}
