//! Invariants and classification of an isolated hypersurface singularity at
//! the origin.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groebner::{
    buchberger, m_primary_dimension_at_origin, mora_standard_basis, Ideal, StandardMonomials,
};
use crate::linalg::{congruence_diagonalize, rank, solve_affine, Matrix};
use crate::poly::{Monomial, MultiPoly, Rational, Ring, TermOrder};
use crate::univariate::{simplest_between, UPoly};
use crate::{Error, Result};

/// Seed used by [`least_index_estimate`] when none is given.
pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_TRIALS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularityType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
    NonSimple { mu: usize, tau: usize, corank: usize },
    NotSingular,
    NonIsolated,
}

impl SingularityType {
    pub fn a(n: u32) -> Result<SingularityType> {
        if n >= 1 {
            Ok(SingularityType::A(n))
        } else {
            Err(Error::InvalidIndex(format!("A_{n} needs n >= 1")))
        }
    }

    pub fn d(n: u32) -> Result<SingularityType> {
        if n >= 4 {
            Ok(SingularityType::D(n))
        } else {
            Err(Error::InvalidIndex(format!("D_{n} needs n >= 4")))
        }
    }

    /// The subscript of an ADE type, which is also its Milnor number.
    pub fn ade_index(&self) -> Option<u32> {
        match *self {
            SingularityType::A(n) | SingularityType::D(n) => Some(n),
            SingularityType::E6 => Some(6),
            SingularityType::E7 => Some(7),
            SingularityType::E8 => Some(8),
            _ => None,
        }
    }

    pub fn is_ade(&self) -> bool {
        self.ade_index().is_some()
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::A(n) => write!(f, "A{n}"),
            SingularityType::D(n) => write!(f, "D{n}"),
            SingularityType::E6 => f.write_str("E6"),
            SingularityType::E7 => f.write_str("E7"),
            SingularityType::E8 => f.write_str("E8"),
            SingularityType::NonSimple { mu, tau, corank } => {
                write!(f, "NonSimple(mu={mu},tau={tau},corank={corank})")
            }
            SingularityType::NotSingular => f.write_str("NotSingular"),
            SingularityType::NonIsolated => f.write_str("NonIsolated"),
        }
    }
}

/// Parses the ADE names printed by `Display` (`A5`, `D4`, `E6`, ...).
impl FromStr for SingularityType {
    type Err = Error;
    fn from_str(s: &str) -> Result<SingularityType> {
        let bad = || Error::InvalidIndex(format!("unrecognised type `{s}`"));
        match s {
            "E6" => return Ok(SingularityType::E6),
            "E7" => return Ok(SingularityType::E7),
            "E8" => return Ok(SingularityType::E8),
            "NotSingular" => return Ok(SingularityType::NotSingular),
            "NonIsolated" => return Ok(SingularityType::NonIsolated),
            _ => {}
        }
        let (head, tail) = s.split_at(s.len().min(1));
        let n: u32 = tail.parse().map_err(|_| bad())?;
        match head {
            "A" => SingularityType::a(n),
            "D" => SingularityType::d(n),
            _ => Err(bad()),
        }
    }
}

/// Positive rational weights making a polynomial weighted homogeneous of degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub Vec<Rational>);

impl WeightVector {
    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn weighted_degree(&self, m: &Monomial) -> Rational {
        m.exponents()
            .iter()
            .zip(&self.0)
            .map(|(e, w)| w * Rational::from_integer(BigInt::from(*e)))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermReport {
    pub mu_local: usize,
    /// Sum of the Milnor numbers over all critical points, when finite.
    pub mu_global: Option<usize>,
    pub tau: usize,
    pub hessian_corank: usize,
    /// Weights in the given coordinates, if the germ is weighted homogeneous.
    pub weights: Option<WeightVector>,
    pub kind: SingularityType,
    pub t1_basis: Vec<Monomial>,
}

pub fn jacobian_ideal(f: &MultiPoly) -> Ideal {
    let ring = f.ring();
    let partials = (0..ring.nvars()).map(|i| f.derivative(i)).collect();
    Ideal::new(ring, partials).expect("partials share the ring")
}

fn is_singular_at_origin(f: &MultiPoly) -> bool {
    f.constant_term().is_zero() && f.terms().all(|(m, _)| m.degree() != 1)
}

fn ensure_singular(f: &MultiPoly) -> Result<()> {
    if is_singular_at_origin(f) {
        Ok(())
    } else {
        Err(Error::NotSingular)
    }
}

/// `(μ_local, μ_global)`; the global number is `None` when the critical
/// locus is not finite.
pub fn milnor_number(f: &MultiPoly) -> Result<(usize, Option<usize>)> {
    ensure_singular(f)?;
    let j = jacobian_ideal(f);
    let local = m_primary_dimension_at_origin(&j)?;
    let global = buchberger(&j, &TermOrder::DegRevLex)?.quotient_dimension().finite();
    Ok((local, global))
}

/// Local Milnor number only, skipping the global count.
pub fn local_milnor_number(f: &MultiPoly) -> Result<usize> {
    ensure_singular(f)?;
    m_primary_dimension_at_origin(&jacobian_ideal(f))
}

/// Tyurina number and the standard monomials of the local Tyurina algebra.
pub fn tyurina_number(f: &MultiPoly) -> Result<(usize, Vec<Monomial>)> {
    ensure_singular(f)?;
    let i = jacobian_ideal(f).with(f.clone())?;
    let sb = mora_standard_basis(&i, &TermOrder::LocalDegRevLex)?;
    match sb.staircase().standard {
        StandardMonomials::Finite(basis) => Ok((basis.len(), basis)),
        StandardMonomials::Infinite => Err(Error::NonIsolated),
    }
}

struct Inequality {
    coeffs: Vec<Rational>,
    constant: Rational,
    strict: bool,
}

/// Finds `t` with every `coeffs·t + constant` positive (strict) or
/// nonnegative, by Fourier–Motzkin elimination.
fn fourier_motzkin(dim: usize, system: Vec<Inequality>) -> Option<Vec<Rational>> {
    let mut levels: Vec<Vec<Inequality>> = vec![system];
    for v in (0..dim).rev() {
        let current = levels.last().unwrap();
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for ineq in current {
            if ineq.coeffs[v].is_positive() {
                pos.push(ineq);
            } else if ineq.coeffs[v].is_negative() {
                neg.push(ineq);
            } else {
                next.push(Inequality { coeffs: ineq.coeffs.clone(), constant: ineq.constant.clone(), strict: ineq.strict });
            }
        }
        for p in &pos {
            for q in &neg {
                let (sp, sq) = (p.coeffs[v].recip(), -q.coeffs[v].recip());
                let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| a * &sp + b * &sq).collect();
                next.push(Inequality {
                    coeffs,
                    constant: &p.constant * &sp + &q.constant * &sq,
                    strict: p.strict || q.strict,
                });
            }
        }
        levels.push(next);
    }
    let feasible = levels.last().unwrap().iter().all(|i| {
        if i.strict {
            i.constant.is_positive()
        } else {
            !i.constant.is_negative()
        }
    });
    if !feasible {
        return None;
    }
    let mut t = vec![Rational::zero(); dim];
    for v in 0..dim {
        let set = &levels[dim - 1 - v];
        let mut lower: Option<(Rational, bool)> = None;
        let mut upper: Option<(Rational, bool)> = None;
        for ineq in set {
            let a = &ineq.coeffs[v];
            if a.is_zero() {
                continue;
            }
            let rest: Rational = ineq.constant.clone()
                + (0..v).map(|j| &ineq.coeffs[j] * &t[j]).sum::<Rational>();
            let bound = -rest / a;
            if a.is_positive() {
                if lower.as_ref().is_none_or(|(l, s)| bound > *l || (bound == *l && ineq.strict && !s)) {
                    lower = Some((bound, ineq.strict));
                }
            } else if upper.as_ref().is_none_or(|(u, s)| bound < *u || (bound == *u && ineq.strict && !s)) {
                upper = Some((bound, ineq.strict));
            }
        }
        t[v] = match (lower, upper) {
            (Some((l, _)), Some((u, _))) if l == u => l,
            (Some((l, ls)), Some((u, us))) => {
                let s = simplest_between(&l, &u);
                if (s == l && ls) || (s == u && us) {
                    (l + u) / Rational::from_integer(BigInt::from(2))
                } else {
                    s
                }
            }
            (Some((l, _)), None) => l.floor() + Rational::one(),
            (None, Some((u, _))) => u.ceil() - Rational::one(),
            (None, None) => Rational::zero(),
        };
    }
    Some(t)
}

/// Positive weights with `Σ a_i w_i = 1` for every exponent `a` of `f`, in the
/// given coordinates. A determined system yields its unique solution; an
/// underdetermined one yields a solution with weights at most 1/2 if any.
pub fn detect_weighted_homogeneous(f: &MultiPoly) -> Option<WeightVector> {
    let n = f.ring().nvars();
    if f.is_zero() {
        return None;
    }
    let rows: Matrix = f
        .terms()
        .map(|(m, _)| m.exponents().iter().map(|&e| Rational::from_integer(BigInt::from(e))).collect())
        .collect();
    let ones = vec![Rational::one(); rows.len()];
    let sol = solve_affine(&rows, &ones, n)?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let build = |cap: bool| {
        let mut system = Vec::new();
        for i in 0..n {
            let coeffs: Vec<Rational> = sol.nullspace.iter().map(|v| v[i].clone()).collect();
            system.push(Inequality { coeffs: coeffs.clone(), constant: sol.particular[i].clone(), strict: true });
            if cap {
                system.push(Inequality {
                    coeffs: coeffs.iter().map(|c| -c).collect(),
                    constant: &half - &sol.particular[i],
                    strict: false,
                });
            }
        }
        system
    };
    let dim = sol.nullspace.len();
    let t = fourier_motzkin(dim, build(true)).or_else(|| fourier_motzkin(dim, build(false)))?;
    Some(WeightVector(sol.point(&t)))
}

/// `∏ (1/w_i − 1)`, which must be a nonnegative integer.
pub fn milnor_orlik(w: &WeightVector) -> Result<usize> {
    let mut prod = Rational::one();
    for wi in &w.0 {
        if !wi.is_positive() || *wi > Rational::one() {
            return Err(Error::NonIntegralMilnorOrlik);
        }
        prod *= wi.recip() - Rational::one();
    }
    if !prod.is_integer() || prod.is_negative() {
        return Err(Error::NonIntegralMilnorOrlik);
    }
    usize::try_from(prod.to_integer()).map_err(|_| Error::NonIntegralMilnorOrlik)
}

/// Matrix of second partials at the origin.
pub fn hessian_at_origin(f: &MultiPoly) -> Matrix {
    let n = f.ring().nvars();
    let mut h = vec![vec![Rational::zero(); n]; n];
    for (m, c) in f.terms() {
        if m.degree() != 2 {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|&i| m.exponents()[i] > 0).collect();
        match idx.as_slice() {
            [i] => h[*i][*i] = c * Rational::from_integer(BigInt::from(2)),
            [i, j] => {
                h[*i][*j] = c.clone();
                h[*j][*i] = c.clone();
            }
            _ => unreachable!(),
        }
    }
    h
}

pub fn hessian_corank(f: &MultiPoly) -> Result<usize> {
    if f.terms().any(|(m, _)| m.degree() == 1) {
        return Err(Error::NotSingular);
    }
    Ok(f.ring().nvars() - rank(&hessian_at_origin(f)))
}

/// Result of the splitting lemma: `f ~ Σ d_i v_i² + residual(kernel vars)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub quadratic: Vec<Rational>,
    /// Germ in the kernel variables with no terms of degree below 3, up to `jet`.
    pub residual: MultiPoly,
    pub jet: u32,
}

fn unique_name(base: String, taken: &[String]) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('_');
    }
    name
}

/// Splitting lemma truncated at `jet`: diagonalises the quadratic part by a
/// linear change `x = T u` and eliminates the nondegenerate variables.
/// Kernel variables keep their original name when `T` does not mix them.
pub fn split_residual(f: &MultiPoly, jet: u32) -> Result<Splitting> {
    let corank = hessian_corank(f)?;
    if corank >= 3 {
        return Err(Error::UnsupportedCorank(corank));
    }
    let ring = f.ring();
    let n = ring.nvars();
    let f = &(f - &MultiPoly::constant(ring, f.constant_term())).truncate(jet);
    let (d, mut t) = congruence_diagonalize(&hessian_at_origin(f));
    let r = n - corank;
    // kernel columns in the order of their first nonzero entry
    let mut kernel_cols: Vec<usize> = (r..n).collect();
    kernel_cols.sort_by_key(|&j| (0..n).find(|&i| !t[i][j].is_zero()));
    for row in t.iter_mut() {
        let reordered: Vec<Rational> = kernel_cols.iter().map(|&j| row[j].clone()).collect();
        row.truncate(r);
        row.extend(reordered);
    }

    let mut names: Vec<String> = Vec::with_capacity(n);
    for j in 0..n {
        let unit = (0..n).filter(|&i| !t[i][j].is_zero()).collect::<Vec<_>>();
        let base = match unit.as_slice() {
            [i] if t[*i][j].is_one() && j >= r => ring.names()[*i].clone(),
            _ => format!("u{j}"),
        };
        let name = unique_name(base, &names);
        names.push(name);
    }
    let u_ring = Ring::new(&names)?;
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| {
            MultiPoly::from_terms(
                &u_ring,
                (0..n).map(|j| (Monomial::var(n, j, 1), t[i][j].clone())),
            )
        })
        .collect();
    let g = f.compose_truncated(&images, &u_ring, Some(jet))?;

    let kernel_names: Vec<String> = names[r..].to_vec();
    let k_ring = Ring::new(&kernel_names)?;
    let kernel_vars: Vec<MultiPoly> = (0..corank).map(|i| MultiPoly::variable(&k_ring, i)).collect();
    let two = Rational::from_integer(BigInt::from(2));
    // u_i = -(∂G/∂u_i - 2 d_i u_i) / (2 d_i), iterated to a fixed point
    let rests: Vec<MultiPoly> = (0..r)
        .map(|i| {
            let di = &g.derivative(i) - &MultiPoly::variable(&u_ring, i).scale(&(&two * &d[i]));
            di.scale(&-(&two * &d[i]).recip())
        })
        .collect();
    let mut phi: Vec<MultiPoly> = vec![MultiPoly::zero(&k_ring); r];
    for _ in 0..=jet {
        let mut subst = phi.clone();
        subst.extend(kernel_vars.iter().cloned());
        let next: Vec<MultiPoly> = rests
            .iter()
            .map(|p| p.compose_truncated(&subst, &k_ring, Some(jet)))
            .collect::<Result<_>>()?;
        if next == phi {
            break;
        }
        phi = next;
    }
    let mut subst = phi;
    subst.extend(kernel_vars);
    let residual = g.compose_truncated(&subst, &k_ring, Some(jet))?;
    Ok(Splitting { quadratic: d[..r].to_vec(), residual, jet })
}

/// Number of distinct linear factors of a binary form of degree `deg`
/// (over the algebraic closure), or `None` for the zero form.
fn binary_form_distinct_factors(form: &MultiPoly, deg: u32) -> Option<usize> {
    if form.is_zero() {
        return None;
    }
    let coeffs: Vec<Rational> = (0..=deg)
        .map(|k| form.coefficient(&Monomial::new(vec![k, deg - k])))
        .collect();
    let p = UPoly::new(coeffs);
    let finite_deg = p.degree().unwrap_or(0);
    let at_infinity = usize::from((finite_deg as u32) < deg);
    Some(p.distinct_root_count() + at_infinity)
}

/// ADE type of an isolated singularity, given μ = τ and the Hessian corank.
fn classify_from(f: &MultiPoly, mu: usize, tau: usize, corank: usize) -> Result<SingularityType> {
    let non_simple = SingularityType::NonSimple { mu, tau, corank };
    if mu != tau {
        return Ok(non_simple);
    }
    match corank {
        0 => Ok(SingularityType::A(1)),
        1 => SingularityType::a(mu as u32),
        2 => {
            let s = split_residual(f, mu as u32 + 2)?;
            let cubic = s.residual.homogeneous_part(3);
            Ok(match binary_form_distinct_factors(&cubic, 3) {
                None => non_simple,
                Some(3) if mu == 4 => SingularityType::D(4),
                Some(3) => non_simple,
                Some(2) if mu >= 4 => SingularityType::D(mu as u32),
                Some(1) => match mu {
                    6 => SingularityType::E6,
                    7 => SingularityType::E7,
                    8 => SingularityType::E8,
                    _ => non_simple,
                },
                _ => non_simple,
            })
        }
        _ => Ok(non_simple),
    }
}

/// Classification at the origin; `NotSingular` and `NonIsolated` are
/// returned as types rather than errors.
pub fn classify_simple(f: &MultiPoly) -> Result<SingularityType> {
    let run = || -> Result<SingularityType> {
        let mu = local_milnor_number(f)?;
        let (tau, _) = tyurina_number(f)?;
        classify_from(f, mu, tau, hessian_corank(f)?)
    };
    match run() {
        Err(Error::NotSingular) => Ok(SingularityType::NotSingular),
        Err(Error::NonIsolated) => Ok(SingularityType::NonIsolated),
        other => other,
    }
}

/// Full report for a germ singular at the origin.
pub fn analyze_germ(f: &MultiPoly) -> Result<GermReport> {
    ensure_singular(f)?;
    let (mu_local, mu_global) = milnor_number(f)?;
    let (tau, t1_basis) = tyurina_number(f)?;
    let hessian_corank = hessian_corank(f)?;
    let weights = detect_weighted_homogeneous(f);
    let kind = classify_from(f, mu_local, tau, hessian_corank)?;
    Ok(GermReport { mu_local, mu_global, tau, hessian_corank, weights, kind, t1_basis })
}

/// Restricts `f` to the hyperplane `h = 0` (a linear form through the
/// origin) by solving for the last variable with a nonzero coefficient.
pub fn restrict_to_hyperplane(f: &MultiPoly, h: &MultiPoly) -> Result<MultiPoly> {
    if h.ring() != f.ring() {
        return Err(Error::RingMismatch);
    }
    if h.is_zero() || h.terms().any(|(m, _)| m.degree() != 1) {
        return Err(Error::InvalidHyperplane(format!("`{h}` is not a nonzero linear form")));
    }
    let ring = f.ring();
    let n = ring.nvars();
    let coeff = |i: usize| h.coefficient(&Monomial::var(n, i, 1));
    let j = (0..n).rev().find(|&i| !coeff(i).is_zero()).unwrap();
    let others: Vec<String> = ring.names().iter().enumerate().filter(|(i, _)| *i != j).map(|(_, s)| s.clone()).collect();
    let sub = Ring::new(&others)?;
    let pos = |i: usize| if i < j { i } else { i - 1 };
    let aj = coeff(j);
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| {
            if i == j {
                MultiPoly::from_terms(
                    &sub,
                    (0..n).filter(|&k| k != j).map(|k| (Monomial::var(n - 1, pos(k), 1), -(coeff(k) / &aj))),
                )
            } else {
                MultiPoly::variable(&sub, pos(i))
            }
        })
        .collect();
    f.compose(&images, &sub)
}

/// Type and ADE index of the surface section `f|_{h=0}`.
pub fn du_val_section_type(f: &MultiPoly, h: &MultiPoly) -> Result<(SingularityType, u32)> {
    let g = restrict_to_hyperplane(f, h)?;
    let kind = classify_simple(&g)?;
    match kind.ade_index() {
        Some(i) => Ok((kind, i)),
        None => Err(Error::NotDuVal(kind.to_string())),
    }
}

/// Smallest ADE index over coordinate hyperplanes, `extra` sections and
/// `trials` seeded random hyperplanes. It bounds the least index from above.
pub fn least_index_estimate(f: &MultiPoly, extra: &[MultiPoly], trials: usize, seed: u64) -> Result<u32> {
    let ring = f.ring();
    let n = ring.nvars();
    let mut sections: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::variable(ring, i)).collect();
    sections.extend(extra.iter().cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-10..=10)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            coeffs[0] = 1;
        }
        sections.push(MultiPoly::from_terms(
            ring,
            coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(n, i, 1), Rational::from_integer(BigInt::from(c)))),
        ));
    }
    let mut best: Option<u32> = None;
    for h in &sections {
        match du_val_section_type(f, h) {
            Ok((_, idx)) => best = Some(best.map_or(idx, |b| b.min(idx))),
            Err(Error::RingMismatch) => return Err(Error::RingMismatch),
            Err(_) => {}
        }
        if best == Some(1) {
            break;
        }
    }
    best.ok_or_else(|| Error::NotDuVal(String::from("no hyperplane section is an isolated Du Val germ")))
}

/// Sum of the local Milnor numbers at a list of points, each translated to the origin.
pub fn local_milnor_at(f: &MultiPoly, point: &[Rational]) -> Result<usize> {
    let g = f.translate(point);
    let g = &g - &MultiPoly::constant(g.ring(), g.constant_term());
    Ok(milnor_number(&g)?.0)
}
