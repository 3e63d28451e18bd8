//! Point-first sampling of deformation vectors on prescribed loci.
//!
//! The critical point `(yL, zL)` is chosen first. With the point fixed, the
//! critical equations, `L` and every `ν_k` are affine in Λ, so the linear
//! conditions are solved exactly and the nonlinear loci are met by choosing
//! target values for the free invariants.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    deformation_type_at, locus_membership_with, AdeFamily, Arg, DeformationVector, Locus, LocusReport, Shape,
    SymbolicFamily,
};
use crate::linalg::{solve_affine, AffineSolution, Matrix};
use crate::poly::{MultiPoly, Rational};
use crate::singularity::SingularityType;
use crate::univariate::{rational_cbrt, rational_sqrt};
use crate::{Error, Result};

/// Attempts per requested sample before a row is reported as unsampled.
const RETRIES: usize = 16;

/// A row of an adjacency table: a set of loci and the predicted type of a
/// generic critical point on their intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSpec {
    pub constraints: Vec<Locus>,
    pub predicted: Option<SingularityType>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyRow {
    pub constraints: Vec<Locus>,
    pub predicted: Option<SingularityType>,
    /// Type at the first sample; `None` when no sample was found.
    pub observed: Option<SingularityType>,
    /// Whether every sample matched the prediction; `None` without a
    /// prediction or a sample.
    pub agree: Option<bool>,
    pub lambda: Option<Vec<Rational>>,
    pub point: Option<[Rational; 2]>,
}

fn row(constraints: Vec<Locus>, predicted: Option<SingularityType>) -> RowSpec {
    RowSpec { constraints, predicted }
}

fn vs(ks: impl IntoIterator<Item = usize>) -> Vec<Locus> {
    ks.into_iter().map(Locus::V).collect()
}

/// The adjacency rows of a family.
pub fn adjacency_rows(family: AdeFamily) -> Vec<RowSpec> {
    use SingularityType as T;
    let with = |mut v: Vec<Locus>, extra: &[Locus]| {
        v.extend_from_slice(extra);
        v
    };
    match family {
        AdeFamily::A(n) => (2..=n).map(|m| row(vs(2..=m as usize), Some(T::A(m)))).collect(),
        AdeFamily::D(n) => {
            let last = n as usize - 1;
            let mut rows = vec![
                row(vec![Locus::VPrime], Some(T::A(2))),
                row(vs([last]), Some(T::A(2))),
                row(vs([1, last]), Some(T::A(3))),
            ];
            for m in 4..=n as usize {
                rows.push(row(with(vs(1..=m - 2), &[Locus::V(last)]), Some(T::D(m as u32))));
            }
            for l in 3..=n as usize - 2 {
                rows.push(row(vs(1..=l), Some(T::A(l as u32))));
            }
            rows
        }
        AdeFamily::E6 | AdeFamily::E7 | AdeFamily::E8 => {
            let mut rows = vec![
                row(vec![Locus::V0], Some(T::A(2))),
                row(vs([1, 2]), Some(T::A(2))),
                row(vs([1, 3]), Some(T::A(2))),
            ];
            match family {
                AdeFamily::E6 => rows.extend([
                    row(vs([1, 2, 4]), Some(T::A(3))),
                    row(vs([1, 2, 3]), Some(T::D(4))),
                    row(with(vs([1, 2, 3]), &[Locus::VSecond]), Some(T::D(5))),
                    row(with(vs([1, 2, 4]), &[Locus::VPrime]), None),
                ]),
                AdeFamily::E7 => rows.extend([
                    row(vs([1, 2, 5]), Some(T::A(3))),
                    row(with(vs([1, 2, 5]), &[Locus::VPrime]), Some(T::A(4))),
                    row(vs([1, 2, 3]), Some(T::D(4))),
                    row(with(vs([1, 2, 3]), &[Locus::VSecond]), Some(T::D(5))),
                    row(vs(1..=5), Some(T::E6)),
                ]),
                _ => rows.extend([
                    row(vs([1, 2, 5]), Some(T::A(3))),
                    row(with(vs([1, 2, 5]), &[Locus::VPrime]), Some(T::A(4))),
                    row(vs([1, 2, 3]), Some(T::D(4))),
                    row(with(vs([1, 2, 3]), &[Locus::VSecond]), Some(T::D(5))),
                    row(with(vs([1, 2, 3, 6, 7]), &[Locus::VSecond]), Some(T::D(6))),
                    row(vs(1..=5), Some(T::E6)),
                    row(vs([1, 2, 3, 4, 5, 7]), Some(T::E7)),
                ]),
            }
            rows
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(1..=30);
    let d: i64 = rng.gen_range(1..=6);
    let n = if rng.gen_bool(0.5) { -n } else { n };
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(coefficients on Λ, constant)` of a polynomial in `[yL, zL, λ...]` at a
/// fixed point; `None` if it is not affine in Λ.
fn affine_form(p: &MultiPoly, point: &[Rational; 2], n: usize) -> Option<(Vec<Rational>, Rational)> {
    let mut row = vec![Rational::zero(); n];
    let mut c0 = Rational::zero();
    for (m, c) in p.terms() {
        let e = m.exponents();
        let c = c * num_traits::pow(point[0].clone(), e[0] as usize) * num_traits::pow(point[1].clone(), e[1] as usize);
        let lam: Vec<(usize, u32)> = e[2..].iter().copied().enumerate().filter(|&(_, k)| k > 0).collect();
        match lam.as_slice() {
            [] => c0 += c,
            [(i, 1)] => row[*i] += c,
            _ => return None,
        }
    }
    Some((row, c0))
}

/// How an invariant depends on the point and on Λ.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    /// `coef · yL` (coordinate 0) or `coef · zL` (coordinate 1)
    Point(usize, Rational),
    Const(Rational),
    Lambda,
}

fn kind_of(sym: &SymbolicFamily, a: Arg) -> Kind {
    let p = match a {
        Arg::Const(c) => return Kind::Const(r(c)),
        Arg::Nu(k) => sym.nu(k).expect("printed invariant"),
    };
    if p.terms().any(|(m, _)| m.exponents()[2..].iter().any(|&e| e > 0)) {
        return Kind::Lambda;
    }
    let terms: Vec<_> = p.terms().collect();
    match terms.as_slice() {
        [(m, c)] if m.degree() == 1 => Kind::Point(if m.exponents()[0] == 1 { 0 } else { 1 }, (*c).clone()),
        [(m, c)] if m.degree() == 0 => Kind::Const((*c).clone()),
        _ => Kind::Lambda,
    }
}

/// Loci with a nonlinear defining polynomial, as shapes; unions are replaced
/// by one component.
fn shape_constraints(family: AdeFamily, constraints: &[Locus]) -> (Vec<Locus>, Vec<Shape>) {
    let mut linear = Vec::new();
    let mut shapes = Vec::new();
    for &c in constraints {
        match (c, family) {
            (Locus::V0, AdeFamily::A(_)) => linear.push(Locus::V(2)),
            (Locus::V0, AdeFamily::D(n)) => linear.push(Locus::V(n as usize - 1)),
            (Locus::V(_) | Locus::L, _) => linear.push(c),
            _ => match family.shape(c) {
                Some(s) => shapes.push(s),
                None => linear.push(c),
            },
        }
    }
    (linear, shapes)
}

fn choose_point(sym: &SymbolicFamily, constraints: &[Locus], rng: &mut ChaCha8Rng) -> [Rational; 2] {
    let family = sym.family;
    let mut point = [random_rational(rng), random_rational(rng)];
    if !family.has_y() {
        point[0] = Rational::zero();
    }
    let mut forced = [!family.has_y(), false];
    let (linear, shapes) = shape_constraints(family, constraints);
    for l in linear {
        if let Locus::V(k) = l {
            if sym.nu(k).is_none() {
                continue;
            }
            if let Kind::Point(i, _) = kind_of(sym, Arg::Nu(k)) {
                point[i] = Rational::zero();
                forced[i] = true;
            }
        }
    }
    let mut set = |i: usize, v: Rational, point: &mut [Rational; 2]| {
        if !forced[i] {
            point[i] = v;
            forced[i] = true;
        }
    };
    for s in shapes {
        match s {
            Shape::Quadratic(a, b, c) => {
                if kind_of(sym, a) != Kind::Lambda {
                    continue;
                }
                // make 4bc a square
                match (kind_of(sym, b), kind_of(sym, c)) {
                    (Kind::Point(i, beta), Kind::Point(j, gamma)) if i != j => {
                        let (u, s, t) = (random_rational(rng), random_rational(rng), random_rational(rng));
                        set(i, &u * &s * &s / beta, &mut point);
                        set(j, &t * &t / (u * gamma), &mut point);
                    }
                    (Kind::Point(i, beta), Kind::Const(k)) | (Kind::Const(k), Kind::Point(i, beta)) if !k.is_zero() => {
                        let t = random_rational(rng);
                        set(i, k * &t * &t / beta, &mut point);
                    }
                    _ => {}
                }
            }
            Shape::Cubic(a, b) => {
                let s = random_rational(rng);
                let two_s3 = r(2) * &s * &s * &s;
                let minus_3s2 = r(-3) * &s * &s;
                match (kind_of(sym, a), kind_of(sym, b)) {
                    (Kind::Point(i, alpha), Kind::Lambda) => set(i, two_s3 / alpha, &mut point),
                    (Kind::Lambda, Kind::Point(i, beta)) => set(i, minus_3s2 / beta, &mut point),
                    (Kind::Point(i, alpha), Kind::Point(j, beta)) if i != j => {
                        set(i, two_s3 / alpha, &mut point);
                        set(j, minus_3s2 / beta, &mut point);
                    }
                    _ => {}
                }
            }
        }
    }
    point
}

struct LinearSystem {
    rows: Matrix,
    rhs: Vec<Rational>,
    n: usize,
}

impl LinearSystem {
    fn push_form(&mut self, (row, c): (Vec<Rational>, Rational), target: Rational) {
        self.rows.push(row);
        self.rhs.push(target - c);
    }

    fn solve(&self, what: &str) -> Result<AffineSolution> {
        solve_affine(&self.rows, &self.rhs, self.n)
            .ok_or_else(|| Error::InconsistentConstraints(format!("{what} have no common solution")))
    }
}

/// `row · λ + c` in the deformation parameters.
type AffineForm = (Vec<Rational>, Rational);

enum Val {
    Fixed(Rational),
    Free(AffineForm),
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn value_on(sym: &SymbolicFamily, a: Arg, point: &[Rational; 2], sol: &AffineSolution, n: usize) -> Val {
    match a {
        Arg::Const(c) => Val::Fixed(r(c)),
        Arg::Nu(k) => {
            let form = affine_form(sym.nu(k).unwrap(), point, n).expect("invariants are affine in the deformation");
            if sol.nullspace.iter().all(|v| dot(&form.0, v).is_zero()) {
                Val::Fixed(dot(&form.0, &sol.particular) + &form.1)
            } else {
                Val::Free(form)
            }
        }
    }
}

fn inconsistent(msg: &str) -> Error {
    Error::InconsistentConstraints(msg.into())
}

/// Target values making one nonlinear locus vanish.
fn shape_targets(
    s: Shape,
    vals: Vec<Val>,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(AffineForm, Rational)>> {
    let mut out = Vec::new();
    let value = |v: Val, out: &mut Vec<_>, rng: &mut ChaCha8Rng| -> Rational {
        match v {
            Val::Fixed(x) => x,
            Val::Free(f) => {
                let x = random_rational(rng);
                out.push((f, x.clone()));
                x
            }
        }
    };
    match s {
        Shape::Quadratic(..) => {
            let mut it = vals.into_iter();
            let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
            match (a, b, c) {
                (Val::Fixed(a), Val::Fixed(b), Val::Fixed(c)) => {
                    if &a * &a != r(4) * b * c {
                        return Err(inconsistent("quadratic locus is not met at this point"));
                    }
                }
                (a, Val::Free(fb), c) | (a, c, Val::Free(fb)) => {
                    // fb is solved from a² = 4bc once a and the other factor are fixed
                    let c = value(c, &mut out, rng);
                    if c.is_zero() {
                        match a {
                            Val::Fixed(a) if !a.is_zero() => {
                                return Err(inconsistent("quadratic locus needs a vanishing invariant"))
                            }
                            Val::Fixed(_) => {}
                            Val::Free(fa) => out.push((fa, Rational::zero())),
                        }
                    } else {
                        let a = value(a, &mut out, rng);
                        out.push((fb, &a * &a / (r(4) * c)));
                    }
                }
                (Val::Free(fa), Val::Fixed(b), Val::Fixed(c)) => {
                    let a = rational_sqrt(&(r(4) * b * c)).ok_or_else(|| inconsistent("quadratic locus needs a rational square"))?;
                    out.push((fa, a));
                }
            }
        }
        Shape::Cubic(..) => {
            let mut it = vals.into_iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            match (a, b) {
                (Val::Fixed(a), Val::Fixed(b)) => {
                    if r(27) * &a * &a + r(4) * &b * &b * &b != Rational::zero() {
                        return Err(inconsistent("cubic locus is not met at this point"));
                    }
                }
                (Val::Free(fa), Val::Free(fb)) => {
                    let s = random_rational(rng);
                    out.push((fa, r(2) * &s * &s * &s));
                    out.push((fb, r(-3) * &s * &s));
                }
                (Val::Fixed(a), Val::Free(fb)) => {
                    let b = rational_cbrt(&(r(-27) * &a * &a / r(4)))
                        .ok_or_else(|| inconsistent("cubic locus needs a rational cube"))?;
                    out.push((fb, b));
                }
                (Val::Free(fa), Val::Fixed(b)) => {
                    let a = rational_sqrt(&(r(-4) * &b * &b * &b / r(27)))
                        .ok_or_else(|| inconsistent("cubic locus needs a rational square"))?;
                    out.push((fa, a));
                }
            }
        }
    }
    Ok(out)
}

fn solve_with(
    sym: &SymbolicFamily,
    point: &[Rational; 2],
    constraints: &[Locus],
    fixed: &[(usize, Rational)],
    rng: &mut ChaCha8Rng,
) -> Result<DeformationVector> {
    let family = sym.family;
    let n = family.t1_basis().len();
    if !family.has_y() && !point[0].is_zero() {
        return Err(Error::PointNotCritical);
    }
    let form = |p: &MultiPoly| affine_form(p, point, n).expect("conditions are affine in the deformation");
    let mut sys = LinearSystem { rows: Vec::new(), rhs: Vec::new(), n };
    for p in &sym.critical {
        sys.push_form(form(p), Rational::zero());
    }
    sys.push_form(form(&sym.l), Rational::zero());
    let (linear, shapes) = shape_constraints(family, constraints);
    for l in linear {
        if let Locus::V(k) = l {
            let p = sym.nu(k).ok_or_else(|| Error::UnknownLocus(format!("{l} is not defined for {family}")))?;
            sys.push_form(form(p), Rational::zero());
        }
    }
    for (i, v) in fixed {
        if *i >= n {
            return Err(Error::InvalidLambda(format!("{family} has no coordinate {i}")));
        }
        let mut row = vec![Rational::zero(); n];
        row[*i] = Rational::one();
        sys.push_form((row, Rational::zero()), v.clone());
    }
    let mut sol = sys.solve("linear conditions")?;
    for s in shapes {
        let args = match s {
            Shape::Quadratic(a, b, c) => vec![a, b, c],
            Shape::Cubic(a, b) => vec![a, b],
        };
        let vals = args.into_iter().map(|a| value_on(sym, a, point, &sol, n)).collect();
        for (f, target) in shape_targets(s, vals, rng)? {
            sys.push_form(f, target);
        }
        sol = sys.solve("nonlinear conditions")?;
    }
    let t: Vec<Rational> = sol.nullspace.iter().map(|_| random_rational(rng)).collect();
    let dv = DeformationVector::new(family, sol.point(&t))?;
    let report = locus_membership_with(sym, &dv, point)?;
    for &c in constraints.iter().chain([Locus::L].iter()) {
        if !report.contains(c)? {
            return Err(inconsistent("sample left a prescribed locus"));
        }
    }
    Ok(dv)
}

/// A deformation vector for which `point` is a critical point on `L` and on
/// every locus in `constraints`. Coordinates listed in `fixed` are pinned;
/// the remaining freedom is filled from a seeded generator.
pub fn solve_lambda_on_locus(
    family: AdeFamily,
    point: &[Rational; 2],
    constraints: &[Locus],
    fixed: &[(usize, Rational)],
    seed: u64,
) -> Result<DeformationVector> {
    let sym = SymbolicFamily::new(family);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    solve_with(&sym, point, constraints, fixed, &mut rng)
}

fn implied(shape: Shape, constraints: &[Locus]) -> bool {
    let zero = |a: Arg| matches!(a, Arg::Nu(k) if constraints.contains(&Locus::V(k)));
    match shape {
        Shape::Quadratic(a, b, c) => zero(a) && (zero(b) || zero(c)),
        Shape::Cubic(a, b) => zero(a) && zero(b),
    }
}

/// A sample is generic when every locus that is neither prescribed nor
/// forced by the prescribed ones misses it.
fn is_generic(family: AdeFamily, report: &LocusReport, constraints: &[Locus]) -> bool {
    for (k, v) in &report.nu {
        if v.is_zero() && !constraints.contains(&Locus::V(*k)) {
            return false;
        }
    }
    for (locus, value) in [
        (Locus::VPrime, &report.v_prime),
        (Locus::VSecond, &report.v_second),
        (Locus::V0, &Some(report.v_value.clone())),
    ] {
        let (Some(shape), Some(value)) = (family.shape(locus), value) else { continue };
        if value.is_zero() && !constraints.contains(&locus) && !implied(shape, constraints) {
            return false;
        }
    }
    true
}

/// Samples one row. The generator stream is the row index, so rows can be
/// sampled independently and in any order.
pub fn sample_row(family: AdeFamily, index: usize, spec: &RowSpec, seed: u64, samples: usize) -> Result<AdjacencyRow> {
    let sym = SymbolicFamily::new(family);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let mut out = AdjacencyRow {
        constraints: spec.constraints.clone(),
        predicted: spec.predicted,
        observed: None,
        agree: None,
        lambda: None,
        point: None,
    };
    let mut found = 0;
    let mut all_agree = true;
    for _ in 0..RETRIES * samples.max(1) {
        if found == samples.max(1) {
            break;
        }
        let point = choose_point(&sym, &spec.constraints, &mut rng);
        let dv = match solve_with(&sym, &point, &spec.constraints, &[], &mut rng) {
            Ok(dv) => dv,
            Err(Error::InconsistentConstraints(_)) => continue,
            Err(e) => return Err(e),
        };
        let report = locus_membership_with(&sym, &dv, &point)?;
        if !is_generic(family, &report, &spec.constraints) {
            continue;
        }
        let observed = deformation_type_at(&dv, &point)?;
        if let Some(p) = spec.predicted {
            all_agree &= p == observed;
        }
        if found == 0 {
            out.observed = Some(observed);
            out.lambda = Some(dv.lambda);
            out.point = Some(point);
        }
        found += 1;
    }
    if found > 0 && spec.predicted.is_some() {
        out.agree = Some(all_agree);
    }
    Ok(out)
}

/// Samples every row of the family's adjacency table in order.
pub fn adjacency_table(family: AdeFamily, seed: u64, samples: usize) -> Result<Vec<AdjacencyRow>> {
    adjacency_rows(family)
        .iter()
        .enumerate()
        .map(|(i, spec)| sample_row(family, i, spec, seed, samples))
        .collect()
}
