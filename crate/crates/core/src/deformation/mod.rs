//! Versal deformations of the five simple families, their critical loci and
//! adjacency tables.
//!
//! A family `F` is deformed as `F_Λ = F + Σ λ_i m_i` over its T¹ monomial
//! basis. After moving a critical point `(0, y_L, z_L, 0)` to the origin, the
//! coefficients of the translated polynomial give:
//!
//! * the critical equations (coefficients of `y` and `z`),
//! * the locus `L` (the constant term: the point lies on `F_Λ = 0`),
//! * the invariants `ν_k`, each the coefficient of a fixed monomial,
//! * the loci `V_k = {ν_k = 0}` and the nonlinear loci `V`, `V'`, `V''`
//!   built from `Q(a, b, c) = a² − 4bc` and `C(a, b) = 27a² + 4b³`.
//!
//! Everything is computed symbolically in the ring
//! `[yL, zL, λ...]`, so the printed conditions are reproduced by coefficient
//! extraction rather than typed in.

mod sample;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::groebner::{buchberger, Ideal, QuotientDim};
use crate::poly::{Monomial, MultiPoly, Rational, Ring, TermOrder};
use crate::singularity::{classify_simple, SingularityType};
use crate::univariate::UPoly;
use crate::{Error, Result};

pub use sample::{adjacency_rows, adjacency_table, sample_row, solve_lambda_on_locus, AdjacencyRow, RowSpec};

/// Seed used by the samplers when none is given.
pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdeFamily {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl fmt::Display for AdeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeFamily::A(n) => write!(f, "A{n}"),
            AdeFamily::D(n) => write!(f, "D{n}"),
            AdeFamily::E6 => f.write_str("E6"),
            AdeFamily::E7 => f.write_str("E7"),
            AdeFamily::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for AdeFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<AdeFamily> {
        AdeFamily::from_type(s.parse()?)
    }
}

/// Nonlinear locus shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// `a² − 4bc`
    Quadratic(Arg, Arg, Arg),
    /// `27a² + 4b³`
    Cubic(Arg, Arg),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Arg {
    Nu(usize),
    Const(i64),
}

/// Named loci of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Locus {
    /// `V_k = {ν_k = 0}`
    V(usize),
    VPrime,
    VSecond,
    /// The worse-than-node locus.
    V0,
    L,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::V(k) => write!(f, "V{k}"),
            Locus::VPrime => f.write_str("V'"),
            Locus::VSecond => f.write_str("V''"),
            Locus::V0 => f.write_str("V"),
            Locus::L => f.write_str("L"),
        }
    }
}

impl FromStr for Locus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Locus> {
        match s {
            "V'" => Ok(Locus::VPrime),
            "V''" => Ok(Locus::VSecond),
            "V" => Ok(Locus::V0),
            "L" => Ok(Locus::L),
            _ => s
                .strip_prefix('V')
                .and_then(|k| k.parse().ok())
                .filter(|&k: &usize| k > 0)
                .map(Locus::V)
                .ok_or_else(|| Error::UnknownLocus(s.to_string())),
        }
    }
}

fn mono(y: u32, z: u32) -> Monomial {
    Monomial::new(vec![0, y, z, 0])
}

impl AdeFamily {
    pub fn a(n: u32) -> Result<AdeFamily> {
        if n >= 1 {
            Ok(AdeFamily::A(n))
        } else {
            Err(Error::InvalidIndex(format!("A_{n} needs n >= 1")))
        }
    }

    pub fn d(n: u32) -> Result<AdeFamily> {
        if n >= 4 {
            Ok(AdeFamily::D(n))
        } else {
            Err(Error::InvalidIndex(format!("D_{n} needs n >= 4")))
        }
    }

    pub fn from_type(t: SingularityType) -> Result<AdeFamily> {
        match t {
            SingularityType::A(n) => AdeFamily::a(n),
            SingularityType::D(n) => AdeFamily::d(n),
            SingularityType::E6 => Ok(AdeFamily::E6),
            SingularityType::E7 => Ok(AdeFamily::E7),
            SingularityType::E8 => Ok(AdeFamily::E8),
            other => Err(Error::InvalidIndex(format!("{other} is not a simple family"))),
        }
    }

    pub fn singularity_type(&self) -> SingularityType {
        match *self {
            AdeFamily::A(n) => SingularityType::A(n),
            AdeFamily::D(n) => SingularityType::D(n),
            AdeFamily::E6 => SingularityType::E6,
            AdeFamily::E7 => SingularityType::E7,
            AdeFamily::E8 => SingularityType::E8,
        }
    }

    pub fn index(&self) -> u32 {
        self.singularity_type().ade_index().unwrap()
    }

    /// The ring `[x, y, z, t]` of the germs.
    pub fn germ_ring() -> Ring {
        Ring::new(&["x", "y", "z", "t"]).unwrap()
    }

    /// `x² + q(y, z) + t²`.
    pub fn polynomial(&self) -> MultiPoly {
        let q: Vec<(Monomial, i64)> = match *self {
            AdeFamily::A(n) => vec![(mono(2, 0), 1), (mono(0, n + 1), 1)],
            AdeFamily::D(n) => vec![(mono(2, 1), 1), (mono(0, n - 1), 1)],
            AdeFamily::E6 => vec![(mono(3, 0), 1), (mono(0, 4), 1)],
            AdeFamily::E7 => vec![(mono(3, 0), 1), (mono(1, 3), 1)],
            AdeFamily::E8 => vec![(mono(3, 0), 1), (mono(0, 5), 1)],
        };
        let ring = AdeFamily::germ_ring();
        let mut terms = vec![
            (Monomial::new(vec![2, 0, 0, 0]), Rational::from_integer(1.into())),
            (Monomial::new(vec![0, 0, 0, 2]), Rational::from_integer(1.into())),
        ];
        terms.extend(q.into_iter().map(|(m, c)| (m, Rational::from_integer(BigInt::from(c)))));
        MultiPoly::from_terms(&ring, terms)
    }

    /// T¹ monomials in the order of the λ coordinates.
    pub fn t1_basis(&self) -> Vec<Monomial> {
        match *self {
            AdeFamily::A(n) => (0..n).map(|i| mono(0, i)).collect(),
            AdeFamily::D(n) => {
                let mut v = vec![mono(0, 0), mono(1, 0)];
                v.extend((1..=n - 2).map(|i| mono(0, i)));
                v
            }
            AdeFamily::E6 => vec![mono(0, 0), mono(1, 0), mono(0, 1), mono(1, 1), mono(0, 2), mono(1, 2)],
            AdeFamily::E7 => {
                vec![mono(0, 0), mono(1, 0), mono(0, 1), mono(1, 1), mono(0, 2), mono(0, 3), mono(0, 4)]
            }
            AdeFamily::E8 => vec![
                mono(0, 0),
                mono(1, 0),
                mono(0, 1),
                mono(1, 1),
                mono(0, 2),
                mono(1, 2),
                mono(0, 3),
                mono(1, 3),
            ],
        }
    }

    /// Names of the λ coordinates: `l0, l1, ...`; for `D_n` the lone `y`
    /// coefficient is `l`, giving `l0, l, l1, ..., l{n-2}`.
    pub fn lambda_names(&self) -> Vec<String> {
        match *self {
            AdeFamily::D(n) => {
                let mut v = vec![String::from("l0"), String::from("l")];
                v.extend((1..=n - 2).map(|i| format!("l{i}")));
                v
            }
            _ => (0..self.t1_basis().len()).map(|i| format!("l{i}")).collect(),
        }
    }

    /// Whether the critical point has a free `y` coordinate (all but `A_n`).
    pub fn has_y(&self) -> bool {
        !matches!(self, AdeFamily::A(_))
    }

    /// `(k, monomial)` with `ν_k` the coefficient of the monomial after translation.
    fn nu_monomials(&self) -> Vec<(usize, Monomial)> {
        match *self {
            AdeFamily::A(n) => (2..=n).map(|k| (k as usize, mono(0, k))).collect(),
            AdeFamily::D(n) => {
                let mut v = vec![(1, mono(1, 1))];
                v.extend((2..=n - 2).map(|k| (k as usize, mono(0, k))));
                v.push(((n - 1) as usize, mono(2, 0)));
                v
            }
            AdeFamily::E6 => [mono(1, 1), mono(0, 2), mono(2, 0), mono(0, 3), mono(1, 2)]
                .into_iter()
                .enumerate()
                .map(|(i, m)| (i + 1, m))
                .collect(),
            AdeFamily::E7 => [mono(1, 1), mono(0, 2), mono(2, 0), mono(1, 2), mono(0, 3), mono(0, 4)]
                .into_iter()
                .enumerate()
                .map(|(i, m)| (i + 1, m))
                .collect(),
            AdeFamily::E8 => [mono(1, 1), mono(0, 2), mono(2, 0), mono(1, 2), mono(0, 3), mono(1, 3), mono(0, 4)]
                .into_iter()
                .enumerate()
                .map(|(i, m)| (i + 1, m))
                .collect(),
        }
    }

    /// Indices `k` of the printed invariants `ν_k`.
    pub fn nu_indices(&self) -> Vec<usize> {
        self.nu_monomials().into_iter().map(|(k, _)| k).collect()
    }

    fn shape(&self, locus: Locus) -> Option<Shape> {
        use Arg::{Const, Nu};
        match (*self, locus) {
            (AdeFamily::E6, Locus::VPrime) => Some(Shape::Quadratic(Nu(5), Nu(3), Const(1))),
            (AdeFamily::E6, Locus::VSecond) => Some(Shape::Cubic(Nu(4), Nu(5))),
            (AdeFamily::E7, Locus::VPrime) => Some(Shape::Quadratic(Nu(4), Nu(3), Nu(6))),
            (AdeFamily::E7, Locus::VSecond) => Some(Shape::Cubic(Nu(5), Nu(4))),
            (AdeFamily::E8, Locus::VPrime) => Some(Shape::Quadratic(Nu(4), Nu(3), Nu(7))),
            (AdeFamily::E8, Locus::VSecond) => Some(Shape::Cubic(Nu(5), Nu(4))),
            (AdeFamily::E6 | AdeFamily::E7 | AdeFamily::E8, Locus::V0) => {
                Some(Shape::Quadratic(Nu(1), Nu(2), Nu(3)))
            }
            (AdeFamily::D(n), Locus::VPrime) => Some(Shape::Quadratic(Nu(1), Nu(2), Nu(n as usize - 1))),
            _ => None,
        }
    }

    /// Loci with a defining polynomial for this family.
    pub fn loci(&self) -> Vec<Locus> {
        let mut v = vec![Locus::L];
        v.extend(self.nu_indices().into_iter().map(Locus::V));
        for l in [Locus::VPrime, Locus::VSecond, Locus::V0] {
            if self.shape(l).is_some() || (l == Locus::V0 && !matches!(self, AdeFamily::E6 | AdeFamily::E7 | AdeFamily::E8)) {
                v.push(l);
            }
        }
        v
    }

    pub fn zero_lambda(&self) -> DeformationVector {
        DeformationVector { family: *self, lambda: vec![Rational::zero(); self.t1_basis().len()] }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationVector {
    pub family: AdeFamily,
    /// Coordinates on the T¹ basis, in the order of [`AdeFamily::t1_basis`].
    pub lambda: Vec<Rational>,
}

impl DeformationVector {
    pub fn new(family: AdeFamily, lambda: Vec<Rational>) -> Result<DeformationVector> {
        let want = family.t1_basis().len();
        if lambda.len() != want {
            return Err(Error::InvalidLambda(format!("{family} needs {want} coordinates, got {}", lambda.len())));
        }
        Ok(DeformationVector { family, lambda })
    }
}

/// `F_Λ = F + Σ λ_i m_i` in `[x, y, z, t]`.
pub fn build_deformed(l: &DeformationVector) -> MultiPoly {
    let f = l.family.polynomial();
    let ring = f.ring().clone();
    let extra = MultiPoly::from_terms(&ring, l.family.t1_basis().into_iter().zip(l.lambda.iter().cloned()));
    &f + &extra
}

/// The symbolic conditions of a family, as polynomials in `[yL, zL, λ...]`.
#[derive(Debug, Clone)]
pub struct SymbolicFamily {
    pub family: AdeFamily,
    pub ring: Ring,
    /// Coefficients of `y` (omitted for `A_n`) and `z`.
    pub critical: Vec<MultiPoly>,
    /// Constant term: `p_Λ` lies on `F_Λ = 0`.
    pub l: MultiPoly,
    /// `(k, ν_k)`
    pub nu: Vec<(usize, MultiPoly)>,
}

impl SymbolicFamily {
    pub fn new(family: AdeFamily) -> SymbolicFamily {
        let lambda_names = family.lambda_names();
        let mut all: Vec<String> = ["x", "y", "z", "t", "yL", "zL"].iter().map(|s| s.to_string()).collect();
        all.extend(lambda_names.iter().cloned());
        let big = Ring::new(&all).unwrap();
        let mut param_names: Vec<String> = vec![String::from("yL"), String::from("zL")];
        param_names.extend(lambda_names);
        let ring = Ring::new(&param_names).unwrap();

        let nb = big.nvars();
        let var = |i: usize| MultiPoly::variable(&big, i);
        let embed_germ = |m: &Monomial| {
            let mut e = m.exponents().to_vec();
            e.resize(nb, 0);
            Monomial::new(e)
        };
        let mut f = family.polynomial().embed_by_name(&big).unwrap();
        for (i, m) in family.t1_basis().iter().enumerate() {
            f = &f + &var(6 + i).mul_monomial(&embed_germ(m), &Rational::from(BigInt::from(1)));
        }
        let mut images: Vec<MultiPoly> = (0..nb).map(var).collect();
        if family.has_y() {
            images[1] = &var(1) + &var(4);
        }
        images[2] = &var(2) + &var(5);
        let g = f.compose(&images, &big).unwrap();
        let coeffs = g.coefficients_in(&[0, 1, 2, 3]);
        let coeff = |m: Monomial| -> MultiPoly {
            coeffs
                .get(&embed_germ(&m))
                .map(|p| p.embed_by_name(&ring).unwrap())
                .unwrap_or_else(|| MultiPoly::zero(&ring))
        };
        let mut critical = Vec::new();
        if family.has_y() {
            critical.push(coeff(mono(1, 0)));
        }
        critical.push(coeff(mono(0, 1)));
        let l = coeff(mono(0, 0));
        let nu = family.nu_monomials().into_iter().map(|(k, m)| (k, coeff(m))).collect();
        let mut out = SymbolicFamily { family, ring, critical, l, nu };
        if !family.has_y() {
            // yL does not occur; keep the ring uniform
            out.critical.retain(|p| !p.is_zero());
        }
        out
    }

    pub fn nu(&self, k: usize) -> Option<&MultiPoly> {
        self.nu.iter().find(|(j, _)| *j == k).map(|(_, p)| p)
    }

    fn arg(&self, a: Arg) -> MultiPoly {
        match a {
            Arg::Nu(k) => self.nu(k).expect("printed invariant").clone(),
            Arg::Const(c) => MultiPoly::constant(&self.ring, Rational::from(BigInt::from(c))),
        }
    }

    fn shape_poly(&self, s: Shape) -> MultiPoly {
        match s {
            Shape::Quadratic(a, b, c) => {
                let (a, b, c) = (self.arg(a), self.arg(b), self.arg(c));
                &(&a * &a) - &(&b * &c).scale(&Rational::from(BigInt::from(4)))
            }
            Shape::Cubic(a, b) => {
                let (a, b) = (self.arg(a), self.arg(b));
                &(&a * &a).scale(&Rational::from(BigInt::from(27))) + &b.pow(3).scale(&Rational::from(BigInt::from(4)))
            }
        }
    }

    /// Defining polynomial of a locus. `V` for `A_n` and `D_n` is a union and
    /// is returned as the product of its components.
    pub fn locus_polynomial(&self, locus: Locus) -> Result<MultiPoly> {
        let unknown = || Error::UnknownLocus(format!("{locus} is not defined for {}", self.family));
        match locus {
            Locus::L => Ok(self.l.clone()),
            Locus::V(k) => self.nu(k).cloned().ok_or_else(unknown),
            Locus::V0 => match self.family {
                AdeFamily::A(_) => {
                    Ok(self.nu.iter().fold(MultiPoly::one(&self.ring), |acc, (_, p)| &acc * p))
                }
                AdeFamily::D(n) => {
                    let vp = self.shape_poly(self.family.shape(Locus::VPrime).unwrap());
                    Ok(&vp * self.nu(n as usize - 1).unwrap())
                }
                _ => Ok(self.shape_poly(self.family.shape(Locus::V0).unwrap())),
            },
            _ => self.family.shape(locus).map(|s| self.shape_poly(s)).ok_or_else(unknown),
        }
    }

    /// Values `[yL, zL, λ...]` for a point and deformation vector.
    fn values(&self, point: &[Rational; 2], l: &DeformationVector) -> Vec<Rational> {
        let mut v = vec![point[0].clone(), point[1].clone()];
        v.extend(l.lambda.iter().cloned());
        v
    }
}

/// Evaluation of every condition of a family at `(Λ, p_Λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusReport {
    pub l_value: Rational,
    pub in_l: bool,
    /// `(k, ν_k)`
    pub nu: Vec<(usize, Rational)>,
    pub v_value: Rational,
    pub in_v: bool,
    pub v_prime: Option<Rational>,
    pub v_second: Option<Rational>,
}

impl LocusReport {
    /// Whether the point lies on `locus`.
    pub fn contains(&self, locus: Locus) -> Result<bool> {
        match locus {
            Locus::L => Ok(self.in_l),
            Locus::V0 => Ok(self.in_v),
            Locus::V(k) => self
                .nu
                .iter()
                .find(|(j, _)| *j == k)
                .map(|(_, v)| v.is_zero())
                .ok_or_else(|| Error::UnknownLocus(locus.to_string())),
            Locus::VPrime => self.v_prime.as_ref().map(Zero::is_zero).ok_or_else(|| Error::UnknownLocus(locus.to_string())),
            Locus::VSecond => {
                self.v_second.as_ref().map(Zero::is_zero).ok_or_else(|| Error::UnknownLocus(locus.to_string()))
            }
        }
    }
}

/// A rational critical point `(0, y, z, 0)` of `F_Λ` with its locus data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPoint {
    pub coords: [Rational; 4],
    pub loci: LocusReport,
}

/// The critical equations with Λ substituted, in the ring `[yL, zL]`
/// (or `[zL]` for `A_n`).
pub fn critical_system(l: &DeformationVector) -> Vec<MultiPoly> {
    let sym = SymbolicFamily::new(l.family);
    let point_ring = point_ring(l.family);
    sym.critical.iter().map(|p| substitute_lambda(&sym, p, l, &point_ring)).collect()
}

fn point_ring(family: AdeFamily) -> Ring {
    if family.has_y() {
        Ring::new(&["yL", "zL"]).unwrap()
    } else {
        Ring::new(&["zL"]).unwrap()
    }
}

fn substitute_lambda(sym: &SymbolicFamily, p: &MultiPoly, l: &DeformationVector, target: &Ring) -> MultiPoly {
    let images: Vec<MultiPoly> = (0..sym.ring.nvars())
        .map(|i| match i {
            0 => target.var("yL").unwrap_or_else(|_| MultiPoly::zero(target)),
            1 => target.var("zL").unwrap(),
            _ => MultiPoly::constant(target, l.lambda[i - 2].clone()),
        })
        .collect();
    p.compose(&images, target).unwrap()
}

/// Evaluates `L`, every `ν_k`, `V`, `V'`, `V''` at `(Λ, point)`; the point
/// must satisfy the critical equations.
pub fn locus_membership(l: &DeformationVector, point: &[Rational; 2]) -> Result<LocusReport> {
    let sym = SymbolicFamily::new(l.family);
    locus_membership_with(&sym, l, point)
}

pub(crate) fn locus_membership_with(sym: &SymbolicFamily, l: &DeformationVector, point: &[Rational; 2]) -> Result<LocusReport> {
    if !l.family.has_y() && !point[0].is_zero() {
        return Err(Error::PointNotCritical);
    }
    let vals = sym.values(point, l);
    if sym.critical.iter().any(|p| !p.evaluate(&vals).is_zero()) {
        return Err(Error::PointNotCritical);
    }
    let l_value = sym.l.evaluate(&vals);
    let nu: Vec<(usize, Rational)> = sym.nu.iter().map(|(k, p)| (*k, p.evaluate(&vals))).collect();
    let v_value = sym.locus_polynomial(Locus::V0)?.evaluate(&vals);
    let opt = |locus| sym.locus_polynomial(locus).ok().map(|p| p.evaluate(&vals));
    Ok(LocusReport {
        in_l: l_value.is_zero(),
        l_value,
        nu,
        in_v: v_value.is_zero(),
        v_value,
        v_prime: opt(Locus::VPrime),
        v_second: opt(Locus::VSecond),
    })
}

/// Rational solutions of the critical system, by lexicographic elimination.
/// The flag reports whether some solution is not rational.
pub fn rational_critical_points(l: &DeformationVector) -> Result<(Vec<CriticalPoint>, bool)> {
    let sym = SymbolicFamily::new(l.family);
    let ring = point_ring(l.family);
    let eqs: Vec<MultiPoly> = sym.critical.iter().map(|p| substitute_lambda(&sym, p, l, &ring)).collect();
    let gb = buchberger(&Ideal::new(&ring, eqs)?, &TermOrder::Lex)?;
    if gb.is_unit() {
        return Ok((Vec::new(), false));
    }
    if gb.quotient_dimension() == QuotientDim::Infinite {
        return Err(Error::PositiveDimensional);
    }
    let nv = ring.nvars();
    let last = nv - 1;
    let eliminant = gb
        .basis()
        .iter()
        .find_map(|g| UPoly::from_multipoly(g, last).filter(|u| u.degree().unwrap_or(0) > 0))
        .ok_or(Error::PositiveDimensional)?;
    let z_roots = eliminant.rational_roots();
    let mut irrational = eliminant.distinct_root_count() > z_roots.len();
    let mut points = Vec::new();
    for z0 in z_roots {
        let mut ys = vec![Rational::zero()];
        if nv == 2 {
            // gcd of the basis elements restricted to z = z0, as polynomials in y
            let mut g = UPoly::zero();
            for p in gb.basis() {
                let restricted: Vec<Rational> = {
                    let mut coeffs: Vec<Rational> = Vec::new();
                    for (m, c) in p.terms() {
                        let e = m.exponents();
                        let d = e[0] as usize;
                        if coeffs.len() <= d {
                            coeffs.resize(d + 1, Rational::zero());
                        }
                        coeffs[d] += c * num_traits::pow(z0.clone(), e[1] as usize);
                    }
                    coeffs
                };
                g = g.gcd(&UPoly::new(restricted));
            }
            ys = g.rational_roots();
            if g.distinct_root_count() > ys.len() {
                irrational = true;
            }
        }
        for y0 in ys {
            let point = [y0, z0.clone()];
            let loci = locus_membership_with(&sym, l, &point)?;
            let [y, z] = point;
            points.push(CriticalPoint { coords: [Rational::zero(), y, z, Rational::zero()], loci });
        }
    }
    Ok((points, irrational))
}

/// Type of `F_Λ` at `(0, y, z, 0)`, after translating the point to the origin.
pub fn deformation_type_at(l: &DeformationVector, point: &[Rational; 2]) -> Result<SingularityType> {
    let f = build_deformed(l);
    let shift = [Rational::zero(), point[0].clone(), point[1].clone(), Rational::zero()];
    classify_simple(&f.translate(&shift))
}
