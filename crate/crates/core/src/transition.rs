//! Bookkeeping for geometric transitions: generalized Clemens formulas,
//! bi-degree, the `h⁰` defect of rigidity, and the degrees of primitive
//! type II and type III transitions.
//!
//! For a small transition `Y → Ȳ ⇝ Ỹ` with singular points `p` of least
//! index `n_p`, Milnor number `μ_p` and Tyurina number `τ_p`:
//!
//! ```text
//! n = Σ n_p = k + c'      m = Σ μ_p = k + c''      c = (c' + c'') / 2
//! τ = Σ τ_p = (m + n) / 2 + h⁰
//! ```

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::poly::{infer_variables, parse_poly, Ring};
use crate::singularity::{least_index_estimate, local_milnor_number, tyurina_number, DEFAULT_SEED, DEFAULT_TRIALS};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPointRecord {
    /// Number of points sharing these invariants.
    pub count: u64,
    /// `n_p`: minimal ADE index of a hyperplane section.
    pub least_index: u64,
    pub mu: u64,
    pub tau: u64,
    /// Local equation at the origin; when present the invariants are recomputed.
    pub local_equation: Option<String>,
}

impl SingularPointRecord {
    pub fn new(count: u64, least_index: u64, mu: u64, tau: u64) -> SingularPointRecord {
        SingularPointRecord { count, least_index, mu, tau, local_equation: None }
    }

    pub fn node(count: u64) -> SingularPointRecord {
        SingularPointRecord::new(count, 1, 1, 1)
    }

    pub fn with_equation(mut self, eq: &str) -> SingularPointRecord {
        self.local_equation = Some(eq.into());
        self
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        self.tau == self.mu
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HodgeNumbers {
    pub h11: u64,
    pub h21: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallTransitionData {
    pub points: Vec<SingularPointRecord>,
    /// Defect `b₄(Ȳ) − b₂(Ȳ)`, the relative Picard number of `Y → Ȳ`.
    pub k: u64,
    /// Hodge numbers of the resolved threefold `Y`.
    pub hodge: Option<HodgeNumbers>,
}

/// Differences with respect to `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TopologyDeltas {
    pub b2_bar: i64,
    pub b2_tilde: i64,
    pub b3_bar: i64,
    pub b3_tilde: i64,
    pub b4_bar: i64,
    pub b4_tilde: i64,
    pub euler_bar: i64,
    pub euler_tilde: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HodgeReport {
    pub h11_y: u64,
    pub h21_y: u64,
    pub h11_tilde: u64,
    pub h21_tilde: u64,
    pub euler_y: i64,
    pub euler_bar: i64,
    pub euler_tilde: i64,
}

/// `h⁰ = 0` forces rigidity; a positive `h⁰` decides nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rigidity {
    Rigid,
    Inconclusive,
}

impl core::fmt::Display for Rigidity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Rigidity::Rigid => "rigid",
            Rigidity::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionReport {
    pub n: u64,
    pub m: u64,
    pub tau: u64,
    pub k: u64,
    pub c_prime: i64,
    pub c_second: i64,
    pub c: i64,
    pub bideg: (u64, i64),
    /// `h⁰(R¹φ_*Θ_Y)`.
    pub h0: i64,
    /// Every point is weighted homogeneous and `n = m`.
    pub conifold_wh: bool,
    /// `h⁰ = 0`, which implies rigidity. `false` is inconclusive.
    pub rigid_hint: bool,
    pub rigidity: Rigidity,
    pub deltas: TopologyDeltas,
    pub hodge: Option<HodgeReport>,
    pub warnings: Vec<String>,
}

fn invalid(msg: String) -> Error {
    Error::InvalidTransition(msg)
}

/// Recomputes `μ`, `τ` and the least index of every record that carries a
/// local equation; variables are taken in order of appearance.
pub fn validate_points(points: &[SingularPointRecord]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if p.least_index == 0 {
            return Err(invalid(format!("point {i}: least index must be at least 1")));
        }
        if p.tau > p.mu {
            return Err(invalid(format!("point {i}: tau {} exceeds mu {}", p.tau, p.mu)));
        }
        let Some(eq) = &p.local_equation else { continue };
        let ring = Ring::new(&infer_variables(eq))?;
        let f = parse_poly(eq, &ring)?;
        let mu = local_milnor_number(&f)? as u64;
        let (tau, _) = tyurina_number(&f)?;
        let n = u64::from(least_index_estimate(&f, &[], DEFAULT_TRIALS, DEFAULT_SEED)?);
        for (what, declared, computed) in [("mu", p.mu, mu), ("tau", p.tau, tau as u64), ("least_index", p.least_index, n)] {
            if declared != computed {
                return Err(Error::ValidationMismatch(format!(
                    "point {i}: declared {what} = {declared}, local equation gives {computed}"
                )));
            }
        }
    }
    Ok(())
}

fn sums(points: &[SingularPointRecord]) -> (u64, u64, u64) {
    points.iter().fold((0, 0, 0), |(n, m, t), p| (n + p.count * p.least_index, m + p.count * p.mu, t + p.count * p.tau))
}

/// Generalized Clemens formulas for a small transition.
pub fn clemens_report(data: &SmallTransitionData) -> Result<TransitionReport> {
    validate_points(&data.points)?;
    let (n, m, tau) = sums(&data.points);
    let k = data.k;
    if k > n {
        return Err(invalid(format!("defect k = {k} exceeds the resolution number n = {n}")));
    }
    if k > m {
        return Err(invalid(format!("defect k = {k} exceeds the global Milnor number m = {m}")));
    }
    let (ni, mi, ki, ti) = (n as i64, m as i64, k as i64, tau as i64);
    let c_prime = ni - ki;
    let c_second = mi - ki;
    if (c_prime + c_second) % 2 != 0 {
        return Err(invalid(format!("non-integral c = {}/2", c_prime + c_second)));
    }
    let c = (c_prime + c_second) / 2;
    if (2 * ti - mi - ni) % 2 != 0 {
        return Err(invalid(format!("non-integral h0 = {}/2", 2 * ti - mi - ni)));
    }
    let h0 = ti - (mi + ni) / 2;
    if h0 < 0 {
        return Err(invalid(format!("h0 = {h0} is negative: tau = {tau} < (m + n)/2")));
    }
    let deltas = TopologyDeltas {
        b2_bar: -ki,
        b2_tilde: -ki,
        b3_bar: c_prime,
        b3_tilde: c_prime + c_second,
        b4_bar: 0,
        b4_tilde: -ki,
        euler_bar: -ni,
        euler_tilde: -(ni + mi),
    };
    let hodge = match data.hodge {
        None => None,
        Some(h) => {
            if h.h11 < k {
                return Err(invalid(format!("h11(Y) = {} is smaller than k = {k}", h.h11)));
            }
            let euler_y = 2 * (h.h11 as i64 - h.h21 as i64);
            Some(HodgeReport {
                h11_y: h.h11,
                h21_y: h.h21,
                h11_tilde: h.h11 - k,
                h21_tilde: (h.h21 as i64 + c) as u64,
                euler_y,
                euler_bar: euler_y - ni,
                euler_tilde: euler_y - ni - mi,
            })
        }
    };
    let all_wh = data.points.iter().all(SingularPointRecord::is_weighted_homogeneous);
    let mut warnings = Vec::new();
    if k == 1 && c == 0 && n > 0 {
        warnings.push(String::from(
            "not smoothable: a primitive transition of degree 0 would smooth a single node to a Calabi-Yau",
        ));
    }
    Ok(TransitionReport {
        n,
        m,
        tau,
        k,
        c_prime,
        c_second,
        c,
        bideg: (k, c),
        h0,
        conifold_wh: all_wh && n == m,
        rigid_hint: h0 == 0,
        rigidity: if h0 == 0 { Rigidity::Rigid } else { Rigidity::Inconclusive },
        deltas,
        hodge,
        warnings,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConifoldVerdict {
    pub conifold: bool,
    pub reasons: Vec<String>,
}

/// Conifold test for transitions whose singular points are all weighted
/// homogeneous: conifold iff `n = m`, equivalently `h⁰ = 0`.
pub fn conifoldability_wh(data: &SmallTransitionData) -> Result<ConifoldVerdict> {
    if let Some(i) = data.points.iter().position(|p| !p.is_weighted_homogeneous()) {
        return Err(invalid(format!(
            "characterization inapplicable: point {i} has tau {} < mu {}",
            data.points[i].tau, data.points[i].mu
        )));
    }
    let report = clemens_report(data)?;
    let mut reasons = vec![
        if report.n == report.m {
            format!("resolution number n = {} equals global Milnor number m", report.n)
        } else {
            format!("resolution number n = {} differs from global Milnor number m = {}", report.n, report.m)
        },
        format!("h0 = {}", report.h0),
    ];
    reasons.extend(report.warnings.iter().cloned());
    Ok(ConifoldVerdict { conifold: report.n == report.m, reasons })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeIIReport {
    /// Degree of the exceptional del Pezzo surface.
    pub degree: u32,
    /// Gain in complex moduli, known for degrees up to 5.
    pub c_increment: Option<u32>,
}

pub fn type2_report(d: u32) -> Result<TypeIIReport> {
    if !(1..=8).contains(&d) {
        return Err(invalid(format!("del Pezzo degree {d} is outside 1..8")));
    }
    let c_increment = match d {
        1 => Some(29),
        2 => Some(17),
        3 => Some(11),
        4 => Some(7),
        5 => Some(5),
        _ => None,
    };
    Ok(TypeIIReport { degree: d, c_increment })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeIIIReport {
    pub genus: u32,
    /// `2g − 3`
    pub degree: i64,
    pub conifoldable: bool,
    /// `(1, 2g − 3)` for the conifold degeneration, when one exists.
    pub conifold_bideg: Option<(u64, i64)>,
    /// `2g − 2` nodes of the conifold degeneration.
    pub conifold_nodes: Option<u64>,
    pub unsmoothable: bool,
    pub notes: Vec<String>,
}

/// Type III transition contracting a conic bundle over a curve of genus `g`.
pub fn type3_report(genus: u32, e3: Option<i64>) -> TypeIIIReport {
    let degree = 2 * i64::from(genus) - 3;
    let conifoldable = genus >= 2;
    let mut notes = Vec::new();
    let mut unsmoothable = false;
    if !conifoldable {
        notes.push(String::from("no conifold degeneration; the meaning of the degree is open"));
    }
    if genus == 0 {
        if let Some(e) = e3 {
            if e == 7 || e == 8 {
                unsmoothable = true;
                notes.push(format!("E^3 = {e}: the contracted threefold is projectively unsmoothable"));
            } else if e > 8 {
                notes.push(format!("E^3 = {e} exceeds the admissible range"));
            }
        }
    }
    TypeIIIReport {
        genus,
        degree,
        conifoldable,
        conifold_bideg: conifoldable.then_some((1, degree)),
        conifold_nodes: conifoldable.then(|| 2 * u64::from(genus) - 2),
        unsmoothable,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_transition() {
        let r = clemens_report(&SmallTransitionData { points: vec![], k: 0, hodge: None }).unwrap();
        assert_eq!((r.n, r.m, r.tau, r.c, r.h0), (0, 0, 0, 0, 0));
    }

    #[test]
    fn single_node_is_flagged() {
        let data = SmallTransitionData { points: vec![SingularPointRecord::node(1)], k: 1, hodge: None };
        let v = conifoldability_wh(&data).unwrap();
        assert!(v.conifold);
        assert!(v.reasons.iter().any(|r| r.contains("not smoothable")));
    }

    #[test]
    fn invariant_violations() {
        let odd = SmallTransitionData {
            points: vec![SingularPointRecord::node(2), SingularPointRecord::new(1, 1, 2, 2)],
            k: 1,
            hodge: None,
        };
        assert!(clemens_report(&odd).is_err());
        let big_k = SmallTransitionData { points: vec![SingularPointRecord::node(2)], k: 3, hodge: None };
        assert!(clemens_report(&big_k).is_err());
        // tau below (m + n)/2
        let low_tau = SmallTransitionData { points: vec![SingularPointRecord::new(1, 1, 5, 1)], k: 1, hodge: None };
        assert!(clemens_report(&low_tau).is_err());
        let not_wh = SmallTransitionData { points: vec![SingularPointRecord::new(1, 1, 5, 4)], k: 1, hodge: None };
        assert!(conifoldability_wh(&not_wh).is_err());
    }

    #[test]
    fn hodge_deltas() {
        let data = SmallTransitionData {
            points: vec![SingularPointRecord::node(16)],
            k: 1,
            hodge: Some(HodgeNumbers { h11: 2, h21: 86 }),
        };
        let r = clemens_report(&data).unwrap();
        let h = r.hodge.unwrap();
        assert_eq!((h.h11_tilde, h.h21_tilde), (1, 101));
        assert_eq!(h.euler_tilde, 2 * (1 - 101));
    }

    #[test]
    fn degrees() {
        assert_eq!(type2_report(3).unwrap().c_increment, Some(11));
        assert_eq!(type2_report(7).unwrap().c_increment, None);
        assert!(type2_report(0).is_err());
        assert!(type2_report(9).is_err());
        let t = type3_report(2, None);
        assert_eq!((t.degree, t.conifoldable, t.conifold_nodes), (1, true, Some(2)));
        assert!(!type3_report(1, None).conifoldable);
        let t0 = type3_report(0, Some(7));
        assert_eq!(t0.degree, -3);
        assert!(t0.unsmoothable);
    }
}
