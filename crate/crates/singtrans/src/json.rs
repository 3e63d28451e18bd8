//! JSON shapes of the reports and of the transition descriptor file.

use serde::{Deserialize, Serialize};
use singtrans_core::deformation::{AdjacencyRow, CriticalPoint, DeformationVector, LocusReport};
use singtrans_core::groebner::monomial_display_order;
use singtrans_core::singularity::GermReport;
use singtrans_core::transition::{
    ConifoldVerdict, HodgeNumbers, SingularPointRecord, SmallTransitionData, TransitionReport, TypeIIIReport,
    TypeIIReport,
};
use singtrans_core::{Monomial, Rational, Ring};

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn monomials(ms: &[Monomial], ring: &Ring) -> Vec<String> {
    let mut ms = ms.to_vec();
    ms.sort_by(monomial_display_order);
    ms.iter().map(|m| m.display(ring).to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GermJson {
    pub mu_local: usize,
    pub mu_global: Option<usize>,
    pub tau: usize,
    pub corank: usize,
    pub weights: Option<Vec<String>>,
    #[serde(rename = "type")]
    pub kind: String,
    pub t1_basis: Vec<String>,
}

impl GermJson {
    pub fn new(report: &GermReport, ring: &Ring) -> GermJson {
        GermJson {
            mu_local: report.mu_local,
            mu_global: report.mu_global,
            tau: report.tau,
            corank: report.hessian_corank,
            weights: report.weights.as_ref().map(|w| rationals(w.weights())),
            kind: report.kind.to_string(),
            t1_basis: monomials(&report.t1_basis, ring),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransitionKind {
    #[serde(rename = "small")]
    Small,
    #[serde(rename = "typeII")]
    TypeII,
    #[serde(rename = "typeIII")]
    TypeIII,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    pub count: u64,
    pub least_index: u64,
    pub mu: u64,
    pub tau: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local_equation: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeJson {
    #[serde(rename = "h11_Y")]
    pub h11: u64,
    #[serde(rename = "h21_Y")]
    pub h21: u64,
}

/// The transition descriptor file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Descriptor {
    pub kind: TransitionKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hodge: Option<HodgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delpezzo_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(rename = "E3", default, skip_serializing_if = "Option::is_none")]
    pub e3: Option<i64>,
}

/// A descriptor that passed the schema checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transition {
    Small(SmallTransitionData),
    TypeII { degree: u32 },
    TypeIII { genus: u32, e3: Option<i64> },
}

impl Descriptor {
    /// Checks that exactly the fields of the declared kind are present.
    pub fn validate(self) -> Result<Transition, String> {
        let extra = |name: &str, present: bool| {
            if present {
                Err(format!("field `{name}` is not allowed for kind {:?}", self.kind))
            } else {
                Ok(())
            }
        };
        match self.kind {
            TransitionKind::Small => {
                extra("delpezzo_degree", self.delpezzo_degree.is_some())?;
                extra("genus", self.genus.is_some())?;
                extra("E3", self.e3.is_some())?;
                let k = self.k.ok_or("small transitions need `k`")?;
                let points = self.points.clone().ok_or("small transitions need `points`")?;
                Ok(Transition::Small(SmallTransitionData {
                    points: points
                        .into_iter()
                        .map(|p| SingularPointRecord {
                            count: p.count,
                            least_index: p.least_index,
                            mu: p.mu,
                            tau: p.tau,
                            local_equation: p.local_equation,
                        })
                        .collect(),
                    k,
                    hodge: self.hodge.map(|h| HodgeNumbers { h11: h.h11, h21: h.h21 }),
                }))
            }
            TransitionKind::TypeII => {
                for (name, present) in [
                    ("k", self.k.is_some()),
                    ("points", self.points.is_some()),
                    ("hodge", self.hodge.is_some()),
                    ("genus", self.genus.is_some()),
                    ("E3", self.e3.is_some()),
                ] {
                    extra(name, present)?;
                }
                let degree = self.delpezzo_degree.ok_or("typeII transitions need `delpezzo_degree`")?;
                Ok(Transition::TypeII { degree })
            }
            TransitionKind::TypeIII => {
                for (name, present) in [
                    ("k", self.k.is_some()),
                    ("points", self.points.is_some()),
                    ("hodge", self.hodge.is_some()),
                    ("delpezzo_degree", self.delpezzo_degree.is_some()),
                ] {
                    extra(name, present)?;
                }
                let genus = self.genus.ok_or("typeIII transitions need `genus`")?;
                Ok(Transition::TypeIII { genus, e3: self.e3 })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltasJson {
    pub b2_bar: i64,
    pub b2_tilde: i64,
    pub b3_bar: i64,
    pub b3_tilde: i64,
    pub b4_bar: i64,
    pub b4_tilde: i64,
    pub euler_bar: i64,
    pub euler_tilde: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeReportJson {
    pub h11_y: u64,
    pub h21_y: u64,
    pub h11_tilde: u64,
    pub h21_tilde: u64,
    pub euler_y: i64,
    pub euler_bar: i64,
    pub euler_tilde: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallReportJson {
    pub kind: TransitionKind,
    pub n: u64,
    pub m: u64,
    pub tau: u64,
    pub k: u64,
    pub c_prime: i64,
    pub c_second: i64,
    pub c: i64,
    pub bideg: (u64, i64),
    pub h0: i64,
    pub conifold_wh: bool,
    pub rigid_hint: bool,
    pub rigidity: String,
    /// `None` when some point is not weighted homogeneous.
    pub conifold: Option<bool>,
    pub conifold_reasons: Vec<String>,
    pub deltas: DeltasJson,
    pub hodge: Option<HodgeReportJson>,
    pub warnings: Vec<String>,
}

impl SmallReportJson {
    pub fn new(r: &TransitionReport, verdict: Option<&ConifoldVerdict>) -> SmallReportJson {
        let d = &r.deltas;
        SmallReportJson {
            kind: TransitionKind::Small,
            n: r.n,
            m: r.m,
            tau: r.tau,
            k: r.k,
            c_prime: r.c_prime,
            c_second: r.c_second,
            c: r.c,
            bideg: r.bideg,
            h0: r.h0,
            conifold_wh: r.conifold_wh,
            rigid_hint: r.rigid_hint,
            rigidity: r.rigidity.to_string(),
            conifold: verdict.map(|v| v.conifold),
            conifold_reasons: verdict.map(|v| v.reasons.clone()).unwrap_or_default(),
            deltas: DeltasJson {
                b2_bar: d.b2_bar,
                b2_tilde: d.b2_tilde,
                b3_bar: d.b3_bar,
                b3_tilde: d.b3_tilde,
                b4_bar: d.b4_bar,
                b4_tilde: d.b4_tilde,
                euler_bar: d.euler_bar,
                euler_tilde: d.euler_tilde,
            },
            hodge: r.hodge.map(|h| HodgeReportJson {
                h11_y: h.h11_y,
                h21_y: h.h21_y,
                h11_tilde: h.h11_tilde,
                h21_tilde: h.h21_tilde,
                euler_y: h.euler_y,
                euler_bar: h.euler_bar,
                euler_tilde: h.euler_tilde,
            }),
            warnings: r.warnings.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeIIJson {
    pub kind: TransitionKind,
    pub degree: u32,
    pub c_increment: Option<u32>,
}

impl From<&TypeIIReport> for TypeIIJson {
    fn from(r: &TypeIIReport) -> TypeIIJson {
        TypeIIJson { kind: TransitionKind::TypeII, degree: r.degree, c_increment: r.c_increment }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeIIIJson {
    pub kind: TransitionKind,
    pub genus: u32,
    pub degree: i64,
    pub conifoldable: bool,
    pub conifold_bideg: Option<(u64, i64)>,
    pub conifold_nodes: Option<u64>,
    pub unsmoothable: bool,
    pub notes: Vec<String>,
}

impl From<&TypeIIIReport> for TypeIIIJson {
    fn from(r: &TypeIIIReport) -> TypeIIIJson {
        TypeIIIJson {
            kind: TransitionKind::TypeIII,
            genus: r.genus,
            degree: r.degree,
            conifoldable: r.conifoldable,
            conifold_bideg: r.conifold_bideg,
            conifold_nodes: r.conifold_nodes,
            unsmoothable: r.unsmoothable,
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyJson {
    pub constraints: Vec<String>,
    pub predicted: Option<String>,
    pub observed: Option<String>,
    pub agree: Option<bool>,
    pub lambda: Option<Vec<String>>,
    pub point: Option<[String; 2]>,
}

impl From<&AdjacencyRow> for AdjacencyJson {
    fn from(r: &AdjacencyRow) -> AdjacencyJson {
        AdjacencyJson {
            constraints: r.constraints.iter().map(ToString::to_string).collect(),
            predicted: r.predicted.map(|t| t.to_string()),
            observed: r.observed.map(|t| t.to_string()),
            agree: r.agree,
            lambda: r.lambda.as_deref().map(rationals),
            point: r.point.as_ref().map(|[y, z]| [y.to_string(), z.to_string()]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LociJson {
    pub in_l: bool,
    pub l_value: String,
    /// `ν_k` keyed by the locus name `Vk`.
    pub nu: Vec<(String, String)>,
    pub in_v: bool,
    pub v_prime: Option<String>,
    pub v_second: Option<String>,
}

impl From<&LocusReport> for LociJson {
    fn from(r: &LocusReport) -> LociJson {
        LociJson {
            in_l: r.in_l,
            l_value: r.l_value.to_string(),
            nu: r.nu.iter().map(|(k, v)| (format!("V{k}"), v.to_string())).collect(),
            in_v: r.in_v,
            v_prime: r.v_prime.as_ref().map(ToString::to_string),
            v_second: r.v_second.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalPointJson {
    pub point: [String; 2],
    pub loci: LociJson,
    /// Type of the singular point when it lies on the fibre `F_Λ = 0`.
    #[serde(rename = "type")]
    pub kind: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformJson {
    pub family: String,
    pub lambda: Vec<String>,
    pub polynomial: String,
    pub critical_points: Vec<CriticalPointJson>,
    pub irrational: bool,
}

impl DeformJson {
    pub fn new(dv: &DeformationVector, polynomial: String, points: &[(CriticalPoint, Option<String>)], irrational: bool) -> DeformJson {
        DeformJson {
            family: dv.family.to_string(),
            lambda: rationals(&dv.lambda),
            polynomial,
            critical_points: points
                .iter()
                .map(|(p, kind)| CriticalPointJson {
                    point: [p.coords[1].to_string(), p.coords[2].to_string()],
                    loci: LociJson::from(&p.loci),
                    kind: kind.clone(),
                })
                .collect(),
            irrational,
        }
    }
}
