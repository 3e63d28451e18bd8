//! Gröbner bases for global orders (Buchberger), standard bases for the local
//! order (Mora's tangent cone algorithm), normal forms and staircases.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{Monomial, MultiPoly, Rational, Ring, TermOrder};
use crate::{Error, Result};

/// An ideal given by generators; zero generators are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<MultiPoly>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<MultiPoly>) -> Result<Ideal> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), generators: generators.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// The ideal with one more generator.
    pub fn with(&self, g: MultiPoly) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.push(g);
        Ideal::new(&self.ring, gens)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of critical pairs taken from the queue.
    pub max_pairs: usize,
    /// Apply the product and chain criteria (global orders only).
    pub use_criteria: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: 100_000, use_criteria: true }
    }
}

/// Output of [`buchberger`] or [`mora_standard_basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasis {
    ring: Ring,
    order: TermOrder,
    basis: Vec<MultiPoly>,
    reduced: bool,
    local: bool,
}

/// Dimension of a quotient by a leading-term ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDim::Finite(n) => Some(n),
            QuotientDim::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardMonomials {
    Finite(Vec<Monomial>),
    Infinite,
}

/// Minimal generators of a monomial ideal and the monomials outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    pub generators: Vec<Monomial>,
    pub standard: StandardMonomials,
}

impl Staircase {
    pub fn from_generators(nvars: usize, generators: &[Monomial]) -> Staircase {
        let mut gens: Vec<Monomial> = Vec::new();
        for g in generators {
            if !generators.iter().any(|h| h != g && h.divides(g)) && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        gens.sort_by(monomial_display_order);
        let has_unit = gens.iter().any(Monomial::is_one);
        let mut bounds = vec![None; nvars];
        for g in &gens {
            if let Some((i, e)) = g.pure_power() {
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        if !has_unit && bounds.iter().any(Option::is_none) {
            return Staircase { generators: gens, standard: StandardMonomials::Infinite };
        }
        let mut out = Vec::new();
        if !has_unit {
            let mut exps = vec![0u32; nvars];
            enumerate_standard(&gens, &bounds, 0, &mut exps, &mut out);
        }
        out.sort_by(monomial_display_order);
        Staircase { generators: gens, standard: StandardMonomials::Finite(out) }
    }

    pub fn dimension(&self) -> QuotientDim {
        match &self.standard {
            StandardMonomials::Finite(v) => QuotientDim::Finite(v.len()),
            StandardMonomials::Infinite => QuotientDim::Infinite,
        }
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.generators.iter().any(|g| g.divides(m))
    }
}

/// Increasing degree, then the earlier variable first: `1, y, z, y^2, yz, z^2`.
pub fn monomial_display_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exponents().cmp(a.exponents()))
}

fn enumerate_standard(gens: &[Monomial], bounds: &[Option<u32>], var: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == exps.len() {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    let bound = bounds[var].expect("bounded");
    for e in 0..bound {
        exps[var] = e;
        // later variables at zero: if this prefix is already in the ideal, so is every extension
        let m = Monomial::new(exps.clone());
        if gens.iter().any(|g| g.divides(&m)) {
            break;
        }
        enumerate_standard(gens, bounds, var + 1, exps, out);
    }
    exps[var] = 0;
}

impl StandardBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_local(&self) -> bool {
        self.local
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading_term(&self.order).expect("nonzero").0).collect()
    }

    /// The basis generates the whole (local) ring.
    pub fn is_unit(&self) -> bool {
        self.leading_monomials().iter().any(Monomial::is_one)
    }

    pub fn staircase(&self) -> Staircase {
        Staircase::from_generators(self.ring.nvars(), &self.leading_monomials())
    }

    pub fn quotient_dimension(&self) -> QuotientDim {
        self.staircase().dimension()
    }

    /// Global orders: fully reduced remainder. Local order: Mora's weak normal
    /// form, whose leading term is not divisible by any leading monomial.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let g: Vec<Poly> = self.basis.iter().map(|p| Poly::from_multi(p, &self.order)).collect();
        let p = Poly::from_multi(f, &self.order);
        let r = if self.local {
            nf_mora(p, &g, &self.order, None)
        } else {
            reduce_full(p, &g, &self.order, None)
        };
        Ok(r.to_multi(&self.ring))
    }

    /// Division with quotients, `f = sum q_i g_i + r`. Global orders only.
    pub fn divide(&self, f: &MultiPoly) -> Result<Division> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if self.local {
            return Err(Error::OrderMismatch("division with quotients needs a global order"));
        }
        let g: Vec<Poly> = self.basis.iter().map(|p| Poly::from_multi(p, &self.order)).collect();
        let mut quotients = vec![MultiPoly::zero(&self.ring); g.len()];
        let r = reduce_full(Poly::from_multi(f, &self.order), &g, &self.order, Some(&mut quotients));
        Ok(Division { quotients, remainder: r.to_multi(&self.ring) })
    }
}

/// Record of a division: `f = sum quotients[i] * basis[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<MultiPoly>,
    pub remainder: MultiPoly,
}

/// Terms sorted in decreasing order.
#[derive(Debug, Clone)]
struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    fn from_multi(p: &MultiPoly, order: &TermOrder) -> Poly {
        let mut terms: Vec<(Monomial, Rational)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { terms }
    }

    fn to_multi(&self, ring: &Ring) -> MultiPoly {
        MultiPoly::from_terms(ring, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    fn ecart(&self) -> u32 {
        let top = self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        top - self.lm().degree()
    }

    /// Drops the terms of degree at least `d`, keeping the leading term.
    fn truncate(&mut self, d: u32) {
        let mut first = true;
        self.terms.retain(|t| core::mem::replace(&mut first, false) || t.0.degree() < d);
    }

    fn monic(mut self) -> Poly {
        if let Some(lc) = self.terms.first().map(|t| t.1.clone()) {
            if !lc.is_one() {
                let inv = lc.recip();
                for t in &mut self.terms {
                    t.1 *= &inv;
                }
            }
        }
        self
    }

    /// `self - c * m * g`, merging two sorted term lists.
    fn sub_scaled(&self, c: &Rational, m: &Monomial, g: &Poly, order: &TermOrder) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm * m, gc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, -bc));
                }
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let v = ac - bc;
                    if !v.is_zero() {
                        out.push((am.clone(), v));
                    }
                }
            }
        }
        Poly { terms: out }
    }
}

fn spoly(f: &Poly, g: &Poly, order: &TermOrder) -> Poly {
    let l = f.lm().lcm(g.lm());
    let mf = l.checked_div(f.lm()).unwrap();
    let mg = l.checked_div(g.lm()).unwrap();
    let scaled_f = Poly { terms: Vec::new() }.sub_scaled(&-f.lc().recip(), &mf, f, order);
    scaled_f.sub_scaled(&g.lc().recip(), &mg, g, order)
}

/// S-polynomial of two nonzero polynomials, normalised by leading coefficients.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &TermOrder) -> Result<MultiPoly> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(spoly(&Poly::from_multi(f, order), &Poly::from_multi(g, order), order).to_multi(f.ring()))
}

fn reduce_full(f: Poly, g: &[Poly], order: &TermOrder, mut quotients: Option<&mut Vec<MultiPoly>>) -> Poly {
    let mut p = f;
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while !p.is_zero() {
        let (m, c) = p.terms[0].clone();
        match g.iter().position(|gi| gi.lm().divides(&m)) {
            Some(i) => {
                let q = m.checked_div(g[i].lm()).unwrap();
                let coef = &c / g[i].lc();
                if let Some(qs) = quotients.as_deref_mut() {
                    let ring = qs[i].ring().clone();
                    qs[i] = &qs[i] + &MultiPoly::monomial(&ring, q.clone(), coef.clone());
                }
                p = p.sub_scaled(&coef, &q, &g[i], order);
            }
            None => {
                rem.push(p.terms.remove(0));
            }
        }
    }
    Poly { terms: rem }
}

/// With `corner = Some(d)` every monomial of degree `d` lies in the ideal,
/// so such terms are discarded.
fn nf_mora(f: Poly, g: &[Poly], order: &TermOrder, corner: Option<u32>) -> Poly {
    let mut h = f;
    let mut extra: Vec<Poly> = Vec::new();
    loop {
        if let Some(d) = corner {
            if h.terms.first().is_some_and(|t| t.0.degree() >= d) {
                return Poly { terms: Vec::new() };
            }
            h.truncate(d);
        }
        if h.is_zero() {
            break;
        }
        let lm = h.lm().clone();
        let best = g
            .iter()
            .chain(extra.iter())
            .filter(|t| t.lm().divides(&lm))
            .min_by_key(|t| t.ecart());
        let Some(t) = best else { break };
        let t = t.clone();
        if t.ecart() > h.ecart() {
            extra.push(h.clone());
        }
        let q = lm.checked_div(t.lm()).unwrap();
        let coef = h.lc() / t.lc();
        h = h.sub_scaled(&coef, &q, &t, order);
    }
    h
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn select_pair(pairs: &mut Vec<Pair>, order: &TermOrder) -> Pair {
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let c = a
            .lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| order.cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
        if c == Ordering::Less {
            best = k;
        }
    }
    pairs.swap_remove(best)
}

/// With `corner = Some(d)` the local computation works modulo `m^d`.
fn completion(ideal: &Ideal, order: &TermOrder, config: &GroebnerConfig, local: bool, corner: Option<u32>) -> Result<Vec<Poly>> {
    let mut g: Vec<Poly> = ideal.generators.iter().map(|p| Poly::from_multi(p, order).monic()).collect();
    let unit = |p: &Poly| p.lm().is_one();
    if let Some(u) = g.iter().find(|p| unit(p)) {
        return Ok(vec![u.clone()]);
    }
    let criteria = config.use_criteria && !local;
    let mut corner = corner;
    if let Some(d) = corner {
        g.retain(|p| p.lm().degree() < d);
        for p in &mut g {
            p.truncate(d);
        }
    }
    if local {
        update_corner(&mut g, &mut corner);
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push(Pair { i, j, lcm: g[i].lm().lcm(g[j].lm()) });
            pending.insert((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        if processed >= config.max_pairs {
            return Err(Error::BudgetExceeded { pairs: processed });
        }
        processed += 1;
        let pair = select_pair(&mut pairs, order);
        pending.remove(&(pair.i, pair.j));
        if criteria {
            if g[pair.i].lm().is_coprime(g[pair.j].lm()) {
                continue;
            }
            let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
            let chain = (0..g.len()).any(|k| {
                k != pair.i
                    && k != pair.j
                    && g[k].lm().divides(&pair.lcm)
                    && !pending.contains(&key(pair.i, k))
                    && !pending.contains(&key(pair.j, k))
            });
            if chain {
                continue;
            }
        }
        let s = spoly(&g[pair.i], &g[pair.j], order);
        let h = if local { nf_mora(s, &g, order, corner) } else { reduce_full(s, &g, order, None) };
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if unit(&h) {
            return Ok(vec![h]);
        }
        let j = g.len();
        for i in 0..j {
            pairs.push(Pair { i, j, lcm: g[i].lm().lcm(h.lm()) });
            pending.insert((i, j));
        }
        g.push(h);
        if local {
            update_corner(&mut g, &mut corner);
        }
    }
    Ok(g)
}

/// Highest corner: once the leading monomials leave finitely many standard
/// monomials, all of degree below `d`, the localisation contains `m^d` and
/// higher terms can be dropped.
fn update_corner(g: &mut [Poly], corner: &mut Option<u32>) {
    let Some(nvars) = g.first().map(|p| p.lm().nvars()) else { return };
    let lms: Vec<Monomial> = g.iter().map(|p| p.lm().clone()).collect();
    let StandardMonomials::Finite(ms) = Staircase::from_generators(nvars, &lms).standard else { return };
    let d = ms.iter().map(Monomial::degree).max().map_or(0, |m| m + 1);
    if corner.is_none_or(|c| d < c) {
        *corner = Some(d);
        for p in g.iter_mut() {
            p.truncate(d);
        }
    }
}

/// Drops elements whose leading monomial is divisible by another's (first
/// occurrence wins on ties).
fn minimize(g: Vec<Poly>) -> Vec<Poly> {
    let mut keep: Vec<Poly> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(l, q)| {
            l != k && q.lm().divides(p.lm()) && (q.lm() != p.lm() || l < k)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    keep
}

/// Reduced Gröbner basis for a global order, with default settings.
pub fn buchberger(ideal: &Ideal, order: &TermOrder) -> Result<StandardBasis> {
    buchberger_with(ideal, order, &GroebnerConfig::default())
}

pub fn buchberger_with(ideal: &Ideal, order: &TermOrder, config: &GroebnerConfig) -> Result<StandardBasis> {
    if order.is_local() {
        return Err(Error::OrderMismatch("Buchberger's algorithm needs a global order"));
    }
    check_weights(order, ideal.ring.nvars())?;
    let g = minimize(completion(ideal, order, config, false, None)?);
    let mut reduced: Vec<Poly> = Vec::with_capacity(g.len());
    for (k, p) in g.iter().enumerate() {
        let others: Vec<Poly> = g.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, q)| q.clone()).collect();
        let head = Poly { terms: vec![p.terms[0].clone()] };
        let tail = reduce_full(Poly { terms: p.terms[1..].to_vec() }, &others, order, None);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        reduced.push(Poly { terms }.monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(StandardBasis {
        ring: ideal.ring.clone(),
        order: order.clone(),
        basis: reduced.iter().map(|p| p.to_multi(&ideal.ring)).collect(),
        reduced: true,
        local: false,
    })
}

fn check_weights(order: &TermOrder, nvars: usize) -> Result<()> {
    if let TermOrder::WeightedDeg(w) = order {
        if w.len() != nvars || w.iter().any(|x| *x <= Rational::zero()) {
            return Err(Error::OrderMismatch("weights must be positive, one per variable"));
        }
    }
    Ok(())
}

/// Standard basis for the local order via Mora's tangent cone algorithm.
pub fn mora_standard_basis(ideal: &Ideal, order: &TermOrder) -> Result<StandardBasis> {
    mora_standard_basis_with(ideal, order, &GroebnerConfig::default())
}

pub fn mora_standard_basis_with(ideal: &Ideal, order: &TermOrder, config: &GroebnerConfig) -> Result<StandardBasis> {
    if order.is_global() {
        return Err(Error::OrderMismatch("Mora's algorithm needs a local order"));
    }
    let basis = match buchberger_with(ideal, &TermOrder::DegRevLex, config)?.quotient_dimension() {
        QuotientDim::Finite(bound) => mora_modulo_powers(ideal, order, config, bound)?,
        QuotientDim::Infinite => {
            let mut g = minimize(completion(ideal, order, config, true, None)?);
            g.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
            g.iter().map(|p| p.to_multi(&ideal.ring)).collect()
        }
    };
    Ok(StandardBasis { ring: ideal.ring.clone(), order: order.clone(), basis, reduced: false, local: true })
}

/// Standard bases of `I + m^d` for growing `d`. When the quotient
/// dimensions at `d` and `d + 1` agree, `m^d` lies in the localisation of
/// `I` (Nakayama), so the basis at `d`, completed by the monomials of degree
/// `d`, is a standard basis of `I`. The local dimension is at most `bound`,
/// so agreement happens by `d = bound + 1`.
fn mora_modulo_powers(ideal: &Ideal, order: &TermOrder, config: &GroebnerConfig, bound: usize) -> Result<Vec<MultiPoly>> {
    let n = ideal.ring.nvars();
    let truncated = |d: u32| -> Result<(Vec<Poly>, Vec<Monomial>, usize)> {
        let g = minimize(completion(ideal, order, config, true, Some(d))?);
        let mut lms: Vec<Monomial> = g.iter().map(|p| p.lm().clone()).collect();
        let corner: Vec<Monomial> =
            all_monomials_of_degree(n, d).into_iter().filter(|m| !lms.iter().any(|l| l.divides(m))).collect();
        lms.extend(corner.iter().cloned());
        let dim = Staircase::from_generators(n, &lms).dimension().finite().unwrap_or(usize::MAX);
        Ok((g, corner, dim))
    };
    let mut d = 1u32;
    loop {
        let (g, corner, dim) = truncated(d)?;
        let stable = dim == 0 || truncated(d + 1)?.2 == dim;
        if stable || d as usize > bound {
            let mut g: Vec<Poly> = g;
            g.extend(corner.into_iter().map(|m| Poly { terms: vec![(m, Rational::one())] }));
            g.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
            return Ok(g.iter().map(|p| p.to_multi(&ideal.ring)).collect());
        }
        d = (2 * d).min(bound as u32 + 1);
    }
}

fn all_monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(0, d, &mut vec![0; n], &mut out);
    }
    out
}

/// Global quotient dimension of `k[x]/I` (DegRevLex basis).
pub fn global_quotient_dimension(ideal: &Ideal) -> Result<QuotientDim> {
    Ok(buchberger(ideal, &TermOrder::DegRevLex)?.quotient_dimension())
}

/// Dimension of the localisation of `k[x]/I` at the origin.
pub fn m_primary_dimension_at_origin(ideal: &Ideal) -> Result<usize> {
    match mora_standard_basis(ideal, &TermOrder::LocalDegRevLex)?.quotient_dimension() {
        QuotientDim::Finite(n) => Ok(n),
        QuotientDim::Infinite => Err(Error::NonIsolated),
    }
}

/// Radical membership: `f` vanishes on `V(I)` iff `1 ∈ I + (1 - s f)`.
pub fn in_radical(f: &MultiPoly, ideal: &Ideal) -> Result<bool> {
    if f.ring() != &ideal.ring {
        return Err(Error::RingMismatch);
    }
    let mut name = alloc::string::String::from("s");
    while ideal.ring.index_of(&name).is_some() {
        name = format!("{name}_");
    }
    let ext = ideal.ring.extended(&[name.as_str()])?;
    let n = ideal.ring.nvars();
    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut gens: Vec<MultiPoly> = ideal.generators.iter().map(|g| g.embed(&ext, &map)).collect::<Result<_>>()?;
    let s = MultiPoly::variable(&ext, n);
    gens.push(&MultiPoly::one(&ext) - &(&s * &f.embed(&ext, &map)?));
    let gb = buchberger(&Ideal::new(&ext, gens)?, &TermOrder::DegRevLex)?;
    Ok(gb.is_unit())
}

/// `V(I) ⊆ {0}`: every variable lies in the radical.
pub fn variety_is_origin(ideal: &Ideal) -> Result<bool> {
    for i in 0..ideal.ring.nvars() {
        if !in_radical(&MultiPoly::variable(&ideal.ring, i), ideal)? {
            return Ok(false);
        }
    }
    Ok(true)
}
