use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{Monomial, Rational};

/// Monomial order. `Lex` and `DegRevLex` use the ring's variable order
/// (first variable largest). `LocalDegRevLex` ranks lower total degree as
/// larger, so the constant monomial is the maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    DegRevLex,
    /// Positive weights, ties broken by `DegRevLex`.
    WeightedDeg(Vec<Rational>),
    LocalDegRevLex,
}

fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl TermOrder {
    pub fn is_local(&self) -> bool {
        matches!(self, TermOrder::LocalDegRevLex)
    }

    pub fn is_global(&self) -> bool {
        !self.is_local()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            TermOrder::Lex => ea.cmp(eb),
            TermOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(ea, eb)),
            TermOrder::LocalDegRevLex => b
                .degree()
                .cmp(&a.degree())
                .then_with(|| revlex(ea, eb)),
            TermOrder::WeightedDeg(w) => {
                let wa: Rational = ea.iter().zip(w).map(|(e, w)| w * Rational::from_integer((*e).into())).sum();
                let wb: Rational = eb.iter().zip(w).map(|(e, w)| w * Rational::from_integer((*e).into())).sum();
                wa.cmp(&wb)
                    .then_with(|| a.degree().cmp(&b.degree()))
                    .then_with(|| revlex(ea, eb))
            }
        }
    }
}
