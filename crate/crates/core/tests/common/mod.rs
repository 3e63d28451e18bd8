//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use singtrans_core::groebner::{Staircase, StandardMonomials};
use singtrans_core::{Monomial, MultiPoly, Rational, Ring};

pub const PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

/// Exponent vectors of total degree at most `d`.
pub fn monomials_upto(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn int_mod(n: &BigInt, p: u64) -> u64 {
    let r = (n.abs() % BigInt::from(p)).to_u64().unwrap();
    if n.is_negative() && r != 0 {
        p - r
    } else {
        r
    }
}

/// `None` when the prime divides the denominator.
fn rat_mod(q: &Rational, p: u64) -> Option<u64> {
    let d = int_mod(q.denom(), p);
    if d == 0 {
        return None;
    }
    Some(((int_mod(q.numer(), p) as u128 * pow_mod(d, p - 2, p) as u128) % p as u128) as u64)
}

/// Echelon form over `F_p` with columns in the given order; returns the
/// pivot columns, or `None` if the prime divides a denominator.
fn pivots_mod(rows: &[Vec<(usize, Rational)>], ncols: usize, p: u64) -> Option<Vec<usize>> {
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for row in rows {
        let mut v = vec![0u64; ncols];
        for (c, q) in row {
            v[*c] = rat_mod(q, p)?;
        }
        for c in 0..ncols {
            if v[c] == 0 {
                continue;
            }
            match pivots.get(&c) {
                Some(prow) => {
                    let f = v[c];
                    for j in c..ncols {
                        if prow[j] != 0 {
                            v[j] = (v[j] + p - f * prow[j] % p) % p;
                        }
                    }
                }
                None => {
                    let inv = pow_mod(v[c], p - 2, p);
                    for x in v[c..].iter_mut() {
                        *x = *x * inv % p;
                    }
                    pivots.insert(c, v);
                    break;
                }
            }
        }
    }
    Some(pivots.into_keys().collect())
}

/// `dim R_{≤d} / (span{ m·f : deg(m·f) ≤ big } ∩ R_{≤d})` over `F_p`. For
/// `big` large enough the intersection is `I ∩ R_{≤d}`.
pub fn truncated_count(ring: &Ring, gens: &[MultiPoly], d: u32, big: u32, p: u64) -> Option<usize> {
    let n = ring.nvars();
    let mut cols = monomials_upto(n, big);
    // highest degree first, so the rows with low pivots span the intersection
    cols.sort_by_key(|e| std::cmp::Reverse(e.iter().sum::<u32>()));
    let index: HashMap<Vec<u32>, usize> = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    for f in gens {
        let Some(df) = f.total_degree() else { continue };
        if df > big {
            continue;
        }
        for m in monomials_upto(n, big - df) {
            let row = f
                .terms()
                .map(|(t, c)| {
                    let e: Vec<u32> = t.exponents().iter().zip(&m).map(|(a, b)| a + b).collect();
                    (index[&e], c.clone())
                })
                .collect();
            rows.push(row);
        }
    }
    let low = cols.iter().filter(|e| e.iter().sum::<u32>() <= d).count();
    let pivots = pivots_mod(&rows, cols.len(), p)?;
    let in_low = pivots.iter().filter(|&&c| cols[c].iter().sum::<u32>() <= d).count();
    Some(low - in_low)
}

/// Monomials of degree at most `d` outside the monomial ideal.
pub fn staircase_count(nvars: usize, leading: &[Monomial], d: u32) -> usize {
    monomials_upto(nvars, d)
        .into_iter()
        .filter(|e| {
            let m = Monomial::new(e.clone());
            !leading.iter().any(|l| l.divides(&m))
        })
        .count()
}

pub fn random_rational(rng: &mut ChaCha8Rng, height: i64) -> Rational {
    let n = rng.gen_range(1..=height) * if rng.gen_bool(0.5) { -1 } else { 1 };
    let d = rng.gen_range(1..=3);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A random ideal in at most three variables, at most three generators of
/// degree at most four.
pub fn random_ideal(rng: &mut ChaCha8Rng) -> (Ring, Vec<MultiPoly>) {
    let names = ["x", "y", "z"];
    let nvars = rng.gen_range(1..=3);
    let ring = Ring::new(&names[..nvars]).unwrap();
    let ngens = rng.gen_range(1..=3);
    let gens = (0..ngens)
        .map(|_| {
            let nterms = rng.gen_range(1..=4);
            let terms: Vec<(Monomial, Rational)> = (0..nterms)
                .map(|_| {
                    let deg = rng.gen_range(0..=4u32);
                    let mut e = vec![0u32; nvars];
                    for _ in 0..deg {
                        e[rng.gen_range(0..nvars)] += 1;
                    }
                    (Monomial::new(e), random_rational(rng, 5))
                })
                .collect();
            MultiPoly::from_terms(&ring, terms)
        })
        .filter(|g| !g.is_zero())
        .collect();
    (ring, gens)
}

/// Dense counts bound the staircase count at degree `d` from above and meet
/// it for some truncation degree up to `cap`. For a finite staircase `d` is
/// its top degree, so agreement is agreement of quotient dimensions.
pub fn dimension_agreement(ring: &Ring, gens: &[MultiPoly], leading: &[Monomial], cap: u32) -> Result<u32, String> {
    let n = ring.nvars();
    let gen_deg = gens.iter().filter_map(MultiPoly::total_degree).max().unwrap_or(0);
    let lead_deg = leading.iter().map(Monomial::degree).max().unwrap_or(0);
    let staircase = Staircase::from_generators(n, leading);
    let d = match &staircase.standard {
        StandardMonomials::Finite(ms) => ms.iter().map(Monomial::degree).max().unwrap_or(0).max(lead_deg),
        StandardMonomials::Infinite => lead_deg.max(gen_deg) + 1,
    };
    let st = staircase_count(n, leading, d);
    for big in d.max(gen_deg)..=cap {
        let counts: Vec<usize> = PRIMES.iter().filter_map(|&p| truncated_count(ring, gens, d, big, p)).collect();
        let best = *counts.iter().min().ok_or("every prime divides a denominator")?;
        if best < st {
            return Err(format!("truncation {big}: dense count {best} below staircase count {st} at degree {d}"));
        }
        if best == st {
            return Ok(big);
        }
    }
    Err(format!("no agreement at degree {d} up to truncation {cap}"))
}
