//! Exact dense linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::poly::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Solution set `{ p + N t }` of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    /// Basis of the nullspace, one vector per free column.
    pub nullspace: Vec<Vec<Rational>>,
}

impl AffineSolution {
    pub fn point(&self, t: &[Rational]) -> Vec<Rational> {
        let mut x = self.particular.clone();
        for (v, ti) in self.nullspace.iter().zip(t) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += vi * ti;
            }
        }
        x
    }
}

/// Solves `A x = b` with `ncols` unknowns; `None` when inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Rational], ncols: usize) -> Option<AffineSolution> {
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.resize(ncols, Rational::zero());
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut particular = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -aug[r][f].clone();
            }
            v
        })
        .collect();
    Some(AffineSolution { particular, nullspace })
}

/// Congruence diagonalisation of a symmetric matrix: returns `(d, t)` with
/// `t^T h t = diag(d)` and `t` invertible. Nonzero entries of `d` come first.
pub fn congruence_diagonalize(h: &Matrix) -> (Vec<Rational>, Matrix) {
    let n = h.len();
    let mut a = h.clone();
    let mut t: Matrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let swap = |a: &mut Matrix, t: &mut Matrix, i: usize, j: usize| {
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in t.iter_mut() {
            row.swap(i, j);
        }
    };
    // column/row j += f * column/row i
    let add = |a: &mut Matrix, t: &mut Matrix, j: usize, i: usize, f: &Rational| {
        for row in a.iter_mut() {
            let d = f * &row[i];
            row[j] += d;
        }
        let ri = a[i].clone();
        for (x, y) in a[j].iter_mut().zip(&ri) {
            *x += f * y;
        }
        for row in t.iter_mut() {
            let d = f * &row[i];
            row[j] += d;
        }
    };
    for k in 0..n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap(&mut a, &mut t, k, p);
        } else {
            let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
            let Some((i, j)) = off else { break };
            add(&mut a, &mut t, i, j, &Rational::one());
            swap(&mut a, &mut t, k, i);
        }
        for j in k + 1..n {
            if a[k][j].is_zero() {
                continue;
            }
            let f = -(&a[k][j] / &a[k][k]);
            add(&mut a, &mut t, j, k, &f);
        }
    }
    let d = (0..n).map(|i| a[i][i].clone()).collect();
    (d, t)
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}
