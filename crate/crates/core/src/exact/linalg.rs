//! Dense linear algebra over the rationals and a ring-generic determinant.

use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use super::rational::Rational;

/// Laplace expansion by rows over column subsets (`n * 2^(n-1)` products).
///
/// Works over any commutative ring; `zero` is the additive identity of the
/// entries (needed because e.g. multivariate polynomials carry an arity).
pub fn laplace_det<T>(m: &[Vec<T>], zero: &T, one: &T) -> T
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    assert!(n <= 20, "laplace_det is exponential in n");
    // minors[mask] = det(rows 0..popcount(mask), columns in mask).
    let mut minors: Vec<Option<T>> = vec![None; 1 << n];
    minors[0] = Some(one.clone());
    for mask in 0usize..(1 << n) {
        let Some(minor) = minors[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            return minor;
        }
        for (c, entry) in m[row].iter().enumerate() {
            if mask & (1 << c) != 0 {
                continue;
            }
            // Sign from the number of chosen columns to the right of c.
            let above = (mask >> (c + 1)).count_ones();
            let mut term = entry * &minor;
            if above % 2 == 1 {
                term = -&term;
            }
            let slot = &mut minors[mask | (1 << c)];
            *slot = Some(match slot.take() {
                Some(acc) => &acc + &term,
                None => term,
            });
        }
    }
    minors[(1 << n) - 1].take().unwrap_or_else(|| zero.clone())
}

/// Reduced row echelon form. Returns the reduced rows and pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    (a, pivots)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows).1.len()
}

/// Basis of the right kernel `{x : A x = 0}`, `ncols` being the number of columns.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    if rows.is_empty() {
        return (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
    }
    let (r, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant by fraction-tracking Gaussian elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Rational::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].recip();
        for i in (c + 1)..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let x = &f * &a[c][j];
                a[i][j] -= x;
            }
        }
    }
    d
}

/// Solves `sum_j x_j * cols[j] = target` when a solution exists.
pub fn solve_combination(cols: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let nrows = target.len();
    let k = cols.len();
    let aug: Vec<Vec<Rational>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[i][k].clone();
    }
    Some(x)
}
