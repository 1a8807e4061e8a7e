use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// and each diagonal entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfDecomposition {
    /// Nonzero diagonal entries of `d`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i))
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

type Dense = Vec<Vec<BigInt>>;

fn identity(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// row_dst -= q * row_src
fn row_axpy(m: &mut Dense, dst: usize, src: usize, q: &BigInt) {
    let (a, b) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// col_dst -= q * col_src
fn col_axpy(m: &mut Dense, dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    }
}

fn swap_cols(m: &mut Dense, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// In-place diagonalization. Row operations are mirrored into `u`, column
/// operations into `v`, when those are supplied.
///
/// Pivot rule: the nonzero entry of least absolute value in the trailing
/// submatrix, ties broken by row-major position.
fn diagonalize(a: &mut Dense, mut u: Option<&mut Dense>, mut v: Option<&mut Dense>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => a[i][j].abs() < a[pi][pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { return };
            if pi != t {
                a.swap(pi, t);
                if let Some(u) = u.as_deref_mut() {
                    u.swap(pi, t);
                }
            }
            if pj != t {
                swap_cols(a, pj, t);
                if let Some(v) = v.as_deref_mut() {
                    swap_cols(v, pj, t);
                }
            }

            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    row_axpy(a, i, t, &q);
                    if let Some(u) = u.as_deref_mut() {
                        row_axpy(u, i, t, &q);
                    }
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    col_axpy(a, j, t, &q);
                    if let Some(v) = v.as_deref_mut() {
                        col_axpy(v, j, t, &q);
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }

            // Pivot must divide the whole trailing block.
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t]))
            });
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(a, t, i, &minus_one);
                    if let Some(u) = u.as_deref_mut() {
                        row_axpy(u, t, i, &minus_one);
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            if let Some(u) = u.as_deref_mut() {
                for x in u[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SnfDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.to_dense();
    let mut u = identity(r);
    let mut v = identity(c);
    diagonalize(&mut a, Some(&mut u), Some(&mut v));
    SnfDecomposition {
        d: IntegerMatrix::from_dense(r, c, a),
        u: IntegerMatrix::from_dense(r, r, u),
        v: IntegerMatrix::from_dense(c, c, v),
    }
}

/// Nonzero invariant factors of `m`, in divisibility order.
///
/// Works on the sparse form: unit pivots are eliminated first (Markowitz
/// cost, ties by position), which disposes of nearly all of a boundary
/// matrix; whatever is left is diagonalized densely.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut rows: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    let mut cols: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (i, j, x) in m.nonzero() {
        rows.entry(i).or_default().insert(j, x.clone());
        cols.entry(j).or_default().insert(i);
    }

    let mut units = 0usize;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        'scan: for (&r, row) in &rows {
            for (&c, x) in row {
                if !x.magnitude().is_one() {
                    continue;
                }
                let cost = (row.len() - 1) * (cols[&c].len() - 1);
                if best.is_none_or(|(b, _, _)| cost < b) {
                    best = Some((cost, r, c));
                    if cost == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((_, r, c)) = best else { break };
        let pivot_row = rows.remove(&r).unwrap();
        let p = pivot_row[&c].clone();
        for &j in pivot_row.keys() {
            let set = cols.get_mut(&j).unwrap();
            set.remove(&r);
        }
        let targets: Vec<usize> = cols[&c].iter().copied().collect();
        for i in targets {
            let row = rows.get_mut(&i).unwrap();
            let factor = &row[&c] * &p;
            for (&j, y) in &pivot_row {
                let entry = row.entry(j).or_insert_with(BigInt::zero);
                *entry -= &factor * y;
                if entry.is_zero() {
                    row.remove(&j);
                    cols.get_mut(&j).unwrap().remove(&i);
                } else {
                    cols.entry(j).or_default().insert(i);
                }
            }
            if row.is_empty() {
                rows.remove(&i);
            }
        }
        cols.retain(|_, s| !s.is_empty());
        units += 1;
    }

    let mut factors = vec![BigInt::one(); units];
    if !rows.is_empty() {
        let col_ids: Vec<usize> = cols.keys().copied().collect();
        let col_pos: BTreeMap<usize, usize> =
            col_ids.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut dense: Dense = rows
            .values()
            .map(|row| {
                let mut d = vec![BigInt::zero(); col_ids.len()];
                for (j, x) in row {
                    d[col_pos[j]] = x.clone();
                }
                d
            })
            .collect();
        diagonalize(&mut dense, None, None);
        for (k, row) in dense.iter().enumerate() {
            if k < row.len() && !row[k].is_zero() {
                factors.push(row[k].clone());
            }
        }
    }
    factors
}
