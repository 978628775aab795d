use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LinMap, Rational};
use crate::{Error, Result};

type IntRow = Vec<(usize, BigInt)>;

/// Incremental row space over ℚ, kept in fraction-free semi-echelon form.
///
/// Every stored row is a primitive integer vector with a positive leading
/// coefficient, and no two stored rows share a leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<IntRow>,
    pivot_of: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a sparse rational row (entries sorted by column or not).
    /// Returns `true` when the row was independent of the current span.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        self.insert_int(integer_row(row))
    }

    pub fn insert_int(&mut self, mut row: IntRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|(c, _)| *c);
        while let Some((lead, _)) = row.first() {
            let Some(&pi) = self.pivot_of.get(lead) else {
                break;
            };
            row = eliminate(&row, &self.rows[pi]);
        }
        if row.is_empty() {
            return false;
        }
        make_primitive(&mut row);
        self.pivot_of.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Would the row be independent? Does not modify the span.
    pub fn is_independent(&self, row: &[(usize, Rational)]) -> bool {
        let mut row = integer_row(row);
        row.sort_by_key(|(c, _)| *c);
        while let Some((lead, _)) = row.first() {
            let Some(&pi) = self.pivot_of.get(lead) else {
                return true;
            };
            row = eliminate(&row, &self.rows[pi]);
        }
        false
    }
}

/// Clears denominators: scales a rational row by the lcm of its denominators.
fn integer_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    row.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect()
}

/// `p·row − a·pivot`, where `p`, `a` are the leading entries; kills the lead.
fn eliminate(row: &IntRow, pivot: &IntRow) -> IntRow {
    let a = &row[0].1;
    let p = &pivot[0].1;
    let g = a.gcd(p);
    let (a, p) = (a / &g, p / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, val) = if take_row {
            let v = &p * &row[i].1;
            i += 1;
            (row[i - 1].0, v)
        } else if take_piv {
            let v = -(&a * &pivot[j].1);
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = &p * &row[i].1 - &a * &pivot[j].1;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let negate = first.1.is_negative();
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Rank by fraction-free (Bareiss) elimination on a dense matrix.
pub fn bareiss_rank(matrix: &[Vec<Rational>]) -> usize {
    let nrows = matrix.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Rank by sparse fraction-free elimination of the columns.
pub fn sparse_rank(f: &LinMap) -> usize {
    let mut ech = Echelon::new();
    for c in 0..f.cols() {
        ech.insert(f.column(c));
    }
    ech.rank()
}

const DENSE_LIMIT: usize = 64;

/// Rank over ℚ. Small matrices go through dense Bareiss elimination, larger
/// ones through the sparse engine.
pub fn rank(f: &LinMap) -> usize {
    if f.rows() < DENSE_LIMIT && f.cols() < DENSE_LIMIT {
        bareiss_rank(&f.to_dense())
    } else {
        sparse_rank(f)
    }
}

fn is_diagonal(m: &LinMap) -> bool {
    (0..m.cols()).all(|c| m.column(c).iter().all(|(r, _)| *r == c))
}

fn diagonal(m: &LinMap) -> Vec<Rational> {
    (0..m.cols()).map(|c| m.get(c, c)).collect()
}

/// Dimension of `{X : X·A_k = B_k·X for all k}` for paired square actions
/// `A_k` on the source and `B_k` on the target space.
///
/// Pairs in which both matrices are diagonal are used to discard unknowns
/// `X_ij` with `b_i ≠ a_j` before elimination; the remaining pairs
/// contribute one equation per matrix position.
pub fn intertwiner_dimension(source_dim: usize, target_dim: usize, source_ops: &[LinMap], target_ops: &[LinMap]) -> Result<usize> {
    if source_ops.len() != target_ops.len() {
        return Err(Error::Boundary(format!(
            "{} source operators but {} target operators",
            source_ops.len(),
            target_ops.len()
        )));
    }
    check_common_space(source_dim, source_ops)?;
    check_common_space(target_dim, target_ops)?;
    let (m, n) = (target_dim, source_dim);

    let mut allowed = vec![true; m * n];
    let mut general = Vec::new();
    for (a, b) in source_ops.iter().zip(target_ops) {
        if is_diagonal(a) && is_diagonal(b) {
            let (da, db) = (diagonal(a), diagonal(b));
            for i in 0..m {
                for j in 0..n {
                    if db[i] != da[j] {
                        allowed[i * n + j] = false;
                    }
                }
            }
        } else {
            general.push((a, b));
        }
    }
    let mut unknown = vec![usize::MAX; m * n];
    let mut count = 0;
    for (idx, ok) in allowed.iter().enumerate() {
        if *ok {
            unknown[idx] = count;
            count += 1;
        }
    }

    let mut ech = Echelon::new();
    for (a, b) in general {
        let b_rows = b.transpose();
        for i in 0..m {
            for j in 0..n {
                // (X A)_{ij} - (B X)_{ij}
                let mut eq: HashMap<usize, Rational> = HashMap::new();
                for (k, v) in a.column(j) {
                    let u = unknown[i * n + k];
                    if u != usize::MAX {
                        *eq.entry(u).or_insert_with(Rational::zero) += v;
                    }
                }
                for (k, v) in b_rows.column(i) {
                    let u = unknown[k * n + j];
                    if u != usize::MAX {
                        *eq.entry(u).or_insert_with(Rational::zero) -= v;
                    }
                }
                let row: Vec<(usize, Rational)> = eq.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    ech.insert(&row);
                }
            }
        }
    }
    Ok(count - ech.rank())
}

/// Dimension of the joint commutant `{X : X·A = A·X}` of square operators on
/// a common `dim`-dimensional space.
pub fn commutant_dimension(dim: usize, ops: &[LinMap]) -> Result<usize> {
    intertwiner_dimension(dim, dim, ops, ops)
}

fn check_common_space(dim: usize, ops: &[LinMap]) -> Result<()> {
    let label = ops.first().map(|op| op.domain());
    for op in ops {
        if !op.is_square() || op.rows() != dim || Some(op.domain()) != label {
            return Err(Error::Boundary(format!(
                "operator {}->{} ({}x{}) does not act on the common {dim}-dimensional space",
                op.domain(),
                op.codomain(),
                op.rows(),
                op.cols()
            )));
        }
    }
    Ok(())
}
