//! Compositions, partitions, contingency matrices, permutations and the
//! polynomial `gl_n` weight data used by the duality checks.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linear::Rational;
use crate::{Error, Result};

/// Finite sequence of nonnegative integers. The empty composition is the
/// monoidal unit (degree 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

/// Integral weight in coordinates `(λ_1, …, λ_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl Composition {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn to_weight(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|&p| p as i64).collect())
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// `self ⊴ other` in dominance order (equal degrees required).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for k in 0..self.len().max(other.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }
}

impl WeightVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = T>) -> fmt::Result {
    let parts: Vec<String> = items.map(|x| x.to_string()).collect();
    write!(f, "({})", parts.join(","))
}

/// Deletes zero entries, keeping the order of the rest.
pub fn kappa(weight: &[i64]) -> Result<Composition> {
    if let Some(bad) = weight.iter().find(|&&x| x < 0) {
        return Err(Error::Domain(format!("negative entry {bad} in {weight:?}")));
    }
    Ok(Composition(weight.iter().filter(|&&x| x != 0).map(|&x| x as usize).collect()))
}

/// The partition in the symmetric-group orbit of `κ(μ)`.
pub fn dominating_partition(mu: &Composition) -> Partition {
    let mut parts: Vec<usize> = mu.0.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

/// Nonnegative integer matrix with prescribed row and column sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContingencyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl ContingencyMatrix {
    pub fn from_rows(rows: &[Vec<usize>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        ContingencyMatrix {
            rows: rows.len(),
            cols: ncols,
            entries: rows.concat(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.cols + j]
    }

    /// Row-major flattening `(A_11, A_12, …, A_mn)`, the shape of `M^A`.
    pub fn flattened(&self) -> &[usize] {
        &self.entries
    }

    pub fn flat_index(&self, i: usize, j: usize) -> usize {
        i * self.cols + j
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.entries.chunks(self.cols.max(1)).map(|r| r.iter().sum()).collect::<Vec<_>>()[..self.rows].to_vec()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        ContingencyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    /// `A + e_ij − e_{i,j+1}`, or `None` if an entry would go negative.
    pub fn shifted(&self, i: usize, j: usize, raise: bool) -> Option<Self> {
        let (from, to) = if raise { (j + 1, j) } else { (j, j + 1) };
        if self.get(i, from) == 0 {
            return None;
        }
        let mut out = self.clone();
        out.entries[i * self.cols + from] -= 1;
        out.entries[i * self.cols + to] += 1;
        Some(out)
    }
}

impl Serialize for ContingencyMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl fmt::Display for ContingencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

/// All matrices in `A^λ_μ` (row sums `λ`, column sums `μ`), listed in
/// descending lexicographic order of the row-major flattening.
pub fn enumerate_contingency(lambda: &[usize], mu: &[usize]) -> Result<Vec<ContingencyMatrix>> {
    let (dl, dm): (usize, usize) = (lambda.iter().sum(), mu.iter().sum());
    if dl != dm {
        return Err(Error::Domain(format!("row sums {lambda:?} and column sums {mu:?} have different totals")));
    }
    let mut out = Vec::new();
    let mut entries = vec![0; lambda.len() * mu.len()];
    let mut remaining = mu.to_vec();
    fill_rows(lambda, mu.len(), 0, &mut remaining, &mut entries, &mut out);
    Ok(out)
}

fn fill_rows(
    lambda: &[usize],
    ncols: usize,
    row: usize,
    remaining: &mut [usize],
    entries: &mut [usize],
    out: &mut Vec<ContingencyMatrix>,
) {
    if row == lambda.len() {
        if remaining.iter().all(|&r| r == 0) {
            out.push(ContingencyMatrix {
                rows: lambda.len(),
                cols: ncols,
                entries: entries.to_vec(),
            });
        }
        return;
    }
    fill_cells(lambda, ncols, row, 0, lambda[row], remaining, entries, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_cells(
    lambda: &[usize],
    ncols: usize,
    row: usize,
    col: usize,
    left: usize,
    remaining: &mut [usize],
    entries: &mut [usize],
    out: &mut Vec<ContingencyMatrix>,
) {
    if col == ncols {
        if left == 0 {
            fill_rows(lambda, ncols, row + 1, remaining, entries, out);
        }
        return;
    }
    let capacity_after: usize = remaining[col + 1..].iter().sum();
    let hi = left.min(remaining[col]);
    let lo = left.saturating_sub(capacity_after);
    for v in (lo..=hi).rev() {
        entries[row * ncols + col] = v;
        remaining[col] -= v;
        fill_cells(lambda, ncols, row, col + 1, left - v, remaining, entries, out);
        remaining[col] += v;
    }
    entries[row * ncols + col] = 0;
}

/// Weak compositions of `d` with exactly `n` parts (the weights `Λ(n,d)`),
/// in descending lexicographic order.
pub fn weak_compositions(d: usize, n: usize) -> Vec<Composition> {
    fn go(d: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            if d == 0 {
                out.push(Composition(prefix.clone()));
            }
            return;
        }
        if n == 1 {
            prefix.push(d);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for v in (0..=d).rev() {
            prefix.push(v);
            go(d - v, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with at most `max_len` parts, in descending
/// lexicographic order.
pub fn partitions(d: usize, max_len: usize) -> Vec<Partition> {
    fn go(d: usize, max_part: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if d == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(d)).rev() {
            prefix.push(p);
            go(d - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, max_len, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `d! / (λ_1! ⋯ λ_n!)`, the number of `λ`-tabloids.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let d: usize = parts.iter().sum();
    parts.iter().fold(factorial(d), |acc, &p| acc / factorial(p))
}

/// Binomial coefficient `C(a, t) = a(a−1)⋯(a−t+1)/t!` for any integer `a`;
/// zero when `t < 0`.
pub fn binomial(a: i64, t: i64) -> Rational {
    if t < 0 {
        return Rational::zero();
    }
    let mut num = BigInt::one();
    for k in 0..t {
        num *= BigInt::from(a - k);
    }
    Rational::new(num, factorial(t as usize))
}

/// `(2d−1)!! = 1·3·5⋯(2d−1)`, the number of perfect matchings on `2d` points.
pub fn double_factorial_odd(d: usize) -> BigInt {
    (1..=d).fold(BigInt::one(), |acc, k| acc * (2 * k - 1))
}

/// A permutation of `{0, …, d−1}` stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    /// Builds from a 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Domain("one-line notation is 1-based".into()));
        }
        Self::new(images.iter().map(|&i| i - 1).collect())
    }

    pub fn identity(d: usize) -> Self {
        Permutation((0..d).collect())
    }

    /// The transposition of `i` and `j` (0-based).
    pub fn transposition(d: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(d);
        p.0.swap(i, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.0.len()];
        let mut sign = 1;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// All permutations of degree `d` in lexicographic order of images.
    pub fn all(d: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..d).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// A word in adjacent transpositions `s_k = (k, k+1)` (0-based `k`) whose
    /// product `s_{k_1} ∘ s_{k_2} ∘ ⋯` equals `self`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // bubble sort the image list; each swap of positions k, k+1 is a
        // right multiplication by s_k
        let mut cur = self.0.clone();
        let mut word = Vec::new();
        let n = cur.len();
        for pass in 0..n {
            for k in 0..n.saturating_sub(pass + 1) {
                if cur[k] > cur[k + 1] {
                    cur.swap(k, k + 1);
                    word.push(k);
                }
            }
        }
        word.reverse();
        word
    }
}

/// Number of semistandard Young tableaux of shape `λ` with entries in
/// `{1, …, n}`, by direct backtracking; zero when `λ` has more than `n` rows.
pub fn gl_irrep_dimension(lambda: &Partition, n: usize) -> u64 {
    let mut count = 0u64;
    for_each_ssyt(lambda, n, &mut |_| count += 1);
    count
}

/// Visits the content vector of every SSYT of shape `λ` with entries `≤ n`.
pub fn for_each_ssyt(lambda: &Partition, n: usize, visit: &mut dyn FnMut(&[usize])) {
    if lambda.len() > n {
        return;
    }
    let shape = lambda.parts();
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0usize; n];
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if k == cells.len() {
            visit(content);
            return;
        }
        let (r, c) = cells[k];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=n {
            grid[r][c] = v;
            content[v - 1] += 1;
            go(cells, k + 1, n, grid, content, visit);
            content[v - 1] -= 1;
        }
    }
    go(&cells, 0, n, &mut grid, &mut content, visit);
}

/// The set of weights of the polynomial irreducible `V^λ` of `gl_n`: all
/// `μ ∈ ℤ^n_{≥0}` with `|μ| = |λ|` whose sorted rearrangement is dominated by
/// `λ`.
pub fn gl_weights_of_irrep(lambda: &WeightVector, n: usize) -> Result<BTreeSet<WeightVector>> {
    if !lambda.is_nonnegative() {
        return Err(Error::Unsupported(format!(
            "weight sets are only computed for polynomial weights, got {lambda}"
        )));
    }
    let parts: Vec<usize> = lambda.0.iter().map(|&x| x as usize).collect();
    let lambda = Partition::new(parts)?;
    if lambda.len() > n {
        return Ok(BTreeSet::new());
    }
    Ok(weak_compositions(lambda.degree(), n)
        .into_iter()
        .filter(|mu| dominating_partition(mu).dominated_by(&lambda))
        .map(|mu| mu.to_weight())
        .collect())
}
