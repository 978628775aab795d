//! Tensor spaces `⊗^d ℂ^{2n}` and `V^{r,s}`, the Lie algebra and Brauer
//! algebra actions on them, and the double-commutant comparison.
//!
//! Site basis order is `v_1, …, v_n, v_{−1}, …, v_{−n}`; matrix index `n+j`
//! is the vector `v_{−j}`. Tensor words are ordered lexicographically in
//! that order, first slot most significant.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{generator_word, walled_generator_word, walled_generators, BrauerElement, BrauerGen};
use crate::linear::{commutant_dimension, BasisLabel, Echelon, LinMap, Rational};
use crate::report::{InstanceResult, Report};
use crate::{Error, Result};

/// Which bimodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorKind {
    /// `⊗^d ℂ^{2n}` with `sp_{2n}` and `𝓑_d^{(−2n)}`.
    Sp,
    /// `⊗^d ℂ^{2n}` with `o_{2n}` and `𝓑_d^{(2n)}`.
    O,
    /// `⊗^r ℂ^n ⊗ ⊗^s ℂ^{*n}` with `gl_n` and the walled algebra `𝓑_{r,s}^{(n)}`.
    Mixed { r: usize, s: usize },
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorKind::Sp => write!(f, "sp"),
            TensorKind::O => write!(f, "o"),
            TensorKind::Mixed { r, s } => write!(f, "mixed({r},{s})"),
        }
    }
}

/// Tensor space with an explicit word basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTensorSpace {
    pub kind: TensorKind,
    pub n: usize,
    pub d: usize,
}

impl SignedTensorSpace {
    pub fn new(kind: TensorKind, n: usize, d: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("rank n must be positive".into()));
        }
        if let TensorKind::Mixed { r, s } = kind {
            if r + s != d {
                return Err(Error::Domain(format!("mixed split {r}+{s} does not sum to {d}")));
            }
        }
        Ok(SignedTensorSpace { kind, n, d })
    }

    pub fn sp(n: usize, d: usize) -> Result<Self> {
        Self::new(TensorKind::Sp, n, d)
    }

    pub fn mixed(n: usize, r: usize, s: usize) -> Result<Self> {
        Self::new(TensorKind::Mixed { r, s }, n, r + s)
    }

    fn split(&self) -> usize {
        match self.kind {
            TensorKind::Mixed { r, .. } => r,
            _ => self.d,
        }
    }

    /// Dimension of a single tensor factor.
    pub fn site_dim(&self) -> usize {
        match self.kind {
            TensorKind::Mixed { .. } => self.n,
            _ => 2 * self.n,
        }
    }

    pub fn dim(&self) -> usize {
        self.site_dim().pow(self.d as u32)
    }

    pub fn label(&self) -> BasisLabel {
        BasisLabel::from_descriptor(&format!("tensor:{}:{}:{}", self.kind, self.n, self.d))
    }

    /// Site digit (index into the site basis) of a signed vector index.
    fn digit(&self, slot: usize, i: i64) -> Option<usize> {
        let n = self.n as i64;
        if i == 0 || i.abs() > n {
            return None;
        }
        match self.kind {
            TensorKind::Mixed { r, .. } => {
                let positive = slot < r;
                (positive == (i > 0)).then(|| (i.unsigned_abs() - 1) as usize)
            }
            _ => Some(if i > 0 { (i - 1) as usize } else { (n - i - 1) as usize }),
        }
    }

    fn signed(&self, slot: usize, digit: usize) -> i64 {
        match self.kind {
            TensorKind::Mixed { r, .. } => {
                if slot < r {
                    digit as i64 + 1
                } else {
                    -(digit as i64 + 1)
                }
            }
            _ => {
                if digit < self.n {
                    digit as i64 + 1
                } else {
                    -((digit - self.n) as i64 + 1)
                }
            }
        }
    }

    pub fn digits(&self, index: usize) -> Vec<usize> {
        let base = self.site_dim();
        let mut out = vec![0; self.d];
        let mut x = index;
        for slot in (0..self.d).rev() {
            out[slot] = x % base;
            x /= base;
        }
        out
    }

    fn index_of_digits(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &g| acc * self.site_dim() + g)
    }

    /// The signed word `(i_1, …, i_d)` of a basis vector.
    pub fn word(&self, index: usize) -> Vec<i64> {
        self.digits(index).iter().enumerate().map(|(slot, &g)| self.signed(slot, g)).collect()
    }

    pub fn index_of(&self, word: &[i64]) -> Option<usize> {
        if word.len() != self.d {
            return None;
        }
        let digits: Option<Vec<usize>> = word.iter().enumerate().map(|(slot, &i)| self.digit(slot, i)).collect();
        digits.map(|g| self.index_of_digits(&g))
    }

    /// `Σ_k sign(i_k) ε_{|i_k|}`.
    pub fn weight(&self, index: usize) -> Vec<i64> {
        let mut w = vec![0; self.n];
        for i in self.word(index) {
            w[i.unsigned_abs() as usize - 1] += i.signum();
        }
        w
    }

    /// Basis indices of weight `λ`, ascending.
    pub fn weight_space(&self, lambda: &[i64]) -> Vec<usize> {
        if lambda.len() != self.n {
            return Vec::new();
        }
        (0..self.dim()).filter(|&i| self.weight(i) == lambda).collect()
    }

    /// Every weight occurring, ascending.
    pub fn weights(&self) -> Vec<Vec<i64>> {
        let set: std::collections::BTreeSet<Vec<i64>> = (0..self.dim()).map(|i| self.weight(i)).collect();
        set.into_iter().collect()
    }

    pub fn weight_label(&self, lambda: &[i64]) -> BasisLabel {
        BasisLabel::from_descriptor(&format!("weight:{}:{}:{}:{lambda:?}", self.kind, self.n, self.d))
    }
}

/// All basis words of `⊗^d ℂ^{2n}` of weight `λ`, in lexicographic order.
pub fn sp_weight_space_basis(n: usize, d: usize, lambda: &[i64]) -> Vec<Vec<i64>> {
    match SignedTensorSpace::sp(n, d) {
        Ok(space) => space.weight_space(lambda).into_iter().map(|i| space.word(i)).collect(),
        Err(_) => Vec::new(),
    }
}

/// The Lie algebra acting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LieAlgebra {
    Sp,
    O,
    Gl,
}

/// Named elements, 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieGen {
    E(usize),
    F(usize),
    /// `e_{j,n+j}` in `sp_{2n}`.
    X(usize),
    /// `e_{n+j,j}` in `sp_{2n}`.
    Y(usize),
    Z(usize),
    /// `e_{i,n+j} − e_{j,n+i}` in `o_{2n}`, `i < j`.
    Xo(usize, usize),
    /// `e_{n+j,i} − e_{n+i,j}` in `o_{2n}`, `i < j`.
    Yo(usize, usize),
    /// Matrix unit `e_{ij}`.
    Unit(usize, usize),
}

impl fmt::Display for LieGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieGen::E(i) => write!(f, "E{i}"),
            LieGen::F(i) => write!(f, "F{i}"),
            LieGen::X(j) => write!(f, "X{j}"),
            LieGen::Y(j) => write!(f, "Y{j}"),
            LieGen::Z(j) => write!(f, "Z{j}"),
            LieGen::Xo(i, j) => write!(f, "Xo{i},{j}"),
            LieGen::Yo(i, j) => write!(f, "Yo{i},{j}"),
            LieGen::Unit(i, j) => write!(f, "e{i},{j}"),
        }
    }
}

/// Matrix of a Lie algebra element on `ℂ^{2n}` (`sp`, `o`) or `ℂ^n` (`gl`).
pub fn lie_generator_matrix(algebra: LieAlgebra, gen: LieGen, n: usize) -> Result<LinMap> {
    let size = if algebra == LieAlgebra::Gl { n } else { 2 * n };
    let out_of_range = || Error::Domain(format!("{gen} is not an element of {algebra:?} with n = {n}"));
    let simple = |i: usize| i >= 1 && i < n;
    let node = |j: usize| j >= 1 && j <= n;
    // 1-based (row, col, value)
    let entries: Vec<(usize, usize, i64)> = match (algebra, gen) {
        (LieAlgebra::Gl, LieGen::E(i)) if simple(i) => vec![(i, i + 1, 1)],
        (LieAlgebra::Gl, LieGen::F(i)) if simple(i) => vec![(i + 1, i, 1)],
        (LieAlgebra::Gl, LieGen::Z(j)) if node(j) => vec![(j, j, 1)],
        (LieAlgebra::Gl, LieGen::Unit(i, j)) if node(i) && node(j) => vec![(i, j, 1)],
        (LieAlgebra::Sp | LieAlgebra::O, LieGen::E(i)) if simple(i) => vec![(i, i + 1, 1), (n + i + 1, n + i, -1)],
        (LieAlgebra::Sp | LieAlgebra::O, LieGen::F(i)) if simple(i) => vec![(i + 1, i, 1), (n + i, n + i + 1, -1)],
        (LieAlgebra::Sp | LieAlgebra::O, LieGen::Z(j)) if node(j) => vec![(j, j, 1), (n + j, n + j, -1)],
        (LieAlgebra::Sp, LieGen::X(j)) if node(j) => vec![(j, n + j, 1)],
        (LieAlgebra::Sp, LieGen::Y(j)) if node(j) => vec![(n + j, j, 1)],
        (LieAlgebra::O, LieGen::Xo(i, j)) if node(i) && node(j) && i < j => vec![(i, n + j, 1), (j, n + i, -1)],
        (LieAlgebra::O, LieGen::Yo(i, j)) if node(i) && node(j) && i < j => vec![(n + j, i, 1), (n + i, j, -1)],
        (_, LieGen::Unit(i, j)) if i >= 1 && j >= 1 && i <= size && j <= size => vec![(i, j, 1)],
        _ => return Err(out_of_range()),
    };
    let label = BasisLabel::coordinates(size);
    Ok(LinMap::from_entries(
        label,
        label,
        size,
        size,
        entries.into_iter().map(|(r, c, v)| (r - 1, c - 1, Rational::from_integer(v.into()))),
    ))
}

/// A spanning set of the Lie algebra acting on `space`, diagonal elements
/// first.
pub fn lie_generators(space: &SignedTensorSpace) -> Vec<(LieGen, LinMap)> {
    let n = space.n;
    let (algebra, gens): (LieAlgebra, Vec<LieGen>) = match space.kind {
        TensorKind::Sp => {
            let mut g: Vec<LieGen> = (1..=n).map(LieGen::Z).collect();
            g.extend((1..n).flat_map(|i| [LieGen::E(i), LieGen::F(i)]));
            g.extend((1..=n).flat_map(|j| [LieGen::X(j), LieGen::Y(j)]));
            (LieAlgebra::Sp, g)
        }
        TensorKind::O => {
            let mut g: Vec<LieGen> = (1..=n).map(LieGen::Z).collect();
            g.extend((1..n).flat_map(|i| [LieGen::E(i), LieGen::F(i)]));
            g.extend((1..=n).flat_map(|i| (i + 1..=n).flat_map(move |j| [LieGen::Xo(i, j), LieGen::Yo(i, j)])));
            (LieAlgebra::O, g)
        }
        TensorKind::Mixed { .. } => {
            let mut g: Vec<LieGen> = (1..=n).map(|i| LieGen::Unit(i, i)).collect();
            g.extend((1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| LieGen::Unit(i, j))));
            (LieAlgebra::Gl, g)
        }
    };
    gens.into_iter()
        .map(|g| {
            let site = lie_generator_matrix(algebra, g, n).expect("generator in range");
            (g, lie_tensor_matrix(space, &site).expect("site dimension matches"))
        })
        .collect()
}

/// `Σ_slots 1 ⊗ ⋯ ⊗ m ⊗ ⋯ ⊗ 1` on `space`; dual slots of `V^{r,s}` use
/// `−mᵀ`.
pub fn lie_tensor_matrix(space: &SignedTensorSpace, site: &LinMap) -> Result<LinMap> {
    if site.rows() != space.site_dim() || site.cols() != space.site_dim() {
        return Err(Error::Boundary(format!(
            "site operator is {}x{}, tensor factors have dimension {}",
            site.rows(),
            site.cols(),
            space.site_dim()
        )));
    }
    let dual = site.transpose().scale(&Rational::from_integer((-1).into()));
    let split = space.split();
    let label = space.label();
    let columns = (0..space.dim()).into_par_iter().map(|c| {
        let digits = space.digits(c);
        let mut col = BTreeMap::new();
        for slot in 0..space.d {
            let op = if slot < split { site } else { &dual };
            for (r, v) in op.column(digits[slot]) {
                let mut g = digits.clone();
                g[slot] = *r;
                *col.entry(space.index_of_digits(&g)).or_insert_with(Rational::zero) += v;
            }
        }
        col
    });
    let columns: Vec<_> = columns.collect();
    Ok(LinMap::from_columns(label, label, space.dim(), columns))
}

/// The Leibniz action of a site operator on a tensor.
pub fn act_lie_on_tensor(
    space: &SignedTensorSpace,
    site: &LinMap,
    v: &BTreeMap<usize, Rational>,
) -> Result<BTreeMap<usize, Rational>> {
    Ok(lie_tensor_matrix(space, site)?.apply(v))
}

/// The right action of one generator, as a matrix `v ↦ v·g`.
pub fn brauer_generator_matrix(space: &SignedTensorSpace, g: BrauerGen) -> Result<LinMap> {
    let d = space.d;
    let n = space.n as i64;
    let j = match g {
        BrauerGen::S(j) | BrauerGen::C(j) => j,
    };
    if j == 0 || j >= d {
        return Err(Error::Domain(format!("no generator {g} in degree {d}")));
    }
    if let TensorKind::Mixed { r, s } = space.kind {
        if !walled_generators(r, s).contains(&g) {
            return Err(Error::Unsupported(format!("{g} is not a walled generator for {r}|{s}")));
        }
    }
    let (a, b) = (j - 1, j);
    let label = space.label();
    let columns = (0..space.dim()).map(|c| {
        let word = space.word(c);
        let mut col = BTreeMap::new();
        let mut put = |w: &[i64], k: i64| {
            let idx = space.index_of(w).expect("word in the space");
            *col.entry(idx).or_insert_with(Rational::zero) += Rational::from_integer(k.into());
        };
        let (x, y) = (word[a], word[b]);
        match (space.kind, g) {
            (TensorKind::Sp, BrauerGen::S(_)) => {
                let mut w = word.clone();
                w.swap(a, b);
                put(&w, -1);
            }
            (_, BrauerGen::S(_)) => {
                let mut w = word.clone();
                w.swap(a, b);
                put(&w, 1);
            }
            (TensorKind::Sp, BrauerGen::C(_)) => {
                let eps = if x == -y { x.signum() } else { 0 };
                if eps != 0 {
                    for k in 1..=n {
                        let mut w = word.clone();
                        (w[a], w[b]) = (-k, k);
                        put(&w, eps);
                        (w[a], w[b]) = (k, -k);
                        put(&w, -eps);
                    }
                }
            }
            (TensorKind::O, BrauerGen::C(_)) => {
                if x == -y {
                    for k in 1..=n {
                        let mut w = word.clone();
                        (w[a], w[b]) = (k, -k);
                        put(&w, 1);
                        (w[a], w[b]) = (-k, k);
                        put(&w, 1);
                    }
                }
            }
            (TensorKind::Mixed { .. }, BrauerGen::C(_)) => {
                if x == -y {
                    for k in 1..=n {
                        let mut w = word.clone();
                        (w[a], w[b]) = (k, -k);
                        put(&w, 1);
                    }
                }
            }
        }
        col
    });
    let columns: Vec<_> = columns.collect();
    Ok(LinMap::from_columns(label, label, space.dim(), columns))
}

/// `v ↦ v·g_1·g_2⋯` for a generator word.
pub fn brauer_word_matrix(space: &SignedTensorSpace, word: &[BrauerGen]) -> Result<LinMap> {
    let mut acc = LinMap::identity(space.label(), space.dim());
    for &g in word {
        acc = brauer_generator_matrix(space, g)?.compose(&acc)?;
    }
    Ok(acc)
}

/// The loop parameter matching the action on `space`.
pub fn action_delta(space: &SignedTensorSpace) -> i64 {
    let n = space.n as i64;
    match space.kind {
        TensorKind::Sp => -2 * n,
        TensorKind::O => 2 * n,
        TensorKind::Mixed { .. } => n,
    }
}

/// `v·x`, each diagram of `x` acting through a loop-free generator word.
pub fn act_brauer(
    space: &SignedTensorSpace,
    x: &BrauerElement,
    v: &BTreeMap<usize, Rational>,
) -> Result<BTreeMap<usize, Rational>> {
    if x.degree() != space.d || x.delta() != action_delta(space) {
        return Err(Error::Domain(format!(
            "element of degree {} with δ = {} cannot act on {} (degree {}, δ = {})",
            x.degree(),
            x.delta(),
            space.kind,
            space.d,
            action_delta(space)
        )));
    }
    let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
    for (diagram, k) in x.terms() {
        let word = match space.kind {
            TensorKind::Mixed { r, s } => walled_generator_word(diagram, r, s)?,
            _ => generator_word(diagram),
        };
        for (i, val) in brauer_word_matrix(space, &word)?.apply(v) {
            *out.entry(i).or_insert_with(Rational::zero) += val * k;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Brauer generators acting on `space`.
fn brauer_generators(space: &SignedTensorSpace) -> Vec<BrauerGen> {
    match space.kind {
        TensorKind::Mixed { r, s } => walled_generators(r, s),
        _ => (1..space.d).flat_map(|j| [BrauerGen::S(j), BrauerGen::C(j)]).collect(),
    }
}

/// Outcome of comparing the Brauer image with the Lie commutant.
#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub kind: TensorKind,
    pub n: usize,
    pub d: usize,
    /// Every Lie generator against every Brauer generator.
    pub commutators: Report,
    /// Dimension of the span of generator-word actions.
    pub spanned_dim: usize,
    /// Word length at which the span stopped growing.
    pub word_length: usize,
    pub commutant_dim: usize,
    /// Whether `2n ≥ d − 1` (resp. `n ≥ r + s`).
    pub threshold: bool,
    pub equal: bool,
}

impl DualityReport {
    /// Commutators vanish, and the span fills the commutant whenever the
    /// threshold holds.
    pub fn pass(&self) -> bool {
        self.commutators.all_pass() && (!self.threshold || self.equal)
    }
}

impl fmt::Display for DualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.commutators)?;
        let relation = if self.equal { "equal" } else { "strict inclusion" };
        writeln!(
            f,
            "{} n={} d={}: brauer span {} (words up to length {}), commutant {}: {relation}; threshold {}",
            self.kind,
            self.n,
            self.d,
            self.spanned_dim,
            self.word_length,
            self.commutant_dim,
            if self.threshold { "holds" } else { "fails" }
        )?;
        write!(f, "{} {} n={} d={}", if self.pass() { "PASS" } else { "FAIL" }, self.kind, self.n, self.d)
    }
}

fn vectorize(m: &LinMap) -> Vec<(usize, Rational)> {
    let rows = m.rows();
    m.entries().into_iter().map(|(r, c, v)| (c * rows + r, v)).collect()
}

/// Dimension of the algebra generated by `gens`, growing products one
/// generator at a time until no new direction appears or the length cap is
/// reached. Returns the dimension and the last length that added a direction.
fn generated_dimension(identity: LinMap, gens: &[LinMap], cap: usize) -> Result<(usize, usize)> {
    let mut ech = Echelon::new();
    ech.insert(&vectorize(&identity));
    let mut frontier = vec![identity];
    let mut length = 0;
    let mut seen: HashSet<Vec<(usize, Rational)>> = HashSet::new();
    while !frontier.is_empty() && length < cap {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                let h = g.compose(f)?;
                let v = vectorize(&h);
                if seen.insert(v.clone()) && ech.insert(&v) {
                    next.push(h);
                }
            }
        }
        if !next.is_empty() {
            length += 1;
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok((ech.rank(), length))
}

/// Commutation of the two actions and the comparison of the Brauer image
/// with the commutant of the Lie algebra.
pub fn duality_check(kind: TensorKind, n: usize, d: usize) -> Result<DualityReport> {
    let space = SignedTensorSpace::new(kind, n, d)?;
    let lie = lie_generators(&space);
    let brauer: Vec<(BrauerGen, LinMap)> = brauer_generators(&space)
        .into_iter()
        .map(|g| brauer_generator_matrix(&space, g).map(|m| (g, m)))
        .collect::<Result<_>>()?;
    let pairs: Vec<(&(LieGen, LinMap), &(BrauerGen, LinMap))> = lie.iter().flat_map(|l| brauer.iter().map(move |b| (l, b))).collect();
    let instances: Vec<InstanceResult> = pairs
        .par_iter()
        .map(|((lg, lm), (bg, bm))| {
            let lhs = lm.compose(bm).expect("same space");
            let rhs = bm.compose(lm).expect("same space");
            InstanceResult::compare("commutator", format!("{kind} n={n} d={d} [{lg},{bg}]"), &lhs, &rhs)
        })
        .collect();
    let commutators = Report::new(format!("{kind} commutators"), instances);
    let mats: Vec<LinMap> = brauer.into_iter().map(|(_, m)| m).collect();
    let (spanned_dim, word_length) = generated_dimension(LinMap::identity(space.label(), space.dim()), &mats, 2 * d.max(1))?;
    let ops: Vec<LinMap> = lie.into_iter().map(|(_, m)| m).collect();
    let commutant_dim = commutant_dimension(space.dim(), &ops)?;
    let threshold = match kind {
        TensorKind::Mixed { r, s } => n >= r + s,
        _ => 2 * n + 1 >= d,
    };
    Ok(DualityReport {
        kind,
        n,
        d,
        commutators,
        spanned_dim,
        word_length,
        commutant_dim,
        threshold,
        equal: spanned_dim == commutant_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::BrauerDiagram;
    use crate::linear::int;

    fn vec_of(space: &SignedTensorSpace, terms: &[(&[i64], i64)]) -> BTreeMap<usize, Rational> {
        let mut v = BTreeMap::new();
        for (w, k) in terms {
            *v.entry(space.index_of(w).unwrap()).or_insert_with(Rational::zero) += int(*k);
        }
        v.retain(|_, x: &mut Rational| !x.is_zero());
        v
    }

    #[test]
    fn basis_order() {
        let space = SignedTensorSpace::sp(2, 2).unwrap();
        assert_eq!(space.word(0), vec![1, 1]);
        assert_eq!(space.word(1), vec![1, 2]);
        assert_eq!(space.word(2), vec![1, -1]);
        assert_eq!(space.word(15), vec![-2, -2]);
        assert_eq!(space.index_of(&[-1, 2]), Some(9));
    }

    #[test]
    fn symplectic_contraction() {
        let space = SignedTensorSpace::sp(2, 2).unwrap();
        let c = BrauerElement::from_diagram(BrauerDiagram::contraction(2, 1, 2).unwrap(), -4);
        let v = vec_of(&space, &[(&[1, -1], 1)]);
        let expected = vec_of(&space, &[(&[-1, 1], 1), (&[1, -1], -1), (&[-2, 2], 1), (&[2, -2], -1)]);
        assert_eq!(act_brauer(&space, &c, &v).unwrap(), expected);
        let v = vec_of(&space, &[(&[-1, 1], 1)]);
        assert_eq!(act_brauer(&space, &c, &v).unwrap(), expected.iter().map(|(k, x)| (*k, -x)).collect());
        assert!(act_brauer(&space, &c, &vec_of(&space, &[(&[1, 1], 1)])).unwrap().is_empty());
    }

    #[test]
    fn orthogonal_contraction_and_swap() {
        let space = SignedTensorSpace::new(TensorKind::O, 1, 2).unwrap();
        let c = BrauerElement::from_diagram(BrauerDiagram::contraction(2, 1, 2).unwrap(), 2);
        let v = vec_of(&space, &[(&[1, -1], 1)]);
        assert_eq!(act_brauer(&space, &c, &v).unwrap(), vec_of(&space, &[(&[1, -1], 1), (&[-1, 1], 1)]));
        let s = BrauerElement::from_diagram(BrauerGen::S(1).diagram(2).unwrap(), 2);
        assert_eq!(act_brauer(&space, &s, &v).unwrap(), vec_of(&space, &[(&[-1, 1], 1)]));
    }

    #[test]
    fn lie_matrices() {
        for n in 1..=3 {
            for j in 1..=n {
                let x = lie_generator_matrix(LieAlgebra::Sp, LieGen::X(j), n).unwrap();
                let y = lie_generator_matrix(LieAlgebra::Sp, LieGen::Y(j), n).unwrap();
                let z = lie_generator_matrix(LieAlgebra::Sp, LieGen::Z(j), n).unwrap();
                assert_eq!(x.compose(&y).unwrap().sub(&y.compose(&x).unwrap()).unwrap(), z);
                assert_eq!(z.get(j - 1, j - 1), int(1));
                assert_eq!(z.get(n + j - 1, n + j - 1), int(-1));
            }
            for i in 1..n {
                let e = lie_generator_matrix(LieAlgebra::Sp, LieGen::E(i), n).unwrap();
                let x1 = lie_generator_matrix(LieAlgebra::Sp, LieGen::X(i + 1), n).unwrap();
                let br = |a: &LinMap, b: &LinMap| a.compose(b).unwrap().sub(&b.compose(a).unwrap()).unwrap();
                let twice = br(&e, &br(&e, &x1));
                let xi = lie_generator_matrix(LieAlgebra::Sp, LieGen::X(i), n).unwrap();
                assert_eq!(twice, xi.scale(&int(2)));
            }
        }
        assert!(lie_generator_matrix(LieAlgebra::Sp, LieGen::E(2), 2).is_err());
        assert!(lie_generator_matrix(LieAlgebra::O, LieGen::X(1), 2).is_err());
    }

    #[test]
    fn leibniz_action() {
        let space = SignedTensorSpace::sp(1, 2).unwrap();
        let z = lie_generator_matrix(LieAlgebra::Sp, LieGen::Z(1), 1).unwrap();
        let v = vec_of(&space, &[(&[1, 1], 1)]);
        assert_eq!(act_lie_on_tensor(&space, &z, &v).unwrap(), vec_of(&space, &[(&[1, 1], 2)]));
        let gl = SignedTensorSpace::mixed(2, 2, 0).unwrap();
        let e = lie_generator_matrix(LieAlgebra::Gl, LieGen::E(1), 2).unwrap();
        let v = vec_of(&gl, &[(&[2, 2], 1)]);
        assert_eq!(act_lie_on_tensor(&gl, &e, &v).unwrap(), vec_of(&gl, &[(&[1, 2], 1), (&[2, 1], 1)]));
    }

    #[test]
    fn weight_spaces() {
        assert_eq!(sp_weight_space_basis(1, 2, &[0]), vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(sp_weight_space_basis(1, 2, &[2]), vec![vec![1, 1]]);
        assert!(sp_weight_space_basis(1, 2, &[3]).is_empty());
    }

    #[test]
    fn small_dualities() {
        let r = duality_check(TensorKind::Sp, 1, 2).unwrap();
        assert!(r.commutators.all_pass());
        assert_eq!((r.spanned_dim, r.commutant_dim), (2, 2));
        let r = duality_check(TensorKind::Mixed { r: 1, s: 1 }, 2, 2).unwrap();
        assert!(r.pass(), "{r}");
        assert_eq!(r.spanned_dim, 2);
    }
}
