//! Permutation modules `M^λ` on tabloid bases and the generating morphisms
//! between them.
//!
//! A tabloid of shape `λ = (λ_1, …, λ_n)` is stored as its row word: entry
//! `k` is the (0-based) cell holding the element `k + 1`. Bases are listed in
//! ascending lexicographic order of row words. Cells may be empty, and the
//! basis label of `M^λ` only depends on `κ(λ)`, so morphisms into `M^{(1,0,2)}`
//! compose with morphisms out of `M^{(1,2)}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::combinatorics::Permutation;
use crate::linear::{format_rational, BasisLabel, LinMap, Rational};
use crate::{Error, Result};

/// An ordered dissection of `{1, …, d}` into cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    word: Vec<u8>,
    cells: usize,
}

impl Tabloid {
    /// Builds from explicit cells of 1-based elements.
    pub fn from_cells(cells: &[Vec<usize>]) -> Result<Self> {
        let d: usize = cells.iter().map(Vec::len).sum();
        if cells.len() > u8::MAX as usize {
            return Err(Error::Domain("too many cells".into()));
        }
        let mut word = vec![u8::MAX; d];
        for (i, cell) in cells.iter().enumerate() {
            for &x in cell {
                if x == 0 || x > d || word[x - 1] != u8::MAX {
                    return Err(Error::Domain(format!("cells {cells:?} do not dissect 1..{d}")));
                }
                word[x - 1] = i as u8;
            }
        }
        Ok(Tabloid { word, cells: cells.len() })
    }

    pub fn from_word(word: Vec<u8>, cells: usize) -> Result<Self> {
        if word.iter().any(|&c| c as usize >= cells) {
            return Err(Error::Domain(format!("row word {word:?} uses a cell beyond {cells}")));
        }
        Ok(Tabloid { word, cells })
    }

    /// The standard tabloid `T_λ`: cells filled with consecutive elements.
    pub fn standard(shape: &[usize]) -> Self {
        let word = shape.iter().enumerate().flat_map(|(i, &len)| std::iter::repeat_n(i as u8, len)).collect();
        Tabloid { word, cells: shape.len() }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cells];
        for (k, &c) in self.word.iter().enumerate() {
            out[c as usize].push(k + 1);
        }
        out
    }

    pub fn shape(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.cells];
        for &c in &self.word {
            out[c as usize] += 1;
        }
        out
    }

    /// Right action `(T·g)^i = g⁻¹(T^i)`.
    pub fn act(&self, g: &Permutation) -> Result<Self> {
        if g.degree() != self.degree() {
            return Err(Error::Domain(format!(
                "permutation of degree {} acting on a tabloid of degree {}",
                g.degree(),
                self.degree()
            )));
        }
        let word = (0..self.degree()).map(|x| self.word[g.apply(x)]).collect();
        Ok(Tabloid { word, cells: self.cells })
    }

    /// `c_{i,R} T`: moves every element of `R` (1-based) to cell `i` (1-based).
    pub fn moved(&self, i: usize, set: &[usize]) -> Result<Self> {
        if i == 0 || i > self.cells {
            return Err(Error::Domain(format!("cell {i} out of range 1..={}", self.cells)));
        }
        let mut word = self.word.clone();
        for &x in set {
            if x == 0 || x > word.len() {
                return Err(Error::Domain(format!("element {x} out of range 1..={}", word.len())));
            }
            word[x - 1] = (i - 1) as u8;
        }
        Ok(Tabloid { word, cells: self.cells })
    }
}

/// `(T·g)^i = g⁻¹(T^i)` as a free function.
pub fn act_permutation(t: &Tabloid, g: &Permutation) -> Result<Tabloid> {
    t.act(g)
}

/// `c_{i,R} T`.
pub fn move_elements(t: &Tabloid, i: usize, set: &[usize]) -> Result<Tabloid> {
    t.moved(i, set)
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells().iter().map(|c| c.iter().join(",")).collect();
        write!(f, "{}", cells.join("|"))
    }
}

impl FromStr for Tabloid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cells = Vec::new();
        for cell in s.split('|') {
            let cell = cell.trim();
            if cell.is_empty() {
                cells.push(Vec::new());
                continue;
            }
            let parsed: std::result::Result<Vec<usize>, _> = cell.split(',').map(|x| x.trim().parse::<usize>()).collect();
            cells.push(parsed.map_err(|_| Error::Parse(format!("bad tabloid cell {cell:?} in {s:?}")))?);
        }
        Tabloid::from_cells(&cells).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The permutation module `M^λ` with its enumerated tabloid basis. A shape
/// with a negative entry gives the zero module.
#[derive(Debug)]
pub struct PermModule {
    shape: Vec<i64>,
    basis: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    label: BasisLabel,
}

type Memo = RwLock<HashMap<Vec<i64>, Arc<PermModule>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Basis label of `M^λ`: a hash of `κ(λ)`, or of the zero module.
pub fn module_label(shape: &[i64]) -> BasisLabel {
    if shape.iter().any(|&x| x < 0) {
        return BasisLabel::from_descriptor("perm:zero");
    }
    BasisLabel::from_descriptor(&format!("perm:{}", shape.iter().filter(|&&x| x != 0).join(",")))
}

impl PermModule {
    /// The memoized module for `shape`.
    pub fn get(shape: &[i64]) -> Arc<PermModule> {
        if let Some(m) = memo().read().expect("memo lock").get(shape) {
            return Arc::clone(m);
        }
        let built = Arc::new(Self::build(shape));
        let mut guard = memo().write().expect("memo lock");
        Arc::clone(guard.entry(shape.to_vec()).or_insert(built))
    }

    fn build(shape: &[i64]) -> PermModule {
        assert!(shape.len() <= u8::MAX as usize, "too many cells");
        let label = module_label(shape);
        if shape.iter().any(|&x| x < 0) {
            return PermModule {
                shape: shape.to_vec(),
                basis: Vec::new(),
                index: HashMap::new(),
                label,
            };
        }
        let mut counts: Vec<usize> = shape.iter().map(|&x| x as usize).collect();
        let d: usize = counts.iter().sum();
        let mut basis = Vec::new();
        let mut word = Vec::with_capacity(d);
        fn go(counts: &mut [usize], d: usize, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if word.len() == d {
                out.push(word.clone());
                return;
            }
            for c in 0..counts.len() {
                if counts[c] > 0 {
                    counts[c] -= 1;
                    word.push(c as u8);
                    go(counts, d, word, out);
                    word.pop();
                    counts[c] += 1;
                }
            }
        }
        go(&mut counts, d, &mut word, &mut basis);
        let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        PermModule {
            shape: shape.to_vec(),
            basis,
            index,
            label,
        }
    }

    pub fn shape(&self) -> &[i64] {
        &self.shape
    }

    pub fn is_zero_module(&self) -> bool {
        self.shape.iter().any(|&x| x < 0)
    }

    pub fn degree(&self) -> usize {
        if self.is_zero_module() {
            0
        } else {
            self.shape.iter().sum::<i64>() as usize
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self) -> BasisLabel {
        self.label
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.basis[i]
    }

    pub fn tabloid(&self, i: usize) -> Tabloid {
        Tabloid {
            word: self.basis[i].clone(),
            cells: self.shape.len(),
        }
    }

    pub fn index_of_word(&self, word: &[u8]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn index_of(&self, t: &Tabloid) -> Option<usize> {
        if t.cells != self.shape.len() {
            return None;
        }
        self.index_of_word(&t.word)
    }

    /// Matrix of the place-permutation action `T ↦ T·g`.
    pub fn permutation_matrix(&self, g: &Permutation) -> Result<LinMap> {
        if !self.is_zero_module() && g.degree() != self.degree() {
            return Err(Error::Domain(format!("permutation of degree {} on M^{:?}", g.degree(), self.shape)));
        }
        let columns = self.basis.iter().map(|w| {
            let image: Vec<u8> = (0..w.len()).map(|x| w[g.apply(x)]).collect();
            BTreeMap::from([(self.index[&image], Rational::one())])
        });
        Ok(LinMap::from_columns(self.label, self.label, self.dim(), columns))
    }
}

/// A linear map `M^λ → M^μ` on tabloid bases.
#[derive(Clone, Debug)]
pub struct TabloidMorphism {
    source: Vec<i64>,
    target: Vec<i64>,
    map: LinMap,
}

impl PartialEq for TabloidMorphism {
    /// Morphisms compare as matrices between `κ`-identified modules.
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl Eq for TabloidMorphism {}

/// Row word images of one basis tabloid, with coefficients.
pub type WordImage = Vec<(Vec<u8>, Rational)>;

impl TabloidMorphism {
    pub fn new(source: Vec<i64>, target: Vec<i64>, map: LinMap) -> Result<Self> {
        let (s, t) = (PermModule::get(&source), PermModule::get(&target));
        if map.domain() != s.label() || map.codomain() != t.label() || map.cols() != s.dim() || map.rows() != t.dim() {
            return Err(Error::Boundary(format!("map does not fit M^{source:?} -> M^{target:?}")));
        }
        Ok(TabloidMorphism { source, target, map })
    }

    /// Builds a morphism from the image of every basis row word.
    pub fn from_images<F>(source: &[i64], target: &[i64], image: F) -> Self
    where
        F: Fn(&[u8]) -> WordImage + Sync,
    {
        let (s, t) = (PermModule::get(source), PermModule::get(target));
        let column = |w: &Vec<u8>| {
            let mut col = BTreeMap::new();
            if t.dim() == 0 {
                return col;
            }
            for (word, c) in image(w) {
                let row = t.index_of_word(&word).unwrap_or_else(|| panic!("image {word:?} outside M^{target:?}"));
                *col.entry(row).or_insert_with(Rational::zero) += c;
            }
            col
        };
        let columns: Vec<BTreeMap<usize, Rational>> = if s.dim() > 4096 {
            s.basis.par_iter().map(column).collect()
        } else {
            s.basis.iter().map(column).collect()
        };
        TabloidMorphism {
            source: source.to_vec(),
            target: target.to_vec(),
            map: LinMap::from_columns(s.label(), t.label(), t.dim(), columns),
        }
    }

    pub fn identity(shape: &[i64]) -> Self {
        let m = PermModule::get(shape);
        TabloidMorphism {
            source: shape.to_vec(),
            target: shape.to_vec(),
            map: LinMap::identity(m.label(), m.dim()),
        }
    }

    pub fn zero(source: &[i64], target: &[i64]) -> Self {
        let (s, t) = (PermModule::get(source), PermModule::get(target));
        TabloidMorphism {
            source: source.to_vec(),
            target: target.to_vec(),
            map: LinMap::zero(s.label(), t.label(), t.dim(), s.dim()),
        }
    }

    pub fn source(&self) -> &[i64] {
        &self.source
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }

    pub fn into_map(self) -> LinMap {
        self.map
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &TabloidMorphism) -> Result<Self> {
        Ok(TabloidMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            map: self.map.compose(&inner.map)?,
        })
    }

    pub fn axpy(&self, k: &Rational, other: &TabloidMorphism) -> Result<Self> {
        Ok(TabloidMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            map: self.map.axpy(k, &other.map)?,
        })
    }

    pub fn add(&self, other: &TabloidMorphism) -> Result<Self> {
        self.axpy(&Rational::one(), other)
    }

    pub fn sub(&self, other: &TabloidMorphism) -> Result<Self> {
        self.axpy(&-Rational::one(), other)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        TabloidMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            map: self.map.scale(k),
        }
    }

    /// Reinterprets the morphism between other shapes with the same `κ`.
    pub fn with_shapes(&self, source: &[i64], target: &[i64]) -> Result<Self> {
        Self::new(source.to_vec(), target.to_vec(), self.map.clone())
    }

    /// Image of one tabloid as a combination of target tabloids.
    pub fn apply(&self, t: &Tabloid) -> Result<Vec<(Tabloid, Rational)>> {
        let s = PermModule::get(&self.source);
        let t_module = PermModule::get(&self.target);
        let idx = s
            .index_of(t)
            .ok_or_else(|| Error::Domain(format!("{t} is not a tabloid of shape {:?}", self.source)))?;
        Ok(self.map.column(idx).iter().map(|(r, v)| (t_module.tabloid(*r), v.clone())).collect())
    }

    /// Image of the basis word at index `col` as row words.
    fn column_words<'a>(&'a self, col: usize, target: &'a PermModule) -> impl Iterator<Item = (&'a [u8], &'a Rational)> + 'a {
        self.map.column(col).iter().map(move |(r, v)| (target.word(*r), v))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut value = self.map.to_json();
        value["source"] = json!(self.source);
        value["target"] = json!(self.target);
        value
    }
}

/// Formats a combination of tabloids as `1·{2|1,3} + 1·{1|2,3}`, highest
/// row word first.
pub fn format_combination(terms: &[(Tabloid, Rational)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut terms = terms.to_vec();
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    terms.iter().map(|(t, c)| format!("{}·{{{t}}}", format_rational(c))).join(" + ")
}

fn has_negative(shape: &[i64]) -> bool {
    shape.iter().any(|&x| x < 0)
}

fn check_cell(shape: &[i64], i: usize) -> Result<()> {
    if i == 0 || i >= shape.len() {
        return Err(Error::Domain(format!("ladder index {i} out of range for weight {shape:?}")));
    }
    Ok(())
}

/// `E_i^(r) 1_λ`: moves `r` elements from cell `i+1` to cell `i` in every
/// possible way (1-based `i`).
pub fn raise(lambda: &[i64], i: usize, r: usize) -> Result<TabloidMorphism> {
    ladder(lambda, i, r, true)
}

/// `F_i^(r) 1_λ`: moves `r` elements from cell `i` to cell `i+1`.
pub fn lower(lambda: &[i64], i: usize, r: usize) -> Result<TabloidMorphism> {
    ladder(lambda, i, r, false)
}

fn ladder(lambda: &[i64], i: usize, r: usize, up: bool) -> Result<TabloidMorphism> {
    check_cell(lambda, i)?;
    let (to, from) = if up { (i - 1, i) } else { (i, i - 1) };
    let mut target = lambda.to_vec();
    target[to] += r as i64;
    target[from] -= r as i64;
    if has_negative(lambda) || has_negative(&target) {
        return Ok(TabloidMorphism::zero(lambda, &target));
    }
    let (to, from) = (to as u8, from as u8);
    Ok(TabloidMorphism::from_images(lambda, &target, |w| {
        let pool: Vec<usize> = (0..w.len()).filter(|&k| w[k] == from).collect();
        pool.into_iter()
            .combinations(r)
            .map(|set| {
                let mut out = w.to_vec();
                for k in set {
                    out[k] = to;
                }
                (out, Rational::one())
            })
            .collect()
    }))
}

/// A local generator acting on one or two adjacent cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalOp {
    /// One cell left alone.
    Id,
    /// Two cells joined into one.
    Merge,
    /// One cell split into two of sizes `k`, `l`, summed over all choices.
    Split(i64, i64),
    /// Two cells swapped.
    Cross,
}

impl LocalOp {
    pub fn arity(self) -> usize {
        match self {
            LocalOp::Id | LocalOp::Split(..) => 1,
            LocalOp::Merge | LocalOp::Cross => 2,
        }
    }

    fn output(self, input: &[i64]) -> Vec<i64> {
        match self {
            LocalOp::Id => vec![input[0]],
            LocalOp::Merge => vec![input[0] + input[1]],
            LocalOp::Split(k, l) => vec![k, l],
            LocalOp::Cross => vec![input[1], input[0]],
        }
    }
}

/// Target shape of a layer of local operations, checking arities and split
/// sizes.
pub fn local_layer_target(source: &[i64], ops: &[LocalOp]) -> Result<Vec<i64>> {
    let arity: usize = ops.iter().map(|op| op.arity()).sum();
    if arity != source.len() {
        return Err(Error::Boundary(format!(
            "layer consumes {arity} strands but the boundary {source:?} has {}",
            source.len()
        )));
    }
    let mut pos = 0;
    let mut target = Vec::new();
    for op in ops {
        let input = &source[pos..pos + op.arity()];
        if let LocalOp::Split(k, l) = op {
            if k + l != input[0] {
                return Err(Error::Boundary(format!("split({k},{l}) on a strand labeled {}", input[0])));
            }
        }
        target.extend(op.output(input));
        pos += op.arity();
    }
    Ok(target)
}

/// Evaluates a horizontal layer of local operations on `M^source`.
pub fn local_layer(source: &[i64], ops: &[LocalOp]) -> Result<TabloidMorphism> {
    let target = local_layer_target(source, ops)?;
    if has_negative(source) || has_negative(&target) {
        return Ok(TabloidMorphism::zero(source, &target));
    }
    // per-op (first input cell, first output cell)
    let mut placements = Vec::with_capacity(ops.len());
    let (mut i, mut o) = (0usize, 0usize);
    for op in ops {
        placements.push((*op, i as u8, o as u8));
        i += op.arity();
        o += if matches!(op, LocalOp::Id | LocalOp::Merge) { 1 } else { 2 };
    }
    // cell relabeling that is not a split
    let mut relabel = vec![0u8; source.len()];
    let mut splits = Vec::new();
    for &(op, i, o) in &placements {
        match op {
            LocalOp::Id => relabel[i as usize] = o,
            LocalOp::Merge => {
                relabel[i as usize] = o;
                relabel[i as usize + 1] = o;
            }
            LocalOp::Cross => {
                relabel[i as usize] = o + 1;
                relabel[i as usize + 1] = o;
            }
            LocalOp::Split(k, _) => {
                relabel[i as usize] = o;
                splits.push((i, o, k as usize));
            }
        }
    }
    Ok(TabloidMorphism::from_images(source, &target, |w| {
        let base: Vec<u8> = w.iter().map(|&c| relabel[c as usize]).collect();
        let mut images = vec![base];
        for &(cell, out, k) in &splits {
            let pool: Vec<usize> = (0..w.len()).filter(|&x| w[x] == cell).collect();
            let mut next = Vec::with_capacity(images.len());
            for img in &images {
                for first in pool.iter().copied().combinations(k) {
                    let mut v = img.clone();
                    for &x in &pool {
                        v[x] = out + 1;
                    }
                    for x in first {
                        v[x] = out;
                    }
                    next.push(v);
                }
            }
            images = next;
        }
        images.into_iter().map(|v| (v, Rational::one())).collect()
    }))
}

/// `∇_{k,l}: M^{(k,l)} → M^{(k+l)}`.
pub fn merge(k: i64, l: i64) -> TabloidMorphism {
    local_layer(&[k, l], &[LocalOp::Merge]).expect("merge is well formed")
}

/// `Δ_{k,l}: M^{(k+l)} → M^{(k,l)}`, the sum of all `(k,l)`-tabloids.
pub fn split(k: i64, l: i64) -> TabloidMorphism {
    local_layer(&[k + l], &[LocalOp::Split(k, l)]).expect("split is well formed")
}

/// `B_{k,l}: M^{(k,l)} → M^{(l,k)}`, the cell swap.
pub fn braid(k: i64, l: i64) -> TabloidMorphism {
    local_layer(&[k, l], &[LocalOp::Cross]).expect("braid is well formed")
}

/// The circle product `f ∘ g`: juxtaposes tabloids, the elements of the
/// second factor shifted past those of the first.
pub fn circle_product(f: &TabloidMorphism, g: &TabloidMorphism) -> TabloidMorphism {
    let source: Vec<i64> = f.source.iter().chain(&g.source).copied().collect();
    let target: Vec<i64> = f.target.iter().chain(&g.target).copied().collect();
    if has_negative(&source) || has_negative(&target) {
        return TabloidMorphism::zero(&source, &target);
    }
    let (fs, ft) = (PermModule::get(&f.source), PermModule::get(&f.target));
    let (gs, gt) = (PermModule::get(&g.source), PermModule::get(&g.target));
    let n = f.source.len() as u8;
    let m = f.target.len() as u8;
    TabloidMorphism::from_images(&source, &target, |w| {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let (mut left_pos, mut right_pos) = (Vec::new(), Vec::new());
        for (x, &c) in w.iter().enumerate() {
            if c < n {
                left.push(c);
                left_pos.push(x);
            } else {
                right.push(c - n);
                right_pos.push(x);
            }
        }
        let li = fs.index_of_word(&left).expect("left factor tabloid");
        let ri = gs.index_of_word(&right).expect("right factor tabloid");
        let mut out = Vec::new();
        for (lw, lc) in f.column_words(li, &ft) {
            for (rw, rc) in g.column_words(ri, &gt) {
                let mut v = vec![0u8; w.len()];
                for (k, &x) in left_pos.iter().enumerate() {
                    v[x] = lw[k];
                }
                for (k, &x) in right_pos.iter().enumerate() {
                    v[x] = rw[k] + m;
                }
                out.push((v, lc * rc));
            }
        }
        out
    })
}

/// Swaps the adjacent cells `p`, `p+1` (0-based) of `M^shape`.
pub fn adjacent_braid(shape: &[i64], p: usize) -> Result<TabloidMorphism> {
    if p + 1 >= shape.len() {
        return Err(Error::Domain(format!("no cells {p}, {} in {shape:?}", p + 1)));
    }
    let mut ops = vec![LocalOp::Id; shape.len() - 1];
    ops[p] = LocalOp::Cross;
    local_layer(shape, &ops)
}

/// `φ_λ: M^λ → M^{sort λ}`, a bubble sort by adjacent braids `B_{k,l}`
/// with `k < l`. Passes run left to right.
pub fn canonical_iso(shape: &[i64]) -> Result<TabloidMorphism> {
    canonical_iso_by(shape, false)
}

/// [`canonical_iso`] built with right-to-left passes instead.
pub fn canonical_iso_by(shape: &[i64], right_to_left: bool) -> Result<TabloidMorphism> {
    if shape.iter().any(|&x| x <= 0) {
        return Err(Error::Domain(format!("canonical isomorphisms need positive parts, got {shape:?}")));
    }
    let mut cur = shape.to_vec();
    let mut acc = TabloidMorphism::identity(shape);
    loop {
        let positions: Vec<usize> = if right_to_left {
            (0..cur.len().saturating_sub(1)).rev().collect()
        } else {
            (0..cur.len().saturating_sub(1)).collect()
        };
        let mut swapped = false;
        for p in positions {
            if cur[p] < cur[p + 1] {
                let b = adjacent_braid(&cur, p)?;
                acc = b.compose(&acc)?;
                cur.swap(p, p + 1);
                swapped = true;
            }
        }
        if !swapped {
            return Ok(acc);
        }
    }
}
