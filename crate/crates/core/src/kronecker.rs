//! Tensor products of permutation modules as direct sums of permutation
//! modules indexed by contingency matrices, and the tensor product of the
//! generating morphisms.
//!
//! A tensor `T ⊗ T'` of a `λ`-tabloid and a `μ`-tabloid is identified with
//! the `A`-tabloid whose `(i,j)` cell is `T^i ∩ T'^j`, and `A`-tabloids are
//! ordinary tabloids on the row-major flattening of `A`. Blocks are listed in
//! the order of [`enumerate_contingency`].

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::One;
use serde_json::json;

use crate::combinatorics::{enumerate_contingency, ContingencyMatrix};
use crate::linear::{BasisLabel, LinMap, Rational};
use crate::tabloid::{lower, raise, PermModule, Tabloid, TabloidMorphism};
use crate::{Error, Result};

/// Which factor's rows index the blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indexing {
    /// `A ∈ A^λ_μ`, cells `T^i ∩ T'^j`.
    Standard,
    /// `A ∈ A^μ_λ`, cells `T'^i ∩ T^j`.
    Transposed,
}

/// Which tensor factor carries the generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `X_j 1_λ ⊗ 1_μ`.
    Left,
    /// `1_λ ⊗ X_j 1_μ`.
    Right,
}

/// A raising or lowering generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
}

fn flat_shape(a: &ContingencyMatrix) -> Vec<i64> {
    a.flattened().iter().map(|&x| x as i64).collect()
}

/// The `A`-tabloid `T ⊗ T'` with `(T ⊗ T')^{ij} = T^i ∩ T'^j`.
pub fn tensor_tabloid(t: &Tabloid, t2: &Tabloid) -> Result<Tabloid> {
    if t.degree() != t2.degree() {
        return Err(Error::Domain(format!("tabloids of degrees {} and {}", t.degree(), t2.degree())));
    }
    let n = t2.num_cells();
    let word = t.word().iter().zip(t2.word()).map(|(&a, &b)| (a as usize * n + b as usize) as u8).collect();
    Tabloid::from_word(word, t.num_cells() * n)
}

/// `M^λ ⊗ M^μ = ⊕_A M^A` with the explicit identification of bases.
#[derive(Clone, Debug)]
pub struct TensorDecomposition {
    pub blocks: Vec<ContingencyMatrix>,
    /// Start of each block in the block-sum basis.
    pub offsets: Vec<usize>,
    /// `bijection[p]` is the block-sum index of the tensor basis vector `p`,
    /// where `p = i·dim M^μ + j` for the `i`-th `λ`-tabloid and the `j`-th
    /// `μ`-tabloid.
    pub bijection: Vec<usize>,
}

impl TensorDecomposition {
    pub fn dim(&self) -> usize {
        self.bijection.len()
    }

    /// Block and index within the block of a block-sum basis vector.
    pub fn locate(&self, index: usize) -> (usize, usize) {
        let b = self.offsets.partition_point(|&o| o <= index) - 1;
        (b, index - self.offsets[b])
    }

    /// The bijection as a permutation matrix from the tensor basis to the
    /// block-sum basis.
    pub fn bijection_matrix(&self, tensor_label: BasisLabel) -> LinMap {
        let target = blocks_label(&self.blocks);
        let columns = self.bijection.iter().map(|&r| BTreeMap::from([(r, Rational::one())]));
        LinMap::from_columns(tensor_label, target, self.dim(), columns)
    }
}

fn blocks_label(blocks: &[ContingencyMatrix]) -> BasisLabel {
    BasisLabel::from_descriptor(&format!("blocks:{}", blocks.iter().map(|b| b.flattened().iter().join(",")).join(";")))
}

/// Decomposes `M^λ ⊗ M^μ` with the standard indexing by `A^λ_μ`.
pub fn decompose_tensor(lambda: &[usize], mu: &[usize]) -> Result<TensorDecomposition> {
    decompose_tensor_indexed(lambda, mu, Indexing::Standard)
}

pub fn decompose_tensor_indexed(lambda: &[usize], mu: &[usize], indexing: Indexing) -> Result<TensorDecomposition> {
    let (rows, cols) = match indexing {
        Indexing::Standard => (lambda, mu),
        Indexing::Transposed => (mu, lambda),
    };
    let blocks = enumerate_contingency(rows, cols)?;
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut total = 0;
    let mut position = HashMap::new();
    for (b, a) in blocks.iter().enumerate() {
        offsets.push(total);
        total += PermModule::get(&flat_shape(a)).dim();
        position.insert(a.flattened().to_vec(), b);
    }
    let to_i64 = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    let (ml, mm) = (PermModule::get(&to_i64(lambda)), PermModule::get(&to_i64(mu)));
    let ncols = cols.len();
    let mut bijection = Vec::with_capacity(ml.dim() * mm.dim());
    for i in 0..ml.dim() {
        for j in 0..mm.dim() {
            let (wl, wm) = (ml.word(i), mm.word(j));
            let (wr, wc) = match indexing {
                Indexing::Standard => (wl, wm),
                Indexing::Transposed => (wm, wl),
            };
            let word: Vec<u8> = wr.iter().zip(wc).map(|(&r, &c)| (r as usize * ncols + c as usize) as u8).collect();
            let mut counts = vec![0usize; rows.len() * ncols];
            for &c in &word {
                counts[c as usize] += 1;
            }
            let b = position[&counts];
            let local = PermModule::get(&flat_shape(&blocks[b]))
                .index_of_word(&word)
                .expect("A-tabloid in its block");
            bijection.push(offsets[b] + local);
        }
    }
    Ok(TensorDecomposition {
        blocks,
        offsets,
        bijection,
    })
}

/// A matrix of tabloid morphisms between direct sums `⊕ M^A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMorphism {
    pub row_blocks: Vec<ContingencyMatrix>,
    pub col_blocks: Vec<ContingencyMatrix>,
    blocks: BTreeMap<(usize, usize), TabloidMorphism>,
}

impl BlockMorphism {
    pub fn zero(row_blocks: Vec<ContingencyMatrix>, col_blocks: Vec<ContingencyMatrix>) -> Self {
        BlockMorphism {
            row_blocks,
            col_blocks,
            blocks: BTreeMap::new(),
        }
    }

    /// Block identity on `⊕ M^A`.
    pub fn identity(blocks: Vec<ContingencyMatrix>) -> Self {
        let mut out = Self::zero(blocks.clone(), blocks);
        for (b, a) in out.col_blocks.clone().iter().enumerate() {
            out.insert(b, b, TabloidMorphism::identity(&flat_shape(a))).expect("shapes match");
        }
        out
    }

    /// Adds `f` into block `(row, col)`.
    pub fn insert(&mut self, row: usize, col: usize, f: TabloidMorphism) -> Result<()> {
        let (src, tgt) = (flat_shape(&self.col_blocks[col]), flat_shape(&self.row_blocks[row]));
        let f = f.with_shapes(&src, &tgt)?;
        let sum = match self.blocks.remove(&(row, col)) {
            Some(existing) => existing.add(&f)?,
            None => f,
        };
        if !sum.is_zero() {
            self.blocks.insert((row, col), sum);
        }
        Ok(())
    }

    /// The block at `(row, col)`; absent blocks are zero.
    pub fn block(&self, row: usize, col: usize) -> TabloidMorphism {
        self.blocks
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| TabloidMorphism::zero(&flat_shape(&self.col_blocks[col]), &flat_shape(&self.row_blocks[row])))
    }

    /// Nonzero blocks in `(row, col)` order.
    pub fn nonzero_blocks(&self) -> impl Iterator<Item = (&(usize, usize), &TabloidMorphism)> {
        self.blocks.iter()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.row_blocks.clone(), self.col_blocks.clone());
        for (&(r, c), f) in &self.blocks {
            out.insert(r, c, f.scale(k)).expect("shapes match");
        }
        out
    }

    /// Block matrix product `self · inner`.
    pub fn compose(&self, inner: &BlockMorphism) -> Result<Self> {
        if self.col_blocks != inner.row_blocks {
            return Err(Error::Boundary("block structures do not match".into()));
        }
        let mut out = Self::zero(self.row_blocks.clone(), inner.col_blocks.clone());
        for (&(r, k), f) in &self.blocks {
            for (&(k2, c), g) in &inner.blocks {
                if k == k2 {
                    out.insert(r, c, f.compose(g)?)?;
                }
            }
        }
        Ok(out)
    }

    /// The whole matrix on the block-sum bases.
    pub fn to_linmap(&self) -> LinMap {
        let dims = |bs: &[ContingencyMatrix]| {
            let mut offs = Vec::new();
            let mut total = 0;
            for b in bs {
                offs.push(total);
                total += PermModule::get(&flat_shape(b)).dim();
            }
            (offs, total)
        };
        let (roff, rdim) = dims(&self.row_blocks);
        let (coff, cdim) = dims(&self.col_blocks);
        let entries = self.blocks.iter().flat_map(|(&(r, c), f)| {
            let (ro, co) = (roff[r], coff[c]);
            f.map().entries().into_iter().map(move |(i, j, v)| (ro + i, co + j, v))
        });
        LinMap::from_entries(blocks_label(&self.col_blocks), blocks_label(&self.row_blocks), rdim, cdim, entries)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let blocks: Vec<serde_json::Value> = self
            .blocks
            .iter()
            .map(|(&(r, c), f)| {
                let mut v = f.to_json();
                v["row"] = json!(r);
                v["col"] = json!(c);
                v
            })
            .collect();
        json!({
            "blocks_row": self.row_blocks,
            "blocks_col": self.col_blocks,
            "blocks": blocks,
        })
    }
}

/// `E_{ij} 1_A` (1-based `i`, `j`): moves one element from cell `(i, j+1)`
/// to cell `(i, j)`. Zero when `A_{i,j+1} = 0`.
pub fn block_raise(a: &ContingencyMatrix, i: usize, j: usize) -> Result<TabloidMorphism> {
    block_ladder(a, i, j, true)
}

/// `F_{ij} 1_A`: moves one element from cell `(i, j)` to cell `(i, j+1)`.
/// Zero when `A_{ij} = 0`.
pub fn block_lower(a: &ContingencyMatrix, i: usize, j: usize) -> Result<TabloidMorphism> {
    block_ladder(a, i, j, false)
}

fn block_ladder(a: &ContingencyMatrix, i: usize, j: usize, up: bool) -> Result<TabloidMorphism> {
    if i == 0 || i > a.nrows() || j == 0 || j >= a.ncols() {
        return Err(Error::Domain(format!("no cells ({i},{j}), ({i},{}) in a {}x{} matrix", j + 1, a.nrows(), a.ncols())));
    }
    let shape = flat_shape(a);
    let p = (i - 1) * a.ncols() + j;
    if up {
        raise(&shape, p, 1)
    } else {
        lower(&shape, p, 1)
    }
}

/// `X_j 1_λ ⊗ 1_μ` or `1_λ ⊗ X_j 1_μ` as a sum of `X_{ij} 1_A` blocks. Left
/// generators use the transposed indexing by `A^μ_λ`, right generators the
/// standard one.
pub fn tensor_generator(side: Side, gen: Generator, j: usize, lambda: &[usize], mu: &[usize]) -> Result<BlockMorphism> {
    let (rows, cols) = match side {
        Side::Right => (lambda, mu),
        Side::Left => (mu, lambda),
    };
    if j == 0 || j >= cols.len() {
        return Err(Error::Domain(format!("generator index {j} out of range for {cols:?}")));
    }
    let up = gen == Generator::E;
    let mut shifted: Vec<i64> = cols.iter().map(|&x| x as i64).collect();
    let delta = if up { 1 } else { -1 };
    shifted[j - 1] += delta;
    shifted[j] -= delta;
    let col_blocks = enumerate_contingency(rows, cols)?;
    let row_blocks = if shifted.iter().any(|&x| x < 0) {
        Vec::new()
    } else {
        let shifted: Vec<usize> = shifted.iter().map(|&x| x as usize).collect();
        enumerate_contingency(rows, &shifted)?
    };
    let position: HashMap<&ContingencyMatrix, usize> = row_blocks.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut out = BlockMorphism::zero(row_blocks.clone(), col_blocks.clone());
    for (c, a) in col_blocks.iter().enumerate() {
        for i in 1..=rows.len() {
            if let Some(target) = a.shifted(i - 1, j - 1, up) {
                let f = block_ladder(a, i, j, up)?;
                out.insert(position[&target], c, f)?;
            }
        }
    }
    Ok(out)
}

/// Ground truth for `f ⊗ g`: the Kronecker product of the matrices,
/// conjugated into block form by the decompositions of source and target.
pub fn oracle_tensor(f: &TabloidMorphism, g: &TabloidMorphism) -> Result<BlockMorphism> {
    oracle_tensor_indexed(f, g, Indexing::Standard)
}

pub fn oracle_tensor_indexed(f: &TabloidMorphism, g: &TabloidMorphism, indexing: Indexing) -> Result<BlockMorphism> {
    let as_comp = |s: &[i64]| -> Result<Vec<usize>> {
        s.iter()
            .map(|&x| usize::try_from(x).map_err(|_| Error::Domain(format!("negative shape {s:?}"))))
            .collect()
    };
    let (fs, ft) = (as_comp(f.source())?, as_comp(f.target())?);
    let (gs, gt) = (as_comp(g.source())?, as_comp(g.target())?);
    let degree = |s: &[usize]| s.iter().sum::<usize>();
    if degree(&fs) != degree(&gs) || degree(&ft) != degree(&gt) {
        return Err(Error::Domain("tensor factors of different degrees".into()));
    }
    let src = decompose_tensor_indexed(&fs, &gs, indexing)?;
    let tgt = decompose_tensor_indexed(&ft, &gt, indexing)?;
    let product = f.map().tensor(g.map());
    let mut per_block: BTreeMap<(usize, usize), Vec<(usize, usize, Rational)>> = BTreeMap::new();
    for (r, c, v) in product.entries() {
        let (rb, ri) = tgt.locate(tgt.bijection[r]);
        let (cb, ci) = src.locate(src.bijection[c]);
        per_block.entry((rb, cb)).or_default().push((ri, ci, v));
    }
    let mut out = BlockMorphism::zero(tgt.blocks.clone(), src.blocks.clone());
    for ((rb, cb), entries) in per_block {
        let (s, t) = (flat_shape(&src.blocks[cb]), flat_shape(&tgt.blocks[rb]));
        let (ms, mt) = (PermModule::get(&s), PermModule::get(&t));
        let map = LinMap::from_entries(ms.label(), mt.label(), mt.dim(), ms.dim(), entries);
        out.insert(rb, cb, TabloidMorphism::new(s, t, map)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Permutation;
    use crate::linear::int;
    use crate::tabloid::{canonical_iso, circle_product, split};

    fn cm(rows: &[&[usize]]) -> ContingencyMatrix {
        ContingencyMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn kappa_shapes(d: &TensorDecomposition) -> Vec<Vec<usize>> {
        d.blocks.iter().map(|a| a.flattened().iter().copied().filter(|&x| x > 0).collect()).collect()
    }

    #[test]
    fn small_decompositions() {
        let d = decompose_tensor(&[3, 1], &[2, 2]).unwrap();
        assert_eq!(kappa_shapes(&d), vec![vec![2, 1, 1], vec![1, 2, 1]]);
        let d = decompose_tensor(&[3, 1], &[3, 1]).unwrap();
        assert_eq!(kappa_shapes(&d), vec![vec![3, 1], vec![2, 1, 1]]);
        let d = decompose_tensor(&[3, 1], &[4]).unwrap();
        assert_eq!(kappa_shapes(&d), vec![vec![3, 1]]);
        let d = decompose_tensor(&[4], &[4]).unwrap();
        assert_eq!(d.bijection, vec![0]);
        assert!(decompose_tensor(&[2], &[3]).is_err());
    }

    #[test]
    fn bijection_is_a_permutation() {
        let d = decompose_tensor(&[2, 1, 1], &[2, 2]).unwrap();
        let mut seen = d.bijection.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..d.dim()).collect::<Vec<_>>());
    }

    #[test]
    fn block_ladders() {
        let a = cm(&[&[2, 1], &[0, 1]]);
        let e = block_raise(&a, 1, 1).unwrap();
        assert_eq!(e.target(), &[3, 0, 0, 1]);
        assert!(block_raise(&cm(&[&[2, 0], &[1, 1]]), 1, 1).unwrap().is_zero());
        assert!(block_lower(&cm(&[&[0, 2], &[1, 1]]), 1, 1).unwrap().is_zero());
        assert!(block_raise(&a, 1, 2).is_err());
    }

    #[test]
    fn identity_tensor_identity() {
        let id = TabloidMorphism::identity(&[2, 1]);
        let blocks = oracle_tensor(&id, &TabloidMorphism::identity(&[1, 2])).unwrap();
        assert_eq!(blocks, BlockMorphism::identity(enumerate_contingency(&[2, 1], &[1, 2]).unwrap()));
    }

    #[test]
    fn generators_match_the_oracle_in_degree_three() {
        let shapes: Vec<Vec<usize>> = vec![vec![3], vec![2, 1], vec![1, 1, 1]];
        for lambda in &shapes {
            for mu in &shapes {
                let (l, m): (Vec<i64>, Vec<i64>) = (
                    lambda.iter().map(|&x| x as i64).collect(),
                    mu.iter().map(|&x| x as i64).collect(),
                );
                for j in 1..mu.len() {
                    for gen in [Generator::E, Generator::F] {
                        let g = if gen == Generator::E { raise(&m, j, 1) } else { lower(&m, j, 1) }.unwrap();
                        let oracle = oracle_tensor(&TabloidMorphism::identity(&l), &g).unwrap();
                        assert_eq!(tensor_generator(Side::Right, gen, j, lambda, mu).unwrap(), oracle);
                    }
                }
                for j in 1..lambda.len() {
                    for gen in [Generator::E, Generator::F] {
                        let f = if gen == Generator::E { raise(&l, j, 1) } else { lower(&l, j, 1) }.unwrap();
                        let oracle = oracle_tensor_indexed(&f, &TabloidMorphism::identity(&m), Indexing::Transposed).unwrap();
                        assert_eq!(tensor_generator(Side::Left, gen, j, lambda, mu).unwrap(), oracle);
                    }
                }
            }
        }
    }

    #[test]
    fn worked_split_example() {
        // 1_(3,1) ⊗ Δ_{2,2}, with Δ_{2,2} = F^(2) 1_(4,0)
        let delta = lower(&[4, 0], 1, 2).unwrap();
        let oracle = oracle_tensor(&TabloidMorphism::identity(&[3, 1]), &delta).unwrap();
        assert_eq!(oracle.row_blocks, vec![cm(&[&[2, 1], &[0, 1]]), cm(&[&[1, 2], &[1, 0]])]);
        let expected = circle_product(&split(2, 1), &TabloidMorphism::identity(&[1]));
        for r in 0..2 {
            let block = oracle.block(r, 0);
            let kappa: Vec<i64> = block.target().iter().copied().filter(|&x| x > 0).collect();
            let straightened = canonical_iso(&kappa).unwrap().compose(&block).unwrap();
            assert_eq!(straightened, expected, "block {r}");
        }
        let first = tensor_generator(Side::Right, Generator::F, 1, &[3, 1], &[4, 0]).unwrap();
        let second = tensor_generator(Side::Right, Generator::F, 1, &[3, 1], &[3, 1]).unwrap();
        assert_eq!(second.compose(&first).unwrap(), oracle.scale(&int(2)));
    }

    #[test]
    fn tensor_tabloids_follow_moves() {
        let t: Tabloid = "1,2|3".parse().unwrap();
        let t2: Tabloid = "1|2,3".parse().unwrap();
        let joint = tensor_tabloid(&t, &t2).unwrap();
        assert_eq!(joint.to_string(), "1|2||3");
        let lhs = tensor_tabloid(&t.moved(2, &[1]).unwrap(), &t2.moved(2, &[1]).unwrap()).unwrap();
        assert_eq!(lhs, joint.moved(4, &[1]).unwrap());
    }

    #[test]
    fn block_form_is_equivariant() {
        let (lambda, mu) = (vec![2usize, 1], vec![1usize, 2]);
        let d = decompose_tensor(&lambda, &mu).unwrap();
        let ml = PermModule::get(&[2, 1]);
        let mm = PermModule::get(&[1, 2]);
        for g in Permutation::all(3) {
            let action = ml.permutation_matrix(&g).unwrap().tensor(&mm.permutation_matrix(&g).unwrap());
            let p = d.bijection_matrix(action.domain());
            let conj = p.compose(&action).unwrap().compose(&p.transpose().relabel(p.codomain(), p.domain())).unwrap();
            for (r, c, _) in conj.entries() {
                assert_eq!(d.locate(r).0, d.locate(c).0);
            }
            for (b, a) in d.blocks.iter().enumerate() {
                let m = PermModule::get(&flat_shape(a));
                let local = m.permutation_matrix(&g).unwrap();
                for (r, c, v) in local.entries() {
                    assert_eq!(conj.get(d.offsets[b] + r, d.offsets[b] + c), v);
                }
            }
        }
    }
}
