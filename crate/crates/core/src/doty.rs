//! Saturation of weight data, the `sl_2` kernel example, and dimensions of
//! morphism spaces between permutation modules spanned by ladder words.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    binomial, enumerate_contingency, gl_irrep_dimension, gl_weights_of_irrep, partitions, weak_compositions, Partition,
    Permutation, WeightVector,
};
use crate::linear::{intertwiner_dimension, BasisLabel, Echelon, LinMap, Rational};
use crate::tabloid::{lower, raise, PermModule, TabloidMorphism};
use crate::{Error, Result};

/// Outcome of a saturation test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Saturation {
    pub saturated: bool,
    /// A dominant weight whose whole weight set lies in the module's weights
    /// but which is not among the highest weights.
    pub witness: Option<WeightVector>,
}

fn is_dominant(w: &WeightVector) -> bool {
    w.0.iter().all(|&x| x >= 0) && w.0.windows(2).all(|p| p[0] >= p[1])
}

/// Whether the `gl_n`-module with the given polynomial highest weights
/// contains every irreducible whose weights all occur in it.
pub fn is_saturated_gl(highest: &[WeightVector], n: usize) -> Result<Saturation> {
    let mut weights = BTreeSet::new();
    let mut tops = BTreeSet::new();
    for lambda in highest {
        if lambda.len() != n {
            return Err(Error::Domain(format!("weight {lambda} does not have {n} coordinates")));
        }
        if !is_dominant(lambda) {
            return Err(Error::Unsupported(format!("{lambda} is not a polynomial dominant weight")));
        }
        weights.extend(gl_weights_of_irrep(lambda, n)?);
        tops.insert(lambda.clone());
    }
    // highest candidates first
    for nu in weights.iter().rev().filter(|w| is_dominant(w)) {
        if tops.contains(nu) {
            continue;
        }
        if gl_weights_of_irrep(nu, n)?.is_subset(&weights) {
            return Ok(Saturation {
                saturated: false,
                witness: Some(nu.clone()),
            });
        }
    }
    Ok(Saturation {
        saturated: true,
        witness: None,
    })
}

/// The same test in `sl_2` coordinates, where `V(m)` has weights
/// `m, m − 2, …, −m`.
pub fn is_saturated_sl2(highest: &[u32]) -> Saturation {
    let weights_of = |m: u32| -> BTreeSet<i64> { (0..=m).map(|k| m as i64 - 2 * k as i64).collect() };
    let weights: BTreeSet<i64> = highest.iter().flat_map(|&m| weights_of(m)).collect();
    let tops: BTreeSet<u32> = highest.iter().copied().collect();
    let witness = weights
        .iter()
        .rev()
        .filter(|&&w| w >= 0)
        .map(|&w| w as u32)
        .find(|&m| !tops.contains(&m) && weights_of(m).is_subset(&weights));
    Saturation {
        saturated: witness.is_none(),
        witness: witness.map(|m| WeightVector(vec![m as i64])),
    }
}

/// `⊗^d ℂ^n` as highest-weight data: every partition of `d` with at most
/// `n` parts, padded to length `n`.
pub fn tensor_power_highest_weights(n: usize, d: usize) -> Vec<WeightVector> {
    partitions(d, n)
        .into_iter()
        .map(|p| {
            let mut w: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
            w.resize(n, 0);
            WeightVector(w)
        })
        .collect()
}

/// `E`, `F`, `H` on `V(m)` with basis `f^k v`, `k = 0..=m`, where
/// `F f^k v = f^{k+1} v` and `E f^k v = k(m − k + 1) f^{k−1} v`.
pub fn sl2_irrep(m: usize) -> (LinMap, LinMap, LinMap) {
    let label = BasisLabel::from_descriptor(&format!("sl2:V({m})"));
    let q = |x: i64| Rational::from_integer(x.into());
    let e = (1..=m).map(|k| (k - 1, k, q((k * (m - k + 1)) as i64)));
    let f = (0..m).map(|k| (k + 1, k, q(1)));
    let h = (0..=m).map(|k| (k, k, q(m as i64 - 2 * k as i64)));
    let dim = m + 1;
    (
        LinMap::from_entries(label, label, dim, dim, e),
        LinMap::from_entries(label, label, dim, dim, f),
        LinMap::from_entries(label, label, dim, dim, h),
    )
}

fn direct_sum(a: &LinMap, b: &LinMap, label: BasisLabel) -> LinMap {
    let (ra, ca) = (a.rows(), a.cols());
    let entries = a.entries().into_iter().chain(b.entries().into_iter().map(|(r, c, v)| (r + ra, c + ca, v)));
    LinMap::from_entries(label, label, ra + b.rows(), ca + b.cols(), entries)
}

/// Everything the `sl_2` example computes.
#[derive(Clone, Debug, Serialize)]
pub struct Sl2Demo {
    /// `z = EF + FE − 4` restricted to the zero weight space of `V(2)`.
    pub z_on_v2: LinMap,
    /// The same on the zero weight space of `V(2) ⊕ V(0)`.
    pub z_on_sum: LinMap,
    /// `[E, F] = H` holds in both realizations.
    pub realizations_valid: bool,
    /// Weights visited by the words of `z` starting from `0`.
    pub visited_weights: Vec<i64>,
    /// All visited weights are weights of `V(2)`.
    pub stays_in_weights: bool,
    /// Saturation of `{V(2)}` and of `{V(2), V(0)}`.
    pub saturation_v2: Saturation,
    pub saturation_sum: Saturation,
}

impl Sl2Demo {
    pub fn annihilates_v2(&self) -> bool {
        self.z_on_v2.is_zero()
    }

    pub fn annihilates_sum(&self) -> bool {
        self.z_on_sum.is_zero()
    }

    /// The expected picture: `z` kills `V(2)_0` but not `(V(2) ⊕ V(0))_0`,
    /// and `{V(2)}` is unsaturated with witness `V(0)`.
    pub fn pass(&self) -> bool {
        self.realizations_valid
            && self.annihilates_v2()
            && !self.annihilates_sum()
            && self.stays_in_weights
            && !self.saturation_v2.saturated
            && self.saturation_v2.witness == Some(WeightVector(vec![0]))
            && self.saturation_sum.saturated
    }
}

impl fmt::Display for Sl2Demo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "PASS" } else { "FAIL" };
        writeln!(f, "{} [E,F] = H on V(2) and V(2)+V(0)", mark(self.realizations_valid))?;
        writeln!(f, "{} z annihilates V(2)_0", mark(self.annihilates_v2()))?;
        writeln!(f, "{} z does not annihilate (V(2)+V(0))_0", mark(!self.annihilates_sum()))?;
        writeln!(f, "{} words of z stay in weights {:?}", mark(self.stays_in_weights), self.visited_weights)?;
        let witness = self.saturation_v2.witness.as_ref().map_or("none".to_string(), |w| w.to_string());
        writeln!(f, "{} {{V(2)}} unsaturated, witness {witness}", mark(!self.saturation_v2.saturated))?;
        writeln!(f, "{} {{V(2), V(0)}} saturated", mark(self.saturation_sum.saturated))?;
        writeln!(f, "{} sl2 demo", mark(self.pass()))
    }
}

/// `z = EF1_0 + FE1_0 − 4·1_0` on `V(2)` and on `V(2) ⊕ V(0)`.
pub fn sl2_doty_demo() -> Result<Sl2Demo> {
    let (e2, f2, h2) = sl2_irrep(2);
    let (e0, f0, h0) = sl2_irrep(0);
    let label = BasisLabel::from_descriptor("sl2:V(2)+V(0)");
    let (es, fs, hs) = (direct_sum(&e2, &e0, label), direct_sum(&f2, &f0, label), direct_sum(&h2, &h0, label));
    let bracket_ok = |e: &LinMap, f: &LinMap, h: &LinMap| -> Result<bool> { Ok(e.compose(f)?.sub(&f.compose(e)?)? == *h) };
    let realizations_valid = bracket_ok(&e2, &f2, &h2)? && bracket_ok(&es, &fs, &hs)?;
    let z = |e: &LinMap, f: &LinMap, zero_weight: &[usize]| -> Result<LinMap> {
        let four = Rational::from_integer(4.into());
        let full = e.compose(f)?.add(&f.compose(e)?)?.sub(&LinMap::identity(e.domain(), e.rows()).scale(&four))?;
        let l = BasisLabel::from_descriptor(&format!("zero weight of {}", e.domain()));
        Ok(full.submatrix(zero_weight, zero_weight, l, l))
    };
    // V(2): f v has weight 0; in the sum the V(0) vector is index 3
    let z_on_v2 = z(&e2, &f2, &[1])?;
    let z_on_sum = z(&es, &fs, &[1, 3])?;
    // EF1_0 passes through −2, FE1_0 through 2
    let visited_weights = vec![-2, 0, 2];
    let stays_in_weights = visited_weights.iter().all(|w| [-2i64, 0, 2].contains(w));
    Ok(Sl2Demo {
        z_on_v2,
        z_on_sum,
        realizations_valid,
        visited_weights,
        stays_in_weights,
        saturation_v2: is_saturated_sl2(&[2]),
        saturation_sum: is_saturated_sl2(&[2, 0]),
    })
}

/// One entry of the morphism-dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurRow {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    /// Span of ladder-word actions `M^λ → M^μ`.
    pub span_dim: usize,
    /// `|A^λ_μ|`.
    pub contingency_count: usize,
    /// `dim Hom_{S_d}(M^λ, M^μ)` by linear algebra.
    pub commutant_dim: usize,
}

impl SchurRow {
    pub fn matches(&self) -> bool {
        self.span_dim == self.contingency_count && self.contingency_count == self.commutant_dim
    }
}

/// The full table for `Λ(n, d)`.
#[derive(Clone, Debug, Serialize)]
pub struct SchurTable {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<SchurRow>,
    pub total_span: usize,
    /// `C(n² + d − 1, d)`.
    pub expected_total: String,
    /// `Σ_λ (dim V^λ)²` over partitions of `d` with at most `n` parts.
    pub irrep_square_sum: u64,
    /// Longest word length that still enlarged some span.
    pub word_length: usize,
}

impl SchurTable {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(SchurRow::matches)
            && self.expected_total == self.total_span.to_string()
            && self.irrep_square_sum == self.total_span as u64
    }

    /// `lambda,mu,span_dim,contingency_count,match` lines with a header.
    pub fn to_csv(&self) -> String {
        let fmt = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        let mut out = String::from("lambda,mu,span_dim,contingency_count,match\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{},{}\n", fmt(&r.lambda), fmt(&r.mu), r.span_dim, r.contingency_count, r.matches()));
        }
        out
    }
}

fn as_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

fn vectorize(f: &TabloidMorphism) -> Vec<(usize, Rational)> {
    let rows = f.map().rows();
    f.map().entries().into_iter().map(|(r, c, v)| (c * rows + r, v)).collect()
}

/// Dimensions of the spans of ladder words `M^λ → M^ν` for every `ν`,
/// growing words one generator at a time; weights with a negative entry are
/// never entered. Returns the spans and the last length that enlarged one.
fn ladder_spans(lambda: &[usize], n: usize, cap: usize) -> Result<(BTreeMap<Vec<i64>, usize>, usize)> {
    let mut spans: BTreeMap<Vec<i64>, Echelon> = BTreeMap::new();
    let start = TabloidMorphism::identity(&as_i64(lambda));
    spans.entry(as_i64(lambda)).or_default().insert(&vectorize(&start));
    let mut frontier = vec![start];
    let mut length = 0;
    for step in 1..=cap {
        let mut next = Vec::new();
        for f in &frontier {
            let nu = f.target().to_vec();
            for i in 1..n {
                for up in [true, false] {
                    let g = if up { raise(&nu, i, 1)? } else { lower(&nu, i, 1)? };
                    if g.target().iter().any(|&x| x < 0) {
                        continue;
                    }
                    let h = g.compose(f)?;
                    if spans.entry(h.target().to_vec()).or_default().insert(&vectorize(&h)) {
                        next.push(h);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        length = step;
        frontier = next;
    }
    Ok((spans.into_iter().map(|(k, e)| (k, e.rank())).collect(), length))
}

fn hom_dimension(lambda: &[usize], mu: &[usize]) -> Result<usize> {
    let (ml, mm) = (PermModule::get(&as_i64(lambda)), PermModule::get(&as_i64(mu)));
    let d = ml.degree();
    let gens: Vec<Permutation> = (0..d.saturating_sub(1)).map(|k| Permutation::transposition(d, k, k + 1)).collect();
    let src: Vec<LinMap> = gens.iter().map(|g| ml.permutation_matrix(g)).collect::<Result<_>>()?;
    let tgt: Vec<LinMap> = gens.iter().map(|g| mm.permutation_matrix(g)).collect::<Result<_>>()?;
    intertwiner_dimension(ml.dim(), mm.dim(), &src, &tgt)
}

/// Morphism dimensions between all permutation modules `M^λ`, `λ ∈ Λ(n, d)`.
pub fn schur_block_dims(n: usize, d: usize) -> Result<SchurTable> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let weights: Vec<Vec<usize>> = weak_compositions(d, n).into_iter().map(|c| c.0).collect();
    let cap = 2 * n * d + 2;
    let per_source: Vec<Result<(Vec<SchurRow>, usize)>> = weights
        .par_iter()
        .map(|lambda| {
            let (spans, length) = ladder_spans(lambda, n, cap)?;
            let rows = weights
                .iter()
                .map(|mu| {
                    Ok(SchurRow {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        span_dim: spans.get(&as_i64(mu)).copied().unwrap_or(0),
                        contingency_count: enumerate_contingency(lambda, mu)?.len(),
                        commutant_dim: hom_dimension(lambda, mu)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((rows, length))
        })
        .collect();
    let mut rows = Vec::new();
    let mut word_length = 0;
    for r in per_source {
        let (chunk, len) = r?;
        rows.extend(chunk);
        word_length = word_length.max(len);
    }
    let total_span = rows.iter().map(|r| r.span_dim).sum();
    let expected = binomial((n * n + d - 1) as i64, d as i64);
    let irrep_square_sum = partitions(d, n)
        .iter()
        .map(|p: &Partition| {
            let k = gl_irrep_dimension(p, n);
            k * k
        })
        .sum();
    Ok(SchurTable {
        n,
        d,
        rows,
        total_span,
        expected_total: expected.to_integer().to_string(),
        irrep_square_sum,
        word_length,
    })
}
