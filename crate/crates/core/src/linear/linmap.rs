use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{format_rational, int, parse_rational};
use super::{BasisLabel, Rational};
use crate::{Error, Result};

/// A sparse matrix between two labeled bases.
///
/// Entries are stored column by column (the image of each domain basis
/// vector), sorted by row, with no explicit zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    domain: BasisLabel,
    codomain: BasisLabel,
    rows: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl LinMap {
    pub fn zero(domain: BasisLabel, codomain: BasisLabel, rows: usize, cols: usize) -> Self {
        LinMap {
            domain,
            codomain,
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(label: BasisLabel, dim: usize) -> Self {
        LinMap {
            domain: label,
            codomain: label,
            rows: dim,
            columns: (0..dim).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns<I>(domain: BasisLabel, codomain: BasisLabel, rows: usize, columns: I) -> Self
    where
        I: IntoIterator<Item = BTreeMap<usize, Rational>>,
    {
        let columns = columns
            .into_iter()
            .map(|col| {
                col.into_iter()
                    .inspect(|(r, _)| assert!(*r < rows, "row index {r} out of range {rows}"))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        LinMap {
            domain,
            codomain,
            rows,
            columns,
        }
    }

    /// Builds a map from `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries<I>(domain: BasisLabel, codomain: BasisLabel, rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc = vec![BTreeMap::new(); cols];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of range {rows}x{cols}");
            *acc[c].entry(r).or_insert_with(Rational::zero) += v;
        }
        Self::from_columns(domain, codomain, rows, acc)
    }

    /// Dense integer matrix on coordinate bases, given row by row.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let entries = rows.iter().enumerate().flat_map(|(r, row)| {
            assert_eq!(row.len(), ncols, "ragged matrix");
            row.iter().enumerate().map(move |(c, &v)| (r, c, int(v)))
        });
        Self::from_entries(
            BasisLabel::coordinates(ncols),
            BasisLabel::coordinates(nrows),
            nrows,
            ncols,
            entries,
        )
    }

    pub fn domain(&self) -> BasisLabel {
        self.domain
    }

    pub fn codomain(&self) -> BasisLabel {
        self.codomain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols() && self.domain == self.codomain
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.columns[c]
            .binary_search_by_key(&r, |(row, _)| *row)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Nonzero entries sorted by `(row, col)`.
    pub fn entries(&self) -> Vec<(usize, usize, Rational)> {
        let mut out: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        out.sort_by_key(|a| (a.0, a.1));
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    /// Same matrix, different basis labels.
    pub fn relabel(mut self, domain: BasisLabel, codomain: BasisLabel) -> Self {
        self.domain = domain;
        self.codomain = codomain;
        self
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.domain, self.codomain, self.rows, self.cols());
        }
        let mut out = self.clone();
        for col in &mut out.columns {
            for (_, v) in col.iter_mut() {
                *v *= k;
            }
        }
        out
    }

    fn check_same_shape(&self, other: &LinMap) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::Boundary(format!(
                "cannot add maps {}->{} and {}->{}",
                self.domain, self.codomain, other.domain, other.codomain
            )));
        }
        debug_assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        Ok(())
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.axpy(&Rational::one(), other)
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.axpy(&-Rational::one(), other)
    }

    /// `self + k * other`.
    pub fn axpy(&self, k: &Rational, other: &LinMap) -> Result<LinMap> {
        self.check_same_shape(other)?;
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| {
            let mut acc: BTreeMap<usize, Rational> = a.iter().cloned().collect();
            for (r, v) in b {
                *acc.entry(*r).or_insert_with(Rational::zero) += k * v;
            }
            acc
        });
        Ok(LinMap::from_columns(self.domain, self.codomain, self.rows, columns))
    }

    /// Matrix product `self · inner`, i.e. apply `inner` first.
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap> {
        if self.domain != inner.codomain {
            return Err(Error::Boundary(format!(
                "cannot compose {}->{} after {}->{}",
                self.domain, self.codomain, inner.domain, inner.codomain
            )));
        }
        debug_assert_eq!(self.cols(), inner.rows);
        let columns = inner.columns.iter().map(|col| {
            let mut acc = BTreeMap::new();
            for (k, a) in col {
                for (r, b) in &self.columns[*k] {
                    *acc.entry(*r).or_insert_with(Rational::zero) += a * b;
                }
            }
            acc
        });
        Ok(LinMap::from_columns(inner.domain, self.codomain, self.rows, columns))
    }

    /// Kronecker product; product bases are ordered lexicographically with
    /// the basis of `self` as the major index.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        let (orows, ocols) = (other.rows, other.cols());
        let mut columns = Vec::with_capacity(self.cols() * ocols);
        for a in &self.columns {
            for b in &other.columns {
                let mut col = BTreeMap::new();
                for (ra, va) in a {
                    for (rb, vb) in b {
                        col.insert(ra * orows + rb, va * vb);
                    }
                }
                columns.push(col);
            }
        }
        LinMap::from_columns(
            self.domain.tensor(other.domain),
            self.codomain.tensor(other.codomain),
            self.rows * orows,
            columns,
        )
    }

    pub fn transpose(&self) -> LinMap {
        let entries = self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (c, *r, v.clone())));
        LinMap::from_entries(self.codomain, self.domain, self.cols(), self.rows, entries)
    }

    /// Applies the map to a sparse coordinate vector.
    pub fn apply(&self, v: &BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        let mut acc = BTreeMap::new();
        for (c, a) in v {
            for (r, b) in &self.columns[*c] {
                *acc.entry(*r).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v: &mut Rational| !v.is_zero());
        acc
    }

    /// Restriction to a subset of domain indices and codomain indices, in the
    /// given orders. Entries outside the kept rows are dropped.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize], domain: BasisLabel, codomain: BasisLabel) -> LinMap {
        let row_pos: std::collections::HashMap<usize, usize> = rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let columns = cols.iter().map(|c| {
            self.columns[*c]
                .iter()
                .filter_map(|(r, v)| row_pos.get(r).map(|i| (*i, v.clone())))
                .collect::<BTreeMap<_, _>>()
        });
        LinMap::from_columns(domain, codomain, rows.len(), columns)
    }

    pub fn rank(&self) -> usize {
        super::rank(self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(LinMapJson::from(self)).expect("LinMap serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LinMap> {
        let raw: LinMapJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct LinMapJson {
    domain: BasisLabel,
    codomain: BasisLabel,
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

impl From<&LinMap> for LinMapJson {
    fn from(m: &LinMap) -> Self {
        LinMapJson {
            domain: m.domain,
            codomain: m.codomain,
            rows: m.rows,
            cols: m.cols(),
            entries: m.entries().into_iter().map(|(r, c, v)| (r, c, format_rational(&v))).collect(),
        }
    }
}

impl Serialize for LinMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LinMapJson::from(self).serialize(serializer)
    }
}

impl TryFrom<LinMapJson> for LinMap {
    type Error = Error;

    fn try_from(raw: LinMapJson) -> Result<LinMap> {
        let mut entries = Vec::with_capacity(raw.entries.len());
        for (r, c, v) in raw.entries {
            if r >= raw.rows || c >= raw.cols {
                return Err(Error::Parse(format!("entry ({r}, {c}) outside {}x{}", raw.rows, raw.cols)));
            }
            entries.push((r, c, parse_rational(&v)?));
        }
        Ok(LinMap::from_entries(raw.domain, raw.codomain, raw.rows, raw.cols, entries))
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {} -> {} ({}x{})", self.domain, self.codomain, self.rows, self.cols())?;
        if self.rows <= 16 && self.cols() <= 16 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(format_rational).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  {} nonzero entries", self.nnz())?;
        }
        Ok(())
    }
}
