//! Layered spider and ladder diagrams, their text syntax, and the evaluation
//! functor `Γ` into tabloid morphisms.
//!
//! A diagram is a bottom boundary plus a list of layers read bottom to top.
//! A layer is either a row of local atoms (`id`, `merge`, `split`, `cross`)
//! or a single full-width ladder or bell atom that reads its ambient weight
//! off the incoming boundary.

mod parse;
mod relations;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::linear::{format_rational, Rational};
use crate::tabloid::{local_layer, lower, raise, LocalOp, TabloidMorphism};
use crate::{Error, Result};

pub use parse::{parse, parse_combination};
pub use relations::{
    expand_cross, expand_cross_fe, gl_instances, gl_relation_suite, perm_instances, perm_relation_suite, relation_suite,
    RelationInstance, Suite,
};

/// A local generator. Labels are the strand labels on the lower boundary,
/// except for `Split(k, l)` whose labels are the two upper strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Id(i64),
    Merge(i64, i64),
    Split(i64, i64),
    Cross(i64, i64),
}

impl Atom {
    fn inputs(self) -> Vec<i64> {
        match self {
            Atom::Id(k) => vec![k],
            Atom::Merge(k, l) | Atom::Cross(k, l) => vec![k, l],
            Atom::Split(k, l) => vec![k + l],
        }
    }

    fn outputs(self) -> Vec<i64> {
        match self {
            Atom::Id(k) => vec![k],
            Atom::Merge(k, l) => vec![k + l],
            Atom::Split(k, l) => vec![k, l],
            Atom::Cross(k, l) => vec![l, k],
        }
    }

    fn local_op(self) -> LocalOp {
        match self {
            Atom::Id(_) => LocalOp::Id,
            Atom::Merge(..) => LocalOp::Merge,
            Atom::Split(k, l) => LocalOp::Split(k, l),
            Atom::Cross(..) => LocalOp::Cross,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Id(k) => write!(f, "id({k})"),
            Atom::Merge(k, l) => write!(f, "merge({k},{l})"),
            Atom::Split(k, l) => write!(f, "split({k},{l})"),
            Atom::Cross(k, l) => write!(f, "cross({k},{l})"),
        }
    }
}

/// One horizontal slice of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Local(Vec<Atom>),
    /// `E_i^(r)` with 1-based `i`: moves `r` from strand `i+1` to strand `i`.
    E(usize, usize),
    /// `F_i^(r)`: moves `r` from strand `i` to strand `i+1`.
    F(usize, usize),
    /// Bell `X_j`: raises the weight at strand `j` by 2.
    X(usize),
    /// Cobell `Y_j`: lowers the weight at strand `j` by 2.
    Y(usize),
}

impl Layer {
    /// Output labels given the input labels, or a description of what the
    /// layer needed.
    fn apply(&self, input: &[i64]) -> std::result::Result<Vec<i64>, String> {
        let n = input.len();
        match self {
            Layer::Local(atoms) => {
                let expected: Vec<i64> = atoms.iter().flat_map(|a| a.inputs()).collect();
                if expected != input {
                    return Err(format!("{expected:?}"));
                }
                Ok(atoms.iter().flat_map(|a| a.outputs()).collect())
            }
            Layer::E(i, r) | Layer::F(i, r) => {
                if *i == 0 || *i >= n {
                    return Err(format!("two strands at {i}, {}", i + 1));
                }
                let mut out = input.to_vec();
                let (to, from) = if matches!(self, Layer::E(..)) { (i - 1, *i) } else { (*i, i - 1) };
                out[to] += *r as i64;
                out[from] -= *r as i64;
                Ok(out)
            }
            Layer::X(j) | Layer::Y(j) => {
                if *j == 0 || *j > n {
                    return Err(format!("a strand at {j}"));
                }
                let mut out = input.to_vec();
                out[j - 1] += if matches!(self, Layer::X(_)) { 2 } else { -2 };
                Ok(out)
            }
        }
    }

    /// The same layer shifted `offset` strands to the right.
    fn shifted(&self, offset: usize) -> Layer {
        match self {
            Layer::Local(a) => Layer::Local(a.clone()),
            Layer::E(i, r) => Layer::E(i + offset, *r),
            Layer::F(i, r) => Layer::F(i + offset, *r),
            Layer::X(j) => Layer::X(j + offset),
            Layer::Y(j) => Layer::Y(j + offset),
        }
    }

    pub fn is_bell(&self) -> bool {
        matches!(self, Layer::X(_) | Layer::Y(_))
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layer::Local(atoms) => write!(f, "{}", atoms.iter().join(" | ")),
            Layer::E(i, r) => write!(f, "E({i},{r})"),
            Layer::F(i, r) => write!(f, "F({i},{r})"),
            Layer::X(j) => write!(f, "X({j})"),
            Layer::Y(j) => write!(f, "Y({j})"),
        }
    }
}

/// A boundary-checked layered diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpiderDiagram {
    bottom: Vec<i64>,
    layers: Vec<Layer>,
    boundaries: Vec<Vec<i64>>,
}

impl SpiderDiagram {
    pub fn new(bottom: Vec<i64>, layers: Vec<Layer>) -> Result<Self> {
        let mut boundaries = vec![bottom.clone()];
        for (idx, layer) in layers.iter().enumerate() {
            let cur = boundaries.last().expect("nonempty");
            match layer.apply(cur) {
                Ok(next) => boundaries.push(next),
                Err(expected) => {
                    return match layer {
                        Layer::Local(atoms) => Err(Error::LayerBoundary {
                            layer: idx,
                            expected: cur.clone(),
                            found: atoms.iter().flat_map(|a| a.inputs()).collect(),
                        }),
                        _ => Err(Error::Boundary(format!(
                            "layer {idx} ({layer}) needs {expected} but the boundary is {cur:?}"
                        ))),
                    };
                }
            }
        }
        Ok(SpiderDiagram {
            bottom,
            layers,
            boundaries,
        })
    }

    /// The diagram with no layers.
    pub fn identity(boundary: Vec<i64>) -> Self {
        SpiderDiagram {
            bottom: boundary.clone(),
            layers: Vec::new(),
            boundaries: vec![boundary],
        }
    }

    pub fn bottom(&self) -> &[i64] {
        &self.bottom
    }

    pub fn top(&self) -> &[i64] {
        self.boundaries.last().expect("nonempty")
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// Boundary labels below layer `k`, and the top boundary at index
    /// `layers().len()`.
    pub fn boundaries(&self) -> &[Vec<i64>] {
        &self.boundaries
    }

    /// A diagram with a negative label anywhere is the zero morphism.
    pub fn has_negative_label(&self) -> bool {
        self.boundaries.iter().flatten().any(|&x| x < 0)
    }

    /// `upper ∘ self`.
    pub fn then(&self, upper: &SpiderDiagram) -> Result<Self> {
        if self.top() != upper.bottom() {
            return Err(Error::Boundary(format!(
                "cannot stack a diagram on {:?} over one ending in {:?}",
                upper.bottom(),
                self.top()
            )));
        }
        let mut layers = self.layers.clone();
        layers.extend(upper.layers.iter().cloned());
        SpiderDiagram::new(self.bottom.clone(), layers)
    }

    /// Horizontal juxtaposition. Local layers at equal heights are placed
    /// side by side; a full-width layer on either side gets a layer of its
    /// own.
    pub fn beside(&self, right: &SpiderDiagram) -> Result<Self> {
        let offset_at = |k: usize| self.boundaries[k.min(self.layers.len())].len();
        let ids = |labels: &[i64]| labels.iter().map(|&x| Atom::Id(x)).collect::<Vec<_>>();
        let mut layers = Vec::new();
        let (mut li, mut ri) = (0usize, 0usize);
        while li < self.layers.len() || ri < right.layers.len() {
            let left_layer = self.layers.get(li);
            let right_layer = right.layers.get(ri);
            let right_now = &right.boundaries[ri];
            let left_now = &self.boundaries[li];
            match (left_layer, right_layer) {
                (Some(Layer::Local(a)), Some(Layer::Local(b))) => {
                    layers.push(Layer::Local(a.iter().chain(b).copied().collect()));
                    li += 1;
                    ri += 1;
                }
                (Some(l), _) => {
                    layers.push(match l {
                        Layer::Local(a) => Layer::Local(a.iter().copied().chain(ids(right_now)).collect()),
                        wide => wide.clone(),
                    });
                    li += 1;
                }
                (None, Some(r)) => {
                    layers.push(match r {
                        Layer::Local(b) => Layer::Local(ids(left_now).into_iter().chain(b.iter().copied()).collect()),
                        wide => wide.shifted(offset_at(li)),
                    });
                    ri += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        let bottom = self.bottom.iter().chain(&right.bottom).copied().collect();
        SpiderDiagram::new(bottom, layers)
    }
}

impl fmt::Display for SpiderDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "on [{}]:", self.bottom.iter().join(","))?;
        if !self.layers.is_empty() {
            write!(f, " {}", self.layers.iter().join(" ; "))?;
        }
        Ok(())
    }
}

/// A formal ℚ-linear combination of diagrams with common boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderExpr {
    bottom: Vec<i64>,
    top: Vec<i64>,
    terms: BTreeMap<SpiderDiagram, Rational>,
}

impl SpiderExpr {
    pub fn zero(bottom: Vec<i64>, top: Vec<i64>) -> Self {
        SpiderExpr {
            bottom,
            top,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: SpiderDiagram) -> Self {
        Self::term(Rational::one(), d)
    }

    pub fn term(coeff: Rational, d: SpiderDiagram) -> Self {
        let mut e = Self::zero(d.bottom().to_vec(), d.top().to_vec());
        if !coeff.is_zero() {
            e.terms.insert(d, coeff);
        }
        e
    }

    pub fn bottom(&self) -> &[i64] {
        &self.bottom
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    /// Terms in canonical (structural) order.
    pub fn terms(&self) -> impl Iterator<Item = (&SpiderDiagram, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_boundaries(&self, other: &SpiderExpr) -> Result<()> {
        if self.bottom != other.bottom || self.top != other.top {
            return Err(Error::Boundary(format!(
                "cannot add {:?}->{:?} and {:?}->{:?}",
                self.bottom, self.top, other.bottom, other.top
            )));
        }
        Ok(())
    }

    /// `self + k·other`.
    pub fn axpy(&self, k: &Rational, other: &SpiderExpr) -> Result<Self> {
        self.check_boundaries(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            let entry = out.terms.entry(d.clone()).or_insert_with(Rational::zero);
            *entry += k * c;
            if entry.is_zero() {
                out.terms.remove(d);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &SpiderExpr) -> Result<Self> {
        self.axpy(&Rational::one(), other)
    }

    pub fn sub(&self, other: &SpiderExpr) -> Result<Self> {
        self.axpy(&-Rational::one(), other)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.bottom.clone(), self.top.clone());
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(d, c)| (d.clone(), c * k)).collect();
        }
        out
    }

    /// Bilinear vertical composition: `lower` first, then `upper`.
    pub fn vcompose(upper: &SpiderExpr, lower: &SpiderExpr) -> Result<Self> {
        if lower.top != upper.bottom {
            return Err(Error::Boundary(format!(
                "cannot compose: lower ends in {:?}, upper starts at {:?}",
                lower.top, upper.bottom
            )));
        }
        let mut out = Self::zero(lower.bottom.clone(), upper.top.clone());
        for (dl, cl) in &lower.terms {
            for (du, cu) in &upper.terms {
                out = out.add(&Self::term(cl * cu, dl.then(du)?))?;
            }
        }
        Ok(out)
    }

    /// Bilinear horizontal composition.
    pub fn hcompose(left: &SpiderExpr, right: &SpiderExpr) -> Result<Self> {
        let bottom = left.bottom.iter().chain(&right.bottom).copied().collect();
        let top = left.top.iter().chain(&right.top).copied().collect();
        let mut out = Self::zero(bottom, top);
        for (dl, cl) in &left.terms {
            for (dr, cr) in &right.terms {
                out = out.add(&Self::term(cl * cr, dl.beside(dr)?))?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SpiderExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0 * on [{}]", self.bottom.iter().join(","))?;
            if self.top != self.bottom {
                write!(f, " -> [{}]", self.top.iter().join(","))?;
            }
            return write!(f, ":");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{d}")?;
            } else {
                write!(f, "{} * {d}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

type LayerKey = (Vec<i64>, Layer);
type LayerCache = RwLock<HashMap<LayerKey, Arc<TabloidMorphism>>>;

fn layer_cache() -> &'static LayerCache {
    static CACHE: OnceLock<LayerCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Γ` of a single layer on the given input boundary.
pub fn evaluate_layer(input: &[i64], layer: &Layer) -> Result<Arc<TabloidMorphism>> {
    let key = (input.to_vec(), layer.clone());
    if let Some(m) = layer_cache().read().expect("cache lock").get(&key) {
        return Ok(Arc::clone(m));
    }
    let value = match layer {
        Layer::Local(atoms) => {
            let ops: Vec<LocalOp> = atoms.iter().map(|a| a.local_op()).collect();
            local_layer(input, &ops)?
        }
        Layer::E(i, r) => raise(input, *i, *r)?,
        Layer::F(i, r) => lower(input, *i, *r)?,
        Layer::X(_) | Layer::Y(_) => {
            return Err(Error::Unsupported(
                "bells only evaluate on symplectic weight spaces".into(),
            ))
        }
    };
    let value = Arc::new(value);
    layer_cache().write().expect("cache lock").insert(key, Arc::clone(&value));
    Ok(value)
}

/// `Γ` of one diagram.
pub fn evaluate_diagram(d: &SpiderDiagram) -> Result<TabloidMorphism> {
    if d.layers.iter().any(Layer::is_bell) {
        return Err(Error::Unsupported("bells only evaluate on symplectic weight spaces".into()));
    }
    if d.has_negative_label() {
        return Ok(TabloidMorphism::zero(d.bottom(), d.top()));
    }
    let mut acc = TabloidMorphism::identity(d.bottom());
    for (k, layer) in d.layers.iter().enumerate() {
        let step = evaluate_layer(&d.boundaries[k], layer)?;
        acc = step.compose(&acc)?;
    }
    Ok(acc)
}

/// The functor `Γ`: `M^{κ(bottom)} → M^{κ(top)}`, linear in the expression.
pub fn evaluate(e: &SpiderExpr) -> Result<TabloidMorphism> {
    let mut acc = TabloidMorphism::zero(&e.bottom, &e.top);
    for (d, c) in &e.terms {
        let value = evaluate_diagram(d)?;
        acc = acc.axpy(c, &value.with_shapes(&e.bottom, &e.top)?)?;
    }
    Ok(acc)
}
