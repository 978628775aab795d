//! Brauer and walled Brauer diagram algebras, their actions on tensor space,
//! and the symplectic ladder calculus with bells.
//!
//! Dots are numbered `0..d` along the top row and `d..2d` along the bottom
//! row. In a product `xy` the diagram `x` sits above `y`.

mod action;
mod ladder;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::combinatorics::Permutation;
use crate::linear::{format_rational, Rational};
use crate::{Error, Result};

pub use action::{
    act_brauer, act_lie_on_tensor, brauer_generator_matrix, brauer_word_matrix, duality_check, lie_generator_matrix,
    lie_generators, lie_tensor_matrix, sp_weight_space_basis, DualityReport, LieAlgebra, LieGen, SignedTensorSpace,
    TensorKind,
};
pub use ladder::{sp_ladder_relation_suite, SpLadders};

/// A perfect matching on the `2d` dots of two rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    partner: Vec<usize>,
}

impl BrauerDiagram {
    pub fn new(d: usize, partner: Vec<usize>) -> Result<Self> {
        if partner.len() != 2 * d {
            return Err(Error::Domain(format!("{} partners for {} dots", partner.len(), 2 * d)));
        }
        for (a, &b) in partner.iter().enumerate() {
            if b >= 2 * d || b == a || partner[b] != a {
                return Err(Error::Domain(format!("{partner:?} is not a perfect matching")));
            }
        }
        Ok(BrauerDiagram { partner })
    }

    /// Builds from pairs of dots.
    pub fn from_pairs(d: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * d];
        for &(a, b) in pairs {
            if a >= 2 * d || b >= 2 * d || partner[a] != usize::MAX || partner[b] != usize::MAX || a == b {
                return Err(Error::Domain(format!("pairs {pairs:?} do not form a perfect matching on {d}+{d} dots")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::Domain(format!("pairs {pairs:?} leave dots unmatched")));
        }
        Ok(BrauerDiagram { partner })
    }

    pub fn identity(d: usize) -> Self {
        Self::from_permutation(&Permutation::identity(d))
    }

    /// Bottom dot `i` is joined to top dot `σ(i)`.
    pub fn from_permutation(sigma: &Permutation) -> Self {
        let d = sigma.degree();
        let mut partner = vec![0; 2 * d];
        for i in 0..d {
            let j = sigma.apply(i);
            partner[d + i] = j;
            partner[j] = d + i;
        }
        BrauerDiagram { partner }
    }

    /// `c_{ij}` (1-based): top `i`–top `j`, bottom `i`–bottom `j`, all other
    /// dots joined vertically.
    pub fn contraction(d: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > d || j > d || i == j {
            return Err(Error::Domain(format!("no contraction c_{{{i},{j}}} in degree {d}")));
        }
        let mut partner: Vec<usize> = (0..2 * d).map(|a| (a + d) % (2 * d)).collect();
        let (i, j) = (i - 1, j - 1);
        partner[i] = j;
        partner[j] = i;
        partner[d + i] = d + j;
        partner[d + j] = d + i;
        Ok(BrauerDiagram { partner })
    }

    pub fn degree(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, dot: usize) -> usize {
        self.partner[dot]
    }

    /// Pairs `(a, b)` with `a < b`, ordered by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner.iter().enumerate().filter(|(a, &b)| *a < b).map(|(a, &b)| (a, b)).collect()
    }

    /// The permutation when every pair joins the two rows.
    pub fn as_permutation(&self) -> Option<Permutation> {
        let d = self.degree();
        let images: Option<Vec<usize>> = (0..d).map(|i| (self.partner[d + i] < d).then(|| self.partner[d + i])).collect();
        images.and_then(|v| Permutation::new(v).ok())
    }

    /// Number of pairs within the top row.
    pub fn horizontal_count(&self) -> usize {
        let d = self.degree();
        (0..d).filter(|&a| self.partner[a] < d && a < self.partner[a]).count()
    }

    /// Stacks `self` above `lower`, returning the diagram and the number of
    /// closed loops removed.
    pub fn glue(&self, lower: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
        let d = self.degree();
        if lower.degree() != d {
            return Err(Error::Domain(format!("diagrams of degrees {d} and {}", lower.degree())));
        }
        let mut partner = vec![usize::MAX; 2 * d];
        let mut middle_seen = vec![false; d];
        // walk from an outer dot until the path leaves again
        let walk = |start: usize, middle_seen: &mut Vec<bool>| -> usize {
            // (in_upper, dot within that diagram)
            let (mut upper, mut dot) = if start < d { (true, start) } else { (false, start) };
            loop {
                let p = if upper { self.partner[dot] } else { lower.partner[dot] };
                if upper {
                    if p < d {
                        return p;
                    }
                    middle_seen[p - d] = true;
                    upper = false;
                    dot = p - d;
                } else {
                    if p >= d {
                        return p;
                    }
                    middle_seen[p] = true;
                    upper = true;
                    dot = p + d;
                }
            }
        };
        for start in 0..2 * d {
            if partner[start] == usize::MAX {
                let end = walk(start, &mut middle_seen);
                partner[start] = end;
                partner[end] = start;
            }
        }
        let mut loops = 0;
        for m in 0..d {
            if middle_seen[m] {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                middle_seen[cur] = true;
                // down through the lower diagram's top row, back up through the upper one
                let across = lower.partner[cur];
                middle_seen[across] = true;
                cur = self.partner[across + d] - d;
                if cur == m {
                    break;
                }
            }
        }
        Ok((BrauerDiagram { partner }, loops))
    }

    /// Both wall conditions for the split `r | s`.
    pub fn is_walled(&self, r: usize, s: usize) -> bool {
        let d = self.degree();
        if r + s != d {
            return false;
        }
        let left = |dot: usize| dot % d < r;
        self.pairs().into_iter().all(|(a, b)| {
            let horizontal = (a < d) == (b < d);
            if horizontal {
                left(a) != left(b)
            } else {
                left(a) == left(b)
            }
        })
    }
}

/// Every `d`-diagram, ordered by partner lists.
pub fn enumerate_diagrams(d: usize) -> Vec<BrauerDiagram> {
    fn go(partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
        let Some(a) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(BrauerDiagram { partner: partner.clone() });
            return;
        };
        for b in a + 1..partner.len() {
            if partner[b] == usize::MAX {
                partner[a] = b;
                partner[b] = a;
                go(partner, out);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; 2 * d], &mut out);
    out.sort();
    out
}

/// `is_walled` as a free function.
pub fn is_walled(x: &BrauerDiagram, r: usize, s: usize) -> bool {
    x.is_walled(r, s)
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let dot = |a: usize| if a < d { format!("t{}", a + 1) } else { format!("b{}", a - d + 1) };
        let pairs: Vec<String> = self.pairs().into_iter().map(|(a, b)| format!("{}-{}", dot(a), dot(b))).collect();
        write!(f, "{d}; {}", pairs.join(", "))
    }
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    /// Parses `d; t1-b2, t2-t3, b1-b3`.
    fn from_str(text: &str) -> Result<Self> {
        let semi = text.find(';').ok_or_else(|| Error::syntax(text.len(), "expected ';' after the degree"))?;
        let head = &text[..semi];
        let d: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::syntax(head.len() - head.trim_start().len(), format!("expected a degree, found {:?}", head.trim())))?;
        let mut pairs = Vec::new();
        let mut offset = semi + 1;
        let body = &text[semi + 1..];
        if !body.trim().is_empty() {
            for chunk in body.split(',') {
                let start = offset + chunk.len() - chunk.trim_start().len();
                let item = chunk.trim();
                let (a, b) = item
                    .split_once('-')
                    .ok_or_else(|| Error::syntax(start, format!("expected a pair like t1-b2, found {item:?}")))?;
                let dot_a = parse_dot(a, start, d)?;
                let dot_b = parse_dot(b, start + a.len() + 1, d)?;
                pairs.push((dot_a, dot_b));
                offset += chunk.len() + 1;
            }
        }
        BrauerDiagram::from_pairs(d, &pairs)
    }
}

fn parse_dot(text: &str, position: usize, d: usize) -> Result<usize> {
    let bad = || Error::syntax(position, format!("expected a dot like t3 or b1, found {text:?}"));
    let mut chars = text.chars();
    let row = chars.next().ok_or_else(bad)?;
    let index: usize = chars.as_str().parse().map_err(|_| bad())?;
    if index == 0 || index > d {
        return Err(Error::syntax(position, format!("dot {text} out of range 1..={d}")));
    }
    match row {
        't' => Ok(index - 1),
        'b' => Ok(d + index - 1),
        _ => Err(bad()),
    }
}

/// A Brauer algebra generator: `s_j = (j, j+1)` or `c_{j,j+1}`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BrauerGen {
    S(usize),
    C(usize),
}

impl BrauerGen {
    pub fn diagram(self, d: usize) -> Result<BrauerDiagram> {
        match self {
            BrauerGen::S(j) if j >= 1 && j < d => Ok(BrauerDiagram::from_permutation(&Permutation::transposition(d, j - 1, j))),
            BrauerGen::C(j) if j >= 1 && j < d => BrauerDiagram::contraction(d, j, j + 1),
            _ => Err(Error::Domain(format!("no generator {self:?} in degree {d}"))),
        }
    }
}

impl fmt::Display for BrauerGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrauerGen::S(j) => write!(f, "s{j}"),
            BrauerGen::C(j) => write!(f, "c{j}"),
        }
    }
}

/// The product of a generator word and its loop count.
pub fn word_diagram(d: usize, word: &[BrauerGen]) -> Result<(BrauerDiagram, usize)> {
    let mut acc = BrauerDiagram::identity(d);
    let mut loops = 0;
    for g in word {
        let (next, l) = acc.glue(&g.diagram(d)?)?;
        acc = next;
        loops += l;
    }
    Ok((acc, loops))
}

fn permutation_word(sigma: &Permutation) -> Vec<BrauerGen> {
    sigma.adjacent_word().into_iter().map(|k| BrauerGen::S(k + 1)).collect()
}

/// Writes `x = π · c_{12} c_{34} ⋯ c_{2k−1,2k} · ρ⁻¹` from the chosen order
/// and orientation of the horizontal pairs in each row.
fn factor_with(x: &BrauerDiagram, top: &[(usize, usize)], bottom: &[(usize, usize)]) -> Vec<BrauerGen> {
    let d = x.degree();
    let k = top.len();
    let top_vertical: Vec<usize> = (0..d).filter(|&a| x.partner[a] >= d).collect();
    let bottom_vertical: Vec<usize> = top_vertical.iter().map(|&a| x.partner[a] - d).collect();
    let mut pi = Vec::with_capacity(d);
    let mut rho = Vec::with_capacity(d);
    for (&(a, b), &(c, e)) in top.iter().zip(bottom) {
        pi.extend([a, b]);
        rho.extend([c - d, e - d]);
    }
    pi.extend(&top_vertical);
    rho.extend(&bottom_vertical);
    let pi = Permutation::new(pi).expect("positions form a permutation");
    let rho = Permutation::new(rho).expect("positions form a permutation");
    let mut word = permutation_word(&pi);
    word.extend((0..k).map(|j| BrauerGen::C(2 * j + 1)));
    word.extend(permutation_word(&rho.inverse()));
    word
}

fn horizontal_pairs(x: &BrauerDiagram) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let d = x.degree();
    let pairs = x.pairs();
    let top = pairs.iter().copied().filter(|&(_, b)| b < d).collect();
    let bottom = pairs.iter().copied().filter(|&(a, _)| a >= d).collect();
    (top, bottom)
}

/// A loop-free generator word whose product is `x`.
pub fn generator_word(x: &BrauerDiagram) -> Vec<BrauerGen> {
    let (top, bottom) = horizontal_pairs(x);
    factor_with(x, &top, &bottom)
}

/// Another loop-free factorization, with the horizontal pairs taken in a
/// random order and orientation.
pub fn random_generator_word<R: Rng + ?Sized>(x: &BrauerDiagram, rng: &mut R) -> Vec<BrauerGen> {
    let (mut top, mut bottom) = horizontal_pairs(x);
    top.shuffle(rng);
    bottom.shuffle(rng);
    for p in top.iter_mut().chain(bottom.iter_mut()) {
        if rng.gen_bool(0.5) {
            *p = (p.1, p.0);
        }
    }
    factor_with(x, &top, &bottom)
}

/// Generators of the walled algebra for the split `r | s`.
pub fn walled_generators(r: usize, s: usize) -> Vec<BrauerGen> {
    let d = r + s;
    let mut gens: Vec<BrauerGen> = (1..d).filter(|&j| j != r).map(BrauerGen::S).collect();
    if r > 0 && s > 0 {
        gens.push(BrauerGen::C(r));
    }
    gens
}

type WalledTable = Arc<HashMap<BrauerDiagram, Vec<BrauerGen>>>;

/// Shortest loop-free words in the walled generators for every walled
/// diagram, by breadth-first search.
fn walled_table(r: usize, s: usize) -> WalledTable {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), WalledTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("walled cache").get(&(r, s)) {
        return t.clone();
    }
    let d = r + s;
    let gens: Vec<(BrauerGen, BrauerDiagram)> =
        walled_generators(r, s).into_iter().map(|g| (g, g.diagram(d).expect("valid generator"))).collect();
    let mut table = HashMap::new();
    let mut queue = VecDeque::new();
    table.insert(BrauerDiagram::identity(d), Vec::new());
    queue.push_back(BrauerDiagram::identity(d));
    while let Some(x) = queue.pop_front() {
        let word = table[&x].clone();
        for (g, gd) in &gens {
            let (y, loops) = x.glue(gd).expect("same degree");
            if loops == 0 && !table.contains_key(&y) {
                let mut w = word.clone();
                w.push(*g);
                table.insert(y.clone(), w);
                queue.push_back(y);
            }
        }
    }
    let table = Arc::new(table);
    cache.lock().expect("walled cache").insert((r, s), table.clone());
    table
}

/// A loop-free word in the walled generators whose product is `x`.
pub fn walled_generator_word(x: &BrauerDiagram, r: usize, s: usize) -> Result<Vec<BrauerGen>> {
    if !x.is_walled(r, s) {
        return Err(Error::Unsupported(format!("{x} is not walled for the split {r}|{s}")));
    }
    walled_table(r, s)
        .get(x)
        .cloned()
        .ok_or_else(|| Error::Unsupported(format!("{x} has no loop-free walled word")))
}

/// An element of the Brauer algebra with loop parameter `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerElement {
    d: usize,
    delta: i64,
    terms: BTreeMap<BrauerDiagram, Rational>,
}

impl BrauerElement {
    pub fn zero(d: usize, delta: i64) -> Self {
        BrauerElement {
            d,
            delta,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(x: BrauerDiagram, delta: i64) -> Self {
        let mut out = Self::zero(x.degree(), delta);
        out.terms.insert(x, Rational::one());
        out
    }

    pub fn identity(d: usize, delta: i64) -> Self {
        Self::from_diagram(BrauerDiagram::identity(d), delta)
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &BrauerElement) -> Result<()> {
        if self.d != other.d || self.delta != other.delta {
            return Err(Error::Domain(format!(
                "elements of degree {} (δ = {}) and degree {} (δ = {})",
                self.d, self.delta, other.d, other.delta
            )));
        }
        Ok(())
    }

    fn add_term(&mut self, x: BrauerDiagram, k: Rational) {
        let entry = self.terms.entry(x).or_insert_with(Rational::zero);
        *entry += k;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &BrauerElement) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (x, k) in &other.terms {
            out.add_term(x.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.d, self.delta);
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(x, v)| (x.clone(), v * k)).collect();
        }
        out
    }

    /// `self · other`, each closed loop contributing a factor `δ`.
    pub fn multiply(&self, other: &BrauerElement) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.d, self.delta);
        let delta = Rational::from_integer(self.delta.into());
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let (z, loops) = x.glue(y)?;
                let mut k = a * b;
                for _ in 0..loops {
                    k *= &delta;
                }
                out.add_term(z, k);
            }
        }
        Ok(out)
    }
}

/// `x · y` of two basis diagrams: the product diagram and its loop count.
pub fn multiply(x: &BrauerDiagram, y: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
    x.glue(y)
}

impl fmt::Display for BrauerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(x, k)| format!("{} * ({x})", format_rational(k))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
