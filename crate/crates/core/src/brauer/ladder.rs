//! Ladders with bells evaluated on weight spaces of `⊗^d ℂ^{2n}`.
//!
//! Words are written as products, so the rightmost letter acts first. A
//! weight off the weights of the tensor space has a zero weight space,
//! which is how the truncation `1_ν = 0` enters.

use std::collections::HashMap;

use num_traits::One;
use rayon::prelude::*;

use super::action::{lie_generator_matrix, lie_tensor_matrix, LieAlgebra, LieGen, SignedTensorSpace};
use crate::combinatorics::{binomial, factorial};
use crate::linear::{BasisLabel, LinMap, Rational};
use crate::report::{InstanceResult, Report};
use crate::Result;

/// A letter of a ladder word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `E_i^{(r)}`.
    E(usize, usize),
    /// `F_i^{(r)}`.
    F(usize, usize),
    /// Bell `X_j`.
    X(usize),
    /// Cobell `Y_j`.
    Y(usize),
}

impl Letter {
    fn shift(self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        match self {
            Letter::E(i, r) => {
                w[i - 1] += r as i64;
                w[i] -= r as i64;
            }
            Letter::F(i, r) => {
                w[i - 1] -= r as i64;
                w[i] += r as i64;
            }
            Letter::X(j) => w[j - 1] += 2,
            Letter::Y(j) => w[j - 1] -= 2,
        }
        w
    }

    /// Exchanges `E ↔ F` and bells with cobells.
    fn mirror(self) -> Self {
        match self {
            Letter::E(i, r) => Letter::F(i, r),
            Letter::F(i, r) => Letter::E(i, r),
            Letter::X(j) => Letter::Y(j),
            Letter::Y(j) => Letter::X(j),
        }
    }
}

type Combination = Vec<(Rational, Vec<Letter>)>;

/// Evaluator for ladder words on the weight spaces of `⊗^d ℂ^{2n}`.
pub struct SpLadders {
    space: SignedTensorSpace,
    full: HashMap<Letter, LinMap>,
    weight_spaces: HashMap<Vec<i64>, Vec<usize>>,
}

impl SpLadders {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        let space = SignedTensorSpace::sp(n, d)?;
        let mut weight_spaces: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        for i in 0..space.dim() {
            weight_spaces.entry(space.weight(i)).or_default().push(i);
        }
        Ok(SpLadders {
            space,
            full: HashMap::new(),
            weight_spaces,
        })
    }

    pub fn space(&self) -> &SignedTensorSpace {
        &self.space
    }

    fn basis(&self, lambda: &[i64]) -> &[usize] {
        self.weight_spaces.get(lambda).map_or(&[], Vec::as_slice)
    }

    fn label(&self, lambda: &[i64]) -> BasisLabel {
        self.space.weight_label(lambda)
    }

    /// Full matrix of a letter on the tensor space.
    fn full_matrix(&mut self, letter: Letter) -> Result<LinMap> {
        if let Some(m) = self.full.get(&letter) {
            return Ok(m.clone());
        }
        let n = self.space.n;
        let (base, r) = match letter {
            Letter::E(i, r) => (LieGen::E(i), r),
            Letter::F(i, r) => (LieGen::F(i), r),
            Letter::X(j) => (LieGen::X(j), 1),
            Letter::Y(j) => (LieGen::Y(j), 1),
        };
        let one = lie_tensor_matrix(&self.space, &lie_generator_matrix(LieAlgebra::Sp, base, n)?)?;
        let mut m = LinMap::identity(self.space.label(), self.space.dim());
        for _ in 0..r {
            m = one.compose(&m)?;
        }
        let m = m.scale(&Rational::new(1.into(), factorial(r)));
        self.full.insert(letter, m.clone());
        Ok(m)
    }

    /// `word · 1_λ` as a map `W_λ → W_μ`, with `μ` returned.
    pub fn evaluate_word(&mut self, word: &[Letter], lambda: &[i64]) -> Result<(LinMap, Vec<i64>)> {
        let mut weight = lambda.to_vec();
        let mut acc = LinMap::identity(self.label(lambda), self.basis(lambda).len());
        for &letter in word.iter().rev() {
            let next: Vec<i64> = weight.iter().zip(letter.shift(self.space.n)).map(|(a, b)| a + b).collect();
            let full = self.full_matrix(letter)?;
            let step = full.submatrix(self.basis(&next), self.basis(&weight), self.label(&weight), self.label(&next));
            acc = step.compose(&acc)?;
            weight = next;
        }
        Ok((acc, weight))
    }

    /// A linear combination of words applied to `1_λ`.
    pub fn evaluate(&mut self, combination: &Combination, lambda: &[i64], target: &[i64]) -> Result<LinMap> {
        let mut acc = LinMap::zero(self.label(lambda), self.label(target), self.basis(target).len(), self.basis(lambda).len());
        for (k, word) in combination {
            let (m, mu) = self.evaluate_word(word, lambda)?;
            debug_assert_eq!(mu, target);
            acc = acc.axpy(k, &m)?;
        }
        Ok(acc)
    }
}

fn q(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn word(letters: &[Letter]) -> Combination {
    vec![(Rational::one(), letters.to_vec())]
}

struct Instance {
    relation: String,
    name: String,
    lambda: Vec<i64>,
    lhs: Combination,
    rhs: Combination,
}

fn target_of(lambda: &[i64], word: &[Letter]) -> Vec<i64> {
    let mut w = lambda.to_vec();
    for l in word {
        for (a, b) in w.iter_mut().zip(l.shift(lambda.len())) {
            *a += b;
        }
    }
    w
}

/// The relation families for one weight. `mirrored` applies the involution
/// `E ↔ F`, `X ↔ Y`, `λ ↦ −λ` to the scalar terms.
fn relations_at(n: usize, lambda: &[i64], mirrored: bool) -> Vec<(String, String, Combination, Combination)> {
    use Letter::*;
    let m = |c: Combination| -> Combination {
        if mirrored {
            c.into_iter().map(|(k, w)| (k, w.into_iter().map(Letter::mirror).collect())).collect()
        } else {
            c
        }
    };
    let sign = if mirrored { -1 } else { 1 };
    let suffix = if mirrored { "-mirror" } else { "" };
    let mut out = Vec::new();
    let mut push = |rel: &str, inst: String, lhs: Combination, rhs: Combination| {
        out.push((format!("{rel}{suffix}"), inst, m(lhs), m(rhs)));
    };
    for j in 1..=n {
        // X_j Y_j 1_λ = Y_j X_j 1_λ + λ_j 1_λ
        let mut rhs = word(&[Y(j), X(j)]);
        rhs.push((q(sign * lambda[j - 1]), vec![]));
        push("bell-cobell", format!("j={j}"), word(&[X(j), Y(j)]), rhs);
        for k in 1..=n {
            if k != j {
                push("bell-cobell-distant", format!("i={j} j={k}"), word(&[X(j), Y(k)]), word(&[Y(k), X(j)]));
                if j < k {
                    push("bells-commute", format!("i={j} j={k}"), word(&[X(j), X(k)]), word(&[X(k), X(j)]));
                }
            }
        }
    }
    for i in 1..n {
        let mut lhs = word(&[X(i)]);
        lhs.push((q(1), vec![E(i, 1), X(i + 1), E(i, 1)]));
        let mut rhs = word(&[E(i, 2), X(i + 1)]);
        rhs.push((q(1), vec![X(i + 1), E(i, 2)]));
        push("bell-redundant", format!("i={i}"), lhs, rhs);
        let mut rhs = word(&[X(i + 1), X(i + 1), E(i, 1)]);
        rhs.push((q(1), vec![E(i, 1), X(i + 1), X(i + 1)]));
        push("bell-serre", format!("i={i}"), vec![(q(2), vec![X(i + 1), E(i, 1), X(i + 1)])], rhs);
        push("bell-ladder-commute", format!("i={i}"), word(&[E(i, 1), X(i)]), word(&[X(i), E(i, 1)]));
        for j in 1..=n {
            if j != i {
                push("cobell-ladder-commute", format!("i={i} j={j}"), word(&[E(i, 1), Y(j)]), word(&[Y(j), E(i, 1)]));
            }
            if i.abs_diff(j) > 1 {
                push("bell-far-commute", format!("i={i} j={j}"), word(&[E(i, 1), X(j)]), word(&[X(j), E(i, 1)]));
            }
        }
        // E^(r) F^(s) 1_λ = Σ_t C(λ_i − λ_{i+1} + r − s, t) F^(s−t) E^(r−t) 1_λ
        let h = sign * (lambda[i - 1] - lambda[i]);
        for r in 1..=2usize {
            for s in 1..=2usize {
                let rhs: Combination = (0..=r.min(s))
                    .map(|t| {
                        let mut w = Vec::new();
                        if s > t {
                            w.push(F(i, s - t));
                        }
                        if r > t {
                            w.push(E(i, r - t));
                        }
                        (binomial(h + r as i64 - s as i64, t as i64), w)
                    })
                    .collect();
                push("ladder-commutator", format!("i={i} r={r} s={s}"), word(&[E(i, r), F(i, s)]), rhs);
            }
            let rhs = vec![(q(1 + r as i64), vec![E(i, r + 1)])];
            push("divided-powers", format!("i={i} r={r} s=1"), word(&[E(i, r), E(i, 1)]), rhs);
        }
    }
    out
}

/// Every weight with `Σ|λ_i| ≤ bound`.
fn weight_box(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i64>| {
                let used: i64 = w.iter().map(|x| x.abs()).sum();
                (-(bound - used)..=bound - used).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Checks the bell, cobell and ladder relations, together with the family
/// obtained by reversing horizontal strands and exchanging bells with
/// cobells, on every weight with `Σ|λ_i| ≤ d + 2`.
pub fn sp_ladder_relation_suite(n: usize, d: usize, jobs: usize) -> Result<Report> {
    let mut instances = Vec::new();
    for lambda in weight_box(n, d as i64 + 2) {
        for mirrored in [false, true] {
            for (relation, inst, lhs, rhs) in relations_at(n, &lambda, mirrored) {
                instances.push(Instance {
                    relation,
                    name: format!("n={n} d={d} {inst} λ={lambda:?}"),
                    lambda: lambda.clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    let check = |chunk: &[Instance]| -> Result<Vec<InstanceResult>> {
        let mut ladders = SpLadders::new(n, d)?;
        chunk
            .iter()
            .map(|inst| {
                let target = inst.lhs.first().map(|(_, w)| target_of(&inst.lambda, w)).unwrap_or_else(|| inst.lambda.clone());
                let lhs = ladders.evaluate(&inst.lhs, &inst.lambda, &target)?;
                let rhs = ladders.evaluate(&inst.rhs, &inst.lambda, &target)?;
                Ok(InstanceResult::compare(&inst.relation, inst.name.clone(), &lhs, &rhs))
            })
            .collect()
    };
    let jobs = jobs.max(1);
    let chunk = instances.len().div_ceil(jobs).max(1);
    let results: Vec<Result<Vec<InstanceResult>>> = if jobs > 1 {
        instances.par_chunks(chunk).map(check).collect()
    } else {
        instances.chunks(chunk).map(check).collect()
    };
    let mut all = Vec::with_capacity(instances.len());
    for r in results {
        all.extend(r?);
    }
    Ok(Report::new(format!("sp ladders n={n} d={d}"), all))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_cobell_on_the_zero_weight() {
        let mut ladders = SpLadders::new(1, 2).unwrap();
        let (xy, mu) = ladders.evaluate_word(&[Letter::X(1), Letter::Y(1)], &[0]).unwrap();
        assert_eq!(mu, vec![0]);
        let (yx, _) = ladders.evaluate_word(&[Letter::Y(1), Letter::X(1)], &[0]).unwrap();
        assert!(xy.sub(&yx).unwrap().is_zero());
        assert_eq!(xy.rows(), 2);
    }

    #[test]
    fn small_suites_pass() {
        for (n, d) in [(1, 2), (2, 2)] {
            let report = sp_ladder_relation_suite(n, d, 1).unwrap();
            assert!(report.all_pass(), "{}", report.failures().map(|f| format!("{f:?}\n")).collect::<String>());
            assert!(report.len() > 10);
        }
    }

    #[test]
    fn literal_swap_of_the_first_bell_relation_fails() {
        // swapping bells and cobells without negating the weight
        let mut ladders = SpLadders::new(1, 2).unwrap();
        let (yx, _) = ladders.evaluate_word(&[Letter::Y(1), Letter::X(1)], &[2]).unwrap();
        let (xy, _) = ladders.evaluate_word(&[Letter::X(1), Letter::Y(1)], &[2]).unwrap();
        let diff = yx.sub(&xy).unwrap();
        assert_eq!(diff.get(0, 0), q(-2));
        assert!(!num_traits::Zero::is_zero(&diff.get(0, 0)));
    }
}
