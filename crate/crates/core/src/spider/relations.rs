//! Relation families checked by evaluating both sides with `Γ`.

use num_traits::{One, Zero};

use super::{evaluate, parse, SpiderExpr};
use crate::combinatorics::{binomial, weak_compositions};
use crate::linear::{int, Rational};
use crate::report::{run_checks, InstanceResult, Report};
use crate::Result;

/// Which family of relations to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Merge/split/crossing relations on permutation modules.
    Perm,
    /// Ladder relations on weight spaces of tensor powers.
    Gl,
}

/// One relation instance: two expressions that must evaluate equally.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub relation: &'static str,
    pub name: String,
    pub lhs: SpiderExpr,
    pub rhs: SpiderExpr,
}

impl RelationInstance {
    pub fn check(&self) -> InstanceResult {
        match (evaluate(&self.lhs), evaluate(&self.rhs)) {
            (Ok(a), Ok(b)) => InstanceResult::compare(self.relation, self.name.clone(), a.map(), b.map()),
            (Err(e), _) | (_, Err(e)) => InstanceResult::fail(self.relation, self.name.clone(), e.to_string()),
        }
    }
}

fn diagram(bottom: &[i64], layers: &str) -> SpiderExpr {
    let labels: Vec<String> = bottom.iter().map(i64::to_string).collect();
    let text = format!("on [{}]: {layers}", labels.join(","));
    parse(&text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// `Σ c · diagram(bottom, layers)`; the boundaries come from `bottom`, `top`.
fn sum(bottom: &[i64], top: &[i64], terms: &[(Rational, String)]) -> SpiderExpr {
    let mut acc = SpiderExpr::zero(bottom.to_vec(), top.to_vec());
    for (c, layers) in terms {
        if !c.is_zero() {
            acc = acc.axpy(c, &diagram(bottom, layers)).expect("terms share boundaries");
        }
    }
    acc
}

fn instance(relation: &'static str, name: String, lhs: SpiderExpr, rhs: SpiderExpr) -> RelationInstance {
    RelationInstance { relation, name, lhs, rhs }
}

/// `E^(r)` on a pair of strands `(a, b)`, drawn with merges and splits.
fn e_spider(a: i64, b: i64, r: i64) -> (String, (i64, i64)) {
    (
        format!("id({a}) | split({r},{}) ; merge({a},{r}) | id({})", b - r, b - r),
        (a + r, b - r),
    )
}

/// `F^(s)` on a pair of strands `(a, b)`.
fn f_spider(a: i64, b: i64, s: i64) -> (String, (i64, i64)) {
    (
        format!("split({},{s}) | id({b}) ; id({}) | merge({s},{b})", a - s, a - s),
        (a - s, b + s),
    )
}

/// Applies a sequence of two-strand ladders in spider form, bottom first.
fn spider_word(start: (i64, i64), word: &[(bool, i64)]) -> String {
    let mut cur = start;
    let mut parts = Vec::new();
    for &(up, r) in word {
        let (text, next) = if up { e_spider(cur.0, cur.1, r) } else { f_spider(cur.0, cur.1, r) };
        parts.push(text);
        cur = next;
    }
    parts.join(" ; ")
}

fn labels(max: i64) -> impl Iterator<Item = i64> + Clone {
    0..=max
}

/// Merge, split and crossing relations for all labels `≤ max`.
pub fn perm_instances(max: i64) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for k in labels(max) {
        for l in labels(max) {
            let n = k + l;
            out.push(instance(
                "bigon",
                format!("k={k} l={l}"),
                diagram(&[n], &format!("split({k},{l}) ; merge({k},{l})")),
                diagram(&[n], "").scale(&binomial(n, l)),
            ));
            out.push(instance(
                "merge-reflection",
                format!("k={k} l={l}"),
                diagram(&[k, l], &format!("cross({k},{l}) ; merge({l},{k})")),
                diagram(&[k, l], &format!("merge({k},{l})")),
            ));
            out.push(instance(
                "split-reflection",
                format!("k={k} l={l}"),
                diagram(&[n], &format!("split({k},{l}) ; cross({k},{l})")),
                diagram(&[n], &format!("split({l},{k})")),
            ));
            for m in labels(max) {
                let name = format!("k={k} l={l} m={m}");
                out.push(instance(
                    "associativity",
                    name.clone(),
                    diagram(&[k, l, m], &format!("merge({k},{l}) | id({m}) ; merge({},{m})", k + l)),
                    diagram(&[k, l, m], &format!("id({k}) | merge({l},{m}) ; merge({k},{})", l + m)),
                ));
                out.push(instance(
                    "coassociativity",
                    name.clone(),
                    diagram(&[k + l + m], &format!("split({},{m}) ; split({k},{l}) | id({m})", k + l)),
                    diagram(&[k + l + m], &format!("split({k},{}) ; id({k}) | split({l},{m})", l + m)),
                ));
                out.push(instance(
                    "crossing-merge",
                    name.clone(),
                    diagram(&[k, l, m], &format!("merge({k},{l}) | id({m}) ; cross({},{m})", k + l)),
                    diagram(
                        &[k, l, m],
                        &format!("id({k}) | cross({l},{m}) ; cross({k},{m}) | id({l}) ; id({m}) | merge({k},{l})"),
                    ),
                ));
                out.push(instance(
                    "crossing-merge-mirror",
                    name.clone(),
                    diagram(&[k, l, m], &format!("id({k}) | merge({l},{m}) ; cross({k},{})", l + m)),
                    diagram(
                        &[k, l, m],
                        &format!("cross({k},{l}) | id({m}) ; id({l}) | cross({k},{m}) ; merge({l},{m}) | id({k})"),
                    ),
                ));
                out.push(instance(
                    "crossing-split",
                    name.clone(),
                    diagram(
                        &[k + l, m],
                        &format!("split({k},{l}) | id({m}) ; id({k}) | cross({l},{m}) ; cross({k},{m}) | id({l})"),
                    ),
                    diagram(&[k + l, m], &format!("cross({},{m}) ; id({m}) | split({k},{l})", k + l)),
                ));
                out.push(instance(
                    "crossing-split-mirror",
                    name,
                    diagram(
                        &[k, l + m],
                        &format!("id({k}) | split({l},{m}) ; cross({k},{l}) | id({m}) ; id({l}) | cross({k},{m})"),
                    ),
                    diagram(&[k, l + m], &format!("cross({k},{}) ; split({l},{m}) | id({k})", l + m)),
                ));
            }
            for r in labels(max) {
                for s in labels(max) {
                    let name = format!("k={k} l={l} r={r} s={s}");
                    // E^(r) F^(s) 1_(k,l) = Σ_t C(k−l+r−s, t) F^(s−t) E^(r−t) 1_(k,l)
                    let lhs = spider_word((k, l), &[(false, s), (true, r)]);
                    let top = (k - s + r, l + s - r);
                    let rhs: Vec<(Rational, String)> = (0..=r.min(s))
                        .map(|t| (binomial(k - l + r - s, t), spider_word((k, l), &[(true, r - t), (false, s - t)])))
                        .collect();
                    out.push(instance(
                        "square-switch",
                        name.clone(),
                        sum(&[k, l], &[top.0, top.1], &[(Rational::one(), lhs)]),
                        sum(&[k, l], &[top.0, top.1], &rhs),
                    ));
                    for up in [false, true] {
                        let sign = if up { 1 } else { -1 };
                        let top = (k + sign * (r + s), l - sign * (r + s));
                        out.push(instance(
                            if up { "divided-band-E" } else { "divided-band" },
                            name.clone(),
                            sum(&[k, l], &[top.0, top.1], &[(Rational::one(), spider_word((k, l), &[(up, s), (up, r)]))]),
                            sum(&[k, l], &[top.0, top.1], &[(binomial(r + s, r), spider_word((k, l), &[(up, r + s)]))]),
                        ));
                    }
                }
            }
        }
    }
    out
}

fn ladder(up: bool, i: usize, r: i64) -> String {
    format!("{}({i},{r})", if up { "E" } else { "F" })
}

fn word(steps: &[(bool, usize, i64)]) -> String {
    steps.iter().map(|&(up, i, r)| ladder(up, i, r)).collect::<Vec<_>>().join(" ; ")
}

fn shift(lambda: &[i64], steps: &[(bool, usize, i64)]) -> Vec<i64> {
    let mut out = lambda.to_vec();
    for &(up, i, r) in steps {
        let r = if up { r } else { -r };
        out[i - 1] += r;
        out[i] -= r;
    }
    out
}

/// Ladder relations on every weight with `2..=4` parts and degree `≤ max`.
pub fn gl_instances(max: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for n in 2..=4usize {
        for d in 0..=max {
            for comp in weak_compositions(d, n) {
                let lambda: Vec<i64> = comp.parts().iter().map(|&x| x as i64).collect();
                gl_instances_at(&lambda, d as i64, &mut out);
            }
        }
    }
    out
}

fn gl_instances_at(lambda: &[i64], d: i64, out: &mut Vec<RelationInstance>) {
    let n = lambda.len();
    let one = Rational::one;
    let single = |steps: &[(bool, usize, i64)]| vec![(one(), word(steps))];
    let push = |out: &mut Vec<RelationInstance>, rel: &'static str, name: String, lhs: Vec<(Rational, String)>, rhs: Vec<(Rational, String)>, top: Vec<i64>| {
        out.push(instance(rel, name, sum(lambda, &top, &lhs), sum(lambda, &top, &rhs)));
    };
    let lam = format!("{lambda:?}");
    for i in 1..n {
        for r in 0..=d {
            for s in 0..=d {
                let name = format!("λ={lam} i={i} r={r} s={s}");
                let (li, lj) = (lambda[i - 1], lambda[i]);
                // E^(r) F^(s) and F^(r) E^(s)
                for e_first_outer in [true, false] {
                    let lhs = [(!e_first_outer, i, s), (e_first_outer, i, r)];
                    let top = shift(lambda, &lhs);
                    let base = if e_first_outer { li - lj } else { lj - li };
                    let rhs: Vec<(Rational, String)> = (0..=r.min(s))
                        .map(|t| (binomial(base + r - s, t), word(&[(e_first_outer, i, r - t), (!e_first_outer, i, s - t)])))
                        .collect();
                    let rel = if e_first_outer { "commutator" } else { "commutator-mirror" };
                    push(out, rel, name.clone(), single(&lhs), rhs, top);
                }
                if r >= 1 && s >= 1 {
                    for up in [true, false] {
                        let lhs = [(up, i, r), (up, i, s)];
                        let top = shift(lambda, &lhs);
                        let rhs = vec![(binomial(r + s, r), word(&[(up, i, r + s)]))];
                        push(out, if up { "divided-powers-E" } else { "divided-powers-F" }, name.clone(), single(&lhs), rhs, top);
                    }
                }
                if i + 1 < n {
                    // E_{i+1}^(s) F_i^(r) = F_i^(r) E_{i+1}^(s), and the mirror
                    for (rel, a, b) in [("ladder-exchange", (false, i, r), (true, i + 1, s)), ("ladder-exchange-mirror", (true, i, r), (false, i + 1, s))] {
                        let top = shift(lambda, &[a, b]);
                        push(out, rel, name.clone(), single(&[a, b]), single(&[b, a]), top);
                    }
                }
            }
        }
        for j in 1..n {
            if j == i {
                continue;
            }
            for (r, s) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let name = format!("λ={lam} i={i} j={j} r={r} s={s}");
                let a = (false, j, s);
                let b = (true, i, r);
                push(out, "distant-commutator", name.clone(), single(&[a, b]), single(&[b, a]), shift(lambda, &[a, b]));
                if i.abs_diff(j) > 1 {
                    for up in [true, false] {
                        let a = (up, j, s);
                        let b = (up, i, r);
                        push(out, "far-commute", name.clone(), single(&[a, b]), single(&[b, a]), shift(lambda, &[a, b]));
                    }
                }
            }
            if i.abs_diff(j) == 1 {
                for up in [true, false] {
                    // X_i X_j X_i = (X_i^(2) X_j + X_j X_i^(2)), X ∈ {E, F}
                    let name = format!("λ={lam} i={i} j={j}");
                    let lhs = [(up, i, 1), (up, j, 1), (up, i, 1)];
                    let rhs = vec![(one(), word(&[(up, j, 1), (up, i, 2)])), (one(), word(&[(up, i, 2), (up, j, 1)]))];
                    push(out, if up { "serre-divided-E" } else { "serre-divided-F" }, name, single(&lhs), rhs, shift(lambda, &lhs));
                }
            }
        }
    }
    // X_b X_a X_a − 2 X_a X_b X_a + X_a X_a X_b = 0 for adjacent a, b
    for i in 1..n.saturating_sub(1) {
        for (a, b) in [(i, i + 1), (i + 1, i)] {
            for up in [true, false] {
                let name = format!("λ={lam} a={a} b={b}");
                let w1 = [(up, a, 1), (up, a, 1), (up, b, 1)];
                let w2 = [(up, a, 1), (up, b, 1), (up, a, 1)];
                let w3 = [(up, b, 1), (up, a, 1), (up, a, 1)];
                let top = shift(lambda, &w1);
                let lhs = vec![(one(), word(&w1)), (int(-2), word(&w2)), (one(), word(&w3))];
                push(out, if up { "serre-E" } else { "serre-F" }, name, lhs, vec![], top);
            }
        }
    }
}

/// Checks the relation family `suite` for all parameters `≤ max`.
pub fn relation_suite(suite: Suite, max: usize, jobs: usize) -> Report {
    match suite {
        Suite::Perm => perm_relation_suite(max, jobs),
        Suite::Gl => gl_relation_suite(max, jobs),
    }
}

pub fn perm_relation_suite(max: usize, jobs: usize) -> Report {
    let items = perm_instances(max as i64);
    Report::new("perm relations", run_checks(&items, jobs, RelationInstance::check))
}

pub fn gl_relation_suite(max: usize, jobs: usize) -> Report {
    let items = gl_instances(max);
    Report::new("gl ladder relations", run_checks(&items, jobs, RelationInstance::check))
}

/// The crossing as a signed sum `Σ (−1)^{k−a} E^(b) F^(a) 1_(k,l)` over
/// `a − b = k − l`, layers with `r = 0` omitted.
pub fn expand_cross(k: i64, l: i64) -> Result<SpiderExpr> {
    expand(k, l, false)
}

/// The crossing as `Σ (−1)^{l−a} F^(b) E^(a) 1_(k,l)` over `a − b = l − k`.
pub fn expand_cross_fe(k: i64, l: i64) -> Result<SpiderExpr> {
    expand(k, l, true)
}

fn expand(k: i64, l: i64, e_first: bool) -> Result<SpiderExpr> {
    let (first, lead) = if e_first { (l, k) } else { (k, l) };
    let mut terms = Vec::new();
    for a in 0..=first.max(-1) {
        let b = a - first + lead;
        if b < 0 {
            continue;
        }
        let sign = if (first - a) % 2 == 0 { int(1) } else { int(-1) };
        let steps = if e_first { [(true, 1, a), (false, 1, b)] } else { [(false, 1, a), (true, 1, b)] };
        let layers: Vec<String> = steps.iter().filter(|s| s.2 > 0).map(|&(up, i, r)| ladder(up, i, r)).collect();
        terms.push((sign, layers.join(" ; ")));
    }
    Ok(sum(&[k, l], &[l, k], &terms))
}
