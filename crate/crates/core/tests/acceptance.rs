//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines appear in plain
//! `cargo test` output. Exits nonzero when a criterion fails, except for the
//! documented orthogonal gap in criterion 9, which is printed as FAIL and
//! checked to fail exactly where expected.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sww::brauer::{
    duality_check, enumerate_diagrams, sp_ladder_relation_suite, BrauerDiagram, BrauerElement, TensorKind,
};
use sww::combinatorics::{double_factorial_odd, partitions};
use sww::doty::{is_saturated_gl, schur_block_dims, sl2_doty_demo};
use sww::kronecker::{
    decompose_tensor, oracle_tensor, oracle_tensor_indexed, tensor_generator, tensor_tabloid, Generator, Indexing, Side,
};
use sww::linear::format_rational;
use sww::spider::{evaluate, evaluate_diagram, expand_cross, expand_cross_fe, gl_relation_suite, parse, parse_combination, perm_relation_suite, SpiderExpr};
use sww::tabloid::{braid, canonical_iso, circle_product, format_combination, lower, raise, split, PermModule, Tabloid, TabloidMorphism};
use sww::{Rational, Result};

use common::{random_boundary, random_expr, random_permutation, random_tabloid};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn c1_perm_relations() -> Result<Outcome> {
    let report = perm_relation_suite(4, jobs());
    let failed = report.failures().count();
    outcome(failed == 0, format!("{} instances, {failed} failed", report.len()))
}

fn c2_gl_relations() -> Result<Outcome> {
    let report = gl_relation_suite(4, jobs());
    let failed = report.failures().count();
    outcome(failed == 0, format!("{} instances, {failed} failed", report.len()))
}

fn c3_braiding() -> Result<Outcome> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 0..=4 {
        for l in 0..=4 {
            let b = braid(k, l);
            if evaluate(&expand_cross(k, l)?)? != b {
                bad.push(format!("FE-form {k},{l}"));
            }
            if evaluate(&expand_cross_fe(k, l)?)? != b {
                bad.push(format!("EF-form {k},{l}"));
            }
            if braid(l, k).compose(&b)? != TabloidMorphism::identity(&[k, l]) {
                bad.push(format!("involution {k},{l}"));
            }
            checked += 3;
        }
    }
    outcome(bad.is_empty(), format!("{checked} identities, failures {bad:?}"))
}

fn c4_worked_example() -> Result<Outcome> {
    let f = evaluate(&parse("on [2,1]: F(1,1)")?)?;
    let t: Tabloid = "1,2|3".parse()?;
    let image = f.apply(&t)?;
    let printed = format_combination(&image);
    let mut expected: Vec<(Tabloid, Rational)> =
        vec![("2|1,3".parse()?, Rational::from_integer(1.into())), ("1|2,3".parse()?, Rational::from_integer(1.into()))];
    let mut got = image.clone();
    expected.sort();
    got.sort();
    outcome(got == expected && printed == "1·{2|1,3} + 1·{1|2,3}", printed)
}

fn c5_kronecker() -> Result<Outcome> {
    let mut checked = 0;
    let mut bad = Vec::new();
    let as_i64 = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    for d in 1..=4 {
        let shapes: Vec<Vec<usize>> = partitions(d, d).into_iter().map(|p| p.parts().to_vec()).collect();
        for lambda in &shapes {
            for mu in &shapes {
                let (l, m) = (as_i64(lambda), as_i64(mu));
                for gen in [Generator::E, Generator::F] {
                    let ladder = |shape: &[i64], j: usize| if gen == Generator::E { raise(shape, j, 1) } else { lower(shape, j, 1) };
                    for j in 1..lambda.len() {
                        let oracle = oracle_tensor_indexed(&ladder(&l, j)?, &TabloidMorphism::identity(&m), Indexing::Transposed)?;
                        if tensor_generator(Side::Left, gen, j, lambda, mu)? != oracle {
                            bad.push(format!("left {gen:?}{j} {lambda:?} {mu:?}"));
                        }
                        checked += 1;
                    }
                    for j in 1..mu.len() {
                        let oracle = oracle_tensor(&TabloidMorphism::identity(&l), &ladder(&m, j)?)?;
                        if tensor_generator(Side::Right, gen, j, lambda, mu)? != oracle {
                            bad.push(format!("right {gen:?}{j} {lambda:?} {mu:?}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    // worked decompositions; blocks compared after sorting the nonzero parts,
    // which is the canonical isomorphism M^κ ≅ M^{sorted κ}
    let sorted_kappa = |rhs: &[usize]| -> Result<Vec<Vec<usize>>> {
        Ok(decompose_tensor(&[3, 1], rhs)?
            .blocks
            .iter()
            .map(|a| {
                let mut k: Vec<usize> = a.flattened().iter().copied().filter(|&x| x > 0).collect();
                k.sort_unstable_by(|a, b| b.cmp(a));
                k
            })
            .collect())
    };
    let worked = [
        (vec![2usize, 2], vec![vec![2usize, 1, 1], vec![2, 1, 1]]),
        (vec![3, 1], vec![vec![3, 1], vec![2, 1, 1]]),
        (vec![4], vec![vec![3, 1]]),
    ];
    for (rhs, expected) in &worked {
        if &sorted_kappa(rhs)? != expected {
            bad.push(format!("decomposition (3,1)x{rhs:?}"));
        }
    }
    let delta = lower(&[4, 0], 1, 2)?;
    let oracle = oracle_tensor(&TabloidMorphism::identity(&[3, 1]), &delta)?;
    let fork = circle_product(&split(2, 1), &TabloidMorphism::identity(&[1]));
    for r in 0..oracle.row_blocks.len() {
        let block = oracle.block(r, 0);
        let kappa: Vec<i64> = block.target().iter().copied().filter(|&x| x > 0).collect();
        if canonical_iso(&kappa)?.compose(&block)? != fork {
            bad.push(format!("split block {r}"));
        }
    }
    let first = tensor_generator(Side::Right, Generator::F, 1, &[3, 1], &[4, 0])?;
    let second = tensor_generator(Side::Right, Generator::F, 1, &[3, 1], &[3, 1])?;
    if second.compose(&first)? != oracle.scale(&Rational::from_integer(2.into())) {
        bad.push("factor-2 identity".into());
    }
    outcome(bad.is_empty(), format!("{checked} generator checks, worked example block permutation = identity, failures {bad:?}"))
}

fn c6_hom_dimensions() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for n in 1..=4 {
        for d in 1..=4 {
            let table = schur_block_dims(n, d)?;
            pairs += table.rows.len();
            if !table.pass() {
                bad.push(format!("n={n} d={d}: total {} vs {} vs {}", table.total_span, table.expected_total, table.irrep_square_sum));
            }
        }
    }
    outcome(bad.is_empty(), format!("{pairs} pairs, failures {bad:?}"))
}

fn c7_doty() -> Result<Outcome> {
    let demo = sl2_doty_demo()?;
    let z = demo.z_on_sum.entries().iter().map(|(_, _, v)| format_rational(v)).collect::<Vec<_>>().join(",");
    let gl = is_saturated_gl(&[sww::combinatorics::WeightVector(vec![2, 0])], 2)?;
    let pass = demo.pass() && gl.witness == Some(sww::combinatorics::WeightVector(vec![1, 1]));
    outcome(pass, format!("z on V(2)_0 zero: {}, z on (V(2)+V(0))_0 entries [{z}]", demo.annihilates_v2()))
}

fn c8_brauer() -> Result<Outcome> {
    let mut bad = Vec::new();
    for d in 0..=5 {
        if num_bigint::BigInt::from(enumerate_diagrams(d).len()) != double_factorial_odd(d) {
            bad.push(format!("count d={d}"));
        }
    }
    let diagrams = enumerate_diagrams(4);
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..200 {
        let delta = rng.gen_range(-4..=4);
        let pick = |rng: &mut StdRng| BrauerElement::from_diagram(diagrams[rng.gen_range(0..diagrams.len())].clone(), delta);
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if x.multiply(&y)?.multiply(&z)? != x.multiply(&y.multiply(&z)?)? {
            bad.push(format!("associativity δ={delta}"));
        }
    }
    for delta in [-4, -2, 1, 3] {
        let c = BrauerElement::from_diagram(BrauerDiagram::contraction(4, 1, 2)?, delta);
        if c.multiply(&c)? != c.scale(&Rational::from_integer(delta.into())) {
            bad.push(format!("c12^2 δ={delta}"));
        }
    }
    outcome(bad.is_empty(), format!("200 triples at d=4, failures {bad:?}"))
}

/// Returns the outcome together with the list of failing orthogonal cases.
fn c9_duality() -> Result<(Outcome, Vec<String>)> {
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    let mut cases: Vec<(TensorKind, usize, usize)> = Vec::new();
    for kind in [TensorKind::Sp, TensorKind::O] {
        for (n, d) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            cases.push((kind, n, d));
        }
    }
    for n in 1..=3 {
        for total in 1..=3usize {
            for r in 0..=total {
                cases.push((TensorKind::Mixed { r, s: total - r }, n, total));
            }
        }
    }
    for (kind, n, d) in cases {
        let report = duality_check(kind, n, d)?;
        let tag = format!("{kind} n={n} d={d}");
        lines.push(format!(
            "{tag}: commutators {}, span {} commutant {} threshold {}",
            if report.commutators.all_pass() { "vanish" } else { "NONZERO" },
            report.spanned_dim,
            report.commutant_dim,
            report.threshold
        ));
        if !report.pass() {
            failures.push(tag);
        }
    }
    for l in &lines {
        println!("      {l}");
    }
    let ok = failures.is_empty();
    Ok((outcome(ok, format!("failing cases {failures:?}"))?, failures))
}

fn c10_sp_ladders() -> Result<Outcome> {
    let mut total = 0;
    let mut failed = Vec::new();
    for n in 1..=2 {
        for d in 1..=3 {
            let report = sp_ladder_relation_suite(n, d, jobs())?;
            total += report.len();
            failed.extend(report.failures().map(|f| format!("{} {}", f.relation, f.instance)));
        }
    }
    outcome(failed.is_empty(), format!("{total} instances, failures {:?}", failed.iter().take(5).collect::<Vec<_>>()))
}

fn c11_properties() -> Result<Outcome> {
    const CASES: usize = 1000;
    let mut rng = StdRng::seed_from_u64(11);
    let mut bad = Vec::new();
    // parse/print round trip
    for _ in 0..CASES {
        let bottom = random_boundary(&mut rng, 3, 2);
        let e = random_expr(&mut rng, bottom, 3);
        let text = e.to_string();
        match parse_combination(&text) {
            Ok(back) if back == e => {}
            other => bad.push(format!("round trip {text:?}: {other:?}")),
        }
    }
    // action axioms and equivariance of evaluated diagrams
    for _ in 0..CASES {
        let bottom = random_boundary(&mut rng, 3, 2);
        let f = evaluate(&random_expr(&mut rng, bottom, 3))?;
        let d = f.source().iter().filter(|&&x| x > 0).sum::<i64>() as usize;
        let (g, h) = (random_permutation(&mut rng, d), random_permutation(&mut rng, d));
        let t = PermModule::get(f.source());
        if t.dim() > 0 {
            let x = t.tabloid(rng.gen_range(0..t.dim()));
            if x.act(&g)?.act(&h)? != x.act(&g.compose(&h))? {
                bad.push(format!("composition of actions on {x}"));
            }
        }
        let (ps, pt) = (t.permutation_matrix(&g)?, PermModule::get(f.target()).permutation_matrix(&g)?);
        if f.map().compose(&ps)? != pt.compose(f.map())? {
            bad.push(format!("equivariance {:?}->{:?}", f.source(), f.target()));
        }
    }
    // functoriality under vertical and horizontal composition
    for _ in 0..CASES {
        let bottom = random_boundary(&mut rng, 2, 2);
        let lower_e = random_expr(&mut rng, bottom, 2);
        let upper_e = random_expr(&mut rng, lower_e.top().to_vec(), 2);
        let v = SpiderExpr::vcompose(&upper_e, &lower_e)?;
        if evaluate(&v)? != evaluate(&upper_e)?.compose(&evaluate(&lower_e)?)? {
            bad.push(format!("vertical {upper_e} after {lower_e}"));
        }
        let right_bottom = random_boundary(&mut rng, 2, 2);
        let right_e = random_expr(&mut rng, right_bottom, 2);
        let h = SpiderExpr::hcompose(&lower_e, &right_e)?;
        if evaluate(&h)? != circle_product(&evaluate(&lower_e)?, &evaluate(&right_e)?) {
            bad.push(format!("horizontal {lower_e} beside {right_e}"));
        }
    }
    // moving an element in both factors moves it in the tensor tabloid
    for _ in 0..CASES {
        let d = rng.gen_range(1..=6);
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (t, t2) = (random_tabloid(&mut rng, d, m), random_tabloid(&mut rng, d, n));
        let (i, j, k) = (rng.gen_range(1..=m), rng.gen_range(1..=n), rng.gen_range(1..=d));
        let lhs = tensor_tabloid(&t.moved(i, &[k])?, &t2.moved(j, &[k])?)?;
        let rhs = tensor_tabloid(&t, &t2)?.moved((i - 1) * n + j, &[k])?;
        if lhs != rhs {
            bad.push(format!("tensor move {t} {t2} i={i} j={j} k={k}"));
        }
    }
    let _ = evaluate_diagram;
    outcome(bad.is_empty(), format!("4 x {CASES} cases, failures {:?}", bad.iter().take(3).collect::<Vec<_>>()))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("spider relations for permutation modules, labels <= 4", c1_perm_relations),
        ("gl ladder relations, d <= 4, n <= 4", c2_gl_relations),
        ("braiding equals both ladder expansions and is involutive, k,l <= 4", c3_braiding),
        ("F_1 on 1,2|3 in M^(2,1)", c4_worked_example),
        ("tensor products of generators against the oracle, d <= 4, and the d = 4 worked example", c5_kronecker),
        ("ladder-word Hom dimensions, n,d <= 4", c6_hom_dimensions),
        ("sl2 kernel example and saturation witness", c7_doty),
        ("Brauer diagram counts, associativity, c12^2 = delta c12", c8_brauer),
    ];
    let mut unexpected = Vec::new();
    let report = |index: usize, title: &str, result: Result<Outcome>, secs: f64| -> bool {
        match result {
            Ok(o) => {
                println!("{} {index}: {title} ({}) [{secs:.1}s]", if o.pass { "PASS" } else { "FAIL" }, o.detail);
                o.pass
            }
            Err(e) => {
                println!("FAIL {index}: {title} (error: {e}) [{secs:.1}s]");
                false
            }
        }
    };
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        if !report(i + 1, title, run(), start.elapsed().as_secs_f64()) {
            unexpected.push(i + 1);
        }
    }

    let start = Instant::now();
    let title = "Lie generators commute with Brauer generators; Brauer span = commutant above the threshold";
    match c9_duality() {
        Ok((o, failures)) => {
            report(9, title, Ok(o), start.elapsed().as_secs_f64());
            // the orthogonal Lie algebra has a larger commutant than the
            // Brauer image at every size checked; nothing else may fail
            let expected: Vec<String> = [(1, 2), (1, 3), (2, 2), (2, 3)].iter().map(|(n, d)| format!("o n={n} d={d}")).collect();
            if failures != expected {
                unexpected.push(9);
            } else {
                println!("      known gap: o_2n commutant exceeds the Brauer image in all four orthogonal cases");
            }
        }
        Err(e) => {
            report(9, title, Err(e), start.elapsed().as_secs_f64());
            unexpected.push(9);
        }
    }

    let rest: Vec<Criterion> = vec![
        ("sp ladder relations with bells and their mirrors, n <= 2, d <= 3", c10_sp_ladders),
        ("property suites, 1000 random cases each", c11_properties),
    ];
    for (k, (title, run)) in rest.iter().enumerate() {
        let start = Instant::now();
        if !report(10 + k, title, run(), start.elapsed().as_secs_f64()) {
            unexpected.push(10 + k);
        }
    }

    if unexpected.is_empty() {
        println!("acceptance: all criteria behave as recorded");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results in criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
