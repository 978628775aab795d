//! Random inputs shared by the property suites and the acceptance run.
#![allow(dead_code)]

use rand::Rng;
use sww::combinatorics::Permutation;
use sww::spider::{Atom, Layer, SpiderDiagram, SpiderExpr};
use sww::tabloid::Tabloid;
use sww::Rational;

pub fn random_boundary<R: Rng>(rng: &mut R, max_strands: usize, max_label: i64) -> Vec<i64> {
    let strands = rng.gen_range(1..=max_strands);
    (0..strands).map(|_| rng.gen_range(0..=max_label)).collect()
}

fn random_layer<R: Rng>(rng: &mut R, input: &[i64]) -> Layer {
    let n = input.len();
    if n >= 2 && rng.gen_bool(0.25) {
        let i = rng.gen_range(1..n);
        let r = rng.gen_range(1..=2);
        return if rng.gen_bool(0.5) { Layer::E(i, r) } else { Layer::F(i, r) };
    }
    let mut atoms = Vec::new();
    let mut i = 0;
    let degree: i64 = input.iter().sum();
    while i < n {
        let k = input[i];
        let roll: f64 = rng.gen();
        if k < 0 {
            atoms.push(Atom::Id(k));
            i += 1;
        } else if i + 1 < n && input[i + 1] >= 0 && roll < 0.2 {
            atoms.push(Atom::Merge(k, input[i + 1]));
            i += 2;
        } else if i + 1 < n && input[i + 1] >= 0 && roll < 0.4 {
            atoms.push(Atom::Cross(k, input[i + 1]));
            i += 2;
        } else if roll < 0.6 && n < 4 && degree > 0 {
            let a = rng.gen_range(0..=k);
            atoms.push(Atom::Split(a, k - a));
            i += 1;
        } else {
            atoms.push(Atom::Id(k));
            i += 1;
        }
    }
    Layer::Local(atoms)
}

/// A diagram on `bottom` with up to `max_layers` random layers.
pub fn random_diagram<R: Rng>(rng: &mut R, bottom: Vec<i64>, max_layers: usize) -> SpiderDiagram {
    let depth = rng.gen_range(0..=max_layers);
    let mut layers = Vec::new();
    let mut current = bottom.clone();
    for _ in 0..depth {
        let layer = random_layer(rng, &current);
        let d = SpiderDiagram::new(current.clone(), vec![layer.clone()]).expect("layer fits its input");
        current = d.top().to_vec();
        layers.push(layer);
    }
    SpiderDiagram::new(bottom, layers).expect("layers chain")
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-4i64..=4);
    let den = rng.gen_range(1i64..=3);
    Rational::new(num.into(), den.into())
}

/// A combination of diagrams sharing both boundaries: a random diagram plus
/// copies padded with a split-merge bigon or a double crossing.
pub fn random_expr<R: Rng>(rng: &mut R, bottom: Vec<i64>, max_layers: usize) -> SpiderExpr {
    let base = random_diagram(rng, bottom, max_layers);
    let mut expr = SpiderExpr::term(random_rational(rng), base.clone());
    for _ in 0..rng.gen_range(0..=2) {
        let top = base.top().to_vec();
        let pad = match top.iter().position(|&k| k >= 0) {
            Some(p) if rng.gen_bool(0.5) || top.len() < 2 => {
                let k = top[p];
                let a = rng.gen_range(0..=k);
                let wrap = |atom: Atom| -> Layer {
                    Layer::Local(top.iter().enumerate().map(|(i, &x)| if i == p { atom } else { Atom::Id(x) }).collect())
                };
                vec![wrap(Atom::Split(a, k - a)), {
                    let mut atoms: Vec<Atom> = Vec::new();
                    for (i, &x) in top.iter().enumerate() {
                        if i == p {
                            atoms.push(Atom::Merge(a, k - a));
                        } else {
                            atoms.push(Atom::Id(x));
                        }
                    }
                    Layer::Local(atoms)
                }]
            }
            _ if top.len() >= 2 => {
                let (a, b) = (top[0], top[1]);
                let rest: Vec<Atom> = top[2..].iter().map(|&x| Atom::Id(x)).collect();
                let mut first = vec![Atom::Cross(a, b)];
                first.extend(rest.iter().copied());
                let mut second = vec![Atom::Cross(b, a)];
                second.extend(rest);
                vec![Layer::Local(first), Layer::Local(second)]
            }
            _ => continue,
        };
        let mut layers = base.layers().to_vec();
        layers.extend(pad);
        let padded = SpiderDiagram::new(base.bottom().to_vec(), layers).expect("padding preserves the top");
        expr = expr.add(&SpiderExpr::term(random_rational(rng), padded)).expect("same boundaries");
    }
    expr
}

pub fn random_permutation<R: Rng>(rng: &mut R, d: usize) -> Permutation {
    use rand::seq::SliceRandom;
    let mut images: Vec<usize> = (0..d).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity")
}

pub fn random_tabloid<R: Rng>(rng: &mut R, d: usize, cells: usize) -> Tabloid {
    let word = (0..d).map(|_| rng.gen_range(0..cells) as u8).collect();
    Tabloid::from_word(word, cells).expect("word within cells")
}
