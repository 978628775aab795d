mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sww::brauer::{
    brauer_word_matrix, enumerate_diagrams, generator_word, random_generator_word, BrauerDiagram, BrauerElement,
    SignedTensorSpace, TensorKind,
};
use sww::combinatorics::{multinomial, weak_compositions};
use sww::Rational;

use common::random_permutation;

fn element(rng: &mut StdRng, d: usize, delta: i64) -> BrauerElement {
    let all = enumerate_diagrams(d);
    let mut x = BrauerElement::zero(d, delta);
    for _ in 0..rng.gen_range(1..=3) {
        let k = Rational::from_integer(rng.gen_range(-3i64..=3).into());
        let term = BrauerElement::from_diagram(all[rng.gen_range(0..all.len())].clone(), delta).scale(&k);
        x = x.add(&term).unwrap();
    }
    x
}

/// `Σ multinomial(μ)·multinomial(ν)` over `μ ∈ Λ(n,r)`, `ν ∈ Λ(n,s)` with
/// `μ − ν = λ`; `joint` multiplies in the shuffles of the two groups.
fn weight_count(n: usize, r: usize, s: usize, lambda: &[i64], joint: bool) -> BigInt {
    let mut total = BigInt::from(0);
    for mu in weak_compositions(r, n) {
        for nu in weak_compositions(s, n) {
            if mu.0.iter().zip(&nu.0).zip(lambda).all(|((&a, &b), &l)| a as i64 - b as i64 == l) {
                total += if joint {
                    multinomial(&[mu.0.clone(), nu.0.clone()].concat())
                } else {
                    multinomial(&mu.0) * multinomial(&nu.0)
                };
            }
        }
    }
    total
}

#[test]
fn sp_weight_spaces_split_by_signs() {
    for n in 1..=2 {
        for d in 1..=3 {
            let space = SignedTensorSpace::sp(n, d).unwrap();
            for lambda in space.weights() {
                let expected: BigInt = (0..=d).map(|r| weight_count(n, r, d - r, &lambda, true)).sum();
                assert_eq!(BigInt::from(space.weight_space(&lambda).len()), expected, "n={n} d={d} λ={lambda:?}");
            }
        }
    }
}

#[test]
fn mixed_weight_spaces_are_outer_products() {
    for n in 1..=3 {
        for total in 0..=3 {
            for r in 0..=total {
                let space = SignedTensorSpace::mixed(n, r, total - r).unwrap();
                let mut seen = 0;
                for lambda in space.weights() {
                    let dim = space.weight_space(&lambda).len();
                    assert_eq!(BigInt::from(dim), weight_count(n, r, total - r, &lambda, false));
                    seen += dim;
                }
                assert_eq!(seen, space.dim());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn multiplication_is_associative_and_unital(seed in any::<u64>(), d in 1usize..=4, delta in -4i64..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (x, y, z) = (element(&mut rng, d, delta), element(&mut rng, d, delta), element(&mut rng, d, delta));
        prop_assert_eq!(x.multiply(&y).unwrap().multiply(&z).unwrap(), x.multiply(&y.multiply(&z).unwrap()).unwrap());
        let one = BrauerElement::identity(d, delta);
        prop_assert_eq!(one.multiply(&x).unwrap(), x.clone());
        prop_assert_eq!(x.multiply(&one).unwrap(), x);
    }

    #[test]
    fn walled_diagrams_are_closed(seed in any::<u64>(), d in 1usize..=4, wall in any::<prop::sample::Index>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let r = wall.index(d + 1);
        let walled: Vec<BrauerDiagram> = enumerate_diagrams(d).into_iter().filter(|x| x.is_walled(r, d - r)).collect();
        let x = &walled[rng.gen_range(0..walled.len())];
        let y = &walled[rng.gen_range(0..walled.len())];
        let (xy, _) = sww::brauer::multiply(x, y).unwrap();
        prop_assert!(xy.is_walled(r, d - r));
    }

    #[test]
    fn two_factorizations_act_alike(seed in any::<u64>(), n in 1usize..=2, d in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let all = enumerate_diagrams(d);
        let x = &all[rng.gen_range(0..all.len())];
        for kind in [TensorKind::Sp, TensorKind::O] {
            let space = SignedTensorSpace::new(kind, n, d).unwrap();
            let canonical = brauer_word_matrix(&space, &generator_word(x)).unwrap();
            let other = brauer_word_matrix(&space, &random_generator_word(x, &mut rng)).unwrap();
            prop_assert_eq!(canonical, other);
        }
    }

    #[test]
    fn symplectic_permutations_act_by_the_sign_character(seed in any::<u64>(), n in 1usize..=2, d in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let sp = SignedTensorSpace::sp(n, d).unwrap();
        let o = SignedTensorSpace::new(TensorKind::O, n, d).unwrap();
        let act = |space: &SignedTensorSpace, g: &sww::combinatorics::Permutation| {
            brauer_word_matrix(space, &generator_word(&BrauerDiagram::from_permutation(g))).unwrap()
        };
        let (g, h) = (random_permutation(&mut rng, d), random_permutation(&mut rng, d));
        let sign = Rational::from_integer(g.sign().into());
        prop_assert_eq!(act(&sp, &g).entries(), act(&o, &g).scale(&sign).entries());
        // right action: v·(gh) = (v·g)·h
        let gh = BrauerDiagram::from_permutation(&g.compose(&h));
        let (product, _) = sww::brauer::multiply(&BrauerDiagram::from_permutation(&g), &BrauerDiagram::from_permutation(&h)).unwrap();
        prop_assert_eq!(&product, &gh);
        prop_assert_eq!(act(&sp, &g.compose(&h)), act(&sp, &h).compose(&act(&sp, &g)).unwrap());
    }
}
