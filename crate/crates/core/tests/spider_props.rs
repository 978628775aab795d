mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sww::spider::{evaluate, evaluate_diagram, parse_combination, Atom, Layer, SpiderDiagram, SpiderExpr};
use sww::tabloid::{circle_product, PermModule, Tabloid};
use sww::Rational;

use common::{random_boundary, random_diagram, random_expr, random_permutation};

fn sorted(mut v: Vec<(Tabloid, Rational)>) -> Vec<(Tabloid, Rational)> {
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printing_then_parsing_is_the_identity(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let bottom = random_boundary(&mut rng, 4, 3);
        let e = random_expr(&mut rng, bottom, 4);
        prop_assert_eq!(parse_combination(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn vertical_composition_is_composition(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let bottom = random_boundary(&mut rng, 3, 2);
        let lower = random_expr(&mut rng, bottom, 2);
        let upper = random_expr(&mut rng, lower.top().to_vec(), 2);
        let joined = SpiderExpr::vcompose(&upper, &lower).unwrap();
        prop_assert_eq!(evaluate(&joined).unwrap(), evaluate(&upper).unwrap().compose(&evaluate(&lower).unwrap()).unwrap());
    }

    #[test]
    fn horizontal_composition_is_the_circle_product(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (b1, b2) = (random_boundary(&mut rng, 2, 2), random_boundary(&mut rng, 2, 2));
        let left = random_expr(&mut rng, b1, 2);
        let right = random_expr(&mut rng, b2, 2);
        let joined = SpiderExpr::hcompose(&left, &right).unwrap();
        prop_assert_eq!(evaluate(&joined).unwrap(), circle_product(&evaluate(&left).unwrap(), &evaluate(&right).unwrap()));
    }

    #[test]
    fn evaluated_diagrams_commute_with_permutations(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let bottom = random_boundary(&mut rng, 3, 2);
        let f = evaluate_diagram(&random_diagram(&mut rng, bottom, 3)).unwrap();
        let source = PermModule::get(f.source());
        prop_assume!(source.dim() > 0);
        let t = source.tabloid(rng.gen_range(0..source.dim()));
        let g = random_permutation(&mut rng, source.degree());
        let moved_first = f.apply(&t.act(&g).unwrap()).unwrap();
        let moved_after: Vec<_> = f.apply(&t).unwrap().into_iter().map(|(s, c)| (s.act(&g).unwrap(), c)).collect();
        prop_assert_eq!(sorted(moved_first), sorted(moved_after));
    }

    #[test]
    fn tabloid_actions_compose(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let shape = random_boundary(&mut rng, 3, 3);
        let m = PermModule::get(&shape);
        prop_assume!(m.dim() > 0);
        let t = m.tabloid(rng.gen_range(0..m.dim()));
        let (g, h) = (random_permutation(&mut rng, m.degree()), random_permutation(&mut rng, m.degree()));
        prop_assert_eq!(t.act(&g).unwrap().act(&h).unwrap(), t.act(&g.compose(&h)).unwrap());
    }

    #[test]
    fn merge_slides_past_a_disjoint_split(a in 0i64..3, b in 0i64..3, c in 0i64..3, cut in 0i64..3) {
        let x = cut.min(c);
        let merge_first = SpiderDiagram::new(vec![a, b, c], vec![
            Layer::Local(vec![Atom::Merge(a, b), Atom::Id(c)]),
            Layer::Local(vec![Atom::Id(a + b), Atom::Split(x, c - x)]),
        ]).unwrap();
        let split_first = SpiderDiagram::new(vec![a, b, c], vec![
            Layer::Local(vec![Atom::Id(a), Atom::Id(b), Atom::Split(x, c - x)]),
            Layer::Local(vec![Atom::Merge(a, b), Atom::Id(x), Atom::Id(c - x)]),
        ]).unwrap();
        prop_assert_eq!(evaluate_diagram(&merge_first).unwrap(), evaluate_diagram(&split_first).unwrap());
    }
}
