use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use sww::combinatorics::{enumerate_contingency, gl_weights_of_irrep, weak_compositions, WeightVector};
use sww::linear::{bareiss_rank, sparse_rank};
use sww::{BasisLabel, LinMap, Rational};

fn matrix(rows: usize, cols: usize, domain: BasisLabel, codomain: BasisLabel) -> impl Strategy<Value = LinMap> {
    prop::collection::vec((-3i64..=3, 1i64..=2), rows * cols).prop_map(move |cells| {
        let entries = cells
            .into_iter()
            .enumerate()
            .filter(|(_, (p, _))| *p != 0)
            .map(|(k, (p, q))| (k / cols, k % cols, Rational::new(p.into(), q.into())));
        LinMap::from_entries(domain, codomain, rows, cols, entries)
    })
}

fn label(name: &str) -> BasisLabel {
    BasisLabel::from_descriptor(name)
}

fn triple() -> impl Strategy<Value = (LinMap, LinMap, LinMap)> {
    (1usize..5, 1usize..5, 1usize..5, 1usize..5).prop_flat_map(|(a, b, c, d)| {
        (
            matrix(b, a, label("a"), label("b")),
            matrix(c, b, label("b"), label("c")),
            matrix(d, c, label("c"), label("d")),
        )
    })
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in triple()) {
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rank_of_a_product_is_bounded((f, g, _) in triple()) {
        let gf = g.compose(&f).unwrap();
        prop_assert!(gf.rank() <= f.rank().min(g.rank()));
        prop_assert_eq!(sparse_rank(&gf), bareiss_rank(&gf.to_dense()));
    }

    #[test]
    fn tensor_distributes_over_composition((f1, f2, _) in triple(), (g1, g2, _) in triple()) {
        let lhs = f2.compose(&f1).unwrap().tensor(&g2.compose(&g1).unwrap());
        let rhs = f2.tensor(&g2).compose(&f1.tensor(&g1)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contingency_sets_transpose(d in 0usize..6, n in 1usize..4, m in 1usize..4, pick in any::<prop::sample::Index>(), pick2 in any::<prop::sample::Index>()) {
        let rows = weak_compositions(d, n);
        let cols = weak_compositions(d, m);
        let (lambda, mu) = (&rows[pick.index(rows.len())].0, &cols[pick2.index(cols.len())].0);
        let forward = enumerate_contingency(lambda, mu).unwrap();
        let mut backward: Vec<_> = enumerate_contingency(mu, lambda).unwrap().iter().map(|a| a.transpose()).collect();
        let mut sorted = forward.clone();
        sorted.sort();
        backward.sort();
        prop_assert_eq!(sorted, backward);
        for a in &forward {
            prop_assert_eq!(&a.row_sums(), lambda);
            prop_assert_eq!(&a.col_sums(), mu);
        }
    }

    #[test]
    fn irreducible_weights_are_permutation_closed(d in 0usize..5, n in 1usize..4, pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let shapes = sww::combinatorics::partitions(d, n);
        let p = &shapes[pick.index(shapes.len())];
        let mut lambda: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
        lambda.resize(n, 0);
        let weights = gl_weights_of_irrep(&WeightVector(lambda), n).unwrap();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut StdRng::seed_from_u64(seed));
        for w in &weights {
            let permuted = WeightVector(order.iter().map(|&k| w.0[k]).collect());
            prop_assert!(weights.contains(&permuted));
        }
    }
}
