mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sww::combinatorics::weak_compositions;
use sww::kronecker::{decompose_tensor, decompose_tensor_indexed, tensor_tabloid, Indexing};
use sww::tabloid::PermModule;

use common::{random_permutation, random_tabloid};

fn pair() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (1usize..=4, 1usize..=3, 1usize..=3, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(|(d, n, m, i, j)| {
        let (rows, cols) = (weak_compositions(d, n), weak_compositions(d, m));
        (rows[i.index(rows.len())].0.clone(), cols[j.index(cols.len())].0.clone())
    })
}

fn as_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn moving_in_both_factors_moves_the_tensor(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = rng.gen_range(1..=5);
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (t, t2) = (random_tabloid(&mut rng, d, m), random_tabloid(&mut rng, d, n));
        let (i, j, k) = (rng.gen_range(1..=m), rng.gen_range(1..=n), rng.gen_range(1..=d));
        let lhs = tensor_tabloid(&t.moved(i, &[k]).unwrap(), &t2.moved(j, &[k]).unwrap()).unwrap();
        let rhs = tensor_tabloid(&t, &t2).unwrap().moved((i - 1) * n + j, &[k]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn decomposition_is_an_equivariant_permutation((lambda, mu) in pair(), seed in any::<u64>()) {
        let dec = decompose_tensor(&lambda, &mu).unwrap();
        let mut hit = vec![false; dec.dim()];
        for &b in &dec.bijection {
            prop_assert!(!hit[b]);
            hit[b] = true;
        }
        let (ml, mm) = (PermModule::get(&as_i64(&lambda)), PermModule::get(&as_i64(&mu)));
        let g = random_permutation(&mut StdRng::seed_from_u64(seed), ml.degree());
        let action = ml.permutation_matrix(&g).unwrap().tensor(&mm.permutation_matrix(&g).unwrap());
        let p = dec.bijection_matrix(action.domain());
        let conj = p.compose(&action).unwrap().compose(&p.transpose().relabel(p.codomain(), p.domain())).unwrap();
        for (r, c, _) in conj.entries() {
            prop_assert_eq!(dec.locate(r).0, dec.locate(c).0);
        }
        for (b, a) in dec.blocks.iter().enumerate() {
            let local = PermModule::get(&as_i64(a.flattened())).permutation_matrix(&g).unwrap();
            for (r, c, v) in local.entries() {
                prop_assert_eq!(conj.get(dec.offsets[b] + r, dec.offsets[b] + c), v);
            }
        }
    }

    #[test]
    fn the_two_indexings_are_transposes((lambda, mu) in pair()) {
        let standard = decompose_tensor_indexed(&lambda, &mu, Indexing::Standard).unwrap();
        let transposed = decompose_tensor_indexed(&lambda, &mu, Indexing::Transposed).unwrap();
        prop_assert_eq!(standard.blocks.len(), transposed.blocks.len());
        for p in 0..standard.dim() {
            let (bs, _) = standard.locate(standard.bijection[p]);
            let (bt, _) = transposed.locate(transposed.bijection[p]);
            prop_assert_eq!(standard.blocks[bs].transpose(), transposed.blocks[bt].clone());
        }
    }
}
