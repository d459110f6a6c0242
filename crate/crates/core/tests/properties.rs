use std::sync::OnceLock;

use proptest::prelude::*;
use superblocks::blocks::{adjacent_pair, block_of};
use superblocks::highest_weights::{hw_set, SimpleModule};
use superblocks::oracle::integrable_sweep;
use superblocks::quiver::ext_dim;
use superblocks::rational::Q;
use superblocks::root_system::{odd_reflection, SimpleRootSet, Weight};

fn modules() -> &'static [SimpleModule] {
    static CELL: OnceLock<Vec<SimpleModule>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut v = integrable_sweep(3, 1, 5);
        v.extend(integrable_sweep(3, 2, 6));
        v.extend(integrable_sweep(4, 1, 6));
        v
    })
}

fn module() -> impl Strategy<Value = SimpleModule> {
    (0..modules().len()).prop_map(|i| modules()[i].clone())
}

fn rational() -> impl Strategy<Value = Q> {
    (-40i64..40, 1i64..7).prop_map(|(a, b)| Q::new(a.into(), b.into()))
}

fn weight() -> impl Strategy<Value = Weight> {
    (2usize..6)
        .prop_flat_map(|n| (prop::collection::vec(rational(), n), rational(), rational()))
        .prop_map(|(eps, d, l)| Weight::new(eps, d, l))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weight_json_round_trips(w in weight()) {
        let s = serde_json::to_string(&w).unwrap();
        let back: Weight = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn odd_reflections_are_involutions(n in 2usize..6, j in -60i64..60, up in any::<bool>()) {
        let s = SimpleRootSet::at(n, j).unwrap();
        let beta = if up { s.up().clone() } else { s.down().clone() };
        let r = odd_reflection(&s, &beta).unwrap();
        prop_assert_eq!(odd_reflection(&r, &beta.negated()).unwrap(), s);
    }

    #[test]
    fn hw_set_does_not_depend_on_the_frame(m in module(), t in -8i64..8) {
        let here: Vec<Weight> = hw_set(&m).unwrap().into_iter().map(|(_, w)| w).collect();
        let there: Vec<Weight> = hw_set(&m.at(t).unwrap()).unwrap().into_iter().map(|(_, w)| w).collect();
        prop_assert_eq!(here, there);
    }

    #[test]
    fn ext_is_symmetric(a in module(), b in module()) {
        prop_assert_eq!(ext_dim(&a, &b).unwrap(), ext_dim(&b, &a).unwrap());
    }

    #[test]
    fn blocks_are_closed_under_adjacency(m in module()) {
        prop_assume!(!m.is_typical());
        let s0 = SimpleRootSet::at(m.n(), 0).unwrap();
        let key = block_of(&m, &s0).unwrap();
        let (a, b) = adjacent_pair(&m).unwrap();
        prop_assert_eq!(block_of(&a, &s0).unwrap(), key.clone());
        prop_assert_eq!(block_of(&b, &s0).unwrap(), key);
    }
}
