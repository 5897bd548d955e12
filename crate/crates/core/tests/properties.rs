use proptest::prelude::*;

use pellhopf::algebra::{Basis, ModuleElement, TensorElement};
use pellhopf::congruence::{avoids, congruence_class, pi_down, pi_up, CongruenceSystem};
use pellhopf::mr::{mr_coproduct, mr_product};
use pellhopf::perm::{
    embed, inverse, restrict, standardize, weak_join, weak_leq, weak_meet, IndexSet, Permutation,
};
use pellhopf::sash::{eta, is_pell, sigma, Sash, Tile};
use pellhopf::sash_hopf::{
    allowable_set_to_dotting, allowable_sets, dotting_to_allowable_set, sash_coproduct,
    sash_dual_product, sash_product, tau, Dotting,
};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

fn pair_of_size(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (0..=max).prop_flat_map(|n| {
        let shuffled = || {
            Just((1..=n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::new(v).unwrap())
        };
        (shuffled(), shuffled())
    })
}

fn sash(max_tiles: usize) -> impl Strategy<Value = Sash> {
    prop_oneof![
        1 => Just(Sash::unit()),
        9 => prop::collection::vec(prop_oneof![Just(Tile::Black), Just(Tile::White), Just(Tile::Rectangle)], 0..=max_tiles)
            .prop_map(|t| Sash::from_tiles(&t)),
    ]
}

fn subset(n: usize) -> impl Strategy<Value = IndexSet> {
    prop::collection::vec(any::<bool>(), n)
        .prop_map(|bits| bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i as u32 + 1).collect())
}

proptest! {
    #[test]
    fn join_and_meet_bound((x, y) in pair_of_size(7)) {
        let j = weak_join(&x, &y).unwrap();
        let m = weak_meet(&x, &y).unwrap();
        prop_assert!(weak_leq(&x, &j).unwrap() && weak_leq(&y, &j).unwrap());
        prop_assert!(weak_leq(&m, &x).unwrap() && weak_leq(&m, &y).unwrap());
        prop_assert_eq!(weak_join(&x, &x).unwrap(), x.clone());
        if weak_leq(&x, &y).unwrap() {
            prop_assert_eq!(j, y.clone());
            prop_assert_eq!(m, x.clone());
        }
    }

    #[test]
    fn embedding_round_trip(x in permutation(6), extra in 0usize..4, seed in any::<u64>()) {
        let n = x.size() + extra;
        let mut pool: Vec<u32> = (1..=n as u32).collect();
        let mut s = seed;
        let mut t = IndexSet::new();
        for _ in 0..x.size() {
            let k = (s % pool.len() as u64) as usize;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            t.insert(pool.remove(k));
        }
        let w = embed(&x, &t).unwrap();
        prop_assert_eq!(standardize(&w), x.clone());
        prop_assert_eq!(restrict(&w, &t), w);
        prop_assert_eq!(inverse(&inverse(&x)), x);
    }

    #[test]
    fn projections_bracket(x in permutation(8)) {
        let u = CongruenceSystem::pell();
        let (lo, hi) = (pi_down(&x, &u), pi_up(&x, &u));
        prop_assert!(weak_leq(&lo, &x).unwrap() && weak_leq(&x, &hi).unwrap());
        prop_assert!(avoids(&lo, &u));
        prop_assert_eq!(pi_down(&lo, &u), lo.clone());
        prop_assert_eq!(pi_down(&hi, &u), lo.clone());
        prop_assert_eq!(is_pell(&x), avoids(&x, &u));
        prop_assert_eq!(eta(&sigma(&x)), lo.clone());
        prop_assert!(congruence_class(&x, &u).contains(&x));
    }

    #[test]
    fn sash_round_trips(a in sash(8)) {
        prop_assert_eq!(a.to_string().parse::<Sash>().unwrap(), a.clone());
        prop_assert_eq!(sigma(&eta(&a)), a.clone());
        prop_assert_eq!(eta(&a).size(), a.grade());
    }

    #[test]
    fn grades_add(a in sash(4), b in sash(4)) {
        let g = a.grade() + b.grade();
        prop_assert_eq!(sash_product(&a, &b).grade(), Some(g));
        prop_assert_eq!(sash_dual_product(&a, &b).grade(), Some(g));
        for ((x, y), _) in sash_coproduct(&a).terms() {
            prop_assert_eq!(x.grade() + y.grade(), a.grade());
        }
    }

    #[test]
    fn allowable_sets_invert(c in sash(5), bits in subset(10)) {
        prop_assume!(!c.is_unit());
        let n = c.len() + 1;
        let t: IndexSet = bits.iter().filter(|&v| v as usize <= n).collect();
        match allowable_set_to_dotting(&c, &t) {
            Ok(d) => {
                prop_assert!(d.is_allowable());
                prop_assert_eq!(dotting_to_allowable_set(&d).unwrap(), t.clone());
                prop_assert!(allowable_sets(&c).contains(&t));
                let x = tau(&c, &t).unwrap();
                prop_assert_eq!(sigma(&x), c.clone());
                prop_assert_eq!(d.to_string().parse::<Dotting>().unwrap(), d);
            }
            Err(_) => prop_assert!(!allowable_sets(&c).contains(&t)),
        }
    }

    #[test]
    fn element_text_round_trips(x in permutation(3), y in permutation(3)) {
        let e = mr_product(&x, &y);
        prop_assert_eq!(e.to_string().parse::<ModuleElement<Permutation>>().unwrap(), e);
        let t = mr_coproduct(&x);
        prop_assert_eq!(t.to_string().parse::<TensorElement<Permutation>>().unwrap(), t);
        let s = sash_coproduct(&sigma(&x));
        prop_assert_eq!(s.to_string().parse::<TensorElement<Sash>>().unwrap(), s);
    }
}
