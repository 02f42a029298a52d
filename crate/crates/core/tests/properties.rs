use proptest::prelude::*;
use quadcover::absystems::dispatch::{best_recipe, exact_f, Availability};
use quadcover::absystems::lower_bound_f;
use quadcover::absystems::{verify_ab, ABInstance, Verdict};
use quadcover::designs::Catalog;
use quadcover::lottery::{verify_lottery, LotteryVerdict};
use quadcover::oracle::{exact_min_cover, f_instance, Budget};
use quadcover::{Block, BlockSystem, DesignFile};

/// Straight from the definitions, no bitsets.
fn naive_ab_first_uncovered(a: u32, sys: &BlockSystem) -> Option<Vec<u32>> {
    let n = sys.n();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if y >= a {
                    continue;
                }
                if !sys.blocks().iter().any(|b| [x, y, z].iter().all(|p| b.contains(p))) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

fn naive_lottery_ok(sys: &BlockSystem) -> bool {
    let n = sys.n();
    (0..n).all(|p| {
        (p + 1..n).all(|q| {
            (q + 1..n).all(|r| {
                (r + 1..n)
                    .all(|s| sys.blocks().iter().any(|b| [p, q, r, s].iter().filter(|x| b.contains(x)).count() >= 3))
            })
        })
    })
}

fn block_system(n: u32, r: u32, max: usize) -> impl Strategy<Value = BlockSystem> {
    prop::collection::vec(prop::sample::subsequence((0..n).collect::<Vec<_>>(), r as usize), 0..max).prop_map(
        move |mut blocks: Vec<Block>| {
            blocks.sort();
            blocks.dedup();
            BlockSystem::new(n, r, blocks).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ab_verifier_matches_definition((a, b, sys) in (2u32..6, 2u32..5).prop_flat_map(|(a, b)| (Just(a), Just(b), block_system(a + b, 4, 30)))) {
        let inst = ABInstance::new(a, b, sys.clone()).unwrap();
        let want = naive_ab_first_uncovered(a, &sys);
        match verify_ab(&inst).unwrap() {
            Verdict::Valid => prop_assert!(want.is_none()),
            Verdict::Uncovered(t) => prop_assert_eq!(Some(t), want),
        }
    }

    #[test]
    fn lottery_verifier_matches_definition(sys in (5u32..10).prop_flat_map(|n| block_system(n, 4, 25))) {
        prop_assert_eq!(verify_lottery(&sys) == LotteryVerdict::Valid, naive_lottery_ok(&sys));
    }

    #[test]
    fn canonical_text_round_trips(sys in (4u32..12).prop_flat_map(|n| block_system(n, 4, 40))) {
        let f = DesignFile::single("ab_system", &sys).with_field("a", 2).with_field("b", (sys.n() - 2) as u64);
        let text = f.to_text();
        let back = DesignFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text.clone());
        let json = DesignFile::parse(&f.to_json().unwrap()).unwrap();
        prop_assert_eq!(json.to_text(), text);
        prop_assert_eq!(back.system().unwrap(), sys);
    }

    #[test]
    fn grid_constructions_verify(a in 2u32..20, b in 1u32..24) {
        let cat = Catalog::bundled();
        if let Some(r) = best_recipe(a, b, cat, Availability::Constructive) {
            let inst = r.build(cat).unwrap();
            prop_assert_eq!(inst.len() as u64, r.size);
            prop_assert_eq!(verify_ab(&inst).unwrap(), Verdict::Valid);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_relabeling_invariance(
        (a, b, pa, pb) in prop::sample::select(vec![(3u32, 2u32), (4, 2), (4, 3), (3, 4), (5, 2)]).prop_flat_map(|(a, b)| {
            (Just(a), Just(b), Just((0..a).collect::<Vec<u32>>()).prop_shuffle(), Just((a..a + b).collect::<Vec<u32>>()).prop_shuffle())
        })
    ) {
        let inst = f_instance(a, b);
        let base = exact_min_cover(&inst, Budget::default()).unwrap();
        // Keeping A and B apart makes the relabeled instance the same f(a,b)
        // instance, rebuilt and searched in a different order.
        let perm: Vec<u32> = pa.into_iter().chain(pb).collect();
        let moved = exact_min_cover(&inst.relabel(&perm), Budget::default()).unwrap();
        prop_assert!(moved.is_optimal());
        prop_assert_eq!(base.optimum, moved.optimum);
        let fresh = exact_min_cover(&f_instance(a, b), Budget::default()).unwrap();
        prop_assert_eq!(&fresh.witness, &base.witness);
    }

    #[test]
    fn oracle_within_formula_bounds(a in 2u32..6, b in 1u32..4) {
        prop_assume!(a + b >= 4);
        let r = exact_min_cover(&f_instance(a, b), Budget::default()).unwrap();
        prop_assert!(r.optimum >= lower_bound_f(a, b).unwrap().value);
        if let Some(up) = exact_f(a, b).unwrap().constructive_upper() {
            prop_assert!(r.optimum <= up);
        }
    }
}
