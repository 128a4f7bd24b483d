use proptest::prelude::*;
use qcat_core::tableaux::{
    enumerate_semistandard, lemma3_holds, rs_insert, Partition, Tableau,
};

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = Partition::all_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn shape_and_word() -> impl Strategy<Value = (Partition, Vec<i64>)> {
    partition(8).prop_flat_map(|p| {
        let n = p.size();
        (Just(p), prop::collection::vec(-5i64..6, n))
    })
}

proptest! {
    #[test]
    fn fill_read_round_trip((lam, a) in shape_and_word()) {
        let t = Tableau::fill(&lam, &a).unwrap();
        prop_assert_eq!(t.reading_word(), a);
        let again = Tableau::fill(&lam, &t.reading_word()).unwrap();
        prop_assert_eq!(again, t);
    }

    #[test]
    fn transpose_is_involution(lam in partition(12)) {
        prop_assert_eq!(lam.transpose().transpose(), lam.clone());
        prop_assert_eq!(lam.transpose().size(), lam.size());
    }

    #[test]
    fn rs_shapes_agree(w in Just((1..=7i64).collect::<Vec<_>>()).prop_shuffle()) {
        let (t, r) = rs_insert(&w).unwrap();
        prop_assert_eq!(t.shape(), r.shape());
        prop_assert!(t.is_standard());
        prop_assert!(r.is_standard());
    }

    #[test]
    fn predicates_are_nested(lam in partition(5), k in 1usize..4) {
        for t in enumerate_semistandard(&lam, k) {
            prop_assert!(t.is_semistandard() && t.is_column_strict());
        }
        let d: Vec<i64> = (1..=lam.size() as i64).rev().collect();
        let t = Tableau::fill(&lam, &d).unwrap();
        if t.is_standard() {
            prop_assert!(t.is_semistandard());
        }
    }
}

#[test]
fn lemma3_regular_case_up_to_five() {
    for n in 1..=5usize {
        for d in [(1..=n as i64).rev().collect::<Vec<_>>(), (0..n as i64).map(|x| 10 - 3 * x).collect()] {
            for lam in Partition::all_of(n) {
                assert!(lemma3_holds(&lam, &d).unwrap(), "λ={lam} d={d:?}");
            }
        }
    }
}
