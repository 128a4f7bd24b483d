use proptest::prelude::*;
use qcat_core::grothendieck::{block_discipline, op_e_i, op_f_i};
use qcat_core::weights::*;

fn label(max_n: usize, k: usize) -> impl Strategy<Value = GlWeight> {
    prop::collection::vec(1..=k as i64, 1..=max_n).prop_map(GlWeight)
}

proptest! {
    #[test]
    fn dominance_is_a_partial_order_on_orbits(a in label(5, 4), seed in any::<u64>()) {
        let o = orbit(&dominant_rep(&a));
        let pick = |s: u64| o[(s as usize) % o.len()].clone();
        let (b, c) = (pick(seed), pick(seed / 7 + 3));
        prop_assert!(dominance_leq(&a, &a).unwrap());
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
            prop_assert!(dominance_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn plus_and_minus_are_inverse(a in label(5, 4), i in 1i64..4) {
        let d = dominant_rep(&a);
        if let Some(p) = plus_i(&a, i) {
            prop_assert_eq!(minus_i(&p, i), Some(d.clone()));
            prop_assert_eq!(count_c(&p, i), count_c(&a, i) - 1);
        }
        if let Some(m) = minus_i(&a, i) {
            prop_assert_eq!(plus_i(&m, i), Some(d));
        }
    }

    #[test]
    fn phi_is_constant_on_blocks(a in label(5, 4), seed in any::<u64>()) {
        let o = orbit(&dominant_rep(&a));
        let b = &o[(seed as usize) % o.len()];
        prop_assert!(same_block(&a, b));
        prop_assert_eq!(phi(&a, 4).unwrap(), phi(b, 4).unwrap());
        prop_assert_eq!(phi(&a, 4).unwrap().total(), a.len() as i64);
    }

    #[test]
    fn phi_pairing_counts_difference(a in label(5, 4), i in 1usize..4) {
        let w = phi(&a, 4).unwrap();
        prop_assert_eq!(w.pair_root(i), count_c(&a, i as i64) - count_c(&a, i as i64 + 1));
    }

    #[test]
    fn raised_classes_keep_block_discipline(a in label(5, 4), i in 1i64..4) {
        prop_assert!(block_discipline(&a, 4));
        let target = phi(&a, 4).unwrap().minus(&SlkWeight::simple_root(4, i as usize));
        for b in op_f_i(&a, i, 4).support() {
            prop_assert_eq!(phi(b, 4).unwrap(), target.clone());
        }
        let target = phi(&a, 4).unwrap().plus(&SlkWeight::simple_root(4, i as usize));
        for b in op_e_i(&a, i, 4).support() {
            prop_assert_eq!(phi(b, 4).unwrap(), target.clone());
        }
    }
}
