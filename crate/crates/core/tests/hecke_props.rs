use proptest::prelude::*;
use qcat_core::dahecke::{HeckeElement, PsiModel, DEFAULT_DEGREE_CAP};

fn element(r: usize) -> impl Strategy<Value = HeckeElement> {
    let term = (prop::collection::vec(0u32..=1, r), Just((0..r).collect::<Vec<usize>>()).prop_shuffle(), -2i64..=2);
    prop::collection::vec(term, 1..4).prop_map(move |ts| {
        ts.into_iter().fold(HeckeElement::zero(r), |acc, (a, w, c)| {
            let a = if a.iter().sum::<u32>() > 2 { vec![0; r] } else { a };
            acc.add(&HeckeElement::monomial(a, w, c))
        })
    })
}

fn case() -> impl Strategy<Value = (usize, usize, i64)> {
    (1usize..=3, 1usize..=3, 0i64..=2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn psi_is_multiplicative(((n, r, c), (z1, z2)) in case().prop_flat_map(|p| (Just(p), (element(p.1), element(p.1))))) {
        let m = PsiModel::new(n, r, c);
        let prod = z1.mul(&z2, DEFAULT_DEGREE_CAP).unwrap();
        prop_assert_eq!(m.matrix_of(&prod), m.matrix_of(&z1).mul(&m.matrix_of(&z2)));
    }

    #[test]
    fn psi_is_additive(((n, r, c), (z1, z2)) in case().prop_flat_map(|p| (Just(p), (element(p.1), element(p.1))))) {
        let m = PsiModel::new(n, r, c);
        prop_assert_eq!(m.matrix_of(&z1.add(&z2)), m.matrix_of(&z1).add(&m.matrix_of(&z2)));
    }
}
