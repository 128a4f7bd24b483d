use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qcat_core::{ratfunc_solve, LaurentInt, RatFunc};

fn laurent() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-4i64..5, -6i64..7), 0..5).prop_map(LaurentInt::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentInt> {
    laurent().prop_filter("nonzero", |a| !a.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentInt::zero());
        prop_assert_eq!(&a * &LaurentInt::one(), a.clone());
    }

    #[test]
    fn q_powers_add(x in -20i64..20, y in -20i64..20) {
        prop_assert_eq!(LaurentInt::q_pow(x) * LaurentInt::q_pow(y), LaurentInt::q_pow(x + y));
    }

    #[test]
    fn eval_q1_is_homomorphism(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).eval_q1(), a.eval_q1() * b.eval_q1());
        prop_assert_eq!((&a + &b).eval_q1(), a.eval_q1() + b.eval_q1());
    }

    #[test]
    fn ratfunc_equality_is_structural(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let x = RatFunc::new(a.clone(), b.clone());
        let y = RatFunc::new(&a * &c, &b * &c);
        prop_assert_eq!(x, y);
    }

    #[test]
    fn solve_substitutes_back(
        rows in prop::collection::vec(prop::collection::vec(laurent(), 3), 1..4),
        x in prop::collection::vec(laurent(), 3),
    ) {
        let system: Vec<Vec<RatFunc>> = rows
            .iter()
            .map(|r| r.iter().cloned().map(RatFunc::from).collect())
            .collect();
        let xs: Vec<RatFunc> = x.into_iter().map(RatFunc::from).collect();
        let rhs: Vec<RatFunc> = system
            .iter()
            .map(|r| r.iter().zip(&xs).fold(RatFunc::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        let sol = ratfunc_solve(&system, &rhs).expect("consistent by construction");
        for (row, want) in system.iter().zip(&rhs) {
            let got = row.iter().zip(&sol).fold(RatFunc::zero(), |acc, (a, b)| acc + a * b);
            prop_assert_eq!(&got, want);
        }
    }
}

#[test]
fn big_coefficients_do_not_overflow() {
    let a = LaurentInt::monomial(0, BigInt::from(i64::MAX)) + LaurentInt::q();
    let sq = &a * &a;
    assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
}
