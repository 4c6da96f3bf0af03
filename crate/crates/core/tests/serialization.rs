use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use symconj::json::{power_sum_from_json, power_sum_to_json, schur_from_json, schur_to_json};
use symconj::{partitions_of, PowerSum, Schur};

fn coefficients(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    let count = partitions_of(n).len();
    prop::collection::vec((-1000i64..1000, 1i64..50), count)
}

proptest! {
    #[test]
    fn schur_round_trip(n in 0usize..8, cs in coefficients(7)) {
        let mut a = Schur::zero(n);
        for (lambda, (c, _)) in partitions_of(n).into_iter().zip(cs) {
            a.add_term(lambda, BigInt::from(c));
        }
        let text = schur_to_json(&a);
        let back = schur_from_json(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(schur_to_json(&back), text);
    }

    #[test]
    fn power_sum_round_trip(n in 0usize..8, cs in coefficients(7)) {
        let mut f = PowerSum::zero(n);
        for (mu, (num, den)) in partitions_of(n).into_iter().zip(cs) {
            f.add_term(mu, BigRational::new(num.into(), den.into()));
        }
        let text = power_sum_to_json(&f);
        let back = power_sum_from_json(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(power_sum_to_json(&back), text);
    }
}
