use num_bigint::BigInt;
use num_integer::Integer;
use symconj::charcalc::character;
use symconj::conjrep::{class_characteristic, dimension, f_n, f_n_schur};
use symconj::oracle::{brute_dimension, brute_multiplicities, fixed_point_character};
use symconj::partition::factorial;
use symconj::psum::plethysm_h;
use symconj::schur::{omega, to_schur};
use symconj::{part, partitions_of, Partition, Schur};

#[test]
fn oracle_examples() {
    assert_eq!(brute_multiplicities(&part![3], false).unwrap(), *f_n_schur(3).unwrap());
    assert_eq!(brute_multiplicities(&part![4], false).unwrap(), *f_n_schur(4).unwrap());
    assert_eq!(
        brute_multiplicities(&part![2, 2], false).unwrap(),
        to_schur(&plethysm_h(2, &f_n(2))).unwrap()
    );
}

#[test]
fn oracle_dimension_is_class_size() {
    for n in 1..=7 {
        for lambda in partitions_of(n) {
            let size = lambda.class_size();
            assert_eq!(BigInt::from(brute_dimension(&lambda).unwrap()), size);
            for twisted in [false, true] {
                let brute = brute_multiplicities(&lambda, twisted).unwrap();
                assert_eq!(dimension(&brute), size, "{lambda} twisted={twisted}");
            }
        }
    }
}

/// Weighting fixed points by the sign of `g` itself projects onto `ω` of the
/// ordinary module, which is a different module from the twisted one as soon
/// as an even part is present.
#[test]
fn sign_of_g_twist_is_omega_of_ordinary() {
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let mut out = Schur::zero(n);
            for nu in partitions_of(n) {
                let total: BigInt = partitions_of(n)
                    .iter()
                    .map(|mu| {
                        mu.class_size()
                            * mu.sign()
                            * fixed_point_character(&lambda, mu).unwrap()
                            * character(&nu, mu).unwrap()
                    })
                    .sum();
                let (q, r) = total.div_rem(&factorial(n));
                assert_eq!(r, BigInt::from(0));
                out.add_term(nu, q);
            }
            let ordinary = class_characteristic(&lambda, false).unwrap().expansion;
            assert_eq!(out, omega(&ordinary));
        }
    }
    let twisted = class_characteristic(&part![2], true).unwrap().expansion;
    assert_eq!(twisted, Schur::monomial(part![2], 1.into()));
    assert_ne!(twisted, omega(&class_characteristic(&part![2], false).unwrap().expansion));
}

#[test]
fn identity_class_is_trivial() {
    for n in 1..=6 {
        let id = Partition::column(n);
        assert_eq!(brute_multiplicities(&id, false).unwrap(), Schur::monomial(part![n], 1.into()));
    }
}
