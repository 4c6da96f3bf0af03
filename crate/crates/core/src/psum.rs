//! Symmetric functions in the power-sum basis.
//!
//! Products are concatenations of index partitions and the plethysm `p_d[f]`
//! scales every part by `d`, which makes this the working basis for the
//! `h_m[f]` / `e_m[f]` constructions.

use std::collections::HashMap;
use std::ops::Mul;

use crate::expansion::{Expansion, PowerSumBasis};
use crate::partition::partitions_of;
use crate::profile::{self, Phase};
use crate::scalar::{Field, Scalar};

pub type PowerSumExpansion<T> = Expansion<PowerSumBasis, T>;

impl<T: Scalar> PowerSumExpansion<T> {
    /// Applies `ω`: `p_μ ↦ ε_μ p_μ`.
    pub fn omega(&self) -> Self {
        let mut out = Self::zero(self.degree());
        for (mu, c) in self.terms() {
            let c = if mu.sign() < 0 { -c.clone() } else { c.clone() };
            out.add_term(mu.clone(), c);
        }
        out
    }
}

impl<T: Scalar> Mul for &PowerSumExpansion<T> {
    type Output = PowerSumExpansion<T>;

    fn mul(self, rhs: Self) -> PowerSumExpansion<T> {
        multiply(self, rhs)
    }
}

/// `h_m = Σ_{ρ⊢m} p_ρ / z_ρ`.
pub fn p_basis_of_h<T: Field>(m: usize) -> PowerSumExpansion<T> {
    let mut out = PowerSumExpansion::zero(m);
    for rho in partitions_of(m) {
        let c = T::one() / T::from_bigint(&rho.z_value());
        out.add_term(rho, c);
    }
    out
}

/// `e_m = Σ_{ρ⊢m} ε_ρ p_ρ / z_ρ`.
pub fn p_basis_of_e<T: Field>(m: usize) -> PowerSumExpansion<T> {
    p_basis_of_h::<T>(m).omega()
}

/// Product of two expansions; `p_μ p_ν = p_{μ∪ν}`.
pub fn multiply<T: Scalar>(a: &PowerSumExpansion<T>, b: &PowerSumExpansion<T>) -> PowerSumExpansion<T> {
    let mut out = PowerSumExpansion::zero(a.degree() + b.degree());
    for (mu, x) in a.terms() {
        for (nu, y) in b.terms() {
            out.add_term(mu.union(nu), x.clone() * y.clone());
        }
    }
    out
}

/// The plethysm `p_d[f]`: every index part is multiplied by `d`.
pub fn plethysm_into<T: Scalar>(f: &PowerSumExpansion<T>, d: usize) -> PowerSumExpansion<T> {
    assert!(d >= 1, "p_0 is not a plethystic operator");
    PowerSumExpansion::from_terms(f.degree() * d, f.terms().iter().map(|(mu, c)| (mu.scale(d), c.clone())))
        .expect("scaling preserves degree")
}

/// `h_m[f] = Σ_{ρ⊢m} (1/z_ρ) ∏_j p_{ρ_j}[f]`.
pub fn plethysm_h<T: Field>(m: usize, f: &PowerSumExpansion<T>) -> PowerSumExpansion<T> {
    profile::timed(Phase::Plethysm, || plethysm_signed(m, f, false))
}

/// `e_m[f] = Σ_{ρ⊢m} (ε_ρ/z_ρ) ∏_j p_{ρ_j}[f]`.
pub fn plethysm_e<T: Field>(m: usize, f: &PowerSumExpansion<T>) -> PowerSumExpansion<T> {
    profile::timed(Phase::Plethysm, || plethysm_signed(m, f, true))
}

fn plethysm_signed<T: Field>(m: usize, f: &PowerSumExpansion<T>, signed: bool) -> PowerSumExpansion<T> {
    let mut substituted: HashMap<usize, PowerSumExpansion<T>> = HashMap::new();
    let mut out = PowerSumExpansion::zero(m * f.degree());
    for rho in partitions_of(m) {
        let mut product = PowerSumExpansion::one();
        for &d in rho.parts() {
            let factor = substituted.entry(d).or_insert_with(|| plethysm_into(f, d));
            product = multiply(&product, factor);
        }
        let mut coeff = T::one() / T::from_bigint(&rho.z_value());
        if signed && rho.sign() < 0 {
            coeff = -coeff;
        }
        out.add_assign(&product.scaled(&coeff));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::Partition;
    use crate::PowerSum;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ps(degree: usize, terms: &[(Partition, BigRational)]) -> PowerSum {
        PowerSum::from_terms(degree, terms.iter().cloned()).unwrap()
    }

    #[test]
    fn h_small() {
        assert_eq!(p_basis_of_h::<BigRational>(0), PowerSum::one());
        assert_eq!(p_basis_of_h::<BigRational>(1), ps(1, &[(part![1], q(1, 1))]));
        assert_eq!(
            p_basis_of_h::<BigRational>(2),
            ps(2, &[(part![1, 1], q(1, 2)), (part![2], q(1, 2))])
        );
    }

    #[test]
    fn e_small() {
        assert_eq!(p_basis_of_e::<BigRational>(1), ps(1, &[(part![1], q(1, 1))]));
        assert_eq!(
            p_basis_of_e::<BigRational>(2),
            ps(2, &[(part![1, 1], q(1, 2)), (part![2], q(-1, 2))])
        );
    }

    #[test]
    fn omega_duality_of_h_and_e() {
        for m in 0..=7 {
            let h = p_basis_of_h::<BigRational>(m);
            let e = p_basis_of_e::<BigRational>(m);
            for (rho, c) in h.terms() {
                let expected = if rho.sign() < 0 { -c.clone() } else { c.clone() };
                assert_eq!(e.coefficient(rho), expected);
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let x = ps(3, &[(part![2, 1], q(3, 4)), (part![1, 1, 1], q(-1, 5))]);
        assert_eq!(multiply(&PowerSum::one(), &x), x);
        assert_eq!(
            multiply(&ps(2, &[(part![2], q(1, 1))]), &ps(1, &[(part![1], q(1, 1))])),
            ps(3, &[(part![2, 1], q(1, 1))])
        );
        let h1 = p_basis_of_h::<BigRational>(1);
        assert_eq!(&h1 * &h1, ps(2, &[(part![1, 1], q(1, 1))]));
    }

    #[test]
    fn cancellation_prunes() {
        let mut x = ps(2, &[(part![2], q(1, 2))]);
        x.add_term(part![2], q(-1, 2));
        assert!(x.is_zero());
        assert_eq!(x.degree(), 2);
    }

    #[test]
    fn plethysm_into_examples() {
        let f = ps(2, &[(part![1, 1], q(1, 2)), (part![2], q(1, 2))]);
        assert_eq!(plethysm_into(&f, 1), f);
        assert_eq!(plethysm_into(&ps(1, &[(part![1], q(1, 1))]), 3), ps(3, &[(part![3], q(1, 1))]));
        assert_eq!(
            plethysm_into(&f, 2),
            ps(4, &[(part![2, 2], q(1, 2)), (part![4], q(1, 2))])
        );
    }

    #[test]
    fn plethysm_of_p1_is_h_and_e() {
        let p1 = ps(1, &[(part![1], q(1, 1))]);
        for m in 0..=8 {
            assert_eq!(plethysm_h(m, &p1), p_basis_of_h(m));
            assert_eq!(plethysm_e(m, &p1), p_basis_of_e(m));
        }
    }

    #[test]
    fn plethysm_edge_degrees() {
        let f = ps(3, &[(part![3], q(2, 3)), (part![1, 1, 1], q(1, 3))]);
        assert_eq!(plethysm_h(1, &f), f);
        assert_eq!(plethysm_e(1, &f), f);
        assert_eq!(plethysm_h(0, &f), PowerSum::one());
        assert_eq!(plethysm_e(0, &f), PowerSum::one());
    }

    #[test]
    fn float_coefficients_track_exact_ones() {
        let exact = p_basis_of_h::<BigRational>(5);
        let approx = p_basis_of_h::<f64>(5);
        for (rho, c) in exact.terms() {
            let c = num_traits::ToPrimitive::to_f64(c).unwrap();
            assert!((approx.coefficient(rho) - c).abs() < 1e-12);
        }
    }
}
