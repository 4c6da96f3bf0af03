//! The named symmetric functions: `f_n`, `A_n`, `g_n`, the class
//! characteristics `H_λ = Π h_{m_i}[f_i]`, `E_λ = Π e_{m_i}[f_i]`, and the
//! products `W_λ = Π g_{λ_i}`.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::psum::{multiply, plethysm_e, plethysm_h};
use crate::schur::{multiply_schur, to_schur};
use crate::{PowerSum, Schur};

/// Memo keyed by `n`; values are computed outside the lock, so concurrent
/// callers may race to fill an entry but always observe the same value.
struct Cache<K, V>(LazyLock<RwLock<HashMap<K, Arc<V>>>>);

impl<K: Eq + Hash + Clone, V> Cache<K, V> {
    const fn new() -> Self {
        Cache(LazyLock::new(|| RwLock::new(HashMap::new())))
    }

    fn get_or_try(&self, key: &K, make: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if let Some(v) = self.0.read().expect("cache poisoned").get(key) {
            return Ok(v.clone());
        }
        let v = Arc::new(make()?);
        self.0.write().expect("cache poisoned").insert(key.clone(), v.clone());
        Ok(v)
    }
}

static F_SCHUR: Cache<usize, Schur> = Cache::new();
static A_SCHUR: Cache<usize, Schur> = Cache::new();
static G_SCHUR: Cache<usize, Schur> = Cache::new();

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// Frobenius characteristic of `1↑_{C_n}^{S_n}`, i.e. the conjugation action
/// on `n`-cycles: `f_n = (1/n) Σ_{d|n} φ(d) p_{(d^{n/d})}`.
pub fn f_n(n: usize) -> PowerSum {
    assert!(n >= 1, "f_n needs n >= 1");
    let mut out = PowerSum::zero(n);
    let inv_n = BigRational::new(BigInt::one(), BigInt::from(n));
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let coeff = inv_n.clone() * BigRational::from_integer(BigInt::from(euler_phi(d)));
        out.add_term(Partition::rectangle(d, n / d), coeff);
    }
    out
}

/// `f_n` in the Schur basis, cached per `n`.
pub fn f_n_schur(n: usize) -> Result<Arc<Schur>> {
    F_SCHUR.get_or_try(&n, || to_schur(&f_n(n)))
}

/// `A_n`: every Schur function of degree `n` once.
pub fn a_n(n: usize) -> Arc<Schur> {
    A_SCHUR
        .get_or_try(&n, || {
            Ok(Schur::from_terms(n, partitions_of(n).into_iter().map(|p| (p, BigInt::one())))
                .expect("partitions of n"))
        })
        .expect("infallible")
}

/// The two shapes `(n-1,1)` and `(2,1^{n-2})` dropped from `A_n` to form `g_n`
/// (they coincide at `n = 3`). Empty for `n < 3`.
pub fn excluded_shapes(n: usize) -> BTreeSet<Partition> {
    if n < 3 {
        return BTreeSet::new();
    }
    let near_row = Partition::hook(n, 1);
    let near_column = near_row.conjugate();
    BTreeSet::from([near_row, near_column])
}

/// `g_n = A_n - s_{(n-1,1)} - s_{(2,1^{n-2})}` for `n ≥ 3` (one term removed at
/// `n = 3`), and `g_n = A_n` for `n ≤ 2`.
pub fn g_n(n: usize) -> Arc<Schur> {
    G_SCHUR
        .get_or_try(&n, || {
            let excluded = excluded_shapes(n);
            Ok(Schur::from_terms(
                n,
                partitions_of(n)
                    .into_iter()
                    .filter(|p| !excluded.contains(p))
                    .map(|p| (p, BigInt::one())),
            )
            .expect("partitions of n"))
        })
        .expect("infallible")
}

/// The conjugation module on one conjugacy class, ordinary or sign-twisted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCharacteristic {
    pub class_partition: Partition,
    pub twisted: bool,
    pub expansion: Schur,
}

/// `Π_i h_{m_i}[f_i]` (or `Π_i e_{m_i}[f_i]` when twisted) in power sums.
pub fn class_characteristic_p(lambda: &Partition, twisted: bool) -> PowerSum {
    let mut product = PowerSum::one();
    for (part, mult) in lambda.multiplicities() {
        let f = f_n(part);
        let factor = if twisted { plethysm_e(mult, &f) } else { plethysm_h(mult, &f) };
        product = multiply(&product, &factor);
    }
    product
}

pub fn class_characteristic(lambda: &Partition, twisted: bool) -> Result<ClassCharacteristic> {
    if lambda.is_empty() {
        return Err(Error::InvalidArgument("class partition must be nonempty".into()));
    }
    let expansion = to_schur(&class_characteristic_p(lambda, twisted))?;
    if let Some((mu, c)) = expansion.terms().iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::NegativeCoefficient { partition: mu.clone(), value: c.to_string() });
    }
    Ok(ClassCharacteristic { class_partition: lambda.clone(), twisted, expansion })
}

/// `W_λ = Π_i g_{λ_i}`, multiplied with Littlewood–Richardson coefficients.
pub fn w_lambda(lambda: &Partition) -> Schur {
    lambda
        .parts()
        .iter()
        .fold(Schur::one(), |acc, &part| multiply_schur(&acc, &g_n(part)))
}

/// Total dimension `Σ_λ c_λ f^λ` of a Schur expansion.
pub fn dimension(a: &Schur) -> BigInt {
    a.terms().iter().map(|(lambda, c)| c * lambda.degree()).sum()
}

/// Range where every `λ ⊢ n` contains a partition of `q` other than the two
/// excluded shapes: `q ≥ 5, n ≥ q+1` or `q ∈ {3,4}, n ≥ q+2`.
pub fn subshape_range(q: usize, n: usize) -> bool {
    (q >= 5 && n > q) || ((q == 3 || q == 4) && n >= q + 2)
}

/// Range where `A_{n-q} g_q` contains every irreducible: the subshape range
/// plus `q ∈ {1,2}, n ≥ q`.
pub fn a_times_g_range(q: usize, n: usize) -> bool {
    subshape_range(q, n) || ((q == 1 || q == 2) && n >= q)
}

/// Range where `g_p g_q` contains every irreducible: `p > q ≥ 4`,
/// `p ≥ 6, q = 3`, or `(p, q) = (4, 3)`.
pub fn g_times_g_range(p: usize, q: usize) -> bool {
    (p > q && q >= 4) || (p >= 6 && q == 3) || (p == 4 && q == 3)
}

/// A partition of `q` inside `lambda` that is not one of the excluded shapes.
pub fn admissible_subshape(lambda: &Partition, q: usize) -> Option<Partition> {
    let excluded = excluded_shapes(q);
    partitions_of(q)
        .into_iter()
        .find(|mu| !excluded.contains(mu) && lambda.contains(mu))
}
