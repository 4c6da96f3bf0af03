//! Test-only helpers that stay independent of the code paths they check.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use symconj::charcalc::character;
use symconj::{partitions_of, Partition, PowerSum, Schur};

/// Schur -> power sums through the character table:
/// coefficient of p_μ is Σ_λ a_λ χ^λ(μ) / z_μ.
pub fn from_schur(a: &Schur) -> PowerSum {
    let n = a.degree();
    let mut out = PowerSum::zero(n);
    for mu in partitions_of(n) {
        let mut acc = BigInt::from(0);
        for (lambda, c) in a.terms() {
            acc += c * character(lambda, &mu).unwrap();
        }
        out.add_term(mu.clone(), BigRational::new(acc, mu.z_value()));
    }
    out
}

/// Number of partitions of n by the coin-change recurrence over part sizes.
pub fn partition_count(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Standard Young tableaux counted by repeatedly removing a corner cell.
pub fn count_syt(shape: &[usize]) -> u64 {
    if shape.iter().all(|&r| r == 0) {
        return 1;
    }
    let mut total = 0;
    for r in 0..shape.len() {
        let is_corner = shape[r] > 0 && (r + 1 == shape.len() || shape[r + 1] < shape[r]);
        if is_corner {
            let mut smaller = shape.to_vec();
            smaller[r] -= 1;
            total += count_syt(&smaller);
        }
    }
    total
}

/// A random Schur expansion of degree n with nonnegative integer coefficients.
pub fn random_genuine(rng: &mut StdRng, n: usize) -> Schur {
    let mut shapes = partitions_of(n);
    shapes.shuffle(rng);
    let keep = rng.gen_range(1..=shapes.len());
    Schur::from_terms(
        n,
        shapes.into_iter().take(keep).map(|p| (p, BigInt::from(rng.gen_range(1..=4)))),
    )
    .unwrap()
}

/// Evaluates p_μ at a point.
pub fn eval_power_sum(mu: &Partition, xs: &[i64]) -> BigInt {
    mu.parts()
        .iter()
        .map(|&k| xs.iter().map(|&x| BigInt::from(x).pow(k as u32)).sum::<BigInt>())
        .product()
}

pub fn eval_expansion(f: &PowerSum, xs: &[i64]) -> BigRational {
    f.terms()
        .iter()
        .map(|(mu, c)| c * BigRational::from_integer(eval_power_sum(mu, xs)))
        .sum()
}

/// h_m evaluated directly as the sum of all monomials of degree m.
pub fn eval_h_monomials(m: usize, xs: &[i64]) -> BigInt {
    fn go(m: usize, start: usize, xs: &[i64], acc: BigInt) -> BigInt {
        if m == 0 {
            return acc;
        }
        (start..xs.len()).map(|i| go(m - 1, i, xs, &acc * xs[i])).sum()
    }
    go(m, 0, xs, BigInt::from(1))
}

/// e_m evaluated directly as the sum of squarefree monomials of degree m.
pub fn eval_e_monomials(m: usize, xs: &[i64]) -> BigInt {
    fn go(m: usize, start: usize, xs: &[i64], acc: BigInt) -> BigInt {
        if m == 0 {
            return acc;
        }
        (start..xs.len()).map(|i| go(m - 1, i + 1, xs, &acc * xs[i])).sum()
    }
    go(m, 0, xs, BigInt::from(1))
}
