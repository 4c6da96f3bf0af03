//! Brute-force decomposition of the conjugation action by scanning all of
//! `S_n`. Shares only the character values with the symmetric-function
//! pipeline.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::charcalc::character;
use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition};
use crate::Schur;

/// Largest `n` the scan accepts; `8! = 40320` elements.
pub const MAX_N: usize = 8;

/// A permutation of `{0, .., n-1}` as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The canonical element of cycle type `mu`: consecutive cycles
    /// `(0 1 .. μ_1-1)(μ_1 ..)...`.
    pub fn representative(mu: &Partition) -> Self {
        let mut images = Vec::with_capacity(mu.size());
        let mut start = 0;
        for &len in mu.parts() {
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation(images)
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// Cycles, each listed from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| other.0[y] == self.0[other.0[x]])
    }

    /// Advances to the next permutation in lexicographic order; false after
    /// the last one.
    fn advance(&mut self) -> bool {
        let v = &mut self.0;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
}

/// Sign of the permutation that `g` induces on the cycles of `sigma`; `g`
/// must commute with `sigma`, so it maps cycles to cycles.
pub fn induced_cycle_sign(g: &Permutation, sigma: &Permutation) -> i64 {
    let cycles = sigma.cycles();
    let mut owner = vec![0; sigma.images().len()];
    for (idx, cycle) in cycles.iter().enumerate() {
        for &x in cycle {
            owner[x] = idx;
        }
    }
    let image: Vec<usize> = cycles.iter().map(|c| owner[g.apply(c[0])]).collect();
    let mut seen = vec![false; cycles.len()];
    let mut orbits = 0;
    for start in 0..cycles.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = image[x];
        }
    }
    if (cycles.len() - orbits).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// For every pair (class `λ`, cycle type `μ` of `g`): the number of `σ` of type
/// `λ` commuting with the representative `g`, and the same count weighted by
/// [`induced_cycle_sign`].
#[derive(Debug, Default)]
struct FixedPoints {
    plain: HashMap<(Partition, Partition), u64>,
    signed: HashMap<(Partition, Partition), i64>,
}

static SCANS: LazyLock<RwLock<HashMap<usize, Arc<FixedPoints>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn scan(n: usize) -> Result<Arc<FixedPoints>> {
    if n > MAX_N {
        return Err(Error::ScaleGuard { n, limit: MAX_N });
    }
    if let Some(hit) = SCANS.read().expect("scan memo poisoned").get(&n) {
        return Ok(hit.clone());
    }
    let mut table = FixedPoints::default();
    for mu in partitions_of(n) {
        let g = Permutation::representative(&mu);
        let mut sigma = Permutation::identity(n);
        loop {
            if sigma.commutes_with(&g) {
                let lambda = sigma.cycle_type();
                let key = (lambda, mu.clone());
                *table.signed.entry(key.clone()).or_insert(0) += induced_cycle_sign(&g, &sigma);
                *table.plain.entry(key).or_insert(0) += 1;
            }
            if !sigma.advance() {
                break;
            }
        }
    }
    let table = Arc::new(table);
    SCANS.write().expect("scan memo poisoned").insert(n, table.clone());
    Ok(table)
}

fn check_sizes(class_lambda: &Partition, g_cycle_type: &Partition) -> Result<usize> {
    if class_lambda.size() != g_cycle_type.size() {
        return Err(Error::SizeMismatch {
            shape: class_lambda.clone(),
            shape_size: class_lambda.size(),
            cycle_type: g_cycle_type.clone(),
            cycle_size: g_cycle_type.size(),
        });
    }
    Ok(class_lambda.size())
}

/// Number of elements of class `λ` fixed by conjugation by an element of
/// cycle type `μ`.
pub fn fixed_point_character(class_lambda: &Partition, g_cycle_type: &Partition) -> Result<u64> {
    let n = check_sizes(class_lambda, g_cycle_type)?;
    let table = scan(n)?;
    Ok(table.plain.get(&(class_lambda.clone(), g_cycle_type.clone())).copied().unwrap_or(0))
}

/// The twisted analogue: each fixed `σ` contributes the sign of the
/// permutation `g` induces on the cycles of `σ`.
pub fn signed_fixed_point_character(class_lambda: &Partition, g_cycle_type: &Partition) -> Result<i64> {
    let n = check_sizes(class_lambda, g_cycle_type)?;
    let table = scan(n)?;
    Ok(table.signed.get(&(class_lambda.clone(), g_cycle_type.clone())).copied().unwrap_or(0))
}

/// Multiplicity of every irreducible in the (twisted) conjugation module on
/// class `λ`, by projecting the fixed-point character onto each `χ^ν`.
pub fn brute_multiplicities(class_lambda: &Partition, twisted: bool) -> Result<Schur> {
    let n = class_lambda.size();
    if n > MAX_N {
        return Err(Error::ScaleGuard { n, limit: MAX_N });
    }
    let classes = partitions_of(n);
    let mut weights = Vec::with_capacity(classes.len());
    for mu in &classes {
        let fixed = if twisted {
            BigInt::from(signed_fixed_point_character(class_lambda, mu)?)
        } else {
            BigInt::from(fixed_point_character(class_lambda, mu)?)
        };
        weights.push(mu.class_size() * fixed);
    }
    let order = factorial(n);
    let mut out = Schur::zero(n);
    for nu in classes.iter() {
        let mut total = BigInt::zero();
        for (mu, w) in classes.iter().zip(&weights) {
            total += w * character(nu, mu)?;
        }
        let (mult, rem) = total.div_rem(&order);
        if !rem.is_zero() {
            return Err(Error::NonIntegral {
                partition: nu.clone(),
                value: format!("{total}/{order}"),
            });
        }
        if mult.is_negative() {
            return Err(Error::NegativeCoefficient { partition: nu.clone(), value: mult.to_string() });
        }
        out.add_term(nu.clone(), mult);
    }
    Ok(out)
}

/// Size of class `λ` counted as the fixed points of the identity, with no
/// projection onto irreducibles.
pub fn brute_dimension(class_lambda: &Partition) -> Result<u64> {
    fixed_point_character(class_lambda, &Partition::column(class_lambda.size()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn representatives_have_their_type() {
        for mu in partitions_of(7) {
            assert_eq!(Permutation::representative(&mu).cycle_type(), mu);
        }
    }

    #[test]
    fn fixed_points() {
        for mu in partitions_of(5) {
            assert_eq!(fixed_point_character(&Partition::column(5), &mu).unwrap(), 1);
        }
        for lambda in partitions_of(5) {
            let size = u64::try_from(lambda.class_size()).unwrap();
            assert_eq!(fixed_point_character(&lambda, &Partition::column(5)).unwrap(), size);
            assert_eq!(brute_dimension(&lambda).unwrap(), size);
        }
        assert_eq!(fixed_point_character(&part![3], &part![3]).unwrap(), 2);
    }

    #[test]
    fn permutation_enumeration_covers_group() {
        let mut p = Permutation::identity(5);
        let mut count = 1;
        while p.advance() {
            count += 1;
        }
        assert_eq!(count, 120);
    }

    #[test]
    fn scale_guard() {
        let big = Partition::column(9);
        assert!(matches!(fixed_point_character(&big, &big), Err(Error::ScaleGuard { .. })));
        assert!(matches!(brute_multiplicities(&big, false), Err(Error::ScaleGuard { .. })));
    }

    #[test]
    fn induced_sign_swapping_two_cycles() {
        // sigma = (0 1)(2 3), g = (0 2)(1 3) swaps its two cycles.
        let sigma = Permutation(vec![1, 0, 3, 2]);
        let g = Permutation(vec![2, 3, 0, 1]);
        assert!(sigma.commutes_with(&g));
        assert_eq!(induced_cycle_sign(&g, &sigma), -1);
        assert_eq!(induced_cycle_sign(&sigma, &sigma), 1);
    }
}
