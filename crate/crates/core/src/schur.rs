//! The Schur basis: conversion from power sums, Littlewood–Richardson
//! coefficients and products.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::charcalc::character_unchecked;
use crate::error::{Error, Result};
use crate::expansion::{Expansion, SchurBasis};
use crate::partition::{partitions_of, Partition, SkewShape};
use crate::profile::{self, Phase};
use crate::psum::PowerSumExpansion;
use crate::scalar::Scalar;
use crate::{PowerSum, Schur};

pub type SchurExpansion<T> = Expansion<SchurBasis, T>;

/// Converts power-sum coordinates to Schur coordinates using
/// `p_μ = Σ_λ χ^λ(μ) s_λ`.
pub fn convert_to_schur<T: Scalar>(f: &PowerSumExpansion<T>) -> SchurExpansion<T> {
    profile::timed(Phase::Conversion, || {
        let n = f.degree();
        let mut out = SchurExpansion::zero(n);
        for lambda in partitions_of(n) {
            let mut acc = T::zero();
            for (mu, c) in f.terms() {
                let chi = character_unchecked(&lambda, mu);
                if !chi.is_zero() {
                    acc = acc + c.clone() * T::from_bigint(&chi);
                }
            }
            out.add_term(lambda, acc);
        }
        out
    })
}

/// Exact conversion; every coordinate must come out integral.
pub fn to_schur(f: &PowerSum) -> Result<Schur> {
    integral(&convert_to_schur(f))
}

/// Narrows rational Schur coordinates to integers.
pub fn integral(a: &SchurExpansion<BigRational>) -> Result<Schur> {
    let mut out = Schur::zero(a.degree());
    for (lambda, c) in a.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegral { partition: lambda.clone(), value: c.to_string() });
        }
        out.add_term(lambda.clone(), c.to_integer());
    }
    Ok(out)
}

/// `ω`: the coefficient of `s_λ` moves to `s_{λ^t}`.
pub fn omega<T: Scalar>(a: &SchurExpansion<T>) -> SchurExpansion<T> {
    a.map_keys(Partition::conjugate)
}

/// Irreducibles of degree `a.degree()` with zero multiplicity.
pub fn missing_irreducibles(a: &Schur) -> Result<BTreeSet<Partition>> {
    if let Some((lambda, c)) = a.terms().iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::NegativeCoefficient { partition: lambda.clone(), value: c.to_string() });
    }
    Ok(partitions_of(a.degree())
        .into_iter()
        .filter(|lambda| !a.terms().contains_key(lambda))
        .collect())
}

/// A semistandard filling of a skew shape whose reverse reading word is a
/// lattice permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFilling {
    shape: SkewShape,
    entries: BTreeMap<(usize, usize), usize>,
}

impl LatticeFilling {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entry at `(row, column)`, 0-based.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.entries
    }

    /// Entries read right to left along rows, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.shape.reading_order().iter().map(|cell| self.entries[cell]).collect()
    }
}

/// Backtracking over the cells of a skew shape in reading order. Each cell is
/// bounded above by its right neighbour and its row index and below by the
/// cell above it; the lattice and weight counts are maintained incrementally.
struct FillingSearch<'a> {
    shape: &'a SkewShape,
    cells: Vec<(usize, usize)>,
    weight: &'a [usize],
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl<'a> FillingSearch<'a> {
    fn new(shape: &'a SkewShape, weight: &'a Partition) -> Self {
        let grid = (0..shape.outer().len()).map(|r| vec![0; shape.outer().part(r)]).collect();
        FillingSearch {
            shape,
            cells: shape.reading_order(),
            weight: weight.parts(),
            grid,
            counts: vec![0; weight.len() + 1],
        }
    }

    fn run(&mut self, idx: usize, visit: &mut dyn FnMut(&Vec<Vec<usize>>)) {
        if idx == self.cells.len() {
            visit(&self.grid);
            return;
        }
        let (r, c) = self.cells[idx];
        let inner = self.shape.inner();
        let outer = self.shape.outer();
        let mut hi = self.weight.len().min(r + 1);
        if c + 1 < outer.part(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        let lo = if r > 0 && c >= inner.part(r - 1) { self.grid[r - 1][c] + 1 } else { 1 };
        for v in lo..=hi {
            if self.counts[v] >= self.weight[v - 1] {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = v;
            self.run(idx + 1, visit);
            self.grid[r][c] = 0;
            self.counts[v] -= 1;
        }
    }
}

/// Counts lattice fillings of `shape` with content `weight`.
pub fn count_lattice_fillings(shape: &SkewShape, weight: &Partition) -> u64 {
    if shape.size() != weight.size() {
        return 0;
    }
    let mut count = 0u64;
    FillingSearch::new(shape, weight).run(0, &mut |_| count += 1);
    count
}

/// All lattice fillings of `shape` with content `weight`.
pub fn lattice_fillings(shape: &SkewShape, weight: &Partition) -> Vec<LatticeFilling> {
    if shape.size() != weight.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let cells = shape.reading_order();
    FillingSearch::new(shape, weight).run(0, &mut |grid| {
        let entries = cells.iter().map(|&(r, c)| ((r, c), grid[r][c])).collect();
        out.push(LatticeFilling { shape: shape.clone(), entries });
    });
    out
}

/// The Littlewood–Richardson coefficient `c^λ_{μν}`, the multiplicity of `s_λ`
/// in `s_μ s_ν`. Zero on a size mismatch or when `μ ⊄ λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    profile::timed(Phase::LittlewoodRichardson, || {
        // c^λ_{μν} = c^λ_{νμ}; fill the skew shape with fewer cells.
        let (inner, weight) = if mu.size() >= nu.size() { (mu, nu) } else { (nu, mu) };
        let shape = SkewShape::new(lambda.clone(), inner.clone()).expect("containment checked");
        count_lattice_fillings(&shape, weight)
    })
}

type ProductMemo = RwLock<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, u64>>>>;

static PRODUCTS: LazyLock<ProductMemo> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// `s_μ s_ν = Σ_λ c^λ_{μν} s_λ`, memoized.
pub fn schur_product(mu: &Partition, nu: &Partition) -> Arc<BTreeMap<Partition, u64>> {
    let (base, added) = if (mu.size(), nu) >= (nu.size(), mu) { (mu, nu) } else { (nu, mu) };
    let key = (base.clone(), added.clone());
    if let Some(hit) = PRODUCTS.read().expect("product memo poisoned").get(&key) {
        return hit.clone();
    }
    let product = Arc::new(profile::timed(Phase::LittlewoodRichardson, || grow_product(base, added)));
    PRODUCTS.write().expect("product memo poisoned").insert(key, product.clone());
    product
}

/// Expands `s_base · s_added` by adding `added_k` copies of the letter `k` as
/// a horizontal strip for `k = 1, 2, ...`, subject to the row-wise Yamanouchi
/// condition: for every row `r`, the number of `k`s in rows `0..=r` is at most
/// the number of `k-1`s in rows `0..r`.
fn grow_product(base: &Partition, added: &Partition) -> BTreeMap<Partition, u64> {
    let rows = base.len() + added.len();
    let mut shape: Vec<usize> = (0..rows).map(|r| base.part(r)).collect();
    let mut out = BTreeMap::new();
    let prev_cum = vec![usize::MAX; rows];
    add_letter(0, added.parts(), &mut shape, &prev_cum, &mut out);
    out
}

fn add_letter(
    letter: usize,
    weight: &[usize],
    shape: &mut Vec<usize>,
    prev_cum: &[usize],
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == weight.len() {
        let parts = shape.iter().copied().filter(|&p| p > 0).collect();
        *out.entry(Partition::from_sorted(parts)).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let mut cum = vec![0; shape.len()];
    place_strip(0, weight[letter], letter, weight, &old, shape, prev_cum, &mut cum, out);
}

#[allow(clippy::too_many_arguments)]
fn place_strip(
    row: usize,
    remaining: usize,
    letter: usize,
    weight: &[usize],
    old: &[usize],
    shape: &mut Vec<usize>,
    prev_cum: &[usize],
    cum: &mut Vec<usize>,
    out: &mut BTreeMap<Partition, u64>,
) {
    let before = if row == 0 { 0 } else { cum[row - 1] };
    if row == shape.len() {
        if remaining == 0 {
            add_letter(letter + 1, weight, shape, cum, out);
        }
        return;
    }
    // Lattice bound: k's through this row may not exceed (k-1)'s strictly above.
    let lattice_cap = if letter == 0 {
        usize::MAX
    } else if row == 0 {
        0
    } else {
        prev_cum[row - 1]
    };
    let strip_cap = if row == 0 { remaining } else { old[row - 1] - old[row] };
    let max_here = remaining.min(strip_cap).min(lattice_cap.saturating_sub(before));
    for a in (0..=max_here).rev() {
        shape[row] = old[row] + a;
        cum[row] = before + a;
        place_strip(row + 1, remaining - a, letter, weight, old, shape, prev_cum, cum, out);
    }
    shape[row] = old[row];
}

/// Product in the Schur basis via Littlewood–Richardson coefficients.
pub fn multiply_schur<T: Scalar>(a: &SchurExpansion<T>, b: &SchurExpansion<T>) -> SchurExpansion<T> {
    let mut out = SchurExpansion::zero(a.degree() + b.degree());
    for (mu, x) in a.terms() {
        for (nu, y) in b.terms() {
            let xy = x.clone() * y.clone();
            for (lambda, c) in schur_product(mu, nu).iter() {
                out.add_term(lambda.clone(), xy.clone() * T::from_bigint(&BigInt::from(*c)));
            }
        }
    }
    out
}
