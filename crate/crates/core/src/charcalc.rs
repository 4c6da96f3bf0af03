//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama
//! rule.
//!
//! Values are memoized process-wide, keyed by `(shape, remaining cycle type)`.
//! The largest cycle part is always the one removed, so every recursive call
//! lands on a cycle type that is itself a canonical partition.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::profile::{self, Phase};

/// A validated `(shape, cycle type)` pair of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterKey {
    shape: Partition,
    cycle_type: Partition,
}

impl CharacterKey {
    pub fn new(shape: Partition, cycle_type: Partition) -> Result<Self> {
        if shape.size() != cycle_type.size() {
            return Err(Error::SizeMismatch {
                shape_size: shape.size(),
                cycle_size: cycle_type.size(),
                shape,
                cycle_type,
            });
        }
        Ok(CharacterKey { shape, cycle_type })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.cycle_type
    }

    pub fn value(&self) -> BigInt {
        character_unchecked(&self.shape, &self.cycle_type)
    }
}

type Memo = RwLock<HashMap<(Partition, Partition), BigInt>>;

static MEMO: LazyLock<Memo> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// The character value `χ^shape(cycle_type)`.
pub fn character(shape: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    if shape.size() != cycle_type.size() {
        return Err(Error::SizeMismatch {
            shape: shape.clone(),
            shape_size: shape.size(),
            cycle_type: cycle_type.clone(),
            cycle_size: cycle_type.size(),
        });
    }
    Ok(profile::timed(Phase::Characters, || character_unchecked(shape, cycle_type)))
}

pub(crate) fn character_unchecked(shape: &Partition, cycle_type: &Partition) -> BigInt {
    if cycle_type.is_empty() {
        return BigInt::one();
    }
    // Shapes with one row or one column have closed forms.
    if shape.len() == 1 {
        return BigInt::one();
    }
    if shape.largest_part() == 1 {
        return BigInt::from(cycle_type.sign());
    }
    let key = (shape.clone(), cycle_type.clone());
    if let Some(v) = MEMO.read().expect("character memo poisoned").get(&key) {
        return v.clone();
    }
    let strip = cycle_type.largest_part();
    let rest = Partition::from_sorted(cycle_type.parts()[1..].to_vec());
    let mut total = BigInt::zero();
    for (smaller, height) in remove_border_strips(shape, strip) {
        let sub = character_unchecked(&smaller, &rest);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    MEMO.write().expect("character memo poisoned").insert(key, total.clone());
    total
}

/// All ways to remove a border strip of length `k` from `shape`, with the
/// strip's height (number of rows minus one).
///
/// Works on the beta-set `{λ_i + (ℓ - 1 - i)}`: removing a strip of length `k`
/// moves one bead from `b` to an empty position `b - k`, and the height is the
/// number of beads strictly between the two positions.
pub fn remove_border_strips(shape: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let len = shape.len();
    let beta: Vec<usize> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((Partition::from_sorted(parts), height));
    }
    out
}

/// The full character table of `S_n`; rows are shapes and columns are cycle
/// types, both in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, shape: &Partition, cycle_type: &Partition) -> Option<&BigInt> {
        let r = *self.index.get(shape)?;
        let c = *self.index.get(cycle_type)?;
        Some(&self.values[r][c])
    }

    /// Iterates `(shape, cycle_type, value)` row by row.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Partition, &BigInt)> {
        self.partitions.iter().zip(&self.values).flat_map(move |(shape, row)| {
            self.partitions.iter().zip(row).map(move |(mu, v)| (shape, mu, v))
        })
    }
}

pub fn character_table(n: usize) -> CharacterTable {
    let partitions = partitions_of(n);
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let values = profile::timed(Phase::Characters, || {
        partitions
            .iter()
            .map(|shape| partitions.iter().map(|mu| character_unchecked(shape, mu)).collect())
            .collect()
    });
    CharacterTable { n, partitions, index, values }
}
