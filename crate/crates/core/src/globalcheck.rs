//! Global classes: classes whose conjugation module contains every
//! irreducible of `S_n`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::conjrep::class_characteristic;
use crate::error::Result;
use crate::partition::{distinct_odd_partitions, partitions_of, Partition};
use crate::schur::missing_irreducibles;

/// Outcome of checking one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalVerdict {
    pub class_partition: Partition,
    pub twisted: bool,
    pub is_global: bool,
    pub missing: BTreeSet<Partition>,
}

/// Exhaustive sweep for one `n` compared against the odd-distinct-parts rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub n: usize,
    pub twisted: bool,
    pub computed_global: BTreeSet<Partition>,
    pub predicted_global: BTreeSet<Partition>,
    pub discrepancies: BTreeSet<Partition>,
    pub per_class: Vec<GlobalVerdict>,
}

impl CharacterizationReport {
    pub fn is_consistent(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// At least two parts, all odd and pairwise distinct.
pub fn satisfies_necessary(lambda: &Partition) -> bool {
    lambda.len() >= 2 && lambda.has_distinct_parts() && lambda.parts().iter().all(|p| p % 2 == 1)
}

pub fn is_global(lambda: &Partition, twisted: bool) -> Result<GlobalVerdict> {
    let characteristic = class_characteristic(lambda, twisted)?;
    let missing = missing_irreducibles(&characteristic.expansion)?;
    Ok(GlobalVerdict {
        class_partition: lambda.clone(),
        twisted,
        is_global: missing.is_empty(),
        missing,
    })
}

/// Verdicts for every class of `S_n`, in partition order. With `prefilter`,
/// classes failing [`satisfies_necessary`] are skipped.
pub fn sweep(n: usize, twisted: bool, prefilter: bool) -> Result<Vec<GlobalVerdict>> {
    let classes: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|p| !prefilter || satisfies_necessary(p))
        .collect();
    classes.par_iter().map(|lambda| is_global(lambda, twisted)).collect()
}

/// The global classes of `S_n`, found by checking every class.
pub fn global_classes(n: usize, twisted: bool) -> Result<BTreeSet<Partition>> {
    global_classes_with(n, twisted, false)
}

pub fn global_classes_with(n: usize, twisted: bool, prefilter: bool) -> Result<BTreeSet<Partition>> {
    Ok(sweep(n, twisted, prefilter)?
        .into_iter()
        .filter(|v| v.is_global)
        .map(|v| v.class_partition)
        .collect())
}

/// Classes predicted global: at least two odd distinct parts, except that
/// `S_4` has none and `S_8` has only `(7,1)`.
pub fn predicted_global(n: usize) -> BTreeSet<Partition> {
    match n {
        4 => BTreeSet::new(),
        8 => BTreeSet::from([Partition::from_sorted(vec![7, 1])]),
        _ => distinct_odd_partitions(n).into_iter().collect(),
    }
}

pub fn verify_characterization(n: usize, twisted: bool) -> Result<CharacterizationReport> {
    let per_class = sweep(n, twisted, false)?;
    let computed_global: BTreeSet<Partition> = per_class
        .iter()
        .filter(|v| v.is_global)
        .map(|v| v.class_partition.clone())
        .collect();
    let predicted_global = predicted_global(n);
    let discrepancies = computed_global.symmetric_difference(&predicted_global).cloned().collect();
    Ok(CharacterizationReport { n, twisted, computed_global, predicted_global, discrepancies, per_class })
}

/// Odd primes up to `n`, largest first.
pub fn odd_primes_desc(n: usize) -> Vec<usize> {
    if n < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        if i > 2 {
            primes.push(i);
        }
        for j in (i * i..=n).step_by(i) {
            composite[j] = true;
        }
    }
    primes.reverse();
    primes
}

/// Writes `n` as a sum of distinct odd primes, searching largest prime first
/// with backtracking. `None` exactly for `n ∈ {1, 2, 4, 6, 9}`.
pub fn dressler_decomposition(n: usize) -> Option<Partition> {
    fn search(target: usize, primes: &[usize], chosen: &mut Vec<usize>) -> bool {
        if target == 0 {
            return true;
        }
        for (i, &p) in primes.iter().enumerate() {
            if p > target {
                continue;
            }
            // The remaining primes are smaller; bail out if they cannot reach target.
            let reachable: usize = primes[i..].iter().sum();
            if reachable < target {
                return false;
            }
            chosen.push(p);
            if search(target - p, &primes[i + 1..], chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if n == 0 {
        return None;
    }
    let primes = odd_primes_desc(n);
    let mut chosen = Vec::new();
    search(n, &primes, &mut chosen).then(|| Partition::from_sorted(chosen))
}

/// A class with at least two odd distinct parts built from 1 and odd primes:
/// `(5,1)` for `n = 6`, `(7,1)` for `n = 8`, a prime decomposition for even
/// `n ≥ 10`, and a prime decomposition of `n-1` plus the part 1 for odd
/// `n ≥ 9`.
pub fn seed_partition(n: usize) -> Option<Partition> {
    match n {
        6 => Some(Partition::from_sorted(vec![5, 1])),
        8 => Some(Partition::from_sorted(vec![7, 1])),
        n if n >= 10 && n % 2 == 0 => dressler_decomposition(n),
        n if n >= 9 && n % 2 == 1 => dressler_decomposition(n - 1).map(|p| p.with_part(1)),
        _ => None,
    }
}
