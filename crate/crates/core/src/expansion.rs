//! Sparse homogeneous expansions `Σ c_μ b_μ` over a basis indexed by
//! partitions.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use crate::partition::Partition;
use crate::scalar::Scalar;

/// Marker for the power-sum basis `p_μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PowerSumBasis;

/// Marker for the Schur basis `s_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchurBasis;

pub trait Basis: Clone + fmt::Debug + Send + Sync + 'static {
    /// Symbol used when printing terms, e.g. `p` or `s`.
    const SYMBOL: &'static str;
    /// Tag written in the JSON `basis` field.
    const NAME: &'static str;
}

impl Basis for PowerSumBasis {
    const SYMBOL: &'static str = "p";
    const NAME: &'static str = "powersum";
}

impl Basis for SchurBasis {
    const SYMBOL: &'static str = "s";
    const NAME: &'static str = "schur";
}

/// A homogeneous expansion of fixed degree.
///
/// Keys are partitions of exactly `degree` and stored coefficients are never
/// zero, so structural equality is equality of symmetric functions.
#[derive(Clone, PartialEq, Eq)]
pub struct Expansion<B, T> {
    degree: usize,
    terms: BTreeMap<Partition, T>,
    basis: PhantomData<B>,
}

impl<B: Basis, T: Scalar> Expansion<B, T> {
    pub fn zero(degree: usize) -> Self {
        Expansion { degree, terms: BTreeMap::new(), basis: PhantomData }
    }

    /// The unit `b_() = 1` in degree 0.
    pub fn one() -> Self {
        Self::monomial(Partition::empty(), T::one())
    }

    /// `coeff · b_mu`.
    pub fn monomial(mu: Partition, coeff: T) -> Self {
        let mut out = Self::zero(mu.size());
        out.add_term(mu, coeff);
        out
    }

    /// Collects terms, summing repeated keys. Returns `None` if a key has the
    /// wrong size.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, T)>) -> Option<Self> {
        let mut out = Self::zero(degree);
        for (mu, c) in terms {
            if mu.size() != degree {
                return None;
            }
            out.add_term(mu, c);
        }
        Some(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Terms in ascending [`Partition`] order, i.e. descending lexicographic.
    pub fn terms(&self) -> &BTreeMap<Partition, T> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, T> {
        self.terms
    }

    pub fn coefficient(&self, mu: &Partition) -> T {
        self.terms.get(mu).cloned().unwrap_or_else(T::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · b_mu`, dropping the key if the sum cancels.
    pub fn add_term(&mut self, mu: Partition, coeff: T) {
        assert_eq!(mu.size(), self.degree, "term {mu} has the wrong degree");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, factor: &T) -> Self {
        let mut out = Self::zero(self.degree);
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), c.clone() * factor.clone());
        }
        out
    }

    pub fn map_coefficients<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Expansion<B, U> {
        let mut out = Expansion::zero(self.degree);
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), f(c));
        }
        out
    }

    /// Reindexes every term through `f`, which must preserve size.
    pub(crate) fn map_keys(&self, f: impl Fn(&Partition) -> Partition) -> Self {
        let mut out = Self::zero(self.degree);
        for (mu, c) in &self.terms {
            out.add_term(f(mu), c.clone());
        }
        out
    }
}

impl<B: Basis, T: Scalar + fmt::Display> fmt::Display for Expansion<B, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}{}", B::SYMBOL, mu)?;
            } else {
                write!(f, "({}){}{}", c, B::SYMBOL, mu)?;
            }
        }
        Ok(())
    }
}

impl<B: Basis, T: fmt::Debug> fmt::Debug for Expansion<B, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct(B::NAME)
            .field("degree", &self.degree)
            .field("terms", &self.terms)
            .finish()
    }
}
