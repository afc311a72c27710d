//! Multi-indices: exponent vectors of monomials in `n` variables.
//!
//! A multi-index is an element of the additive monoid (ℕ₀)ⁿ. Throughout the
//! crate, variable positions are 0-based; user-facing output converts to
//! 1-based names.

use std::fmt;

use crate::error::{Error, Result};

/// An exponent vector with fixed length `n`.
///
/// Exponents are machine-width (`u32`); all arithmetic is checked so that
/// overflow surfaces as an [`Error::ExponentOverflow`] instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<u32>);

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl MultiIndex {
    /// The zero multi-index (exponent vector of the monomial 1).
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The multi-index of the single variable `i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn from_slice(s: &[u32]) -> Self {
        MultiIndex(s.to_vec())
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree |ν| = Σ νᵢ.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Class of the multi-index: the smallest index `k` (0-based) with
    /// ν_k > 0. Returns `None` for the zero multi-index.
    pub fn class(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Checked componentwise sum.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.len(), other.len());
        let mut v = Vec::with_capacity(self.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            v.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(MultiIndex(v))
    }

    /// Checked addition of 1 to entry `i`.
    pub fn checked_bump(&self, i: usize) -> Result<Self> {
        let mut v = self.0.clone();
        v[i] = v[i].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(MultiIndex(v))
    }

    /// Componentwise difference, if `other` divides `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.len(), other.len());
        let mut v = Vec::with_capacity(self.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            v.push(a.checked_sub(b)?);
        }
        Some(MultiIndex(v))
    }

    /// Ordinary divisibility: νᵢ ≤ μᵢ for all i.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// Proper divisibility: divides and is distinct.
    pub fn divides_properly(&self, other: &Self) -> bool {
        self.divides(other) && self != other
    }

    /// Componentwise maximum (exponent vector of the monomial lcm).
    pub fn lcm(&self, other: &Self) -> Self {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Restricted divisibility: `self` divides `other` with the quotient
    /// supported only on the index set `mult` (0-based positions).
    pub fn divides_restricted(&self, other: &Self, mult: &std::collections::BTreeSet<usize>) -> bool {
        for (i, (&a, &b)) in self.0.iter().zip(&other.0).enumerate() {
            if a > b {
                return false;
            }
            if a < b && !mult.contains(&i) {
                return false;
            }
        }
        true
    }

    /// Insert a new entry with value `e` at position `pos`, producing a
    /// multi-index of length n+1 (used for homogenization).
    pub fn insert(&self, pos: usize, e: u32) -> Self {
        let mut v = self.0.clone();
        v.insert(pos, e);
        MultiIndex(v)
    }

    /// Remove the entry at position `pos`, producing a multi-index of length
    /// n−1 (used for dehomogenization).
    pub fn remove(&self, pos: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(pos);
        MultiIndex(v)
    }

    /// Apply a permutation of positions: result[i] = self[perm[i]].
    pub fn permute(&self, perm: &[usize]) -> Self {
        MultiIndex(perm.iter().map(|&p| self.0[p]).collect())
    }
}

/// All multi-indices of length `n` and total degree exactly `d`, in a fixed
/// deterministic order.
pub fn multi_indices_of_degree(n: usize, d: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(n: usize, i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if i == n - 1 {
            cur[i] = rem;
            out.push(MultiIndex(cur.clone()));
            return;
        }
        for e in 0..=rem {
            cur[i] = e;
            rec(n, i + 1, rem - e, cur, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(MultiIndex(vec![]));
        }
        return out;
    }
    rec(n, 0, d, &mut cur, &mut out);
    out
}

/// All multi-indices of length `n` and total degree at most `d`.
pub fn multi_indices_up_to_degree(n: usize, d: u32) -> Vec<MultiIndex> {
    (0..=d).flat_map(|k| multi_indices_of_degree(n, k)).collect()
}
