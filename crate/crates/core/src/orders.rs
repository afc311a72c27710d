//! Term orders on multi-indices.
//!
//! The base orders follow the "reversed variable" convention in which the
//! lexicographic comparison scans the *last* non-vanishing entry of the
//! difference: for lex, μ ≺ ν iff the last non-vanishing entry of μ − ν is
//! negative, so e.g. x₂²x₃ ≺ x₁x₃². For revlex, μ ≺ ν iff the *first*
//! non-vanishing entry of μ − ν is positive; revlex is only a semigroup
//! order (every variable is smaller than 1).
//!
//! An [`OrderSpec`] composes a base order with an optional variable
//! permutation (e.g. "deginvlex" = deglex after fully reversing the
//! variables), an optional rational weight vector compared first, and an
//! optional degree-first lift used when working with homogenized inputs
//! (entry 0 of a lifted multi-index is the homogenization variable).

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::multiindex::MultiIndex;

/// The four base orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    Lex,
    RevLex,
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::RevLex => "revlex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

/// A fully specified term order.
#[derive(Clone, PartialEq, Debug)]
pub struct OrderSpec {
    pub kind: OrderKind,
    /// 0-based variable permutation applied to both operands before the
    /// base comparison: compare `a.permute(perm)` against `b.permute(perm)`.
    pub perm: Option<Vec<usize>>,
    /// Exact rational weights; the weighted degrees are compared first and
    /// ties are broken by the base order.
    pub weights: Option<Vec<BigRational>>,
    /// Degree-first lift for homogenized multi-indices of length n+1.
    pub lifted: bool,
}

impl OrderSpec {
    pub fn new(kind: OrderKind) -> Self {
        OrderSpec {
            kind,
            perm: None,
            weights: None,
            lifted: false,
        }
    }

    pub fn with_perm(mut self, perm: Vec<usize>) -> Self {
        self.perm = Some(perm);
        self
    }

    pub fn with_weights(mut self, w: Vec<BigRational>) -> Self {
        self.weights = Some(w);
        self
    }

    /// "deginvlex" on n variables: deglex after fully reversing the
    /// variables, so that x₁ ≻ x₂ ≻ … ≻ x_n on equal degree.
    pub fn deginvlex(n: usize) -> Self {
        OrderSpec::new(OrderKind::DegLex).with_perm((0..n).rev().collect())
    }

    /// The degree-first lift of this order for homogenized multi-indices.
    /// Total degree is compared first; ties are decided by `self` on the
    /// projection that drops entry 0.
    pub fn lift(&self) -> Self {
        let mut o = self.clone();
        o.lifted = true;
        o
    }

    /// Does the order refine divisibility with 1 as the least element?
    /// (Monoid order in the sense that μ ≺ μ + ν for ν ≠ 0.)
    pub fn is_monoid_order(&self) -> bool {
        if self.lifted {
            // Degree is compared first, so the order is always a monoid order.
            return true;
        }
        let base_monoid = !matches!(self.kind, OrderKind::RevLex);
        match &self.weights {
            None => base_monoid,
            Some(w) => {
                if w.iter().any(|x| x.is_negative()) {
                    false
                } else if w.iter().all(|x| x.is_positive()) {
                    true
                } else {
                    base_monoid
                }
            }
        }
    }

    fn base_cmp(&self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        let (pa, pb);
        let (a, b) = match &self.perm {
            Some(p) => {
                pa = a.permute(p);
                pb = b.permute(p);
                (&pa, &pb)
            }
            None => (a, b),
        };
        match self.kind {
            OrderKind::Lex => lex_cmp(a, b),
            OrderKind::RevLex => revlex_cmp(a, b),
            OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(|| lex_cmp(a, b)),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex_cmp(a, b)),
        }
    }

    fn weighted_cmp(&self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        if let Some(w) = &self.weights {
            let wa = weight_of(w, a);
            let wb = weight_of(w, b);
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.base_cmp(a, b)
    }

    /// Total comparison of two multi-indices; `Less` means the first is the
    /// ≺-smaller one.
    pub fn cmp(&self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        if self.lifted {
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {}
                ord => return ord,
            }
            let pa = a.remove(0);
            let pb = b.remove(0);
            return self.weighted_cmp(&pa, &pb);
        }
        self.weighted_cmp(a, b)
    }

    /// The ≺-maximum of a non-empty iterator of multi-indices.
    pub fn max<'a>(&self, it: impl IntoIterator<Item = &'a MultiIndex>) -> Option<&'a MultiIndex> {
        let mut best: Option<&MultiIndex> = None;
        for m in it {
            match best {
                None => best = Some(m),
                Some(b) if self.cmp(m, b) == Ordering::Greater => best = Some(m),
                _ => {}
            }
        }
        best
    }

    /// The ≺-minimum of a non-empty iterator of multi-indices.
    pub fn min<'a>(&self, it: impl IntoIterator<Item = &'a MultiIndex>) -> Option<&'a MultiIndex> {
        let mut best: Option<&MultiIndex> = None;
        for m in it {
            match best {
                None => best = Some(m),
                Some(b) if self.cmp(m, b) == Ordering::Less => best = Some(m),
                _ => {}
            }
        }
        best
    }
}

fn weight_of(w: &[BigRational], m: &MultiIndex) -> BigRational {
    let mut acc = BigRational::zero();
    for (wi, &e) in w.iter().zip(&m.0) {
        if e != 0 {
            acc += wi * BigRational::from_integer(e.into());
        }
    }
    acc
}

/// μ ≺ ν iff the last non-vanishing entry of μ − ν is negative.
fn lex_cmp(a: &MultiIndex, b: &MultiIndex) -> Ordering {
    for (&x, &y) in a.0.iter().zip(&b.0).rev() {
        match x.cmp(&y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// μ ≺ ν iff the first non-vanishing entry of μ − ν is positive.
fn revlex_cmp(a: &MultiIndex, b: &MultiIndex) -> Ordering {
    for (&x, &y) in a.0.iter().zip(&b.0) {
        match x.cmp(&y) {
            Ordering::Equal => {}
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}
