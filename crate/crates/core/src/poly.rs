//! Sparse distributed polynomials with terms kept strictly descending under
//! an ambient term order.

use std::collections::BTreeMap;

use crate::multiindex::MultiIndex;
use crate::orders::OrderSpec;
use crate::scalar::Scalar;

/// A polynomial: terms `(exponent, coefficient)` strictly descending under
/// the ambient order, no zero coefficients. The empty term list is zero.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: Scalar> {
    pub terms: Vec<(MultiIndex, C)>,
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(n: usize, c: C) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(MultiIndex::zero(n), c)],
            }
        }
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, C::one())
    }

    pub fn var(n: usize, i: usize) -> Self {
        Poly {
            terms: vec![(MultiIndex::unit(n, i), C::one())],
        }
    }

    pub fn monomial(exp: MultiIndex, c: C) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(exp, c)],
            }
        }
    }

    /// Build from an exponent→coefficient map, sorting descending under the
    /// order and dropping zeros.
    pub fn from_map(map: BTreeMap<MultiIndex, C>, order: &OrderSpec) -> Self {
        let mut terms: Vec<(MultiIndex, C)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { terms }
    }

    pub fn to_map(&self) -> BTreeMap<MultiIndex, C> {
        self.terms.iter().cloned().collect()
    }

    /// Re-sort the terms under a (possibly different) order.
    pub fn resort(&self, order: &OrderSpec) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { terms }
    }

    /// Leading exponent (first term). Panics on zero.
    pub fn le(&self) -> &MultiIndex {
        &self.terms[0].0
    }

    /// Leading coefficient. Panics on zero.
    pub fn lc(&self) -> &C {
        &self.terms[0].1
    }

    /// Total degree: max over terms. `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.terms.first().map(|(m, _)| m.len())
    }

    pub fn add(&self, other: &Self, order: &OrderSpec) -> Self {
        let mut map = self.to_map();
        for (m, c) in &other.terms {
            let entry = map.entry(m.clone()).or_insert_with(C::zero);
            *entry = entry.clone() + c.clone();
        }
        Poly::from_map(map, order)
    }

    pub fn sub(&self, other: &Self, order: &OrderSpec) -> Self {
        self.add(&other.neg(), order)
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Multiply every coefficient by `c` from the left (coefficients are
    /// central in every supported algebra, so sidedness is immaterial).
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), c.clone() * k.clone()))
                .collect(),
        }
    }

    /// Divide every coefficient exactly by `c`; `None` if any fails.
    pub fn exact_div_scalar(&self, c: &C) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, k) in &self.terms {
            terms.push((m.clone(), k.exact_div(c)?));
        }
        Some(Poly { terms })
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Render with the given variable names (terms in stored order).
    pub fn display(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let cs = format!("{c}");
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) if !cs.contains(' ') => ("-", rest.to_string()),
                _ => ("+", cs),
            };
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].clone()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            let coeff_needed = factors.is_empty() || mag != "1";
            if coeff_needed {
                if mag.contains(' ') {
                    factors.insert(0, format!("({mag})"));
                } else {
                    factors.insert(0, mag);
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{OrderKind, OrderSpec};
    use crate::scalar::q;
    use num_rational::BigRational;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(v)
    }

    #[test]
    fn terms_sort_descending() {
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let mut map = BTreeMap::new();
        map.insert(mi(&[0, 0, 2]), q(1));
        map.insert(mi(&[1, 1, 0]), q(-1));
        let f: Poly<BigRational> = Poly::from_map(map, &o);
        // Under degrevlex z^2 > x y (class respecting).
        assert_eq!(*f.le(), mi(&[0, 0, 2]));
        let di = OrderSpec::deginvlex(3);
        let g = f.resort(&di);
        assert_eq!(*g.le(), mi(&[1, 1, 0]));
    }

    #[test]
    fn addition_cancels() {
        let o = OrderSpec::new(OrderKind::DegLex);
        let f = Poly::monomial(mi(&[1, 0]), q(2));
        let g = Poly::monomial(mi(&[1, 0]), q(-2));
        assert!(f.add(&g, &o).is_zero());
    }

    #[test]
    fn display_is_readable() {
        let o = OrderSpec::new(OrderKind::DegLex);
        let vars = vec!["x".to_string(), "y".to_string()];
        let mut map = BTreeMap::new();
        map.insert(mi(&[2, 0]), q(1));
        map.insert(mi(&[0, 1]), q(-3));
        map.insert(mi(&[0, 0]), q(1) / q(2));
        let f: Poly<BigRational> = Poly::from_map(map, &o);
        assert_eq!(f.display(&vars), "x^2 - 3*y + 1/2");
    }
}
