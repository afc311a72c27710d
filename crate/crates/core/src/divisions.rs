//! Involutive divisions: Janet and Pommaret, plus their lifted variants for
//! homogenized multi-indices.
//!
//! An involutive division restricts, for each element ν of a finite set N,
//! the ordinary divisibility cone ν + ℕ₀ⁿ to an *involutive cone*
//! ν + ℕ₀·{multiplicative indices of ν}. Janet's division is set-relative;
//! Pommaret's is globally defined (the assignment of an element does not
//! depend on the rest of the set).

use std::collections::BTreeSet;

use crate::multiindex::MultiIndex;
use crate::orders::{OrderKind, OrderSpec};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DivisionKind {
    Janet,
    Pommaret,
}

impl DivisionKind {
    pub fn name(self) -> &'static str {
        match self {
            DivisionKind::Janet => "janet",
            DivisionKind::Pommaret => "pommaret",
        }
    }
}

/// A division together with the flag selecting the lifted variant acting on
/// homogenized multi-indices of length n+1 (entry 0 = homogenization
/// variable).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DivisionSpec {
    pub kind: DivisionKind,
    pub lifted: bool,
}

impl DivisionSpec {
    pub fn new(kind: DivisionKind) -> Self {
        DivisionSpec { kind, lifted: false }
    }

    pub fn lift(self) -> Self {
        DivisionSpec { lifted: true, ..self }
    }

    /// Globally defined divisions assign multiplicative indices to a
    /// multi-index independently of the ambient set.
    pub fn is_global(self) -> bool {
        self.kind == DivisionKind::Pommaret
    }

    /// Noetherian divisions guarantee finite completions of arbitrary
    /// finite sets. Janet is Noetherian; Pommaret is not.
    pub fn is_noetherian(self) -> bool {
        self.kind == DivisionKind::Janet
    }

    /// Multiplicative index sets (0-based) for every element of `set`.
    /// Elements must be pairwise distinct.
    pub fn multiplicative_indices(self, set: &[MultiIndex]) -> Vec<BTreeSet<usize>> {
        debug_assert!(
            (0..set.len()).all(|i| (i + 1..set.len()).all(|j| set[i] != set[j])),
            "multiplicative_indices requires pairwise distinct multi-indices"
        );
        match (self.kind, self.lifted) {
            (DivisionKind::Janet, false) => janet_indices(set),
            (DivisionKind::Pommaret, false) => set.iter().map(pommaret_indices).collect(),
            (DivisionKind::Janet, true) => lifted_janet_indices(set),
            (DivisionKind::Pommaret, true) => set.iter().map(lifted_pommaret_indices).collect(),
        }
    }

    /// Non-multiplicative indices: the complement of the multiplicative set.
    pub fn nonmultiplicative_indices(self, set: &[MultiIndex]) -> Vec<BTreeSet<usize>> {
        let n = set.first().map_or(0, MultiIndex::len);
        self.multiplicative_indices(set)
            .into_iter()
            .map(|m| (0..n).filter(|i| !m.contains(i)).collect())
            .collect()
    }
}

/// Pommaret: the multiplicative indices of ν are {0, …, cls ν}; the zero
/// multi-index gets all indices.
fn pommaret_indices(v: &MultiIndex) -> BTreeSet<usize> {
    match v.class() {
        Some(k) => (0..=k).collect(),
        None => (0..v.len()).collect(),
    }
}

/// Lifted Pommaret: rotate the homogenization entry 0 to the end and apply
/// plain Pommaret (the homogenization variable plays the role of a new
/// largest variable x_{n+1}).
fn lifted_pommaret_indices(v: &MultiIndex) -> BTreeSet<usize> {
    let n1 = v.len();
    let mut rotated: Vec<u32> = v.0[1..].to_vec();
    rotated.push(v.0[0]);
    let plain = pommaret_indices(&MultiIndex(rotated));
    plain
        .into_iter()
        .map(|i| if i == n1 - 1 { 0 } else { i + 1 })
        .collect()
}

/// Janet: index k is multiplicative for ν ∈ N iff ν_k is maximal among the
/// elements of N agreeing with ν in all entries after k.
fn janet_indices(set: &[MultiIndex]) -> Vec<BTreeSet<usize>> {
    let n = set.first().map_or(0, MultiIndex::len);
    set.iter()
        .map(|v| {
            (0..n)
                .filter(|&k| {
                    let max = set
                        .iter()
                        .filter(|u| u.0[k + 1..] == v.0[k + 1..])
                        .map(|u| u.0[k])
                        .max()
                        .unwrap();
                    v.0[k] == max
                })
                .collect()
        })
        .collect()
}

/// Lifted Janet: entry 0 is multiplicative iff it is maximal over the whole
/// set; entry i > 0 is multiplicative iff i−1 is Janet-multiplicative for
/// the projection (entries 1..) relative to the deduplicated projected set.
fn lifted_janet_indices(set: &[MultiIndex]) -> Vec<BTreeSet<usize>> {
    let max0 = set.iter().map(|v| v.0[0]).max().unwrap_or(0);
    let mut proj: Vec<MultiIndex> = set.iter().map(|v| v.remove(0)).collect();
    let mut dedup = proj.clone();
    dedup.sort();
    dedup.dedup();
    let dmult = janet_indices(&dedup);
    proj.drain(..)
        .zip(set)
        .map(|(p, v)| {
            let di = dedup.iter().position(|u| *u == p).unwrap();
            let mut m: BTreeSet<usize> = dmult[di].iter().map(|&i| i + 1).collect();
            if v.0[0] == max0 {
                m.insert(0);
            }
            m
        })
        .collect()
}

/// Janet's original assignment algorithm, scanning the set in descending
/// lex order (the lex-maximal element receives every index) and
/// transferring index sets between consecutive elements. Used as an
/// independent cross-check of [`janet_indices`].
pub fn janet_indices_by_scan(set: &[MultiIndex]) -> Vec<(MultiIndex, BTreeSet<usize>)> {
    let n = set.first().map_or(0, MultiIndex::len);
    let lex = OrderSpec::new(OrderKind::Lex);
    let mut sorted = set.to_vec();
    sorted.sort_by(|a, b| lex.cmp(b, a));
    let mut out: Vec<(MultiIndex, BTreeSet<usize>)> = Vec::with_capacity(sorted.len());
    let mut m: BTreeSet<usize> = (0..n).collect();
    let mut p1 = n; // 1-based sentinel: "n" as in the largest index
    let mut prev: Option<MultiIndex> = None;
    for v in sorted {
        if let Some(ref pv) = prev {
            // Largest (1-based) index where v and its predecessor differ.
            let p2 = (0..n).rev().find(|&i| pv.0[i] != v.0[i]).unwrap() + 1;
            m.remove(&(p2 - 1));
            if p1 < p2 {
                for i in p1..p2 {
                    m.insert(i - 1);
                }
            }
            p1 = p2;
        }
        out.push((v.clone(), m.clone()));
        prev = Some(v);
    }
    out
}

/// Does `candidate` involutively divide `target`, given the multiplicative
/// index set assigned to `candidate`?
pub fn involutively_divides(
    candidate: &MultiIndex,
    mult: &BTreeSet<usize>,
    target: &MultiIndex,
) -> bool {
    candidate.divides_restricted(target, mult)
}

/// Find the involutive divisor of `target` in `set`. If several elements
/// divide involutively (possible only for non-strong configurations), the
/// one with the smallest multi-index under `order` is returned.
pub fn involutive_divisor(
    set: &[MultiIndex],
    mult: &[BTreeSet<usize>],
    target: &MultiIndex,
    order: &OrderSpec,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, v) in set.iter().enumerate() {
        if involutively_divides(v, &mult[i], target) {
            match best {
                None => best = Some(i),
                Some(j) => {
                    if order.cmp(v, &set[j]) == std::cmp::Ordering::Less {
                        best = Some(i);
                    }
                }
            }
        }
    }
    best
}

/// Remove elements that are involutively divisible by another element,
/// recomputing the assignment after every removal. Turns a weak involutive
/// basis into a strong one (for Janet this is the identity, since any set
/// is involutively autoreduced).
pub fn autoreduce_monomial(division: DivisionSpec, set: &[MultiIndex]) -> Vec<MultiIndex> {
    let mut cur = set.to_vec();
    loop {
        let mult = division.multiplicative_indices(&cur);
        let victim = cur.iter().enumerate().position(|(i, v)| {
            cur.iter()
                .zip(&mult)
                .enumerate()
                .any(|(j, (u, m))| j != i && involutively_divides(u, m, v))
        });
        match victim {
            Some(i) => {
                cur.remove(i);
            }
            None => return cur,
        }
    }
}

/// Is `target` in the monoid ideal generated by `set` (ordinary spans)?
pub fn in_span(set: &[MultiIndex], target: &MultiIndex) -> bool {
    set.iter().any(|v| v.divides(target))
}

/// Is `target` in the union of the involutive cones?
pub fn in_involutive_span(
    set: &[MultiIndex],
    mult: &[BTreeSet<usize>],
    target: &MultiIndex,
) -> bool {
    set.iter()
        .zip(mult)
        .any(|(v, m)| involutively_divides(v, m, target))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(v)
    }

    fn bs(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn janet_assignment_for_two_parabolas() {
        // N = {y^2, x^2}: y^2 gets both indices, x^2 only the first.
        let set = vec![mi(&[0, 2]), mi(&[2, 0])];
        let m = DivisionSpec::new(DivisionKind::Janet).multiplicative_indices(&set);
        assert_eq!(m[0], bs(&[0, 1]));
        assert_eq!(m[1], bs(&[0]));
        // Pommaret agrees here.
        let p = DivisionSpec::new(DivisionKind::Pommaret).multiplicative_indices(&set);
        assert_eq!(p, m);
    }

    #[test]
    fn pommaret_is_class_based() {
        let p = DivisionSpec::new(DivisionKind::Pommaret);
        assert_eq!(p.multiplicative_indices(&[mi(&[0, 3, 1])])[0], bs(&[0, 1]));
        assert_eq!(p.multiplicative_indices(&[mi(&[2, 0, 0])])[0], bs(&[0]));
        assert_eq!(p.multiplicative_indices(&[mi(&[0, 0, 0])])[0], bs(&[0, 1, 2]));
    }

    #[test]
    fn scan_algorithm_matches_direct_janet_definition() {
        use crate::multiindex::multi_indices_up_to_degree;
        // Exhaustive check on many small sets.
        let pool = multi_indices_up_to_degree(3, 2);
        let division = DivisionSpec::new(DivisionKind::Janet);
        for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                for k in j + 1..pool.len() {
                    let set = vec![pool[i].clone(), pool[j].clone(), pool[k].clone()];
                    let direct = division.multiplicative_indices(&set);
                    let scan = janet_indices_by_scan(&set);
                    for (v, m) in &scan {
                        let pos = set.iter().position(|u| u == v).unwrap();
                        assert_eq!(&direct[pos], m, "mismatch at {v:?} in {set:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn janet_cones_are_disjoint() {
        // Any finite set is involutively autoreduced for Janet: distinct
        // elements have disjoint involutive cones.
        use crate::multiindex::multi_indices_up_to_degree;
        let set = vec![mi(&[0, 2]), mi(&[2, 0]), mi(&[2, 1]), mi(&[1, 1])];
        let m = DivisionSpec::new(DivisionKind::Janet).multiplicative_indices(&set);
        for t in multi_indices_up_to_degree(2, 8) {
            let divisors = set
                .iter()
                .zip(&m)
                .filter(|(v, mm)| involutively_divides(v, mm, &t))
                .count();
            assert!(divisors <= 1, "overlapping Janet cones at {t:?}");
        }
    }

    #[test]
    fn lifted_janet_projects_correctly() {
        // Two lifted indices with equal projections share the projected
        // assignment; entry 0 is multiplicative only for the maximal x0 power.
        let set = vec![mi(&[2, 1, 0]), mi(&[0, 1, 0]), mi(&[1, 0, 2])];
        let m = DivisionSpec::new(DivisionKind::Janet)
            .lift()
            .multiplicative_indices(&set);
        // Projections {[1,0],[0,2]}: Janet gives [0,2] -> {0,1}, [1,0] -> {0}.
        assert_eq!(m[0], bs(&[0, 1]));
        assert_eq!(m[1], bs(&[1]));
        assert_eq!(m[2], bs(&[1, 2]));
    }

    #[test]
    fn lifted_pommaret_treats_x0_as_largest_variable() {
        let d = DivisionSpec::new(DivisionKind::Pommaret).lift();
        // [3, 0, 0]: rotated to [0, 0, 3], class 2 -> all rotated indices
        // up to 2, i.e. lifted {1, 2, 0}.
        assert_eq!(d.multiplicative_indices(&[mi(&[3, 0, 0])])[0], bs(&[0, 1, 2]));
        // [1, 0, 2]: rotated [0, 2, 1], class 1 -> rotated {0,1} = lifted {1,2}.
        assert_eq!(d.multiplicative_indices(&[mi(&[1, 0, 2])])[0], bs(&[1, 2]));
    }

    #[test]
    fn involutive_divisor_tie_break_is_order_minimal() {
        use crate::orders::{OrderKind, OrderSpec};
        let set = vec![mi(&[1, 0]), mi(&[0, 1])];
        let mult = vec![bs(&[0, 1]), bs(&[0, 1])];
        let o = OrderSpec::new(OrderKind::DegLex);
        // Both divide x*y involutively; x < y under this deglex.
        let i = involutive_divisor(&set, &mult, &mi(&[1, 1]), &o).unwrap();
        assert_eq!(set[i], mi(&[1, 0]));
    }
}
