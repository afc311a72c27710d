//! Completion of finite multi-index sets to weak/strong involutive bases of
//! monoid ideals, plus special constructions for the Janet box completion
//! and irreducible Pommaret ideals.

use std::collections::BTreeSet;

use crate::divisions::{autoreduce_monomial, in_involutive_span, in_span, DivisionSpec};
use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;
use crate::orders::{OrderKind, OrderSpec};

/// Weak or strong basis classification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strength {
    Weak,
    Strong,
}

/// Result of a monomial completion.
#[derive(Clone, Debug)]
pub struct MonomialBasisResult {
    pub generators: Vec<MultiIndex>,
    /// Multiplicative index sets, parallel to `generators`.
    pub mult: Vec<BTreeSet<usize>>,
    pub strength: Strength,
    /// Elements inserted by the completion, in discovery order.
    pub added: Vec<MultiIndex>,
}

/// The obstruction set S of the completion loop: non-multiplicative
/// prolongations ν + 1_j lying outside the involutive span. Empty iff the
/// set is locally involutive.
pub fn local_obstructions(division: DivisionSpec, set: &[MultiIndex]) -> Result<BTreeSet<MultiIndex>> {
    let mult = division.multiplicative_indices(set);
    let n = set.first().map_or(0, MultiIndex::len);
    let mut s = BTreeSet::new();
    for (v, m) in set.iter().zip(&mult) {
        for j in (0..n).filter(|j| !m.contains(j)) {
            let p = v.checked_bump(j)?;
            if !in_involutive_span(set, &mult, &p) {
                s.insert(p);
            }
        }
    }
    Ok(s)
}

/// Pick the completion candidate: among the elements of S without a proper
/// divisor in S, the degrevlex-least (ties by lex, which cannot occur for
/// total orders but keeps the rule syntactically complete).
fn choose_candidate(s: &BTreeSet<MultiIndex>) -> MultiIndex {
    let degrevlex = OrderSpec::new(OrderKind::DegRevLex);
    let lex = OrderSpec::new(OrderKind::Lex);
    s.iter()
        .filter(|m| !s.iter().any(|d| d.divides_properly(m)))
        .min_by(|a, b| degrevlex.cmp(a, b).then_with(|| lex.cmp(a, b)))
        .expect("obstruction set is non-empty")
        .clone()
}

/// Complete `set` to an involutive basis of its monoid ideal by repeatedly
/// inserting a minimal obstruction, then autoreduce to a strong basis.
///
/// `autoreduce_each_step` selects the variant that autoreduces after every
/// insertion; for the Janet division both variants produce the same final
/// generators (any set is Janet-autoreduced, so the flag is a no-op there,
/// but for Pommaret it can prune dominated elements early).
pub fn complete_monomial(
    division: DivisionSpec,
    set: &[MultiIndex],
    step_cap: usize,
    autoreduce_each_step: bool,
) -> Result<MonomialBasisResult> {
    let mut cur: Vec<MultiIndex> = Vec::new();
    for v in set {
        if !cur.contains(v) {
            cur.push(v.clone());
        }
    }
    let mut added = Vec::new();
    let mut steps = 0usize;
    loop {
        let s = local_obstructions(division, &cur)?;
        if s.is_empty() {
            break;
        }
        if steps >= step_cap {
            return Err(Error::StepCapExceeded {
                cap: step_cap,
                steps,
                partial: cur,
            });
        }
        let mu = choose_candidate(&s);
        added.push(mu.clone());
        cur.push(mu);
        if autoreduce_each_step {
            cur = autoreduce_monomial(division, &cur);
            added.retain(|a| cur.contains(a));
        }
        steps += 1;
    }
    let strong = autoreduce_monomial(division, &cur);
    let added: Vec<MultiIndex> = added.into_iter().filter(|a| strong.contains(a)).collect();
    let mult = division.multiplicative_indices(&strong);
    Ok(MonomialBasisResult {
        generators: strong,
        mult,
        strength: Strength::Strong,
        added,
    })
}

/// The finite Janet "box" completion: with μ = lcm of the set, all span
/// members ν with ν ≤ μ componentwise. Always a weak Janet completion.
pub fn janet_box_completion(set: &[MultiIndex]) -> Vec<MultiIndex> {
    let mu = set
        .iter()
        .skip(1)
        .fold(set[0].clone(), |acc, v| acc.lcm(v));
    let mut out = Vec::new();
    let mut cur = vec![0u32; mu.len()];
    fn rec(
        mu: &MultiIndex,
        i: usize,
        cur: &mut Vec<u32>,
        set: &[MultiIndex],
        out: &mut Vec<MultiIndex>,
    ) {
        if i == mu.len() {
            let v = MultiIndex(cur.clone());
            if in_span(set, &v) {
                out.push(v);
            }
            return;
        }
        for e in 0..=mu.0[i] {
            cur[i] = e;
            rec(mu, i + 1, cur, set, out);
        }
    }
    rec(&mu, 0, &mut cur, set, &mut out);
    out
}

/// Finiteness classification of the Pommaret basis of an irreducible
/// monomial ideal ⟨x_{i_1}^{ℓ_1}, …, x_{i_k}^{ℓ_k}⟩ (indices 1-based,
/// strictly increasing). The ideal has a finite Pommaret basis iff the
/// occupied positions have no gaps at the top: i_k = n and i_1 = n−k+1;
/// the basis is then written out explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PommaretIrreducible {
    Finite(Vec<MultiIndex>),
    Infinite,
}

pub fn pommaret_irreducible(n: usize, gens: &[(u32, usize)]) -> Result<PommaretIrreducible> {
    let k = gens.len();
    if k == 0 || k > n {
        return Err(Error::InvalidInput("need 1..=n generators".into()));
    }
    for w in gens.windows(2) {
        if w[0].1 >= w[1].1 {
            return Err(Error::InvalidInput("indices must be strictly increasing".into()));
        }
    }
    if gens.iter().any(|&(l, i)| l == 0 || i == 0 || i > n) {
        return Err(Error::InvalidInput("exponents positive, indices in 1..=n".into()));
    }
    if gens[k - 1].1 != n || gens[0].1 != n - k + 1 {
        return Ok(PommaretIrreducible::Infinite);
    }
    // Positions n−k+1..=n are exactly the occupied ones; the bound for a
    // free entry at position i is the exponent of the generator sitting
    // there.
    let bound = |i: usize| gens[i - (n - k) - 1].0; // i is 1-based, occupied
    let mut basis = Vec::new();
    for (j, &(l, ij)) in gens.iter().enumerate() {
        // Entries: 0 before i_j, ℓ_j at i_j, free up to the bound after.
        let free_positions: Vec<usize> = (ij + 1..=n).collect();
        let mut stack = vec![Vec::<u32>::new()];
        while let Some(partial) = stack.pop() {
            if partial.len() == free_positions.len() {
                let mut v = vec![0u32; n];
                v[ij - 1] = l;
                for (pos, &e) in free_positions.iter().zip(&partial) {
                    v[pos - 1] = e;
                }
                basis.push(MultiIndex(v));
                continue;
            }
            let pos = free_positions[partial.len()];
            for e in (0..bound(pos)).rev() {
                let mut next = partial.clone();
                next.push(e);
                stack.push(next);
            }
        }
        let _ = j;
    }
    basis.sort();
    basis.dedup();
    Ok(PommaretIrreducible::Finite(basis))
}

/// Weak Pommaret basis of a product of ideals: pairwise sums of two
/// Pommaret bases. Inputs are verified locally involutive.
pub fn pommaret_product_basis(n1: &[MultiIndex], n2: &[MultiIndex]) -> Result<Vec<MultiIndex>> {
    pommaret_combine(n1, n2, |a, b| a.checked_add(b))
}

/// Weak Pommaret basis of an intersection of ideals: pairwise lcms.
pub fn pommaret_intersection_basis(
    n1: &[MultiIndex],
    n2: &[MultiIndex],
) -> Result<Vec<MultiIndex>> {
    pommaret_combine(n1, n2, |a, b| Ok(a.lcm(b)))
}

fn pommaret_combine(
    n1: &[MultiIndex],
    n2: &[MultiIndex],
    op: impl Fn(&MultiIndex, &MultiIndex) -> Result<MultiIndex>,
) -> Result<Vec<MultiIndex>> {
    let division = DivisionSpec::new(crate::divisions::DivisionKind::Pommaret);
    for set in [n1, n2] {
        if !local_obstructions(division, set)?.is_empty() {
            return Err(Error::InvalidInput(
                "input is not a Pommaret basis (local obstructions exist)".into(),
            ));
        }
    }
    let mut out = Vec::new();
    for a in n1 {
        for b in n2 {
            let c = op(a, b)?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out.sort();
    if !local_obstructions(division, &out)?.is_empty() {
        return Err(Error::VerificationFailure(
            "combined set failed the Pommaret local-involution post-check".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisions::DivisionKind;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(v)
    }

    fn janet() -> DivisionSpec {
        DivisionSpec::new(DivisionKind::Janet)
    }

    fn pommaret() -> DivisionSpec {
        DivisionSpec::new(DivisionKind::Pommaret)
    }

    #[test]
    fn two_parabolas_complete_with_one_insertion() {
        let input = vec![mi(&[0, 2]), mi(&[2, 0])];
        for d in [janet(), pommaret()] {
            let r = complete_monomial(d, &input, 100, false).unwrap();
            assert_eq!(
                r.generators,
                vec![mi(&[0, 2]), mi(&[2, 0]), mi(&[2, 1])],
                "{d:?}"
            );
            assert_eq!(r.added, vec![mi(&[2, 1])]);
            assert_eq!(r.strength, Strength::Strong);
        }
    }

    #[test]
    fn obstructions_of_two_parabolas() {
        let input = vec![mi(&[0, 2]), mi(&[2, 0])];
        let s = local_obstructions(janet(), &input).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![mi(&[2, 1])]);
        let done = vec![mi(&[0, 2]), mi(&[2, 0]), mi(&[2, 1])];
        assert!(local_obstructions(janet(), &done).unwrap().is_empty());
    }

    #[test]
    fn pommaret_never_terminates_on_xy() {
        let err = complete_monomial(pommaret(), &[mi(&[1, 1])], 50, false).unwrap_err();
        match err {
            Error::StepCapExceeded { partial, .. } => {
                // Everything added is of the form [1, k].
                for v in &partial[1..] {
                    assert_eq!(v.0[0], 1);
                }
            }
            other => panic!("expected StepCapExceeded, got {other:?}"),
        }
    }

    #[test]
    fn whole_monoid_is_trivially_strong() {
        let r = complete_monomial(janet(), &[mi(&[0, 0])], 10, false).unwrap();
        assert_eq!(r.generators, vec![mi(&[0, 0])]);
        assert!(r.added.is_empty());
    }

    #[test]
    fn box_completion_encloses_algorithmic_completion() {
        let input = vec![mi(&[0, 2]), mi(&[2, 0])];
        let mut boxc = janet_box_completion(&input);
        boxc.sort();
        assert_eq!(
            boxc,
            vec![mi(&[0, 2]), mi(&[1, 2]), mi(&[2, 0]), mi(&[2, 1]), mi(&[2, 2])]
        );
        // The box set is a weak Janet completion in its own right.
        assert!(local_obstructions(janet(), &boxc).unwrap().is_empty());
        // And contains the canonical completion.
        let r = complete_monomial(janet(), &input, 100, false).unwrap();
        for g in &r.generators {
            assert!(boxc.contains(g));
        }
    }

    #[test]
    fn variant_with_stepwise_autoreduction_agrees_for_janet() {
        let inputs = vec![
            vec![mi(&[0, 2]), mi(&[2, 0])],
            vec![mi(&[1, 0, 1]), mi(&[0, 2, 0]), mi(&[0, 0, 3])],
            vec![mi(&[3, 0]), mi(&[1, 1])],
        ];
        for input in inputs {
            let a = complete_monomial(janet(), &input, 1000, false).unwrap();
            let b = complete_monomial(janet(), &input, 1000, true).unwrap();
            assert_eq!(a.generators, b.generators);
        }
    }

    #[test]
    fn completion_is_idempotent() {
        let input = vec![mi(&[1, 0, 1]), mi(&[0, 2, 0]), mi(&[0, 0, 3])];
        let r = complete_monomial(janet(), &input, 1000, false).unwrap();
        let r2 = complete_monomial(janet(), &r.generators, 1000, false).unwrap();
        assert_eq!(r.generators, r2.generators);
        assert!(r2.added.is_empty());
    }

    #[test]
    fn gapless_irreducible_ideals_have_explicit_pommaret_bases() {
        // <y^2> in 2 variables: gapless, basis {[0,2]}.
        assert_eq!(
            pommaret_irreducible(2, &[(2, 2)]).unwrap(),
            PommaretIrreducible::Finite(vec![mi(&[0, 2])])
        );
        // <x> in 2 variables: gap at the top, infinite.
        assert_eq!(
            pommaret_irreducible(2, &[(1, 1)]).unwrap(),
            PommaretIrreducible::Infinite
        );
        // Univariate is always gapless.
        assert_eq!(
            pommaret_irreducible(1, &[(3, 1)]).unwrap(),
            PommaretIrreducible::Finite(vec![mi(&[3])])
        );
    }

    #[test]
    fn gap_formula_matches_the_completion_oracle() {
        // <x^2, y^3> in 2 variables and <x^2, y^2, z^2> in 3: compare the
        // explicit formula with the generic completion.
        let cases: Vec<(usize, Vec<(u32, usize)>)> = vec![
            (2, vec![(2, 1), (3, 2)]),
            (2, vec![(2, 1), (2, 2)]),
            (3, vec![(2, 1), (2, 2), (2, 3)]),
            (3, vec![(1, 2), (4, 3)]),
        ];
        for (n, gens) in cases {
            let input: Vec<MultiIndex> = gens
                .iter()
                .map(|&(l, i)| {
                    let mut v = vec![0u32; n];
                    v[i - 1] = l;
                    MultiIndex(v)
                })
                .collect();
            let formula = match pommaret_irreducible(n, &gens).unwrap() {
                PommaretIrreducible::Finite(b) => b,
                PommaretIrreducible::Infinite => panic!("expected finite for {gens:?}"),
            };
            let mut completed = complete_monomial(pommaret(), &input, 10_000, false)
                .unwrap()
                .generators;
            completed.sort();
            assert_eq!(formula, completed, "n={n}, gens={gens:?}");
        }
    }

    #[test]
    fn pommaret_products_and_intersections() {
        let a = vec![mi(&[0, 1])];
        let b = vec![mi(&[0, 1])];
        assert_eq!(pommaret_product_basis(&a, &b).unwrap(), vec![mi(&[0, 2])]);
        let c = vec![mi(&[0, 2])];
        assert_eq!(
            pommaret_intersection_basis(&a, &c).unwrap(),
            vec![mi(&[0, 2])]
        );
        // A non-Pommaret input is rejected.
        assert!(pommaret_product_basis(&[mi(&[1, 1])], &b).is_err());
    }
}
