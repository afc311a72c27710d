//! Independent verification: a plain Buchberger Gröbner-basis engine for
//! solvable algebras over fields, brute-force span/membership enumeration
//! for monomial sets, and seeded equivalence drivers that cross-check the
//! involutive pipeline against the oracle.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::completion::{complete, Caps};
use crate::divisions::DivisionSpec;
use crate::error::{Error, Result};
use crate::multiindex::{multi_indices_up_to_degree, MultiIndex};
use crate::orders::OrderSpec;
use crate::poly::Poly;
use crate::reduction::{
    assignments_for, involutive_normal_form, ordinary_normal_form, ReductionMode,
};
use crate::scalar::FieldScalar;

/// The S-polynomial of f and g with respect to ⋆: both are shifted to the
/// lcm of their leading exponents and the leading terms are cancelled with
/// an exact coefficient solve.
pub fn spolynomial<C: FieldScalar>(
    f: &Poly<C>,
    g: &Poly<C>,
    algebra: &Algebra<C>,
    order: &OrderSpec,
) -> Result<Poly<C>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("S-polynomial of zero".into()));
    }
    let gamma = f.le().lcm(g.le());
    let shf = algebra.star_mono_poly(&gamma.checked_sub(f.le()).unwrap(), f, order)?;
    let shg = algebra.star_mono_poly(&gamma.checked_sub(g.le()).unwrap(), g, order)?;
    Ok(shf
        .scale(&shf.lc().inv())
        .sub(&shg.scale(&shg.lc().inv()), order))
}

/// Reduced left Gröbner basis via Buchberger's algorithm with the chain
/// criterion (the product criterion is omitted: it is unsound for general
/// noncommutative products). Output is fully interreduced and monic,
/// sorted ascending by leading exponent.
pub fn buchberger<C: FieldScalar>(
    f: &[Poly<C>],
    algebra: &Algebra<C>,
    order: &OrderSpec,
    caps: &Caps,
) -> Result<Vec<Poly<C>>> {
    if !order.is_monoid_order() {
        return Err(Error::Unsupported(
            "Buchberger's algorithm requires a monoid order".into(),
        ));
    }
    let mut g: Vec<Poly<C>> = Vec::new();
    for p in f {
        if !p.is_zero() {
            let m = p.scale(&p.lc().inv());
            if !g.contains(&m) {
                g.push(m);
            }
        }
    }
    if g.is_empty() {
        return Err(Error::InvalidInput(
            "ideal generated by zero polynomials".into(),
        ));
    }
    let mut pending: BTreeSet<(usize, usize)> = (0..g.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .collect();
    let mut insertions = 0usize;
    while let Some(&(i, j)) = pending.iter().next() {
        pending.remove(&(i, j));
        let gamma = g[i].le().lcm(g[j].le());
        // Chain criterion: if some k divides the lcm and both (i,k) and
        // (j,k) have already been treated, the pair (i,j) is redundant.
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].le().divides(&gamma)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spolynomial(&g[i], &g[j], algebra, order)?;
        if s.is_zero() {
            continue;
        }
        let rem = ordinary_normal_form(&s, &g, order, algebra, ReductionMode::Full, caps.nf_steps)?
            .remainder;
        if rem.is_zero() {
            continue;
        }
        insertions += 1;
        if insertions > caps.basis_insertions {
            return Err(Error::CompletionCapExceeded {
                cap: caps.basis_insertions,
            });
        }
        let k = g.len();
        g.push(rem.scale(&rem.lc().inv()));
        for i in 0..k {
            pending.insert((i, k));
        }
    }
    interreduce(g, algebra, order, caps)
}

/// Minimalize (drop generators with reducible heads) and tail-reduce until
/// fixpoint; all elements monic, sorted ascending by leading exponent.
fn interreduce<C: FieldScalar>(
    mut g: Vec<Poly<C>>,
    algebra: &Algebra<C>,
    order: &OrderSpec,
    caps: &Caps,
) -> Result<Vec<Poly<C>>> {
    // Minimal heads: keep one generator per minimal leading exponent.
    let mut keep: Vec<Poly<C>> = Vec::new();
    g.sort_by(|a, b| order.cmp(a.le(), b.le()));
    for p in g {
        if !keep.iter().any(|q| q.le().divides(p.le())) {
            keep.push(p);
        }
    }
    let mut g = keep;
    for _ in 0..caps.basis_insertions {
        let mut changed = false;
        for i in 0..g.len() {
            let others: Vec<Poly<C>> = g
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let rem = ordinary_normal_form(
                &g[i],
                &others,
                order,
                algebra,
                ReductionMode::Full,
                caps.nf_steps,
            )?
            .remainder;
            debug_assert!(!rem.is_zero() && rem.le() == g[i].le());
            let rem = rem.scale(&rem.lc().inv());
            if rem != g[i] {
                g[i] = rem;
                changed = true;
            }
        }
        if !changed {
            g.sort_by(|a, b| order.cmp(a.le(), b.le()));
            return Ok(g);
        }
    }
    Err(Error::CompletionCapExceeded {
        cap: caps.basis_insertions,
    })
}

/// Exhaustive classification of all multi-indices up to a degree bound
/// relative to a finite monomial set.
#[derive(Clone, Debug)]
pub struct SpanReport {
    /// Members of the ordinary span that have an involutive divisor,
    /// paired with their number of involutive divisors.
    pub in_span: Vec<(MultiIndex, usize)>,
    /// Members of the ordinary span without an involutive divisor.
    pub obstructions: Vec<MultiIndex>,
    /// Multi-indices outside the ordinary span.
    pub outside: Vec<MultiIndex>,
}

impl SpanReport {
    /// Weakly involutive up to the inspected degree: no obstructions.
    pub fn is_involutive(&self) -> bool {
        self.obstructions.is_empty()
    }

    /// Strongly involutive up to the inspected degree: the involutive
    /// cones are disjoint and cover the span.
    pub fn is_strong(&self) -> bool {
        self.is_involutive() && self.in_span.iter().all(|(_, c)| *c == 1)
    }
}

/// Brute-force span enumeration: classifies every μ with |μ| ≤ bound as
/// involutively covered (with its divisor count), an obstruction to
/// involution, or outside the span of `set`.
pub fn bruteforce_span(
    set: &[MultiIndex],
    division: DivisionSpec,
    bound: u32,
) -> Result<SpanReport> {
    let n = set
        .first()
        .map(MultiIndex::len)
        .ok_or_else(|| Error::InvalidInput("empty monomial set".into()))?;
    let mut dedup: Vec<MultiIndex> = Vec::new();
    for m in set {
        if !dedup.contains(m) {
            dedup.push(m.clone());
        }
    }
    let mults = division.multiplicative_indices(&dedup);
    let mut report = SpanReport {
        in_span: Vec::new(),
        obstructions: Vec::new(),
        outside: Vec::new(),
    };
    for mu in multi_indices_up_to_degree(n, bound) {
        if !dedup.iter().any(|nu| nu.divides(&mu)) {
            report.outside.push(mu);
            continue;
        }
        let count = dedup
            .iter()
            .zip(&mults)
            .filter(|(nu, m)| nu.divides_restricted(&mu, m))
            .count();
        if count == 0 {
            report.obstructions.push(mu);
        } else {
            report.in_span.push((mu, count));
        }
    }
    Ok(report)
}

/// Outcome of an equivalence or certification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    /// First divergence found, with a human-readable witness.
    Disagree { witness: String },
}

/// Certify a claimed involutive generating set against the Buchberger
/// oracle for the ideal ⟨f⟩: the minimal generators of both leading-exponent
/// ideals must coincide, sampled ideal members must reduce to zero in both
/// pipelines, and random probes must agree on membership. All sampling is
/// seeded and reproducible.
#[allow(clippy::too_many_arguments)]
pub fn certify_generators<C: FieldScalar>(
    gens: &[Poly<C>],
    f: &[Poly<C>],
    algebra: &Algebra<C>,
    order: &OrderSpec,
    division: DivisionSpec,
    seed: u64,
    trials: usize,
    caps: &Caps,
) -> Result<Verdict> {
    let gb = buchberger(f, algebra, order, caps)?;
    let lhs = minimal_exponents(gens.iter().map(|p| p.le().clone()), order);
    let rhs = minimal_exponents(gb.iter().map(|p| p.le().clone()), order);
    if lhs != rhs {
        let witness = lhs
            .symmetric_difference(&rhs)
            .next()
            .map(|m| format!("{m:?}"))
            .unwrap_or_default();
        return Ok(Verdict::Disagree {
            witness: format!("minimal leading-exponent ideals differ at {witness}"),
        });
    }
    // Guard against stale multiplicative assignments on malformed input.
    assignments_for(gens, division)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = algebra.n;
    for t in 0..trials {
        // An explicit ideal member: a random left combination of f.
        let mut member = Poly::<C>::zero();
        for p in f {
            let q = random_poly::<C>(&mut rng, n, 2, 2);
            if !q.is_zero() {
                member = member.add(&algebra.multiply(&q, p, order)?, order);
            }
        }
        if !member.is_zero() {
            let inv = involutive_normal_form(
                &member,
                gens,
                division,
                order,
                algebra,
                ReductionMode::Full,
                caps.nf_steps,
            )?
            .remainder;
            if !inv.is_zero() {
                return Ok(Verdict::Disagree {
                    witness: format!(
                        "trial {t}: ideal member {} has nonzero involutive normal form",
                        member.display(&algebra.vars)
                    ),
                });
            }
            let ord =
                ordinary_normal_form(&member, &gb, order, algebra, ReductionMode::Full, caps.nf_steps)?
                    .remainder;
            if !ord.is_zero() {
                return Ok(Verdict::Disagree {
                    witness: format!("trial {t}: oracle failed to reduce an ideal member"),
                });
            }
        }
        // A random probe: both pipelines must agree on membership.
        let probe = random_poly::<C>(&mut rng, n, 3, 3);
        if probe.is_zero() {
            continue;
        }
        let inv = involutive_normal_form(
            &probe,
            gens,
            division,
            order,
            algebra,
            ReductionMode::Full,
            caps.nf_steps,
        )?
        .remainder;
        let ord =
            ordinary_normal_form(&probe, &gb, order, algebra, ReductionMode::Full, caps.nf_steps)?
                .remainder;
        if inv.is_zero() != ord.is_zero() {
            return Ok(Verdict::Disagree {
                witness: format!(
                    "trial {t}: membership disagreement on probe {}",
                    probe.display(&algebra.vars)
                ),
            });
        }
    }
    Ok(Verdict::Agree)
}

/// Run the involutive completion and certify its output against the
/// Buchberger oracle.
pub fn equivalence_check<C: FieldScalar>(
    f: &[Poly<C>],
    algebra: &Algebra<C>,
    order: &OrderSpec,
    division: DivisionSpec,
    seed: u64,
    trials: usize,
    caps: &Caps,
) -> Result<Verdict> {
    let basis = complete(f, division, order, algebra, caps)?;
    certify_generators(
        &basis.generators,
        f,
        algebra,
        order,
        division,
        seed,
        trials,
        caps,
    )
}

/// Minimal generators of the monoid ideal spanned by the exponents.
fn minimal_exponents(
    les: impl IntoIterator<Item = MultiIndex>,
    order: &OrderSpec,
) -> BTreeSet<MultiIndex> {
    let mut v: Vec<MultiIndex> = les.into_iter().collect();
    v.sort_by(|a, b| order.cmp(a, b));
    let mut min: Vec<MultiIndex> = Vec::new();
    for m in v {
        if !min.iter().any(|p| p.divides(&m)) {
            min.push(m);
        }
    }
    min.into_iter().collect()
}

/// A small random polynomial: up to `max_terms` terms, each exponent entry
/// at most 2, scalar coefficients drawn from ±1..=±`coeff_bound` (possibly
/// cancelling to fewer terms or zero).
fn random_poly<C: FieldScalar>(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_terms: usize,
    coeff_bound: i64,
) -> Poly<C> {
    let mut p = Poly::<C>::zero();
    let order = OrderSpec::new(crate::orders::OrderKind::DegLex);
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        let mut c = rng.gen_range(1..=coeff_bound);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        p = p.add(
            &Poly::monomial(MultiIndex::from_slice(&exps), C::from_int(c)),
            &order,
        );
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisions::DivisionKind;
    use crate::expr::parse_poly;
    use crate::orders::OrderKind;
    use num_rational::BigRational;
    use std::collections::HashMap;

    type A = Algebra<BigRational>;

    fn janet() -> DivisionSpec {
        DivisionSpec::new(DivisionKind::Janet)
    }

    fn pp(a: &A, o: &OrderSpec, s: &str) -> Poly<BigRational> {
        parse_poly(s, a, o, &HashMap::new()).unwrap()
    }

    fn running_example(a: &A, o: &OrderSpec) -> Vec<Poly<BigRational>> {
        vec![
            pp(a, o, "z^2 - x*y"),
            pp(a, o, "y*z - x"),
            pp(a, o, "y^2 - z"),
        ]
    }

    fn mi(s: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(s)
    }

    #[test]
    fn reduced_basis_under_deginvlex_adds_one_generator() {
        let a = A::commutative(3);
        let o = OrderSpec::deginvlex(3);
        let f = running_example(&a, &o);
        let gb = buchberger(&f, &a, &o, &Caps::default()).unwrap();
        let mut expected = vec![
            pp(&a, &o, "x*y - z^2"),
            pp(&a, &o, "y*z - x"),
            pp(&a, &o, "y^2 - z"),
            pp(&a, &o, "z^3 - x^2"),
        ];
        expected.sort_by(|p, q| o.cmp(p.le(), q.le()));
        assert_eq!(gb, expected);
    }

    #[test]
    fn reduced_basis_under_degrevlex_is_the_input() {
        let a = A::commutative(3);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let mut f = running_example(&a, &o);
        let gb = buchberger(&f, &a, &o, &Caps::default()).unwrap();
        f.sort_by(|p, q| o.cmp(p.le(), q.le()));
        assert_eq!(gb, f);
    }

    #[test]
    fn principal_ideal_returns_the_monic_generator() {
        let a = A::commutative(2);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let f = pp(&a, &o, "3*x^2*y - 6*x");
        let gb = buchberger(&[f.clone()], &a, &o, &Caps::default()).unwrap();
        assert_eq!(gb, vec![f.scale(&f.lc().inv())]);
    }

    #[test]
    fn weyl_pair_generates_the_unit_ideal() {
        // In W₁, the S-polynomial of ∂ and x is x∂ − ∂⋆x = −1.
        let a = A::weyl(1);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let f = vec![pp(&a, &o, "dx"), pp(&a, &o, "x")];
        let gb = buchberger(&f, &a, &o, &Caps::default()).unwrap();
        assert_eq!(gb, vec![Poly::one(2)]);
    }

    #[test]
    fn gb_reduces_sampled_ideal_members_to_zero() {
        let a = A::commutative(3);
        let o = OrderSpec::deginvlex(3);
        let f = running_example(&a, &o);
        let gb = buchberger(&f, &a, &o, &Caps::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut member = Poly::<BigRational>::zero();
            for p in &f {
                let c = random_poly::<BigRational>(&mut rng, 3, 2, 2);
                if !c.is_zero() {
                    member = member.add(&a.multiply(&c, p, &o).unwrap(), &o);
                }
            }
            let rem = ordinary_normal_form(&member, &gb, &o, &a, ReductionMode::Full, 100_000)
                .unwrap()
                .remainder;
            assert!(rem.is_zero());
        }
    }

    #[test]
    fn two_parabolas_have_the_known_obstructions() {
        let set = vec![mi(&[0, 2]), mi(&[2, 0])];
        let r = bruteforce_span(&set, janet(), 5).unwrap();
        assert_eq!(
            r.obstructions,
            vec![mi(&[2, 1]), mi(&[3, 1]), mi(&[4, 1])]
        );
        assert!(!r.is_involutive());

        let done = vec![mi(&[0, 2]), mi(&[2, 0]), mi(&[2, 1])];
        let r = bruteforce_span(&done, janet(), 7).unwrap();
        assert!(r.is_involutive());
        // Strong basis: disjoint cones, every span member has exactly one
        // involutive divisor.
        assert!(r.is_strong());
    }

    #[test]
    fn equivalence_holds_for_the_running_example_and_weyl() {
        let a = A::commutative(3);
        let o = OrderSpec::deginvlex(3);
        let f = running_example(&a, &o);
        let v = equivalence_check(&f, &a, &o, janet(), 42, 25, &Caps::default()).unwrap();
        assert_eq!(v, Verdict::Agree);

        let w = A::weyl(1);
        let ow = OrderSpec::new(OrderKind::DegRevLex);
        let g = vec![pp(&w, &ow, "x*dx + 1"), pp(&w, &ow, "x^2")];
        let v = equivalence_check(&g, &w, &ow, janet(), 42, 25, &Caps::default()).unwrap();
        assert_eq!(v, Verdict::Agree);
    }

    #[test]
    fn dropping_a_generator_is_detected() {
        let a = A::commutative(3);
        let o = OrderSpec::deginvlex(3);
        let f = running_example(&a, &o);
        let basis = complete(&f, janet(), &o, &a, &Caps::default()).unwrap();
        // Drop the generator whose leading exponent is a minimal generator
        // of the leading-exponent ideal (z^3), so the span visibly shrinks.
        let z3 = mi(&[0, 0, 3]);
        let corrupted: Vec<_> = basis
            .generators
            .iter()
            .filter(|p| *p.le() != z3)
            .cloned()
            .collect();
        assert_eq!(corrupted.len() + 1, basis.generators.len());
        let v = certify_generators(&corrupted, &f, &a, &o, janet(), 1, 25, &Caps::default())
            .unwrap();
        assert!(matches!(v, Verdict::Disagree { .. }));
    }
}
