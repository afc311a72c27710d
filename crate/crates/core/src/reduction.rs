//! Ordinary and involutive normal forms with standard-representation
//! tracking, plus involutive head autoreduction.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::divisions::DivisionSpec;
use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;
use crate::orders::OrderSpec;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Default bound on single-normal-form reduction steps.
pub const DEFAULT_NF_STEP_CAP: usize = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionMode {
    Full,
    HeadOnly,
}

/// A representation f = Σ coefficients[i] ⋆ H[i] + remainder.
#[derive(Clone, Debug)]
pub struct StandardRepresentation<C: Scalar> {
    /// Parallel to the generator list passed in.
    pub coefficients: Vec<Poly<C>>,
    pub remainder: Poly<C>,
    /// Whether every coefficient is supported on the multiplicative
    /// variables of its generator.
    pub involutive: bool,
}

impl<C: Scalar> StandardRepresentation<C> {
    /// Re-multiply and check the reconstruction identity bit-exactly.
    pub fn verify(
        &self,
        f: &Poly<C>,
        h: &[Poly<C>],
        algebra: &Algebra<C>,
        order: &OrderSpec,
    ) -> Result<()> {
        let mut acc = self.remainder.clone();
        for (p, g) in self.coefficients.iter().zip(h) {
            if !p.is_zero() {
                acc = acc.add(&algebra.multiply(p, g, order)?, order);
            }
        }
        if acc == *f {
            Ok(())
        } else {
            Err(Error::VerificationFailure(
                "standard representation does not reconstruct the input".into(),
            ))
        }
    }
}

/// Multiplicative index sets for each generator, determined by the division
/// on the deduplicated set of leading exponents (generators sharing a
/// leading exponent share the assignment).
pub fn assignments_for<C: Scalar>(
    h: &[Poly<C>],
    division: DivisionSpec,
) -> Result<Vec<BTreeSet<usize>>> {
    let mut les: Vec<MultiIndex> = Vec::new();
    for g in h {
        if g.is_zero() {
            return Err(Error::InvalidInput("zero generator".into()));
        }
        if !les.contains(g.le()) {
            les.push(g.le().clone());
        }
    }
    let mult = division.multiplicative_indices(&les);
    Ok(h.iter()
        .map(|g| {
            let i = les.iter().position(|m| m == g.le()).unwrap();
            mult[i].clone()
        })
        .collect())
}

/// Core reduction loop shared by the ordinary and involutive normal forms.
/// `mults[i]` restricts the admissible quotients for reducer `i`; pass the
/// full index set for ordinary reduction. `skip` excludes one reducer (used
/// by autoreduction, where the assignment still comes from the full set).
///
/// Scans the current polynomial's terms in descending order and restarts
/// from the top after every replacement. A term is reduced only when the
/// coefficient equation lc = d · lc(x^μ ⋆ g) is exactly solvable, which is
/// always the case over a field.
#[allow(clippy::too_many_arguments)]
fn reduce_core<C: Scalar>(
    f: &Poly<C>,
    gens: &[Poly<C>],
    mults: &[BTreeSet<usize>],
    skip: Option<usize>,
    algebra: &Algebra<C>,
    order: &OrderSpec,
    mode: ReductionMode,
    step_cap: usize,
) -> Result<StandardRepresentation<C>> {
    let mut h = f.clone();
    let mut coeffs = vec![Poly::<C>::zero(); gens.len()];
    let mut steps = 0usize;
    // Positions in `h` at or above which every term is known irreducible.
    'outer: loop {
        let limit = match mode {
            ReductionMode::Full => h.terms.len(),
            ReductionMode::HeadOnly => h.terms.len().min(1),
        };
        for tpos in 0..limit {
            let (mu, c) = h.terms[tpos].clone();
            // Find the reducer: smallest leading exponent under the ambient
            // order, then smallest index.
            let mut best: Option<(usize, MultiIndex, C)> = None;
            for (i, g) in gens.iter().enumerate() {
                if Some(i) == skip {
                    continue;
                }
                if !g.le().divides_restricted(&mu, &mults[i]) {
                    continue;
                }
                let lam = mu.checked_sub(g.le()).unwrap();
                let prod_lc = leading_coeff_of_shift(algebra, &lam, g, order)?;
                let d = match c.exact_div(&prod_lc) {
                    Some(d) => d,
                    None => continue,
                };
                let better = match &best {
                    None => true,
                    Some((bi, _, _)) => {
                        let cur = gens[*bi].le();
                        match order.cmp(g.le(), cur) {
                            std::cmp::Ordering::Less => true,
                            std::cmp::Ordering::Greater => false,
                            std::cmp::Ordering::Equal => i < *bi,
                        }
                    }
                };
                if better {
                    best = Some((i, lam, d));
                }
            }
            if let Some((i, lam, d)) = best {
                steps += 1;
                if steps > step_cap {
                    return Err(Error::NormalFormCapExceeded { cap: step_cap });
                }
                let shifted = algebra.star_mono_poly(&lam, &gens[i], order)?;
                h = h.sub(&shifted.scale(&d), order);
                coeffs[i] = coeffs[i].add(&Poly::monomial(lam, d), order);
                continue 'outer;
            }
        }
        break;
    }
    Ok(StandardRepresentation {
        coefficients: coeffs,
        remainder: h,
        involutive: false,
    })
}

/// Leading coefficient of x^λ ⋆ g (cheaper than materializing the product
/// when λ = 0 or the algebra is commutative).
fn leading_coeff_of_shift<C: Scalar>(
    algebra: &Algebra<C>,
    lam: &MultiIndex,
    g: &Poly<C>,
    order: &OrderSpec,
) -> Result<C> {
    if lam.is_zero() || algebra.is_commutative() {
        return Ok(g.lc().clone());
    }
    let prod = algebra.star_mono_mono(lam, g.le())?;
    let target = lam.checked_add(g.le())?;
    let _ = order;
    // Coefficients are central, so lc(x^λ ⋆ g) = [x^{λ+le g}](x^λ ⋆ x^{le g}) · lc(g).
    prod.get(&target)
        .map(|c| c.clone() * g.lc().clone())
        .ok_or_else(|| Error::VerificationFailure("product lost its leading term".into()))
}

/// Full involutive normal form of `h[i]` against the other elements of `h`,
/// with multiplicative variables assigned from the full set (used by full
/// autoreduction).
pub fn involutive_self_normal_form<C: Scalar>(
    h: &[Poly<C>],
    i: usize,
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
    step_cap: usize,
) -> Result<StandardRepresentation<C>> {
    if !order.is_monoid_order() {
        return Err(Error::Unsupported(
            "involutive normal form requires a monoid order (use the Mora normal form)".into(),
        ));
    }
    let mults = assignments_for(h, division)?;
    let mut rep = reduce_core(&h[i], h, &mults, Some(i), algebra, order, ReductionMode::Full, step_cap)?;
    rep.involutive = true;
    Ok(rep)
}

/// Involutive normal form of `f` modulo `h`.
pub fn involutive_normal_form<C: Scalar>(
    f: &Poly<C>,
    h: &[Poly<C>],
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
    mode: ReductionMode,
    step_cap: usize,
) -> Result<StandardRepresentation<C>> {
    if !order.is_monoid_order() {
        return Err(Error::Unsupported(
            "involutive normal form requires a monoid order (use the Mora normal form)".into(),
        ));
    }
    let mults = assignments_for(h, division)?;
    let mut rep = reduce_core(f, h, &mults, None, algebra, order, mode, step_cap)?;
    rep.involutive = true;
    Ok(rep)
}

/// Ordinary (non-involutive) normal form: every variable is admissible.
pub fn ordinary_normal_form<C: Scalar>(
    f: &Poly<C>,
    g: &[Poly<C>],
    order: &OrderSpec,
    algebra: &Algebra<C>,
    mode: ReductionMode,
    step_cap: usize,
) -> Result<StandardRepresentation<C>> {
    if !order.is_monoid_order() {
        return Err(Error::Unsupported("ordinary normal form requires a monoid order".into()));
    }
    let n = algebra.n;
    for p in g {
        if p.is_zero() {
            return Err(Error::InvalidInput("zero generator".into()));
        }
    }
    let all: BTreeSet<usize> = (0..n).collect();
    let mults = vec![all; g.len()];
    reduce_core(f, g, &mults, None, algebra, order, mode, step_cap)
}

/// Involutive head autoreduction: repeatedly head-reduce each element
/// against the others (multiplicative variables determined by the full
/// current set), dropping elements that reduce to zero. Preserves the span.
pub fn involutive_head_autoreduce<C: Scalar>(
    f: &[Poly<C>],
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
    step_cap: usize,
) -> Result<Vec<Poly<C>>> {
    let mut cur: Vec<Poly<C>> = f.iter().filter(|p| !p.is_zero()).cloned().collect();
    'outer: loop {
        let mults = assignments_for(&cur, division)?;
        for i in 0..cur.len() {
            let rep = reduce_core(
                &cur[i],
                &cur,
                &mults,
                Some(i),
                algebra,
                order,
                ReductionMode::HeadOnly,
                step_cap,
            )?;
            if rep.remainder != cur[i] {
                if rep.remainder.is_zero() {
                    cur.remove(i);
                } else {
                    cur[i] = rep.remainder;
                }
                continue 'outer;
            }
        }
        return Ok(cur);
    }
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

    #[test]
    fn obstruction_is_not_involutively_reducible() {
        // H = {y², x²} with Janet: x²y is in the span but not the
        // involutive span, so it must survive reduction untouched.
        let a = A::commutative(2);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let h = vec![pp(&a, &o, "y^2"), pp(&a, &o, "x^2")];
        let f = pp(&a, &o, "x^2*y");
        let rep =
            involutive_normal_form(&f, &h, janet(), &o, &a, ReductionMode::Full, 1000).unwrap();
        assert_eq!(rep.remainder, f);
        rep.verify(&f, &h, &a, &o).unwrap();
        // Ordinary reduction does reduce it.
        let rep = ordinary_normal_form(&f, &h, &o, &a, ReductionMode::Full, 1000).unwrap();
        assert!(rep.remainder.is_zero());
        rep.verify(&f, &h, &a, &o).unwrap();
    }

    #[test]
    fn member_of_set_reduces_to_zero() {
        let a = A::commutative(2);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let h = vec![pp(&a, &o, "y^2 - x"), pp(&a, &o, "x^2")];
        let rep = involutive_normal_form(
            &h[0], &h, janet(), &o, &a, ReductionMode::Full, 1000,
        )
        .unwrap();
        assert!(rep.remainder.is_zero());
        assert_eq!(rep.coefficients[0], Poly::one(2));
    }

    #[test]
    fn head_autoreduction_preserves_span() {
        let a = A::commutative(2);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let f = vec![pp(&a, &o, "y^2"), pp(&a, &o, "y^2 + x^2")];
        let out = involutive_head_autoreduce(&f, janet(), &o, &a, 1000).unwrap();
        let mut les: Vec<MultiIndex> = out.iter().map(|p| p.le().clone()).collect();
        les.sort();
        assert_eq!(les, vec![MultiIndex(vec![0, 2]), MultiIndex(vec![2, 0])]);
    }

    #[test]
    fn duplicate_heads_collapse() {
        let a = A::commutative(2);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let f = pp(&a, &o, "x*y - 1");
        let f2 = f.scale(&crate::scalar::q(2));
        let out = involutive_head_autoreduce(&[f, f2], janet(), &o, &a, 1000).unwrap();
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn weyl_reduction_solves_the_coefficient_equation() {
        // In W₁ reduce ∂²x (normal ordered: x∂² + 2∂) by g = x∂.
        let a = A::weyl(1);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let g = vec![pp(&a, &o, "x*dx")];
        let f = pp(&a, &o, "dx^2*x"); // = x dx^2 + 2 dx
        let rep = ordinary_normal_form(&f, &g, &o, &a, ReductionMode::Full, 1000).unwrap();
        rep.verify(&f, &g, &a, &o).unwrap();
        // le(f) = [1,2] is divisible by [1,1]: quotient dx, and
        // dx ⋆ (x dx) = x dx^2 + dx, so one step leaves 2dx − dx = dx,
        // which is irreducible.
        assert_eq!(rep.remainder, pp(&a, &o, "dx"));
    }

    #[test]
    fn reduction_shuffle_invariance_for_autoreduced_sets() {
        // Unique normal form: shuffling the generator list does not change
        // the full remainder for a head-autoreduced set.
        let a = A::commutative(3);
        let o = OrderSpec::new(OrderKind::DegRevLex);
        let h = vec![
            pp(&a, &o, "z^2 - x*y"),
            pp(&a, &o, "y*z - x"),
            pp(&a, &o, "y^2 - z"),
        ];
        let f = pp(&a, &o, "z^3 + x*y*z - y^2 + x");
        let base = involutive_normal_form(&f, &h, janet(), &o, &a, ReductionMode::Full, 1000)
            .unwrap()
            .remainder;
        let perms: Vec<Vec<usize>> = vec![vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0]];
        for p in perms {
            let hp: Vec<_> = p.iter().map(|&i| h[i].clone()).collect();
            let r = involutive_normal_form(&f, &hp, janet(), &o, &a, ReductionMode::Full, 1000)
                .unwrap()
                .remainder;
            assert_eq!(r, base);
        }
    }
}
