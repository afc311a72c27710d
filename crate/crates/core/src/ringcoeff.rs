//! Involutive bases over Euclidean coefficient domains (ℤ, ℚ[t]).
//!
//! Over a coefficient ring R that is not a field a leading term can in
//! general only be cancelled by an R-linear combination of several
//! generators whose shifted leading exponents coincide. This module
//! provides the required building blocks — coefficient ideal membership
//! with certificates, generating sets for the syzygies of a coefficient
//! tuple, and a multi-reducer involutive normal form — plus the
//! R-saturation of a generating set and the completion to a weak
//! involutive basis of a left ideal.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::completion::{candidates, Caps, InvolutiveBasis, Sidedness};
use crate::divisions::DivisionSpec;
use crate::error::{Error, Result};
use crate::mono_completion::Strength;
use crate::multiindex::MultiIndex;
use crate::orders::OrderSpec;
use crate::poly::Poly;
use crate::reduction::{assignments_for, ReductionMode};
use crate::scalar::EuclideanScalar;

/// gcd of a tuple with a Bézout certificate: returns `(g, c)` with
/// `Σ c[i]·gens[i] = g` and `g` in canonical associate form. For the empty
/// tuple, `g = 0`.
pub fn gcd_certificate<C: EuclideanScalar>(gens: &[C]) -> (C, Vec<C>) {
    let mut g = C::zero();
    let mut cert: Vec<C> = Vec::with_capacity(gens.len());
    for r in gens {
        let (g2, a, b) = g.xgcd(r);
        for c in cert.iter_mut() {
            *c = c.clone() * a.clone();
        }
        cert.push(b);
        g = g2;
    }
    debug_assert!({
        let s = cert
            .iter()
            .zip(gens)
            .fold(C::zero(), |acc, (c, r)| acc + c.clone() * r.clone());
        s == g
    });
    (g, cert)
}

/// Membership of `s` in the R-ideal `⟨gens⟩`: returns coefficients `c` with
/// `Σ c[i]·gens[i] = s`, or `None` if `s` is not a member.
pub fn coefficient_membership<C: EuclideanScalar>(s: &C, gens: &[C]) -> Option<Vec<C>> {
    if s.is_zero() {
        return Some(vec![C::zero(); gens.len()]);
    }
    let (g, cert) = gcd_certificate(gens);
    if g.is_zero() {
        return None;
    }
    let q = s.exact_div(&g)?;
    Some(cert.into_iter().map(|c| c * q.clone()).collect())
}

/// A generating set for the syzygies of a coefficient tuple: rows `s` with
/// `Σ s[i]·gens[i] = 0` such that every syzygy is an R-combination of the
/// rows. With `g = gcd(gens)` and Bézout certificate `c`, the rows are
/// `S_i = (gens[i]/g)·c − e_i`; any syzygy `s` then equals `−Σ s[i]·S_i`.
pub fn coefficient_syzygies<C: EuclideanScalar>(gens: &[C]) -> Vec<Vec<C>> {
    let (g, cert) = gcd_certificate(gens);
    let mut rows: Vec<Vec<C>> = Vec::new();
    for (i, r) in gens.iter().enumerate() {
        let row: Vec<C> = if g.is_zero() {
            // All generators are zero: the unit vectors are the syzygies.
            let mut e = vec![C::zero(); gens.len()];
            e[i] = -C::one();
            e
        } else {
            let q = r
                .exact_div(&g)
                .expect("gcd divides each generator");
            let mut row: Vec<C> = cert.iter().map(|c| c.clone() * q.clone()).collect();
            row[i] = row[i].clone() - C::one();
            row
        };
        if row.iter().all(|c| c.is_zero()) {
            continue;
        }
        // Canonicalize the sign via the first nonzero entry, then
        // deduplicate (over a field all rows of a pair coincide).
        let lead = row.iter().find(|c| !c.is_zero()).unwrap();
        let (_, u) = lead.canonical_associate();
        let row: Vec<C> = row.into_iter().map(|c| c * u.clone()).collect();
        if !rows.contains(&row) {
            rows.push(row);
        }
    }
    rows
}

/// A representation `f = Σ coefficients[i] ⋆ h[i] + remainder` produced by
/// the ring-aware involutive normal form.
#[derive(Clone, Debug)]
pub struct RingReduction<C: EuclideanScalar> {
    pub remainder: Poly<C>,
    /// Left multiplier polynomials, parallel to the reducer set.
    pub coefficients: Vec<Poly<C>>,
}

impl<C: EuclideanScalar> RingReduction<C> {
    /// Re-verify the representation bit-exactly.
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
        if acc != *f {
            return Err(Error::VerificationFailure(
                "ring reduction certificate does not reproduce the input".into(),
            ));
        }
        Ok(())
    }
}

/// Involutive normal form over a Euclidean coefficient domain. A term
/// `c·x^μ` is reduced whenever `c` lies in the R-ideal generated by the
/// coefficients of `x^μ` in the shifted products `x^{μ−le g} ⋆ g` over all
/// involutive divisors `g` (multiplicative variables taken with respect to
/// the full set `h`, including a skipped element). The head then cancels
/// exactly, so the leading exponent strictly decreases.
///
/// `skip` excludes one element of `h` from the reducer set (used for
/// autoreduction passes); its leading exponent still shapes the
/// multiplicative assignments.
#[allow(clippy::too_many_arguments)]
pub fn ring_involutive_normal_form<C: EuclideanScalar>(
    f: &Poly<C>,
    h: &[Poly<C>],
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
    mode: ReductionMode,
    skip: Option<usize>,
    step_cap: usize,
) -> Result<RingReduction<C>> {
    let mults = assignments_for(h, division)?;
    let mut rem = f.clone();
    let mut coeffs = vec![Poly::<C>::zero(); h.len()];
    let mut steps = 0usize;
    'outer: loop {
        let limit = match mode {
            ReductionMode::Full => rem.terms.len(),
            ReductionMode::HeadOnly => rem.terms.len().min(1),
        };
        for tpos in 0..limit {
            let (mu, c) = rem.terms[tpos].clone();
            let mut reducers: Vec<(usize, MultiIndex, Poly<C>)> = Vec::new();
            let mut lcs: Vec<C> = Vec::new();
            for (i, g) in h.iter().enumerate() {
                if Some(i) == skip || g.is_zero() {
                    continue;
                }
                if !g.le().divides_restricted(&mu, &mults[i]) {
                    continue;
                }
                let lam = mu
                    .checked_sub(g.le())
                    .expect("restricted divisibility implies divisibility");
                let sh = algebra.star_mono_poly(&lam, g, order)?;
                debug_assert_eq!(*sh.le(), mu);
                lcs.push(sh.lc().clone());
                reducers.push((i, lam, sh));
            }
            if reducers.is_empty() {
                continue;
            }
            let Some(cert) = coefficient_membership(&c, &lcs) else {
                continue;
            };
            steps += 1;
            if steps > step_cap {
                return Err(Error::NormalFormCapExceeded { cap: step_cap });
            }
            for (d, (i, lam, sh)) in cert.into_iter().zip(reducers) {
                if d.is_zero() {
                    continue;
                }
                rem = rem.sub(&sh.scale(&d), order);
                coeffs[i] = coeffs[i].add(&Poly::monomial(lam, d), order);
            }
            debug_assert!(rem.terms.iter().all(|(m, _)| *m != mu));
            continue 'outer;
        }
        break;
    }
    Ok(RingReduction {
        remainder: rem,
        coefficients: coeffs,
    })
}

/// Scale to the canonical associate of the leading coefficient (|lc| for
/// ℤ, monic for ℚ[t]).
fn canonicalize<C: EuclideanScalar>(p: &Poly<C>) -> Poly<C> {
    if p.is_zero() {
        return p.clone();
    }
    let (_, u) = p.lc().canonical_associate();
    p.scale(&u)
}

fn sorted_dedup<C: EuclideanScalar>(
    polys: impl IntoIterator<Item = Poly<C>>,
    order: &OrderSpec,
) -> Vec<Poly<C>> {
    let mut h: Vec<Poly<C>> = Vec::new();
    for p in polys {
        if !p.is_zero() && !h.contains(&p) {
            h.push(p);
        }
    }
    h.sort_by(|a, b| order.cmp(a.le(), b.le()));
    h
}

/// R-saturation: closes a generating set under the coefficient syzygies of
/// involutive reducers, producing a set such that every ideal element whose
/// leading exponent lies in the span has a ring-sense involutive head
/// reduction. Sweeps the leading exponents in descending order; for each
/// exponent ν it first head-reduces the generators with leading exponent ν
/// against the rest, then adjoins the normal forms of the syzygy
/// combinations of the shifted reducers `x^{ν−le g} ⋆ g`. Any change
/// restarts the sweep.
pub fn rsaturate<C: EuclideanScalar>(
    f: &[Poly<C>],
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
    caps: &Caps,
) -> Result<Vec<Poly<C>>> {
    if !order.is_monoid_order() {
        return Err(Error::Unsupported(
            "R-saturation requires a monoid order".into(),
        ));
    }
    let mut h = sorted_dedup(f.iter().map(canonicalize), order);
    let mut s: Vec<Poly<C>> = h.clone();
    let mut changes = 0usize;
    while let Some(nu) = order.max(s.iter().map(|p| p.le())).cloned() {
        let mut s_nu: Vec<Poly<C>> = h.iter().filter(|p| *p.le() == nu).cloned().collect();
        s.retain(|p| *p.le() != nu);
        let mut hp = h.clone();
        let mut kept: Vec<Poly<C>> = Vec::new();
        // Head-autoreduce the elements at ν sequentially against the
        // evolving set: reducing them all against a frozen copy can remove
        // two mutually reducible generators at once and lose ideal content.
        for fi in s_nu.drain(..) {
            let Some(idx) = hp.iter().position(|p| *p == fi) else {
                continue;
            };
            let red = ring_involutive_normal_form(
                &fi,
                &hp,
                division,
                order,
                algebra,
                ReductionMode::HeadOnly,
                Some(idx),
                caps.nf_steps,
            )?;
            if red.remainder == fi {
                kept.push(fi);
            } else {
                hp.remove(idx);
                if !red.remainder.is_zero() {
                    let r = canonicalize(&red.remainder);
                    if !hp.contains(&r) {
                        hp.push(r);
                    }
                }
            }
        }
        if !kept.is_empty() {
            // Adjoin the syzygy combinations of the involutive reducers at ν
            // (multiplicative variables with respect to the updated set).
            let mults = assignments_for(&hp, division)?;
            let mut shifts: Vec<Poly<C>> = Vec::new();
            for (i, g) in hp.iter().enumerate() {
                if g.le().divides_restricted(&nu, &mults[i]) {
                    let lam = nu
                        .checked_sub(g.le())
                        .expect("restricted divisibility implies divisibility");
                    shifts.push(algebra.star_mono_poly(&lam, g, order)?);
                }
            }
            let lcs: Vec<C> = shifts.iter().map(|p| p.lc().clone()).collect();
            for row in coefficient_syzygies(&lcs) {
                let mut comb = Poly::<C>::zero();
                for (si, sh) in row.iter().zip(&shifts) {
                    if !si.is_zero() {
                        comb = comb.add(&sh.scale(si), order);
                    }
                }
                if comb.is_zero() {
                    continue;
                }
                debug_assert!(order.cmp(comb.le(), &nu).is_lt());
                let red = ring_involutive_normal_form(
                    &comb,
                    &hp,
                    division,
                    order,
                    algebra,
                    ReductionMode::Full,
                    None,
                    caps.nf_steps,
                )?;
                if !red.remainder.is_zero() {
                    let r = canonicalize(&red.remainder);
                    if !hp.contains(&r) {
                        hp.push(r);
                    }
                }
            }
        }
        let hp = sorted_dedup(hp, order);
        if hp != h {
            changes += 1;
            if changes > caps.basis_insertions {
                return Err(Error::CompletionCapExceeded {
                    cap: caps.basis_insertions,
                });
            }
            h = hp;
            s = h.clone();
        }
    }
    Ok(h)
}

/// Is `h` involutively head autoreduced in the ring sense? No leading
/// coefficient lies in the R-ideal of the leading coefficients of the
/// other shifted involutive reducers at the same exponent.
pub fn is_ring_head_autoreduced<C: EuclideanScalar>(
    h: &[Poly<C>],
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
    step_cap: usize,
) -> Result<bool> {
    for (i, fi) in h.iter().enumerate() {
        let red = ring_involutive_normal_form(
            fi,
            h,
            division,
            order,
            algebra,
            ReductionMode::HeadOnly,
            Some(i),
            step_cap,
        )?;
        if red.remainder != *fi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Weak involutive basis of a left ideal over a Euclidean coefficient
/// domain: R-saturates, then repeatedly inserts the ring-sense normal form
/// of the ≺-least non-multiplicative prolongation that does not reduce to
/// zero, re-saturating after every insertion.
pub fn complete_over_ring<C: EuclideanScalar>(
    f: &[Poly<C>],
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
    caps: &Caps,
) -> Result<InvolutiveBasis<C>> {
    if !order.is_monoid_order() {
        return Err(Error::Unsupported(
            "completion requires a monoid order (use the local pipelines)".into(),
        ));
    }
    let mut h = rsaturate(f, division, order, algebra, caps)?;
    if h.is_empty() {
        return Err(Error::InvalidInput(
            "ideal generated by zero polynomials".into(),
        ));
    }
    let mut discovered = Vec::new();
    let mut insertions = 0usize;
    'outer: loop {
        for (_, i, j) in candidates(&h, division, order)? {
            let prolong = algebra.star_mono_poly(&MultiIndex::unit(algebra.n, j), &h[i], order)?;
            let red = ring_involutive_normal_form(
                &prolong,
                &h,
                division,
                order,
                algebra,
                ReductionMode::Full,
                None,
                caps.nf_steps,
            )?;
            if !red.remainder.is_zero() {
                insertions += 1;
                if insertions > caps.basis_insertions {
                    return Err(Error::CompletionCapExceeded {
                        cap: caps.basis_insertions,
                    });
                }
                let r = canonicalize(&red.remainder);
                discovered.push(r.clone());
                h.push(r);
                h = rsaturate(&h, division, order, algebra, caps)?;
                continue 'outer;
            }
        }
        break;
    }
    discovered.retain(|d| h.contains(d));
    InvolutiveBasis::new(
        h,
        division,
        order.clone(),
        Strength::Weak,
        Sidedness::Left,
        discovered,
    )
}

/// Leading coefficients of the generators whose leading exponent equals
/// `nu` after an involutive shift — the R-ideal that must contain the
/// leading coefficient of any ideal element with leading exponent `nu`.
pub fn leading_coefficient_ideal<C: EuclideanScalar>(
    h: &[Poly<C>],
    nu: &MultiIndex,
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
) -> Result<Vec<C>> {
    let mults: Vec<BTreeSet<usize>> = assignments_for(h, division)?;
    let mut lcs = Vec::new();
    for (i, g) in h.iter().enumerate() {
        if g.le().divides_restricted(nu, &mults[i]) {
            let lam = nu
                .checked_sub(g.le())
                .expect("restricted divisibility implies divisibility");
            lcs.push(algebra.star_mono_poly(&lam, g, order)?.lc().clone());
        }
    }
    Ok(lcs)
}
