//! Polynomial involutive completion, minimal bases, Ore multipliers, and
//! two-sided bases.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::divisions::DivisionSpec;
use crate::error::{Error, Result};
use crate::mono_completion::Strength;
use crate::multiindex::MultiIndex;
use crate::orders::OrderSpec;
use crate::poly::Poly;
use crate::reduction::{
    assignments_for, involutive_head_autoreduce, involutive_normal_form,
    involutive_self_normal_form, ordinary_normal_form, ReductionMode,
};
use crate::scalar::{FieldScalar, Scalar};

/// Budget caps for completion runs.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Maximum number of basis insertions in a polynomial completion.
    pub basis_insertions: usize,
    /// Maximum reduction steps per normal form.
    pub nf_steps: usize,
    /// Maximum insertions in a monomial completion.
    pub mono_steps: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            basis_insertions: 5_000,
            nf_steps: 1_000_000,
            mono_steps: 10_000,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sidedness {
    Left,
    TwoSidedAsLeft,
}

/// A computed involutive basis.
#[derive(Clone, Debug)]
pub struct InvolutiveBasis<C: Scalar> {
    pub generators: Vec<Poly<C>>,
    /// Multiplicative variable sets, parallel to `generators`.
    pub mult: Vec<BTreeSet<usize>>,
    pub division: DivisionSpec,
    pub order: OrderSpec,
    pub strength: Strength,
    pub sidedness: Sidedness,
    /// Polynomials inserted by the completion loop, in discovery order
    /// (already head-autoreduced at insertion time).
    pub discovered: Vec<Poly<C>>,
}

impl<C: Scalar> InvolutiveBasis<C> {
    pub(crate) fn new(
        generators: Vec<Poly<C>>,
        division: DivisionSpec,
        order: OrderSpec,
        strength: Strength,
        sidedness: Sidedness,
        discovered: Vec<Poly<C>>,
    ) -> Result<Self> {
        let mult = assignments_for(&generators, division)?;
        Ok(InvolutiveBasis {
            generators,
            mult,
            division,
            order,
            strength,
            sidedness,
            discovered,
        })
    }
}

/// One completion step: all non-multiplicative prolongations of `h`,
/// ordered ascending by leading exponent (normal strategy), with ties
/// broken by generator index and variable index.
pub(crate) fn candidates<C: Scalar>(
    h: &[Poly<C>],
    division: DivisionSpec,
    order: &OrderSpec,
) -> Result<Vec<(MultiIndex, usize, usize)>> {
    let mults = assignments_for(h, division)?;
    let n = h.first().and_then(|p| p.num_vars()).unwrap_or(0);
    let mut cands = Vec::new();
    for (i, g) in h.iter().enumerate() {
        for j in (0..n).filter(|j| !mults[i].contains(j)) {
            cands.push((g.le().checked_bump(j)?, i, j));
        }
    }
    cands.sort_by(|a, b| {
        order
            .cmp(&a.0, &b.0)
            .then(a.1.cmp(&b.1))
            .then(a.2.cmp(&b.2))
    });
    Ok(cands)
}

/// Involutive completion (left ideals, field coefficients, monoid order).
/// Repeatedly takes the ≺-least non-multiplicative prolongation outside the
/// involutive span, inserts its involutive normal form, and head-autoreduces.
pub fn complete<C: FieldScalar>(
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
    let mut h = involutive_head_autoreduce(f, division, order, algebra, caps.nf_steps)?;
    if h.is_empty() {
        return Err(Error::InvalidInput("ideal generated by zero polynomials".into()));
    }
    let mut discovered = Vec::new();
    let mut insertions = 0usize;
    'outer: loop {
        for (_, i, j) in candidates(&h, division, order)? {
            let prolong = algebra.star_mono_poly(
                &MultiIndex::unit(algebra.n, j),
                &h[i],
                order,
            )?;
            let rep = involutive_normal_form(
                &prolong,
                &h,
                division,
                order,
                algebra,
                ReductionMode::Full,
                caps.nf_steps,
            )?;
            if !rep.remainder.is_zero() {
                insertions += 1;
                if insertions > caps.basis_insertions {
                    return Err(Error::CompletionCapExceeded {
                        cap: caps.basis_insertions,
                    });
                }
                discovered.push(rep.remainder.clone());
                h.push(rep.remainder);
                h = involutive_head_autoreduce(&h, division, order, algebra, caps.nf_steps)?;
                continue 'outer;
            }
        }
        break;
    }
    discovered.retain(|d| h.contains(d));
    InvolutiveBasis::new(h, division, order.clone(), Strength::Strong, Sidedness::Left, discovered)
}

/// Full involutive autoreduction (all terms) and monic normalization. For
/// globally defined divisions this is the unique minimal basis.
pub fn minimal_candidate<C: FieldScalar>(
    basis: &InvolutiveBasis<C>,
    algebra: &Algebra<C>,
    caps: &Caps,
) -> Result<InvolutiveBasis<C>> {
    let order = &basis.order;
    let mut h = basis.generators.clone();
    'outer: loop {
        for i in 0..h.len() {
            let rep = involutive_self_normal_form(
                &h,
                i,
                basis.division,
                order,
                algebra,
                caps.nf_steps,
            )?;
            if rep.remainder != h[i] {
                if rep.remainder.is_zero() {
                    h.remove(i);
                } else {
                    h[i] = rep.remainder;
                }
                continue 'outer;
            }
        }
        break;
    }
    for p in &mut h {
        let lc = p.lc().clone();
        *p = p.scale(&lc.inv());
    }
    InvolutiveBasis::new(
        h,
        basis.division,
        order.clone(),
        basis.strength,
        basis.sidedness,
        vec![],
    )
}

/// Left Ore multipliers: nonzero φ, ψ with φ ⋆ f = ψ ⋆ g, found by the
/// iterative pseudoreduction construction. The identity is re-verified
/// bit-exactly before returning.
pub fn ore_multipliers<C: FieldScalar>(
    f: &Poly<C>,
    g: &Poly<C>,
    algebra: &Algebra<C>,
    order: &OrderSpec,
    caps: &Caps,
) -> Result<(Poly<C>, Poly<C>)> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("Ore multipliers need nonzero inputs".into()));
    }
    let finish = |phi: Poly<C>, psi: Poly<C>| -> Result<(Poly<C>, Poly<C>)> {
        // 0 = φ⋆f + ψ⋆g, so φ⋆f = (−ψ)⋆g.
        let psi = psi.neg();
        if phi.is_zero() || psi.is_zero() {
            return Err(Error::VerificationFailure(
                "Ore construction produced a zero multiplier".into(),
            ));
        }
        let lhs = algebra.multiply(&phi, f, order)?;
        let rhs = algebra.multiply(&psi, g, order)?;
        if lhs != rhs || lhs.is_zero() {
            return Err(Error::VerificationFailure("Ore identity failed to verify".into()));
        }
        Ok((phi, psi))
    };
    if algebra.is_commutative() {
        return finish(g.clone(), f.neg());
    }
    // Elements of ⟨f, g⟩ with tracked representations h = φ⋆f + ψ⋆g.
    let mut pool: Vec<Poly<C>> = vec![f.clone(), g.clone()];
    let mut reps: Vec<(Poly<C>, Poly<C>)> = vec![
        (Poly::one(algebra.n), Poly::zero()),
        (Poly::zero(), Poly::one(algebra.n)),
    ];
    // First S-element: g⋆f − (a/b) f⋆g cancels the leading terms.
    let gf = algebra.multiply(g, f, order)?;
    let fg = algebra.multiply(f, g, order)?;
    let s = gf.lc().clone() * fg.lc().inv();
    let mut hbar = gf.sub(&fg.scale(&s), order);
    let mut phi = g.clone();
    let mut psi = f.scale(&s).neg();
    for _ in 0..caps.basis_insertions {
        // Reduce hbar against the pool, pulling the representation back.
        let rep = ordinary_normal_form(
            &hbar,
            &pool,
            order,
            algebra,
            ReductionMode::Full,
            caps.nf_steps,
        )?;
        for (p, (fi, si)) in rep.coefficients.iter().zip(&reps) {
            if p.is_zero() {
                continue;
            }
            if !fi.is_zero() {
                phi = phi.sub(&algebra.multiply(p, fi, order)?, order);
            }
            if !si.is_zero() {
                psi = psi.sub(&algebra.multiply(p, si, order)?, order);
            }
        }
        let h = rep.remainder;
        if h.is_zero() {
            return finish(phi, psi);
        }
        pool.push(h.clone());
        reps.push((phi.clone(), psi.clone()));
        // Next S-element: f⋆h − (a/b) h⋆f.
        let fh = algebra.multiply(f, &h, order)?;
        let hf = algebra.multiply(&h, f, order)?;
        let s = fh.lc().clone() * hf.lc().inv();
        hbar = fh.sub(&hf.scale(&s), order);
        // Representation: f⋆h = (f⋆φ)⋆f + (f⋆ψ)⋆g; h⋆f = h⋆f directly.
        let new_phi = algebra
            .multiply(f, &phi, order)?
            .sub(&h.scale(&s), order);
        let new_psi = algebra.multiply(f, &psi, order)?;
        phi = new_phi;
        psi = new_psi;
        if hbar.is_zero() {
            return finish(phi, psi);
        }
    }
    Err(Error::CompletionCapExceeded {
        cap: caps.basis_insertions,
    })
}

/// Left involutive basis of the two-sided ideal generated by `f`:
/// completes, then closes under right multiplication by the variables, and
/// completes again. Requires the coefficient field to be central (true for
/// every supported algebra), so right multiplication by coefficients is a
/// no-op.
pub fn two_sided_basis<C: FieldScalar>(
    f: &[Poly<C>],
    division: DivisionSpec,
    order: &OrderSpec,
    algebra: &Algebra<C>,
    caps: &Caps,
) -> Result<InvolutiveBasis<C>> {
    let mut h = complete(f, division, order, algebra, caps)?.generators;
    let mut s: Vec<Poly<C>> = h.clone();
    let mut rounds = 0usize;
    while !s.is_empty() {
        rounds += 1;
        if rounds > caps.basis_insertions {
            return Err(Error::CompletionCapExceeded {
                cap: caps.basis_insertions,
            });
        }
        let mut t = Vec::new();
        for p in &s {
            for i in 0..algebra.n {
                let prod = algebra.multiply(p, &Poly::var(algebra.n, i), order)?;
                let rep = involutive_normal_form(
                    &prod,
                    &h,
                    division,
                    order,
                    algebra,
                    ReductionMode::Full,
                    caps.nf_steps,
                )?;
                if !rep.remainder.is_zero() {
                    h.push(rep.remainder.clone());
                    t.push(rep.remainder);
                }
            }
        }
        s = t;
    }
    let mut out = complete(&h, division, order, algebra, caps)?;
    out.sidedness = Sidedness::TwoSidedAsLeft;
    Ok(out)
}
