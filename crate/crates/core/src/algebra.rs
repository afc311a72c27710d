//! Polynomial algebras of solvable type.
//!
//! An algebra is fixed by commutation relations x_i ⋆ x_j = r_ij x_j x_i +
//! h_ij for i > j (0-based), with r_ij a unit and h_ij a polynomial whose
//! leading exponent is smaller than 1_i + 1_j under the ambient order. The
//! coefficient domain is central: x_i ⋆ c = c x_i for every coefficient c.
//! Products are evaluated by normal-order rewriting with memoized monomial
//! products; the Weyl/shift/difference operator families also have a closed
//! form which is used directly (and must agree with rewriting).

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::multiindex::{multi_indices_up_to_degree, MultiIndex};
use crate::orders::OrderSpec;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Built-in algebra families. The Ore families (Weyl, shift, difference)
/// use 2m variables: the first m commute ("x-part"), the last m are the
/// operators acting on them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraFamily {
    Commutative,
    Weyl,
    OreShift,
    OreDifference,
    Enveloping,
    QHeisenberg,
    Custom,
}

type TermMap<C> = BTreeMap<MultiIndex, C>;

/// A polynomial algebra of solvable type over the scalar domain `C`.
pub struct Algebra<C: Scalar> {
    pub n: usize,
    pub vars: Vec<String>,
    pub family: AlgebraFamily,
    /// r_ij for i > j; absent pairs commute with r = 1.
    rel_r: HashMap<(usize, usize), C>,
    /// h_ij term lists for i > j; absent pairs have h = 0.
    rel_h: HashMap<(usize, usize), Vec<(MultiIndex, C)>>,
    /// Does every variable subset generate a subalgebra (needed by the Mora
    /// normal form)? True when every h_ij is supported on variables ≤ max(i, j)
    /// appearing in {i, j} together with constants.
    pub subring_closed: bool,
    cache: Mutex<HashMap<(MultiIndex, MultiIndex), Vec<(MultiIndex, C)>>>,
}

impl<C: Scalar> Clone for Algebra<C> {
    fn clone(&self) -> Self {
        Algebra {
            n: self.n,
            vars: self.vars.clone(),
            family: self.family,
            rel_r: self.rel_r.clone(),
            rel_h: self.rel_h.clone(),
            subring_closed: self.subring_closed,
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl<C: Scalar> std::fmt::Debug for Algebra<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("n", &self.n)
            .field("vars", &self.vars)
            .field("family", &self.family)
            .finish()
    }
}

fn default_names(n: usize, prefix: &str) -> Vec<String> {
    if n <= 3 && prefix == "x" {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }
}

impl<C: Scalar> Algebra<C> {
    /// Raw constructor. Relations are given for pairs i > j only.
    pub fn custom(
        vars: Vec<String>,
        rel_r: HashMap<(usize, usize), C>,
        rel_h: HashMap<(usize, usize), Vec<(MultiIndex, C)>>,
        subring_closed: bool,
    ) -> Result<Self> {
        let n = vars.len();
        for (&(i, j), r) in &rel_r {
            if i <= j || i >= n {
                return Err(Error::InvalidInput(format!("relation pair ({i},{j}) out of range")));
            }
            if !r.is_unit() {
                return Err(Error::InvalidInput(format!("r_({i},{j}) is not a unit")));
            }
        }
        for &(i, j) in rel_h.keys() {
            if i <= j || i >= n {
                return Err(Error::InvalidInput(format!("relation pair ({i},{j}) out of range")));
            }
        }
        Ok(Algebra {
            n,
            vars,
            family: AlgebraFamily::Custom,
            rel_r,
            rel_h,
            subring_closed,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// The ordinary commutative polynomial ring in n variables.
    pub fn commutative(n: usize) -> Self {
        Algebra {
            n,
            vars: default_names(n, "x"),
            family: AlgebraFamily::Commutative,
            rel_r: HashMap::new(),
            rel_h: HashMap::new(),
            subring_closed: true,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// The Weyl algebra W_m: variables x_1..x_m, ∂_1..∂_m with
    /// ∂_i ⋆ x_i = x_i ∂_i + 1.
    pub fn weyl(m: usize) -> Self {
        let mut vars = default_names(m, "x");
        let xnames = vars.clone();
        vars.extend(xnames.iter().map(|x| format!("d{x}")));
        let mut rel_h = HashMap::new();
        for i in 0..m {
            rel_h.insert(
                (m + i, i),
                vec![(MultiIndex::zero(2 * m), C::one())],
            );
        }
        Algebra {
            n: 2 * m,
            vars,
            family: AlgebraFamily::Weyl,
            rel_r: HashMap::new(),
            rel_h,
            subring_closed: true,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Shift operator algebra: x_1..x_m, s_1..s_m with s_i ⋆ x_i = (x_i+1) s_i.
    pub fn ore_shift(m: usize) -> Self {
        let mut vars = default_names(m, "x");
        let xnames = vars.clone();
        vars.extend(xnames.iter().map(|x| format!("s{x}")));
        let mut rel_h = HashMap::new();
        for i in 0..m {
            rel_h.insert(
                (m + i, i),
                vec![(MultiIndex::unit(2 * m, m + i), C::one())],
            );
        }
        Algebra {
            n: 2 * m,
            vars,
            family: AlgebraFamily::OreShift,
            rel_r: HashMap::new(),
            rel_h,
            subring_closed: true,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Forward-difference operator algebra: Δ_i ⋆ x_i = x_i Δ_i + Δ_i + 1.
    pub fn ore_difference(m: usize) -> Self {
        let mut vars = default_names(m, "x");
        let xnames = vars.clone();
        vars.extend(xnames.iter().map(|x| format!("D{x}")));
        let mut rel_h = HashMap::new();
        for i in 0..m {
            rel_h.insert(
                (m + i, i),
                vec![
                    (MultiIndex::unit(2 * m, m + i), C::one()),
                    (MultiIndex::zero(2 * m), C::one()),
                ],
            );
        }
        Algebra {
            n: 2 * m,
            vars,
            family: AlgebraFamily::OreDifference,
            rel_r: HashMap::new(),
            rel_h,
            subring_closed: true,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Universal enveloping algebra of a Lie algebra given by commutators:
    /// `comm[(i,j)]` for i > j lists (k, c) with [x_i, x_j] = Σ c x_k.
    /// Structure constants are validated against the Jacobi identity.
    pub fn enveloping(
        vars: Vec<String>,
        comm: HashMap<(usize, usize), Vec<(usize, C)>>,
    ) -> Result<Self> {
        let n = vars.len();
        // Bracket [a, b] as a coefficient vector over the basis.
        let bracket = |a: usize, b: usize| -> Vec<C> {
            let mut v = vec![C::zero(); n];
            let (key, sign) = if a > b {
                ((a, b), false)
            } else if b > a {
                ((b, a), true)
            } else {
                return v;
            };
            if let Some(terms) = comm.get(&key) {
                for (k, c) in terms {
                    let c = if sign { -c.clone() } else { c.clone() };
                    v[*k] = v[*k].clone() + c;
                }
            }
            v
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0
                    let mut acc = vec![C::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = bracket(a, b);
                        for (l, cl) in inner.iter().enumerate() {
                            if !cl.is_zero() {
                                let outer = bracket(l, c);
                                for (m, cm) in outer.iter().enumerate() {
                                    acc[m] = acc[m].clone() + cl.clone() * cm.clone();
                                }
                            }
                        }
                    }
                    if acc.iter().any(|c| !c.is_zero()) {
                        return Err(Error::InvalidInput(format!(
                            "structure constants violate the Jacobi identity at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        let mut rel_h = HashMap::new();
        for (&(i, j), terms) in &comm {
            if i <= j || i >= n {
                return Err(Error::InvalidInput("bad commutator pair".into()));
            }
            let h: Vec<(MultiIndex, C)> = terms
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (MultiIndex::unit(n, *k), c.clone()))
                .collect();
            if !h.is_empty() {
                rel_h.insert((i, j), h);
            }
        }
        Ok(Algebra {
            n,
            vars,
            family: AlgebraFamily::Enveloping,
            rel_r: HashMap::new(),
            rel_h,
            subring_closed: false,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// U(so(3)): [x₂,x₁] = −x₃, [x₃,x₁] = x₂, [x₃,x₂] = −x₁.
    pub fn enveloping_so3() -> Self {
        let mut comm = HashMap::new();
        comm.insert((1usize, 0usize), vec![(2usize, -C::one())]);
        comm.insert((2, 0), vec![(1, C::one())]);
        comm.insert((2, 1), vec![(0, -C::one())]);
        Algebra::enveloping(
            vec!["x1".into(), "x2".into(), "x3".into()],
            comm,
        )
        .expect("so(3) satisfies Jacobi")
    }

    /// The q-deformed Heisenberg algebra on (x, t, d):
    /// t⋆x = q x t, d⋆x = x d + t, d⋆t = q t d. Requires q ≠ 0, 1.
    pub fn q_heisenberg(q: C) -> Result<Self> {
        if q.is_zero() || q.is_one() {
            return Err(Error::InvalidInput("q must differ from 0 and 1".into()));
        }
        let mut rel_r = HashMap::new();
        rel_r.insert((1usize, 0usize), q.clone());
        rel_r.insert((2, 1), q);
        let mut rel_h = HashMap::new();
        rel_h.insert((2usize, 0usize), vec![(MultiIndex::unit(3, 1), C::one())]);
        Ok(Algebra {
            n: 3,
            vars: vec!["x".into(), "t".into(), "d".into()],
            family: AlgebraFamily::QHeisenberg,
            rel_r,
            rel_h,
            subring_closed: false,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// The extension by a central homogenization variable inserted at
    /// position 0. The commutation tails are homogenized to degree 2 (e.g.
    /// ∂ ⋆ x = x∂ + x₀² in the extended Weyl algebra), so that the extended
    /// product preserves homogeneity — products of homogenizations stay
    /// homogeneous, which the dehomogenization argument requires.
    pub fn extended(&self) -> Algebra<C> {
        let mut vars = vec!["x0".to_string()];
        vars.extend(self.vars.iter().cloned());
        let rel_r = self
            .rel_r
            .iter()
            .map(|(&(i, j), r)| ((i + 1, j + 1), r.clone()))
            .collect();
        let rel_h: HashMap<(usize, usize), Vec<(MultiIndex, C)>> = self
            .rel_h
            .iter()
            .map(|(&(i, j), h)| {
                (
                    (i + 1, j + 1),
                    h.iter()
                        .map(|(m, c)| (m.insert(0, 2u64.saturating_sub(m.degree()) as u32), c.clone()))
                        .collect(),
                )
            })
            .collect();
        // Tails now involve x₀, so proper variable subsets no longer span
        // subrings unless all tails vanish.
        let subring_closed = self.subring_closed && rel_h.is_empty();
        Algebra {
            n: self.n + 1,
            vars,
            family: AlgebraFamily::Custom,
            rel_r,
            rel_h,
            subring_closed,
            cache: Mutex::new(HashMap::new()),
        }
    }

    fn rel(&self, i: usize, j: usize) -> (C, Vec<(MultiIndex, C)>) {
        debug_assert!(i > j);
        (
            self.rel_r.get(&(i, j)).cloned().unwrap_or_else(C::one),
            self.rel_h.get(&(i, j)).cloned().unwrap_or_default(),
        )
    }

    /// Whether the product of any two monomials is again a single monomial
    /// scaled by a unit (no tails).
    pub fn is_commutative(&self) -> bool {
        self.family == AlgebraFamily::Commutative
    }

    // -- the ⋆ product ------------------------------------------------------

    /// x_i ⋆ x^ν as a term map.
    fn star_var_mono(&self, i: usize, nu: &MultiIndex) -> Result<TermMap<C>> {
        let mut out = TermMap::new();
        match nu.class() {
            None => {
                out.insert(MultiIndex::unit(self.n, i), C::one());
                Ok(out)
            }
            Some(j) if i <= j => {
                out.insert(nu.checked_bump(i)?, C::one());
                Ok(out)
            }
            Some(j) => {
                // x_i ⋆ x_j ⋆ x^rest = r_ij x_j ⋆ (x_i ⋆ x^rest) + h_ij ⋆ x^rest
                let mut rest = nu.clone();
                rest.0[j] -= 1;
                let inner = self.star_var_mono(i, &rest)?;
                let (r, h) = self.rel(i, j);
                for (m, c) in inner {
                    let swapped = self.star_var_mono(j, &m)?;
                    let rc = r.clone() * c;
                    add_scaled(&mut out, &swapped, &rc);
                }
                for (lam, c) in &h {
                    let tail = self.star_mono_mono(lam, &rest)?;
                    add_scaled(&mut out, &tail, c);
                }
                Ok(out)
            }
        }
    }

    /// x^μ ⋆ x^ν as a term map (memoized).
    pub fn star_mono_mono(&self, mu: &MultiIndex, nu: &MultiIndex) -> Result<TermMap<C>> {
        if self.is_commutative() {
            let mut out = TermMap::new();
            out.insert(mu.checked_add(nu)?, C::one());
            return Ok(out);
        }
        let key = (mu.clone(), nu.clone());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.iter().cloned().collect());
        }
        let out = if let Some((kind, m)) = self.ore_kind() {
            self.ore_star_mono_mono(kind, m, mu, nu)?
        } else {
            match mu.class() {
                None => {
                    let mut out = TermMap::new();
                    out.insert(nu.clone(), C::one());
                    out
                }
                Some(i) => {
                    let mut rest = mu.clone();
                    rest.0[i] -= 1;
                    let inner = self.star_mono_mono(&rest, nu)?;
                    let mut out = TermMap::new();
                    for (m, c) in inner {
                        let lifted = self.star_var_mono(i, &m)?;
                        add_scaled(&mut out, &lifted, &c);
                    }
                    out
                }
            }
        };
        self.cache
            .lock()
            .unwrap()
            .insert(key, out.iter().map(|(m, c)| (m.clone(), c.clone())).collect());
        Ok(out)
    }

    /// x^μ ⋆ f.
    pub fn star_mono_poly(&self, mu: &MultiIndex, f: &Poly<C>, order: &OrderSpec) -> Result<Poly<C>> {
        let mut out = TermMap::new();
        for (nu, c) in &f.terms {
            let prod = self.star_mono_mono(mu, nu)?;
            add_scaled(&mut out, &prod, c);
        }
        Ok(Poly::from_map(out, order))
    }

    /// f ⋆ g (coefficients are central, so f ⋆ g = Σ_μ c_μ (x^μ ⋆ g)).
    pub fn multiply(&self, f: &Poly<C>, g: &Poly<C>, order: &OrderSpec) -> Result<Poly<C>> {
        let mut out = TermMap::new();
        for (mu, a) in &f.terms {
            for (nu, b) in &g.terms {
                let prod = self.star_mono_mono(mu, nu)?;
                let ab = a.clone() * b.clone();
                add_scaled(&mut out, &prod, &ab);
            }
        }
        Ok(Poly::from_map(out, order))
    }

    // -- Ore closed form ----------------------------------------------------

    fn ore_kind(&self) -> Option<(OreKind, usize)> {
        match self.family {
            AlgebraFamily::Weyl => Some((OreKind::Weyl, self.n / 2)),
            AlgebraFamily::OreShift => Some((OreKind::Shift, self.n / 2)),
            AlgebraFamily::OreDifference => Some((OreKind::Difference, self.n / 2)),
            _ => None,
        }
    }

    /// Closed form for the Ore families:
    /// x^α ∂^μ ⋆ x^β ∂^ν = x^α · Σ_{λ ≤ μ} C(μ,λ) σ^λ(δ^{μ−λ}(x^β)) ∂^{λ+ν}.
    fn ore_star_mono_mono(
        &self,
        kind: OreKind,
        m: usize,
        mu: &MultiIndex,
        nu: &MultiIndex,
    ) -> Result<TermMap<C>> {
        let alpha = MultiIndex(mu.0[..m].to_vec());
        let dmu = MultiIndex(mu.0[m..].to_vec());
        let beta = MultiIndex(nu.0[..m].to_vec());
        let dnu = MultiIndex(nu.0[m..].to_vec());
        let mut out = TermMap::new();
        // Enumerate λ ≤ dmu componentwise.
        let mut lambdas = vec![MultiIndex::zero(m)];
        for i in 0..m {
            let mut next = Vec::new();
            for l in &lambdas {
                for e in 0..=dmu.0[i] {
                    let mut v = l.clone();
                    v.0[i] = e;
                    next.push(v);
                }
            }
            lambdas = next;
        }
        for lam in lambdas {
            let kappa = dmu.checked_sub(&lam).unwrap();
            // δ^κ then σ^λ on x^β.
            let mut xpart: TermMap<C> = TermMap::new();
            xpart.insert(beta.clone(), C::one());
            for i in 0..m {
                for _ in 0..kappa.0[i] {
                    xpart = apply_delta(kind, i, &xpart);
                }
            }
            if matches!(kind, OreKind::Shift | OreKind::Difference) {
                for i in 0..m {
                    if lam.0[i] > 0 {
                        xpart = apply_shift(i, lam.0[i] as i64, &xpart);
                    }
                }
            }
            let coeff = C::from_int(multi_binomial(&dmu, &lam));
            if coeff.is_zero() {
                continue;
            }
            let dpart = lam.checked_add(&dnu)?;
            for (gamma, c) in xpart {
                let full_x = alpha.checked_add(&gamma)?;
                let mut exp = full_x.0;
                exp.extend_from_slice(&dpart.0);
                let key = MultiIndex(exp);
                let add = coeff.clone() * c;
                let entry = out.entry(key).or_insert_with(C::zero);
                *entry = entry.clone() + add;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum OreKind {
    Weyl,
    Shift,
    Difference,
}

fn add_scaled<C: Scalar>(acc: &mut TermMap<C>, terms: &TermMap<C>, scale: &C) {
    for (m, c) in terms {
        let add = scale.clone() * c.clone();
        if add.is_zero() {
            continue;
        }
        let entry = acc.entry(m.clone()).or_insert_with(C::zero);
        *entry = entry.clone() + add;
    }
    acc.retain(|_, c| !c.is_zero());
}

fn binomial(a: u32, b: u32) -> i64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i64 = 1;
    for i in 0..b {
        acc = acc
            .checked_mul((a - i) as i64)
            .and_then(|v| v.checked_div((i + 1) as i64))
            .expect("binomial overflow");
    }
    acc
}

fn multi_binomial(a: &MultiIndex, b: &MultiIndex) -> i64 {
    a.0.iter()
        .zip(&b.0)
        .map(|(&x, &y)| binomial(x, y))
        .product()
}

/// One application of the family's δ_i to a commutative x-part polynomial.
fn apply_delta<C: Scalar>(kind: OreKind, i: usize, f: &TermMap<C>) -> TermMap<C> {
    match kind {
        OreKind::Weyl => {
            // Formal partial derivative.
            let mut out = TermMap::new();
            for (m, c) in f {
                if m.0[i] == 0 {
                    continue;
                }
                let mut v = m.clone();
                v.0[i] -= 1;
                let add = C::from_int(m.0[i] as i64) * c.clone();
                let entry = out.entry(v).or_insert_with(C::zero);
                *entry = entry.clone() + add;
            }
            out.retain(|_, c| !c.is_zero());
            out
        }
        OreKind::Shift => TermMap::new(),
        OreKind::Difference => {
            // Δ_i f = f(x + 1_i) − f.
            let mut out = apply_shift(i, 1, f);
            for (m, c) in f {
                let entry = out.entry(m.clone()).or_insert_with(C::zero);
                *entry = entry.clone() - c.clone();
            }
            out.retain(|_, c| !c.is_zero());
            out
        }
    }
}

/// Substitute x_i → x_i + a.
fn apply_shift<C: Scalar>(i: usize, a: i64, f: &TermMap<C>) -> TermMap<C> {
    let mut out = TermMap::new();
    for (m, c) in f {
        let b = m.0[i];
        for j in 0..=b {
            // C(b, j) a^{b−j} x_i^j
            let mut pow = C::one();
            for _ in 0..(b - j) {
                pow = pow * C::from_int(a);
            }
            let coeff = C::from_int(binomial(b, j)) * pow * c.clone();
            if coeff.is_zero() {
                continue;
            }
            let mut v = m.clone();
            v.0[i] = j;
            let entry = out.entry(v).or_insert_with(C::zero);
            *entry = entry.clone() + coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

// -- homogenization ---------------------------------------------------------

/// Homogenize f over n+1 variables (entry 0 = homogenization variable):
/// f^(h) = Σ c_μ x₀^{q−|μ|} x^μ with q = deg f. Terms re-sorted under the
/// lifted order.
pub fn homogenize<C: Scalar>(f: &Poly<C>, lifted_order: &OrderSpec) -> Poly<C> {
    if f.is_zero() {
        return Poly::zero();
    }
    let q = f.degree().unwrap();
    let mut map = BTreeMap::new();
    for (m, c) in &f.terms {
        map.insert(m.insert(0, (q - m.degree()) as u32), c.clone());
    }
    Poly::from_map(map, lifted_order)
}

/// Set x₀ = 1 and re-sort under the base order.
pub fn dehomogenize<C: Scalar>(f: &Poly<C>, base_order: &OrderSpec) -> Poly<C> {
    let mut map: BTreeMap<MultiIndex, C> = BTreeMap::new();
    for (m, c) in &f.terms {
        let v = m.remove(0);
        let entry = map.entry(v).or_insert_with(C::zero);
        *entry = entry.clone() + c.clone();
    }
    Poly::from_map(map, base_order)
}

// -- validation ---------------------------------------------------------

/// Result of validating an algebra against an order.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    /// le(x^μ ⋆ x^ν) = μ + ν with unit leading coefficient for all checked
    /// pairs; the witness is the first failing pair.
    pub axiom_iii_ok: bool,
    pub axiom_iii_witness: Option<(MultiIndex, MultiIndex)>,
    /// (x^μ ⋆ x^ν) ⋆ x^λ = x^μ ⋆ (x^ν ⋆ x^λ) for all checked triples.
    pub associativity_ok: bool,
    pub associativity_witness: Option<(MultiIndex, MultiIndex, MultiIndex)>,
    /// All commutation scalars lie in the central coefficient domain. True
    /// by construction for every supported algebra (coefficients never act).
    pub centred: bool,
    pub degree_cap: u32,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.axiom_iii_ok && self.associativity_ok
    }
}

/// Check axiom (iii) up to `degree_cap` and sampled associativity.
pub fn validate<C: Scalar>(
    algebra: &Algebra<C>,
    order: &OrderSpec,
    degree_cap: u32,
) -> Result<ValidationReport> {
    let n = algebra.n;
    let monos = multi_indices_up_to_degree(n, degree_cap);
    let mut report = ValidationReport {
        axiom_iii_ok: true,
        axiom_iii_witness: None,
        associativity_ok: true,
        associativity_witness: None,
        centred: true,
        degree_cap,
    };
    'outer: for mu in &monos {
        for nu in &monos {
            let p = Poly::from_map(algebra.star_mono_mono(mu, nu)?, order);
            let expected = mu.checked_add(nu)?;
            if p.is_zero() || *p.le() != expected || !p.lc().is_unit() {
                report.axiom_iii_ok = false;
                report.axiom_iii_witness = Some((mu.clone(), nu.clone()));
                break 'outer;
            }
        }
    }
    // Associativity on a smaller grid (cubic in the number of monomials).
    let assoc_cap = if n <= 3 { degree_cap.min(2) } else { 1 };
    let small = multi_indices_up_to_degree(n, assoc_cap);
    'assoc: for mu in &small {
        for nu in &small {
            let ab = algebra.star_mono_mono(mu, nu)?;
            for lam in &small {
                let bc = algebra.star_mono_mono(nu, lam)?;
                // (ab) ⋆ x^λ
                let mut left = TermMap::new();
                for (m, c) in &ab {
                    let t = algebra.star_mono_mono(m, lam)?;
                    add_scaled(&mut left, &t, c);
                }
                // x^μ ⋆ (bc)
                let mut right = TermMap::new();
                for (m, c) in &bc {
                    let t = algebra.star_mono_mono(mu, m)?;
                    add_scaled(&mut right, &t, c);
                }
                if left != right {
                    report.associativity_ok = false;
                    report.associativity_witness =
                        Some((mu.clone(), nu.clone(), lam.clone()));
                    break 'assoc;
                }
            }
        }
    }
    Ok(report)
}

impl<C: Scalar> Algebra<C> {
    /// Rewriting-only product, bypassing the Ore closed form. Used to
    /// cross-check the closed form in tests.
    pub fn star_mono_mono_rewriting(
        &self,
        mu: &MultiIndex,
        nu: &MultiIndex,
    ) -> Result<TermMap<C>> {
        match mu.class() {
            None => {
                let mut out = TermMap::new();
                out.insert(nu.clone(), C::one());
                Ok(out)
            }
            Some(i) => {
                let mut rest = mu.clone();
                rest.0[i] -= 1;
                let inner = self.star_mono_mono_rewriting(&rest, nu)?;
                let mut out = TermMap::new();
                for (m, c) in inner {
                    let lifted = self.star_var_mono(i, &m)?;
                    add_scaled(&mut out, &lifted, &c);
                }
                Ok(out)
            }
        }
    }
}
