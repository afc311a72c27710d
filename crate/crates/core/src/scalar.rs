//! Coefficient domains.
//!
//! The whole crate is generic over the coefficient scalar. Three levels of
//! capability are distinguished:
//!
//! * [`Scalar`] — a commutative domain with exact arithmetic (enough for
//!   polynomial arithmetic and product tables);
//! * [`FieldScalar`] — a field (enough for ordinary and involutive reduction
//!   with unit leading coefficients);
//! * [`EuclideanScalar`] — a Euclidean domain with an effective extended gcd
//!   (enough for the ring-coefficient algorithms, which need ideal
//!   membership with certificates and finite syzygy bases).
//!
//! Concrete instances: `BigRational` (ℚ), [`Fp`] (𝔽_p), `BigInt` (ℤ) and
//! [`RatPoly`] (ℚ[t]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact arithmetic in a commutative integral domain.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    /// Is this element invertible in the domain?
    fn is_unit(&self) -> bool;

    /// Exact division: returns `q` with `self = q * other` if it exists.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    /// The canonical image of an integer.
    fn from_int(v: i64) -> Self;

    /// The image of a rational number, if it exists in the domain.
    fn from_rational(r: &BigRational) -> Option<Self>;
}

/// A field: every nonzero element is a unit.
pub trait FieldScalar: Scalar {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
}

/// A Euclidean domain with effective extended gcd.
pub trait EuclideanScalar: Scalar {
    /// Euclidean division: `self = q * other + r` with `r` strictly smaller
    /// than `other` in the Euclidean norm (or zero).
    fn div_rem(&self, other: &Self) -> (Self, Self);

    /// Extended gcd: returns `(g, a, b)` with `a*self + b*other = g` and `g`
    /// in canonical associate form.
    fn xgcd(&self, other: &Self) -> (Self, Self, Self);

    /// The canonical associate of `self` together with the unit `u` such
    /// that `canonical = u * self` (e.g. |n| for ℤ, monic for ℚ[t]).
    fn canonical_associate(&self) -> (Self, Self);
}

// ---------------------------------------------------------------------------
// ℚ
// ---------------------------------------------------------------------------

impl Scalar for BigRational {
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(r.clone())
    }
}

impl FieldScalar for BigRational {
    fn inv(&self) -> Self {
        BigRational::one() / self
    }
}

// ---------------------------------------------------------------------------
// ℤ
// ---------------------------------------------------------------------------

impl Scalar for BigInt {
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = Integer::div_rem(self, other);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        if r.denom().abs().is_one() {
            Some(r.numer() / r.denom())
        } else {
            None
        }
    }
}

/// A field is trivially Euclidean (every nonzero element divides every
/// other, all gcds are 1), so the ring-coefficient pipelines specialize to
/// ordinary field reductions when instantiated over ℚ.
impl EuclideanScalar for BigRational {
    fn div_rem(&self, other: &Self) -> (Self, Self) {
        (self / other, BigRational::zero())
    }

    fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        if !self.is_zero() {
            (BigRational::one(), self.recip(), BigRational::zero())
        } else if !other.is_zero() {
            (BigRational::one(), BigRational::zero(), other.recip())
        } else {
            (BigRational::zero(), BigRational::zero(), BigRational::zero())
        }
    }

    fn canonical_associate(&self) -> (Self, Self) {
        if self.is_zero() {
            (BigRational::zero(), BigRational::one())
        } else {
            (BigRational::one(), self.recip())
        }
    }
}

impl EuclideanScalar for BigInt {
    fn div_rem(&self, other: &Self) -> (Self, Self) {
        Integer::div_rem(self, other)
    }

    fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let e = self.extended_gcd(other);
        (e.gcd, e.x, e.y)
    }

    fn canonical_associate(&self) -> (Self, Self) {
        if self.is_negative() {
            (-self, -BigInt::one())
        } else {
            (self.clone(), BigInt::one())
        }
    }
}

// ---------------------------------------------------------------------------
// 𝔽_p
// ---------------------------------------------------------------------------

/// Prime field of order `P` (a compile-time prime `< 2^31`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn is_unit(&self) -> bool {
        self.0 != 0
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.0 == 0 {
            None
        } else {
            Some(*self * other.inv())
        }
    }

    fn from_int(v: i64) -> Self {
        Fp::new(v)
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        use num_traits::ToPrimitive;
        let num = Fp::<P>::new((r.numer() % BigInt::from(P)).to_i64()?);
        let den = Fp::<P>::new((r.denom() % BigInt::from(P)).to_i64()?);
        if den.0 == 0 {
            None
        } else {
            Some(num * den.inv())
        }
    }
}

impl<const P: u64> FieldScalar for Fp<P> {
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P - 2)
    }
}

// ---------------------------------------------------------------------------
// ℚ[t]
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over ℚ, used as a Euclidean coefficient
/// domain. The coefficient vector has no trailing zeros; the zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        RatPoly(c)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable t.
    pub fn var() -> Self {
        RatPoly(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.0.last()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for RatPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in self.0.into_iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.0.into_iter().enumerate() {
            v[i] += c;
        }
        Self::from_coeffs(v)
    }
}

impl Sub for RatPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RatPoly {
    type Output = Self;
    fn neg(self) -> Self {
        RatPoly(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Mul for RatPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.0.is_empty() || rhs.0.is_empty() {
            return RatPoly(vec![]);
        }
        let mut v = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::from_coeffs(v)
    }
}

impl Zero for RatPoly {
    fn zero() -> Self {
        RatPoly(vec![])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for RatPoly {
    fn one() -> Self {
        RatPoly(vec![BigRational::one()])
    }
}

impl Scalar for RatPoly {
    fn is_unit(&self) -> bool {
        self.0.len() == 1
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = EuclideanScalar::div_rem(self, other);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    fn from_int(v: i64) -> Self {
        RatPoly::constant(BigRational::from_integer(BigInt::from(v)))
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(RatPoly::constant(r.clone()))
    }
}

impl EuclideanScalar for RatPoly {
    fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![BigRational::zero(); self.0.len().saturating_sub(other.0.len() - 1)];
        let dlead = other.leading_coeff().unwrap().clone();
        let dd = other.0.len() - 1;
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap() / &dlead;
            let shift = rd - dd;
            quot[shift] = c.clone();
            let mut v = rem.0.clone();
            for (j, b) in other.0.iter().enumerate() {
                v[j + shift] -= &c * b;
            }
            rem = RatPoly::from_coeffs(v);
        }
        (RatPoly::from_coeffs(quot), rem)
    }

    fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        // Standard iterative extended Euclid, then normalize to monic gcd.
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
        let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = EuclideanScalar::div_rem(&r0, &r1);
            let s = s0 - q.clone() * s1.clone();
            let t = t0 - q * t1.clone();
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let (g, u) = r0.canonical_associate();
        (g, u.clone() * s0, u * t0)
    }

    fn canonical_associate(&self) -> (Self, Self) {
        match self.leading_coeff() {
            None => (RatPoly::zero(), RatPoly::one()),
            Some(lc) => {
                let u = RatPoly::constant(BigRational::one() / lc);
                (u.clone() * self.clone(), u)
            }
        }
    }
}

/// Convenience: a rational from an integer.
pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_xgcd_is_a_bezout_identity() {
        let a = BigInt::from(2);
        let b = BigInt::from(3);
        let (g, x, y) = EuclideanScalar::xgcd(&a, &b);
        assert_eq!(g, BigInt::one());
        assert_eq!(&x * &a + &y * &b, g);
    }

    #[test]
    fn fp_inverse() {
        type F = Fp<101>;
        for v in 1..101i64 {
            let x = F::new(v);
            assert_eq!(x * x.inv(), F::new(1));
        }
    }

    #[test]
    fn ratpoly_divmod_and_gcd() {
        // (t^2 - 1) = (t + 1)(t - 1)
        let p = RatPoly::from_coeffs(vec![q(-1), q(0), q(1)]);
        let d = RatPoly::from_coeffs(vec![q(1), q(1)]);
        let (quot, rem) = EuclideanScalar::div_rem(&p, &d);
        assert!(rem.is_zero());
        assert_eq!(quot, RatPoly::from_coeffs(vec![q(-1), q(1)]));

        let (g, a, b) = EuclideanScalar::xgcd(&p, &d);
        assert_eq!(g, d.canonical_associate().0);
        assert_eq!(a * p + b * d.clone(), g);
    }

    #[test]
    fn ratpoly_exact_div_rejects_inexact() {
        let p = RatPoly::from_coeffs(vec![q(1), q(0), q(1)]); // t^2 + 1
        let d = RatPoly::from_coeffs(vec![q(1), q(1)]); // t + 1
        assert!(p.exact_div(&d).is_none());
        let prod = p.clone() * d.clone();
        assert_eq!(prod.exact_div(&d), Some(p));
    }
}
