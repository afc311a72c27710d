//! Exact-arithmetic involutive bases (Janet and Pommaret divisions) for
//! left, right, and two-sided ideals in polynomial algebras of solvable
//! type: commutative rings, Weyl/Ore operator algebras, enveloping
//! algebras, and q-deformed Heisenberg algebras. Supports monoid term
//! orders, semigroup (local) orders via homogenization or the Mora normal
//! form, and coefficient rings (ℤ, ℚ[t]) via R-saturation, with a
//! Buchberger/brute-force oracle for independent validation.

pub mod algebra;
pub mod completion;
pub mod divisions;
pub mod error;
pub mod expr;
pub mod local;
pub mod mono_completion;
pub mod multiindex;
pub mod oracle;
pub mod orders;
pub mod poly;
pub mod reduction;
pub mod ringcoeff;
pub mod scalar;

pub use error::{Error, Result};
pub use multiindex::MultiIndex;
pub use orders::{OrderKind, OrderSpec};
pub use divisions::{DivisionKind, DivisionSpec};
pub use poly::Poly;
pub use algebra::{Algebra, AlgebraFamily};
pub use mono_completion::Strength;

/// Polynomial over ℚ.
pub type QPoly = Poly<num_rational::BigRational>;
/// Polynomial over ℤ.
pub type ZPoly = Poly<num_bigint::BigInt>;
/// Polynomial over ℚ[t].
pub type QtPoly = Poly<scalar::RatPoly>;
/// Polynomial over 𝔽_p.
pub type FpPoly<const P: u64> = Poly<scalar::Fp<P>>;
