//! Exact arithmetic in Hurwitz polynomial rings `hR`.
//!
//! `hR` is the ring of finitely supported sequences over a commutative ring
//! `R` under the binomial-convolution product. Over characteristic-0 domains
//! it is isomorphic to `F[x]` through the divided-factorial transform, which
//! is how the ideal-theoretic questions (closed ideals, primality,
//! maximality) are decided here. Every positive or negative answer about
//! maximality comes with a witness that can be re-checked by direct
//! arithmetic.

pub mod binomial;
pub mod error;
pub mod hurwitz;
pub mod ideal;
pub mod irreducible;
pub mod lattice;
pub mod maximality;
pub mod modular;
pub mod ordinary;
pub mod ring;
pub mod text;

pub use error::{Error, Result};
pub use hurwitz::{HurwitzPoly, Stats};
pub use ideal::{mk_closed, ClosedIdeal, TauRho};
pub use irreducible::{FactorizationResult, DEFAULT_DEGREE_CAP};
pub use maximality::{Lemma21Outcome, MaximalityVerdict};
pub use modular::ModulusRing;
pub use ordinary::OrdinaryPoly;
pub use ring::{CoeffRing, Exact, Prime, PseudoRadical, RingElem, RingId};
pub use text::{format_poly, parse_poly};

/// Hurwitz polynomials over one of the runtime-selected rings.
pub type Hurwitz = HurwitzPoly<RingId>;
/// Hurwitz polynomials over `Z/m`.
pub type HurwitzMod = HurwitzPoly<ModulusRing>;
/// Hurwitz polynomials over arbitrary-precision integers.
pub type HurwitzInt = HurwitzPoly<Exact<num_bigint::BigInt>>;
/// Hurwitz polynomials over arbitrary-precision rationals.
pub type HurwitzRat = HurwitzPoly<Exact<num_rational::BigRational>>;
