//! Exact point counting on a fibre product of elliptic surfaces, Frobenius
//! traces with values in Z[ζ], and numerical verification of the conjectured
//! functional equation of the attached degree-4 L-function.
//!
//! The pipeline, bottom up:
//! - [`arith`]: prime fields and small extensions, Eisenstein integers,
//!   arbitrary-precision real/complex numbers.
//! - [`cubiccover`]: the degree-3 base change t = (s³−3s²+1)/(3s²−3s) and the
//!   induced partition of the t-line over F_q.
//! - [`weierstrass`]: Weierstrass models over Q[t], reduction mod p, fibre
//!   counting and multiplicative-fibre classification.
//! - [`surfrep`]: traces of Frobenius twisted by the order-3 deck
//!   transformation on base-changed elliptic surfaces, and characteristic
//!   polynomials on the ζ-eigenspace.
//! - [`threefoldrep`]: the same machinery on the blown-up fibre product of
//!   two such surfaces; produces the a_p, b_p and the degree-4 local factors.
//! - [`lseries`]: Dirichlet coefficients, the Mellin kernel F(x) = 2x·K₂(2√x),
//!   root-number solving and the value at s = 2.
//! - [`oracle`]: brute-force enumeration counterparts used by the test suite
//!   and the CLI self test; kept independent of the production counting path.

pub mod arith;
pub mod charpoly;
pub mod cubiccover;
pub mod error;
pub mod gallery;
pub mod lseries;
pub mod oracle;
pub mod surfrep;
pub mod threefoldrep;
pub mod weierstrass;

pub use arith::big::{BigComplex, BigReal};
pub use arith::eis::{EisInt, Unit};
pub use arith::frac::EisFrac;
pub use arith::fq::{FqElem, FqField};
pub use error::Error;
