//! Flag enumeration, ab- and cd-indices, local indices, subdivisions and toric polynomials of
//! graded posets and simplicial complexes.
//!
//! All arithmetic is exact over arbitrary-precision integers.

pub mod complex;
pub mod error;
pub mod flag;
pub mod io;
pub mod ncpoly;
pub mod poset;
pub mod subdivision;
pub mod toric;

pub use error::{Error, Result};
pub use flag::{ab_index, cd_index, flag_f, flag_h, flag_polynomial, local_index, FlagVector, LocalIndex};
pub use ncpoly::{Ab, AbPolynomial, Cd, CdPolynomial, NcPolynomial, UniPolynomial, Word};
pub use poset::{build_poset, GradedPoset};
pub use subdivision::{decompose_cd, SubdivisionMap};
pub use toric::{g_poly, h_poly, local_h, morphism_f, morphism_g, toric_h, verify_local_correspondence};
