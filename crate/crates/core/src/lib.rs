//! Exact-arithmetic toolkit for symmetric determinantal representations
//! of smooth plane curves over fields of characteristic two.
//!
//! A plane curve of degree d admits a symmetric determinantal
//! representation when it is cut out by det(M) = 0 for a symmetric d x d
//! matrix M of linear forms. In characteristic two existence is governed
//! by ordinariness of the Jacobian (decided here through the Hasse-Witt
//! matrix) and, over non-perfect fields, by square-root obstructions that
//! this crate computes exactly. Everything runs over exact coefficient
//! fields: GF(2^k), the rational function field F_q(T) with its places
//! and completions, and symbolic rational function fields for identity
//! checking.

pub mod census;
pub mod conic;
pub mod cubic;
pub mod field;
pub mod form;
pub mod funcfield;
pub mod gf;
pub mod hassewitt;
pub mod mat;
pub mod parse;
pub mod poly;
pub mod symrat;

pub use field::{Field, FiniteField};
pub use form::{Equivalence, LinearForm, LinearPencil, Mono, TernaryForm};
pub use funcfield::{
    places_up_to, Completion, LaurentSeries, Place, RatFunc, RatFuncField, SquareVerdict,
};
pub use gf::{GaloisField, GfElem};
pub use mat::Mat;
pub use poly::Poly;
pub use symrat::{QuadExt, SymField};
