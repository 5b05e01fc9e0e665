//! Exact sl(2)-characters of simple bounded generalized Harish-Chandra
//! modules for the rank-two pairs `(g, k)`, together with the boundedness
//! gate for general reductive pairs.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! and half-integer parameters are stored doubled.

pub mod error;
pub mod gate;
pub mod module_id;
pub mod params;
pub mod root_data;
pub mod series;
pub mod sl2sl2;
pub mod sl3_principal;
pub mod sl3_root;
pub mod sp4_principal;
pub mod sp4_root;
pub mod verify;

pub use error::{Error, Result};
pub use series::{KCharacter, LaurentPoly, RationalChar, Q};
