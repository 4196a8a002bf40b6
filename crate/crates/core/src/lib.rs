//! Symmetric geometric rank (SGR) and geometric rank (GR) of tensors.
//!
//! The SGR of a symmetric tensor is the codimension of the singular locus
//! of the hypersurface cut out by its associated form. It is computed
//! exactly: build the Jacobian ideal, take a reduced Groebner basis over
//! the rationals or a prime field, and read the dimension off the initial
//! ideal.

pub mod error;
pub mod groebner;
pub mod polyring;
pub mod rank;
pub mod strata;
pub mod tensor;

pub use error::{Error, Result};
