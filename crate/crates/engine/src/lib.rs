//! Real interior transmission eigenvalues of the unit disk and ball with a
//! constant refractive index, their boundary-energy ratios, and the density of
//! surface-localized modes.

pub mod bounds;
pub mod cli;
pub mod density;
pub mod eigensolve;
pub mod error;
pub mod localization;
pub mod oracle;
pub mod specfun;

pub use error::{Error, Result};
