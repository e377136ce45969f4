//! Exact computation of the coefficients of
//! `prod_{j >= 1} (1 - u^j)^(-sigma(j))` and of `T(n) / n!`, where `T(n)`
//! counts ordered triples of pairwise-commuting permutations in `S_n`.
//!
//! Three independent routes produce the same sequence:
//!
//! * [`pipeline::coeffs_product`] expands the sigma product,
//! * [`pipeline::coeffs_classes`] sums `prod_t k(Z_t wr S_{m_t})` over cycle
//!   types, with the wreath class counts taken from `P(u)^t`,
//! * [`pipeline::coeffs_brute`] counts triples in explicit group tables.
//!
//! [`pipeline::verify_identity`] runs all three and compares them.

pub mod caps;
pub mod checks;
pub mod cli;
pub mod error;
pub mod numtheory;
pub mod output;
pub mod par;
pub mod partitions;
pub mod permgroup;
pub mod pipeline;
pub mod series;
pub mod wreath;

pub use caps::Caps;
pub use error::{Error, Result};
