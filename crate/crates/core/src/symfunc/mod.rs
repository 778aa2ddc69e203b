//! Symmetric functions in the elementary, monomial, power-sum and Schur bases.
//!
//! Every change of basis goes through one mechanism: expand both bases as
//! concrete polynomials in `d` variables, read off the monomial coefficients,
//! and solve the resulting exact rational system.

mod cache;
mod concrete;
mod func;
mod identities;
mod transition;

pub use cache::DiskCache;
pub use concrete::{expand_concrete, expand_symfunc, monomial_coefficient_row, shift_variables};
pub use func::{Basis, SymFunc};
pub use identities::{cauchy_check, e_poly_to_symfunc, jacobi_trudi_e, jacobi_trudi_matrix, newton_p, newton_p_matrix};
pub use transition::{configure_disk_cache, convert, transition_matrix, TransitionMatrix};
