//! The limit pre-generator and the identities around it: the action of the
//! down and up operators on Frobenius-Schur functions, the sl(2) action on
//! finitely supported functions, the generator on Schur functions and as a
//! differential operator, its spectrum, the carré du champ, and the rate at
//! which `n²(T_n - 1)` approaches it.

mod convergence;
mod dirichlet;
mod fs;
mod operators;
mod sl2;
mod spectrum;

pub use convergence::{convergence_residual, dissipativity_check, fs_chain_check};
pub use dirichlet::{carre_du_champ_identity, dirichlet_check, gamma, gamma_coeff, gamma_matrix, psd_check};
pub use fs::{d_tilde_check, u_tilde_check};
pub use operators::{
    apply_a_diff, apply_a_diff_truncated, apply_a_schur, apply_b, apply_b_diff,
    apply_b_from_content_ops, apply_b_poly, c1_diff, c2_diff, euler_operator,
};
pub use sl2::{rectangle_invariance_check, Sl2Truncation};
pub use spectrum::{charpoly_check, moment_basis, spectrum, OperatorMatrix};
