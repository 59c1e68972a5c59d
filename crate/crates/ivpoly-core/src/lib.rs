//! Exact arithmetic for integer-valued polynomials on the matrix algebras
//! M_n(ℤ): membership oracles, images of integer and p-adic matrices, and the
//! noncommutative ring of polynomials with matrix coefficients.
//!
//! All values are immutable after construction and all operations are pure,
//! so anything here may be freely shared between threads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
mod gf;
pub mod images;
pub mod matpoly;
pub mod matrix;
pub mod membership;
pub mod poly;

pub use error::{Error, Result};
pub use images::{
    cancellation_modulus, image_at, padic_image, padic_valuation, reduced_representative,
    PadicMatrix, PadicPolyApprox,
};
pub use matpoly::{
    entry_ideal_generators, entry_scalarize, eval_matcoeff_at_matrix, mat_poly_mul,
    member_matrix_poly, mn_ideal_generators, phi, phi_inv, sample_check_integrality,
    MatCoeffPoly, MatOfPoly, MatrixMembershipReport, RatMatrix, SampleReport,
};
pub use matrix::{
    block_diag, char_poly, companion, eval_poly_at_matrix, eval_poly_at_residue_matrix,
    IntMatrix, ResidueMatrix,
};
pub use membership::{
    all_witnesses, companion_case_fails, divisibility_case_fails, enumerate_monic,
    generate_family, irreducible_companion_case_fails, irreducible_lift, is_irreducible_mod_p,
    is_prime, member_via_companion, member_via_divisibility, member_via_irreducible_companion,
    monic_from_index, prime_power_split, EnumerationBudget, MembershipVerdict, Oracle,
    PrimePowerSplit,
};
pub use poly::{canonicalize, crt_coeffwise, reduce_mod, IntPoly, RationalPolyRep, ResiduePoly};
