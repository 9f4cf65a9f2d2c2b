//! Exact matrices over `ℤ` and `ℤ/m`, alternating forms, transvections,
//! the Church–Putman generators, and the Lie-algebra maps.

mod church_putman;
mod form;
mod json;
mod lie;
mod matrix;
mod modular;
mod orders;

pub use church_putman::{church_putman, church_putman_set, CpGenerator, CpKind};
pub use form::{
    fixes_vector, is_isometry, symplectic_basis_change, transvection, AlternatingForm, FormAction,
};
pub use json::{JsonEntry, MatrixJson};
pub use lie::{ann_check, in_principal_congruence, lie_brute_force_count, lie_check, log_map};
pub use matrix::{big_vec, IntegerMatrix};
pub use modular::{crt_join, crt_split, factorize, is_prime, ModularMatrix, MAX_MODULUS};
pub use orders::{sp_lie_order, sp_order, sp_stabilizer_order};

/// Reduction `ℤ → ℤ/m` entrywise.
pub fn reduce_mod(a: &IntegerMatrix, m: u64) -> crate::Result<ModularMatrix> {
    ModularMatrix::from_integer(a, m)
}
