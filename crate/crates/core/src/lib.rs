pub mod arith;
pub mod cli;
pub mod composition;
pub mod error;
pub mod group;
pub mod hom;
pub mod independence;
pub mod io;
pub mod jordan;
pub mod lattice;
pub mod lie;
pub mod matrix;
pub mod perm;
pub mod standard;
pub mod sylow;

pub use composition::{composition_factors, simple_quotients, FactorKind, SimpleFactorId};
pub use error::{Error, Result};
pub use group::{make_perm_group, make_perm_group_capped, ElemSet, FiniteGroup, DEFAULT_ORDER_CAP};
pub use hom::{image, kernel, make_hom, GroupHom};
pub use jordan::{
    collins_bound, frobenius_bound, jordan_check, jordan_index, theorem3prime_probe, JordanWitness,
};
pub use lattice::{normal_closure, quotient, Quotient};
pub use matrix::{make_matrix_group, MatrixGroup};
pub use perm::Perm;
pub use sylow::{frattini_check, plus_subgroup, sylow};
