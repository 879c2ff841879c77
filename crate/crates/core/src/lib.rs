//! Exact computations in modular group algebras F_pG of finite p-groups.

pub mod algebra;
pub mod decomposition;
pub mod error;
pub mod group;
pub mod io;
pub mod lemmas;
pub mod linalg;

pub use error::{Error, Result};
pub use group::{AbelianInvariants, PGroup, Subgroup};
pub use linalg::{FpSubspace, FpVector, Prime};
