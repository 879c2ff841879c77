//! Exact linear algebra over the prime fields F_2, F_3 and F_5.

mod echelon;
mod field;
mod map;
mod quotient;
mod subspace;
mod vector;

pub use echelon::{left_kernel, TrackedEchelon};
pub use field::Prime;
pub use map::LinearMap;
pub use quotient::QuotientSpace;
pub use subspace::FpSubspace;
pub use vector::{FpVector, NonZero};
