//! Recovering a direct decomposition `G = ℬ × 𝒞` from a tensor
//! factorization `F_pG = B ⊗ C` with `B` commutative, and certificates of
//! tensor indecomposability.

mod basis;
mod certificate;
mod lambda;
mod recover;
mod split;

pub use basis::{find_group_basis_commutative, verify_group_basis, BasisSearch, GroupBasis};
pub use certificate::{certify_indecomposable, Certificate, CertificateKind};
pub use lambda::{lambda_map, LambdaData};
pub use recover::{recover_decomposition, DecompositionReport, RecoveryStep};
pub use split::{frattini_lift, homocyclic_split, split_cyclic, CyclicSplit, HomocyclicSplit};
