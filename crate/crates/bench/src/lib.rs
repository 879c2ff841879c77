//! Benchmark fixtures shared by the criterion targets.

use fpg_core::algebra::{AlgebraContext, AugmentedSubalgebra};
use fpg_core::group::{build_named, direct_product};
use fpg_core::lemmas::{verify_tensor_factorization, TensorFactorization};
use fpg_core::FpVector;

/// `A × G_0` with the coordinate factorization.
pub fn coordinate_factorization(a: &str, b: &str) -> (AlgebraContext, TensorFactorization) {
    let (ga, gb) = (build_named(a).unwrap(), build_named(b).unwrap());
    let nb = gb.order();
    let ctx = AlgebraContext::new(direct_product(&ga, &gb).unwrap());
    let left: Vec<FpVector> = (0..ga.order()).map(|x| ctx.e(x * nb)).collect();
    let right: Vec<FpVector> = (0..nb).map(|y| ctx.e(y)).collect();
    let bb = AugmentedSubalgebra::from_vectors(&ctx, &left).unwrap();
    let cc = AugmentedSubalgebra::from_vectors(&ctx, &right).unwrap();
    let fact = verify_tensor_factorization(&ctx, bb, cc).unwrap();
    (ctx, fact)
}
