use super::{multiplicative_closure, Algebra, AlgebraContext, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::{FpSubspace, FpVector};

/// A unital subalgebra `B ⊆ kG` with `I(B) = B ∩ I(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedSubalgebra {
    space: FpSubspace,
    aug: FpSubspace,
}

impl AugmentedSubalgebra {
    /// Validates that `space` contains 1 and is closed under products.
    pub fn new(ctx: &AlgebraContext, space: FpSubspace) -> Result<Self> {
        if space.ambient_dim() != ctx.dim() {
            return Err(Error::DimensionMismatch { expected: ctx.dim(), found: space.ambient_dim() });
        }
        if !space.contains(&ctx.one()) {
            return Err(Error::NotSubalgebra("does not contain 1".into()));
        }
        let basis = space.basis();
        for a in basis {
            for b in basis {
                if !space.contains(&ctx.mul(a, b)) {
                    return Err(Error::NotSubalgebra("not closed under multiplication".into()));
                }
            }
        }
        let aug = space.intersect(&ctx.augmentation_ideal())?;
        if aug.dimension() + 1 != space.dimension() {
            return Err(Error::NotSubalgebra("augmentation ideal does not have codimension 1".into()));
        }
        Ok(AugmentedSubalgebra { space, aug })
    }

    /// Span of the given vectors, which must already form a subalgebra.
    pub fn from_vectors(ctx: &AlgebraContext, vectors: &[FpVector]) -> Result<Self> {
        Self::new(ctx, FpSubspace::span(ctx.prime(), ctx.dim(), vectors))
    }

    /// The unital subalgebra generated by the given vectors.
    pub fn generated(ctx: &AlgebraContext, vectors: &[FpVector]) -> Self {
        let mut seed = FpSubspace::span(ctx.prime(), ctx.dim(), vectors);
        seed.insert(ctx.one());
        Self::new(ctx, multiplicative_closure(ctx, &seed)).expect("closure is a unital subalgebra")
    }

    /// `kH` for a subgroup `H`.
    pub fn from_subgroup(ctx: &AlgebraContext, h: &Subgroup) -> Result<Self> {
        ctx.group().check_subgroup(h)?;
        let basis: Vec<FpVector> = h.elements().iter().map(|&g| ctx.e(g)).collect();
        Self::from_vectors(ctx, &basis)
    }

    pub fn space(&self) -> &FpSubspace {
        &self.space
    }

    pub fn augmentation_ideal(&self) -> &FpSubspace {
        &self.aug
    }

    pub fn dimension(&self) -> usize {
        self.space.dimension()
    }

    pub fn is_commutative(&self, ctx: &AlgebraContext) -> bool {
        ctx.commute_pairwise(self.space.basis())
    }

    /// The basis `1, b_1, …, b_k` with `b_i` the RREF basis of `I(B)`.
    pub fn adapted_basis(&self, ctx: &AlgebraContext) -> Vec<FpVector> {
        std::iter::once(ctx.one()).chain(self.aug.basis().iter().cloned()).collect()
    }

    /// Structure constants with respect to [`Self::adapted_basis`].
    pub fn structure(&self, ctx: &AlgebraContext) -> FiniteAlgebra {
        FiniteAlgebra::on_basis(ctx, &self.adapted_basis(ctx)).expect("validated subalgebra")
    }
}
