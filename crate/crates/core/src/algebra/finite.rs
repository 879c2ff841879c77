use super::{product_span, Algebra, AlgebraContext};
use crate::error::{Error, Result};
use crate::linalg::{FpSubspace, FpVector, Prime, QuotientSpace, TrackedEchelon};

/// An algebra given by structure constants: `table[i * dim + j]` holds the
/// coordinates of `b_i b_j`.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    p: Prime,
    dim: usize,
    table: Vec<FpVector>,
    one: FpVector,
}

impl Algebra for FiniteAlgebra {
    fn prime(&self) -> Prime {
        self.p
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn one(&self) -> FpVector {
        self.one.clone()
    }

    fn mul(&self, a: &FpVector, b: &FpVector) -> FpVector {
        let mut out = FpVector::zero(self.p, self.dim);
        let bs: Vec<(usize, u8)> = b.nonzero().collect();
        for (i, ca) in a.nonzero() {
            for &(j, cb) in &bs {
                out.add_scaled(&self.table[i * self.dim + j], self.p.mul(ca, cb));
            }
        }
        out
    }
}

impl FiniteAlgebra {
    pub fn from_structure(p: Prime, dim: usize, table: Vec<FpVector>, one: FpVector) -> Result<Self> {
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: table.len() });
        }
        if let Some(bad) = table.iter().chain([&one]).find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
        }
        Ok(FiniteAlgebra { p, dim, table, one })
    }

    /// Structure constants of the subalgebra of `alg` with the given basis.
    /// Fails unless the span is closed under products and contains 1.
    pub fn on_basis<A: Algebra + ?Sized>(alg: &A, basis: &[FpVector]) -> Result<Self> {
        let p = alg.prime();
        let k = basis.len();
        let mut solver = TrackedEchelon::new(p, alg.dim(), k);
        for (i, b) in basis.iter().enumerate() {
            if solver.insert(b.clone(), FpVector::unit(p, k, i)).is_some() {
                return Err(Error::Precondition("subalgebra basis is dependent".into()));
            }
        }
        let coords = |v: &FpVector, what: &str| {
            let (residual, c) = solver.reduce(v);
            if residual.is_zero() {
                Ok(c)
            } else {
                Err(Error::NotSubalgebra(what.to_string()))
            }
        };
        let one = coords(&alg.one(), "does not contain 1")?;
        let mut table = Vec::with_capacity(k * k);
        for a in basis {
            for b in basis {
                table.push(coords(&alg.mul(a, b), "not closed under multiplication")?);
            }
        }
        Ok(FiniteAlgebra { p, dim: k, table, one })
    }
}

/// `kG / J` with a fixed section and the induced structure constants.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    space: QuotientSpace,
    algebra: FiniteAlgebra,
    augmentation: FpSubspace,
}

impl QuotientAlgebra {
    /// `J` must already be known to be a two-sided ideal.
    pub(crate) fn new(ctx: &AlgebraContext, j: FpSubspace) -> Result<Self> {
        let space = QuotientSpace::new(ctx.whole(), j)?;
        let p = ctx.prime();
        let sec = space.section().to_vec();
        let mut table = Vec::with_capacity(sec.len() * sec.len());
        for a in &sec {
            for b in &sec {
                table.push(space.project(&ctx.mul(a, b))?);
            }
        }
        let one = space.project(&ctx.one())?;
        let algebra = FiniteAlgebra::from_structure(p, sec.len(), table, one)?;
        let images: Vec<FpVector> =
            ctx.augmentation_ideal().basis().iter().map(|v| space.project(v)).collect::<Result<_>>()?;
        let augmentation = FpSubspace::span(p, sec.len(), &images);
        Ok(QuotientAlgebra { space, algebra, augmentation })
    }

    pub fn ideal(&self) -> &FpSubspace {
        self.space.sub()
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    /// Image of `I(G)`, in section coordinates.
    pub fn augmentation_ideal(&self) -> &FpSubspace {
        &self.augmentation
    }

    /// Section coordinates of `v + J`.
    pub fn project(&self, v: &FpVector) -> FpVector {
        self.space.project(v).expect("the ambient space is all of kG")
    }

    /// Section representative of the given coordinates.
    pub fn lift(&self, coords: &FpVector) -> FpVector {
        self.space.lift(coords)
    }

    /// Dimensions of the powers of the image of `I(G)`, until zero.
    pub fn radical_dimensions(&self) -> Vec<usize> {
        let mut dims = Vec::new();
        let mut power = self.augmentation.clone();
        loop {
            dims.push(power.dimension());
            if power.is_zero() {
                return dims;
            }
            power = product_span(&self.algebra, &power, &self.augmentation);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_named;

    #[test]
    fn projection_is_multiplicative() {
        let ctx = AlgebraContext::new(build_named("Q8").unwrap());
        let j = ctx.commutator_ideal().clone();
        let q = ctx.quotient_algebra(&j).unwrap();
        for g in 0..8 {
            for h in 0..8 {
                let lhs = q.project(&ctx.mul(&ctx.e(g), &ctx.e(h)));
                let rhs = q.algebra().mul(&q.project(&ctx.e(g)), &q.project(&ctx.e(h)));
                assert_eq!(lhs, rhs);
            }
        }
        assert!(q.algebra().is_commutative());
    }

    #[test]
    fn rejects_non_closed_basis() {
        let ctx = AlgebraContext::new(build_named("C4").unwrap());
        let basis = vec![ctx.one(), ctx.e_minus_one(1)];
        assert!(matches!(FiniteAlgebra::on_basis(&ctx, &basis), Err(Error::NotSubalgebra(_))));
        let basis = vec![ctx.one(), ctx.e(2)];
        let sub = FiniteAlgebra::on_basis(&ctx, &basis).unwrap();
        assert_eq!(sub.dim(), 2);
        // e_2 squared is 1
        assert_eq!(sub.mul(&FpVector::unit(ctx.prime(), 2, 1), &FpVector::unit(ctx.prime(), 2, 1)), sub.one());
    }
}
