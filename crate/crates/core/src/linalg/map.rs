use super::echelon::{left_kernel, TrackedEchelon};
use super::field::Prime;
use super::subspace::FpSubspace;
use super::vector::FpVector;
use crate::error::{Error, Result};

/// Linear map given by the images of a basis. Domain vectors live in some
/// ambient space; images are coordinate vectors of length `codomain_dim`.
#[derive(Clone, Debug)]
pub struct LinearMap {
    p: Prime,
    domain: Vec<FpVector>,
    images: Vec<FpVector>,
    codomain_dim: usize,
    solver: TrackedEchelon,
}

impl LinearMap {
    pub fn new(p: Prime, domain: Vec<FpVector>, images: Vec<FpVector>, codomain_dim: usize) -> Result<Self> {
        if domain.len() != images.len() {
            return Err(Error::DimensionMismatch { expected: domain.len(), found: images.len() });
        }
        if let Some(bad) = images.iter().find(|v| v.len() != codomain_dim) {
            return Err(Error::DimensionMismatch { expected: codomain_dim, found: bad.len() });
        }
        let ambient = domain.first().map_or(0, FpVector::len);
        let mut solver = TrackedEchelon::new(p, ambient, domain.len());
        for (i, d) in domain.iter().enumerate() {
            if solver.insert(d.clone(), FpVector::unit(p, domain.len(), i)).is_some() {
                return Err(Error::Precondition("linear map domain basis is dependent".into()));
            }
        }
        Ok(LinearMap { p, domain, images, codomain_dim, solver })
    }

    /// The map on F_p^n given by a list of row images of the standard basis.
    pub fn from_rows(p: Prime, images: Vec<FpVector>, codomain_dim: usize) -> Result<Self> {
        let n = images.len();
        let domain = (0..n).map(|i| FpVector::unit(p, n, i)).collect();
        Self::new(p, domain, images, codomain_dim)
    }

    pub fn domain_basis(&self) -> &[FpVector] {
        &self.domain
    }

    pub fn images(&self) -> &[FpVector] {
        &self.images
    }

    pub fn domain_dim(&self) -> usize {
        self.domain.len()
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn apply(&self, v: &FpVector) -> Result<FpVector> {
        let (residual, coords) = self.solver.reduce(v);
        if !residual.is_zero() {
            return Err(Error::NotContained("vector outside the domain of the linear map".into()));
        }
        let mut out = FpVector::zero(self.p, self.codomain_dim);
        for (i, c) in coords.nonzero() {
            out.add_scaled(&self.images[i], c);
        }
        Ok(out)
    }

    /// Kernel, as a subspace of the domain's ambient space.
    pub fn kernel(&self) -> FpSubspace {
        let ambient = self.domain.first().map_or(0, FpVector::len);
        let mut k = FpSubspace::zero(self.p, ambient);
        for rel in left_kernel(self.p, self.codomain_dim, &self.images) {
            let mut v = FpVector::zero(self.p, ambient);
            for (i, c) in rel.nonzero() {
                v.add_scaled(&self.domain[i], c);
            }
            k.insert(v);
        }
        k
    }

    pub fn image(&self) -> FpSubspace {
        FpSubspace::span(self.p, self.codomain_dim, &self.images)
    }

    pub fn rank(&self) -> usize {
        self.image().dimension()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_identity() {
        let p = Prime::TWO;
        let zero = LinearMap::from_rows(p, vec![FpVector::zero(p, 3); 3], 3).unwrap();
        assert_eq!(zero.kernel().dimension(), 3);
        assert_eq!(zero.rank(), 0);
        let id = LinearMap::from_rows(p, (0..3).map(|i| FpVector::unit(p, 3, i)).collect(), 3).unwrap();
        assert!(id.kernel().is_zero());
        assert_eq!(id.rank(), 3);
    }

    #[test]
    fn apply_outside_domain() {
        let p = Prime::THREE;
        let d = vec![FpVector::unit(p, 2, 0)];
        let m = LinearMap::new(p, d, vec![FpVector::unit(p, 1, 0)], 1).unwrap();
        assert!(m.apply(&FpVector::unit(p, 2, 1)).is_err());
        let x = FpVector::from_residues(p, &[2, 0]);
        assert_eq!(m.apply(&x).unwrap().to_residues(), vec![2]);
    }
}
