use super::echelon::TrackedEchelon;
use super::subspace::FpSubspace;
use super::vector::FpVector;
use crate::error::{Error, Result};

/// The quotient `W / U` together with a fixed section (a complement of `U`
/// in `W` chosen canonically from the RREF basis of `W`).
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient: FpSubspace,
    sub: FpSubspace,
    section: Vec<FpVector>,
    solver: TrackedEchelon,
}

impl QuotientSpace {
    pub fn new(ambient: FpSubspace, sub: FpSubspace) -> Result<Self> {
        if !sub.is_subspace_of(&ambient) {
            return Err(Error::Precondition("quotient_space: U is not contained in W".into()));
        }
        let zero = FpSubspace::zero(ambient.prime(), ambient.ambient_dim());
        let complement = FpSubspace::complement_within(&sub, &ambient, &zero)?;
        Ok(Self::with_section(ambient, sub, complement.basis().to_vec()))
    }

    /// Uses the given vectors as section. They must be independent modulo
    /// `sub` and together with `sub` span `ambient` (checked in debug builds).
    pub fn with_section(ambient: FpSubspace, sub: FpSubspace, section: Vec<FpVector>) -> Self {
        let p = ambient.prime();
        let n = ambient.ambient_dim();
        let k = section.len();
        let mut solver = TrackedEchelon::new(p, n, k);
        for u in sub.basis() {
            solver.insert(u.clone(), FpVector::zero(p, k));
        }
        for (i, s) in section.iter().enumerate() {
            let dep = solver.insert(s.clone(), FpVector::unit(p, k, i));
            debug_assert!(dep.is_none(), "section vectors dependent modulo U");
        }
        debug_assert_eq!(solver.rank(), ambient.dimension());
        QuotientSpace { ambient, sub, section, solver }
    }

    pub fn ambient(&self) -> &FpSubspace {
        &self.ambient
    }

    pub fn sub(&self) -> &FpSubspace {
        &self.sub
    }

    pub fn section(&self) -> &[FpVector] {
        &self.section
    }

    pub fn dimension(&self) -> usize {
        self.section.len()
    }

    /// Section coordinates of the coset `v + U`.
    pub fn project(&self, v: &FpVector) -> Result<FpVector> {
        let (residual, coords) = self.solver.reduce(v);
        if !residual.is_zero() {
            return Err(Error::NotContained("vector outside the ambient space of the quotient".into()));
        }
        Ok(coords)
    }

    /// Section representative with the given coordinates.
    pub fn lift(&self, coords: &FpVector) -> FpVector {
        let mut v = FpVector::zero(self.ambient.prime(), self.ambient.ambient_dim());
        for (i, c) in coords.nonzero() {
            v.add_scaled(&self.section[i], c);
        }
        v
    }

    /// Preimage of a subspace of coordinates: its lift plus `U`.
    pub fn preimage(&self, coords: &FpSubspace) -> FpSubspace {
        let mut s = self.sub.clone();
        for c in coords.basis() {
            s.insert(self.lift(c));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Prime;

    #[test]
    fn plane_mod_line() {
        let p = Prime::TWO;
        let w = FpSubspace::full(p, 2);
        let u = FpSubspace::span(p, 2, &[FpVector::unit(p, 2, 0)]);
        let q = QuotientSpace::new(w, u).unwrap();
        assert_eq!(q.dimension(), 1);
        for x in 0..2 {
            let c = FpVector::from_residues(p, &[x]);
            assert_eq!(q.project(&q.lift(&c)).unwrap(), c);
        }
    }

    #[test]
    fn trivial_quotient() {
        let p = Prime::THREE;
        let w = FpSubspace::full(p, 3);
        let q = QuotientSpace::new(w.clone(), w).unwrap();
        assert_eq!(q.dimension(), 0);
        assert!(q.project(&FpVector::unit(p, 3, 2)).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_subspace() {
        let p = Prime::TWO;
        let w = FpSubspace::span(p, 2, &[FpVector::unit(p, 2, 0)]);
        let u = FpSubspace::span(p, 2, &[FpVector::unit(p, 2, 1)]);
        assert!(QuotientSpace::new(w, u).is_err());
    }

    #[test]
    fn projection_outside_ambient_fails() {
        let p = Prime::FIVE;
        let w = FpSubspace::span(p, 2, &[FpVector::unit(p, 2, 0)]);
        let q = QuotientSpace::new(w, FpSubspace::zero(p, 2)).unwrap();
        assert!(q.project(&FpVector::unit(p, 2, 1)).is_err());
    }
}
