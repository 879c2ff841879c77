use serde::{Serialize, Serializer};

use super::echelon::left_kernel;
use super::field::Prime;
use super::vector::FpVector;
use crate::error::{Error, Result};

/// Subspace of F_p^n held as a reduced row echelon basis.
///
/// Rows are sorted by pivot column and every pivot column is zero outside its
/// own row, so two equal subspaces have identical representations and
/// `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpSubspace {
    p: Prime,
    dim: usize,
    rows: Vec<FpVector>,
    pivots: Vec<usize>,
}

impl FpSubspace {
    pub fn zero(p: Prime, dim: usize) -> Self {
        FpSubspace { p, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(p: Prime, dim: usize) -> Self {
        FpSubspace {
            p,
            dim,
            rows: (0..dim).map(|i| FpVector::unit(p, dim, i)).collect(),
            pivots: (0..dim).collect(),
        }
    }

    pub fn span<'a, I>(p: Prime, dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a FpVector>,
    {
        let mut s = Self::zero(p, dim);
        for v in vectors {
            if s.is_full() {
                break;
            }
            s.insert(v.clone());
        }
        s
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn basis(&self) -> &[FpVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace. The result is zero iff `v` is a member.
    pub fn reduce(&self, v: &FpVector) -> FpVector {
        let mut r = v.clone();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = r.get(c);
            if x != 0 {
                r.add_scaled(row, self.p.neg(x));
            }
        }
        r
    }

    pub fn contains(&self, v: &FpVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the subspace. Returns whether the dimension grew.
    pub fn insert(&mut self, v: FpVector) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(&v);
        let Some(pivot) = r.first_nonzero() else {
            return false;
        };
        r.scale(self.p.inv(r.get(pivot)));
        for row in &mut self.rows {
            let x = row.get(pivot);
            if x != 0 {
                row.add_scaled(&r, self.p.neg(x));
            }
        }
        let at = self.pivots.partition_point(|&c| c < pivot);
        self.rows.insert(at, r);
        self.pivots.insert(at, pivot);
        true
    }

    fn check_compatible(&self, other: &FpSubspace) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p.get(), other.p.get()));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &FpSubspace) -> Result<FpSubspace> {
        self.check_compatible(other)?;
        let (mut big, small) = if self.dimension() >= other.dimension() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for v in &small.rows {
            if big.is_full() {
                break;
            }
            big.insert(v.clone());
        }
        Ok(big)
    }

    /// Intersection, computed from the relations among the stacked bases.
    pub fn intersect(&self, other: &FpSubspace) -> Result<FpSubspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(FpSubspace::zero(self.p, self.dim));
        }
        let stacked: Vec<FpVector> = self.rows.iter().chain(&other.rows).cloned().collect();
        let relations = left_kernel(self.p, self.dim, &stacked);
        let k = self.rows.len();
        let mut out = FpSubspace::zero(self.p, self.dim);
        for rel in relations {
            let mut v = FpVector::zero(self.p, self.dim);
            for (i, c) in rel.nonzero() {
                if i < k {
                    v.add_scaled(&self.rows[i], c);
                }
            }
            out.insert(v);
        }
        Ok(out)
    }

    pub fn is_subspace_of(&self, other: &FpSubspace) -> bool {
        self.p == other.p
            && self.dim == other.dim
            && self.dimension() <= other.dimension()
            && self.rows.iter().all(|v| other.contains(v))
    }

    /// Some basis vector of `self` not lying in `other`, if any.
    pub fn witness_outside(&self, other: &FpSubspace) -> Option<FpVector> {
        self.rows.iter().find(|v| !other.contains(v)).cloned()
    }

    /// Extends `seed` to a complement of `sub` inside `within`.
    ///
    /// The returned `X` satisfies `sub + X = within`, `sub ∩ X = 0` and
    /// `seed ⊆ X`. Extension vectors are taken from the RREF basis of
    /// `within` in pivot order, so the result is canonical.
    pub fn complement_within(
        sub: &FpSubspace,
        within: &FpSubspace,
        seed: &FpSubspace,
    ) -> Result<FpSubspace> {
        sub.check_compatible(within)?;
        sub.check_compatible(seed)?;
        if !sub.is_subspace_of(within) {
            return Err(Error::Precondition("complement_within: sub is not contained in within".into()));
        }
        if !seed.is_subspace_of(within) {
            return Err(Error::Precondition("complement_within: seed is not contained in within".into()));
        }
        let mut acc = sub.sum(seed)?;
        if acc.dimension() != sub.dimension() + seed.dimension() {
            return Err(Error::Precondition("complement_within: seed meets sub nontrivially".into()));
        }
        let mut out = seed.clone();
        for v in &within.rows {
            if acc.dimension() == within.dimension() {
                break;
            }
            if acc.insert(v.clone()) {
                out.insert(v.clone());
            }
        }
        Ok(out)
    }
}

impl Serialize for FpSubspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: Prime, xs: &[i64]) -> FpVector {
        FpVector::from_residues(p, xs)
    }

    // every vector of a subspace over F_2, by enumeration of combinations
    fn elements(s: &FpSubspace) -> Vec<FpVector> {
        let p = s.prime();
        let b = s.basis();
        let mut out = Vec::new();
        for mask in 0u32..(1 << b.len()) {
            let mut x = FpVector::zero(p, s.ambient_dim());
            for (i, r) in b.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x.add(r);
                }
            }
            out.push(x);
        }
        out
    }

    #[test]
    fn sum_of_coordinate_lines() {
        let p = Prime::TWO;
        let a = FpSubspace::span(p, 3, &[v(p, &[1, 0, 0])]);
        let b = FpSubspace::span(p, 3, &[v(p, &[0, 1, 0])]);
        assert_eq!(a.sum(&b).unwrap().dimension(), 2);
    }

    #[test]
    fn intersection_matches_enumeration() {
        let p = Prime::TWO;
        let a = FpSubspace::span(p, 3, &[v(p, &[1, 1, 0]), v(p, &[0, 0, 1])]);
        let b = FpSubspace::span(p, 3, &[v(p, &[0, 1, 1]), v(p, &[1, 0, 0])]);
        let ea = elements(&a);
        let common: Vec<_> = elements(&b).into_iter().filter(|x| ea.contains(x)).collect();
        assert_eq!(common.len(), 2);
        let expected = v(p, &[1, 1, 1]);
        assert!(common.contains(&expected));
        let meet = a.intersect(&b).unwrap();
        assert_eq!(meet, FpSubspace::span(p, 3, &[expected]));
    }

    #[test]
    fn complement_within_whole_space() {
        let p = Prime::TWO;
        let u = FpSubspace::span(p, 3, &[v(p, &[1, 0, 0])]);
        let w = FpSubspace::full(p, 3);
        let s = FpSubspace::span(p, 3, &[v(p, &[0, 1, 0])]);
        let x = FpSubspace::complement_within(&u, &w, &s).unwrap();
        assert_eq!(x.dimension(), 2);
        assert!(x.contains(&v(p, &[0, 1, 0])));
        assert!(x.intersect(&u).unwrap().is_zero());
        assert_eq!(x.sum(&u).unwrap(), w);
    }

    #[test]
    fn complement_rejects_bad_seed() {
        let p = Prime::THREE;
        let u = FpSubspace::span(p, 2, &[v(p, &[1, 0])]);
        let w = FpSubspace::full(p, 2);
        let s = FpSubspace::span(p, 2, &[v(p, &[2, 0])]);
        assert!(FpSubspace::complement_within(&u, &w, &s).is_err());
        assert!(FpSubspace::complement_within(&w, &u, &FpSubspace::zero(p, 2)).is_err());
    }

    #[test]
    fn mismatched_prime_is_an_error() {
        let a = FpSubspace::full(Prime::TWO, 2);
        let b = FpSubspace::full(Prime::THREE, 2);
        assert!(matches!(a.sum(&b), Err(Error::PrimeMismatch(2, 3))));
        let c = FpSubspace::full(Prime::TWO, 3);
        assert!(a.intersect(&c).is_err());
    }
}
