//! Group algebras F_pG, their ideals, subalgebras and quotients.

mod context;
mod finite;
mod subalgebra;

pub use context::{AlgebraContext, DEFAULT_ENUM_CAP};
pub use finite::{FiniteAlgebra, QuotientAlgebra};
pub use subalgebra::AugmentedSubalgebra;

use crate::error::{Error, Result};
use crate::linalg::{FpSubspace, FpVector, Prime};

/// A finite-dimensional associative unital F_p-algebra with a fixed basis.
pub trait Algebra {
    fn prime(&self) -> Prime;
    fn dim(&self) -> usize;
    fn one(&self) -> FpVector;
    fn mul(&self, a: &FpVector, b: &FpVector) -> FpVector;

    fn pow(&self, a: &FpVector, k: usize) -> FpVector {
        let (mut acc, mut base, mut k) = (self.one(), a.clone(), k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^{p^i}`.
    fn p_power(&self, a: &FpVector, i: u32) -> FpVector {
        let p = self.prime().get() as usize;
        (0..i).fold(a.clone(), |x, _| self.pow(&x, p))
    }

    /// Whether all pairs from `basis` commute.
    fn commute_pairwise(&self, basis: &[FpVector]) -> bool {
        basis.iter().enumerate().all(|(i, a)| basis[i + 1..].iter().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn is_commutative(&self) -> bool {
        let n = self.dim();
        let units: Vec<FpVector> = (0..n).map(|i| FpVector::unit(self.prime(), n, i)).collect();
        self.commute_pairwise(&units)
    }
}

/// Span of all products `xy` with `x ∈ X`, `y ∈ Y`.
pub fn product_span<A: Algebra + ?Sized>(alg: &A, x: &FpSubspace, y: &FpSubspace) -> FpSubspace {
    let mut out = FpSubspace::zero(alg.prime(), alg.dim());
    for a in x.basis() {
        for b in y.basis() {
            if out.is_full() {
                return out;
            }
            out.insert(alg.mul(a, b));
        }
    }
    out
}

/// `k`-span of `xy - yx`.
pub fn commutator_span<A: Algebra + ?Sized>(alg: &A, x: &FpSubspace, y: &FpSubspace) -> FpSubspace {
    let mut out = FpSubspace::zero(alg.prime(), alg.dim());
    for a in x.basis() {
        for b in y.basis() {
            out.insert(alg.mul(a, b).difference(&alg.mul(b, a)));
        }
    }
    out
}

/// Smallest subspace containing `x` and closed under multiplication
/// (not necessarily unital).
pub fn multiplicative_closure<A: Algebra + ?Sized>(alg: &A, x: &FpSubspace) -> FpSubspace {
    let mut out = x.clone();
    loop {
        let basis = out.basis().to_vec();
        for a in &basis {
            for b in &basis {
                out.insert(alg.mul(a, b));
            }
        }
        if out.dimension() == basis.len() {
            return out;
        }
    }
}

/// Exponent `p^s` of the unit group `1 + I` for a nilpotent ideal `I` of a
/// commutative algebra: the least `s` with `b^{p^s} = 0` for every basis
/// element `b` of `I`. In a commutative algebra of characteristic `p` the
/// map `a ↦ a^{p^s}` is additive, so the basis suffices.
pub fn unit_exponent_commutative<A: Algebra + ?Sized>(alg: &A, ideal: &FpSubspace) -> Result<usize> {
    if !alg.is_commutative() {
        return Err(Error::NotAbelian);
    }
    let p = alg.prime().get() as usize;
    let mut exp = 1usize;
    let mut powers: Vec<FpVector> = ideal.basis().to_vec();
    loop {
        powers.retain(|b| !b.is_zero());
        if powers.is_empty() {
            return Ok(exp);
        }
        if exp > alg.dim() {
            return Err(Error::Precondition("ideal is not nilpotent".into()));
        }
        powers = powers.iter().map(|b| alg.pow(b, p)).collect();
        exp *= p;
    }
}
