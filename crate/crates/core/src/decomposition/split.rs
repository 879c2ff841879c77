use serde::Serialize;

use super::lambda::LambdaData;
use crate::algebra::{Algebra, AlgebraContext};
use crate::error::{Error, Result};
use crate::group::{retraction_complement, retraction_onto, Subgroup};
use crate::linalg::{FpSubspace, FpVector, QuotientSpace};
use crate::lemmas::cyclic_factor_test;

fn verification(step: &'static str, detail: impl Into<String>) -> Error {
    Error::Verification { step, detail: detail.into() }
}

/// An element `g` with `g - 1 ≡ v (mod I(G)²)`, for `v ∈ I(G)`.
pub fn frattini_lift(ctx: &AlgebraContext, v: &FpVector) -> Result<usize> {
    let g = ctx.group();
    let gens = ctx.generators();
    let section: Vec<FpVector> = gens.iter().map(|&x| ctx.e_minus_one(x)).collect();
    let q = QuotientSpace::with_section(ctx.augmentation_ideal(), ctx.augmentation_power(2), section);
    let coords = q.project(v)?;
    Ok(gens.iter().enumerate().fold(0, |acc, (k, &x)| g.mul(acc, g.pow(x, coords.get(k) as usize))))
}

/// The Frattini coset of `g`, ascending.
fn frattini_coset(ctx: &AlgebraContext, g: usize) -> Vec<usize> {
    let grp = ctx.group();
    let mut coset: Vec<usize> = grp.frattini().elements().iter().map(|&f| grp.mul(g, f)).collect();
    coset.sort_unstable();
    coset
}

/// `G = ⟨h⟩ × G_0` together with the matching splitting `kG = J ⊕ kG_0`.
#[derive(Clone, Debug)]
pub struct CyclicSplit {
    pub h: usize,
    pub cyclic: Subgroup,
    pub complement: Subgroup,
    /// The ideal `J` generated by the seed.
    pub ideal: FpSubspace,
}

/// Splits off `⟨h⟩` through a retraction and checks `kG = J ⊕ kG_0`, where
/// `J` is the ideal generated by `seed` (by default `h - 1`).
pub fn split_cyclic(ctx: &AlgebraContext, h: usize, seed: Option<&FpVector>) -> Result<CyclicSplit> {
    let g = ctx.group();
    if h >= g.order() {
        return Err(Error::ElementOutOfRange(h));
    }
    let complement = retraction_complement(g, h)?;
    let cyclic = g.subgroup_generated(&[h]);
    if !g.is_internal_direct_product(&cyclic, &complement) {
        return Err(verification("split_cyclic", "⟨h⟩ and the retraction kernel do not form a direct product"));
    }
    let seed = seed.cloned().unwrap_or_else(|| ctx.e_minus_one(h));
    let ideal = ctx.ideal_generated(&[seed]);
    let codim = ctx.dim() - ideal.dimension();
    if codim != complement.order() {
        return Err(verification("split_cyclic", format!("codim J = {codim} but |G_0| = {}", complement.order())));
    }
    let kg0: Vec<FpVector> = complement.elements().iter().map(|&x| ctx.e(x)).collect();
    let kg0 = FpSubspace::span(ctx.prime(), ctx.dim(), &kg0);
    if !ideal.intersect(&kg0)?.is_zero() {
        return Err(verification("split_cyclic", "J meets kG_0"));
    }
    Ok(CyclicSplit { h, cyclic, complement, ideal })
}

/// `G = H × K` with `H` homocyclic of exponent `p^s`.
#[derive(Clone, Debug, Serialize)]
pub struct HomocyclicSplit {
    pub s: u32,
    /// A basis of `H`, one element per section vector of `V/I(G)²`.
    pub generators: Vec<usize>,
    pub h: Subgroup,
    pub k: Subgroup,
}

/// Realizes a complement `V/I(G)²` of `ker Λ` as `I(H)kG + I(G)²` for a
/// homocyclic direct factor `H`.
///
/// Each section vector of `V/I(G)²` is lifted to its Frattini coset, which
/// is searched in ascending order for a central element of order `p^s`
/// that extends the factor found so far; dead ends backtrack.
pub fn homocyclic_split(ctx: &AlgebraContext, s: u32, v: &FpSubspace, lambda: &LambdaData) -> Result<HomocyclicSplit> {
    let g = ctx.group();
    if lambda.s != s {
        return Err(Error::Precondition(format!("Λ was built for s = {}, not {s}", lambda.s)));
    }
    let i2 = lambda.domain.sub();
    let w = lambda.domain.ambient();
    let kernel = lambda.kernel_lift();
    if !i2.is_subspace_of(v) || !v.is_subspace_of(w) {
        return Err(Error::Precondition("V must lie between I(G)² and the domain of Λ".into()));
    }
    if v.sum(&kernel)? != *w || v.intersect(&kernel)? != *i2 {
        return Err(Error::Precondition("V/I(G)² is not a complement of ker Λ".into()));
    }
    let section = QuotientSpace::new(v.clone(), i2.clone())?.section().to_vec();
    let cosets: Vec<Vec<usize>> =
        section.iter().map(|x| frattini_lift(ctx, x).map(|r| frattini_coset(ctx, r))).collect::<Result<_>>()?;

    let order = g.p().pow(s);
    let mut chosen = Vec::new();
    if !lift_search(ctx, order, &cosets, &mut chosen) {
        return Err(verification("homocyclic_split", "no admissible lift of order p^s in a required coset"));
    }
    let (k, _) = retraction_onto(g, &chosen)?;
    let h = g.subgroup_generated(&chosen);
    if !g.is_internal_direct_product(&h, &k) {
        return Err(verification("homocyclic_split", "H and K do not form a direct product"));
    }
    if ctx.normal_subgroup_ideal(&h)?.sum(i2)? != *v {
        return Err(verification("homocyclic_split", "I(H)kG + I(G)² ≠ V"));
    }
    let (kg, _) = g.subgroup_as_group(&k, "K");
    if cyclic_factor_test(&kg, s)?.has_factor {
        return Err(verification("homocyclic_split", "K still has a cyclic factor of order p^s"));
    }
    Ok(HomocyclicSplit { s, generators: chosen, h, k })
}

fn lift_search(ctx: &AlgebraContext, order: usize, cosets: &[Vec<usize>], chosen: &mut Vec<usize>) -> bool {
    let g = ctx.group();
    let j = chosen.len();
    if j == cosets.len() {
        return true;
    }
    let target = order.pow(j as u32 + 1);
    for &x in &cosets[j] {
        if g.element_order(x) != order || !g.is_central(x) {
            continue;
        }
        chosen.push(x);
        if g.subgroup_generated(chosen).order() == target
            && retraction_onto(g, chosen).is_ok()
            && lift_search(ctx, order, cosets, chosen)
        {
            return true;
        }
        chosen.pop();
    }
    false
}
