use serde::Serialize;

use super::basis::{find_group_basis_commutative, verify_group_basis, BasisSearch};
use super::lambda::lambda_map;
use super::split::{homocyclic_split, split_cyclic};
use crate::algebra::{Algebra, AlgebraContext, AugmentedSubalgebra};
use crate::error::{Error, Result};
use crate::group::{AbelianInvariants, Subgroup};
use crate::lemmas::{verify_tensor_factorization, TensorFactorization};
use crate::linalg::{FpSubspace, FpVector, QuotientSpace};

fn verification(step: &'static str, detail: impl Into<String>) -> Error {
    Error::Verification { step, detail: detail.into() }
}

/// Evidence for one level of the recursion. Elements are indices in the
/// original group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveryStep {
    pub depth: usize,
    /// `|G_l|` at this level.
    pub level_order: usize,
    /// Order `p^s` of the chosen group basis element `b`.
    pub b_order: usize,
    pub s: u32,
    /// `(b-1)^{p^{s-1}} ∉ I(G)^{p^{s-1}+1} + I(℧_s(G)G′)kG`.
    pub jennings_ok: bool,
    pub lambda_rank: usize,
    /// Order of the homocyclic factor realizing `V`.
    pub homocyclic_order: usize,
    pub h: usize,
    /// `|G_0|`, the order of the retraction kernel.
    pub complement_order: usize,
    pub ideal_codim: usize,
}

/// `G = ℬ × 𝒞` recovered from `kG = B ⊗ C` with `B` commutative.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub b_generators: Vec<usize>,
    pub b_elements: Vec<usize>,
    pub b_invariants: AbelianInvariants,
    /// Invariants of the group basis found in `B`.
    pub basis_invariants: AbelianInvariants,
    pub c_generators: Vec<usize>,
    pub c_elements: Vec<usize>,
    pub c_order: usize,
    pub internal_direct_product: bool,
    pub verified: bool,
    pub steps: Vec<RecoveryStep>,
}

impl DecompositionReport {
    pub fn b_side(&self, order: usize) -> Subgroup {
        Subgroup::from_elements(order, &self.b_elements)
    }

    pub fn c_side(&self, order: usize) -> Subgroup {
        Subgroup::from_elements(order, &self.c_elements)
    }
}

struct Level {
    b: FpSubspace,
    c: FpSubspace,
    units: Vec<FpVector>,
    orders: Vec<usize>,
    /// Element of the current group to element of the original group.
    embed: Vec<usize>,
}

/// Splits off `⟨h⟩` for each element `b` of a group basis of `B`, largest
/// order first, and recurses on `kG/J ≅ kG_0` with the projected factors.
pub fn recover_decomposition(
    ctx: &AlgebraContext,
    fact: &TensorFactorization,
    search: BasisSearch,
) -> Result<DecompositionReport> {
    let g = ctx.group();
    let basis = find_group_basis_commutative(ctx, &fact.b, search)?;
    let mut level = Level {
        b: fact.b.space().clone(),
        c: fact.c.space().clone(),
        units: basis.units.clone(),
        orders: basis.orders.clone(),
        embed: (0..g.order()).collect(),
    };
    let mut owned: Option<AlgebraContext> = None;
    let mut steps = Vec::new();
    let mut hs = Vec::new();

    while !level.units.is_empty() {
        let cur = owned.as_ref().unwrap_or(ctx);
        let grp = cur.group();
        if !verify_group_basis(cur, &level.b, &level.units, &level.orders) {
            return Err(verification("group_basis", format!("level {}", steps.len())));
        }
        let b_order = level.orders[0];
        let s = grp.p().log(b_order).expect("unit orders are p-powers");
        let x = level.units[0].clone().difference(&cur.one());

        let q = grp.p().pow(s - 1);
        let m = cur.normal_subgroup_ideal(&grp.join(&grp.agemo(s), &grp.derived()))?;
        let jennings_ok = !cur.augmentation_power(q + 1).sum(&m)?.contains(&cur.pow(&x, q));
        if !jennings_ok {
            return Err(verification("jennings", format!("(b-1)^{q} lies in I^{} + I(℧_{s}G′)kG", q + 1)));
        }

        let lambda = lambda_map(cur, s, search.seed)?;
        let w = lambda.domain.ambient();
        if !w.contains(&x) {
            return Err(verification("lambda_domain", "b - 1 is outside the domain of Λ"));
        }
        let seed = FpSubspace::span(cur.prime(), cur.dim(), std::slice::from_ref(&x));
        let v = FpSubspace::complement_within(&lambda.kernel_lift(), w, &seed)?.sum(lambda.domain.sub())?;
        let homo = homocyclic_split(cur, s, &v, &lambda)?;

        let i2 = lambda.domain.sub();
        let h = homo
            .h
            .elements()
            .iter()
            .copied()
            .find(|&y| i2.contains(&cur.e_minus_one(y).difference(&x)))
            .ok_or_else(|| verification("lift_b", "no element of H in the class of b - 1"))?;
        let split = split_cyclic(cur, h, Some(&x))?;

        // kG → kG/J ≅ kG_0, with section {e_g : g ∈ G_0}
        let (g0, emb0) = grp.subgroup_as_group(&split.complement, format!("{}_{}", g.name(), steps.len() + 1));
        let section: Vec<FpVector> = emb0.iter().map(|&y| cur.e(y)).collect();
        let proj = QuotientSpace::with_section(cur.whole(), split.ideal.clone(), section);
        let next = AlgebraContext::new(g0);
        let image = |sp: &FpSubspace| -> Result<FpSubspace> {
            let vs: Vec<FpVector> = sp.basis().iter().map(|y| proj.project(y)).collect::<Result<_>>()?;
            Ok(FpSubspace::span(next.prime(), next.dim(), &vs))
        };
        let nb = image(&level.b)?;
        let nc = image(&level.c)?;
        let units: Vec<FpVector> = level.units[1..].iter().map(|u| proj.project(u)).collect::<Result<_>>()?;
        let recheck = AugmentedSubalgebra::new(&next, nb.clone())
            .and_then(|bb| Ok((bb, AugmentedSubalgebra::new(&next, nc.clone())?)))
            .and_then(|(bb, cc)| verify_tensor_factorization(&next, bb, cc));
        if let Err(e) = recheck {
            return Err(verification("project", e.to_string()));
        }

        hs.push(level.embed[h]);
        steps.push(RecoveryStep {
            depth: steps.len(),
            level_order: grp.order(),
            b_order,
            s,
            jennings_ok,
            lambda_rank: lambda.rank(),
            homocyclic_order: homo.h.order(),
            h: level.embed[h],
            complement_order: split.complement.order(),
            ideal_codim: cur.dim() - split.ideal.dimension(),
        });
        let embed: Vec<usize> = emb0.iter().map(|&y| level.embed[y]).collect();
        level = Level { b: nb, c: nc, units, orders: level.orders[1..].to_vec(), embed };
        owned = Some(next);
    }

    let last = owned.as_ref().unwrap_or(ctx);
    if level.b.dimension() != 1 || level.c.dimension() != last.dim() {
        return Err(verification("final_level", "B did not reduce to k"));
    }
    let b_side = g.subgroup_generated(&hs);
    let c_side = Subgroup::from_elements(g.order(), &level.embed);
    g.check_subgroup(&c_side)?;
    let internal_direct_product = g.is_internal_direct_product(&b_side, &c_side);
    let b_invariants = g.abelian_invariants_of(&b_side)?;
    let verified =
        internal_direct_product && b_side.order() == fact.b.dimension() && b_invariants == basis.invariants;
    let c_generators = {
        let (cg, emb) = g.subgroup_as_group(&c_side, "C");
        cg.minimal_generators().into_iter().map(|y| emb[y]).collect()
    };
    Ok(DecompositionReport {
        b_generators: hs,
        b_elements: b_side.elements().to_vec(),
        b_invariants,
        basis_invariants: basis.invariants,
        c_generators,
        c_elements: c_side.elements().to_vec(),
        c_order: c_side.order(),
        internal_direct_product,
        verified,
        steps,
    })
}
