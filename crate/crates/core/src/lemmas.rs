//! Verifiers for the ideal identities relating subgroups of `G` to ideals of
//! F_pG, the cyclic direct factor criterion, and the consequences of a
//! tensor factorization `kG = B ⊗ C` with `B` commutative.
//!
//! Group-side ideals always come from [`AlgebraContext::normal_subgroup_ideal`]
//! and algebra-side ideals from powers, centers and commutators, so the two
//! sides of every identity are computed independently.

use serde::Serialize;

use crate::algebra::{
    commutator_span, product_span, unit_exponent_commutative, Algebra, AlgebraContext, AugmentedSubalgebra,
};
use crate::error::{Error, Result};
use crate::group::{CharacteristicKind, PGroup};
use crate::linalg::{FpSubspace, FpVector, QuotientSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    Contained,
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub holds: bool,
}

/// Outcome of one identity check. For subspace relations `left`/`right` are
/// dimensions; for [`Relation::AtLeast`] they are the compared numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: &'static str,
    pub params: Vec<u32>,
    pub relation: Relation,
    pub left: usize,
    pub right: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<FpVector>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<SubCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityReport {
    fn subspaces(id: &'static str, params: Vec<u32>, relation: Relation, l: &FpSubspace, r: &FpSubspace) -> Self {
        let witness = match relation {
            Relation::Contained => l.witness_outside(r),
            _ => l.witness_outside(r).or_else(|| r.witness_outside(l)),
        };
        let holds = match relation {
            Relation::Equal => l == r,
            _ => l.is_subspace_of(r),
        };
        IdentityReport {
            id,
            params,
            relation,
            left: l.dimension(),
            right: r.dimension(),
            holds,
            witness,
            checks: Vec::new(),
            note: None,
        }
    }
}

/// How `Ω_i(Z(I(G)))` is obtained for the identity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaRoute {
    /// Enumerate `Z(I(G))` when it has at most this many elements, otherwise
    /// take the kernel of the (linear) Frobenius power on the center.
    Auto(u128),
    Enumerate(u128),
    Linear,
}

/// Default enumeration threshold for [`OmegaRoute::Auto`].
pub const DEFAULT_OMEGA_ENUMERATION: u128 = 1 << 12;

impl Default for OmegaRoute {
    fn default() -> Self {
        OmegaRoute::Auto(DEFAULT_OMEGA_ENUMERATION)
    }
}

fn omega_central(ctx: &AlgebraContext, i: u32, route: OmegaRoute) -> Result<(FpSubspace, &'static str)> {
    let size = || {
        let k = ctx.center_augmentation().dimension() as u32;
        (ctx.prime().get() as u128).checked_pow(k).unwrap_or(u128::MAX)
    };
    match route {
        OmegaRoute::Enumerate(cap) => Ok((ctx.omega_central(i, cap)?, "enumeration")),
        OmegaRoute::Linear => Ok((ctx.omega_central_linear(i), "frobenius_kernel")),
        OmegaRoute::Auto(limit) if size() <= limit => Ok((ctx.omega_central(i, limit)?, "enumeration")),
        OmegaRoute::Auto(_) => Ok((ctx.omega_central_linear(i), "frobenius_kernel")),
    }
}

/// Checks one of the three ideal identities.
///
/// * item 1: `I(℧_i(G)G′)kG = ℧_i(I(G))kG + I(G′)kG`
/// * item 2: `I(Ω_i(Z(G))G′)kG = Ω_i(Z(I(G)))kG + I(G′)kG`
/// * item 3: `I(Ω_i(Z(G))℧_j(G)G′)kG = Ω_i(Z(I(G)))kG + ℧_j(I(G))kG + I(G′)kG`
///
/// `I(G′)kG` on the right is the ideal generated by `[kG, kG]`.
pub fn lemma_identity_check(ctx: &AlgebraContext, item: u8, i: u32, j: u32, route: OmegaRoute) -> Result<IdentityReport> {
    if i == 0 || (item == 3 && j == 0) {
        return Err(Error::Precondition("i and j must be positive".into()));
    }
    let g = ctx.group();
    let derived = g.derived();
    let (id, params, left_group, right, note) = match item {
        1 => {
            let n = g.join(&g.agemo(i), &derived);
            ("lemma1", vec![i], n, ctx.mho_ideal_mod_derived(i), None)
        }
        2 => {
            let n = g.join(&g.omega_of(&g.center(), i), &derived);
            let (om, how) = omega_central(ctx, i, route)?;
            let mut seed = om.basis().to_vec();
            seed.extend(ctx.commutator_ideal().basis().iter().cloned());
            ("lemma2", vec![i], n, ctx.ideal_generated(&seed), Some(how))
        }
        3 => {
            let n = g.join(&g.join(&g.omega_of(&g.center(), i), &g.agemo(j)), &derived);
            let (om, how) = omega_central(ctx, i, route)?;
            let mut seed = om.basis().to_vec();
            seed.extend(ctx.mho_ideal_mod_derived(j).basis().iter().cloned());
            ("lemma3", vec![i, j], n, ctx.ideal_generated(&seed), Some(how))
        }
        _ => return Err(Error::Precondition(format!("no identity item {item}"))),
    };
    let left = ctx.normal_subgroup_ideal(&left_group)?;
    let mut report = IdentityReport::subspaces(id, params, Relation::Equal, &left, &right);
    report.note = note.map(|s| format!("omega via {s}"));
    Ok(report)
}

/// Result of the cyclic direct factor test for one `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicFactorOutcome {
    pub i: u32,
    pub has_factor: bool,
    /// `exp(1 + I(R_i(G)) k(G/℧_i(G)G′))`.
    pub exponent: usize,
}

/// Decides whether `G` has a cyclic direct factor of order `p^i` from the
/// exponent of `1 + I(R_i(G)) k(G/℧_i(G)G′)` inside the commutative algebra
/// `k(G/℧_i(G)G′)`.
pub fn cyclic_factor_test(g: &PGroup, i: u32) -> Result<CyclicFactorOutcome> {
    let r = g.r_subquotient(i)?;
    let q = AlgebraContext::new(r.quotient.clone());
    let ideal = q.normal_subgroup_ideal(&r.embedded)?;
    let exponent = unit_exponent_commutative(&q, &ideal)?;
    Ok(CyclicFactorOutcome { i, has_factor: exponent >= g.p().pow(i), exponent })
}

/// A tensor factorization `kG = B ⊗ C` that passed every check of
/// [`verify_tensor_factorization`].
#[derive(Clone, Debug)]
pub struct TensorFactorization {
    pub b: AugmentedSubalgebra,
    pub c: AugmentedSubalgebra,
}

fn fail(check: &'static str, detail: impl Into<String>) -> Error {
    Error::Factorization { check, detail: detail.into() }
}

/// Checks that `B` and `C` commute elementwise, `dim B · dim C = |G|`, the
/// products span `kG`, and `I(G) = I(B) ⊕ I(C) ⊕ I(B)I(C)`.
pub fn verify_tensor_factorization(
    ctx: &AlgebraContext,
    b: AugmentedSubalgebra,
    c: AugmentedSubalgebra,
) -> Result<TensorFactorization> {
    for x in b.space().basis() {
        for y in c.space().basis() {
            if ctx.mul(x, y) != ctx.mul(y, x) {
                return Err(fail("commute", "B and C do not commute elementwise"));
            }
        }
    }
    if b.dimension() * c.dimension() != ctx.dim() {
        return Err(fail(
            "dimension",
            format!("dim B · dim C = {} · {} ≠ {}", b.dimension(), c.dimension(), ctx.dim()),
        ));
    }
    let span = product_span(ctx, b.space(), c.space());
    if !span.is_full() {
        return Err(fail("product_span", format!("products span only {} of {}", span.dimension(), ctx.dim())));
    }
    let (ib, ic) = (b.augmentation_ideal(), c.augmentation_ideal());
    let ibic = product_span(ctx, ib, ic);
    let sum = ib.sum(ic)?.sum(&ibic)?;
    let total = ib.dimension() + ic.dimension() + ibic.dimension();
    if total != ctx.dim() - 1 || sum != ctx.augmentation_ideal() {
        return Err(fail("augmentation_decomposition", "I(G) ≠ I(B) ⊕ I(C) ⊕ I(B)I(C)"));
    }
    Ok(TensorFactorization { b, c })
}

impl TensorFactorization {
    /// `I(C) ⊕ I(B)I(C)`.
    pub fn kernel_of_projection(&self, ctx: &AlgebraContext) -> FpSubspace {
        let ic = self.c.augmentation_ideal();
        ic.sum(&product_span(ctx, self.b.augmentation_ideal(), ic)).expect("same ambient")
    }

    /// `p^s = exp V(B)`, requiring `B` commutative.
    pub fn unit_exponent_of_b(&self, ctx: &AlgebraContext) -> Result<usize> {
        let alg = self.b.structure(ctx);
        // in the adapted basis I(B) is spanned by every coordinate but the first
        let n = alg.dim();
        let aug: Vec<FpVector> = (1..n).map(|k| FpVector::unit(ctx.prime(), n, k)).collect();
        unit_exponent_commutative(&alg, &FpSubspace::span(ctx.prime(), n, &aug))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropPart {
    A,
    C,
    D,
}

/// Consequences of `kG = B ⊗ C` with `B` commutative:
///
/// * (a) `[kG,kG] = [I(C),I(C)] + [I(C),I(C)]I(B) ⊆ I(C) ⊕ I(B)I(C)`
/// * (c) `I(℧_s(G)G′)kG ⊆ I(C) ⊕ I(B)I(C)` where `p^s = exp V(B)`
/// * (d) `G` has a cyclic direct factor of order `p^s`
pub fn babelian_checks(ctx: &AlgebraContext, fact: &TensorFactorization, part: PropPart) -> Result<IdentityReport> {
    if !fact.b.is_commutative(ctx) {
        return Err(Error::NotAbelian);
    }
    let g = ctx.group();
    match part {
        PropPart::A => {
            let left = commutator_span(ctx, &ctx.whole(), &ctx.whole());
            let ic = fact.c.augmentation_ideal();
            let cc = commutator_span(ctx, ic, ic);
            let right = cc.sum(&product_span(ctx, &cc, fact.b.augmentation_ideal()))?;
            let mut r = IdentityReport::subspaces("prop-a", vec![], Relation::Equal, &left, &right);
            let inside = right.is_subspace_of(&fact.kernel_of_projection(ctx));
            r.checks.push(SubCheck { name: "contained_in_IC+IBIC".into(), holds: inside });
            r.holds &= inside;
            Ok(r)
        }
        PropPart::C => {
            let exp = fact.unit_exponent_of_b(ctx)?;
            let s = g.p().log(exp).expect("p-power exponent");
            let n = g.join(&agemo_or_whole(g, s), &g.derived());
            let left = ctx.normal_subgroup_ideal(&n)?;
            let mut r =
                IdentityReport::subspaces("prop-c", vec![s], Relation::Contained, &left, &fact.kernel_of_projection(ctx));
            r.note = Some(format!("exp V(B) = {exp}"));
            Ok(r)
        }
        PropPart::D => {
            let exp = fact.unit_exponent_of_b(ctx)?;
            let s = g.p().log(exp).expect("p-power exponent");
            if s == 0 {
                return Ok(IdentityReport {
                    id: "prop-d",
                    params: vec![0],
                    relation: Relation::AtLeast,
                    left: 1,
                    right: 1,
                    holds: true,
                    witness: None,
                    checks: Vec::new(),
                    note: Some("B = k, trivial factor".into()),
                });
            }
            let out = cyclic_factor_test(g, s)?;
            Ok(IdentityReport {
                id: "prop-d",
                params: vec![s],
                relation: Relation::AtLeast,
                left: out.exponent,
                right: exp,
                holds: out.has_factor,
                witness: None,
                checks: Vec::new(),
                note: Some(format!("exp V(B) = {exp}")),
            })
        }
    }
}

/// `℧_s(G)`, with `℧_0(G) = G`.
fn agemo_or_whole(g: &PGroup, s: u32) -> crate::group::Subgroup {
    if s == 0 {
        g.whole()
    } else {
        g.characteristic_subgroup(CharacteristicKind::Agemo(s)).expect("s ≥ 1")
    }
}

/// Evidence that `gΦ(G) ↦ (g - 1) + I(G)²` is an isomorphism
/// `G/Φ(G) → I(G)/I(G)²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrattiniReport {
    /// `dim I(G)/I(G)²`.
    pub rank: usize,
    /// `log_p |G : Φ(G)|`.
    pub frattini_rank: u32,
    pub additive: bool,
    pub kernel_is_frattini: bool,
    pub bijective: bool,
    pub dimension_subgroup_is_frattini: bool,
}

impl FrattiniReport {
    pub fn holds(&self) -> bool {
        self.additive && self.kernel_is_frattini && self.bijective && self.dimension_subgroup_is_frattini
    }
}

/// Checks the Frattini correspondence element by element.
pub fn frattini_correspondence(ctx: &AlgebraContext) -> Result<FrattiniReport> {
    let g = ctx.group();
    let n = g.order();
    let quotient = QuotientSpace::new(ctx.augmentation_ideal(), ctx.augmentation_power(2))?;
    let phi: Vec<FpVector> = (0..n).map(|x| quotient.project(&ctx.e_minus_one(x))).collect::<Result<_>>()?;
    let additive = (0..n).all(|a| (0..n).all(|b| phi[g.mul(a, b)] == phi[a].clone().sum(&phi[b])));
    let frattini = g.frattini();
    let kernel_is_frattini = (0..n).all(|x| phi[x].is_zero() == frattini.contains(x));
    let mut images: Vec<Vec<u32>> = phi.iter().map(FpVector::to_residues).collect();
    images.sort();
    images.dedup();
    let index = n / frattini.order();
    let rank = quotient.dimension();
    let bijective = images.len() == index && g.p().pow(rank as u32) == index;
    Ok(FrattiniReport {
        rank,
        frattini_rank: g.frattini_rank(),
        additive,
        kernel_is_frattini,
        bijective,
        dimension_subgroup_is_frattini: ctx.dimension_subgroup(2)? == frattini,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_named, direct_product, has_cyclic_factor_oracle};

    fn ctx(name: &str) -> AlgebraContext {
        AlgebraContext::new(build_named(name).unwrap())
    }

    #[test]
    fn lemma_examples() {
        let e = ctx("C2^3");
        let r = lemma_identity_check(&e, 1, 1, 1, OmegaRoute::default()).unwrap();
        assert!(r.holds);
        assert_eq!((r.left, r.right), (0, 0));
        let d8 = ctx("D8");
        let r = lemma_identity_check(&d8, 1, 1, 1, OmegaRoute::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.left, 4);
        let c2c4 = ctx("C2xC4");
        assert!(lemma_identity_check(&c2c4, 3, 1, 1, OmegaRoute::default()).unwrap().holds);
        for route in [OmegaRoute::Enumerate(1 << 16), OmegaRoute::Linear] {
            assert!(lemma_identity_check(&c2c4, 2, 1, 1, route).unwrap().holds);
        }
    }

    #[test]
    fn cyclic_factor_examples() {
        let g = build_named("C2xC4").unwrap();
        let out = cyclic_factor_test(&g, 2).unwrap();
        assert_eq!((out.has_factor, out.exponent), (true, 4));
        assert!(has_cyclic_factor_oracle(&g, 2, 64).unwrap());
        let d8 = build_named("D8").unwrap();
        let out = cyclic_factor_test(&d8, 1).unwrap();
        assert_eq!((out.has_factor, out.exponent), (false, 1));
        let c3 = build_named("C3").unwrap();
        assert_eq!(cyclic_factor_test(&c3, 1).unwrap().exponent, 3);
    }

    fn coordinate_factorization(a: &str, b: &str) -> (AlgebraContext, TensorFactorization) {
        let (ga, gb) = (build_named(a).unwrap(), build_named(b).unwrap());
        let g = direct_product(&ga, &gb).unwrap();
        let nb = gb.order();
        let ctx = AlgebraContext::new(g);
        let left: Vec<FpVector> = (0..ga.order()).map(|x| ctx.e(x * nb)).collect();
        let right: Vec<FpVector> = (0..nb).map(|y| ctx.e(y)).collect();
        let bb = AugmentedSubalgebra::from_vectors(&ctx, &left).unwrap();
        let cc = AugmentedSubalgebra::from_vectors(&ctx, &right).unwrap();
        let f = verify_tensor_factorization(&ctx, bb, cc).unwrap();
        (ctx, f)
    }

    #[test]
    fn factorization_checks() {
        let (ctx, f) = coordinate_factorization("C2", "C2");
        assert_eq!(f.b.dimension(), 2);
        let err = verify_tensor_factorization(&ctx, f.b.clone(), f.b.clone()).unwrap_err();
        assert!(matches!(err, Error::Factorization { check: "product_span", .. }));
        let whole = AugmentedSubalgebra::new(&ctx, ctx.whole()).unwrap();
        let err = verify_tensor_factorization(&ctx, whole.clone(), whole).unwrap_err();
        assert!(matches!(err, Error::Factorization { check: "dimension", .. }));

        let c4 = AlgebraContext::new(build_named("C4").unwrap());
        let sq = AugmentedSubalgebra::from_vectors(&c4, &[c4.one(), c4.e(2)]).unwrap();
        let err = verify_tensor_factorization(&c4, sq.clone(), sq).unwrap_err();
        assert!(matches!(err, Error::Factorization { check: "product_span", .. }));
    }

    #[test]
    fn proposition_on_c2_times_d8() {
        let (ctx, f) = coordinate_factorization("C2", "D8");
        for part in [PropPart::A, PropPart::C, PropPart::D] {
            let r = babelian_checks(&ctx, &f, part).unwrap();
            assert!(r.holds, "{r:?}");
        }
        let r = babelian_checks(&ctx, &f, PropPart::C).unwrap();
        assert_eq!(r.params, vec![1]);
    }

    #[test]
    fn proposition_d_on_c4_times_q8() {
        let (ctx, f) = coordinate_factorization("C4", "Q8");
        let r = babelian_checks(&ctx, &f, PropPart::D).unwrap();
        assert!(r.holds);
        assert_eq!(r.right, 4);
    }

    #[test]
    fn abelian_part_a_is_zero() {
        let (ctx, f) = coordinate_factorization("C2", "C4");
        let r = babelian_checks(&ctx, &f, PropPart::A).unwrap();
        assert!(r.holds);
        assert_eq!((r.left, r.right), (0, 0));
    }

    #[test]
    fn frattini_examples() {
        for name in ["D8", "C3xC9", "He3", "C2^3", "C1"] {
            let r = frattini_correspondence(&ctx(name)).unwrap();
            assert!(r.holds(), "{name}: {r:?}");
            assert_eq!(r.rank as u32, r.frattini_rank);
        }
    }
}
