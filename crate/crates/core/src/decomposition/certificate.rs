use serde::Serialize;

use crate::algebra::AlgebraContext;
use crate::error::{Error, Result};
use crate::group::{direct_factor_oracle, PGroup};
use crate::linalg::QuotientSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    ThreeGenerated,
    CyclicDerived,
    None,
}

/// Whether `F_pG` is certified to admit no nontrivial tensor factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// `dim I(G)/I(G)²`.
    pub d: usize,
    pub frattini_rank: u32,
    pub derived_order: usize,
    pub derived_cyclic: bool,
    /// A generator of `G′` when it is cyclic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_generator: Option<usize>,
    pub directly_indecomposable: bool,
    /// Every hypothesis that holds, not just the one reported in `kind`.
    pub hypotheses: Vec<CertificateKind>,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        self.kind != CertificateKind::None
    }
}

/// A directly indecomposable `G` with `d(G) ≤ 3` or cyclic `G′` has a
/// tensor indecomposable group algebra over `F_p`.
pub fn certify_indecomposable(g: &PGroup, oracle_cap: usize) -> Result<Certificate> {
    let directly_indecomposable = direct_factor_oracle(g, oracle_cap)?.is_empty();
    let ctx = AlgebraContext::new(g.clone());
    let d = QuotientSpace::new(ctx.augmentation_ideal(), ctx.augmentation_power(2))?.dimension();
    let frattini_rank = g.frattini_rank();
    if d != frattini_rank as usize {
        return Err(Error::Verification {
            step: "certify",
            detail: format!("dim I/I² = {d} but the Frattini quotient has rank {frattini_rank}"),
        });
    }
    let derived = g.derived();
    let derived_generator = derived.elements().iter().copied().find(|&x| g.element_order(x) == derived.order());
    let mut hypotheses = Vec::new();
    if directly_indecomposable && d <= 3 {
        hypotheses.push(CertificateKind::ThreeGenerated);
    }
    if directly_indecomposable && derived_generator.is_some() {
        hypotheses.push(CertificateKind::CyclicDerived);
    }
    Ok(Certificate {
        kind: hypotheses.first().copied().unwrap_or(CertificateKind::None),
        d,
        frattini_rank,
        derived_order: derived.order(),
        derived_cyclic: derived_generator.is_some(),
        derived_generator,
        directly_indecomposable,
        hypotheses,
    })
}
