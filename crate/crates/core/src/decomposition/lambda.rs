use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraContext};
use crate::error::{Error, Result};
use crate::linalg::{FpSubspace, FpVector, LinearMap, QuotientSpace};

/// The `p^{s-1}`-power map
///
/// `(I(Ω_s(Z(G))G′)kG + I²)/I²  →  (I^{p^{s-1}} + M)/(I^{p^{s-1}+1} + M)`
///
/// with `I = I(G)` and `M = I(℧_s(G)G′)kG`.
#[derive(Clone, Debug)]
pub struct LambdaData {
    pub s: u32,
    pub domain: QuotientSpace,
    pub codomain: QuotientSpace,
    /// From domain section coordinates to codomain section coordinates.
    pub map: LinearMap,
    /// Kernel, in domain section coordinates.
    pub kernel: FpSubspace,
}

impl LambdaData {
    /// The kernel lifted to `kG`, together with `I(G)²`.
    pub fn kernel_lift(&self) -> FpSubspace {
        self.domain.preimage(&self.kernel)
    }

    /// `Λ(z + I²)` in codomain coordinates.
    pub fn apply(&self, z: &FpVector) -> Result<FpVector> {
        self.map.apply(&self.domain.project(z)?)
    }

    pub fn rank(&self) -> usize {
        self.map.rank()
    }
}

fn random_in(rng: &mut ChaCha8Rng, space: &FpSubspace) -> FpVector {
    let p = space.prime();
    let mut v = FpVector::zero(p, space.ambient_dim());
    for b in space.basis() {
        v.add_scaled(b, rng.gen_range(0..p.get()) as u8);
    }
    v
}

/// Builds `Λ^{s-1}_G`. Each basis image is re-evaluated on a random shift
/// by `I(G)²` and on a random linear combination; any disagreement is
/// reported as an error rather than absorbed.
pub fn lambda_map(ctx: &AlgebraContext, s: u32, seed: u64) -> Result<LambdaData> {
    let g = ctx.group();
    if s == 0 || s > g.exponent_log() {
        return Err(Error::Precondition(format!("need 1 ≤ s ≤ log_p exp(G) = {}", g.exponent_log())));
    }
    let p = ctx.prime();
    let q = p.pow(s - 1);
    let derived = g.derived();
    let i2 = ctx.augmentation_power(2);
    let w = ctx.normal_subgroup_ideal(&g.join(&g.omega_of(&g.center(), s), &derived))?.sum(&i2)?;
    let m = ctx.normal_subgroup_ideal(&g.join(&g.agemo(s), &derived))?;
    let domain = QuotientSpace::new(w, i2.clone())?;
    let codomain = QuotientSpace::new(ctx.augmentation_power(q).sum(&m)?, ctx.augmentation_power(q + 1).sum(&m)?)?;

    let image_of = |z: &FpVector| {
        codomain
            .project(&ctx.pow(z, q))
            .map_err(|_| Error::LambdaNotWellDefined("power leaves I^{p^(s-1)} + M".into()))
    };
    let images: Vec<FpVector> = domain.section().iter().map(image_of).collect::<Result<_>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (k, z) in domain.section().iter().enumerate() {
        let shifted = z.clone().sum(&random_in(&mut rng, &i2));
        if image_of(&shifted)? != images[k] {
            return Err(Error::LambdaNotWellDefined(format!("basis vector {k} changes under an I² shift")));
        }
    }
    if !images.is_empty() {
        let coeffs: Vec<u8> = images.iter().map(|_| rng.gen_range(0..p.get()) as u8).collect();
        let mut z = FpVector::zero(p, ctx.dim());
        let mut expect = FpVector::zero(p, codomain.dimension());
        for (k, &c) in coeffs.iter().enumerate() {
            z.add_scaled(&domain.section()[k], c);
            expect.add_scaled(&images[k], c);
        }
        if image_of(&z)? != expect {
            return Err(Error::LambdaNotWellDefined("not additive on a random combination".into()));
        }
    }
    let map = LinearMap::from_rows(p, images, codomain.dimension())?;
    let kernel = map.kernel();
    Ok(LambdaData { s, domain, codomain, map, kernel })
}
