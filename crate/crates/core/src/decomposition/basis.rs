use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{product_span, Algebra, AlgebraContext, AugmentedSubalgebra, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::group::AbelianInvariants;
use crate::linalg::{FpSubspace, FpVector, Prime};

/// Limits for the group basis search.
#[derive(Clone, Copy, Debug)]
pub struct BasisSearch {
    /// Enumerate `1 + I(B)` when it has at most this many elements.
    pub enum_cap: u128,
    pub seed: u64,
    /// Number of random samples when enumeration is out of reach.
    pub samples: usize,
    /// Maximum number of search nodes.
    pub node_budget: usize,
}

impl Default for BasisSearch {
    fn default() -> Self {
        BasisSearch { enum_cap: crate::algebra::DEFAULT_ENUM_CAP, seed: 0, samples: 4096, node_budget: 1 << 16 }
    }
}

/// Units `u_1, …, u_r` of `B` with `⟨u_1⟩ × ⋯ × ⟨u_r⟩` a basis of `B`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupBasis {
    /// The generators, as elements of `kG`, in non-increasing order.
    pub units: Vec<FpVector>,
    pub orders: Vec<usize>,
    pub invariants: AbelianInvariants,
}

/// Order of `1 + x` for nilpotent `x` in a commutative algebra of
/// characteristic `p`: the least `p^t` with `x^{p^t} = 0`.
fn unit_order<A: Algebra + ?Sized>(alg: &A, x: &FpVector) -> usize {
    let p = alg.prime().get() as usize;
    let mut y = x.clone();
    let mut order = 1;
    while !y.is_zero() {
        y = alg.p_power(&y, 1);
        order *= p;
    }
    order
}

/// All elements of the group generated by commuting units with the given
/// orders, when it is a direct product of the cyclic groups and its
/// elements are linearly independent.
fn independent_group<A: Algebra + ?Sized>(alg: &A, units: &[FpVector], orders: &[usize]) -> Option<Vec<FpVector>> {
    let mut elements = vec![alg.one()];
    let mut span = FpSubspace::span(alg.prime(), alg.dim(), &elements);
    for (u, &o) in units.iter().zip(orders) {
        let base = elements.clone();
        let mut power = alg.one();
        for _ in 1..o {
            power = alg.mul(&power, u);
            for g in &base {
                let x = alg.mul(g, &power);
                if !span.insert(x.clone()) {
                    return None;
                }
                elements.push(x);
            }
        }
    }
    Some(elements)
}

/// Finds a group basis of a commutative `B` by depth-first search over
/// `1 + x`, `x ∈ I(B) \ I(B)²`, taken in non-increasing order of
/// multiplicative order, keeping the classes of the chosen `x` independent
/// modulo `I(B)²` and all products of the chosen units linearly independent.
pub fn find_group_basis_commutative(
    ctx: &AlgebraContext,
    b: &AugmentedSubalgebra,
    search: BasisSearch,
) -> Result<GroupBasis> {
    if !b.is_commutative(ctx) {
        return Err(Error::NotAbelian);
    }
    let adapted = b.adapted_basis(ctx);
    let alg = b.structure(ctx);
    let m = alg.dim();
    let p = alg.prime();
    if m == 1 {
        return Ok(GroupBasis { units: Vec::new(), orders: Vec::new(), invariants: AbelianInvariants(Vec::new()) });
    }
    let aug: Vec<FpVector> = (1..m).map(|k| FpVector::unit(p, m, k)).collect();
    let aug = FpSubspace::span(p, m, &aug);
    let aug2 = product_span(&alg, &aug, &aug);

    let raw = candidate_vectors(p, m, search)?;
    let mut cands: Vec<(usize, FpVector)> =
        raw.into_iter().filter(|x| !aug2.contains(x)).map(|x| (unit_order(&alg, &x), x)).collect();
    // stable: ties keep the enumeration order
    cands.sort_by_key(|c| std::cmp::Reverse(c.0));

    let mut st = Dfs { alg: &alg, aug2: &aug2, cands: &cands, target: m, nodes: 0, budget: search.node_budget };
    let mut picked = Vec::new();
    if !st.run(&mut picked, 0, 1) {
        let why = if st.nodes > st.budget { "node budget exhausted" } else { "search space exhausted" };
        return Err(Error::GroupBasisNotFound(format!("{why} for dim B = {m}")));
    }
    let to_kg = |x: &FpVector| {
        let mut v = adapted[0].clone();
        for (k, c) in x.nonzero() {
            v.add_scaled(&adapted[k], c);
        }
        v
    };
    let units: Vec<FpVector> = picked.iter().map(|&i| to_kg(&cands[i].1)).collect();
    let orders: Vec<usize> = picked.iter().map(|&i| cands[i].0).collect();
    Ok(GroupBasis { units, orders: orders.clone(), invariants: AbelianInvariants(orders) })
}

fn candidate_vectors(p: Prime, m: usize, search: BasisSearch) -> Result<Vec<FpVector>> {
    let pp = p.get() as u128;
    let size = pp.checked_pow(m as u32 - 1).unwrap_or(u128::MAX);
    if size <= search.enum_cap {
        let mut out = Vec::with_capacity(size as usize);
        let mut digits = vec![0u8; m - 1];
        loop {
            // odometer over the coordinates of I(B)
            let mut k = 0;
            while k < digits.len() {
                digits[k] += 1;
                if (digits[k] as u32) < p.get() {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == digits.len() {
                return Ok(out);
            }
            let mut v = FpVector::zero(p, m);
            for (i, &d) in digits.iter().enumerate() {
                v.set(i + 1, d);
            }
            out.push(v);
        }
    }
    if search.samples == 0 {
        return Err(Error::EnumerationCapExceeded { size, cap: search.enum_cap });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    let mut out: Vec<FpVector> = (0..search.samples)
        .map(|_| {
            let mut v = FpVector::zero(p, m);
            for i in 1..m {
                v.set(i, rng.gen_range(0..p.get()) as u8);
            }
            v
        })
        .filter(|v| !v.is_zero())
        .collect();
    out.sort_by_key(FpVector::to_residues);
    out.dedup();
    Ok(out)
}

struct Dfs<'a> {
    alg: &'a FiniteAlgebra,
    aug2: &'a FpSubspace,
    cands: &'a [(usize, FpVector)],
    target: usize,
    nodes: usize,
    budget: usize,
}

impl Dfs<'_> {
    fn run(&mut self, picked: &mut Vec<usize>, from: usize, size: usize) -> bool {
        if size == self.target {
            return true;
        }
        let mut frattini = self.aug2.clone();
        for &i in picked.iter() {
            frattini.insert(self.cands[i].1.clone());
        }
        for i in from..self.cands.len() {
            let (o, x) = &self.cands[i];
            if !self.target.is_multiple_of(size * o) || frattini.contains(x) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            picked.push(i);
            let units: Vec<FpVector> = picked.iter().map(|&k| self.cands[k].1.clone().sum(&self.alg.one())).collect();
            let orders: Vec<usize> = picked.iter().map(|&k| self.cands[k].0).collect();
            if independent_group(self.alg, &units, &orders).is_some() && self.run(picked, i + 1, size * o) {
                return true;
            }
            picked.pop();
        }
        false
    }
}

/// Checks that the units generate a group of order `dim B` whose elements
/// span `B`.
pub fn verify_group_basis(ctx: &AlgebraContext, space: &FpSubspace, units: &[FpVector], orders: &[usize]) -> bool {
    if units.iter().zip(orders).any(|(u, &o)| unit_order(ctx, &u.clone().difference(&ctx.one())) != o) {
        return false;
    }
    match independent_group(ctx, units, orders) {
        Some(els) => els.len() == space.dimension() && els.iter().all(|x| space.contains(x)),
        None => false,
    }
}
