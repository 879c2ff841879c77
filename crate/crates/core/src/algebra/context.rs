use std::sync::OnceLock;

use super::{commutator_span, multiplicative_closure, Algebra, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::group::{PGroup, Subgroup};
use crate::linalg::{FpSubspace, FpVector, LinearMap, Prime};

/// Default bound on `p^{dim Z(I(G))}` for enumerating the central ideal.
pub const DEFAULT_ENUM_CAP: u128 = 1 << 24;

/// The group algebra F_pG with basis `e_g`, `g` indexing the Cayley table.
#[derive(Clone, Debug)]
pub struct AlgebraContext {
    group: PGroup,
    gens: Vec<usize>,
    radical: OnceLock<Vec<FpSubspace>>,
    center: OnceLock<FpSubspace>,
    commutator_ideal: OnceLock<FpSubspace>,
}

impl Algebra for AlgebraContext {
    fn prime(&self) -> Prime {
        self.group.p()
    }

    fn dim(&self) -> usize {
        self.group.order()
    }

    fn one(&self) -> FpVector {
        self.e(0)
    }

    /// Convolution through the Cayley table.
    fn mul(&self, a: &FpVector, b: &FpVector) -> FpVector {
        let n = self.dim();
        let p = self.prime();
        let bs: Vec<(usize, u8)> = b.nonzero().collect();
        let mut acc = vec![0u32; n];
        for (g, ca) in a.nonzero() {
            for &(h, cb) in &bs {
                acc[self.group.mul(g, h)] += ca as u32 * cb as u32;
            }
        }
        let mut out = FpVector::zero(p, n);
        for (i, &c) in acc.iter().enumerate() {
            if c != 0 {
                out.set(i, p.reduce(c as i64));
            }
        }
        out
    }
}

impl AlgebraContext {
    pub fn new(group: PGroup) -> Self {
        let gens = group.minimal_generators();
        AlgebraContext {
            group,
            gens,
            radical: OnceLock::new(),
            center: OnceLock::new(),
            commutator_ideal: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &PGroup {
        &self.group
    }

    /// Minimal generators of `G` used for all closure computations.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Basis vector `e_g`.
    pub fn e(&self, g: usize) -> FpVector {
        FpVector::unit(self.prime(), self.dim(), g)
    }

    /// `e_g - e_1`.
    pub fn e_minus_one(&self, g: usize) -> FpVector {
        let mut v = FpVector::zero(self.prime(), self.dim());
        if g != 0 {
            v.set(g, 1);
            v.set(0, self.prime().neg(1));
        }
        v
    }

    /// Coefficient sum.
    pub fn augmentation(&self, a: &FpVector) -> u8 {
        a.coordinate_sum()
    }

    /// `v e_g`: permutes coordinates `x ↦ xg`.
    pub fn right_mul_group(&self, v: &FpVector, g: usize) -> FpVector {
        let mut out = FpVector::zero(self.prime(), self.dim());
        for (x, c) in v.nonzero() {
            out.set(self.group.mul(x, g), c);
        }
        out
    }

    /// `e_g v`.
    pub fn left_mul_group(&self, g: usize, v: &FpVector) -> FpVector {
        let mut out = FpVector::zero(self.prime(), self.dim());
        for (x, c) in v.nonzero() {
            out.set(self.group.mul(g, x), c);
        }
        out
    }

    pub fn whole(&self) -> FpSubspace {
        FpSubspace::full(self.prime(), self.dim())
    }

    pub fn zero_space(&self) -> FpSubspace {
        FpSubspace::zero(self.prime(), self.dim())
    }

    fn closure(&self, seed: &[FpVector], left: bool, right: bool) -> FpSubspace {
        let mut out = self.zero_space();
        let mut queue: Vec<FpVector> = seed.to_vec();
        while let Some(v) = queue.pop() {
            if out.is_full() {
                break;
            }
            if !out.insert(v.clone()) {
                continue;
            }
            for &g in &self.gens {
                if left {
                    queue.push(self.left_mul_group(g, &v));
                }
                if right {
                    queue.push(self.right_mul_group(&v, g));
                }
            }
        }
        out
    }

    /// Smallest two-sided ideal containing the given vectors.
    pub fn ideal_generated(&self, seed: &[FpVector]) -> FpSubspace {
        self.closure(seed, true, true)
    }

    /// Smallest right ideal containing the given vectors.
    pub fn right_ideal_generated(&self, seed: &[FpVector]) -> FpSubspace {
        self.closure(seed, false, true)
    }

    pub fn is_ideal(&self, j: &FpSubspace) -> bool {
        j.basis().iter().all(|v| {
            self.gens
                .iter()
                .all(|&g| j.contains(&self.left_mul_group(g, v)) && j.contains(&self.right_mul_group(v, g)))
        })
    }

    pub fn augmentation_ideal(&self) -> FpSubspace {
        self.augmentation_powers()[0].clone()
    }

    /// `I(G), I(G)^2, …` down to and including the first zero power.
    pub fn augmentation_powers(&self) -> &[FpSubspace] {
        self.radical.get_or_init(|| {
            let aug: Vec<FpVector> = (1..self.dim()).map(|g| self.e_minus_one(g)).collect();
            let mut powers = vec![FpSubspace::span(self.prime(), self.dim(), &aug)];
            // I^{m+1} = Σ_x I^m (x - 1) kG over generators x
            while !powers.last().unwrap().is_zero() {
                let last = powers.last().unwrap();
                let seed: Vec<FpVector> = last
                    .basis()
                    .iter()
                    .flat_map(|j| self.gens.iter().map(move |&x| self.right_mul_group(j, x).difference(j)))
                    .collect();
                powers.push(self.right_ideal_generated(&seed));
            }
            powers
        })
    }

    /// `I(G)^m`; `m = 0` gives the whole algebra.
    pub fn augmentation_power(&self, m: usize) -> FpSubspace {
        if m == 0 {
            return self.whole();
        }
        let powers = self.augmentation_powers();
        powers.get(m - 1).cloned().unwrap_or_else(|| self.zero_space())
    }

    /// Least `m` with `I(G)^m = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.augmentation_powers().len()
    }

    /// `I(N) kG`, spanned by `e_{ng} - e_g`.
    pub fn normal_subgroup_ideal(&self, n: &Subgroup) -> Result<FpSubspace> {
        self.group.check_subgroup(n)?;
        if !self.group.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut out = self.zero_space();
        for g in 0..self.dim() {
            for &x in n.elements().iter().filter(|&&x| x != 0) {
                out.insert(self.e(self.group.mul(x, g)).difference(&self.e(g)));
            }
        }
        Ok(out)
    }

    /// `Z(kG)`, the kernel of `v ↦ (x v - v x)_x` over the generators.
    pub fn center(&self) -> &FpSubspace {
        self.center.get_or_init(|| {
            let n = self.dim();
            let d = self.gens.len();
            let p = self.prime();
            let rows: Vec<FpVector> = (0..n)
                .map(|g| {
                    let mut row = FpVector::zero(p, n * d);
                    for (k, &x) in self.gens.iter().enumerate() {
                        row.add_at(k * n + self.group.mul(x, g), 1);
                        row.add_at(k * n + self.group.mul(g, x), p.neg(1));
                    }
                    row
                })
                .collect();
            LinearMap::from_rows(p, rows, n * d).expect("square system").kernel()
        })
    }

    /// `Z(I(G)) = Z(kG) ∩ I(G)`.
    pub fn center_augmentation(&self) -> FpSubspace {
        self.center().intersect(&self.augmentation_ideal()).expect("same ambient")
    }

    /// Span of the conjugacy class sums.
    pub fn class_sums(&self) -> FpSubspace {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = self.zero_space();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut v = FpVector::zero(self.prime(), n);
            for x in 0..n {
                let c = self.group.conjugate(g, x);
                if !seen[c] {
                    seen[c] = true;
                    v.set(c, 1);
                }
            }
            out.insert(v);
        }
        out
    }

    /// `[kG, kG] kG`, computed from commutators in the algebra.
    pub fn commutator_ideal(&self) -> &FpSubspace {
        self.commutator_ideal.get_or_init(|| {
            let comm = commutator_span(self, &self.whole(), &self.whole());
            self.ideal_generated(comm.basis())
        })
    }

    /// `Ω_i(Z(I(G)))` by enumerating every element of `Z(I(G))`: collects
    /// the `z` with `z^{p^i} = 0` and closes their span under products.
    pub fn omega_central(&self, i: u32, cap: u128) -> Result<FpSubspace> {
        let zi = self.center_augmentation();
        let p = self.prime().get() as u128;
        let k = zi.dimension() as u32;
        let size = p.checked_pow(k).unwrap_or(u128::MAX);
        if size > cap {
            return Err(Error::EnumerationCapExceeded { size, cap });
        }
        let basis = zi.basis();
        let mut digits = vec![0u8; basis.len()];
        let mut z = FpVector::zero(self.prime(), self.dim());
        let mut found = self.zero_space();
        for _ in 0..size {
            if !found.contains(&z) && self.p_power(&z, i).is_zero() {
                found.insert(z.clone());
            }
            // odometer step: z advances through all coefficient vectors
            for (d, b) in digits.iter_mut().zip(basis) {
                z.add(b);
                *d += 1;
                if (*d as u32) < self.prime().get() {
                    break;
                }
                *d = 0;
            }
        }
        Ok(multiplicative_closure(self, &found))
    }

    /// `Ω_i(Z(I(G)))` as the kernel of `z ↦ z^{p^i}` on `Z(I(G))`, which is
    /// linear because the center is commutative of characteristic `p`.
    pub fn omega_central_linear(&self, i: u32) -> FpSubspace {
        let zi = self.center_augmentation();
        let images: Vec<FpVector> = zi.basis().iter().map(|b| self.p_power(b, i)).collect();
        let map = LinearMap::new(self.prime(), zi.basis().to_vec(), images, self.dim()).expect("independent basis");
        multiplicative_closure(self, &map.kernel())
    }

    /// `℧_i(I(G)) kG + I(G′) kG`: the ideal generated by `(g - 1)^{p^i}`
    /// together with the commutator ideal. Modulo the commutator ideal the
    /// algebra is commutative, so powers of basis elements span all powers.
    pub fn mho_ideal_mod_derived(&self, i: u32) -> FpSubspace {
        let mut seed: Vec<FpVector> =
            (1..self.dim()).map(|g| self.p_power(&self.e_minus_one(g), i)).filter(|v| !v.is_zero()).collect();
        seed.extend(self.commutator_ideal().basis().iter().cloned());
        self.ideal_generated(&seed)
    }

    /// Dimension subgroup `D_m = {g : g - 1 ∈ I(G)^m}`.
    pub fn dimension_subgroup(&self, m: usize) -> Result<Subgroup> {
        if m == 0 {
            return Err(Error::Precondition("dimension subgroups need m ≥ 1".into()));
        }
        let im = self.augmentation_power(m);
        let mask = (0..self.dim()).map(|g| im.contains(&self.e_minus_one(g))).collect();
        Ok(Subgroup::from_mask(mask))
    }

    /// The quotient algebra `kG / J` for a two-sided ideal `J`.
    pub fn quotient_algebra(&self, j: &FpSubspace) -> Result<QuotientAlgebra> {
        if j.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: j.ambient_dim() });
        }
        if !self.is_ideal(j) {
            return Err(Error::NotAnIdeal);
        }
        QuotientAlgebra::new(self, j.clone())
    }

    /// Linear map `kG → k(G/N)` induced by a group homomorphism.
    pub fn induced_map(&self, images: &[usize], target_order: usize) -> LinearMap {
        let p = self.prime();
        let rows = images.iter().map(|&x| FpVector::unit(p, target_order, x)).collect();
        LinearMap::from_rows(p, rows, target_order).expect("unit rows")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{product_span, unit_exponent_commutative};
    use crate::group::build_named;

    fn ctx(name: &str) -> AlgebraContext {
        AlgebraContext::new(build_named(name).unwrap())
    }

    #[test]
    fn cyclic_four_truncated_polynomial() {
        let a = ctx("C4");
        let x = a.e_minus_one(1);
        let x2 = a.mul(&x, &x);
        // (g - 1)^2 = g^2 + 1 in characteristic 2
        assert_eq!(x2.to_residues(), vec![1, 0, 1, 0]);
        assert!(a.pow(&x, 4).is_zero());
        assert_eq!(a.augmentation(&x), 0);
        let dims: Vec<usize> = (1..=4).map(|m| a.augmentation_power(m).dimension()).collect();
        assert_eq!(dims, vec![3, 2, 1, 0]);
        assert_eq!(a.nilpotency_index(), 4);
    }

    #[test]
    fn cube_vanishes_in_f3_c3() {
        let a = ctx("C3");
        let aug = a.augmentation_ideal();
        assert_eq!(aug.dimension(), 2);
        for s in 0..3 {
            for t in 0..3 {
                let v = a.e_minus_one(1).scaled(s).sum(&a.e_minus_one(2).scaled(t));
                assert!(a.pow(&v, 3).is_zero());
            }
        }
    }

    #[test]
    fn powers_match_general_products() {
        for name in ["D8", "Q8", "C2xC4", "C3^2", "He3", "M16"] {
            let a = ctx(name);
            let i = a.augmentation_ideal();
            let mut prod = i.clone();
            for m in 2..=a.nilpotency_index() {
                prod = product_span(&a, &prod, &i);
                assert_eq!(prod, a.augmentation_power(m), "{name} m={m}");
            }
        }
    }

    #[test]
    fn commutator_span_of_d8() {
        let a = ctx("D8");
        // brute force: span of all e_g e_h - e_h e_g
        let mut brute = a.zero_space();
        for g in 0..8 {
            for h in 0..8 {
                brute.insert(a.mul(&a.e(g), &a.e(h)).difference(&a.mul(&a.e(h), &a.e(g))));
            }
        }
        assert_eq!(brute.dimension(), 3);
        assert_eq!(commutator_span(&a, &a.whole(), &a.whole()), brute);
        let ab = ctx("C2xC4");
        assert!(commutator_span(&ab, &ab.whole(), &ab.whole()).is_zero());
    }

    #[test]
    fn center_of_d8() {
        let a = ctx("D8");
        assert_eq!(a.center().dimension(), 5);
        assert_eq!(*a.center(), a.class_sums());
        assert_eq!(a.center_augmentation().dimension(), 4);
        let ab = ctx("C3^2");
        assert!(ab.center().is_full());
    }

    #[test]
    fn normal_subgroup_ideals() {
        let a = ctx("D8");
        let g = a.group().clone();
        assert!(a.normal_subgroup_ideal(&g.trivial_subgroup()).unwrap().is_zero());
        assert_eq!(a.normal_subgroup_ideal(&g.whole()).unwrap(), a.augmentation_ideal());
        let z = g.center();
        let j = a.normal_subgroup_ideal(&z).unwrap();
        assert_eq!(j.dimension(), 4);
        // equals the kernel of kG -> k(G/Z)
        let (_, pi) = g.quotient(&z).unwrap();
        assert_eq!(a.induced_map(pi.images(), 4).kernel(), j);
        let refl = (0..8).find(|&x| !g.is_central(x) && g.element_order(x) == 2).unwrap();
        assert!(matches!(a.normal_subgroup_ideal(&g.subgroup_generated(&[refl])), Err(Error::NotNormal)));
    }

    #[test]
    fn commutator_ideal_is_derived_ideal() {
        for name in ["D8", "Q8", "He3", "SD16", "C2xC4"] {
            let a = ctx(name);
            let d = a.group().derived();
            assert_eq!(*a.commutator_ideal(), a.normal_subgroup_ideal(&d).unwrap(), "{name}");
        }
    }

    #[test]
    fn omega_central_examples() {
        let a = ctx("C4");
        let om = a.omega_central(1, DEFAULT_ENUM_CAP).unwrap();
        let expect = a.ideal_generated(&[a.e_minus_one(2)]);
        assert_eq!(om, FpSubspace::span(a.prime(), 4, expect.basis()));
        assert_eq!(om.dimension(), 2);
        for name in ["C2xC4", "D8", "Q8", "He3", "C9"] {
            let a = ctx(name);
            for i in 1..=a.group().exponent_log() {
                assert_eq!(a.omega_central(i, DEFAULT_ENUM_CAP).unwrap(), a.omega_central_linear(i), "{name} {i}");
            }
        }
        assert!(ctx("C2^5").omega_central(1, 1 << 10).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn mho_ideal_examples() {
        let a = ctx("C4");
        assert_eq!(a.mho_ideal_mod_derived(1).dimension(), 2);
        let e = ctx("C2^3");
        assert!(e.mho_ideal_mod_derived(1).is_zero());
    }

    #[test]
    fn dimension_subgroups() {
        let a = ctx("D8");
        let g = a.group().clone();
        assert_eq!(a.dimension_subgroup(1).unwrap(), g.whole());
        assert_eq!(a.dimension_subgroup(2).unwrap(), g.frattini());
        assert!(a.dimension_subgroup(a.nilpotency_index()).unwrap().is_trivial());
    }

    #[test]
    fn quotient_by_derived_ideal_of_d8() {
        let a = ctx("D8");
        let j = a.commutator_ideal().clone();
        let q = a.quotient_algebra(&j).unwrap();
        assert_eq!(q.algebra().dim(), 4);
        let b = ctx("C2^2");
        // radical filtration dimensions agree with F_2(C2 x C2)
        let rad = q.radical_dimensions();
        let expect: Vec<usize> = (1..=b.nilpotency_index()).map(|m| b.augmentation_power(m).dimension()).collect();
        assert_eq!(rad, expect);
        assert_eq!(a.quotient_algebra(&a.zero_space()).unwrap().algebra().dim(), 8);
        assert_eq!(a.quotient_algebra(&a.augmentation_ideal()).unwrap().algebra().dim(), 1);
        let not_ideal = FpSubspace::span(a.prime(), 8, &[a.e_minus_one(1)]);
        assert!(matches!(a.quotient_algebra(&not_ideal), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn unit_exponents() {
        let a = ctx("C2");
        assert_eq!(unit_exponent_commutative(&a, &a.augmentation_ideal()).unwrap(), 2);
        let a = ctx("C4");
        assert_eq!(unit_exponent_commutative(&a, &a.augmentation_ideal()).unwrap(), 4);
        let a = ctx("C9xC3");
        assert_eq!(unit_exponent_commutative(&a, &a.augmentation_ideal()).unwrap(), 9);
        let a = ctx("Q8");
        assert!(matches!(unit_exponent_commutative(&a, &a.augmentation_ideal()), Err(Error::NotAbelian)));
    }
}
