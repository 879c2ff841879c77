//! Finite p-groups given by Cayley tables.

mod catalog;
mod oracle;
mod retraction;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Prime;

pub use catalog::{build_named, catalog, catalog_build, direct_product, CatalogEntry, Family};
pub use oracle::{
    direct_factor_oracle, find_direct_factor, has_cyclic_factor_oracle, indecomposable_factors,
    normal_subgroups, DEFAULT_ORACLE_CAP,
};
pub use retraction::{retraction_complement, retraction_onto};

/// Largest group order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 256;

/// A finite p-group stored as its multiplication table. Element 0 is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGroup {
    p: Prime,
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    name: String,
}

/// Subgroup of some [`PGroup`], as a sorted list of element indices plus a
/// membership mask over the parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
    mask: Vec<bool>,
}

/// Serialized as the ascending list of its elements.
impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

/// Homomorphism between two tables, as the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    images: Vec<usize>,
    target_order: usize,
}

/// Cyclic decomposition of an abelian p-group: orders `p^{e_1} ≥ p^{e_2} ≥ …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianInvariants(pub Vec<usize>);

impl AbelianInvariants {
    pub fn order(&self) -> usize {
        self.0.iter().product()
    }

    pub fn exponent(&self) -> usize {
        self.0.first().copied().unwrap_or(1)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharacteristicKind {
    Center,
    Derived,
    Omega(u32),
    Agemo(u32),
    Frattini,
}

/// `R_i(G) = Ω_i(Z(G))℧_i(G)G′ / ℧_i(G)G′`, with the surrounding quotient.
#[derive(Clone, Debug)]
pub struct RSubquotient {
    /// `G / ℧_i(G)G′`.
    pub quotient: PGroup,
    pub projection: GroupHom,
    /// `R_i(G)` as a subgroup of `quotient`.
    pub embedded: Subgroup,
    /// `R_i(G)` as a group in its own right.
    pub group: PGroup,
}

/// Isomorphism-invariant summary used to label results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub name: String,
    pub p: u32,
    pub order: usize,
    pub exponent: usize,
    pub abelianization: AbelianInvariants,
    pub center_size: usize,
}

impl PGroup {
    /// Builds a group from a full Cayley table, validating every invariant.
    /// If the identity is not element 0 it is swapped into place.
    pub fn from_table(p: Prime, rows: &[Vec<usize>], name: impl Into<String>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, limit: MAX_ORDER });
        }
        if p.log(n).is_none() {
            return Err(Error::NotPGroup { p: p.get(), order: n });
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {a} has length {} (expected {n})", row.len())));
            }
            if let Some(b) = row.iter().position(|&x| x >= n) {
                return Err(Error::InvalidTable(format!("table[{a}][{b}] = {} out of range", row[b])));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        // relabel by the transposition (0 identity)
        let relabel = |x: usize| {
            if x == 0 {
                identity
            } else if x == identity {
                0
            } else {
                x
            }
        };
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = relabel(rows[relabel(a)][relabel(b)]) as u16;
            }
        }
        Self::from_flat(p, n, table, name.into(), true)
    }

    /// Builds a group of order `n` from a multiplication function on
    /// `0..n`; element 0 must be the identity.
    pub fn from_fn(p: Prime, n: usize, name: impl Into<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::from_fn_checked(p, n, name.into(), mul, true)
    }

    /// Like [`PGroup::from_fn`] but skips the associativity check; used for
    /// quotients and subgroups of an already validated group.
    fn derived_from_fn(p: Prime, n: usize, name: String, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::from_fn_checked(p, n, name, mul, false)
    }

    fn from_fn_checked(
        p: Prime,
        n: usize,
        name: String,
        mul: impl Fn(usize, usize) -> usize,
        check_assoc: bool,
    ) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, limit: MAX_ORDER });
        }
        if p.log(n).is_none() {
            return Err(Error::NotPGroup { p: p.get(), order: n });
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = mul(a, b);
                if c >= n {
                    return Err(Error::InvalidTable(format!("{a}*{b} = {c} out of range")));
                }
                table[a * n + b] = c as u16;
            }
        }
        for x in 0..n {
            if table[x] as usize != x || table[x * n] as usize != x {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        Self::from_flat(p, n, table, name, check_assoc)
    }

    fn from_flat(p: Prime, n: usize, table: Vec<u16>, name: String, check_assoc: bool) -> Result<Self> {
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let mut seen = vec![false; n];
            for &x in row {
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::InvalidTable(format!("row {a} repeats element {x}")));
                }
            }
            let inv = row.iter().position(|&x| x == 0).expect("row is a permutation");
            if table[inv * n + a] != 0 {
                return Err(Error::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
            inverse[a] = inv as u16;
        }
        for a in (0..n).filter(|_| check_assoc) {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(PGroup { p, order: n, table, inverse, name })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Rows of the Cayley table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].iter().map(|&x| x as usize).collect())
            .collect()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let (mut acc, mut base, mut k) = (0, a, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `g^{-1} a g`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let p = self.p.get() as usize;
        let (mut x, mut ord) = (g, 1);
        while x != 0 {
            x = self.pow(x, p);
            ord *= p;
        }
        ord
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|g| self.element_order(g)).max().unwrap_or(1)
    }

    /// `log_p exp(G)`.
    pub fn exponent_log(&self) -> u32 {
        self.p.log(self.exponent()).expect("exponent is a power of p")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, g: usize) -> bool {
        (0..self.order).all(|x| self.mul(g, x) == self.mul(x, g))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, vec![0])
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, (0..self.order).collect())
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        let mut conj: Vec<usize> = Vec::new();
        let mut seen = vec![false; self.order];
        for &a in gens {
            for g in 0..self.order {
                let c = self.conjugate(a, g);
                if !seen[c] {
                    seen[c] = true;
                    conj.push(c);
                }
            }
        }
        self.subgroup_generated(&conj)
    }

    /// Subgroup generated by the union of two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = a.elements.iter().chain(&b.elements).copied().collect();
        self.subgroup_generated(&gens)
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        n.elements.iter().all(|&x| (0..self.order).all(|g| n.contains(self.conjugate(x, g))))
    }

    pub fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.mask.len() != self.order {
            return Err(Error::DimensionMismatch { expected: self.order, found: h.mask.len() });
        }
        if !h.contains(0) || h.elements.iter().any(|&a| h.elements.iter().any(|&b| !h.contains(self.mul(a, b)))) {
            return Err(Error::Precondition("not a subgroup".into()));
        }
        Ok(())
    }

    pub fn center(&self) -> Subgroup {
        Subgroup::from_mask((0..self.order).map(|g| self.is_central(g)).collect())
    }

    pub fn derived(&self) -> Subgroup {
        let mut comms = Vec::new();
        let mut seen = vec![false; self.order];
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.commutator(a, b);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.subgroup_generated(&comms)
    }

    /// `Ω_i(H) = ⟨h ∈ H : h^{p^i} = 1⟩`.
    pub fn omega_of(&self, h: &Subgroup, i: u32) -> Subgroup {
        let e = self.p.pow(i);
        let gens: Vec<usize> = h.elements.iter().copied().filter(|&g| self.pow(g, e) == 0).collect();
        self.subgroup_generated(&gens)
    }

    /// `℧_i(H) = ⟨h^{p^i} : h ∈ H⟩`.
    pub fn agemo_of(&self, h: &Subgroup, i: u32) -> Subgroup {
        let e = self.p.pow(i);
        let gens: Vec<usize> = h.elements.iter().map(|&g| self.pow(g, e)).collect();
        self.subgroup_generated(&gens)
    }

    pub fn omega(&self, i: u32) -> Subgroup {
        self.omega_of(&self.whole(), i)
    }

    pub fn agemo(&self, i: u32) -> Subgroup {
        self.agemo_of(&self.whole(), i)
    }

    /// `Φ(G) = ℧_1(G)G′`.
    pub fn frattini(&self) -> Subgroup {
        self.join(&self.agemo(1), &self.derived())
    }

    pub fn characteristic_subgroup(&self, kind: CharacteristicKind) -> Result<Subgroup> {
        Ok(match kind {
            CharacteristicKind::Center => self.center(),
            CharacteristicKind::Derived => self.derived(),
            CharacteristicKind::Omega(i) | CharacteristicKind::Agemo(i) if i == 0 => {
                return Err(Error::Precondition("Ω_i and ℧_i need i ≥ 1".into()))
            }
            CharacteristicKind::Omega(i) => self.omega(i),
            CharacteristicKind::Agemo(i) => self.agemo(i),
            CharacteristicKind::Frattini => self.frattini(),
        })
    }

    /// Greedy minimal generating set: ascending elements outside the
    /// subgroup generated so far times `Φ(G)`.
    pub fn minimal_generators(&self) -> Vec<usize> {
        self.minimal_generators_extending(&[])
    }

    /// Minimal generating set modulo `Φ(G)` that starts with `prefix`
    /// (`prefix` is kept as is even when dependent).
    pub fn minimal_generators_extending(&self, prefix: &[usize]) -> Vec<usize> {
        let phi = self.frattini();
        let mut gens: Vec<usize> = prefix.to_vec();
        let mut span = self.join(&self.subgroup_generated(&gens), &phi);
        for g in 0..self.order {
            if span.order() == self.order {
                break;
            }
            if !span.contains(g) {
                gens.push(g);
                span = self.join(&span, &self.subgroup_generated(&[g]));
            }
        }
        gens
    }

    /// `log_p |G : Φ(G)|`, the minimal number of generators.
    pub fn frattini_rank(&self) -> u32 {
        self.p.log(self.order / self.frattini().order()).expect("p-group")
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<(PGroup, GroupHom)> {
        self.check_subgroup(n)?;
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset[g] == usize::MAX {
                let id = reps.len();
                reps.push(g);
                for &x in &n.elements {
                    coset[self.mul(g, x)] = id;
                }
            }
        }
        let m = reps.len();
        let q = PGroup::derived_from_fn(self.p, m, format!("{}/N{}", self.name, n.order()), |a, b| {
            coset[self.mul(reps[a], reps[b])]
        })?;
        Ok((q, GroupHom { images: coset, target_order: m }))
    }

    /// A subgroup re-indexed as a group of its own, with the embedding
    /// `new index -> old index`.
    pub fn subgroup_as_group(&self, h: &Subgroup, name: impl Into<String>) -> (PGroup, Vec<usize>) {
        let index: Vec<usize> = {
            let mut idx = vec![usize::MAX; self.order];
            for (i, &g) in h.elements.iter().enumerate() {
                idx[g] = i;
            }
            idx
        };
        let els = &h.elements;
        let g = PGroup::derived_from_fn(self.p, els.len(), name.into(), |a, b| index[self.mul(els[a], els[b])])
            .expect("subgroup of a valid group is valid");
        (g, els.clone())
    }

    /// Invariants of an abelian subgroup, read off from the sizes of
    /// `{g : g^{p^k} = 1}`.
    pub fn abelian_invariants_of(&self, h: &Subgroup) -> Result<AbelianInvariants> {
        let els = &h.elements;
        if els.iter().any(|&a| els.iter().any(|&b| self.mul(a, b) != self.mul(b, a))) {
            return Err(Error::NotAbelian);
        }
        let p = self.p.get() as usize;
        let mut omega_logs = vec![0u32];
        let mut k = 0u32;
        loop {
            k += 1;
            let e = self.p.pow(k);
            let count = els.iter().filter(|&&g| self.pow(g, e) == 0).count();
            omega_logs.push(self.p.log(count).expect("Ω_k of an abelian p-group has p-power order"));
            if count == els.len() {
                break;
            }
        }
        let mut exps = Vec::new();
        for k in (1..omega_logs.len()).rev() {
            let at_least_k = omega_logs[k] - omega_logs[k - 1];
            let next = if k + 1 < omega_logs.len() { omega_logs[k + 1] - omega_logs[k] } else { 0 };
            for _ in 0..(at_least_k - next) {
                exps.push(p.pow(k as u32));
            }
        }
        Ok(AbelianInvariants(exps))
    }

    pub fn abelian_invariants(&self) -> Result<AbelianInvariants> {
        self.abelian_invariants_of(&self.whole())
    }

    /// Invariants of `G/G′`.
    pub fn abelianization_invariants(&self) -> AbelianInvariants {
        let (q, _) = self.quotient(&self.derived()).expect("derived subgroup is normal");
        q.abelian_invariants().expect("abelianization is abelian")
    }

    pub fn r_subquotient(&self, i: u32) -> Result<RSubquotient> {
        if i == 0 {
            return Err(Error::Precondition("R_i needs i ≥ 1".into()));
        }
        let derived = self.derived();
        let mho = self.join(&self.agemo(i), &derived);
        let omega_z = self.omega_of(&self.center(), i);
        let top = self.join(&omega_z, &mho);
        let (quotient, projection) = self.quotient(&mho)?;
        let embedded = projection.image_of(&top);
        let (group, _) = quotient.subgroup_as_group(&embedded, format!("R{i}({})", self.name));
        Ok(RSubquotient { quotient, projection, embedded, group })
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            name: self.name.clone(),
            p: self.p.get(),
            order: self.order,
            exponent: self.exponent(),
            abelianization: self.abelianization_invariants(),
            center_size: self.center().order(),
        }
    }

    /// Whether `a` and `b` form an internal direct decomposition of `G`.
    pub fn is_internal_direct_product(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.order() * b.order() == self.order
            && a.intersect(b).is_trivial()
            && self.is_normal(a)
            && self.is_normal(b)
            && a.elements.iter().all(|&x| b.elements.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// `(g, h) ↦ g·h` mapped into index space; convenience for product sets.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> Vec<usize> {
        let mut mask = vec![false; self.order];
        for &x in &a.elements {
            for &y in &b.elements {
                mask[self.mul(x, y)] = true;
            }
        }
        (0..self.order).filter(|&g| mask[g]).collect()
    }

    /// Whether `h` is cyclic of order `n`.
    pub fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.elements.iter().any(|&g| self.element_order(g) == h.order())
    }
}

impl Subgroup {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        let elements = (0..mask.len()).filter(|&g| mask[g]).collect();
        Subgroup { elements, mask }
    }

    fn from_sorted(parent_order: usize, elements: Vec<usize>) -> Self {
        let mut mask = vec![false; parent_order];
        for &g in &elements {
            mask[g] = true;
        }
        Subgroup { elements, mask }
    }

    /// Subgroup from a list of elements (not checked for closure).
    pub fn from_elements(parent_order: usize, elements: &[usize]) -> Self {
        let mut mask = vec![false; parent_order];
        for &g in elements {
            mask[g] = true;
        }
        Self::from_mask(mask)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask.get(g).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_mask(self.mask.iter().zip(&other.mask).map(|(&a, &b)| a && b).collect())
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// Maps a subgroup of a group re-indexed by `embedding` back to the parent.
    pub fn embed(&self, embedding: &[usize], parent_order: usize) -> Subgroup {
        let els: Vec<usize> = self.elements.iter().map(|&g| embedding[g]).collect();
        Subgroup::from_elements(parent_order, &els)
    }
}

impl GroupHom {
    pub fn new(images: Vec<usize>, target_order: usize) -> Self {
        GroupHom { images, target_order }
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_mask(self.images.iter().map(|&x| x == 0).collect())
    }

    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        let els: Vec<usize> = h.elements().iter().map(|&g| self.images[g]).collect();
        Subgroup::from_elements(self.target_order, &els)
    }

    pub fn is_homomorphism(&self, source: &PGroup, target: &PGroup) -> bool {
        self.images.len() == source.order()
            && self.images[0] == 0
            && (0..source.order()).all(|a| {
                (0..source.order()).all(|b| {
                    self.images[source.mul(a, b)] == target.mul(self.images[a], self.images[b])
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: u32, n: u32) -> PGroup {
        catalog_build("cyclic", &[p, n]).unwrap()
    }

    fn named(s: &str) -> PGroup {
        build_named(s).unwrap()
    }

    #[test]
    fn cyclic_orders() {
        let g = c(2, 2);
        assert_eq!(g.order(), 4);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn dihedral_has_two_elements_of_order_four() {
        let d8 = named("D8");
        let n4 = (0..8).filter(|&g| d8.element_order(g) == 4).count();
        assert_eq!(n4, 2);
        // reflections r^i s have order 2
        for g in 0..8 {
            let o = d8.element_order(g);
            assert!(o == 1 || o == 2 || o == 4);
        }
    }

    #[test]
    fn product_c2_c4_invariants() {
        let g = named("C2xC4");
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(g.abelian_invariants().unwrap(), AbelianInvariants(vec![4, 2]));
    }

    #[test]
    fn center_of_d8_is_derived() {
        let d8 = named("D8");
        let z = d8.center();
        // brute-force commuting test
        let brute: Vec<usize> =
            (0..8).filter(|&g| (0..8).all(|h| d8.mul(g, h) == d8.mul(h, g))).collect();
        assert_eq!(z.elements(), &brute[..]);
        assert_eq!(z.order(), 2);
        assert_eq!(z, d8.derived());
    }

    #[test]
    fn agemo_of_c2_c4() {
        let g = named("C2xC4");
        let squares: Vec<usize> = {
            let mut s: Vec<usize> = (0..8).map(|x| g.pow(x, 2)).collect();
            s.sort();
            s.dedup();
            s
        };
        let mho = g.agemo(1);
        assert_eq!(mho.order(), 2);
        assert_eq!(mho.elements(), &squares[..]);
    }

    #[test]
    fn elementary_abelian_frattini_trivial() {
        let g = named("C3^3");
        assert!(g.frattini().is_trivial());
        assert_eq!(g.frattini_rank(), 3);
    }

    #[test]
    fn quotient_d8_by_center() {
        let d8 = named("D8");
        let (q, pi) = d8.quotient(&d8.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.abelian_invariants().unwrap(), AbelianInvariants(vec![2, 2]));
        assert!(pi.is_homomorphism(&d8, &q));
        assert_eq!(pi.kernel(), d8.center());
    }

    #[test]
    fn quotient_extremes() {
        let g = named("Q8");
        let (q, _) = g.quotient(&g.trivial_subgroup()).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(q.table_rows(), g.table_rows());
        let (t, _) = g.quotient(&g.whole()).unwrap();
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let d8 = named("D8");
        let refl = (0..8).find(|&g| d8.element_order(g) == 2 && !d8.is_central(g)).unwrap();
        let h = d8.subgroup_generated(&[refl]);
        assert!(matches!(d8.quotient(&h), Err(Error::NotNormal)));
    }

    #[test]
    fn r_subquotients() {
        let d8 = named("D8");
        let r = d8.r_subquotient(1).unwrap();
        assert_eq!(r.group.order(), 1);
        assert!(r.group.abelian_invariants().unwrap().is_trivial());

        let g = named("C2xC4");
        assert_eq!(g.r_subquotient(1).unwrap().group.order(), 2);

        let e = named("C3xC3");
        let r = e.r_subquotient(1).unwrap();
        assert_eq!(r.group.order(), 9);
        assert_eq!(r.embedded.order(), r.quotient.order());
    }

    #[test]
    fn abelian_invariants_reject_nonabelian() {
        assert!(matches!(named("Q8").abelian_invariants(), Err(Error::NotAbelian)));
        assert_eq!(named("C2^3").abelian_invariants().unwrap(), AbelianInvariants(vec![2, 2, 2]));
    }

    #[test]
    fn identity_is_reindexed() {
        // C_3 written with identity at index 2
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = PGroup::from_table(Prime::THREE, &rows, "C3").unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 0), 1);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn broken_associativity_is_rejected() {
        // swap an intercalate in the table of C2^3: rows stay latin and 0 stays
        // the identity, but the loop is no longer associative
        let mut rows = named("C2^3").table_rows();
        assert_eq!((rows[1][4], rows[1][7], rows[2][4], rows[2][7]), (5, 6, 6, 5));
        rows[1][4] = 6;
        rows[1][7] = 5;
        rows[2][4] = 5;
        rows[2][7] = 6;
        assert!(matches!(PGroup::from_table(Prime::TWO, &rows, "bad"), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn non_p_power_order_is_rejected() {
        let rows: Vec<Vec<usize>> = (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect();
        assert!(matches!(PGroup::from_table(Prime::TWO, &rows, "C6"), Err(Error::NotPGroup { .. })));
    }

    #[test]
    fn frattini_rank_counts_generators() {
        assert_eq!(named("D8").frattini_rank(), 2);
        assert_eq!(named("C8").frattini_rank(), 1);
        assert_eq!(named("C2xD8").minimal_generators().len(), 3);
    }
}
