//! Brute-force direct-product oracles, independent of any algebra code.

use std::collections::HashSet;

use super::{PGroup, Subgroup};
use crate::error::{Error, Result};

/// Default order cap for [`direct_factor_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 64;

/// All normal subgroups, sorted by order and then by element list.
///
/// Grows the lattice upwards: every normal subgroup other than 1 is the
/// normal closure of `N ∪ {g}` for some smaller normal `N`, so closing each
/// known `N` with one coset representative at a time reaches all of them.
pub fn normal_subgroups(g: &PGroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let trivial = g.trivial_subgroup();
    seen.insert(trivial.mask.clone());
    let mut found = vec![trivial];
    let mut frontier = 0;
    while frontier < found.len() {
        let base = found[frontier].clone();
        frontier += 1;
        let mut covered = base.mask.clone();
        for x in 0..n {
            if covered[x] {
                continue;
            }
            // mark the whole coset xN so each coset is tried once
            for &y in &base.elements {
                covered[g.mul(x, y)] = true;
            }
            let mut gens = base.elements.clone();
            gens.extend((0..n).map(|c| g.conjugate(x, c)));
            gens.sort_unstable();
            gens.dedup();
            let closed = g.subgroup_generated(&gens);
            if seen.insert(closed.mask.clone()) {
                found.push(closed);
            }
        }
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    found
}

/// Every unordered pair `(H, K)` of nontrivial normal subgroups with
/// `H ∩ K = 1` and `HK = G`. Empty iff `G` is directly indecomposable.
pub fn direct_factor_oracle(g: &PGroup, cap: usize) -> Result<Vec<(Subgroup, Subgroup)>> {
    if g.order() > cap {
        return Err(Error::OracleCapExceeded { order: g.order(), cap });
    }
    let normals = normal_subgroups(g);
    let mut pairs = Vec::new();
    for (i, h) in normals.iter().enumerate() {
        if h.is_trivial() || h.order() == g.order() {
            continue;
        }
        for k in &normals[i + 1..] {
            if k.is_trivial() || h.order() * k.order() != g.order() || !h.intersect(k).is_trivial() {
                continue;
            }
            pairs.push((h.clone(), k.clone()));
        }
    }
    Ok(pairs)
}

/// First decomposition `G = H × K` in the oracle's order, with `|H| ≤ |K|`.
pub fn find_direct_factor(g: &PGroup, cap: usize) -> Result<Option<(Subgroup, Subgroup)>> {
    if g.order() > cap {
        return Err(Error::OracleCapExceeded { order: g.order(), cap });
    }
    let normals = normal_subgroups(g);
    for (i, h) in normals.iter().enumerate() {
        if h.is_trivial() || h.order() * h.order() > g.order() {
            continue;
        }
        let want = g.order() / h.order();
        let found = normals
            .iter()
            .enumerate()
            .find(|(j, k)| *j != i && k.order() == want && h.intersect(k).is_trivial());
        if let Some((_, k)) = found {
            return Ok(Some((h.clone(), k.clone())));
        }
    }
    Ok(None)
}

/// Decomposes `G` into directly indecomposable factors by repeated
/// splitting, returned as subgroups of `G` sorted by order.
pub fn indecomposable_factors(g: &PGroup, cap: usize) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    split_into(g, &(0..g.order()).collect::<Vec<_>>(), g.order(), cap, &mut out)?;
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(out)
}

fn split_into(g: &PGroup, embed: &[usize], parent: usize, cap: usize, out: &mut Vec<Subgroup>) -> Result<()> {
    if g.order() == 1 {
        return Ok(());
    }
    match find_direct_factor(g, cap)? {
        None => out.push(Subgroup::from_elements(parent, embed)),
        Some((h, k)) => {
            for part in [h, k] {
                let (sub, local) = g.subgroup_as_group(&part, g.name().to_string());
                let up: Vec<usize> = local.iter().map(|&x| embed[x]).collect();
                split_into(&sub, &up, parent, cap, out)?;
            }
        }
    }
    Ok(())
}

/// Whether `G` has a cyclic direct factor of order exactly `p^i`, decided
/// from the full decomposition into indecomposables.
pub fn has_cyclic_factor_oracle(g: &PGroup, i: u32, cap: usize) -> Result<bool> {
    let target = g.p().pow(i);
    Ok(indecomposable_factors(g, cap)?.iter().any(|f| f.order() == target && g.is_cyclic_subgroup(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_named;

    /// Brute force: every subset closed under products and conjugation.
    fn normal_subgroups_brute(g: &PGroup) -> usize {
        let n = g.order();
        assert!(n <= 16);
        (0u32..1 << n)
            .filter(|m| m & 1 == 1)
            .filter(|&m| {
                let has = |x: usize| m >> x & 1 == 1;
                (0..n).filter(|&a| has(a)).all(|a| {
                    (0..n).all(|b| (!has(b) || has(g.mul(a, b))) && has(g.conjugate(a, b)))
                })
            })
            .count()
    }

    #[test]
    fn normal_subgroup_counts_match_brute_force() {
        for name in ["C4", "C2^2", "D8", "Q8", "C2xC4", "C9", "C3^2", "M16"] {
            let g = build_named(name).unwrap();
            assert_eq!(normal_subgroups(&g).len(), normal_subgroups_brute(&g), "{name}");
        }
    }

    #[test]
    fn oracle_examples() {
        assert!(direct_factor_oracle(&build_named("D8").unwrap(), 64).unwrap().is_empty());
        assert!(direct_factor_oracle(&build_named("Q8").unwrap(), 64).unwrap().is_empty());
        let g = build_named("C2xC4").unwrap();
        let pairs = direct_factor_oracle(&g, 64).unwrap();
        assert!(pairs.iter().any(|(h, k)| {
            let inv = |s: &Subgroup| g.abelian_invariants_of(s).unwrap().0;
            (inv(h), inv(k)) == (vec![2], vec![4])
        }));
        for (h, k) in &pairs {
            assert!(g.is_internal_direct_product(h, k));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = build_named("C2^6").unwrap();
        assert!(matches!(direct_factor_oracle(&g, 32), Err(Error::OracleCapExceeded { .. })));
    }

    #[test]
    fn indecomposables() {
        let g = build_named("C2xD8").unwrap();
        let f = indecomposable_factors(&g, 64).unwrap();
        assert_eq!(f.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![2, 8]);
        assert!(has_cyclic_factor_oracle(&g, 1, 64).unwrap());
        assert!(!has_cyclic_factor_oracle(&g, 2, 64).unwrap());
        let g = build_named("C4xC8").unwrap();
        assert!(has_cyclic_factor_oracle(&g, 2, 64).unwrap());
        assert!(has_cyclic_factor_oracle(&g, 3, 64).unwrap());
        assert!(!has_cyclic_factor_oracle(&g, 1, 64).unwrap());
    }
}
