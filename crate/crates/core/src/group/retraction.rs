//! Retractions `χ: G → H` onto central subgroups, whose kernels give direct
//! complements.

use std::collections::VecDeque;

use super::{PGroup, Subgroup};
use crate::error::{Error, Result};

/// Kernel of a homomorphism `χ: G → ⟨h⟩` with `χ(h) = h`, so that
/// `G = ⟨h⟩ × K`.
pub fn retraction_complement(g: &PGroup, h: usize) -> Result<Subgroup> {
    retraction_onto(g, &[h]).map(|(k, _)| k)
}

/// Finds a homomorphism `χ: G → H = ⟨hs⟩` fixing every `h ∈ hs` and returns
/// its kernel together with the images `χ(x)` of all elements.
///
/// `H` must be central. Generators of `G` are chosen to start with `hs`, and
/// images of the remaining generators are searched one at a time; a partial
/// assignment is kept only if it extends consistently to the subgroup
/// generated so far.
pub fn retraction_onto(g: &PGroup, hs: &[usize]) -> Result<(Subgroup, Vec<usize>)> {
    if let Some(&bad) = hs.iter().find(|&&h| h >= g.order()) {
        return Err(Error::ElementOutOfRange(bad));
    }
    if let Some(&bad) = hs.iter().find(|&&h| !g.is_central(h)) {
        return Err(Error::Precondition(format!("element {bad} is not central")));
    }
    let target = g.subgroup_generated(hs);
    let gens = g.minimal_generators_extending(hs);
    let mut chi = vec![usize::MAX; g.order()];
    chi[0] = 0;
    let fixed: Vec<Option<usize>> = gens.iter().map(|&x| hs.contains(&x).then_some(x)).collect();
    if !search(g, &target, &gens, &fixed, 0, &mut chi) {
        return Err(Error::NoRetraction);
    }
    let kernel = Subgroup::from_mask(chi.iter().map(|&x| x == 0).collect());
    Ok((kernel, chi))
}

fn search(
    g: &PGroup,
    target: &Subgroup,
    gens: &[usize],
    fixed: &[Option<usize>],
    k: usize,
    chi: &mut Vec<usize>,
) -> bool {
    if k == gens.len() {
        return chi.iter().all(|&x| x != usize::MAX);
    }
    let candidates: Vec<usize> = match fixed[k] {
        Some(h) => vec![h],
        None => target.elements().to_vec(),
    };
    for img in candidates {
        let mut trial = chi.clone();
        if extend(g, &gens[..=k], &gens_images(gens, chi, k, img), &mut trial) && search(g, target, gens, fixed, k + 1, &mut trial) {
            *chi = trial;
            return true;
        }
    }
    false
}

fn gens_images(gens: &[usize], chi: &[usize], k: usize, img: usize) -> Vec<usize> {
    let mut out: Vec<usize> = gens[..k].iter().map(|&x| chi[x]).collect();
    out.push(img);
    out
}

/// Defines `χ` on `⟨gens⟩` by `χ(x g_j) = χ(x) χ(g_j)` starting from the
/// identity; fails on any inconsistency. A map satisfying this rule for all
/// generators is a homomorphism on the generated subgroup.
fn extend(g: &PGroup, gens: &[usize], images: &[usize], chi: &mut [usize]) -> bool {
    chi.iter_mut().for_each(|x| *x = usize::MAX);
    chi[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&gen, &img) in gens.iter().zip(images) {
            let y = g.mul(x, gen);
            let v = g.mul(chi[x], img);
            if chi[y] == usize::MAX {
                chi[y] = v;
                queue.push_back(y);
            } else if chi[y] != v {
                return false;
            }
        }
    }
    true
}
