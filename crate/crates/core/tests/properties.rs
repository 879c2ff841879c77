use proptest::prelude::*;

use fpg_core::algebra::{commutator_span, Algebra, AlgebraContext, AugmentedSubalgebra};
use fpg_core::decomposition::{certify_indecomposable, lambda_map, recover_decomposition, BasisSearch};
use fpg_core::group::{
    build_named, catalog, direct_factor_oracle, direct_product, find_direct_factor, retraction_onto, CatalogEntry,
};
use fpg_core::lemmas::{cyclic_factor_test, verify_tensor_factorization};
use fpg_core::linalg::{LinearMap, QuotientSpace};
use fpg_core::{FpSubspace, FpVector, PGroup, Prime};

fn small_catalog() -> Vec<CatalogEntry> {
    catalog(None, 32)
}

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u32, 3, 5]).prop_map(|p| Prime::new(p).unwrap())
}

fn vectors(p: Prime, n: usize, k: usize) -> impl Strategy<Value = Vec<FpVector>> {
    prop::collection::vec(prop::collection::vec(0i64..5, n), 0..=k)
        .prop_map(move |rows| rows.iter().map(|r| FpVector::from_residues(p, r)).collect())
}

fn two_spaces() -> impl Strategy<Value = (FpSubspace, FpSubspace)> {
    prime().prop_flat_map(|p| {
        (vectors(p, 12, 8), vectors(p, 12, 8)).prop_map(move |(a, b)| {
            (FpSubspace::span(p, 12, &a), FpSubspace::span(p, 12, &b))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subspace_dimension_formula((u, w) in two_spaces()) {
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dimension() + meet.dimension(), u.dimension() + w.dimension());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&w));
        prop_assert!(u.is_subspace_of(&sum) && w.is_subspace_of(&sum));
    }

    #[test]
    fn quotient_round_trip((u, w) in two_spaces()) {
        let meet = u.intersect(&w).unwrap();
        let q = QuotientSpace::new(w.clone(), meet.clone()).unwrap();
        prop_assert_eq!(q.dimension() + meet.dimension(), w.dimension());
        for v in w.basis() {
            let c = q.project(v).unwrap();
            prop_assert_eq!(q.project(&q.lift(&c)).unwrap(), c.clone());
            prop_assert!(meet.contains(&v.clone().difference(&q.lift(&c))));
        }
    }

    #[test]
    fn rank_nullity(p in prime(), rows in prop::collection::vec(prop::collection::vec(0i64..5, 7), 1..9)) {
        let images: Vec<FpVector> = rows.iter().map(|r| FpVector::from_residues(p, r)).collect();
        let n = images.len();
        let map = LinearMap::from_rows(p, images, 7).unwrap();
        prop_assert_eq!(map.rank() + map.kernel().dimension(), n);
        for k in map.kernel().basis() {
            prop_assert!(map.apply(k).unwrap().is_zero());
        }
    }

    #[test]
    fn characteristic_subgroups_are_normal(idx in 0usize..52, i in 1u32..4) {
        let entries = small_catalog();
        let g = entries[idx % entries.len()].build();
        for h in [g.omega(i), g.agemo(i), g.omega_of(&g.center(), i), g.frattini(), g.derived()] {
            prop_assert!(g.is_normal(&h));
            g.check_subgroup(&h).unwrap();
        }
        prop_assert!(g.agemo(i).is_subset_of(&g.omega(g.exponent_log())));
    }
}

fn each_group(max: usize, mut f: impl FnMut(&PGroup)) {
    for e in catalog(None, max) {
        f(&e.build());
    }
}

#[test]
fn oracle_pairs_are_direct_products() {
    each_group(32, |g| {
        for (h, k) in direct_factor_oracle(g, 64).unwrap() {
            assert!(g.is_internal_direct_product(&h, &k), "{}", g.name());
        }
    });
}

#[test]
fn normal_subgroup_ideal_dimension() {
    each_group(32, |g| {
        let ctx = AlgebraContext::new(g.clone());
        for n in [g.center(), g.derived(), g.frattini(), g.whole(), g.trivial_subgroup()] {
            let j = ctx.normal_subgroup_ideal(&n).unwrap();
            assert_eq!(j.dimension(), g.order() - g.order() / n.order(), "{}", g.name());
            assert!(ctx.is_ideal(&j));
        }
    });
}

#[test]
fn center_of_augmentation_splits() {
    // Z(I(G)) = I(Z(G)) ⊕ ([kG,kG] ∩ Z(kG))
    each_group(32, |g| {
        let ctx = AlgebraContext::new(g.clone());
        let zi = ctx.center_augmentation();
        let izg = {
            let basis: Vec<FpVector> = g.center().elements().iter().map(|&z| ctx.e_minus_one(z)).collect();
            FpSubspace::span(ctx.prime(), ctx.dim(), &basis)
        };
        let comm = commutator_span(&ctx, &ctx.whole(), &ctx.whole()).intersect(ctx.center()).unwrap();
        assert!(izg.intersect(&comm).unwrap().is_zero(), "{}", g.name());
        assert_eq!(izg.sum(&comm).unwrap(), zi, "{}", g.name());
    });
}

#[test]
fn frobenius_is_additive_modulo_commutators() {
    each_group(16, |g| {
        let ctx = AlgebraContext::new(g.clone());
        let j = ctx.commutator_ideal();
        let n = g.order();
        for a in (0..n).step_by(3) {
            for b in (1..n).step_by(5) {
                let (x, y) = (ctx.e_minus_one(a), ctx.e_minus_one(b));
                let lhs = ctx.p_power(&x.clone().sum(&y), 1);
                let rhs = ctx.p_power(&x, 1).sum(&ctx.p_power(&y, 1));
                assert!(j.contains(&lhs.difference(&rhs)), "{}", g.name());
            }
        }
    });
}

#[test]
fn r_subquotient_exponent_matches() {
    each_group(32, |g| {
        for i in 1..=g.exponent_log() {
            let out = cyclic_factor_test(g, i).unwrap();
            let r = g.r_subquotient(i).unwrap();
            assert_eq!(out.exponent, r.group.abelian_invariants().unwrap().exponent(), "{} i={i}", g.name());
        }
    });
}

#[test]
fn retractions_are_homomorphisms_onto_central_elements() {
    each_group(32, |g| {
        for h in g.center().elements().iter().copied().filter(|&h| h != 0) {
            let Ok((k, chi)) = retraction_onto(g, &[h]) else { continue };
            let hh = g.subgroup_generated(&[h]);
            assert_eq!(chi[h], h);
            assert!(chi.iter().all(|&x| hh.contains(x)));
            for a in 0..g.order() {
                for b in (0..g.order()).step_by(7) {
                    assert_eq!(chi[g.mul(a, b)], g.mul(chi[a], chi[b]));
                }
            }
            assert!(g.is_internal_direct_product(&hh, &k), "{} h={h}", g.name());
        }
    });
}

#[test]
fn lambda_dichotomy() {
    // generators of cyclic direct factors of order p^s stay outside ker Λ;
    // without such a factor every domain class of an order-p^s element is
    // in the kernel
    each_group(32, |g| {
        let ctx = AlgebraContext::new(g.clone());
        for s in 1..=g.exponent_log() {
            let l = lambda_map(&ctx, s, 7).unwrap();
            let kernel = l.kernel_lift();
            let has = cyclic_factor_test(g, s).unwrap().has_factor;
            let order = g.p().pow(s);
            for x in (0..g.order()).filter(|&x| g.element_order(x) == order) {
                let v = ctx.e_minus_one(x);
                if !l.domain.ambient().contains(&v) {
                    continue;
                }
                if !has {
                    assert!(kernel.contains(&v), "{} s={s} x={x}", g.name());
                } else if g.is_central(x) && retraction_onto(g, &[x]).is_ok() {
                    assert!(!kernel.contains(&v), "{} s={s} x={x}", g.name());
                }
            }
        }
    });
}

#[test]
fn certificates_are_sound() {
    each_group(32, |g| {
        let c = certify_indecomposable(g, 64).unwrap();
        if c.certified() {
            assert!(find_direct_factor(g, 64).unwrap().is_none(), "{}", g.name());
        }
    });
}

const ABELIAN: &[&str] = &["C2", "C4", "C2^2", "C8", "C2xC4", "C3", "C9"];
const OTHERS: &[&str] = &["C2", "C4", "D8", "Q8", "C2^2", "He3", "C3", "C3^2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn recovery_round_trip(a in prop::sample::select(ABELIAN), b in prop::sample::select(OTHERS)) {
        let (ga, gb) = (build_named(a).unwrap(), build_named(b).unwrap());
        prop_assume!(ga.p() == gb.p() && ga.order() * gb.order() <= 32);
        let g = direct_product(&ga, &gb).unwrap();
        let nb = gb.order();
        let ctx = AlgebraContext::new(g);
        let left: Vec<FpVector> = (0..ga.order()).map(|x| ctx.e(x * nb)).collect();
        let right: Vec<FpVector> = (0..nb).map(|y| ctx.e(y)).collect();
        let fact = verify_tensor_factorization(
            &ctx,
            AugmentedSubalgebra::from_vectors(&ctx, &left).unwrap(),
            AugmentedSubalgebra::from_vectors(&ctx, &right).unwrap(),
        ).unwrap();
        let r = recover_decomposition(&ctx, &fact, BasisSearch::default()).unwrap();
        prop_assert!(r.verified);
        prop_assert_eq!(r.b_invariants, ga.abelian_invariants().unwrap());
        prop_assert_eq!(r.c_order, nb);
        prop_assert_eq!(r.b_elements.len(), fact.b.dimension());
    }
}
