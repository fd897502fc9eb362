use std::sync::Arc;

use einl::eicat::{CategoryInstance, FiniteGroupTable};
use einl::exactalg::{Field, Rationals};
use einl::kcmod::{fg_verdict, free_module, submodule_generated, torsion, GradedSubmodule, HomogeneousElement};
use einl::orbitlab::{m_map, orbits};
use einl::stabcheck::{chain_report, e_idempotent, end_basis, hom_space};
use proptest::prelude::*;

const TOP: usize = 4;

fn fi() -> Arc<CategoryInstance> {
    Arc::new(CategoryInstance::fi(TOP))
}

/// Homogeneous elements of `M(1)` over FI: `dim M(1)_d = d`.
fn elements() -> impl Strategy<Value = Vec<HomogeneousElement>> {
    prop::collection::vec(
        (1usize..=3).prop_flat_map(|d| {
            prop::collection::vec(-2i64..3, d).prop_map(move |c| HomogeneousElement::from_ints(d, &c))
        }),
        1..3,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generator_degrees_come_from_the_seeds(gens in elements()) {
        let m = free_module(&fi(), 1, TOP).unwrap();
        let x = submodule_generated(m.module(), &gens).unwrap();
        let seeds: Vec<usize> = gens.iter().filter(|g| g.coords.iter().any(|c| !Rationals.is_zero(c))).map(|g| g.degree).collect();
        for d in fg_verdict(&x).unwrap().generator_degrees {
            prop_assert!(seeds.contains(&d), "degree {} not among {:?}", d, seeds);
        }
    }

    #[test]
    fn closure_is_a_fixed_point(gens in elements()) {
        let m = free_module(&fi(), 1, TOP).unwrap();
        let x = submodule_generated(m.module(), &gens).unwrap();
        let again = submodule_generated(m.module(), &x.spanning_elements()).unwrap();
        prop_assert!(again == x);
    }

    #[test]
    fn maschke_strictness(gens in elements(), j in 2usize..=TOP) {
        let m = free_module(&fi(), 1, TOP).unwrap();
        let x = submodule_generated(m.module(), &gens).unwrap();
        let full = GradedSubmodule::full(m.module());
        let (dx, dfull) = (x.space(j).dim(), m.module().dim(j));
        let fx = hom_space(&m, &x, j, false).unwrap().dim;
        let ffull = hom_space(&m, &full, j, false).unwrap().dim;
        if dx > 0 {
            prop_assert!(fx > 0);
        }
        if dx < dfull {
            prop_assert!(fx < ffull);
        }
    }

    #[test]
    fn actions_compose(j in 1usize..=3, a in 0usize..48, b in 0usize..48) {
        let cat = Arc::new(CategoryInstance::fi_gamma(FiniteGroupTable::cyclic(2).unwrap(), 3));
        let m = free_module(&cat, 1, 3).unwrap();
        let group = cat.group(j).unwrap();
        let (g, h) = (group.get(a % group.len()), group.get(b % group.len()));
        let v = m.module();
        let gh = cat.compose(g, h).unwrap();
        prop_assert_eq!(
            v.morphism_action(g).unwrap().mul(&v.morphism_action(h).unwrap()).unwrap(),
            v.morphism_action(&gh).unwrap()
        );
        prop_assert_eq!(v.morphism_action(&gh).unwrap(), m.basis_action(&gh).unwrap());
    }

    #[test]
    fn chain_stabilizes_within_truncation(gens in elements()) {
        let cat = Arc::new(CategoryInstance::fi(5));
        let m = free_module(&cat, 1, 5).unwrap();
        let x = submodule_generated(m.module(), &gens).unwrap();
        let r = chain_report(&m, &x, 2, false).unwrap();
        prop_assert!(r.monotone && r.bound_holds);
        prop_assert!(r.generated_by <= 3);
    }
}

#[test]
fn free_torsion_vanishes_where_m_is_injective() {
    let cats = [
        Arc::new(CategoryInstance::fi(4)),
        Arc::new(CategoryInstance::vi(2, 3).unwrap()),
        Arc::new(CategoryInstance::vic(2, 3).unwrap()),
    ];
    for cat in cats {
        for i in 0..cat.max_object() {
            let m = free_module(&cat, i, cat.max_object()).unwrap();
            let t = torsion(&GradedSubmodule::full(m.module())).unwrap();
            for j in i + 1..cat.max_object() {
                if m_map(&cat, i, j).unwrap().injective {
                    assert_eq!(t.dims[j], 0, "{} i={i} j={j}", cat.descriptor());
                }
            }
        }
    }
}

#[test]
fn end_dimension_is_orbit_count() {
    let cats = [
        (Arc::new(CategoryInstance::fi(4)), vec![1, 2]),
        (Arc::new(CategoryInstance::fi_gamma(FiniteGroupTable::cyclic(2).unwrap(), 3)), vec![1]),
        (Arc::new(CategoryInstance::vic(2, 3).unwrap()), vec![1]),
    ];
    for (cat, is) in cats {
        for i in is {
            let m = free_module(&cat, i, cat.max_object()).unwrap();
            let full = GradedSubmodule::full(m.module());
            for j in i + 1..=cat.max_object() {
                let count = orbits(&cat, i, j).unwrap().len();
                assert_eq!(hom_space(&m, &full, j, false).unwrap().dim, count);
                assert_eq!(end_basis(&m, j, true).unwrap().len(), count);
                assert_eq!(e_idempotent(&m, j).unwrap().rank, count);
            }
        }
    }
}
