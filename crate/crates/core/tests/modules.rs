use std::sync::Arc;

use diagram_homology::induced::{check_quotient_tensor_iso, compare_induced, free_orbits_of_quotient_by_jm, induced_module};
use diagram_homology::summands::pointed_subsets;
use diagram_homology::{BasedAlgebra, BasedModule, Family, ModuleMap, Ring};
use proptest::prelude::*;

fn algebra(family: Family, n: usize, delta: i64, epsilon: i64) -> Arc<BasedAlgebra> {
    BasedAlgebra::with_ints(family, n, Ring::Integers, delta, epsilon).unwrap()
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect()
}

const FAMILIES: [Family; 2] = [Family::RookBrauer, Family::Motzkin];

#[test]
fn quotients_by_j_are_modules_with_coinvariants_t() {
    for family in FAMILIES {
        for n in 1..=3 {
            for (delta, epsilon) in [(0, 1), (2, -1)] {
                let a = algebra(family, n, delta, epsilon);
                for set in subsets(n) {
                    let q = BasedModule::quotient_by_j(&a, &set).unwrap();
                    q.check_action(50_000).unwrap();
                    let c = q.coinvariants().unwrap();
                    assert_eq!((c.free_rank(), c.is_free()), (1, true), "{} X={set:?}", q.name());
                }
            }
        }
    }
}

#[test]
fn script_modules_have_vanishing_coinvariants() {
    for family in FAMILIES {
        for n in 1..=3 {
            for epsilon in [1, -1] {
                let a = algebra(family, n, 2, epsilon);
                for (set, x) in pointed_subsets(n) {
                    let mut modules = vec![BasedModule::script_a(&a, &set, x).unwrap()];
                    if set.len() > 1 {
                        modules.push(BasedModule::script_b(&a, &set, x).unwrap());
                    }
                    for m in modules {
                        m.check_action(20_000).unwrap();
                        let c = m.coinvariants().unwrap();
                        assert_eq!((c.free_rank(), c.is_free()), (0, true), "{} X={set:?} x={x}", m.name());
                    }
                }
            }
        }
    }
    for n in 2..=3 {
        let a = algebra(Family::RookBrauer, n, 1, 1);
        for i in 1..=n {
            for j in i + 1..=n {
                let m = BasedModule::script_m(&a, &(1..=n).collect::<Vec<_>>(), i, j).unwrap();
                m.check_action(20_000).unwrap();
                assert_eq!(m.coinvariants().unwrap().free_rank(), 0, "{}", m.name());
            }
        }
    }
}

#[test]
fn inclusions_induce_equivariant_maps() {
    for family in FAMILIES {
        let a = algebra(family, 3, 1, 1);
        for small in subsets(3) {
            for big in subsets(3) {
                if small.iter().all(|x| big.contains(x)) {
                    let s = BasedModule::quotient_by_j(&a, &small).unwrap();
                    let t = BasedModule::quotient_by_j(&a, &big).unwrap();
                    let f = ModuleMap::induced_by_inclusion(&s, &t).unwrap();
                    f.check_equivariant(&s, &t).unwrap();
                }
            }
        }
    }
}

#[test]
fn induced_modules_match_their_presentation() {
    for ring in [Ring::Integers, Ring::prime_field(2).unwrap()] {
        for n in 0..=3 {
            let a = BasedAlgebra::with_ints(Family::RookBrauer, n, ring, 1, 1).unwrap();
            for m in 0..=n {
                let c = compare_induced(&a, m).unwrap();
                assert!(c.isomorphic(), "n={n} m={m} over {ring}: {c:?}");
                let (module, _) = induced_module(&a, m).unwrap();
                module.check_action(50_000).unwrap();
            }
            assert_eq!(induced_module(&a, 0).unwrap().0.rank(), a.dim());
            assert_eq!(induced_module(&a, n).unwrap().0.rank(), 1);
        }
    }
}

#[test]
fn right_symmetric_orbits_are_free() {
    for n in 0..=3 {
        let a = algebra(Family::RookBrauer, n, 1, 1);
        for m in 0..=n {
            let orbits = free_orbits_of_quotient_by_jm(&a, m).unwrap();
            let fact: usize = (1..=m).product();
            assert!(orbits.iter().all(|o| o.len() == fact));
            let (module, _) = induced_module(&a, m).unwrap();
            assert_eq!(orbits.len(), module.rank());
            check_quotient_tensor_iso(&a, m).unwrap();
        }
    }
}

#[test]
fn motzkin_has_no_induced_module() {
    assert!(induced_module(&algebra(Family::Motzkin, 2, 1, 1), 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// `(ab)·v = a·(b·v)` on random basis triples of `A/J_X` at `n = 4`.
    #[test]
    fn action_is_associative_on_samples(
        family in prop_oneof![Just(Family::RookBrauer), Just(Family::Motzkin)],
        mask in 0u32..16,
        picks in proptest::collection::vec((any::<usize>(), any::<usize>(), any::<usize>()), 16),
    ) {
        let a = algebra(family, 4, 3, -1);
        let set: Vec<usize> = (1..=4).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let q = BasedModule::quotient_by_j(&a, &set).unwrap();
        prop_assume!(q.rank() > 0);
        let ring = a.ring();
        for (x, y, v) in picks {
            let (x, y, v) = (x % a.dim(), y % a.dim(), v % q.rank());
            let (k, c) = a.product(x, y);
            let lhs: Vec<_> = q.act(k, v).iter().map(|(i, e)| (*i, ring.mul(e, &c))).filter(|(_, e)| !ring.is_zero(e)).collect();
            let rhs = q.act_on(x, q.act(y, v));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
