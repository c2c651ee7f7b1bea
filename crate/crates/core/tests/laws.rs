//! Property tests of the closure operator, the subobject lattice, morphisms and
//! quotients against brute-force computations written out here.

use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use charsub::automorphism::automorphisms;
use charsub::corpus::group_corpus;
use charsub::spec_format::{emit_spec, parse_spec};
use charsub::subobject::{
    enumerate_subobjects, generate, is_normal, join, kernel_pair, meet, quotient,
    DEFAULT_LATTICE_BOUND,
};
use charsub::{Element, FiniteAlgebra, Morphism, Subobject, Variety};

fn groups() -> Vec<Arc<FiniteAlgebra>> {
    group_corpus(8)
        .unwrap()
        .into_iter()
        .map(|i| i.algebra)
        .collect()
}

fn arb_group() -> impl Strategy<Value = Arc<FiniteAlgebra>> {
    let all = groups();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn arb_ring_like() -> impl Strategy<Value = Arc<FiniteAlgebra>> {
    let varieties = [
        Variety::NaRing(2),
        Variety::NaRing(3),
        Variety::Ring(2),
        Variety::Ring(3),
        Variety::Lie(2),
        Variety::Lie(3),
    ];
    (
        0..varieties.len(),
        1usize..=2,
        proptest::collection::vec(0u32..3, 8),
    )
        .prop_filter_map("constants break the variety laws", move |(vi, r, raw)| {
            let v = varieties[vi];
            let m = v.modulus().unwrap();
            let c: Vec<u32> = raw.into_iter().take(r * r * r).map(|x| x % m).collect();
            FiniteAlgebra::ring_like(v, FiniteAlgebra::default_labels(r), c)
                .ok()
                .map(Arc::new)
        })
}

fn arb_algebra() -> impl Strategy<Value = Arc<FiniteAlgebra>> {
    prop_oneof![arb_group(), arb_ring_like()]
}

/// Closure by saturation: keep adding sums, negatives and products until nothing changes.
fn saturate(g: &FiniteAlgebra, gens: &[Element]) -> BTreeSet<Element> {
    let mut set: BTreeSet<Element> = gens.iter().copied().collect();
    set.insert(g.zero());
    loop {
        let current: Vec<Element> = set.iter().copied().collect();
        let mut next = set.clone();
        for &a in &current {
            next.insert(g.neg(a));
            for &b in &current {
                next.insert(g.add(a, b));
                if g.is_ring_like() {
                    next.insert(g.mul(a, b));
                }
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

fn elements(s: &Subobject) -> BTreeSet<Element> {
    s.iter().collect()
}

fn pick(g: &FiniteAlgebra, seeds: &[u32]) -> Vec<Element> {
    seeds.iter().map(|&s| s % g.order() as u32).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generate_matches_saturation(g in arb_algebra(), seeds in proptest::collection::vec(any::<u32>(), 0..3)) {
        let gens = pick(&g, &seeds);
        prop_assert_eq!(elements(&generate(&g, &gens)), saturate(&g, &gens));
    }

    #[test]
    fn closure_is_extensive_monotone_and_idempotent(
        g in arb_algebra(),
        a in proptest::collection::vec(any::<u32>(), 0..3),
        b in proptest::collection::vec(any::<u32>(), 0..2),
    ) {
        let small = pick(&g, &a);
        let mut large = small.clone();
        large.extend(pick(&g, &b));
        let cs = generate(&g, &small);
        let cl = generate(&g, &large);
        prop_assert!(small.iter().all(|&x| cs.contains(x)));
        prop_assert!(cs.is_subset(&cl));
        prop_assert_eq!(generate(&g, &cs.elements()), cs);
    }

    #[test]
    fn meet_and_join_are_bounds_in_the_lattice(g in arb_algebra(), i in any::<usize>(), j in any::<usize>()) {
        let lattice = enumerate_subobjects(&g, DEFAULT_LATTICE_BOUND).unwrap();
        let (h, k) = (&lattice[i % lattice.len()], &lattice[j % lattice.len()]);
        let m = meet(h, k).unwrap();
        let jn = join(&g, h, k).unwrap();
        prop_assert_eq!(elements(&m), elements(h).intersection(&elements(k)).copied().collect::<BTreeSet<_>>());
        // Least upper bound: the smallest lattice member above both.
        let above: Vec<&Subobject> = lattice.iter().filter(|s| h.is_subset(s) && k.is_subset(s)).collect();
        let least = above.iter().min_by_key(|s| s.len()).unwrap();
        prop_assert!(above.iter().all(|s| least.is_subset(s)));
        prop_assert_eq!(&jn, *least);
    }

    #[test]
    fn quotient_by_a_normal_subobject_round_trips(g in arb_algebra(), i in any::<usize>()) {
        let normal: Vec<Subobject> = enumerate_subobjects(&g, DEFAULT_LATTICE_BOUND)
            .unwrap()
            .into_iter()
            .filter(|s| is_normal(&g, s))
            .collect();
        let h = &normal[i % normal.len()];
        let (q, proj) = quotient(&g, h).unwrap();
        prop_assert_eq!(q.order() * h.len(), g.order());
        prop_assert_eq!(proj.is_morphism().unwrap(), None);
        prop_assert!(proj.is_surjective());
        let ker: BTreeSet<Element> = proj.kernel_elements().into_iter().collect();
        prop_assert_eq!(&ker, &elements(h));
        // Two elements are identified exactly when their difference lies in H.
        let kp = kernel_pair(&proj).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                prop_assert_eq!(kp.contains(a, b), h.contains(g.sub(a, b)));
            }
        }
        prop_assert_eq!(kp.zero_class(&g), h.clone());
    }

    #[test]
    fn emitted_specs_parse_back(g in arb_algebra()) {
        let text = emit_spec(&g, &[]);
        let back = parse_spec(&text).unwrap().algebra;
        prop_assert_eq!(emit_spec(&back, &[]), text);
        prop_assert_eq!(back.variety(), g.variety());
        for a in g.elements() {
            for b in g.elements() {
                prop_assert_eq!(back.add(a, b), g.add(a, b));
                if g.is_ring_like() {
                    prop_assert_eq!(back.mul(a, b), g.mul(a, b));
                }
            }
        }
    }
}

#[test]
fn composition_of_automorphisms_is_associative_with_identity() {
    for g in groups() {
        let auts: Vec<Morphism> = automorphisms(&g)
            .unwrap()
            .into_iter()
            .take(6)
            .map(|t| Morphism::new(g.clone(), g.clone(), t).unwrap())
            .collect();
        let id = Morphism::identity(g.clone());
        for f in &auts {
            assert_eq!(f.is_morphism().unwrap(), None);
            assert_eq!(f.compose(&id).unwrap().table(), f.table());
            assert_eq!(id.compose(f).unwrap().table(), f.table());
            for h in &auts {
                let fh = f.compose(h).unwrap();
                // Pointwise: (f ∘ h)(x) = f(h(x)).
                assert!(g.elements().all(|x| fh.apply(x) == f.apply(h.apply(x))));
                for k in &auts {
                    let left = fh.compose(k).unwrap();
                    let right = f.compose(&h.compose(k).unwrap()).unwrap();
                    assert_eq!(left.table(), right.table());
                }
            }
        }
    }
}
