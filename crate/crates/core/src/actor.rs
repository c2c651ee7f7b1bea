//! Actors of groups and Lie algebras, and canonical faithful quotients of actions.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::action::{
    induce_quotient_action, restrict_action, semidirect_product, validate_action, Action,
    ActionBounds, ActionData, ActionEnumerator, Restriction, SplitExtension,
};
use crate::algebra::{matrix_from_basis_images, Element, FiniteAlgebra};
use crate::automorphism::{automorphisms, derivation_spanning_set};
use crate::corpus::{group_corpus, ring_like_corpus};
use crate::error::{Error, Result};
use crate::invariants::CharacteristicTest;
use crate::linalg::{coordinates_in_span, Matrix};
use crate::morphism::Morphism;
use crate::subobject::{is_normal, quotient, subalgebra, Subobject};
use crate::variety::Variety;

/// `Act(G)` together with its canonical action on `G`.
#[derive(Clone, Debug)]
pub struct Actor {
    base: Arc<FiniteAlgebra>,
    object: Arc<FiniteAlgebra>,
    canonical: Action,
    kind: ActorKind,
}

#[derive(Clone, Debug)]
enum ActorKind {
    /// Automorphism tables, sorted; element `i` of the object is `auts[i]`.
    Aut(Vec<Vec<Element>>),
    /// Derivation matrices forming the basis of the object.
    Der(Vec<Matrix>),
}

impl Actor {
    pub fn base(&self) -> &Arc<FiniteAlgebra> {
        &self.base
    }

    pub fn object(&self) -> &Arc<FiniteAlgebra> {
        &self.object
    }

    pub fn canonical_action(&self) -> &Action {
        &self.canonical
    }

    /// The element of `Act(G)` acting as the given automorphism table.
    pub fn automorphism_index(&self, table: &[Element]) -> Option<Element> {
        match &self.kind {
            ActorKind::Aut(auts) => auts
                .binary_search_by(|a| a.as_slice().cmp(table))
                .ok()
                .map(|i| i as Element),
            ActorKind::Der(_) => None,
        }
    }

    /// The element of `Der(G)` with the given matrix.
    pub fn derivation_element(&self, d: &Matrix) -> Option<Element> {
        let ActorKind::Der(basis) = &self.kind else {
            return None;
        };
        let p = self.base.modulus()?;
        let flat: Vec<Vec<u32>> = basis.iter().map(|b| b.as_flat().to_vec()).collect();
        let coords = coordinates_in_span(&flat, d.as_flat(), p)?;
        Some(self.object.from_coords(&coords))
    }

    /// The unique `φ: B → Act(G)` whose pullback of the canonical action is `ξ`.
    pub fn classifying_morphism(&self, xi: &Action) -> Result<Morphism> {
        if xi.target().as_ref() != self.base.as_ref() {
            return Err(Error::ParentMismatch);
        }
        let b = xi.actor().clone();
        let phi = match &self.kind {
            ActorKind::Aut(_) => {
                let map: Option<Vec<Element>> = b
                    .elements()
                    .map(|x| self.automorphism_index(xi.alpha(x)))
                    .collect();
                let map = map.ok_or_else(|| {
                    Error::InvalidAction("some α_b is not an automorphism".into())
                })?;
                Morphism::new(b, self.object.clone(), map)?
            }
            ActorKind::Der(_) => {
                let images: Option<Vec<Element>> = b
                    .basis()
                    .iter()
                    .map(|&x| self.derivation_element(&xi.lambda(x)))
                    .collect();
                let images = images
                    .ok_or_else(|| Error::InvalidAction("some λ_b is not a derivation".into()))?;
                let mat = matrix_from_basis_images(&self.object, &images);
                Morphism::from_matrix(b, self.object.clone(), &mat)?
            }
        };
        if let Some((x, y)) = phi.is_morphism()? {
            return Err(Error::InvalidAction(format!(
                "classifying map is not a morphism at ({x}, {y})"
            )));
        }
        Ok(phi)
    }

    /// Whether distinct elements of `Act(G)` act differently, which makes
    /// classifying morphisms unique.
    pub fn is_faithful(&self) -> bool {
        match &self.kind {
            // Sorted tables with no repeats.
            ActorKind::Aut(auts) => auts.windows(2).all(|w| w[0] < w[1]),
            ActorKind::Der(basis) => {
                let p = self.base.modulus().unwrap_or(2);
                let flat: Vec<Vec<u32>> = basis.iter().map(|b| b.as_flat().to_vec()).collect();
                // Independent iff no nontrivial relation among the basis matrices.
                let rows: Vec<Vec<u32>> = (0..flat.first().map_or(0, Vec::len))
                    .map(|t| flat.iter().map(|b| b[t]).collect())
                    .collect();
                crate::linalg::nullspace_mod_p(&rows, flat.len(), p).is_empty()
            }
        }
    }
}

pub fn actor(g: &Arc<FiniteAlgebra>) -> Result<Actor> {
    match g.variety() {
        Variety::Group => {
            let auts = automorphisms(g)?;
            let object = Arc::new(FiniteAlgebra::from_sorted_permutations(auts.clone()));
            let canonical = Action::group(object.clone(), g.clone(), auts.clone())?;
            Ok(Actor {
                base: g.clone(),
                object,
                canonical,
                kind: ActorKind::Aut(auts),
            })
        }
        Variety::Lie(m) => {
            let basis = derivation_spanning_set(g)?;
            let k = basis.len();
            let flat: Vec<Vec<u32>> = basis.iter().map(|b| b.as_flat().to_vec()).collect();
            let mut constants = vec![0u32; k * k * k];
            for i in 0..k {
                for j in 0..k {
                    let br = basis[i].bracket(&basis[j]);
                    let c = coordinates_in_span(&flat, br.as_flat(), m).ok_or_else(|| {
                        Error::Unsupported("derivations not closed under the bracket".into())
                    })?;
                    constants[(i * k + j) * k..(i * k + j + 1) * k].copy_from_slice(&c);
                }
            }
            let labels = (0..k).map(|i| format!("d{i}")).collect();
            let object = Arc::new(FiniteAlgebra::ring_like(
                Variety::Lie(m),
                labels,
                constants,
            )?);
            let canonical = Action::lie(object.clone(), g.clone(), basis.clone())?;
            Ok(Actor {
                base: g.clone(),
                object,
                canonical,
                kind: ActorKind::Der(basis),
            })
        }
        v => Err(Error::NotRepresentative(v)),
    }
}

/// Outcome of checking the universal property against every enumerated action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalPropertyReport {
    pub acting_algebras: usize,
    pub actions: u64,
    pub violation: Option<String>,
}

/// Every action of every acting algebra within bounds factors through the
/// canonical action by exactly one morphism.
pub fn check_universal_property(
    act: &Actor,
    bounds: ActionBounds,
) -> Result<UniversalPropertyReport> {
    let g = act.base.clone();
    let acting = match g.variety() {
        Variety::Group => group_corpus(bounds.max_group_order)?,
        v => ring_like_corpus(v.tag(), &[v.modulus().expect("ring-like")], bounds.max_rank)?,
    };
    let mut report = UniversalPropertyReport {
        acting_algebras: acting.len(),
        actions: 0,
        violation: None,
    };
    if let Some(v) = validate_action(&act.canonical)? {
        report.violation = Some(format!("canonical action violates {}: {}", v.law, v.detail));
        return Ok(report);
    }
    if !act.is_faithful() {
        report.violation =
            Some("canonical action is not faithful, so factorisations are not unique".into());
        return Ok(report);
    }
    let enumerator = ActionEnumerator::new(g, bounds)?;
    for inst in &acting {
        let mut failure = None;
        enumerator.for_each(&inst.algebra, |xi| {
            report.actions += 1;
            let outcome = act.classifying_morphism(xi).and_then(|phi| {
                let back = act.canonical.pullback(&phi)?;
                Ok(back.data() == xi.data())
            });
            match outcome {
                Ok(true) => ControlFlow::Continue(()),
                Ok(false) => {
                    failure = Some(format!("{}: pullback differs from the action", inst.name));
                    ControlFlow::Break(())
                }
                Err(e) => {
                    failure = Some(format!("{}: {e}", inst.name));
                    ControlFlow::Break(())
                }
            }
        })?;
        if failure.is_some() {
            report.violation = failure;
            break;
        }
    }
    Ok(report)
}

/// The maps `Act(G) → Act(H)` and `Act(G) → Act(G/H)` for characteristic `H`.
#[derive(Clone, Debug)]
pub struct InducedActorMorphisms {
    pub sub_actor: Actor,
    pub quotient_actor: Actor,
    pub to_sub: Morphism,
    pub to_quotient: Morphism,
}

pub fn induced_actor_morphisms(
    g: &Arc<FiniteAlgebra>,
    h: &Subobject,
) -> Result<InducedActorMorphisms> {
    let act = actor(g)?;
    let verdict = CharacteristicTest::new(g.clone())?.check(h)?;
    if !verdict.characteristic {
        return Err(Error::NotCharacteristic(h.describe(g)));
    }
    let (sub, emb) = subalgebra(g, h)?;
    let sub = Arc::new(sub);
    let mut emb_inv = vec![Element::MAX; g.order()];
    for (i, &x) in emb.iter().enumerate() {
        emb_inv[x as usize] = i as Element;
    }
    let (q, proj) = quotient(g, h)?;
    let mut section = vec![Element::MAX; q.order()];
    for x in g.elements() {
        let c = proj.apply(x) as usize;
        if section[c] == Element::MAX {
            section[c] = x;
        }
    }
    let sub_actor = actor(&sub)?;
    let quotient_actor = actor(&q)?;
    let broken = |what: &str| Error::NotWellDefined(what.to_string());

    let (to_sub, to_quotient) = match &act.kind {
        ActorKind::Aut(auts) => {
            let mut rmap = Vec::with_capacity(auts.len());
            let mut qmap = Vec::with_capacity(auts.len());
            for a in auts {
                let restricted: Vec<Element> = emb
                    .iter()
                    .map(|&x| emb_inv[a[x as usize] as usize])
                    .collect();
                let descended: Vec<Element> =
                    section.iter().map(|&x| proj.apply(a[x as usize])).collect();
                // Triangle and square contracts, pointwise.
                if emb
                    .iter()
                    .enumerate()
                    .any(|(i, &x)| emb[restricted[i] as usize] != a[x as usize])
                {
                    return Err(broken("restriction does not commute with the embedding"));
                }
                if g.elements()
                    .any(|x| proj.apply(a[x as usize]) != descended[proj.apply(x) as usize])
                {
                    return Err(broken("automorphism does not descend to the quotient"));
                }
                rmap.push(
                    sub_actor
                        .automorphism_index(&restricted)
                        .ok_or_else(|| broken("restriction"))?,
                );
                qmap.push(
                    quotient_actor
                        .automorphism_index(&descended)
                        .ok_or_else(|| broken("quotient"))?,
                );
            }
            (
                Morphism::new(act.object.clone(), sub_actor.object.clone(), rmap)?,
                Morphism::new(act.object.clone(), quotient_actor.object.clone(), qmap)?,
            )
        }
        ActorKind::Der(basis) => {
            let (rh, rq) = (sub.rank().unwrap_or(0), q.rank().unwrap_or(0));
            let m = g.modulus().expect("ring-like");
            let apply = |d: &Matrix, x: Element| g.from_coords(&d.apply(&g.coords(x)));
            let mut rimg = Vec::with_capacity(basis.len());
            let mut qimg = Vec::with_capacity(basis.len());
            for d in basis {
                let cols: Vec<Vec<u32>> = sub
                    .basis()
                    .iter()
                    .map(|&e| {
                        let y = emb_inv[apply(d, emb[e as usize]) as usize];
                        if y == Element::MAX {
                            Err(broken("derivation leaves the subobject"))
                        } else {
                            Ok(sub.coords(y))
                        }
                    })
                    .collect::<Result<_>>()?;
                let restricted = Matrix::from_columns(&cols, rh, m);
                let qcols: Vec<Vec<u32>> = q
                    .basis()
                    .iter()
                    .map(|&e| q.coords(proj.apply(apply(d, section[e as usize]))))
                    .collect();
                let descended = Matrix::from_columns(&qcols, rq, m);
                if g.elements().any(|x| {
                    proj.apply(apply(d, x))
                        != q.from_coords(&descended.apply(&q.coords(proj.apply(x))))
                }) {
                    return Err(broken("derivation does not descend to the quotient"));
                }
                rimg.push(
                    sub_actor
                        .derivation_element(&restricted)
                        .ok_or_else(|| broken("restriction"))?,
                );
                qimg.push(
                    quotient_actor
                        .derivation_element(&descended)
                        .ok_or_else(|| broken("quotient"))?,
                );
            }
            (
                Morphism::from_matrix(
                    act.object.clone(),
                    sub_actor.object.clone(),
                    &matrix_from_basis_images(&sub_actor.object, &rimg),
                )?,
                Morphism::from_matrix(
                    act.object.clone(),
                    quotient_actor.object.clone(),
                    &matrix_from_basis_images(&quotient_actor.object, &qimg),
                )?,
            )
        }
    };
    for f in [&to_sub, &to_quotient] {
        if let Some((x, y)) = f.is_morphism()? {
            return Err(Error::NotWellDefined(format!(
                "induced actor map fails at ({x}, {y})"
            )));
        }
    }
    Ok(InducedActorMorphisms {
        sub_actor,
        quotient_actor,
        to_sub,
        to_quotient,
    })
}

/// `T0 = B/Z` acting faithfully on `G`, and the split extension `T1` over it.
#[derive(Clone, Debug)]
pub struct FaithfulQuotient {
    /// Elements of `B` acting trivially.
    pub z: Subobject,
    pub t0: Arc<FiniteAlgebra>,
    /// `B → T0`.
    pub projection: Morphism,
    pub induced: Action,
    pub extension: SplitExtension,
    /// `G ⋊ B → T1`.
    pub total_projection: Morphism,
}

fn require_accessible(v: Variety) -> Result<()> {
    if v.is_action_accessible() {
        Ok(())
    } else {
        Err(Error::NotAccessibleVariety(v))
    }
}

fn coset_section(proj: &Morphism) -> Vec<Element> {
    let mut section = vec![Element::MAX; proj.target().order()];
    for x in proj.source().elements() {
        let c = proj.apply(x) as usize;
        if section[c] == Element::MAX {
            section[c] = x;
        }
    }
    section
}

pub fn faithful_quotient(xi: &Action) -> Result<FaithfulQuotient> {
    let b = xi.actor().clone();
    let g = xi.target().clone();
    require_accessible(b.variety())?;
    if let Some(v) = validate_action(xi)? {
        return Err(Error::InvalidAction(format!("{}: {}", v.law, v.detail)));
    }
    let z = Subobject::from_elements(&b, b.elements().filter(|&x| xi.acts_trivially(x)))?;
    if !is_normal(&b, &z) {
        return Err(Error::InvalidAction(
            "trivially acting part is not normal".into(),
        ));
    }
    let (t0, projection) = quotient(&b, &z)?;
    let section = coset_section(&projection);
    let induced = match xi.data() {
        ActionData::Group(_) => Action::group(
            t0.clone(),
            g.clone(),
            section.iter().map(|&x| xi.alpha(x).to_vec()).collect(),
        )?,
        ActionData::Bilinear { .. } => {
            let reps: Vec<Element> = t0.basis().iter().map(|&e| section[e as usize]).collect();
            Action::bilinear(
                t0.clone(),
                g.clone(),
                reps.iter().map(|&x| xi.lambda(x)).collect(),
                reps.iter().map(|&x| xi.rho(x)).collect(),
            )?
        }
    };
    // Each element of B must act exactly as its image in T0 does.
    let same = |x: Element| match xi.data() {
        ActionData::Group(_) => xi.alpha(x) == induced.alpha(projection.apply(x)),
        ActionData::Bilinear { .. } => {
            let t = projection.apply(x);
            xi.lambda(x) == induced.lambda(t) && xi.rho(x) == induced.rho(t)
        }
    };
    if let Some(x) = b.elements().find(|&x| !same(x)) {
        return Err(Error::NotWellDefined(format!(
            "element {x} acts differently from its class"
        )));
    }
    if let Some(t) = t0.elements().find(|&t| t != 0 && induced.acts_trivially(t)) {
        return Err(Error::NotWellDefined(format!(
            "induced action is not faithful at {t}"
        )));
    }
    let original = semidirect_product(xi)?;
    let extension = semidirect_product(&induced)?;
    let ng = g.order() as Element;
    let map = original
        .total
        .elements()
        .map(|a| a % ng + ng * projection.apply(a / ng))
        .collect();
    let total_projection = Morphism::new(original.total.clone(), extension.total.clone(), map)?;
    if let Some((x, y)) = total_projection.is_morphism()? {
        return Err(Error::NotWellDefined(format!(
            "G ⋊ B → T1 fails at ({x}, {y})"
        )));
    }
    // Morphism of split extensions: compatible with p, s and k.
    let compatible = original.total.elements().all(|a| {
        extension.p.apply(total_projection.apply(a)) == projection.apply(original.p.apply(a))
    }) && b.elements().all(|x| {
        total_projection.apply(original.s.apply(x)) == extension.s.apply(projection.apply(x))
    }) && g
        .elements()
        .all(|x| total_projection.apply(original.k.apply(x)) == extension.k.apply(x));
    if !compatible {
        return Err(Error::NotWellDefined(
            "projection is not a morphism of split extensions".into(),
        ));
    }
    Ok(FaithfulQuotient {
        z,
        t0,
        projection,
        induced,
        extension,
        total_projection,
    })
}

/// The maps `T0(B, G) → T0(B, H)` and `T0(B, G) → T0(B, G/H)` for characteristic `H`.
#[derive(Clone, Debug)]
pub struct InducedFaithfulMorphisms {
    pub whole: FaithfulQuotient,
    pub sub: FaithfulQuotient,
    pub quotient: FaithfulQuotient,
    pub to_sub: Morphism,
    pub to_quotient: Morphism,
}

pub fn induced_faithful_morphisms(xi: &Action, h: &Subobject) -> Result<InducedFaithfulMorphisms> {
    let g = xi.target().clone();
    require_accessible(g.variety())?;
    if !CharacteristicTest::new(g.clone())?.check(h)?.characteristic {
        return Err(Error::NotCharacteristic(h.describe(&g)));
    }
    let Restriction::Restricted(on_sub, _) = restrict_action(xi, h)? else {
        return Err(Error::NotInvariant(format!(
            "{} is not invariant under the action",
            h.describe(&g)
        )));
    };
    let (on_quotient, _) = induce_quotient_action(xi, h)?;
    let whole = faithful_quotient(xi)?;
    let sub = faithful_quotient(&on_sub)?;
    let quotient = faithful_quotient(&on_quotient)?;
    let descend = |target: &FaithfulQuotient, what: &str| -> Result<Morphism> {
        if !whole.z.is_subset(&target.z) {
            return Err(Error::NotWellDefined(format!(
                "Z_B(G) is not contained in Z_B({what})"
            )));
        }
        let section = coset_section(&whole.projection);
        let map = section
            .iter()
            .map(|&x| target.projection.apply(x))
            .collect();
        let f = Morphism::new(whole.t0.clone(), target.t0.clone(), map)?;
        if let Some((x, y)) = f.is_morphism()? {
            return Err(Error::NotWellDefined(format!(
                "T0 map to {what} fails at ({x}, {y})"
            )));
        }
        Ok(f)
    };
    let to_sub = descend(&sub, "H")?;
    let to_quotient = descend(&quotient, "G/H")?;
    Ok(InducedFaithfulMorphisms {
        whole,
        sub,
        quotient,
        to_sub,
        to_quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::enumerate_actions;
    use crate::corpus::idempotent_line_algebra;
    use crate::subobject::generate;

    fn s3() -> Arc<FiniteAlgebra> {
        Arc::new(FiniteAlgebra::group_from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
        ))
    }

    #[test]
    fn actor_of_z3_is_inversion() {
        let z3 = Arc::new(FiniteAlgebra::cyclic_group(3));
        let act = actor(&z3).unwrap();
        assert_eq!(act.object().order(), 2);
        assert_eq!(act.canonical_action().alpha(1), &[0, 2, 1]);
        assert!(validate_action(act.canonical_action()).unwrap().is_none());
    }

    #[test]
    fn actor_of_abelian_lie_plane_is_gl2() {
        let g = Arc::new(
            FiniteAlgebra::ring_like(
                Variety::Lie(5),
                FiniteAlgebra::default_labels(2),
                vec![0; 8],
            )
            .unwrap(),
        );
        let act = actor(&g).unwrap();
        assert_eq!(act.object().rank(), Some(4));
        // gl_2 is not abelian: [E_01, E_10] = E_00 - E_11.
        let e01 = act
            .derivation_element(&Matrix::elementary(2, 0, 1, 5))
            .unwrap();
        let e10 = act
            .derivation_element(&Matrix::elementary(2, 1, 0, 5))
            .unwrap();
        let h = Matrix::elementary(2, 0, 0, 5).sub(&Matrix::elementary(2, 1, 1, 5));
        assert_eq!(
            act.object().mul(e01, e10),
            act.derivation_element(&h).unwrap()
        );
    }

    #[test]
    fn rings_have_no_actor() {
        let z4 = Arc::new(
            FiniteAlgebra::ring_like(Variety::Ring(4), vec!["x".into()], vec![1]).unwrap(),
        );
        assert!(matches!(actor(&z4), Err(Error::NotRepresentative(_))));
        let na = Arc::new(idempotent_line_algebra(Variety::NaRing(5)));
        assert!(matches!(actor(&na), Err(Error::NotRepresentative(_))));
    }

    #[test]
    fn universal_property_small() {
        for g in [s3(), Arc::new(FiniteAlgebra::cyclic_group(4))] {
            let r = check_universal_property(&actor(&g).unwrap(), ActionBounds::default()).unwrap();
            assert_eq!(r.violation, None);
            assert!(r.actions > 0);
        }
        let lie = Arc::new(
            FiniteAlgebra::ring_like(Variety::Lie(3), vec!["x".into(), "y".into()], {
                let mut c = vec![0; 8];
                c[(0 * 2 + 1) * 2] = 1; // [x, y] = x
                c[(1 * 2) * 2] = 2; // [y, x] = -x
                c
            })
            .unwrap(),
        );
        let r = check_universal_property(&actor(&lie).unwrap(), ActionBounds::default()).unwrap();
        assert_eq!(r.violation, None);
    }

    #[test]
    fn actor_maps_for_s3() {
        let s = s3();
        let a3 = generate(
            &s,
            &[s.elements().find(|&x| s.element_order(x) == 3).unwrap()],
        );
        let maps = induced_actor_morphisms(&s, &a3).unwrap();
        assert_eq!(maps.sub_actor.object().order(), 2);
        assert!(maps.to_sub.is_surjective());
        assert_eq!(maps.quotient_actor.object().order(), 1);
        let whole = induced_actor_morphisms(&s, &Subobject::whole(&s)).unwrap();
        assert_eq!(
            whole.to_sub.table(),
            Morphism::identity(whole.to_sub.source().clone()).table()
        );
        let z4 = Arc::new(FiniteAlgebra::cyclic_group(4));
        let maps = induced_actor_morphisms(&z4, &generate(&z4, &[2])).unwrap();
        assert_eq!(maps.sub_actor.object().order(), 1);
        let not_char = generate(
            &s,
            &[s.elements().find(|&x| s.element_order(x) == 2).unwrap()],
        );
        assert!(matches!(
            induced_actor_morphisms(&s, &not_char),
            Err(Error::NotCharacteristic(_))
        ));
    }

    #[test]
    fn faithful_quotient_examples() {
        let z3 = Arc::new(FiniteAlgebra::cyclic_group(3));
        let z4 = Arc::new(FiniteAlgebra::cyclic_group(4));
        let xi = Action::group(
            z4.clone(),
            z3.clone(),
            (0..4)
                .map(|b| {
                    if b % 2 == 0 {
                        vec![0, 1, 2]
                    } else {
                        vec![0, 2, 1]
                    }
                })
                .collect(),
        )
        .unwrap();
        let fq = faithful_quotient(&xi).unwrap();
        assert_eq!(fq.z, generate(&z4, &[2]));
        assert_eq!(fq.t0.order(), 2);
        assert!(faithful_quotient(&fq.induced).unwrap().z.is_zero());

        let trivial = faithful_quotient(&Action::trivial(z4.clone(), z3.clone()).unwrap()).unwrap();
        assert_eq!(trivial.t0.order(), 1);
        assert_eq!(trivial.extension.total.order(), 3);

        let s = s3();
        let conj = faithful_quotient(&Action::conjugation(s.clone())).unwrap();
        assert!(conj.z.is_zero());
        assert_eq!(conj.t0.order(), 6);

        let na = Arc::new(idempotent_line_algebra(Variety::NaRing(3)));
        assert!(matches!(
            faithful_quotient(&Action::conjugation(na)),
            Err(Error::NotAccessibleVariety(_))
        ));
    }

    #[test]
    fn faithful_maps_for_s3() {
        let s = s3();
        let a3 = generate(
            &s,
            &[s.elements().find(|&x| s.element_order(x) == 3).unwrap()],
        );
        let maps = induced_faithful_morphisms(&Action::conjugation(s.clone()), &a3).unwrap();
        assert_eq!(maps.whole.t0.order(), 6);
        // S3 acts on A3 through S3/A3.
        assert_eq!(maps.sub.t0.order(), 2);
        assert_eq!(2 % maps.to_sub.target().order(), 0);
        assert_eq!(maps.quotient.t0.order(), 1);
    }

    #[test]
    fn ring_faithful_quotient_over_enumerated_actions() {
        let g = Arc::new(
            FiniteAlgebra::ring_like(Variety::Ring(2), vec!["x".into()], vec![1]).unwrap(),
        );
        let b = Arc::new(
            FiniteAlgebra::ring_like(
                Variety::Ring(2),
                vec!["u".into(), "v".into()],
                vec![1, 0, 0, 0, 0, 0, 0, 1],
            )
            .unwrap(),
        );
        for xi in enumerate_actions(&b, &g, ActionBounds::default()).unwrap() {
            let fq = faithful_quotient(&xi).unwrap();
            assert!(faithful_quotient(&fq.induced).unwrap().z.is_zero());
        }
    }
}
