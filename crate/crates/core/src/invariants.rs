//! Characteristic subobjects, Higgins and Huq commutators, centralisers.

use std::fmt;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::action::{invariance_witness, ActionBounds, ActionEnumerator, InvarianceWitness};
use crate::algebra::{Element, FiniteAlgebra};
use crate::automorphism::{automorphisms, derivation_spanning_set, permutable_bimultiplications};
use crate::corpus::{group_corpus, ring_like_corpus, Instance};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::subobject::{
    enumerate_subobjects, generate, normal_closure, Subobject, DEFAULT_LATTICE_BOUND,
};
use crate::variety::Variety;

/// Unary maps whose common invariant subobjects are exactly the characteristic ones.
#[derive(Clone, Debug)]
pub enum ActionGeneratorSet {
    /// All of Aut(G).
    Automorphisms(Vec<Vec<Element>>),
    /// A spanning set of Der(G).
    Derivations(Vec<Matrix>),
    /// All permutable bimultiplications `(λ, ρ)`.
    Bimultiplications(Vec<(Matrix, Matrix)>),
    /// All of End(G) × End(G), represented by a spanning set of pairs.
    Endomorphisms(Vec<(Matrix, Matrix)>),
}

impl ActionGeneratorSet {
    pub fn len(&self) -> usize {
        match self {
            ActionGeneratorSet::Automorphisms(a) => a.len(),
            ActionGeneratorSet::Derivations(d) => d.len(),
            ActionGeneratorSet::Bimultiplications(p) | ActionGeneratorSet::Endomorphisms(p) => {
                p.len()
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ActionGeneratorSet::Automorphisms(_) => "automorphisms",
            ActionGeneratorSet::Derivations(_) => "derivations (spanning set)",
            ActionGeneratorSet::Bimultiplications(_) => "permutable bimultiplications",
            ActionGeneratorSet::Endomorphisms(_) => "endomorphism pairs (spanning set)",
        }
    }
}

/// Spanning pairs of End × End: the coordinate swaps on both sides first,
/// then every elementary matrix on each side.
fn endomorphism_pairs(r: usize, m: u32) -> Vec<(Matrix, Matrix)> {
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut p = Matrix::identity(r, m);
            p.set(i, i, 0);
            p.set(j, j, 0);
            p.set(i, j, 1);
            p.set(j, i, 1);
            out.push((p.clone(), p));
        }
    }
    let zero = Matrix::zero(r, r, m);
    for i in 0..r {
        for j in 0..r {
            let e = Matrix::elementary(r, i, j, m);
            out.push((e.clone(), zero.clone()));
            out.push((zero.clone(), e));
        }
    }
    out
}

pub fn action_generators(g: &FiniteAlgebra) -> Result<ActionGeneratorSet> {
    Ok(match g.variety() {
        Variety::Group => ActionGeneratorSet::Automorphisms(automorphisms(g)?),
        Variety::Lie(_) => ActionGeneratorSet::Derivations(derivation_spanning_set(g)?),
        Variety::Ring(_) => ActionGeneratorSet::Bimultiplications(permutable_bimultiplications(g)?),
        Variety::NaRing(m) => {
            ActionGeneratorSet::Endomorphisms(endomorphism_pairs(g.rank().unwrap_or(0), m))
        }
    })
}

/// A generator moving an element of `H` outside `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharWitness {
    pub generator: String,
    /// Automorphism table or `(λ, ρ)` matrices of the offending generator.
    pub map: WitnessMap,
    pub element: Element,
    pub image: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessMap {
    Automorphism(Vec<Element>),
    Derivation(Matrix),
    Pair(Matrix, Matrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVerdict {
    pub characteristic: bool,
    pub witness: Option<CharWitness>,
}

impl fmt::Display for CharVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic {
            write!(f, "characteristic")
        } else {
            write!(f, "NOT characteristic")
        }
    }
}

/// Fast characteristic test with the generator set computed once per algebra.
pub struct CharacteristicTest {
    algebra: Arc<FiniteAlgebra>,
    generators: ActionGeneratorSet,
}

impl CharacteristicTest {
    pub fn new(algebra: Arc<FiniteAlgebra>) -> Result<Self> {
        let generators = action_generators(&algebra)?;
        Ok(CharacteristicTest {
            algebra,
            generators,
        })
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn generators(&self) -> &ActionGeneratorSet {
        &self.generators
    }

    pub fn check(&self, h: &Subobject) -> Result<CharVerdict> {
        let g = &*self.algebra;
        if h.parent_order() != g.order() {
            return Err(Error::ParentMismatch);
        }
        let hs = h.generators();
        let ap = |mat: &Matrix, x: Element| g.from_coords(&mat.apply(&g.coords(x)));
        let fail = |generator: String, map: WitnessMap, element, image| {
            Ok(CharVerdict {
                characteristic: false,
                witness: Some(CharWitness {
                    generator,
                    map,
                    element,
                    image,
                }),
            })
        };
        match &self.generators {
            ActionGeneratorSet::Automorphisms(auts) => {
                for (i, a) in auts.iter().enumerate() {
                    if let Some(&x) = hs.iter().find(|&&x| !h.contains(a[x as usize])) {
                        return fail(
                            format!("automorphism #{i}"),
                            WitnessMap::Automorphism(a.clone()),
                            x,
                            a[x as usize],
                        );
                    }
                }
            }
            ActionGeneratorSet::Derivations(ds) => {
                for (i, d) in ds.iter().enumerate() {
                    if let Some(&x) = hs.iter().find(|&&x| !h.contains(ap(d, x))) {
                        return fail(
                            format!("derivation #{i}"),
                            WitnessMap::Derivation(d.clone()),
                            x,
                            ap(d, x),
                        );
                    }
                }
            }
            ActionGeneratorSet::Bimultiplications(ps) | ActionGeneratorSet::Endomorphisms(ps) => {
                let what = if matches!(self.generators, ActionGeneratorSet::Endomorphisms(_)) {
                    "endomorphism pair"
                } else {
                    "bimultiplication"
                };
                for (i, (l, r)) in ps.iter().enumerate() {
                    for &x in &hs {
                        for y in [ap(l, x), ap(r, x)] {
                            if !h.contains(y) {
                                return fail(
                                    format!("{what} #{i}"),
                                    WitnessMap::Pair(l.clone(), r.clone()),
                                    x,
                                    y,
                                );
                            }
                        }
                    }
                }
            }
        }
        Ok(CharVerdict {
            characteristic: true,
            witness: None,
        })
    }
}

pub fn is_characteristic(g: &Arc<FiniteAlgebra>, h: &Subobject) -> Result<CharVerdict> {
    CharacteristicTest::new(g.clone())?.check(h)
}

/// Failure found by the brute-force oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleWitness {
    pub acting: String,
    pub action_index: u64,
    pub witness: InvarianceWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub characteristic: bool,
    pub witness: Option<OracleWitness>,
}

/// Brute-force characteristic test: every action of every acting algebra
/// within bounds must restrict to the subobject.
pub struct Oracle {
    enumerator: ActionEnumerator,
    acting: Vec<Instance>,
}

impl Oracle {
    pub fn new(g: Arc<FiniteAlgebra>, bounds: ActionBounds) -> Result<Self> {
        let acting = match g.variety() {
            Variety::Group => group_corpus(bounds.max_group_order)?,
            v => ring_like_corpus(v.tag(), &[v.modulus().expect("ring-like")], bounds.max_rank)?,
        };
        let enumerator = ActionEnumerator::new(g, bounds)?;
        Ok(Oracle { enumerator, acting })
    }

    pub fn acting_algebras(&self) -> &[Instance] {
        &self.acting
    }

    /// Checks several subobjects in one pass over the actions; each verdict
    /// carries the first failure in enumeration order.
    pub fn check_all(&self, subs: &[Subobject]) -> Result<Vec<OracleVerdict>> {
        let mut verdicts: Vec<Option<OracleWitness>> = vec![None; subs.len()];
        // The extremal subobjects are invariant under everything.
        let mut pending: Vec<usize> = (0..subs.len())
            .filter(|&i| !subs[i].is_whole() && !subs[i].is_zero())
            .collect();
        for b in &self.acting {
            if pending.is_empty() {
                break;
            }
            let mut index = 0u64;
            self.enumerator.for_each(&b.algebra, |xi| {
                pending.retain(|&i| match invariance_witness(xi, &subs[i]) {
                    Some(w) => {
                        verdicts[i] = Some(OracleWitness {
                            acting: b.name.clone(),
                            action_index: index,
                            witness: w,
                        });
                        false
                    }
                    None => true,
                });
                index += 1;
                if pending.is_empty() {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
        }
        Ok(verdicts
            .into_iter()
            .map(|w| OracleVerdict {
                characteristic: w.is_none(),
                witness: w,
            })
            .collect())
    }

    pub fn check(&self, h: &Subobject) -> Result<OracleVerdict> {
        Ok(self.check_all(std::slice::from_ref(h))?.remove(0))
    }
}

pub fn is_characteristic_oracle(
    g: &Arc<FiniteAlgebra>,
    h: &Subobject,
    bounds: ActionBounds,
) -> Result<OracleVerdict> {
    if h.is_whole() || h.is_zero() {
        return Ok(OracleVerdict {
            characteristic: true,
            witness: None,
        });
    }
    Oracle::new(g.clone(), bounds)?.check(h)
}

fn same_parent(g: &FiniteAlgebra, h: &Subobject, k: &Subobject) -> Result<()> {
    if h.parent_order() != g.order() || k.parent_order() != g.order() {
        return Err(Error::ParentMismatch);
    }
    Ok(())
}

/// Generated by the group commutators `[h, k]` and both products `hk`, `kh`.
pub fn higgins_commutator(g: &FiniteAlgebra, h: &Subobject, k: &Subobject) -> Result<Subobject> {
    same_parent(g, h, k)?;
    let mut gens = Vec::new();
    if g.is_ring_like() {
        // Bilinearity: products of generators span all products.
        let (hg, kg) = (h.generators(), k.generators());
        for &a in &hg {
            for &b in &kg {
                gens.push(g.mul(a, b));
                gens.push(g.mul(b, a));
            }
        }
    } else {
        for a in h.iter() {
            for b in k.iter() {
                gens.push(g.commutator(a, b));
            }
        }
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(generate(g, &gens))
}

/// Normal closure of the Higgins commutator.
pub fn huq_commutator(g: &FiniteAlgebra, h: &Subobject, k: &Subobject) -> Result<Subobject> {
    Ok(normal_closure(g, &higgins_commutator(g, h, k)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Centraliser {
    Exists(Subobject),
    /// No largest commuting subobject; the maximal ones are listed.
    DoesNotExist(Vec<Subobject>),
}

impl Centraliser {
    pub fn subobject(&self) -> Option<&Subobject> {
        match self {
            Centraliser::Exists(s) => Some(s),
            Centraliser::DoesNotExist(_) => None,
        }
    }
}

/// Elements commuting with (groups) or annihilating (ring-like) all of `H`.
pub fn commuting_elements(g: &FiniteAlgebra, h: &Subobject) -> Vec<Element> {
    let hs = h.generators();
    g.elements()
        .filter(|&x| {
            hs.iter().all(|&y| {
                if g.is_ring_like() {
                    g.mul(x, y) == 0 && g.mul(y, x) == 0
                } else {
                    g.add(x, y) == g.add(y, x)
                }
            })
        })
        .collect()
}

/// The largest subobject whose Huq commutator with `H` vanishes.
pub fn centralizer(g: &FiniteAlgebra, h: &Subobject) -> Result<Centraliser> {
    if h.parent_order() != g.order() {
        return Err(Error::ParentMismatch);
    }
    let elems = commuting_elements(g, h);
    let closed = generate(g, &elems);
    if closed.len() == elems.len() {
        return Ok(Centraliser::Exists(closed));
    }
    // Not a subalgebra: look for a unique maximal subobject inside the set.
    let set = Subobject::from_elements_unchecked(g.order(), elems);
    let inside: Vec<Subobject> = enumerate_subobjects(g, DEFAULT_LATTICE_BOUND)?
        .into_iter()
        .filter(|s| s.is_subset(&set))
        .collect();
    let maximal: Vec<Subobject> = inside
        .iter()
        .filter(|s| !inside.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect();
    if maximal.len() == 1 {
        Ok(Centraliser::Exists(maximal[0].clone()))
    } else {
        Ok(Centraliser::DoesNotExist(maximal))
    }
}

pub fn centre(g: &FiniteAlgebra) -> Result<Centraliser> {
    centralizer(g, &Subobject::whole(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::idempotent_line_algebra;
    use crate::subobject::is_normal;

    fn example() -> Arc<FiniteAlgebra> {
        Arc::new(idempotent_line_algebra(Variety::NaRing(5)))
    }

    fn s3() -> Arc<FiniteAlgebra> {
        Arc::new(FiniteAlgebra::group_from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
        ))
    }

    fn a3(s: &FiniteAlgebra) -> Subobject {
        generate(
            s,
            &[s.elements().find(|&x| s.element_order(x) == 3).unwrap()],
        )
    }

    #[test]
    fn generator_sets() {
        assert_eq!(
            action_generators(&FiniteAlgebra::cyclic_group(3))
                .unwrap()
                .len(),
            2
        );
        let abelian = FiniteAlgebra::ring_like(
            Variety::Lie(5),
            FiniteAlgebra::default_labels(2),
            vec![0; 8],
        )
        .unwrap();
        assert_eq!(action_generators(&abelian).unwrap().len(), 4);
        let ActionGeneratorSet::Endomorphisms(pairs) = action_generators(&example()).unwrap()
        else {
            panic!()
        };
        // One swap pair plus four elementary matrices on each side.
        assert_eq!(pairs.len(), 9);
    }

    #[test]
    fn extremal_subobjects_are_characteristic() {
        for g in [example(), s3()] {
            assert!(
                is_characteristic(&g, &Subobject::zero(&g))
                    .unwrap()
                    .characteristic
            );
            assert!(
                is_characteristic(&g, &Subobject::whole(&g))
                    .unwrap()
                    .characteristic
            );
        }
    }

    #[test]
    fn derived_and_centre_of_idempotent_line_are_not_characteristic() {
        let g = example();
        let (x, y) = (g.basis_element(0), g.basis_element(1));
        let v = is_characteristic(&g, &generate(&g, &[x])).unwrap();
        assert!(!v.characteristic);
        let w = v.witness.unwrap();
        let swap = Matrix::from_rows(&[vec![0, 1], vec![1, 0]], 5);
        assert_eq!(w.map, WitnessMap::Pair(swap.clone(), swap));
        assert_eq!((w.element, w.image), (x, y));
        assert!(
            !is_characteristic(&g, &generate(&g, &[y]))
                .unwrap()
                .characteristic
        );
    }

    #[test]
    fn a3_is_characteristic_in_s3() {
        let s = s3();
        assert!(is_characteristic(&s, &a3(&s)).unwrap().characteristic);
        let oracle = is_characteristic_oracle(&s, &a3(&s), ActionBounds::default()).unwrap();
        assert!(oracle.characteristic);
    }

    #[test]
    fn oracle_finds_the_swap_action() {
        let g = Arc::new(idempotent_line_algebra(Variety::NaRing(3)));
        let sx = generate(&g, &[g.basis_element(0)]);
        let v = is_characteristic_oracle(&g, &sx, ActionBounds::default()).unwrap();
        assert!(!v.characteristic);
        assert!(v.witness.unwrap().acting.contains("rank 1"));
    }

    #[test]
    fn commutator_examples() {
        let g = example();
        let whole = Subobject::whole(&g);
        let sx = generate(&g, &[g.basis_element(0)]);
        assert_eq!(higgins_commutator(&g, &whole, &whole).unwrap(), sx);
        assert_eq!(huq_commutator(&g, &whole, &whole).unwrap(), sx);
        assert!(higgins_commutator(&g, &sx, &Subobject::zero(&g))
            .unwrap()
            .is_zero());
        assert!(huq_commutator(&g, &sx, &Subobject::zero(&g))
            .unwrap()
            .is_zero());
        let s = s3();
        let all = Subobject::whole(&s);
        assert_eq!(higgins_commutator(&s, &all, &all).unwrap(), a3(&s));
    }

    #[test]
    fn centraliser_examples() {
        let g = example();
        assert_eq!(
            centralizer(&g, &Subobject::zero(&g)).unwrap(),
            Centraliser::Exists(Subobject::whole(&g))
        );
        let sy = generate(&g, &[g.basis_element(1)]);
        assert_eq!(centre(&g).unwrap(), Centraliser::Exists(sy.clone()));
        assert!(is_normal(&g, &sy));
        let s = s3();
        assert_eq!(
            centralizer(&s, &a3(&s)).unwrap(),
            Centraliser::Exists(a3(&s))
        );
        assert!(centre(&s).unwrap().subobject().unwrap().is_zero());
        let z6 = FiniteAlgebra::cyclic_group(6);
        assert!(centre(&z6).unwrap().subobject().unwrap().is_whole());
    }

    #[test]
    fn naring_centralisers_can_fail_to_exist() {
        // x*y = z, z*z = z over Z_2: x and y annihilate span{z} but x*y does not.
        let mut c = vec![0; 27];
        c[(0 * 3 + 1) * 3 + 2] = 1;
        c[(2 * 3 + 2) * 3 + 2] = 1;
        let g = FiniteAlgebra::ring_like(Variety::NaRing(2), FiniteAlgebra::default_labels(3), c)
            .unwrap();
        let h = generate(&g, &[g.basis_element(2)]);
        let Centraliser::DoesNotExist(maximal) = centralizer(&g, &h).unwrap() else {
            panic!()
        };
        let expected = vec![
            generate(&g, &[g.basis_element(0)]),
            generate(&g, &[g.basis_element(1)]),
        ];
        let mut got = maximal.clone();
        got.sort();
        assert_eq!(got, expected);
        for z in &maximal {
            assert!(huq_commutator(&g, &h, z).unwrap().is_zero());
        }
    }
}
