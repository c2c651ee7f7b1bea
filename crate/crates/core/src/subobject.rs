//! Subalgebras as element sets, quotients and congruences.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::algebra::{Element, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::linalg::decode;
use crate::morphism::Morphism;

/// Default bound on the carrier size for lattice enumeration.
pub const DEFAULT_LATTICE_BOUND: usize = 256;

/// A subalgebra, identified by its element set.
#[derive(Clone, Debug)]
pub struct Subobject {
    bits: FixedBitSet,
    generators: Vec<Element>,
}

impl PartialEq for Subobject {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subobject {}

impl Hash for Subobject {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for Subobject {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Size first, then the ascending element lists lexicographically.
impl Ord for Subobject {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.bits.ones().cmp(other.bits.ones()))
    }
}

impl Subobject {
    pub fn zero(parent: &FiniteAlgebra) -> Self {
        let mut bits = FixedBitSet::with_capacity(parent.order());
        bits.insert(0);
        Subobject {
            bits,
            generators: Vec::new(),
        }
    }

    pub fn whole(parent: &FiniteAlgebra) -> Self {
        let mut bits = FixedBitSet::with_capacity(parent.order());
        bits.insert_range(..);
        Subobject {
            bits,
            generators: parent.generators(),
        }
    }

    /// Wraps an element set that the caller knows to be a subalgebra.
    pub fn from_elements_unchecked(
        order: usize,
        elements: impl IntoIterator<Item = Element>,
    ) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        for e in elements {
            bits.insert(e as usize);
        }
        Subobject {
            bits,
            generators: Vec::new(),
        }
    }

    /// Wraps an element set after checking that it is a subalgebra of `parent`.
    pub fn from_elements(
        parent: &FiniteAlgebra,
        elements: impl IntoIterator<Item = Element>,
    ) -> Result<Self> {
        let s = Self::from_elements_unchecked(parent.order(), elements);
        if s.bits.len() != parent.order() {
            return Err(Error::ParentMismatch);
        }
        let closed = generate(parent, &s.elements());
        if closed != s {
            return Err(Error::Malformed(
                "element set is not closed under the operations".into(),
            ));
        }
        Ok(closed)
    }

    #[inline]
    pub fn contains(&self, a: Element) -> bool {
        self.bits.contains(a as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn parent_order(&self) -> usize {
        self.bits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.len() == self.bits.len()
    }

    pub fn elements(&self) -> Vec<Element> {
        self.bits.ones().map(|i| i as Element).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits.ones().map(|i| i as Element)
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn is_subset(&self, other: &Subobject) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Generators recorded when the subobject was built by closure; falls
    /// back to all elements otherwise.
    pub fn generators(&self) -> Vec<Element> {
        if self.generators.is_empty() && !self.is_zero() {
            self.elements()
        } else {
            self.generators.clone()
        }
    }

    /// Human-readable element list.
    pub fn describe(&self, parent: &FiniteAlgebra) -> String {
        if let Some(basis) = free_basis(parent, self) {
            if parent.is_ring_like() {
                let names: Vec<String> = basis.iter().map(|&b| parent.format_element(b)).collect();
                return format!("span{{{}}}", names.join(", "));
            }
        }
        let names: Vec<String> = self.iter().map(|a| parent.format_element(a)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

fn check_parent(parent: &FiniteAlgebra, h: &Subobject) -> Result<()> {
    if h.parent_order() != parent.order() {
        return Err(Error::ParentMismatch);
    }
    Ok(())
}

/// The smallest subalgebra containing `gens`.
pub fn generate(parent: &FiniteAlgebra, gens: &[Element]) -> Subobject {
    let n = parent.order();
    let ring = parent.is_ring_like();
    let mut bits = FixedBitSet::with_capacity(n);
    bits.insert(0);
    let mut members: Vec<Element> = vec![0];
    let mut kept: Vec<Element> = Vec::new();
    let mut pending: std::collections::VecDeque<Element> = gens.iter().copied().collect();
    while let Some(s) = pending.pop_front() {
        if bits.contains(s as usize) {
            continue;
        }
        kept.push(s);
        let new_index = kept.len() - 1;
        let old_len = members.len();
        let mut i = 0;
        while i < members.len() {
            let from = if i < old_len { new_index } else { 0 };
            for &g in &kept[from..] {
                let y = parent.add(members[i], g);
                if !bits.put(y as usize) {
                    members.push(y);
                }
            }
            i += 1;
        }
        if ring {
            for &t in &kept {
                for p in [parent.mul(s, t), parent.mul(t, s)] {
                    if !bits.contains(p as usize) {
                        pending.push_back(p);
                    }
                }
            }
        }
    }
    Subobject {
        bits,
        generators: kept,
    }
}

/// GROUP: closed under conjugation; ring-like: a two-sided ideal.
pub fn is_normal(parent: &FiniteAlgebra, h: &Subobject) -> bool {
    normality_witness(parent, h).is_none()
}

/// A pair `(g, h)` whose conjugate (or product) leaves `h`'s subobject.
pub fn normality_witness(parent: &FiniteAlgebra, h: &Subobject) -> Option<(Element, Element)> {
    let hg = h.generators();
    if parent.is_ring_like() {
        for g in parent.basis() {
            for &x in &hg {
                if !h.contains(parent.mul(g, x)) || !h.contains(parent.mul(x, g)) {
                    return Some((g, x));
                }
            }
        }
        return None;
    }
    for g in parent.generators() {
        for &x in &hg {
            if !h.contains(parent.conjugate(g, x)) {
                return Some((g, x));
            }
        }
    }
    None
}

pub fn meet(h: &Subobject, k: &Subobject) -> Result<Subobject> {
    if h.parent_order() != k.parent_order() {
        return Err(Error::ParentMismatch);
    }
    let mut bits = h.bits.clone();
    bits.intersect_with(&k.bits);
    Ok(Subobject {
        bits,
        generators: Vec::new(),
    })
}

pub fn join(parent: &FiniteAlgebra, h: &Subobject, k: &Subobject) -> Result<Subobject> {
    check_parent(parent, h)?;
    check_parent(parent, k)?;
    let mut gens = h.generators();
    gens.extend(k.generators());
    Ok(generate(parent, &gens))
}

/// All subalgebras, sorted by size and then by element list.
pub fn enumerate_subobjects(parent: &FiniteAlgebra, bound: usize) -> Result<Vec<Subobject>> {
    let n = parent.order();
    if n > bound {
        return Err(Error::TooLarge {
            what: "subobject lattice carrier",
            size: n,
            bound,
        });
    }
    let zero = Subobject::zero(parent);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(zero.bits.clone());
    let mut list = vec![zero];
    let mut head = 0;
    while head < list.len() {
        let s = list[head].clone();
        head += 1;
        let base = s.generators();
        for x in 1..n as Element {
            if s.contains(x) {
                continue;
            }
            let mut gens = base.clone();
            gens.push(x);
            let t = generate(parent, &gens);
            if seen.insert(t.bits.clone()) {
                list.push(t);
            }
        }
    }
    list.sort();
    Ok(list)
}

/// Smallest normal subobject containing `h`.
pub fn normal_closure(parent: &FiniteAlgebra, h: &Subobject) -> Subobject {
    let mut current = generate(parent, &h.generators());
    loop {
        let Some((g, x)) = normality_witness(parent, &current) else {
            return current;
        };
        let mut gens = current.generators();
        if parent.is_ring_like() {
            gens.push(parent.mul(g, x));
            gens.push(parent.mul(x, g));
        } else {
            gens.push(parent.conjugate(g, x));
        }
        current = generate(parent, &gens);
    }
}

/// Image of a subobject under a morphism.
pub fn image(f: &Morphism, h: &Subobject) -> Subobject {
    let gens: Vec<Element> = h.iter().map(|a| f.apply(a)).collect();
    generate(f.target(), &gens)
}

/// Preimage of a subobject of the target.
pub fn preimage(f: &Morphism, k: &Subobject) -> Subobject {
    let src = f.source();
    let s = Subobject::from_elements_unchecked(
        src.order(),
        src.elements().filter(|&a| k.contains(f.apply(a))),
    );
    generate(src, &s.elements())
}

/// Greedy free basis of an additive subgroup of a ring-like algebra, or `None`
/// if the subgroup is not a free `Z_m`-module (or the algebra is a group).
pub fn free_basis(parent: &FiniteAlgebra, h: &Subobject) -> Option<Vec<Element>> {
    let m = parent.modulus()?;
    let candidates = h.elements();
    greedy_free_basis(parent, m, &candidates, h.len(), |a| a as usize)
}

/// Greedily picks elements whose cyclic spans form a direct sum, working in
/// the quotient described by `class`.
fn greedy_free_basis(
    parent: &FiniteAlgebra,
    m: u32,
    candidates: &[Element],
    target_size: usize,
    class: impl Fn(Element) -> usize,
) -> Option<Vec<Element>> {
    let mut span: Vec<Element> = vec![0];
    let mut span_classes: HashSet<usize> = HashSet::from([class(0)]);
    let mut basis = Vec::new();
    for &c in candidates {
        if span_classes.len() >= target_size {
            break;
        }
        let multiples: Vec<Element> = (1..m)
            .scan(0, |acc, _| {
                *acc = parent.add(*acc, c);
                Some(*acc)
            })
            .collect();
        if multiples.iter().any(|&x| span_classes.contains(&class(x))) {
            continue;
        }
        if class(parent.add(*multiples.last().unwrap_or(&0), c)) != class(0) {
            continue;
        }
        let mut new_span = Vec::with_capacity(span.len() * m as usize);
        for &s in &span {
            new_span.push(s);
            for &x in &multiples {
                new_span.push(parent.add(s, x));
            }
        }
        let classes: HashSet<usize> = new_span.iter().map(|&x| class(x)).collect();
        if classes.len() != span_classes.len() * m as usize {
            continue;
        }
        span = new_span;
        span_classes = classes;
        basis.push(c);
    }
    (span_classes.len() == target_size).then_some(basis)
}

/// A subalgebra as an algebra in its own right, with its embedding table.
///
/// Group subalgebras list their elements in ascending order; ring-like
/// subalgebras get the greedy free basis of [`free_basis`].
pub fn subalgebra(parent: &FiniteAlgebra, h: &Subobject) -> Result<(FiniteAlgebra, Vec<Element>)> {
    check_parent(parent, h)?;
    if !parent.is_ring_like() {
        let elems = h.elements();
        let mut index = vec![u32::MAX; parent.order()];
        for (i, &e) in elems.iter().enumerate() {
            index[e as usize] = i as u32;
        }
        let table = elems
            .iter()
            .flat_map(|&a| elems.iter().map(move |&b| (a, b)))
            .map(|(a, b)| index[parent.add(a, b) as usize])
            .collect();
        let labels = if parent.labels().is_empty() {
            Vec::new()
        } else {
            elems.iter().map(|&e| parent.format_element(e)).collect()
        };
        return Ok((
            FiniteAlgebra::group_from_flat_unchecked(elems.len(), table, labels),
            elems,
        ));
    }
    let m = parent.modulus().expect("ring-like");
    let basis = free_basis(parent, h).ok_or(Error::NotFree(m))?;
    let (alg, embedding) = algebra_on_basis(parent, &basis, |x| Some(x))?;
    Ok((alg, embedding))
}

/// Builds the ring-like algebra spanned by `basis`, where `class` maps a
/// parent element to its class representative used for coordinate lookup.
fn algebra_on_basis(
    parent: &FiniteAlgebra,
    basis: &[Element],
    class: impl Fn(Element) -> Option<Element>,
) -> Result<(FiniteAlgebra, Vec<Element>)> {
    let m = parent.modulus().expect("ring-like");
    let k = basis.len();
    let size = (m as usize).pow(k as u32);
    let mut embedding = Vec::with_capacity(size);
    let mut coords_of = std::collections::HashMap::with_capacity(size);
    for idx in 0..size as u32 {
        let c = decode(idx, m, k);
        let mut x = 0;
        for (i, &ci) in c.iter().enumerate() {
            x = parent.add(x, parent.scalar_mul(ci, basis[i]));
        }
        embedding.push(x);
        coords_of.insert(class(x).expect("class"), c);
    }
    let mut constants = Vec::with_capacity(k * k * k);
    for &a in basis {
        for &b in basis {
            let p = class(parent.mul(a, b)).expect("class");
            let c = coords_of
                .get(&p)
                .ok_or_else(|| Error::Malformed("product leaves the span".into()))?;
            constants.extend_from_slice(c);
        }
    }
    let labels: Vec<String> = basis
        .iter()
        .map(|&b| parent.format_element(b).replace(' ', ""))
        .collect();
    let labels = dedup_labels(labels);
    let alg = FiniteAlgebra::ring_like(parent.variety(), labels, constants)?;
    Ok((alg, embedding))
}

fn dedup_labels(labels: Vec<String>) -> Vec<String> {
    let mut seen = HashSet::new();
    if labels
        .iter()
        .all(|l| seen.insert(l.clone()) && l.chars().all(|c| c.is_alphanumeric() || c == '_'))
    {
        labels
    } else {
        FiniteAlgebra::default_labels(labels.len())
    }
}

/// Coset index of every element; cosets are numbered by their least element.
pub fn coset_ids(parent: &FiniteAlgebra, h: &Subobject) -> (Vec<u32>, Vec<Element>) {
    let n = parent.order();
    let mut id = vec![u32::MAX; n];
    let mut reps = Vec::new();
    let hs = h.elements();
    for x in 0..n as Element {
        if id[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &y in &hs {
            id[parent.add(x, y) as usize] = c;
        }
    }
    (id, reps)
}

/// The quotient by a normal subobject, with its projection.
pub fn quotient(
    parent: &Arc<FiniteAlgebra>,
    h: &Subobject,
) -> Result<(Arc<FiniteAlgebra>, Morphism)> {
    check_parent(parent, h)?;
    if !is_normal(parent, h) {
        return Err(Error::NotNormal);
    }
    let (id, reps) = coset_ids(parent, h);
    if !parent.is_ring_like() {
        let k = reps.len();
        let table = reps
            .iter()
            .flat_map(|&a| reps.iter().map(move |&b| (a, b)))
            .map(|(a, b)| id[parent.add(a, b) as usize])
            .collect();
        let q = Arc::new(FiniteAlgebra::group_from_flat_unchecked(
            k,
            table,
            Vec::new(),
        ));
        let proj = Morphism::new(parent.clone(), q.clone(), id)?;
        return Ok((q, proj));
    }
    let m = parent.modulus().expect("ring-like");
    let candidates: Vec<Element> = reps.clone();
    let basis = greedy_free_basis(parent, m, &candidates, reps.len(), |a| {
        id[a as usize] as usize
    })
    .ok_or(Error::NotFree(m))?;
    let (alg, embedding) =
        algebra_on_basis(parent, &basis, |x| Some(reps[id[x as usize] as usize]))?;
    let mut quotient_index = vec![0u32; reps.len()];
    for (i, &x) in embedding.iter().enumerate() {
        quotient_index[id[x as usize] as usize] = i as u32;
    }
    let q = Arc::new(alg);
    let map = parent
        .elements()
        .map(|x| quotient_index[id[x as usize] as usize])
        .collect();
    let proj = Morphism::new(parent.clone(), q.clone(), map)?;
    debug_assert_eq!(q.order(), reps.len());
    Ok((q, proj))
}

/// An equivalence relation on a carrier, stored as a bitset over pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    order: usize,
    pairs: FixedBitSet,
}

impl Congruence {
    pub fn contains(&self, a: Element, b: Element) -> bool {
        self.pairs.contains(a as usize * self.order + b as usize)
    }

    pub fn len(&self) -> usize {
        self.pairs.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.pairs
            .ones()
            .map(|i| ((i / self.order) as Element, (i % self.order) as Element))
    }

    pub fn diagonal(order: usize) -> Self {
        let mut pairs = FixedBitSet::with_capacity(order * order);
        for a in 0..order {
            pairs.insert(a * order + a);
        }
        Congruence { order, pairs }
    }

    /// Checks reflexivity, symmetry, transitivity and compatibility with every operation.
    pub fn is_congruence(&self, parent: &FiniteAlgebra) -> bool {
        let n = self.order;
        if n != parent.order() {
            return false;
        }
        if (0..n as Element).any(|a| !self.contains(a, a)) {
            return false;
        }
        // Symmetry plus class-wise transitivity via the class of each element.
        let class: Vec<Vec<Element>> = (0..n as Element)
            .map(|a| (0..n as Element).filter(|&b| self.contains(a, b)).collect())
            .collect();
        for a in 0..n {
            for &b in &class[a] {
                if class[b as usize] != class[a] {
                    return false;
                }
            }
        }
        for (a, b) in self.pairs() {
            for c in parent.elements() {
                if !self.contains(parent.add(a, c), parent.add(b, c))
                    || !self.contains(parent.add(c, a), parent.add(c, b))
                {
                    return false;
                }
                if parent.is_ring_like()
                    && (!self.contains(parent.mul(a, c), parent.mul(b, c))
                        || !self.contains(parent.mul(c, a), parent.mul(c, b)))
                {
                    return false;
                }
            }
        }
        true
    }

    /// The class of `0`, which is a normal subobject.
    pub fn zero_class(&self, parent: &FiniteAlgebra) -> Subobject {
        let elems: Vec<Element> = parent.elements().filter(|&a| self.contains(0, a)).collect();
        generate(parent, &elems)
    }
}

/// `{(a, b) : q(a) = q(b)}` for a surjective morphism `q`.
pub fn kernel_pair(q: &Morphism) -> Result<Congruence> {
    if !q.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let n = q.source().order();
    let mut pairs = FixedBitSet::with_capacity(n * n);
    for a in 0..n as Element {
        for b in 0..n as Element {
            if q.apply(a) == q.apply(b) {
                pairs.insert(a as usize * n + b as usize);
            }
        }
    }
    Ok(Congruence { order: n, pairs })
}

pub fn quotient_by_congruence(
    parent: &Arc<FiniteAlgebra>,
    c: &Congruence,
) -> Result<(Arc<FiniteAlgebra>, Morphism)> {
    if !c.is_congruence(parent) {
        return Err(Error::Malformed("relation is not a congruence".into()));
    }
    quotient(parent, &c.zero_class(parent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::Variety;

    fn example(m: u32) -> Arc<FiniteAlgebra> {
        let mut c = vec![0; 8];
        c[0] = 1;
        Arc::new(
            FiniteAlgebra::ring_like(Variety::NaRing(m), vec!["x".into(), "y".into()], c).unwrap(),
        )
    }

    fn s3() -> Arc<FiniteAlgebra> {
        Arc::new(FiniteAlgebra::group_from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
        ))
    }

    fn three_cycle(g: &FiniteAlgebra) -> Element {
        g.elements().find(|&a| g.element_order(a) == 3).unwrap()
    }

    fn transposition(g: &FiniteAlgebra) -> Element {
        g.elements().find(|&a| g.element_order(a) == 2).unwrap()
    }

    #[test]
    fn generate_examples() {
        let g = example(5);
        assert!(generate(&g, &[]).is_zero());
        let sx = generate(&g, &[g.basis_element(0)]);
        assert_eq!(sx.len(), 5);
        assert!((0..5).all(|c| sx.contains(g.scalar_mul(c, g.basis_element(0)))));
        let s = s3();
        assert_eq!(generate(&s, &[three_cycle(&s)]).len(), 3);
    }

    #[test]
    fn normality_examples() {
        let g = example(5);
        assert!(is_normal(&g, &Subobject::zero(&g)));
        assert!(is_normal(&g, &Subobject::whole(&g)));
        assert!(is_normal(&g, &generate(&g, &[g.basis_element(0)])));
        let s = s3();
        assert!(!is_normal(&s, &generate(&s, &[transposition(&s)])));
    }

    #[test]
    fn meet_and_join_examples() {
        let g = example(5);
        let sx = generate(&g, &[g.basis_element(0)]);
        let sy = generate(&g, &[g.basis_element(1)]);
        assert!(meet(&sx, &sy).unwrap().is_zero());
        assert!(join(&g, &sx, &sy).unwrap().is_whole());
        assert_eq!(meet(&sx, &Subobject::whole(&g)).unwrap(), sx);
        assert_eq!(join(&g, &sx, &Subobject::zero(&g)).unwrap(), sx);
        let v4 = FiniteAlgebra::group_from_table(
            vec![
                vec![0, 1, 2, 3],
                vec![1, 0, 3, 2],
                vec![2, 3, 0, 1],
                vec![3, 2, 1, 0],
            ],
            vec![],
        )
        .unwrap();
        let a = generate(&v4, &[1]);
        let b = generate(&v4, &[2]);
        assert!(join(&v4, &a, &b).unwrap().is_whole());
        let other = Subobject::zero(&s3());
        assert_eq!(meet(&a, &other), Err(Error::ParentMismatch));
    }

    #[test]
    fn lattice_examples() {
        let t = FiniteAlgebra::trivial(Variety::NaRing(5));
        assert_eq!(enumerate_subobjects(&t, 256).unwrap().len(), 1);
        let g = example(5);
        let subs = enumerate_subobjects(&g, 256).unwrap();
        assert_eq!(subs.len(), 4);
        // No line span{x + t y} with t != 0 is closed under multiplication.
        for t in 1..5 {
            let v = g.add(g.basis_element(0), g.scalar_mul(t, g.basis_element(1)));
            assert!(!subs.iter().any(|s| s.len() == 5 && s.contains(v)));
        }
        assert_eq!(
            enumerate_subobjects(&FiniteAlgebra::cyclic_group(4), 256)
                .unwrap()
                .len(),
            3
        );
        assert!(matches!(
            enumerate_subobjects(&g, 10),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let g = example(5);
        let (q0, _) = quotient(&g, &Subobject::zero(&g)).unwrap();
        assert_eq!(q0.order(), 25);
        assert_eq!(q0.constants(), g.constants());
        let (q1, _) = quotient(&g, &Subobject::whole(&g)).unwrap();
        assert_eq!(q1.order(), 1);
        let (qx, proj) = quotient(&g, &generate(&g, &[g.basis_element(0)])).unwrap();
        assert_eq!(qx.rank(), Some(1));
        assert_eq!(qx.constants(), Some(&[0u32][..]));
        assert_eq!(proj.is_morphism().unwrap(), None);
        let s = s3();
        assert_eq!(
            quotient(&s, &generate(&s, &[transposition(&s)])).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn kernel_pair_examples() {
        let s = s3();
        let id = Morphism::identity(s.clone());
        assert_eq!(kernel_pair(&id).unwrap(), Congruence::diagonal(6));
        let t = Arc::new(FiniteAlgebra::trivial(Variety::Group));
        assert_eq!(
            kernel_pair(&Morphism::zero(s.clone(), t)).unwrap().len(),
            36
        );
        let a3 = generate(&s, &[three_cycle(&s)]);
        let (_, sign) = quotient(&s, &a3).unwrap();
        let r = kernel_pair(&sign).unwrap();
        assert_eq!(r.len(), 18);
        for (a, b) in r.pairs() {
            assert_eq!(a3.contains(a), a3.contains(b));
        }
        assert!(r.is_congruence(&s));
        let z = Morphism::zero(s.clone(), s.clone());
        assert_eq!(kernel_pair(&z).unwrap_err(), Error::NotSurjective);
    }

    #[test]
    fn normal_closure_examples() {
        let s = s3();
        assert!(normal_closure(&s, &generate(&s, &[transposition(&s)])).is_whole());
        assert!(normal_closure(&s, &Subobject::zero(&s)).is_zero());
        let a3 = generate(&s, &[three_cycle(&s)]);
        assert_eq!(normal_closure(&s, &a3), a3);
    }

    #[test]
    fn quotients_of_non_free_ideals_are_reported() {
        // 2·Z_4 inside the rank-one zero ring over Z_4.
        let g = Arc::new(
            FiniteAlgebra::ring_like(Variety::Ring(4), vec!["e".into()], vec![0]).unwrap(),
        );
        let h = generate(&g, &[2]);
        assert_eq!(quotient(&g, &h).unwrap_err(), Error::NotFree(4));
        assert_eq!(subalgebra(&g, &h).unwrap_err(), Error::NotFree(4));
    }
}
