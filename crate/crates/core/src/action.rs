//! Internal actions, semidirect products and split extensions.
//!
//! Group actions are automorphism assignments `b ↦ α_b`. Ring-like actions
//! are pairs of bilinear maps `l: B × G → G`, `r: G × B → G`, stored as one
//! matrix per basis element of `B`: `left[i]` is `λ_{b_i} = l(b_i, -)` and
//! `right[i]` is `ρ_{b_i} = r(-, b_i)`, both acting on coordinate columns of `G`.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::algebra::{Element, FiniteAlgebra};
use crate::automorphism::{
    all_bimultiplications, all_derivations, automorphisms, for_each_group_hom,
};
use crate::error::{Error, Result};
use crate::linalg::{decode, Matrix};
use crate::morphism::Morphism;
use crate::subobject::{quotient, subalgebra, Subobject};
use crate::variety::Variety;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionData {
    /// `α_b` for every element `b` of the acting group, as a table on `G`.
    Group(Vec<Vec<Element>>),
    /// One `(λ, ρ)` matrix pair per basis element of the acting algebra.
    Bilinear {
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    actor: Arc<FiniteAlgebra>,
    target: Arc<FiniteAlgebra>,
    data: ActionData,
}

/// The first violated action law, with the elements instantiating it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionViolation {
    pub law: &'static str,
    pub elements: Vec<Element>,
    pub detail: String,
}

/// Which half of the action data moved an element out of a subobject.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Automorphism,
    Left,
    Right,
}

/// `b` acting on `h ∈ H` lands at `image ∉ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceWitness {
    pub b: Element,
    pub h: Element,
    pub image: Element,
    pub side: Side,
}

#[derive(Clone, Debug)]
pub enum Restriction {
    /// The restricted action on `H` and the embedding of `H` into `G`.
    Restricted(Action, Vec<Element>),
    NotInvariant(InvarianceWitness),
}

impl Action {
    pub fn group(
        actor: Arc<FiniteAlgebra>,
        target: Arc<FiniteAlgebra>,
        automorphisms: Vec<Vec<Element>>,
    ) -> Result<Self> {
        if !actor.is_group() || !target.is_group() {
            return Err(Error::VarietyMismatch(actor.variety(), target.variety()));
        }
        if automorphisms.len() != actor.order()
            || automorphisms.iter().any(|a| a.len() != target.order())
        {
            return Err(Error::InvalidAction(
                "automorphism table has the wrong shape".into(),
            ));
        }
        Ok(Action {
            actor,
            target,
            data: ActionData::Group(automorphisms),
        })
    }

    pub fn bilinear(
        actor: Arc<FiniteAlgebra>,
        target: Arc<FiniteAlgebra>,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self> {
        if actor.variety() != target.variety() || !actor.is_ring_like() {
            return Err(Error::VarietyMismatch(actor.variety(), target.variety()));
        }
        let (rb, rg) = (actor.rank().unwrap_or(0), target.rank().unwrap_or(0));
        let shape_ok =
            |v: &[Matrix]| v.len() == rb && v.iter().all(|x| x.rows() == rg && x.cols() == rg);
        if !shape_ok(&left) || !shape_ok(&right) {
            return Err(Error::InvalidAction(
                "bilinear tables have the wrong shape".into(),
            ));
        }
        Ok(Action {
            actor,
            target,
            data: ActionData::Bilinear { left, right },
        })
    }

    /// A Lie action from its bracket table; the right-hand side is `-λ`.
    pub fn lie(
        actor: Arc<FiniteAlgebra>,
        target: Arc<FiniteAlgebra>,
        left: Vec<Matrix>,
    ) -> Result<Self> {
        let right = left.iter().map(Matrix::neg).collect();
        Self::bilinear(actor, target, left, right)
    }

    /// `α_b = id`, or `l = r = 0`.
    pub fn trivial(actor: Arc<FiniteAlgebra>, target: Arc<FiniteAlgebra>) -> Result<Self> {
        if actor.variety() != target.variety() {
            return Err(Error::VarietyMismatch(actor.variety(), target.variety()));
        }
        if actor.is_group() {
            let id: Vec<Element> = target.elements().collect();
            let data = vec![id; actor.order()];
            return Self::group(actor, target, data);
        }
        let (rb, rg) = (actor.rank().unwrap_or(0), target.rank().unwrap_or(0));
        let m = target.modulus().expect("ring-like");
        let zeros = vec![Matrix::zero(rg, rg, m); rb];
        Self::bilinear(actor, target, zeros.clone(), zeros)
    }

    /// `G` acting on itself by conjugation, or by left and right multiplication.
    pub fn conjugation(g: Arc<FiniteAlgebra>) -> Self {
        if g.is_group() {
            let data = g
                .elements()
                .map(|b| g.elements().map(|x| g.conjugate(b, x)).collect())
                .collect();
            return Action {
                actor: g.clone(),
                target: g,
                data: ActionData::Group(data),
            };
        }
        let r = g.rank().unwrap_or(0);
        let m = g.modulus().expect("ring-like");
        let mult = |f: &dyn Fn(Element) -> Element| -> Matrix {
            let cols: Vec<Vec<u32>> = g.basis().iter().map(|&x| g.coords(f(x))).collect();
            Matrix::from_columns(&cols, r, m)
        };
        let left = g.basis().iter().map(|&b| mult(&|x| g.mul(b, x))).collect();
        let right = g.basis().iter().map(|&b| mult(&|x| g.mul(x, b))).collect();
        Action {
            actor: g.clone(),
            target: g,
            data: ActionData::Bilinear { left, right },
        }
    }

    pub fn actor(&self) -> &Arc<FiniteAlgebra> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<FiniteAlgebra> {
        &self.target
    }

    pub fn data(&self) -> &ActionData {
        &self.data
    }

    /// The automorphism `α_b` of a group action.
    pub fn alpha(&self, b: Element) -> &[Element] {
        match &self.data {
            ActionData::Group(a) => &a[b as usize],
            ActionData::Bilinear { .. } => panic!("ring-like actions have no automorphism table"),
        }
    }

    fn combine(&self, mats: &[Matrix], b: Element) -> Matrix {
        let rg = self.target.rank().unwrap_or(0);
        let m = self.target.modulus().expect("ring-like");
        let coords = self.actor.coords(b);
        let mut acc = Matrix::zero(rg, rg, m);
        for (c, mat) in coords.iter().zip(mats) {
            if *c != 0 {
                acc = acc.add(&mat.scale(*c));
            }
        }
        acc
    }

    /// `λ_b = l(b, -)` for any element `b` of the acting algebra.
    pub fn lambda(&self, b: Element) -> Matrix {
        match &self.data {
            ActionData::Bilinear { left, .. } => self.combine(left, b),
            ActionData::Group(_) => panic!("group actions have no bilinear tables"),
        }
    }

    /// `ρ_b = r(-, b)`.
    pub fn rho(&self, b: Element) -> Matrix {
        match &self.data {
            ActionData::Bilinear { right, .. } => self.combine(right, b),
            ActionData::Group(_) => panic!("group actions have no bilinear tables"),
        }
    }

    fn apply(&self, mat: &Matrix, x: Element) -> Element {
        self.target.from_coords(&mat.apply(&self.target.coords(x)))
    }

    /// Whether `b` acts as the identity (groups) or by zero maps (ring-like).
    pub fn acts_trivially(&self, b: Element) -> bool {
        match &self.data {
            ActionData::Group(a) => a[b as usize]
                .iter()
                .enumerate()
                .all(|(i, &x)| i as Element == x),
            ActionData::Bilinear { .. } => self.lambda(b).is_zero() && self.rho(b).is_zero(),
        }
    }

    /// Every element of `G` reached from `x` by one element's action data.
    fn images(&self, b: Element, x: Element) -> Vec<(Side, Element)> {
        match &self.data {
            ActionData::Group(a) => vec![(Side::Automorphism, a[b as usize][x as usize])],
            ActionData::Bilinear { .. } => {
                vec![
                    (Side::Left, self.apply(&self.lambda(b), x)),
                    (Side::Right, self.apply(&self.rho(b), x)),
                ]
            }
        }
    }

    /// Elements of `B` whose action data need checking: all of `B` for groups,
    /// a basis for ring-like actors.
    fn acting_elements(&self) -> Vec<Element> {
        if self.actor.is_group() {
            self.actor.elements().collect()
        } else {
            self.actor.basis()
        }
    }

    /// The action of `B'` obtained by composing with `φ: B' → B`.
    pub fn pullback(&self, phi: &Morphism) -> Result<Action> {
        if phi.target().order() != self.actor.order()
            || phi.target().variety() != self.actor.variety()
        {
            return Err(Error::Malformed(
                "pullback along a morphism with the wrong target".into(),
            ));
        }
        let src = phi.source().clone();
        match &self.data {
            ActionData::Group(a) => {
                let data = src
                    .elements()
                    .map(|b| a[phi.apply(b) as usize].clone())
                    .collect();
                Action::group(src, self.target.clone(), data)
            }
            ActionData::Bilinear { .. } => {
                let basis = src.basis();
                let left = basis.iter().map(|&b| self.lambda(phi.apply(b))).collect();
                let right = basis.iter().map(|&b| self.rho(phi.apply(b))).collect();
                Action::bilinear(src, self.target.clone(), left, right)
            }
        }
    }
}

/// Checks every law of the action's variety; `Ok(None)` when all hold.
pub fn validate_action(xi: &Action) -> Result<Option<ActionViolation>> {
    let (b, g) = (&*xi.actor, &*xi.target);
    if b.variety() != g.variety() {
        return Err(Error::VarietyMismatch(b.variety(), g.variety()));
    }
    match &xi.data {
        ActionData::Group(alpha) => Ok(validate_group_action(b, g, alpha)),
        ActionData::Bilinear { left, right } => Ok(validate_bilinear_action(xi, left, right)),
    }
}

fn violation(law: &'static str, elements: Vec<Element>, detail: String) -> Option<ActionViolation> {
    Some(ActionViolation {
        law,
        elements,
        detail,
    })
}

fn validate_group_action(
    b: &FiniteAlgebra,
    g: &FiniteAlgebra,
    alpha: &[Vec<Element>],
) -> Option<ActionViolation> {
    let gens = g.generators();
    for (bi, a) in alpha.iter().enumerate() {
        let mut seen = vec![false; g.order()];
        if a.iter()
            .any(|&y| std::mem::replace(&mut seen[y as usize], true))
        {
            return violation(
                "α_b is a bijection",
                vec![bi as Element],
                format!("α_{bi} is not injective"),
            );
        }
        for x in g.elements() {
            for &s in &gens {
                if a[g.add(x, s) as usize] != g.add(a[x as usize], a[s as usize]) {
                    return violation(
                        "α_b is a homomorphism",
                        vec![bi as Element, x, s],
                        format!("α_{bi}({x}·{s}) ≠ α_{bi}({x})·α_{bi}({s})"),
                    );
                }
            }
        }
    }
    if alpha[0].iter().enumerate().any(|(i, &x)| i as Element != x) {
        return violation(
            "α_0 = id",
            vec![0],
            "the identity of B does not act trivially".into(),
        );
    }
    let bgens = b.generators();
    for b1 in b.elements() {
        for &b2 in &bgens {
            let lhs = &alpha[b.add(b1, b2) as usize];
            let a1 = &alpha[b1 as usize];
            let a2 = &alpha[b2 as usize];
            if let Some(x) = g
                .elements()
                .find(|&x| lhs[x as usize] != a1[a2[x as usize] as usize])
            {
                return violation(
                    "α_{bb'} = α_b ∘ α_{b'}",
                    vec![b1, b2, x],
                    format!("α_{{{b1}·{b2}}}({x}) ≠ α_{b1}(α_{b2}({x}))"),
                );
            }
        }
    }
    None
}

fn validate_bilinear_action(
    xi: &Action,
    left: &[Matrix],
    right: &[Matrix],
) -> Option<ActionViolation> {
    let (b, g) = (&*xi.actor, &*xi.target);
    // The additive parts are abelian, so the conjugation part of the action is trivial.
    if !g.is_abelian() || !b.is_abelian() {
        return violation(
            "additive conjugation is trivial",
            vec![],
            "additive group is not abelian".into(),
        );
    }
    let gb = g.basis();
    let bb = b.basis();
    let ap = |m: &Matrix, x: Element| g.from_coords(&m.apply(&g.coords(x)));
    let name = |x: Element| g.format_element(x);
    let bname = |x: Element| b.format_element(x);
    match b.variety() {
        Variety::NaRing(_) => None,
        Variety::Lie(_) => {
            for (i, (l, r)) in left.iter().zip(right).enumerate() {
                if *r != l.neg() {
                    return violation(
                        "r(g, b) = -l(b, g)",
                        vec![bb[i]],
                        format!("right table of {} is not -left", bname(bb[i])),
                    );
                }
                for &x in &gb {
                    for &y in &gb {
                        let lhs = ap(l, g.mul(x, y));
                        let rhs = g.add(g.mul(ap(l, x), y), g.mul(x, ap(l, y)));
                        if lhs != rhs {
                            return violation(
                                "λ_b is a derivation",
                                vec![bb[i], x, y],
                                format!(
                                    "{b}·[{x},{y}] = {} but [{b}·{x},{y}] + [{x},{b}·{y}] = {}",
                                    name(lhs),
                                    name(rhs),
                                    b = bname(bb[i]),
                                    x = name(x),
                                    y = name(y)
                                ),
                            );
                        }
                    }
                }
            }
            for (i, &b1) in bb.iter().enumerate() {
                for (j, &b2) in bb.iter().enumerate() {
                    if xi.lambda(b.mul(b1, b2)) != left[i].bracket(&left[j]) {
                        return violation(
                            "λ_[b,b'] = [λ_b, λ_b']",
                            vec![b1, b2],
                            format!(
                                "λ_[{},{}] is not the commutator of the actions",
                                bname(b1),
                                bname(b2)
                            ),
                        );
                    }
                }
            }
            None
        }
        Variety::Ring(_) => {
            for (i, (l, r)) in left.iter().zip(right).enumerate() {
                let z = bname(bb[i]);
                for &x in &gb {
                    for &y in &gb {
                        let xy = g.mul(x, y);
                        let (lhs, rhs) = (ap(l, xy), g.mul(ap(l, x), y));
                        if lhs != rhs {
                            return violation(
                                "b·(xy) = (b·x)y",
                                vec![bb[i], x, y],
                                format!(
                                    "{z}·({x}{y}) = {} but ({z}·{x}){y} = {}",
                                    name(lhs),
                                    name(rhs),
                                    x = name(x),
                                    y = name(y)
                                ),
                            );
                        }
                        let (lhs, rhs) = (ap(r, xy), g.mul(x, ap(r, y)));
                        if lhs != rhs {
                            return violation(
                                "(xy)·b = x(y·b)",
                                vec![bb[i], x, y],
                                format!(
                                    "({x}{y})·{z} = {} but {x}({y}·{z}) = {}",
                                    name(lhs),
                                    name(rhs),
                                    x = name(x),
                                    y = name(y)
                                ),
                            );
                        }
                        let (lhs, rhs) = (g.mul(x, ap(l, y)), g.mul(ap(r, x), y));
                        if lhs != rhs {
                            return violation(
                                "x(b·y) = (x·b)y",
                                vec![bb[i], x, y],
                                format!(
                                    "{x}({z}·{y}) = {} but ({x}·{z}){y} = {}",
                                    name(lhs),
                                    name(rhs),
                                    x = name(x),
                                    y = name(y)
                                ),
                            );
                        }
                    }
                }
            }
            for (i, &b1) in bb.iter().enumerate() {
                for (j, &b2) in bb.iter().enumerate() {
                    let p = b.mul(b1, b2);
                    let pair = vec![b1, b2];
                    let (n1, n2) = (bname(b1), bname(b2));
                    if xi.lambda(p) != left[i].mul(&left[j]) {
                        return violation(
                            "λ_{bb'} = λ_b λ_b'",
                            pair,
                            format!("({n1}{n2})·x ≠ {n1}·({n2}·x)"),
                        );
                    }
                    if xi.rho(p) != right[j].mul(&right[i]) {
                        return violation(
                            "ρ_{bb'} = ρ_b' ρ_b",
                            pair,
                            format!("x·({n1}{n2}) ≠ (x·{n1})·{n2}"),
                        );
                    }
                    if left[i].mul(&right[j]) != right[j].mul(&left[i]) {
                        return violation(
                            "λ_b ρ_b' = ρ_b' λ_b",
                            pair,
                            format!("{n1}·(x·{n2}) ≠ ({n1}·x)·{n2}"),
                        );
                    }
                }
            }
            None
        }
        Variety::Group => unreachable!("bilinear data on groups is rejected at construction"),
    }
}

/// A split extension `K —k→ A ⇄ B` with `p ∘ s = id` and `k` the kernel of `p`.
#[derive(Clone, Debug)]
pub struct SplitExtension {
    pub kernel: Arc<FiniteAlgebra>,
    pub total: Arc<FiniteAlgebra>,
    pub base: Arc<FiniteAlgebra>,
    pub p: Morphism,
    pub s: Morphism,
    pub k: Morphism,
}

impl SplitExtension {
    pub fn new(p: Morphism, s: Morphism, k: Morphism) -> Result<Self> {
        let e = SplitExtension {
            kernel: k.source().clone(),
            total: p.source().clone(),
            base: p.target().clone(),
            p,
            s,
            k,
        };
        e.validate()?;
        Ok(e)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidExtension(msg.to_string()));
        for (name, f) in [("p", &self.p), ("s", &self.s), ("k", &self.k)] {
            if let Some((x, y)) = f.is_morphism()? {
                return Err(Error::InvalidExtension(format!(
                    "{name} is not a morphism at ({x}, {y})"
                )));
            }
        }
        if self.s.source().order() != self.base.order()
            || self.s.target().order() != self.total.order()
        {
            return bad("s does not go from B to A");
        }
        if self.k.target().order() != self.total.order() {
            return bad("k does not land in A");
        }
        if self
            .base
            .elements()
            .any(|b| self.p.apply(self.s.apply(b)) != b)
        {
            return bad("p ∘ s is not the identity");
        }
        if !self.k.is_injective() {
            return bad("k is not injective");
        }
        let ker = self.p.kernel_elements();
        if ker.len() != self.kernel.order()
            || self
                .kernel
                .elements()
                .any(|x| self.p.apply(self.k.apply(x)) != 0)
        {
            return bad("k is not the kernel of p");
        }
        if self.total.order() != self.kernel.order() * self.base.order() {
            return bad("|A| ≠ |K|·|B|");
        }
        Ok(())
    }
}

/// `G ⋊_ξ B` with its projection, section and kernel inclusion.
///
/// Elements of the product are indexed `g + |G|·b`.
pub fn semidirect_product(xi: &Action) -> Result<SplitExtension> {
    if let Some(v) = validate_action(xi)? {
        return Err(Error::InvalidAction(format!("{}: {}", v.law, v.detail)));
    }
    let (b, g) = (&xi.actor, &xi.target);
    let (nb, ng) = (b.order(), g.order());
    let total = match &xi.data {
        ActionData::Group(alpha) => {
            let mut table = Vec::with_capacity(nb * ng * nb * ng);
            for b1 in 0..nb {
                for g1 in 0..ng {
                    for b2 in 0..nb {
                        for g2 in 0..ng {
                            let gg = g.add(g1 as Element, alpha[b1][g2]);
                            let bb = b.add(b1 as Element, b2 as Element);
                            table.push(gg + ng as Element * bb);
                        }
                    }
                }
            }
            FiniteAlgebra::group_from_flat_unchecked(nb * ng, table, Vec::new())
        }
        ActionData::Bilinear { left, right } => {
            let (rg, rb) = (g.rank().unwrap_or(0), b.rank().unwrap_or(0));
            let r = rg + rb;
            let mut c = vec![0u32; r * r * r];
            for i in 0..r {
                for j in 0..r {
                    let base = (i * r + j) * r;
                    match (i < rg, j < rg) {
                        (true, true) => c[base..base + rg].copy_from_slice(g.basis_product(i, j)),
                        (true, false) => {
                            c[base..base + rg].copy_from_slice(&right[j - rg].column(i))
                        }
                        (false, true) => {
                            c[base..base + rg].copy_from_slice(&left[i - rg].column(j))
                        }
                        (false, false) => {
                            c[base + rg..base + r].copy_from_slice(b.basis_product(i - rg, j - rg))
                        }
                    }
                }
            }
            let mut labels: Vec<String> = g.labels().to_vec();
            labels.extend(b.labels().iter().cloned());
            let mut uniq = std::collections::HashSet::new();
            if !labels.iter().all(|l| uniq.insert(l.clone())) {
                labels = FiniteAlgebra::default_labels(r);
            }
            FiniteAlgebra::ring_like_unchecked(g.variety(), labels, c)?
        }
    };
    total.validate()?;
    let total = Arc::new(total);
    let ngu = ng as Element;
    let p = Morphism::new(
        total.clone(),
        b.clone(),
        total.elements().map(|a| a / ngu).collect(),
    )?;
    let s = Morphism::new(
        b.clone(),
        total.clone(),
        b.elements().map(|x| x * ngu).collect(),
    )?;
    let k = Morphism::new(g.clone(), total.clone(), g.elements().collect())?;
    SplitExtension::new(p, s, k)
}

/// The action read off a split extension by conjugation (groups) or by
/// multiplication with the section (ring-like).
pub fn extract_action(e: &SplitExtension) -> Result<Action> {
    let a = &*e.total;
    let mut k_inv = vec![u32::MAX; a.order()];
    for x in e.kernel.elements() {
        k_inv[e.k.apply(x) as usize] = x;
    }
    let back = |y: Element| -> Result<Element> {
        let x = k_inv[y as usize];
        if x == u32::MAX {
            return Err(Error::InvalidExtension(
                "kernel is not invariant under the section".into(),
            ));
        }
        Ok(x)
    };
    let action = if a.is_group() {
        let mut data = Vec::with_capacity(e.base.order());
        for b in e.base.elements() {
            let sb = e.s.apply(b);
            let row: Result<Vec<Element>> = e
                .kernel
                .elements()
                .map(|x| back(a.conjugate(sb, e.k.apply(x))))
                .collect();
            data.push(row?);
        }
        Action::group(e.base.clone(), e.kernel.clone(), data)?
    } else {
        let r = e.kernel.rank().unwrap_or(0);
        let m = e.kernel.modulus().expect("ring-like");
        let mut left = Vec::new();
        let mut right = Vec::new();
        for b in e.base.basis() {
            let sb = e.s.apply(b);
            let mut lc = Vec::with_capacity(r);
            let mut rc = Vec::with_capacity(r);
            for x in e.kernel.basis() {
                let kx = e.k.apply(x);
                lc.push(e.kernel.coords(back(a.mul(sb, kx))?));
                rc.push(e.kernel.coords(back(a.mul(kx, sb))?));
            }
            left.push(Matrix::from_columns(&lc, r, m));
            right.push(Matrix::from_columns(&rc, r, m));
        }
        Action::bilinear(e.base.clone(), e.kernel.clone(), left, right)?
    };
    debug_assert_eq!(validate_action(&action).ok().flatten(), None);
    Ok(action)
}

/// The first `(b, h)` whose image leaves `H`, scanning `b` and `h` in ascending order.
pub fn invariance_witness(xi: &Action, h: &Subobject) -> Option<InvarianceWitness> {
    let hs = h.elements();
    for b in xi.acting_elements() {
        for &x in &hs {
            for (side, image) in xi.images(b, x) {
                if !h.contains(image) {
                    return Some(InvarianceWitness {
                        b,
                        h: x,
                        image,
                        side,
                    });
                }
            }
        }
    }
    None
}

/// Restricts `ξ` to `H` when every element of `B` maps `H` into itself.
pub fn restrict_action(xi: &Action, h: &Subobject) -> Result<Restriction> {
    if let Some(w) = invariance_witness(xi, h) {
        return Ok(Restriction::NotInvariant(w));
    }
    let (sub, embedding) = subalgebra(&xi.target, h)?;
    let sub = Arc::new(sub);
    let mut index = vec![u32::MAX; xi.target.order()];
    for (i, &e) in embedding.iter().enumerate() {
        index[e as usize] = i as Element;
    }
    let restricted = match &xi.data {
        ActionData::Group(alpha) => {
            let data = alpha
                .iter()
                .map(|a| {
                    embedding
                        .iter()
                        .map(|&e| index[a[e as usize] as usize])
                        .collect()
                })
                .collect();
            Action::group(xi.actor.clone(), sub.clone(), data)?
        }
        ActionData::Bilinear { left, right } => {
            let r = sub.rank().unwrap_or(0);
            let m = sub.modulus().expect("ring-like");
            let restrict = |mat: &Matrix| {
                let cols: Vec<Vec<u32>> = sub
                    .basis()
                    .iter()
                    .map(|&sb| sub.coords(index[xi.apply(mat, embedding[sb as usize]) as usize]))
                    .collect();
                Matrix::from_columns(&cols, r, m)
            };
            Action::bilinear(
                xi.actor.clone(),
                sub.clone(),
                left.iter().map(restrict).collect(),
                right.iter().map(restrict).collect(),
            )?
        }
    };
    Ok(Restriction::Restricted(restricted, embedding))
}

/// The action on `G/H` induced by an action leaving the normal subobject `H` invariant.
pub fn induce_quotient_action(xi: &Action, h: &Subobject) -> Result<(Action, Morphism)> {
    if let Some(w) = invariance_witness(xi, h) {
        return Err(Error::NotInvariant(format!(
            "b = {} moves {} to {}",
            w.b, w.h, w.image
        )));
    }
    let (q, proj) = quotient(&xi.target, h)?;
    induce_along(xi, &q, &proj).map(|a| (a, proj))
}

/// The action on `q`'s target induced along a quotient map that identifies
/// exactly the cosets of an invariant normal subobject.
pub fn induce_along(xi: &Action, q: &Arc<FiniteAlgebra>, proj: &Morphism) -> Result<Action> {
    let g = &*xi.target;
    // A representative of every coset.
    let mut section = vec![u32::MAX; q.order()];
    for x in g.elements() {
        let c = proj.apply(x) as usize;
        if section[c] == u32::MAX {
            section[c] = x;
        }
    }
    let induced = match &xi.data {
        ActionData::Group(alpha) => {
            let mut data = Vec::with_capacity(alpha.len());
            for (b, a) in alpha.iter().enumerate() {
                let row: Vec<Element> =
                    section.iter().map(|&x| proj.apply(a[x as usize])).collect();
                if let Some(x) = g
                    .elements()
                    .find(|&x| proj.apply(a[x as usize]) != row[proj.apply(x) as usize])
                {
                    return Err(Error::NotWellDefined(format!("α_{b} on the coset of {x}")));
                }
                data.push(row);
            }
            Action::group(xi.actor.clone(), q.clone(), data)?
        }
        ActionData::Bilinear { left, right } => {
            let r = q.rank().unwrap_or(0);
            let m = q.modulus().expect("ring-like");
            let induce = |mat: &Matrix| -> Result<Matrix> {
                let cols: Vec<Vec<u32>> = q
                    .basis()
                    .iter()
                    .map(|&e| q.coords(proj.apply(xi.apply(mat, section[e as usize]))))
                    .collect();
                let qm = Matrix::from_columns(&cols, r, m);
                for x in g.elements() {
                    let via_g = proj.apply(xi.apply(mat, x));
                    let via_q = q.from_coords(&qm.apply(&q.coords(proj.apply(x))));
                    if via_g != via_q {
                        return Err(Error::NotWellDefined(format!(
                            "bilinear table on the coset of {x}"
                        )));
                    }
                }
                Ok(qm)
            };
            let l: Result<Vec<Matrix>> = left.iter().map(induce).collect();
            let rr: Result<Vec<Matrix>> = right.iter().map(induce).collect();
            Action::bilinear(xi.actor.clone(), q.clone(), l?, rr?)?
        }
    };
    Ok(induced)
}

/// Size limits on acting algebras for exhaustive action enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionBounds {
    pub max_group_order: usize,
    pub max_rank: usize,
}

impl Default for ActionBounds {
    fn default() -> Self {
        ActionBounds {
            max_group_order: 8,
            max_rank: 2,
        }
    }
}

/// Per-target data reused across acting algebras: Aut(G) for groups, the
/// admissible per-basis-element data for ring-like targets.
pub struct ActionEnumerator {
    target: Arc<FiniteAlgebra>,
    bounds: ActionBounds,
    kind: Candidates,
}

enum Candidates {
    Group {
        auts: Vec<Vec<Element>>,
        aut_group: FiniteAlgebra,
    },
    Pairs(Vec<(Matrix, Matrix)>),
    /// Every pair of `r × r` matrices, decoded lazily from an index.
    AllPairs {
        rank: usize,
        modulus: u32,
        count: u64,
    },
}

impl ActionEnumerator {
    pub fn new(target: Arc<FiniteAlgebra>, bounds: ActionBounds) -> Result<Self> {
        let kind = match target.variety() {
            Variety::Group => {
                let auts = automorphisms(&target)?;
                let aut_group = FiniteAlgebra::from_sorted_permutations(auts.clone());
                Candidates::Group { auts, aut_group }
            }
            Variety::Ring(_) => Candidates::Pairs(all_bimultiplications(&target)?),
            Variety::Lie(_) => Candidates::Pairs(
                all_derivations(&target)?
                    .into_iter()
                    .map(|d| {
                        let n = d.neg();
                        (d, n)
                    })
                    .collect(),
            ),
            Variety::NaRing(m) => {
                let r = target.rank().unwrap_or(0);
                let count = (m as u64)
                    .checked_pow(2 * (r * r) as u32)
                    .ok_or(Error::TooLarge {
                        what: "endomorphism pairs",
                        size: usize::MAX,
                        bound: u32::MAX as usize,
                    })?;
                if count > u64::from(u32::MAX) {
                    return Err(Error::TooLarge {
                        what: "endomorphism pairs",
                        size: count as usize,
                        bound: u32::MAX as usize,
                    });
                }
                Candidates::AllPairs {
                    rank: r,
                    modulus: m,
                    count,
                }
            }
        };
        Ok(ActionEnumerator {
            target,
            bounds,
            kind,
        })
    }

    pub fn target(&self) -> &Arc<FiniteAlgebra> {
        &self.target
    }

    /// Number of admissible data per basis element (ring-like targets).
    pub fn candidates_per_basis_element(&self) -> u64 {
        match &self.kind {
            Candidates::Group { .. } => 0,
            Candidates::Pairs(p) => p.len() as u64,
            Candidates::AllPairs { count, .. } => *count,
        }
    }

    fn pair(&self, idx: u64) -> (Matrix, Matrix) {
        match &self.kind {
            Candidates::Pairs(p) => p[idx as usize].clone(),
            Candidates::AllPairs { rank, modulus, .. } => {
                let n = rank * rank;
                let v = decode(idx as u32, *modulus, 2 * n);
                // Most significant coordinates first so the order is lexicographic on tables.
                let v: Vec<u32> = v.into_iter().rev().collect();
                (
                    Matrix::from_flat(*rank, *rank, *modulus, &v[..n]),
                    Matrix::from_flat(*rank, *rank, *modulus, &v[n..]),
                )
            }
            Candidates::Group { .. } => unreachable!(),
        }
    }

    /// Visits every valid action of `b` on the target, in lexicographic order of the data.
    pub fn for_each(
        &self,
        b: &Arc<FiniteAlgebra>,
        mut visit: impl FnMut(&Action) -> ControlFlow<()>,
    ) -> Result<()> {
        let g = &self.target;
        if b.variety() != g.variety() {
            return Err(Error::VarietyMismatch(b.variety(), g.variety()));
        }
        if b.is_group() {
            if b.order() > self.bounds.max_group_order {
                return Err(Error::TooLarge {
                    what: "acting group",
                    size: b.order(),
                    bound: self.bounds.max_group_order,
                });
            }
            let Candidates::Group { auts, aut_group } = &self.kind else {
                unreachable!()
            };
            let mut result = Ok(());
            for_each_group_hom(b, aut_group, |phi| {
                let data = phi.iter().map(|&i| auts[i as usize].clone()).collect();
                match Action::group(b.clone(), g.clone(), data) {
                    Ok(xi) => visit(&xi),
                    Err(e) => {
                        result = Err(e);
                        ControlFlow::Break(())
                    }
                }
            })?;
            return result;
        }
        let k = b.rank().unwrap_or(0);
        if k > self.bounds.max_rank {
            return Err(Error::TooLarge {
                what: "acting algebra rank",
                size: k,
                bound: self.bounds.max_rank,
            });
        }
        let n = self.candidates_per_basis_element();
        let mut chosen: Vec<(Matrix, Matrix)> = Vec::with_capacity(k);
        let mut result = Ok(());
        let _ = self.descend(b, n, &mut chosen, &mut visit, &mut result);
        result
    }

    fn descend(
        &self,
        b: &Arc<FiniteAlgebra>,
        n: u64,
        chosen: &mut Vec<(Matrix, Matrix)>,
        visit: &mut impl FnMut(&Action) -> ControlFlow<()>,
        result: &mut Result<()>,
    ) -> ControlFlow<()> {
        let k = b.rank().unwrap_or(0);
        if chosen.len() == k {
            let (left, right) = chosen.iter().cloned().unzip();
            return match Action::bilinear(b.clone(), self.target.clone(), left, right) {
                Ok(xi) => visit(&xi),
                Err(e) => {
                    *result = Err(e);
                    ControlFlow::Break(())
                }
            };
        }
        for idx in 0..n {
            chosen.push(self.pair(idx));
            // Laws whose product involves later basis elements wait for the full choice.
            if self.cross_laws_hold(b, chosen, chosen.len() == k) {
                self.descend(b, n, chosen, visit, result)?;
            }
            chosen.pop();
        }
        ControlFlow::Continue(())
    }

    /// Checks the laws linking basis elements of `B` that only involve the
    /// already chosen prefix: those with the newest element, or all of them.
    fn cross_laws_hold(&self, b: &FiniteAlgebra, chosen: &[(Matrix, Matrix)], all: bool) -> bool {
        let variety = b.variety();
        if matches!(variety, Variety::NaRing(_)) {
            return true;
        }
        let j = chosen.len() - 1;
        let rg = self.target.rank().unwrap_or(0);
        let m = self.target.modulus().expect("ring-like");
        let combine = |coords: &[u32], side: usize| -> Option<Matrix> {
            let mut acc = Matrix::zero(rg, rg, m);
            for (i, &c) in coords.iter().enumerate() {
                if c != 0 {
                    let pair = chosen.get(i)?;
                    let mat = if side == 0 { &pair.0 } else { &pair.1 };
                    acc = acc.add(&mat.scale(c));
                }
            }
            Some(acc)
        };
        let pairs: Vec<(usize, usize)> = if all {
            (0..=j).flat_map(|x| (0..=j).map(move |y| (x, y))).collect()
        } else {
            (0..=j).flat_map(|s| [(s, j), (j, s)]).collect()
        };
        for (x, y) in pairs {
            let prod = b.basis_product(x, y);
            let (lx, rx) = &chosen[x];
            let (ly, ry) = &chosen[y];
            match variety {
                Variety::Ring(_) => {
                    if lx.mul(ry) != ry.mul(lx) {
                        return false;
                    }
                    if let Some(l) = combine(prod, 0) {
                        if l != lx.mul(ly) {
                            return false;
                        }
                    }
                    if let Some(r) = combine(prod, 1) {
                        if r != ry.mul(rx) {
                            return false;
                        }
                    }
                }
                Variety::Lie(_) => {
                    if let Some(l) = combine(prod, 0) {
                        if l != lx.bracket(ly) {
                            return false;
                        }
                    }
                }
                _ => {}
            }
        }
        true
    }
}

/// Every valid action of `b` on `g`.
pub fn enumerate_actions(
    b: &Arc<FiniteAlgebra>,
    g: &Arc<FiniteAlgebra>,
    bounds: ActionBounds,
) -> Result<Vec<Action>> {
    let en = ActionEnumerator::new(g.clone(), bounds)?;
    let mut out = Vec::new();
    en.for_each(b, |xi| {
        out.push(xi.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Number of valid actions of `b` on `g`, without storing them.
pub fn count_actions(
    b: &Arc<FiniteAlgebra>,
    g: &Arc<FiniteAlgebra>,
    bounds: ActionBounds,
) -> Result<u64> {
    let en = ActionEnumerator::new(g.clone(), bounds)?;
    let mut count = 0u64;
    en.for_each(b, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subobject::generate;

    fn example(variety: Variety) -> Arc<FiniteAlgebra> {
        let mut c = vec![0; 8];
        c[0] = 1;
        Arc::new(FiniteAlgebra::ring_like(variety, vec!["x".into(), "y".into()], c).unwrap())
    }

    fn zero_line(variety: Variety) -> Arc<FiniteAlgebra> {
        Arc::new(FiniteAlgebra::ring_like(variety, vec!["z".into()], vec![0]).unwrap())
    }

    fn swap_action(variety: Variety) -> Action {
        let m = variety.modulus().unwrap();
        let swap = Matrix::from_rows(&[vec![0, 1], vec![1, 0]], m);
        Action::bilinear(
            zero_line(variety),
            example(variety),
            vec![swap.clone()],
            vec![swap],
        )
        .unwrap()
    }

    fn inversion_on_z3() -> Action {
        let z2 = Arc::new(FiniteAlgebra::cyclic_group(2));
        let z3 = Arc::new(FiniteAlgebra::cyclic_group(3));
        Action::group(z2, z3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn the_swap_pair_is_a_naring_action_but_not_a_ring_action() {
        assert_eq!(
            validate_action(&swap_action(Variety::NaRing(5))).unwrap(),
            None
        );
        let v = validate_action(&swap_action(Variety::Ring(5)))
            .unwrap()
            .unwrap();
        assert_eq!(v.law, "b·(xy) = (b·x)y");
        assert_eq!(v.detail, "z·(xx) = y but (z·x)x = 0");
    }

    #[test]
    fn trivial_actions_are_valid() {
        for v in [Variety::NaRing(5), Variety::Ring(5), Variety::Lie(5)] {
            let g = if v == Variety::Lie(5) {
                Arc::new(
                    FiniteAlgebra::ring_like(v, FiniteAlgebra::default_labels(2), vec![0; 8])
                        .unwrap(),
                )
            } else {
                example(v)
            };
            let xi = Action::trivial(zero_line(v), g).unwrap();
            assert_eq!(validate_action(&xi).unwrap(), None);
        }
        let s3 = Arc::new(FiniteAlgebra::group_from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
        ));
        let xi = Action::trivial(s3.clone(), s3).unwrap();
        assert_eq!(validate_action(&xi).unwrap(), None);
    }

    #[test]
    fn mismatched_varieties_are_rejected() {
        let b = zero_line(Variety::Ring(5));
        let g = example(Variety::NaRing(5));
        assert!(matches!(
            Action::trivial(b, g),
            Err(Error::VarietyMismatch(..))
        ));
    }

    #[test]
    fn inversion_semidirect_product_is_s3_like() {
        let e = semidirect_product(&inversion_on_z3()).unwrap();
        let a = &e.total;
        assert_eq!(a.order(), 6);
        assert!(!a.is_abelian());
        let count = |k| a.elements().filter(|&x| a.element_order(x) == k).count();
        assert_eq!((count(2), count(3)), (3, 2));
    }

    #[test]
    fn trivial_action_gives_the_direct_product() {
        let z2 = Arc::new(FiniteAlgebra::cyclic_group(2));
        let z3 = Arc::new(FiniteAlgebra::cyclic_group(3));
        let e = semidirect_product(&Action::trivial(z2, z3).unwrap()).unwrap();
        assert!(e.total.is_abelian());
        assert_eq!(e.total.order(), 6);
    }

    #[test]
    fn naring_swap_semidirect_product_has_rank_three() {
        let xi = swap_action(Variety::NaRing(5));
        let e = semidirect_product(&xi).unwrap();
        assert_eq!(e.total.rank(), Some(3));
        e.total.validate().unwrap();
        assert_eq!(extract_action(&e).unwrap(), xi);
        assert!(matches!(
            semidirect_product(&swap_action(Variety::Ring(5))),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn round_trips() {
        let xi = inversion_on_z3();
        assert_eq!(
            extract_action(&semidirect_product(&xi).unwrap()).unwrap(),
            xi
        );
        let t = Action::trivial(xi.actor().clone(), xi.target().clone()).unwrap();
        assert_eq!(extract_action(&semidirect_product(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn restriction_examples() {
        let xi = swap_action(Variety::NaRing(5));
        let g = xi.target().clone();
        let sx = generate(&g, &[g.basis_element(0)]);
        let Restriction::NotInvariant(w) = restrict_action(&xi, &sx).unwrap() else {
            panic!("expected a witness")
        };
        assert_eq!(
            (w.b, w.h, w.image, w.side),
            (1, g.basis_element(0), g.basis_element(1), Side::Left)
        );
        let Restriction::Restricted(whole, _) =
            restrict_action(&xi, &Subobject::whole(&g)).unwrap()
        else {
            panic!()
        };
        assert_eq!(whole.data(), xi.data());
        let Restriction::Restricted(zero, _) = restrict_action(&xi, &Subobject::zero(&g)).unwrap()
        else {
            panic!()
        };
        assert_eq!(zero.target().order(), 1);
    }

    #[test]
    fn induced_quotient_actions() {
        let s3 = Arc::new(FiniteAlgebra::group_from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
        ));
        let conj = Action::conjugation(s3.clone());
        let a3 = generate(
            &s3,
            &[s3.elements().find(|&x| s3.element_order(x) == 3).unwrap()],
        );
        let (induced, _) = induce_quotient_action(&conj, &a3).unwrap();
        assert_eq!(induced.target().order(), 2);
        assert!(s3.elements().all(|b| induced.acts_trivially(b)));
        let (same, _) = induce_quotient_action(&conj, &Subobject::zero(&s3)).unwrap();
        assert_eq!(same.data(), conj.data());
        let (triv, _) = induce_quotient_action(&conj, &Subobject::whole(&s3)).unwrap();
        assert_eq!(triv.target().order(), 1);
    }

    #[test]
    fn action_counts() {
        let bounds = ActionBounds::default();
        let z2 = Arc::new(FiniteAlgebra::cyclic_group(2));
        let z3 = Arc::new(FiniteAlgebra::cyclic_group(3));
        let one = Arc::new(FiniteAlgebra::trivial(Variety::Group));
        assert_eq!(count_actions(&one, &z3, bounds).unwrap(), 1);
        assert_eq!(count_actions(&z2, &z3, bounds).unwrap(), 2);
        let g = example(Variety::NaRing(5));
        assert_eq!(
            count_actions(&zero_line(Variety::NaRing(5)), &g, bounds).unwrap(),
            5u64.pow(8)
        );
        let t = Arc::new(FiniteAlgebra::trivial(Variety::NaRing(5)));
        assert_eq!(count_actions(&t, &g, bounds).unwrap(), 1);
    }

    #[test]
    fn group_action_count_matches_brute_force_hom_count() {
        // Homs Z_4 -> Aut(Z_5) ≅ Z_4 counted by testing all 4^4 maps on the automorphism list.
        let z4 = Arc::new(FiniteAlgebra::cyclic_group(4));
        let z5 = Arc::new(FiniteAlgebra::cyclic_group(5));
        let auts = automorphisms(&z5).unwrap();
        let compose = |a: &[u32], b: &[u32]| b.iter().map(|&x| a[x as usize]).collect::<Vec<_>>();
        let mut brute = 0;
        for idx in 0..256u32 {
            let f = decode(idx, 4, 4);
            let ok = (0..4).all(|x| {
                (0..4).all(|y| {
                    auts[f[(x + y) % 4] as usize]
                        == compose(&auts[f[x] as usize], &auts[f[y] as usize])
                })
            });
            brute += usize::from(ok);
        }
        assert_eq!(
            count_actions(&z4, &z5, ActionBounds::default()).unwrap(),
            brute as u64
        );
    }

    #[test]
    fn ring_actions_agree_with_associativity_of_the_semidirect_product() {
        // Independent oracle: a bilinear pair is a ring action iff the semidirect product is associative.
        let m = 2;
        let g = example(Variety::Ring(m));
        let b = Arc::new(
            FiniteAlgebra::ring_like(Variety::Ring(m), vec!["z".into()], vec![1]).unwrap(),
        );
        let enumerated = count_actions(&b, &g, ActionBounds::default()).unwrap();
        let mut brute = 0;
        for idx in 0..(m as u32).pow(8) {
            let v = decode(idx, m, 8);
            let l = Matrix::from_flat(2, 2, m, &v[..4]);
            let r = Matrix::from_flat(2, 2, m, &v[4..]);
            let mut c = vec![0u32; 27];
            for i in 0..3 {
                for j in 0..3 {
                    let base = (i * 3 + j) * 3;
                    match (i < 2, j < 2) {
                        (true, true) => c[base..base + 2].copy_from_slice(g.basis_product(i, j)),
                        (true, false) => c[base..base + 2].copy_from_slice(&r.column(i)),
                        (false, true) => c[base..base + 2].copy_from_slice(&l.column(j)),
                        (false, false) => c[base + 2] = 1,
                    }
                }
            }
            brute += usize::from(
                FiniteAlgebra::ring_like(Variety::Ring(m), FiniteAlgebra::default_labels(3), c)
                    .is_ok(),
            );
        }
        assert_eq!(enumerated, brute as u64);
    }

    /// Structure constants of `G ⋊ B` written out directly from the action tables.
    fn product_constants(
        g: &FiniteAlgebra,
        b: &FiniteAlgebra,
        l: &[Matrix],
        r: &[Matrix],
    ) -> Vec<u32> {
        let (rg, rb) = (g.rank().unwrap(), b.rank().unwrap());
        let n = rg + rb;
        let mut c = vec![0u32; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let base = (i * n + j) * n;
                match (i < rg, j < rg) {
                    (true, true) => c[base..base + rg].copy_from_slice(g.basis_product(i, j)),
                    (true, false) => c[base..base + rg].copy_from_slice(&r[j - rg].column(i)),
                    (false, true) => c[base..base + rg].copy_from_slice(&l[i - rg].column(j)),
                    (false, false) => {
                        c[base + rg..base + n].copy_from_slice(b.basis_product(i - rg, j - rg))
                    }
                }
            }
        }
        c
    }

    #[test]
    fn rank_two_actors_agree_with_the_laws_of_the_semidirect_product() {
        // Independent oracle: a choice of tables is an action iff G ⋊ B satisfies the variety laws.
        for v in [Variety::Ring(2), Variety::Lie(2), Variety::Lie(3)] {
            let m = v.modulus().unwrap();
            let targets = crate::corpus::ring_like_of_rank(v, 1).unwrap();
            for g in targets {
                let g = Arc::new(g);
                for b in crate::corpus::ring_like_of_rank(v, 2).unwrap() {
                    let b = Arc::new(b);
                    let lie = matches!(v, Variety::Lie(_));
                    let per = if lie { 1 } else { 2 };
                    let mut brute = 0u64;
                    for idx in 0..m.pow(2 * per) {
                        let t = decode(idx, m, 2 * per as usize);
                        let mat = |x: u32| Matrix::from_flat(1, 1, m, &[x]);
                        let l = vec![mat(t[0]), mat(t[1])];
                        let r = if lie {
                            l.iter().map(Matrix::neg).collect()
                        } else {
                            vec![mat(t[2]), mat(t[3])]
                        };
                        let c = product_constants(&g, &b, &l, &r);
                        brute += u64::from(
                            FiniteAlgebra::ring_like(v, FiniteAlgebra::default_labels(3), c)
                                .is_ok(),
                        );
                    }
                    let mut seen = 0u64;
                    ActionEnumerator::new(g.clone(), ActionBounds::default())
                        .unwrap()
                        .for_each(&b, |xi| {
                            assert_eq!(validate_action(xi).unwrap(), None);
                            seen += 1;
                            ControlFlow::Continue(())
                        })
                        .unwrap();
                    assert_eq!(seen, brute, "{v} acting constants {:?}", b.constants());
                }
            }
        }
    }

    #[test]
    fn conjugation_actions() {
        let z4 = Arc::new(FiniteAlgebra::cyclic_group(4));
        let c = Action::conjugation(z4.clone());
        assert!(z4.elements().all(|b| c.acts_trivially(b)));
        let g = example(Variety::NaRing(5));
        let c = Action::conjugation(g.clone());
        let (x, y) = (g.basis_element(0), g.basis_element(1));
        let lx = c.lambda(x);
        assert_eq!(lx, Matrix::from_rows(&[vec![1, 0], vec![0, 0]], 5));
        assert!(c.lambda(y).is_zero() && c.rho(y).is_zero());
        assert_eq!(validate_action(&c).unwrap(), None);
    }
}
