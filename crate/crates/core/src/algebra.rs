//! Finite Ω-groups in the four shipped varieties.
//!
//! Every algebra has a finite carrier indexed `0..order` with `0` the neutral
//! element. Groups are stored as Cayley tables (or, above the table bound, as
//! permutation groups); ring-like algebras are free `Z_m`-modules of rank `r`
//! whose elements are indexed by their base-`m` coordinates.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{decode, encode, Matrix};
use crate::variety::Variety;

/// Index of an element in its algebra's carrier.
pub type Element = u32;

/// Largest group stored as a full Cayley table.
pub const MAX_TABLE_ORDER: usize = 512;

/// Largest ring-like carrier for which operation tables are cached.
const MODULE_TABLE_ORDER: usize = 256;

/// Largest ring-like carrier accepted at all.
pub const MAX_MODULE_ORDER: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Mul,
}

#[derive(Clone)]
pub struct FiniteAlgebra {
    variety: Variety,
    labels: Vec<String>,
    carrier: Carrier,
}

#[derive(Clone)]
enum Carrier {
    Table(GroupTable),
    Perm(PermGroup),
    Module(Module),
}

#[derive(Clone, PartialEq, Eq)]
struct GroupTable {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

#[derive(Clone)]
struct PermGroup {
    perms: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
    inverse: Vec<u32>,
}

#[derive(Clone)]
struct Module {
    rank: usize,
    modulus: u32,
    order: usize,
    /// `c[i][j][k]` at `(i * rank + j) * rank + k`.
    constants: Vec<u32>,
    tables: Option<ModuleTables>,
}

#[derive(Clone)]
struct ModuleTables {
    add: Vec<u32>,
    neg: Vec<u32>,
    mul: Vec<u32>,
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        if self.variety != other.variety || self.labels != other.labels {
            return false;
        }
        match (&self.carrier, &other.carrier) {
            (Carrier::Table(a), Carrier::Table(b)) => a == b,
            (Carrier::Perm(a), Carrier::Perm(b)) => a.perms == b.perms,
            (Carrier::Module(a), Carrier::Module(b)) => {
                a.rank == b.rank && a.constants == b.constants
            }
            _ => false,
        }
    }
}

impl Eq for FiniteAlgebra {}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.carrier {
            Carrier::Table(t) => write!(f, "FiniteAlgebra(group, order {})", t.order),
            Carrier::Perm(p) => write!(
                f,
                "FiniteAlgebra(permutation group, order {})",
                p.perms.len()
            ),
            Carrier::Module(m) => write!(
                f,
                "FiniteAlgebra({}, rank {}, constants {:?})",
                self.variety, m.rank, m.constants
            ),
        }
    }
}

impl FiniteAlgebra {
    /// Validates a group given by its Cayley table; element `0` must be the identity.
    pub fn group_from_table(rows: Vec<Vec<u32>>, labels: Vec<String>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed(
                "a group needs at least one element".into(),
            ));
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::TooLarge {
                what: "group table",
                size: n,
                bound: MAX_TABLE_ORDER,
            });
        }
        if !labels.is_empty() && labels.len() != n {
            return Err(Error::Malformed(format!(
                "{} labels for {} elements",
                labels.len(),
                n
            )));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "table row of length {} in a group of order {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v as usize >= n) {
                return Err(Error::Malformed(format!("table entry {bad} out of range")));
            }
            table.extend_from_slice(row);
        }
        let alg = Self::group_from_flat_unchecked(n, table, labels);
        alg.validate()?;
        Ok(alg)
    }

    /// Builds a Cayley-table group without checking the group laws.
    ///
    /// Inverses are read off the table; callers are expected to validate.
    pub(crate) fn group_from_flat_unchecked(
        n: usize,
        table: Vec<u32>,
        labels: Vec<String>,
    ) -> Self {
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| table[a * n + b] == 0) {
                inverse[a] = b as u32;
            }
        }
        FiniteAlgebra {
            variety: Variety::Group,
            labels,
            carrier: Carrier::Table(GroupTable {
                order: n,
                table,
                inverse,
            }),
        }
    }

    /// The group generated by a set of permutations of `0..degree`.
    ///
    /// Elements are sorted lexicographically, so the identity is element `0`.
    /// Groups up to [`MAX_TABLE_ORDER`] are converted to Cayley tables.
    pub fn group_from_permutations(degree: usize, generators: &[Vec<u32>]) -> Self {
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut queue = vec![identity];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head].clone();
            head += 1;
            for g in generators {
                let q = compose(&p, g);
                if seen.insert(q.clone(), ()).is_none() {
                    queue.push(q);
                }
            }
        }
        let mut perms = queue;
        perms.sort();
        Self::from_sorted_permutations(perms)
    }

    /// Builds the group on an explicit list of permutations that is closed
    /// under composition and sorted with the identity first.
    pub(crate) fn from_sorted_permutations(perms: Vec<Vec<u32>>) -> Self {
        let index: HashMap<Vec<u32>, u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inverse: Vec<u32> = perms.iter().map(|p| index[&invert(p)]).collect();
        let n = perms.len();
        if n <= MAX_TABLE_ORDER {
            let mut table = Vec::with_capacity(n * n);
            for a in &perms {
                for b in &perms {
                    table.push(index[&compose(a, b)]);
                }
            }
            return FiniteAlgebra {
                variety: Variety::Group,
                labels: Vec::new(),
                carrier: Carrier::Table(GroupTable {
                    order: n,
                    table,
                    inverse,
                }),
            };
        }
        FiniteAlgebra {
            variety: Variety::Group,
            labels: Vec::new(),
            carrier: Carrier::Perm(PermGroup {
                perms,
                index,
                inverse,
            }),
        }
    }

    /// Validates a ring-like algebra given by structure constants
    /// `constants[(i * r + j) * r + k]`, the `e_k`-coordinate of `e_i * e_j`.
    pub fn ring_like(variety: Variety, labels: Vec<String>, constants: Vec<u32>) -> Result<Self> {
        let mut alg = Self::module_without_tables(variety, labels, constants)?;
        alg.validate()?;
        if let Carrier::Module(m) = &mut alg.carrier {
            if m.order <= MODULE_TABLE_ORDER {
                m.tables = Some(m.build_tables());
            }
        }
        Ok(alg)
    }

    /// Shape-checks structure constants without checking the variety laws.
    pub fn ring_like_unchecked(
        variety: Variety,
        labels: Vec<String>,
        constants: Vec<u32>,
    ) -> Result<Self> {
        let mut alg = Self::module_without_tables(variety, labels, constants)?;
        if let Carrier::Module(m) = &mut alg.carrier {
            if m.order <= MODULE_TABLE_ORDER {
                m.tables = Some(m.build_tables());
            }
        }
        Ok(alg)
    }

    fn module_without_tables(
        variety: Variety,
        labels: Vec<String>,
        constants: Vec<u32>,
    ) -> Result<Self> {
        let Some(m) = variety.modulus() else {
            return Err(Error::Malformed(
                "groups are not given by structure constants".into(),
            ));
        };
        let r = labels.len();
        if constants.len() != r * r * r {
            return Err(Error::Malformed(format!(
                "{} structure constants for rank {r} (expected {})",
                constants.len(),
                r * r * r
            )));
        }
        if let Some(&bad) = constants.iter().find(|&&c| c >= m) {
            return Err(Error::Malformed(format!(
                "structure constant {bad} not reduced mod {m}"
            )));
        }
        let order = (m as usize)
            .checked_pow(r as u32)
            .filter(|&o| o <= MAX_MODULE_ORDER)
            .ok_or(Error::TooLarge {
                what: "module carrier",
                size: usize::MAX,
                bound: MAX_MODULE_ORDER,
            })?;
        let module = Module {
            rank: r,
            modulus: m,
            order,
            constants,
            tables: None,
        };
        Ok(FiniteAlgebra {
            variety,
            labels,
            carrier: Carrier::Module(module),
        })
    }

    /// The one-element algebra of a variety.
    pub fn trivial(variety: Variety) -> Self {
        match variety {
            Variety::Group => Self::group_from_flat_unchecked(1, vec![0], Vec::new()),
            _ => Self::ring_like_unchecked(variety, Vec::new(), Vec::new()).expect("rank 0"),
        }
    }

    /// Cyclic group `Z_n` with `k ↦ k` indexing.
    pub fn cyclic_group(n: usize) -> Self {
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        Self::group_from_flat_unchecked(n, table, Vec::new())
    }

    /// Default labels `e1 .. er`.
    pub fn default_labels(rank: usize) -> Vec<String> {
        (1..=rank).map(|i| format!("e{i}")).collect()
    }

    /// Re-runs the variety laws; succeeds on every algebra built by a checked constructor.
    pub fn validate(&self) -> Result<()> {
        match &self.carrier {
            Carrier::Table(t) => validate_group_table(t),
            // Permutation composition is associative and the carrier is closed by construction.
            Carrier::Perm(_) => Ok(()),
            Carrier::Module(m) => match self.variety {
                Variety::Ring(_) => m.check_associative(),
                Variety::Lie(_) => m.check_lie(),
                _ => Ok(()),
            },
        }
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    pub fn is_group(&self) -> bool {
        self.variety == Variety::Group
    }

    pub fn is_ring_like(&self) -> bool {
        self.variety.is_ring_like()
    }

    pub fn order(&self) -> usize {
        match &self.carrier {
            Carrier::Table(t) => t.order,
            Carrier::Perm(p) => p.perms.len(),
            Carrier::Module(m) => m.order,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        0..self.order() as u32
    }

    /// Rank of a ring-like carrier; `None` for groups.
    pub fn rank(&self) -> Option<usize> {
        match &self.carrier {
            Carrier::Module(m) => Some(m.rank),
            _ => None,
        }
    }

    pub fn modulus(&self) -> Option<u32> {
        self.variety.modulus()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        let expected = match &self.carrier {
            Carrier::Module(m) => m.rank,
            _ => self.order(),
        };
        assert!(
            labels.is_empty() || labels.len() == expected,
            "label count mismatch"
        );
        self.labels = labels;
        self
    }

    /// Structure constants of a ring-like algebra.
    pub fn constants(&self) -> Option<&[u32]> {
        match &self.carrier {
            Carrier::Module(m) => Some(&m.constants),
            _ => None,
        }
    }

    /// Same structure constants viewed in another ring-like variety with the same modulus.
    pub fn reinterpret(&self, variety: Variety) -> Result<Self> {
        if variety.modulus() != self.modulus() || !self.variety.is_ring_like() {
            return Err(Error::VarietyMismatch(self.variety, variety));
        }
        Self::ring_like(
            variety,
            self.labels.clone(),
            self.constants().unwrap_or(&[]).to_vec(),
        )
    }

    #[inline]
    pub fn zero(&self) -> Element {
        0
    }

    /// The group operation (written additively for every variety).
    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        match &self.carrier {
            Carrier::Table(t) => t.table[a as usize * t.order + b as usize],
            Carrier::Perm(p) => p.index[&compose(&p.perms[a as usize], &p.perms[b as usize])],
            Carrier::Module(m) => match &m.tables {
                Some(tb) => tb.add[a as usize * m.order + b as usize],
                None => m.add_coords(a, b),
            },
        }
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        match &self.carrier {
            Carrier::Table(t) => t.inverse[a as usize],
            Carrier::Perm(p) => p.inverse[a as usize],
            Carrier::Module(m) => match &m.tables {
                Some(tb) => tb.neg[a as usize],
                None => m.neg_coords(a),
            },
        }
    }

    /// `a - b`, i.e. `a + (-b)`.
    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// The second binary operation of a ring-like algebra.
    ///
    /// # Panics
    /// On groups, which carry no multiplication besides the group law.
    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        match &self.carrier {
            Carrier::Module(m) => match &m.tables {
                Some(tb) => tb.mul[a as usize * m.order + b as usize],
                None => m.mul_coords(a, b),
            },
            _ => panic!("groups carry no second binary operation"),
        }
    }

    /// Evaluates one of the variety's binary operations; `None` for `Mul` on a group.
    pub fn op_apply(&self, a: Element, b: Element, op: Op) -> Option<Element> {
        match op {
            Op::Add => Some(self.add(a, b)),
            Op::Mul if self.is_group() => None,
            Op::Mul => Some(self.mul(a, b)),
        }
    }

    /// Group conjugate `g a g⁻¹`.
    pub fn conjugate(&self, g: Element, a: Element) -> Element {
        self.add(self.add(g, a), self.neg(g))
    }

    /// `g⁻¹ h⁻¹ g h` in multiplicative notation.
    pub fn commutator(&self, g: Element, h: Element) -> Element {
        let lhs = self.add(self.neg(g), self.neg(h));
        self.add(self.add(lhs, g), h)
    }

    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.add(a, b) == self.add(b, a)))
    }

    pub fn coords(&self, a: Element) -> Vec<u32> {
        match &self.carrier {
            Carrier::Module(m) => decode(a, m.modulus, m.rank),
            _ => panic!("group elements have no coordinates"),
        }
    }

    pub fn from_coords(&self, coords: &[u32]) -> Element {
        match &self.carrier {
            Carrier::Module(m) => {
                debug_assert_eq!(coords.len(), m.rank);
                encode(coords, m.modulus)
            }
            _ => panic!("group elements have no coordinates"),
        }
    }

    /// The `i`-th basis vector of a ring-like algebra.
    pub fn basis_element(&self, i: usize) -> Element {
        match &self.carrier {
            Carrier::Module(m) => m.modulus.pow(i as u32),
            _ => panic!("groups have no basis"),
        }
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.rank().unwrap_or(0))
            .map(|i| self.basis_element(i))
            .collect()
    }

    /// `c · a` in a ring-like algebra.
    pub fn scalar_mul(&self, c: u32, a: Element) -> Element {
        let m = self.modulus().expect("ring-like");
        let v: Vec<u32> = self
            .coords(a)
            .iter()
            .map(|&x| ((u64::from(x) * u64::from(c)) % u64::from(m)) as u32)
            .collect();
        self.from_coords(&v)
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        match &self.carrier {
            Carrier::Module(m) => {
                let r = m.rank;
                &m.constants[(i * r + j) * r..(i * r + j + 1) * r]
            }
            _ => panic!("groups have no structure constants"),
        }
    }

    /// The permutation backing element `a` of a permutation group.
    pub fn permutation(&self, a: Element) -> Option<&[u32]> {
        match &self.carrier {
            Carrier::Perm(p) => Some(&p.perms[a as usize]),
            _ => None,
        }
    }

    /// A generating set: basis vectors for ring-like algebras (as modules),
    /// a greedily chosen irredundant generating set for groups.
    pub fn generators(&self) -> Vec<Element> {
        if self.variety.is_ring_like() {
            return self.basis();
        }
        let n = self.order();
        let mut gens = Vec::new();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0u32];
        // Prefer elements of large order, ties broken by index.
        let mut candidates: Vec<Element> = (1..n as u32).collect();
        let orders: Vec<usize> = (0..n as u32).map(|a| self.element_order(a)).collect();
        candidates.sort_by_key(|&a| (std::cmp::Reverse(orders[a as usize]), a));
        for g in candidates {
            if members.len() == n {
                break;
            }
            if inside[g as usize] {
                continue;
            }
            gens.push(g);
            let mut head = 0;
            // Re-close the subgroup under multiplication by all generators.
            let mut queue = members.clone();
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for &s in &gens {
                    let y = self.add(x, s);
                    if !inside[y as usize] {
                        inside[y as usize] = true;
                        queue.push(y);
                    }
                }
            }
            members = queue;
        }
        gens
    }

    /// Human-readable name of an element.
    pub fn format_element(&self, a: Element) -> String {
        match &self.carrier {
            Carrier::Module(m) => {
                let coords = decode(a, m.modulus, m.rank);
                let terms: Vec<String> = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| {
                        let label = self
                            .labels
                            .get(i)
                            .cloned()
                            .unwrap_or_else(|| format!("e{}", i + 1));
                        if c == 1 {
                            label
                        } else {
                            format!("{c}{label}")
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join(" + ")
                }
            }
            _ => self
                .labels
                .get(a as usize)
                .cloned()
                .unwrap_or_else(|| format!("g{a}")),
        }
    }

    /// Cayley table rows of a group.
    pub fn table_rows(&self) -> Vec<Vec<u32>> {
        let n = self.order();
        (0..n as u32)
            .map(|a| (0..n as u32).map(|b| self.add(a, b)).collect())
            .collect()
    }
}

fn validate_group_table(t: &GroupTable) -> Result<()> {
    let n = t.order;
    let at = |a: usize, b: usize| t.table[a * n + b] as usize;
    for a in 0..n {
        if at(0, a) != a || at(a, 0) != a {
            return Err(Error::NotAGroup {
                law: "identity",
                witness: vec![a as u32],
            });
        }
    }
    for a in 0..n {
        let inv = t.inverse[a];
        if inv == u32::MAX || at(inv as usize, a) != 0 {
            return Err(Error::NotAGroup {
                law: "inverse",
                witness: vec![a as u32],
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(Error::NotAGroup {
                        law: "associativity",
                        witness: vec![a as u32, b as u32, c as u32],
                    });
                }
            }
        }
    }
    Ok(())
}

impl Module {
    fn add_coords(&self, a: Element, b: Element) -> Element {
        let m = self.modulus;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.rank {
            out += ((a % m + b % m) % m) * place;
            a /= m;
            b /= m;
            place = place.wrapping_mul(m);
        }
        out
    }

    fn neg_coords(&self, a: Element) -> Element {
        let m = self.modulus;
        let v: Vec<u32> = decode(a, m, self.rank)
            .iter()
            .map(|&x| (m - x) % m)
            .collect();
        encode(&v, m)
    }

    fn mul_vectors(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let r = self.rank;
        let m = u64::from(self.modulus);
        let mut acc = vec![0u64; r];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let w = u64::from(ai) * u64::from(bj) % m;
                let base = (i * r + j) * r;
                for (k, slot) in acc.iter_mut().enumerate() {
                    *slot += w * u64::from(self.constants[base + k]);
                }
            }
        }
        acc.into_iter().map(|x| (x % m) as u32).collect()
    }

    fn mul_coords(&self, a: Element, b: Element) -> Element {
        let va = decode(a, self.modulus, self.rank);
        let vb = decode(b, self.modulus, self.rank);
        encode(&self.mul_vectors(&va, &vb), self.modulus)
    }

    fn build_tables(&self) -> ModuleTables {
        let n = self.order;
        let (r, m) = (self.rank, self.modulus as usize);
        let pow: Vec<usize> = (0..r).map(|k| m.pow(k as u32)).collect();
        // Each nonzero a is a' + e_k with k its lowest nonzero digit and a' < a.
        let mut step = vec![(0usize, 0usize); n];
        for (a, st) in step.iter_mut().enumerate().skip(1) {
            let k = (0..r).find(|&k| (a / pow[k]) % m != 0).expect("nonzero");
            *st = (k, a - pow[k]);
        }
        // a + e_k.
        let succ: Vec<u32> = (0..n)
            .flat_map(|a| {
                pow.iter().map(move |&p| {
                    if (a / p) % m == m - 1 {
                        (a - (m - 1) * p) as u32
                    } else {
                        (a + p) as u32
                    }
                })
            })
            .collect();
        let mut add = vec![0u32; n * n];
        for a in 0..n {
            add[a * n] = a as u32;
            for b in 1..n {
                let (k, prev) = step[b];
                add[a * n + b] = succ[add[a * n + prev] as usize * r + k];
            }
        }
        let mut neg = vec![0u32; n];
        for a in 1..n {
            let (k, prev) = step[a];
            neg[a] = add[neg[prev] as usize * n + (m - 1) * pow[k]];
        }
        // a·e_k, linear in a.
        let mut by_unit = vec![0u32; n * r];
        for a in 1..n {
            let (j, prev) = step[a];
            for k in 0..r {
                let ejk = encode(
                    &self.constants[(j * r + k) * r..(j * r + k + 1) * r],
                    self.modulus,
                );
                by_unit[a * r + k] = add[by_unit[prev * r + k] as usize * n + ejk as usize];
            }
        }
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 1..n {
                let (k, prev) = step[b];
                mul[a * n + b] = add[mul[a * n + prev] as usize * n + by_unit[a * r + k] as usize];
            }
        }
        ModuleTables { add, neg, mul }
    }

    fn unit(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    fn check_associative(&self) -> Result<()> {
        let r = self.rank;
        for i in 0..r {
            for j in 0..r {
                let ij = self.mul_vectors(&self.unit(i), &self.unit(j));
                for k in 0..r {
                    let jk = self.mul_vectors(&self.unit(j), &self.unit(k));
                    if self.mul_vectors(&ij, &self.unit(k)) != self.mul_vectors(&self.unit(i), &jk)
                    {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_lie(&self) -> Result<()> {
        let r = self.rank;
        let m = self.modulus;
        for i in 0..r {
            if self
                .mul_vectors(&self.unit(i), &self.unit(i))
                .iter()
                .any(|&c| c != 0)
            {
                return Err(Error::AntisymmetryFails(i));
            }
            for j in i + 1..r {
                let a = self.mul_vectors(&self.unit(i), &self.unit(j));
                let b = self.mul_vectors(&self.unit(j), &self.unit(i));
                if a.iter().zip(&b).any(|(x, y)| (x + y) % m != 0) {
                    return Err(Error::AntisymmetryFails(i));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let t1 = self.mul_vectors(
                        &self.unit(i),
                        &self.mul_vectors(&self.unit(j), &self.unit(k)),
                    );
                    let t2 = self.mul_vectors(
                        &self.unit(j),
                        &self.mul_vectors(&self.unit(k), &self.unit(i)),
                    );
                    let t3 = self.mul_vectors(
                        &self.unit(k),
                        &self.mul_vectors(&self.unit(i), &self.unit(j)),
                    );
                    if (0..r).any(|c| (t1[c] + t2[c] + t3[c]) % m != 0) {
                        return Err(Error::JacobiFails(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `(a ∘ b)(x) = a(b(x))`.
pub fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn invert(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// Matrix of a linear map between ring-like algebras from the images of the source basis.
pub fn matrix_from_basis_images(target: &FiniteAlgebra, images: &[Element]) -> Matrix {
    let r = target.rank().expect("ring-like target");
    let m = target.modulus().expect("ring-like target");
    let cols: Vec<Vec<u32>> = images.iter().map(|&e| target.coords(e)).collect();
    Matrix::from_columns(&cols, r, m)
}
