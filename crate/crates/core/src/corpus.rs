//! Built-in instance families: small groups up to isomorphism and ring-like
//! algebras of small rank up to change of basis.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::algebra::FiniteAlgebra;
use crate::automorphism::{automorphisms, element_invariants, group_isomorphism};
use crate::error::{Error, Result};
use crate::linalg::{decode, encode, Matrix};
use crate::variety::{is_prime, Variety, VarietyTag};

/// A named corpus instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub algebra: Arc<FiniteAlgebra>,
}

/// Largest group order the extension search is tuned for.
pub const MAX_CORPUS_GROUP_ORDER: usize = 32;

/// The rank-2 algebra `x*x = x` (all other basis products zero).
pub fn idempotent_line_algebra(variety: Variety) -> FiniteAlgebra {
    let mut c = vec![0; 8];
    c[0] = 1;
    FiniteAlgebra::ring_like(variety, vec!["x".into(), "y".into()], c)
        .expect("x*x = x is associative")
}

fn primes_dividing(n: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&p| n % p == 0 && is_prime(p as u32))
        .collect()
}

/// The extension `N · ⟨g⟩` with `g x g⁻¹ = φ(x)` and `g^p = t`, elements indexed `x + |N|·i`.
fn cyclic_extension(n: &FiniteAlgebra, phi: &[u32], t: u32, p: usize) -> FiniteAlgebra {
    let k = n.order();
    let mut powers: Vec<Vec<u32>> = vec![n.elements().collect()];
    for i in 1..p {
        let prev = &powers[i - 1];
        powers.push(prev.iter().map(|&x| phi[x as usize]).collect());
    }
    let size = k * p;
    let mut table = Vec::with_capacity(size * size);
    for i in 0..p {
        for x in 0..k as u32 {
            for j in 0..p {
                for y in 0..k as u32 {
                    let mut z = n.add(x, powers[i][y as usize]);
                    if i + j >= p {
                        z = n.add(z, t);
                    }
                    table.push(z + (k * ((i + j) % p)) as u32);
                }
            }
        }
    }
    FiniteAlgebra::group_from_flat_unchecked(size, table, Vec::new())
}

fn conjugacy_class_representatives(auts: &[Vec<u32>]) -> Vec<usize> {
    let compose = |a: &[u32], b: &[u32]| b.iter().map(|&x| a[x as usize]).collect::<Vec<u32>>();
    let index: BTreeMap<&Vec<u32>, usize> = auts.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let inverses: Vec<Vec<u32>> = auts.iter().map(|a| crate::algebra::invert(a)).collect();
    let mut seen = vec![false; auts.len()];
    let mut reps = Vec::new();
    for i in 0..auts.len() {
        if seen[i] {
            continue;
        }
        reps.push(i);
        for (psi, psi_inv) in auts.iter().zip(&inverses) {
            let c = compose(&compose(psi, &auts[i]), psi_inv);
            seen[index[&c]] = true;
        }
    }
    reps
}

/// Coarse isomorphism invariant used to bucket candidates before an isomorphism search.
fn signature(g: &FiniteAlgebra) -> Vec<(usize, usize)> {
    let mut inv = element_invariants(g);
    inv.sort();
    inv
}

/// All groups of order `1..=max_order` up to isomorphism, each built as a
/// cyclic extension of a smaller group by a normal subgroup of prime index.
///
/// This reaches every solvable group, hence every group of order below 60.
pub fn small_groups(max_order: usize) -> Result<Vec<Vec<FiniteAlgebra>>> {
    if max_order > MAX_CORPUS_GROUP_ORDER {
        return Err(Error::TooLarge {
            what: "group corpus order",
            size: max_order,
            bound: MAX_CORPUS_GROUP_ORDER,
        });
    }
    if max_order >= 60 {
        return Err(Error::Unsupported(
            "non-solvable groups are not generated".into(),
        ));
    }
    let mut by_order: Vec<Vec<FiniteAlgebra>> = vec![Vec::new(); max_order + 1];
    if max_order >= 1 {
        by_order[1].push(FiniteAlgebra::trivial(Variety::Group));
    }
    for n in 2..=max_order {
        let mut found: Vec<(Vec<(usize, usize)>, FiniteAlgebra)> = Vec::new();
        for p in primes_dividing(n) {
            for base in by_order[n / p].clone() {
                let auts = automorphisms(&base)?;
                for rep in conjugacy_class_representatives(&auts) {
                    let phi = &auts[rep];
                    // φ^p must be conjugation by t, and φ must fix t.
                    let mut phi_p: Vec<u32> = base.elements().collect();
                    for _ in 0..p {
                        phi_p = phi_p.iter().map(|&x| phi[x as usize]).collect();
                    }
                    for t in base.elements() {
                        if phi[t as usize] != t
                            || base
                                .elements()
                                .any(|x| phi_p[x as usize] != base.conjugate(t, x))
                        {
                            continue;
                        }
                        let g = cyclic_extension(&base, phi, t, p);
                        debug_assert!(g.validate().is_ok());
                        let sig = signature(&g);
                        let mut duplicate = false;
                        for (s, h) in &found {
                            if *s == sig && group_isomorphism(&g, h)?.is_some() {
                                duplicate = true;
                                break;
                            }
                        }
                        if !duplicate {
                            found.push((sig, g));
                        }
                    }
                }
            }
        }
        by_order[n] = found.into_iter().map(|(_, g)| g).collect();
    }
    Ok(by_order)
}

/// Invariant factors of an abelian group, as a name like `Z2xZ4`.
fn abelian_name(g: &FiniteAlgebra) -> String {
    if g.order() == 1 {
        return "Z1".into();
    }
    // Count elements of each order dividing prime powers to recover the invariant factors.
    let n = g.order();
    let mut factors: Vec<usize> = Vec::new();
    for p in primes_dividing(n) {
        // Number of elements with order dividing p^k determines the p-part.
        let mut counts = vec![1usize];
        let mut pk = 1;
        while n % (pk * p) == 0 {
            pk *= p;
            counts.push(
                g.elements()
                    .filter(|&a| pk % g.element_order(a) == 0)
                    .count(),
            );
        }
        // counts[k] = prod_i p^{min(k, e_i)}; the number of factors with e_i ≥ k is log_p(counts[k]/counts[k-1]).
        let log = |x: usize| {
            let mut k = 0;
            let mut y = x;
            while y > 1 {
                y /= p;
                k += 1;
            }
            k
        };
        let ge: Vec<usize> = (1..counts.len())
            .map(|k| log(counts[k] / counts[k - 1]))
            .collect();
        for k in 1..=ge.len() {
            let exactly = ge[k - 1] - ge.get(k).copied().unwrap_or(0);
            for _ in 0..exactly {
                factors.push(p.pow(k as u32));
            }
        }
    }
    factors.sort();
    factors
        .iter()
        .map(|f| format!("Z{f}"))
        .collect::<Vec<_>>()
        .join("x")
}

fn group_name(g: &FiniteAlgebra, serial: usize) -> String {
    if g.is_abelian() {
        return abelian_name(g);
    }
    let n = g.order();
    let involutions = g.elements().filter(|&a| g.element_order(a) == 2).count();
    let has_order = |k| g.elements().any(|a| g.element_order(a) == k);
    match (n, involutions) {
        (6, _) => "S3".into(),
        (8, 5) => "D4".into(),
        (8, 1) => "Q8".into(),
        (10, _) => "D5".into(),
        (12, 3) if !has_order(6) => "A4".into(),
        (12, 7) => "D6".into(),
        (12, 1) => "Dic3".into(),
        (14, _) => "D7".into(),
        _ => format!("G{n}_{serial}"),
    }
}

/// Named groups of order `1..=max_order`.
pub fn group_corpus(max_order: usize) -> Result<Vec<Instance>> {
    let by_order = small_groups(max_order)?;
    let mut out = Vec::new();
    for groups in by_order {
        let mut serial = 0;
        for g in groups {
            let name = if !g.is_abelian() && g.order() > 14 {
                serial += 1;
                group_name(&g, serial)
            } else {
                group_name(&g, 0)
            };
            out.push(Instance {
                name,
                algebra: Arc::new(g),
            });
        }
    }
    Ok(out)
}

/// Every invertible `r × r` matrix over the prime field `Z_m`.
fn general_linear_group(r: usize, m: u32) -> Vec<Matrix> {
    let count = (m as usize).pow((r * r) as u32);
    (0..count as u32)
        .map(|i| Matrix::from_flat(r, r, m, &decode(i, m, r * r)))
        .filter(|a| a.inverse().is_some())
        .collect()
}

/// Structure constants after the change of basis `f_i = Σ_k g[k][i] e_k`.
fn transform(c: &[u32], r: usize, m: u32, g: &Matrix, g_inv: &Matrix) -> Vec<u32> {
    let mm = u64::from(m);
    let mut out = vec![0u32; r * r * r];
    for i in 0..r {
        for j in 0..r {
            let mut v = vec![0u64; r];
            for a in 0..r {
                for b in 0..r {
                    let w = u64::from(g.get(a, i)) * u64::from(g.get(b, j)) % mm;
                    if w == 0 {
                        continue;
                    }
                    for (k, slot) in v.iter_mut().enumerate() {
                        *slot += w * u64::from(c[(a * r + b) * r + k]);
                    }
                }
            }
            let v: Vec<u32> = v.into_iter().map(|x| (x % mm) as u32).collect();
            let w = g_inv.apply(&v);
            out[(i * r + j) * r..(i * r + j + 1) * r].copy_from_slice(&w);
        }
    }
    out
}

/// Ring-like algebras of rank exactly `r` over the prime field `Z_m`, one per
/// isomorphism class, each represented by its least structure-constant vector.
pub fn ring_like_of_rank(variety: Variety, r: usize) -> Result<Vec<FiniteAlgebra>> {
    let m = variety
        .modulus()
        .ok_or_else(|| Error::Unsupported("groups have no structure constants".into()))?;
    if !is_prime(m) {
        return Err(Error::Unsupported(format!(
            "ring-like corpus over the non-prime modulus {m}"
        )));
    }
    let n = r * r * r;
    let total = (m as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or(Error::TooLarge {
            what: "structure-constant enumeration",
            size: usize::MAX,
            bound: 1 << 24,
        })?;
    let labels: Vec<String> = match r {
        0 => vec![],
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => FiniteAlgebra::default_labels(r),
    };
    let gl: Vec<(Matrix, Matrix)> = general_linear_group(r, m)
        .into_iter()
        .map(|g| {
            let inv = g.inverse().expect("invertible");
            (g, inv)
        })
        .collect();
    let mut marked: HashSet<u32> = HashSet::new();
    let mut out = Vec::new();
    for idx in 0..total as u32 {
        if marked.contains(&idx) {
            continue;
        }
        let c = decode(idx, m, n);
        let Ok(alg) = FiniteAlgebra::ring_like(variety, labels.clone(), c.clone()) else {
            continue;
        };
        for (g, g_inv) in &gl {
            marked.insert(encode(&transform(&c, r, m, g, g_inv), m));
        }
        out.push(alg);
    }
    Ok(out)
}

/// Named ring-like algebras of rank `0..=max_rank`.
pub fn ring_like_corpus(tag: VarietyTag, moduli: &[u32], max_rank: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &m in moduli {
        let variety = Variety::with_tag(tag, Some(m))
            .ok_or_else(|| Error::Unsupported(format!("modulus {m}")))?;
        for r in 0..=max_rank {
            for (i, alg) in ring_like_of_rank(variety, r)?.into_iter().enumerate() {
                let name = format!("{variety} rank {r} #{i}");
                out.push(Instance {
                    name,
                    algebra: Arc::new(alg),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_counts_up_to_sixteen() {
        // Numbers of groups of order 1..16 up to isomorphism.
        let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];
        let groups = small_groups(16).unwrap();
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(groups[n + 1].len(), count, "order {}", n + 1);
            for g in &groups[n + 1] {
                g.validate().unwrap();
            }
        }
    }

    #[test]
    fn names_of_order_eight() {
        let names: Vec<String> = group_corpus(8)
            .unwrap()
            .into_iter()
            .filter(|i| i.algebra.order() == 8)
            .map(|i| i.name)
            .collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["D4", "Q8", "Z2xZ2xZ2", "Z2xZ4", "Z8"]);
    }

    #[test]
    fn lie_algebras_of_rank_two_over_a_prime_field() {
        // Up to isomorphism: abelian and the non-abelian [x, y] = x.
        for m in [2, 3, 5] {
            assert_eq!(
                ring_like_of_rank(Variety::Lie(m), 2).unwrap().len(),
                2,
                "m = {m}"
            );
            assert_eq!(ring_like_of_rank(Variety::Lie(m), 1).unwrap().len(), 1);
        }
    }

    #[test]
    fn rank_one_algebras() {
        // x*x = c x with c = 0 or c ≠ 0 (rescaling x makes c = 1).
        for m in [2, 3] {
            assert_eq!(ring_like_of_rank(Variety::Ring(m), 1).unwrap().len(), 2);
            assert_eq!(ring_like_of_rank(Variety::NaRing(m), 1).unwrap().len(), 2);
        }
    }

    #[test]
    fn orbit_sizes_sum_to_the_number_of_valid_tables() {
        // Orbit-stabiliser cross-check: summing |GL| / |Stab| over representatives counts all tables.
        let (m, r) = (2u32, 2usize);
        let gl = general_linear_group(r, m);
        for variety in [Variety::Ring(m), Variety::NaRing(m), Variety::Lie(m)] {
            let reps = ring_like_of_rank(variety, r).unwrap();
            let mut covered = 0usize;
            for rep in &reps {
                let c = rep.constants().unwrap();
                let orbit: HashSet<Vec<u32>> = gl
                    .iter()
                    .map(|g| transform(c, r, m, g, &g.inverse().unwrap()))
                    .collect();
                covered += orbit.len();
            }
            let valid = (0..256u32)
                .filter(|&i| {
                    FiniteAlgebra::ring_like(
                        variety,
                        FiniteAlgebra::default_labels(2),
                        decode(i, m, 8),
                    )
                    .is_ok()
                })
                .count();
            assert_eq!(covered, valid, "{variety}");
        }
    }
}
