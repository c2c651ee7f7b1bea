//! Automorphisms, homomorphisms between groups, and the linear solution
//! spaces (derivations, bimultiplications) of ring-like algebras.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::algebra::{Element, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{decode, nullspace_mod_p, Matrix};
use crate::variety::is_prime;

/// Upper bound on generator-image candidates tried by the hom search.
pub const MAX_HOM_CANDIDATES: u64 = 200_000_000;

/// Upper bound on the number of members enumerated from a linear solution space.
pub const MAX_SPACE_MEMBERS: usize = 1 << 22;

/// A spanning tree of the Cayley graph: every element is `parent + gens[gen]`.
#[derive(Clone, Debug)]
pub struct WordTree {
    gens: Vec<Element>,
    orders: Vec<usize>,
    /// Elements in breadth-first order, with their parent and generator index.
    steps: Vec<(Element, Element, usize)>,
}

impl WordTree {
    pub fn new(g: &FiniteAlgebra) -> Self {
        let gens = g.generators();
        let orders = gens.iter().map(|&s| g.element_order(s)).collect();
        let n = g.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0];
        let mut steps = Vec::with_capacity(n);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (i, &s) in gens.iter().enumerate() {
                let y = g.add(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                    steps.push((y, x, i));
                }
            }
        }
        WordTree {
            gens,
            orders,
            steps,
        }
    }

    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    /// Extends generator images to a homomorphism, or `None` if they do not define one.
    pub fn extend(
        &self,
        src: &FiniteAlgebra,
        tgt: &FiniteAlgebra,
        images: &[Element],
    ) -> Option<Vec<Element>> {
        let mut f = vec![0u32; src.order()];
        for &(y, x, i) in &self.steps {
            f[y as usize] = tgt.add(f[x as usize], images[i]);
        }
        for x in src.elements() {
            for (i, &s) in self.gens.iter().enumerate() {
                if f[src.add(x, s) as usize] != tgt.add(f[x as usize], images[i]) {
                    return None;
                }
            }
        }
        Some(f)
    }
}

/// Visits every group homomorphism `src → tgt` as a table, in lexicographic
/// order of generator images.
pub fn for_each_group_hom(
    src: &FiniteAlgebra,
    tgt: &FiniteAlgebra,
    visit: impl FnMut(&[Element]) -> ControlFlow<()>,
) -> Result<()> {
    let tree = WordTree::new(src);
    let tgt_orders: Vec<usize> = tgt.elements().map(|a| tgt.element_order(a)).collect();
    let candidates: Vec<Vec<Element>> = tree
        .orders
        .iter()
        .map(|&k| {
            tgt.elements()
                .filter(|&a| k % tgt_orders[a as usize] == 0)
                .collect()
        })
        .collect();
    hom_search(&tree, src, tgt, candidates, visit)
}

fn hom_search(
    tree: &WordTree,
    src: &FiniteAlgebra,
    tgt: &FiniteAlgebra,
    candidates: Vec<Vec<Element>>,
    mut visit: impl FnMut(&[Element]) -> ControlFlow<()>,
) -> Result<()> {
    let total = candidates
        .iter()
        .fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64));
    if total > MAX_HOM_CANDIDATES {
        return Err(Error::TooLarge {
            what: "homomorphism search",
            size: total as usize,
            bound: MAX_HOM_CANDIDATES as usize,
        });
    }
    let mut images = vec![0; candidates.len()];
    let _ = search(tree, src, tgt, &candidates, 0, &mut images, &mut visit);
    Ok(())
}

fn search(
    tree: &WordTree,
    src: &FiniteAlgebra,
    tgt: &FiniteAlgebra,
    candidates: &[Vec<Element>],
    depth: usize,
    images: &mut Vec<Element>,
    visit: &mut impl FnMut(&[Element]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if depth == candidates.len() {
        if let Some(f) = tree.extend(src, tgt, images) {
            return visit(&f);
        }
        return ControlFlow::Continue(());
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        search(tree, src, tgt, candidates, depth + 1, images, visit)?;
    }
    ControlFlow::Continue(())
}

/// All group homomorphisms `src → tgt`.
pub fn group_homs(src: &FiniteAlgebra, tgt: &FiniteAlgebra) -> Result<Vec<Vec<Element>>> {
    let mut out = Vec::new();
    for_each_group_hom(src, tgt, |f| {
        out.push(f.to_vec());
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// `(order, centraliser size)` of every element; preserved by isomorphisms.
pub fn element_invariants(g: &FiniteAlgebra) -> Vec<(usize, usize)> {
    g.elements()
        .map(|a| {
            let centraliser = g.elements().filter(|&b| g.add(a, b) == g.add(b, a)).count();
            (g.element_order(a), centraliser)
        })
        .collect()
}

/// Visits the bijective homomorphisms `a → b`, trying only images with
/// matching element invariants.
fn for_each_isomorphism(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    mut visit: impl FnMut(&[Element]) -> ControlFlow<()>,
) -> Result<()> {
    if a.order() != b.order() {
        return Ok(());
    }
    let n = a.order();
    let tree = WordTree::new(a);
    let (ia, ib) = (element_invariants(a), element_invariants(b));
    let candidates = tree
        .gens
        .iter()
        .map(|&s| {
            b.elements()
                .filter(|&t| ib[t as usize] == ia[s as usize])
                .collect()
        })
        .collect();
    hom_search(&tree, a, b, candidates, |f| {
        let mut seen = vec![false; n];
        if f.iter()
            .all(|&y| !std::mem::replace(&mut seen[y as usize], true))
        {
            visit(f)
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// Aut(G) as sorted permutation tables; the identity comes first.
pub fn automorphisms(g: &FiniteAlgebra) -> Result<Vec<Vec<Element>>> {
    if !g.is_group() {
        return Err(Error::Unsupported(format!(
            "automorphism search on {}",
            g.variety()
        )));
    }
    let mut out = Vec::new();
    for_each_isomorphism(g, g, |f| {
        out.push(f.to_vec());
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// An isomorphism `a → b` if one exists.
pub fn group_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<Option<Vec<Element>>> {
    let mut found = None;
    for_each_isomorphism(a, b, |f| {
        found = Some(f.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Index of variable `M[row][col]` in a flattened `r × r` unknown.
#[inline]
fn var(r: usize, row: usize, col: usize) -> usize {
    row * r + col
}

fn structure(g: &FiniteAlgebra) -> (usize, u32, impl Fn(usize, usize, usize) -> u32 + '_) {
    let r = g.rank().expect("ring-like");
    let m = g.modulus().expect("ring-like");
    let c = g.constants().expect("ring-like");
    (r, m, move |i: usize, j: usize, k: usize| {
        c[(i * r + j) * r + k]
    })
}

/// Linear equations (rows over `Z_m`) cutting out the derivations of `g`
/// among `r × r` matrices.
pub fn derivation_equations(g: &FiniteAlgebra) -> Vec<Vec<u32>> {
    let (r, m, c) = structure(g);
    let mut rows = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for t in 0..r {
                let mut row = vec![0u32; r * r];
                for k in 0..r {
                    row[var(r, t, k)] = (row[var(r, t, k)] + c(i, j, k)) % m;
                    row[var(r, k, i)] = (row[var(r, k, i)] + m - c(k, j, t)) % m;
                    row[var(r, k, j)] = (row[var(r, k, j)] + m - c(i, k, t)) % m;
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Linear equations on pairs `(λ, ρ)` (λ first) expressing
/// `λ(xy) = λ(x)y`, `ρ(xy) = xρ(y)` and `xλ(y) = ρ(x)y`.
pub fn bimultiplication_equations(g: &FiniteAlgebra) -> Vec<Vec<u32>> {
    let (r, m, c) = structure(g);
    let off = r * r;
    let mut rows = Vec::new();
    let sub = |row: &mut Vec<u32>, v: usize, x: u32| row[v] = (row[v] + m - x % m) % m;
    let add = |row: &mut Vec<u32>, v: usize, x: u32| row[v] = (row[v] + x) % m;
    for i in 0..r {
        for j in 0..r {
            for t in 0..r {
                let mut left = vec![0u32; 2 * off];
                let mut right = vec![0u32; 2 * off];
                let mut mixed = vec![0u32; 2 * off];
                for k in 0..r {
                    add(&mut left, var(r, t, k), c(i, j, k));
                    sub(&mut left, var(r, k, i), c(k, j, t));
                    add(&mut right, off + var(r, t, k), c(i, j, k));
                    sub(&mut right, off + var(r, k, j), c(i, k, t));
                    add(&mut mixed, var(r, k, j), c(i, k, t));
                    sub(&mut mixed, off + var(r, k, i), c(k, j, t));
                }
                rows.extend([left, right, mixed]);
            }
        }
    }
    rows
}

/// A spanning set of the solutions of a homogeneous system over `Z_m`.
///
/// Over a prime field this is a basis; for composite moduli every solution is
/// listed, found by exhaustive search.
pub fn solve_homogeneous(rows: &[Vec<u32>], nvars: usize, m: u32) -> Result<Vec<Vec<u32>>> {
    if is_prime(m) {
        return Ok(nullspace_mod_p(rows, nvars, m));
    }
    let total = (m as u64)
        .checked_pow(nvars as u32)
        .filter(|&t| t <= MAX_SPACE_MEMBERS as u64)
        .ok_or(Error::TooLarge {
            what: "solution search over a composite modulus",
            size: usize::MAX,
            bound: MAX_SPACE_MEMBERS,
        })?;
    let mm = u64::from(m);
    let mut out = Vec::new();
    for idx in 1..total as u32 {
        let v = decode(idx, m, nvars);
        let ok = rows.iter().all(|row| {
            row.iter()
                .zip(&v)
                .map(|(&a, &b)| u64::from(a) * u64::from(b))
                .sum::<u64>()
                % mm
                == 0
        });
        if ok {
            out.push(v);
        }
    }
    Ok(out)
}

/// Every `Z_m`-combination of the spanning vectors, sorted.
pub fn span_members(spanning: &[Vec<u32>], nvars: usize, m: u32) -> Result<Vec<Vec<u32>>> {
    let zero = vec![0u32; nvars];
    let mut seen: HashSet<Vec<u32>> = HashSet::from([zero.clone()]);
    let mut queue = vec![zero];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for s in spanning {
            let y: Vec<u32> = x.iter().zip(s).map(|(a, b)| (a + b) % m).collect();
            if seen.insert(y.clone()) {
                if queue.len() >= MAX_SPACE_MEMBERS {
                    return Err(Error::TooLarge {
                        what: "linear solution space",
                        size: queue.len() + 1,
                        bound: MAX_SPACE_MEMBERS,
                    });
                }
                queue.push(y);
            }
        }
    }
    queue.sort();
    Ok(queue)
}

/// Spanning set of Der(G) as `r × r` matrices acting on coordinate columns.
pub fn derivation_spanning_set(g: &FiniteAlgebra) -> Result<Vec<Matrix>> {
    let r = g
        .rank()
        .ok_or_else(|| Error::Unsupported("derivations of a group".into()))?;
    let m = g.modulus().expect("ring-like");
    let sols = solve_homogeneous(&derivation_equations(g), r * r, m)?;
    Ok(sols.iter().map(|v| Matrix::from_flat(r, r, m, v)).collect())
}

/// Every derivation of `g`, sorted.
pub fn all_derivations(g: &FiniteAlgebra) -> Result<Vec<Matrix>> {
    let r = g
        .rank()
        .ok_or_else(|| Error::Unsupported("derivations of a group".into()))?;
    let m = g.modulus().expect("ring-like");
    let sols = solve_homogeneous(&derivation_equations(g), r * r, m)?;
    Ok(span_members(&sols, r * r, m)?
        .iter()
        .map(|v| Matrix::from_flat(r, r, m, v))
        .collect())
}

/// Every pair `(λ, ρ)` satisfying the three bimultiplication laws, sorted.
pub fn all_bimultiplications(g: &FiniteAlgebra) -> Result<Vec<(Matrix, Matrix)>> {
    let r = g
        .rank()
        .ok_or_else(|| Error::Unsupported("bimultiplications of a group".into()))?;
    let m = g.modulus().expect("ring-like");
    let n = r * r;
    let sols = solve_homogeneous(&bimultiplication_equations(g), 2 * n, m)?;
    Ok(span_members(&sols, 2 * n, m)?
        .iter()
        .map(|v| {
            (
                Matrix::from_flat(r, r, m, &v[..n]),
                Matrix::from_flat(r, r, m, &v[n..]),
            )
        })
        .collect())
}

/// Bimultiplications with `λρ = ρλ`.
pub fn permutable_bimultiplications(g: &FiniteAlgebra) -> Result<Vec<(Matrix, Matrix)>> {
    Ok(all_bimultiplications(g)?
        .into_iter()
        .filter(|(l, r)| l.mul(r) == r.mul(l))
        .collect())
}

/// Whether `d` satisfies `d[x,y] = [dx,y] + [x,dy]` on basis pairs.
pub fn is_derivation(g: &FiniteAlgebra, d: &Matrix) -> bool {
    let r = g.rank().expect("ring-like");
    let apply = |x: Element| g.from_coords(&d.apply(&g.coords(x)));
    (0..r).all(|i| {
        (0..r).all(|j| {
            let (x, y) = (g.basis_element(i), g.basis_element(j));
            apply(g.mul(x, y)) == g.add(g.mul(apply(x), y), g.mul(x, apply(y)))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::Variety;

    fn z(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::cyclic_group(n)
    }

    #[test]
    fn automorphism_counts_match_euler_phi() {
        // |Aut(Z_n)| = φ(n), counted independently by gcd.
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for n in 1..=12 {
            let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count();
            assert_eq!(automorphisms(&z(n)).unwrap().len(), phi, "n = {n}");
        }
    }

    #[test]
    fn automorphism_count_of_s3_and_klein() {
        let s3 = FiniteAlgebra::group_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]);
        assert_eq!(automorphisms(&s3).unwrap().len(), 6);
        let v4 = FiniteAlgebra::group_from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]);
        let auts = automorphisms(&v4).unwrap();
        assert_eq!(auts.len(), 6);
        assert_eq!(auts[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn hom_counts_agree_with_brute_force() {
        // Count maps Z_a -> Z_b preserving the operation by checking all b^a functions.
        for a in 1..=4usize {
            for b in 1..=4usize {
                let (ga, gb) = (z(a), z(b));
                let mut brute = 0;
                for idx in 0..(b as u32).pow(a as u32) {
                    let f = decode(idx, b as u32, a);
                    let ok =
                        (0..a).all(|x| (0..a).all(|y| f[(x + y) % a] == (f[x] + f[y]) % b as u32));
                    brute += usize::from(ok);
                }
                assert_eq!(group_homs(&ga, &gb).unwrap().len(), brute, "Z{a} -> Z{b}");
            }
        }
    }

    #[test]
    fn abelian_lie_derivations_are_all_matrices() {
        let g = FiniteAlgebra::ring_like(
            Variety::Lie(5),
            FiniteAlgebra::default_labels(2),
            vec![0; 8],
        )
        .unwrap();
        assert_eq!(derivation_spanning_set(&g).unwrap().len(), 4);
        assert_eq!(all_derivations(&g).unwrap().len(), 625);
    }

    #[test]
    fn derivations_of_the_nonabelian_lie_algebra() {
        // [x,y] = x over Z_3. Direct check over all 81 matrices gives the count.
        let mut c = vec![0; 8];
        c[(0 * 2 + 1) * 2] = 1;
        c[(1 * 2 + 0) * 2] = 2;
        let g =
            FiniteAlgebra::ring_like(Variety::Lie(3), FiniteAlgebra::default_labels(2), c).unwrap();
        let brute = (0..81u32)
            .filter(|&i| is_derivation(&g, &Matrix::from_flat(2, 2, 3, &decode(i, 3, 4))))
            .count();
        assert_eq!(all_derivations(&g).unwrap().len(), brute);
        assert_eq!(brute, 9);
    }

    #[test]
    fn composite_modulus_solutions_are_exhaustive() {
        let g =
            FiniteAlgebra::ring_like(Variety::Lie(4), FiniteAlgebra::default_labels(1), vec![0])
                .unwrap();
        assert_eq!(all_derivations(&g).unwrap().len(), 4);
    }

    #[test]
    fn bimultiplications_of_the_example_ring() {
        // x*x = x over Z_3; check the three laws directly over all pairs of matrices.
        let mut c = vec![0; 8];
        c[0] = 1;
        let g =
            FiniteAlgebra::ring_like(Variety::Ring(3), vec!["x".into(), "y".into()], c).unwrap();
        let ap = |mat: &Matrix, v: Element| g.from_coords(&mat.apply(&g.coords(v)));
        let mut brute = 0;
        for li in 0..81u32 {
            let l = Matrix::from_flat(2, 2, 3, &decode(li, 3, 4));
            for ri in 0..81u32 {
                let r = Matrix::from_flat(2, 2, 3, &decode(ri, 3, 4));
                let ok = g.elements().all(|a| {
                    g.elements().all(|b| {
                        ap(&l, g.mul(a, b)) == g.mul(ap(&l, a), b)
                            && ap(&r, g.mul(a, b)) == g.mul(a, ap(&r, b))
                            && g.mul(a, ap(&l, b)) == g.mul(ap(&r, a), b)
                    })
                });
                brute += usize::from(ok);
            }
        }
        assert_eq!(all_bimultiplications(&g).unwrap().len(), brute);
    }
}
