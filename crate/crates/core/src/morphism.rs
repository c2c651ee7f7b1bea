use std::sync::Arc;

use crate::algebra::{Element, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A total map between two algebras of the same variety, stored as a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<FiniteAlgebra>,
    target: Arc<FiniteAlgebra>,
    map: Vec<Element>,
}

impl Morphism {
    /// Wraps a table; the operation-preservation laws are checked by [`Morphism::is_morphism`].
    pub fn new(
        source: Arc<FiniteAlgebra>,
        target: Arc<FiniteAlgebra>,
        map: Vec<Element>,
    ) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::Malformed(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v as usize >= target.order()) {
            return Err(Error::Malformed(format!("image {bad} outside the target")));
        }
        Ok(Morphism {
            source,
            target,
            map,
        })
    }

    /// The linear map with the given matrix (columns are images of the source basis).
    pub fn from_matrix(
        source: Arc<FiniteAlgebra>,
        target: Arc<FiniteAlgebra>,
        matrix: &Matrix,
    ) -> Result<Self> {
        let (Some(r), Some(r2)) = (source.rank(), target.rank()) else {
            return Err(Error::VarietyMismatch(source.variety(), target.variety()));
        };
        if matrix.cols() != r || matrix.rows() != r2 {
            return Err(Error::Malformed(
                "matrix shape does not match the ranks".into(),
            ));
        }
        let map = source
            .elements()
            .map(|a| target.from_coords(&matrix.apply(&source.coords(a))))
            .collect();
        Ok(Morphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(alg: Arc<FiniteAlgebra>) -> Self {
        let map = alg.elements().collect();
        Morphism {
            source: alg.clone(),
            target: alg,
            map,
        }
    }

    pub fn zero(source: Arc<FiniteAlgebra>, target: Arc<FiniteAlgebra>) -> Self {
        let map = vec![0; source.order()];
        Morphism {
            source,
            target,
            map,
        }
    }

    pub fn source(&self) -> &Arc<FiniteAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteAlgebra> {
        &self.target
    }

    pub fn table(&self) -> &[Element] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: Element) -> Element {
        self.map[a as usize]
    }

    /// Matrix of a ring-like morphism.
    pub fn matrix(&self) -> Option<Matrix> {
        let r = self.source.rank()?;
        let r2 = self.target.rank()?;
        let m = self.target.modulus()?;
        let cols: Vec<Vec<u32>> = (0..r)
            .map(|i| self.target.coords(self.apply(self.source.basis_element(i))))
            .collect();
        Some(Matrix::from_columns(&cols, r2, m))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if inner.target.order() != self.source.order()
            || inner.target.variety() != self.source.variety()
        {
            return Err(Error::Malformed(
                "composition of non-composable maps".into(),
            ));
        }
        let map = inner.map.iter().map(|&x| self.apply(x)).collect();
        Ok(Morphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            map,
        })
    }

    /// `Ok(None)` if all operations are preserved, otherwise a violating pair.
    pub fn is_morphism(&self) -> Result<Option<(Element, Element)>> {
        let (src, tgt) = (&*self.source, &*self.target);
        if src.variety() != tgt.variety() {
            return Err(Error::VarietyMismatch(src.variety(), tgt.variety()));
        }
        if self.apply(0) != 0 {
            return Ok(Some((0, 0)));
        }
        let f = |a| self.apply(a);
        if src.is_ring_like() {
            let basis = src.basis();
            for x in src.elements() {
                for &e in &basis {
                    if f(src.add(x, e)) != tgt.add(f(x), f(e)) {
                        return Ok(Some((x, e)));
                    }
                }
            }
            for &a in &basis {
                for &b in &basis {
                    if f(src.mul(a, b)) != tgt.mul(f(a), f(b)) {
                        return Ok(Some((a, b)));
                    }
                }
            }
            return Ok(None);
        }
        // Checking x * g for every x and every generator g suffices by induction on word length.
        let right: Vec<Element> = if src.permutation(0).is_some() {
            src.generators()
        } else {
            src.elements().collect()
        };
        for x in src.elements() {
            for &g in &right {
                if f(src.add(x, g)) != tgt.add(f(x), f(g)) {
                    return Ok(Some((x, g)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &y in &self.map {
            seen[y as usize] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// Elements sent to `0`.
    pub fn kernel_elements(&self) -> Vec<Element> {
        self.source
            .elements()
            .filter(|&a| self.apply(a) == 0)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::Variety;

    fn example() -> Arc<FiniteAlgebra> {
        let mut c = vec![0; 8];
        c[0] = 1;
        Arc::new(
            FiniteAlgebra::ring_like(Variety::NaRing(5), vec!["x".into(), "y".into()], c).unwrap(),
        )
    }

    #[test]
    fn identity_and_zero_are_morphisms() {
        let g = example();
        assert_eq!(Morphism::identity(g.clone()).is_morphism().unwrap(), None);
        assert_eq!(Morphism::zero(g.clone(), g).is_morphism().unwrap(), None);
        let s3 = Arc::new(FiniteAlgebra::group_from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
        ));
        assert_eq!(Morphism::identity(s3.clone()).is_morphism().unwrap(), None);
        assert_eq!(Morphism::zero(s3.clone(), s3).is_morphism().unwrap(), None);
    }

    #[test]
    fn coordinate_swap_fails_at_x_x() {
        let g = example();
        let swap = Matrix::from_rows(&[vec![0, 1], vec![1, 0]], 5);
        let f = Morphism::from_matrix(g.clone(), g.clone(), &swap).unwrap();
        let x = g.basis_element(0);
        assert_eq!(f.is_morphism().unwrap(), Some((x, x)));
    }

    #[test]
    fn variety_mismatch_is_an_error() {
        let g = example();
        let r = Arc::new(g.reinterpret(Variety::Ring(5)).unwrap());
        let f = Morphism::new(g, r, (0..25).collect()).unwrap();
        assert!(matches!(f.is_morphism(), Err(Error::VarietyMismatch(..))));
    }
}
