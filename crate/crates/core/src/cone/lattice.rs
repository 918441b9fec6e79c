use crate::error::{Result, ToricError};
use crate::exactnum::{rank_of, IntVec};

use super::Cone;

/// Nonempty faces of a pointed cone above the apex, each recorded by the
/// indices (into [`FacePoset::rays`]) of its extreme rays.
///
/// Elements are sorted by face dimension, then lexicographically by index
/// set, so the last element is the cone itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePoset {
    rays: Vec<IntVec>,
    elements: Vec<Vec<usize>>,
    dims: Vec<usize>,
    covers: Vec<(usize, usize)>,
}

impl FacePoset {
    pub(crate) fn of_cone(cone: &Cone) -> Result<FacePoset> {
        if !cone.is_pointed() {
            return Err(ToricError::NotPointed);
        }
        if cone.is_zero() {
            return Err(ToricError::ZeroCone);
        }
        let n = cone.ambient_dim();
        let rays = cone.rays().to_vec();
        let mut elements: Vec<(usize, Vec<usize>)> = cone
            .face_ray_sets()
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| {
                let gens: Vec<IntVec> = s.iter().map(|&i| rays[i].clone()).collect();
                (rank_of(&gens, n), s)
            })
            .collect();
        elements.sort();
        let dims: Vec<usize> = elements.iter().map(|(d, _)| *d).collect();
        let elements: Vec<Vec<usize>> = elements.into_iter().map(|(_, s)| s).collect();

        let mut covers = Vec::new();
        for (lo, a) in elements.iter().enumerate() {
            for (hi, b) in elements.iter().enumerate() {
                if dims[hi] == dims[lo] + 1 && a.iter().all(|i| b.contains(i)) {
                    covers.push((lo, hi));
                }
            }
        }
        Ok(FacePoset {
            rays,
            elements,
            dims,
            covers,
        })
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Dimension of the face behind element `i`.
    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Element index with exactly the given ray-index set.
    pub fn find(&self, ray_set: &[usize]) -> Option<usize> {
        let mut key = ray_set.to_vec();
        key.sort_unstable();
        self.elements.iter().position(|e| *e == key)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a]
            .iter()
            .all(|i| self.elements[b].contains(i))
    }

    /// Maximal chains as element-index sequences from a ray up to the top,
    /// in lexicographic order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(lo, hi) in &self.covers {
            up[lo].push(hi);
        }
        let mut chains = Vec::new();
        let minimal = (0..self.len()).filter(|&i| self.dims[i] == 1);
        for start in minimal {
            let mut stack = vec![vec![start]];
            while let Some(chain) = stack.pop() {
                let last = *chain.last().expect("chains are nonempty");
                if up[last].is_empty() {
                    chains.push(chain);
                    continue;
                }
                for &next in &up[last] {
                    let mut c = chain.clone();
                    c.push(next);
                    stack.push(c);
                }
            }
        }
        chains.sort();
        chains
    }
}
