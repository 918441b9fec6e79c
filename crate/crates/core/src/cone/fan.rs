//! Fans and hyperplane refinements of fans.
//!
//! Internally a fan is handled as the full list of its cells (every face of
//! every cone), which is what the cell-complex builder needs. [`Fan`] is the
//! public view listing only the maximal cones.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::error::{Result, ToricError};
use crate::exactnum::IntVec;

use super::Cone;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient: usize,
    cones: Vec<Cone>,
}

impl Fan {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Listed cones; for a fan built by [`subdivide_containing`] the first
    /// one is the prescribed cone.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// Every face of every listed cone, sorted by dimension then rays.
    pub fn cells(&self) -> Vec<Cone> {
        close_under_faces(self.cones.clone())
    }
}

/// Sorts cells by dimension, then lexicographically by rays and lineality.
pub(crate) fn sort_cells(cells: &mut [Cone]) {
    cells.sort_by(|a, b| {
        (a.dim(), a.rays(), a.lineality()).cmp(&(b.dim(), b.rays(), b.lineality()))
    });
}

pub(crate) fn close_under_faces(cones: Vec<Cone>) -> Vec<Cone> {
    let set: BTreeSet<Cone> = cones.iter().flat_map(Cone::faces).collect();
    let mut out: Vec<Cone> = set.into_iter().collect();
    sort_cells(&mut out);
    out
}

/// Common refinement of a face-closed cell list with the hyperplanes
/// `{h . y = 0}`. Cells not cut by a hyperplane are kept as they are; cut
/// cells are replaced by their intersections with both closed half-spaces and
/// with the hyperplane.
pub(crate) fn refine_by_hyperplanes(cells: Vec<Cone>, hyperplanes: &[IntVec]) -> Vec<Cone> {
    let mut current: BTreeSet<Cone> = cells.into_iter().collect();
    for h in hyperplanes {
        if h.is_zero() {
            continue;
        }
        let mut next = BTreeSet::new();
        for cell in current {
            let gens = cell.generators();
            let has_pos = gens.iter().any(|g| h.dot(g).is_positive());
            let has_neg = gens.iter().any(|g| h.dot(g).is_negative());
            if !(has_pos && has_neg) {
                next.insert(cell);
                continue;
            }
            let n = cell.ambient_dim();
            let with = |extra: IntVec| {
                let mut ineqs = cell.facets().to_vec();
                ineqs.push(extra);
                Cone::from_inequalities(n, &ineqs, cell.equations())
                    .expect("refined cells share the ambient dimension")
            };
            next.insert(with(h.clone()));
            next.insert(with(h.neg()));
            let mut eqs = cell.equations().to_vec();
            eqs.push(h.clone());
            next.insert(
                Cone::from_inequalities(n, cell.facets(), &eqs)
                    .expect("refined cells share the ambient dimension"),
            );
        }
        current = next;
    }
    let mut out: Vec<Cone> = current.into_iter().collect();
    sort_cells(&mut out);
    out
}

/// Whether the point set `q` is a union of relative interiors of `cells`.
/// Assumes the cells' relative interiors are pairwise disjoint.
pub(crate) fn is_union_of_cells(q: &Cone, cells: &[Cone]) -> bool {
    cells.iter().all(|cell| {
        if q.contains_int(&cell.interior_point()) {
            cell.is_subset_of(q)
        } else {
            let meet = cell.intersect(q).expect("same ambient dimension");
            !cell.relint_contains_int(&meet.interior_point())
        }
    })
}

/// A fan covering `outer` whose first listed cone is `inner`.
///
/// The cells are those of the arrangement of `inner`'s facet and equation
/// hyperplanes restricted to `outer`; the listed cones are `inner` followed
/// by the maximal cells other than `inner`.
pub fn subdivide_containing(inner: &Cone, outer: &Cone) -> Result<Fan> {
    if inner.ambient_dim() != outer.ambient_dim() {
        return Err(ToricError::DimensionMismatch {
            expected: outer.ambient_dim(),
            found: inner.ambient_dim(),
        });
    }
    if let Some(witness) = inner
        .generators()
        .into_iter()
        .find(|g| !outer.contains_int(g))
    {
        return Err(ToricError::NotContained { witness });
    }
    let cells = refine_by_hyperplanes(outer.faces(), &inner.hyperplanes());
    let maximal: Vec<Cone> = cells
        .iter()
        .filter(|c| {
            *c != inner
                && !cells
                    .iter()
                    .any(|d| d != *c && c.is_subset_of(d) && d.dim() > c.dim())
        })
        .cloned()
        .collect();
    let mut cones = vec![inner.clone()];
    cones.extend(maximal);
    Ok(Fan {
        ambient: outer.ambient_dim(),
        cones,
    })
}
