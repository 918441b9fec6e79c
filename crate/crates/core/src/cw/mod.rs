//! Cell decompositions of toric cubes.
//!
//! A cell is a pair (support `S`, cone `G` in `R^S`) standing for the points
//! with support exactly `S` and log coordinates in the relative interior of
//! `G`. The cells of one support always form a face-closed fan.

mod domain;
mod report;

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::cone::{is_union_of_cells, refine_by_hyperplanes, sort_cells, Cone};
use crate::error::{Result, ToricError};
use crate::toric::{stratum_cone, Support, ToricCube};

pub use domain::{characteristic_domain, CharacteristicDomain};
pub use report::{regularity_report, CellReport, RegularityReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenCell {
    /// 1-based, assigned in (support, dimension, rays) order.
    pub id: usize,
    pub support: Support,
    pub cone: Cone,
}

impl OpenCell {
    pub fn dim(&self) -> usize {
        self.cone.dim()
    }
}

type Fans = BTreeMap<Support, Vec<Cone>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CWComplex {
    n: usize,
    cells: Vec<OpenCell>,
    /// Ids of the cells in each cell's closure, the cell included, sorted.
    closures: Vec<Vec<usize>>,
    refinements: usize,
}

impl CWComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[OpenCell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, id: usize) -> &OpenCell {
        &self.cells[id - 1]
    }

    /// Number of hyperplane refinements applied to some support's fan while
    /// building the complex; zero means the complex is the plain face
    /// partition of the strata.
    pub fn refinements(&self) -> usize {
        self.refinements
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().map(OpenCell::dim).max()
    }

    pub fn closure(&self, id: usize) -> &[usize] {
        &self.closures[id - 1]
    }

    /// Cells of dimension one less in the closure of `id`.
    pub fn covers(&self, id: usize) -> Vec<usize> {
        let k = self.cell(id).dim();
        self.closure(id)
            .iter()
            .copied()
            .filter(|&c| self.cell(c).dim() + 1 == k)
            .collect()
    }

    /// All `(lower, upper)` cover pairs, sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .cells
            .iter()
            .flat_map(|c| self.covers(c.id).into_iter().map(move |lo| (lo, c.id)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            f[c.dim()] += 1;
        }
        f
    }

    pub fn euler(&self) -> i64 {
        euler(&self.f_vector())
    }

    /// Euler characteristic of the closed cell `id`.
    pub fn closed_cell_euler(&self, id: usize) -> i64 {
        self.closure(id)
            .iter()
            .map(|&c| sign(self.cell(c).dim()))
            .sum()
    }

    /// Cells of the given support whose relative interior contains the log
    /// point (coordinates of `support` in increasing order).
    pub fn locate(&self, support: Support, log_point: &[BigRational]) -> Vec<usize> {
        self.cells
            .iter()
            .filter(|c| c.support == support && c.cone.relint_contains(log_point))
            .map(|c| c.id)
            .collect()
    }

    fn find(&self, support: Support, cone: &Cone) -> Option<usize> {
        self.cells
            .iter()
            .find(|c| c.support == support && c.cone == *cone)
            .map(|c| c.id)
    }

    fn fans(&self) -> Fans {
        let mut fans = Fans::new();
        for c in &self.cells {
            fans.entry(c.support).or_default().push(c.cone.clone());
        }
        fans
    }

    /// Whether every cell's closure is exactly a union of cells: for each
    /// support below the cell where the closure has points, the projected
    /// cone is a union of that support's cells.
    pub fn boundaries_are_subcomplexes(&self) -> bool {
        let fans = self.fans();
        self.cells.par_iter().all(|c| {
            c.support.subsets().into_iter().all(|sub| {
                let target = if sub == c.support {
                    Some(c.cone.clone())
                } else {
                    stratum_cone(&c.cone, &sub.local_indices(c.support))
                };
                match (target, fans.get(&sub)) {
                    (None, _) => true,
                    (Some(q), Some(fan)) => is_union_of_cells(&q, fan),
                    (Some(_), None) => false,
                }
            }) && self
                .closure(c.id)
                .iter()
                .all(|&o| o == c.id || self.cell(o).dim() < c.dim())
        })
    }

    /// Whether cells of equal support meet in common cells.
    pub fn fan_condition(&self) -> bool {
        self.fans().values().all(|fan| {
            fan.par_iter().all(|a| {
                fan.iter().all(|b| {
                    let m = a
                        .intersect(b)
                        .expect("cells of a fan share the ambient space");
                    fan.contains(&m)
                })
            })
        })
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Alternating sum of an f-vector.
pub fn euler(f_vector: &[usize]) -> i64 {
    f_vector
        .iter()
        .enumerate()
        .map(|(k, &f)| sign(k) * f as i64)
        .sum()
}

fn tuffley_fans(cube: &ToricCube) -> Fans {
    cube.strata()
        .into_iter()
        .filter_map(|s| s.cone.map(|c| (s.support, c.faces())))
        .collect()
}

fn cells_from_fans(fans: &Fans) -> Vec<OpenCell> {
    let mut cells = Vec::new();
    for (&support, fan) in fans {
        let mut cones = fan.clone();
        sort_cells(&mut cones);
        for cone in cones {
            cells.push(OpenCell {
                id: cells.len() + 1,
                support,
                cone,
            });
        }
    }
    cells
}

/// The open cells of the face partition of every present stratum.
pub fn tuffley_partition(cube: &ToricCube) -> Vec<OpenCell> {
    cells_from_fans(&tuffley_fans(cube))
}

/// Refines lower-support fans until the closure of every cell is a union of
/// cells. Supports are handled from the top of the support order down, so a
/// fan is final before its own cells are pushed further down. Returns the
/// number of refinements performed.
fn close_boundaries(fans: &mut Fans) -> usize {
    let mut count = 0;
    let supports: Vec<Support> = fans.keys().rev().copied().collect();
    for s in supports {
        let cells = fans[&s].clone();
        for k in &cells {
            for sub in s.subsets() {
                if sub == s {
                    continue;
                }
                let Some(q) = stratum_cone(k, &sub.local_indices(s)) else {
                    continue;
                };
                let fan = fans
                    .get_mut(&sub)
                    .expect("a support in the closure of a cell is present in the cube");
                if !is_union_of_cells(&q, fan) {
                    *fan = refine_by_hyperplanes(std::mem::take(fan), &q.hyperplanes());
                    count += 1;
                }
            }
        }
    }
    count
}

fn closure_ids(
    cell: &OpenCell,
    cells: &[OpenCell],
    index: &BTreeMap<Support, Vec<usize>>,
) -> Vec<usize> {
    let mut out = Vec::new();
    for sub in cell.support.subsets() {
        let Some(members) = index.get(&sub) else {
            continue;
        };
        let target = if sub == cell.support {
            Some(cell.cone.clone())
        } else {
            stratum_cone(&cell.cone, &sub.local_indices(cell.support))
        };
        if let Some(q) = target {
            out.extend(
                members
                    .iter()
                    .filter(|&&i| cells[i].cone.is_subset_of(&q))
                    .map(|&i| cells[i].id),
            );
        }
    }
    out.sort_unstable();
    out
}

fn assemble(n: usize, fans: &Fans, refinements: usize) -> CWComplex {
    let cells = cells_from_fans(fans);
    let mut index: BTreeMap<Support, Vec<usize>> = BTreeMap::new();
    for (i, c) in cells.iter().enumerate() {
        index.entry(c.support).or_default().push(i);
    }
    let closures = cells
        .par_iter()
        .map(|c| closure_ids(c, &cells, &index))
        .collect();
    CWComplex {
        n,
        cells,
        closures,
        refinements,
    }
}

/// A CW decomposition of the cube by interiors of toric cubes: the face
/// partition of the strata, refined where a cell's boundary would otherwise
/// not be a union of cells.
pub fn build_cw(cube: &ToricCube) -> CWComplex {
    let mut fans = tuffley_fans(cube);
    let refinements = close_boundaries(&mut fans);
    assemble(cube.n(), &fans, refinements)
}

/// Refines `x` so that every cell lies inside or outside the interior of
/// each given cube, then restores the boundary condition.
pub fn refine_complex(x: &CWComplex, cubes: &[ToricCube]) -> Result<CWComplex> {
    let mut fans = x.fans();
    let mut refinements = x.refinements;
    for c in cubes {
        if c.n() != x.n {
            return Err(ToricError::DimensionMismatch {
                expected: x.n,
                found: c.n(),
            });
        }
        // An interior on a support the complex does not reach is disjoint
        // from every cell.
        if let Some(fan) = fans.get_mut(&c.support()) {
            let refined = refine_by_hyperplanes(fan.clone(), &c.log_cone().hyperplanes());
            if refined != *fan {
                *fan = refined;
                refinements += 1;
            }
        }
    }
    refinements += close_boundaries(&mut fans);
    Ok(assemble(x.n, &fans, refinements))
}

/// The cells making up the closure of `cell`.
pub fn cell_closure(cell: &OpenCell, x: &CWComplex) -> Result<Vec<OpenCell>> {
    let id = x
        .find(cell.support, &cell.cone)
        .ok_or(ToricError::CellNotInComplex)?;
    Ok(x.closure(id).iter().map(|&c| x.cell(c).clone()).collect())
}
