use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CWComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub id: usize,
    pub dim: usize,
    pub euler: i64,
    pub boundary_euler: i64,
    pub euler_ok: bool,
    pub boundary_ok: bool,
}

/// Combinatorial necessary conditions for a regular CW complex whose closed
/// cells are balls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub cells: Vec<CellReport>,
    pub total_euler: i64,
    pub total_euler_ok: bool,
    pub graded: bool,
    pub diamond: bool,
    pub edges_have_two_vertices: bool,
    pub pass: bool,
}

pub fn regularity_report(x: &CWComplex) -> RegularityReport {
    let cells: Vec<CellReport> = x
        .cells()
        .par_iter()
        .map(|c| {
            let k = c.dim();
            let euler = x.closed_cell_euler(c.id);
            let own = if k % 2 == 0 { 1 } else { -1 };
            let boundary_euler = euler - own;
            // The boundary of a k-ball is a (k-1)-sphere; the boundary of a
            // point is empty.
            let sphere = if k == 0 {
                0
            } else {
                1 + if k % 2 == 0 { -1 } else { 1 }
            };
            CellReport {
                id: c.id,
                dim: k,
                euler,
                boundary_euler,
                euler_ok: euler == 1,
                boundary_ok: boundary_euler == sphere,
            }
        })
        .collect();

    let below = |a: usize, b: usize| a != b && x.closure(b).binary_search(&a).is_ok();
    let ids: Vec<usize> = x.cells().iter().map(|c| c.id).collect();

    // Every cover relation of the closure order raises dimension by one.
    let graded = ids.par_iter().all(|&b| {
        x.closure(b).iter().all(|&a| {
            if a == b {
                return true;
            }
            let between = x
                .closure(b)
                .iter()
                .any(|&c| c != a && c != b && below(a, c));
            between || x.cell(a).dim() + 1 == x.cell(b).dim()
        })
    });

    let diamond = ids.par_iter().all(|&b| {
        x.closure(b).iter().all(|&a| {
            if x.cell(a).dim() + 2 != x.cell(b).dim() {
                return true;
            }
            let middle = x
                .closure(b)
                .iter()
                .filter(|&&c| c != a && c != b && below(a, c))
                .count();
            middle == 2
        })
    });

    let edges_have_two_vertices = x.cells().iter().filter(|c| c.dim() == 1).all(|c| {
        x.closure(c.id)
            .iter()
            .filter(|&&v| x.cell(v).dim() == 0)
            .count()
            == 2
    });

    let total_euler = x.euler();
    let total_euler_ok = total_euler == 1;
    let pass = total_euler_ok
        && graded
        && diamond
        && edges_have_two_vertices
        && cells.iter().all(|c| c.euler_ok && c.boundary_ok);
    RegularityReport {
        cells,
        total_euler,
        total_euler_ok,
        graded,
        diamond,
        edges_have_two_vertices,
        pass,
    }
}
