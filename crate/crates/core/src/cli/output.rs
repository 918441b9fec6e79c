use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cw::{characteristic_domain, CWComplex};
use crate::error::Result;
use crate::oracle::MapCheck;
use crate::toric::Stratum;

use super::problem::{json_vec, JsonInt};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsCubeJson {
    pub is_cube: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumJson {
    /// 1-based coordinate indices.
    pub support: Vec<usize>,
    pub present: bool,
    /// Extreme rays of the stratum cone, in the support's coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<JsonInt>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataJson {
    pub n: usize,
    pub strata: Vec<StratumJson>,
}

pub fn strata_json(n: usize, strata: &[Stratum]) -> StrataJson {
    StrataJson {
        n,
        strata: strata
            .iter()
            .map(|s| StratumJson {
                support: s.support.one_based(),
                present: s.present(),
                rays: s
                    .cone
                    .as_ref()
                    .map(|c| c.rays().iter().map(json_vec).collect()),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub id: usize,
    pub support: Vec<usize>,
    pub dim: usize,
    pub rays: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetElementJson {
    /// 1-based positions in the domain's `rays`.
    pub rays: Vec<usize>,
    pub dim: usize,
    pub subdivision_ray: Vec<JsonInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainJson {
    pub cell: usize,
    pub scaled: bool,
    pub rays: Vec<Vec<JsonInt>>,
    pub poset: Vec<PosetElementJson>,
    /// Maximal chains as 1-based positions in `poset`.
    pub chains: Vec<Vec<usize>>,
    /// Exponent matrix of the subdivided map, one row per coordinate.
    pub sd_exponents: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwJson {
    pub n: usize,
    pub f_vector: Vec<usize>,
    pub euler: i64,
    pub refinements: usize,
    pub cells: Vec<CellJson>,
    /// Cover pairs `[lower, upper]` of the closure poset.
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char_domains: Option<Vec<DomainJson>>,
}

pub fn cw_json(x: &CWComplex, char_domains: bool, scaled: bool) -> Result<CwJson> {
    let domains = if char_domains {
        let mut out = Vec::new();
        for c in x.cells().iter().filter(|c| c.dim() > 0) {
            let d = characteristic_domain(&c.cone, scaled)?;
            out.push(DomainJson {
                cell: c.id,
                scaled,
                rays: d.rays.iter().map(json_vec).collect(),
                poset: d
                    .poset
                    .elements()
                    .iter()
                    .enumerate()
                    .map(|(k, e)| PosetElementJson {
                        rays: e.iter().map(|i| i + 1).collect(),
                        dim: d.poset.dim(k),
                        subdivision_ray: json_vec(&d.subdivision_rays[k]),
                    })
                    .collect(),
                chains: d
                    .chains
                    .iter()
                    .map(|ch| ch.iter().map(|k| k + 1).collect())
                    .collect(),
                sd_exponents: d.sd_map.rows().iter().map(json_vec).collect(),
            });
        }
        Some(out)
    } else {
        None
    };
    Ok(CwJson {
        n: x.n(),
        f_vector: x.f_vector(),
        euler: x.euler(),
        refinements: x.refinements(),
        cells: x
            .cells()
            .iter()
            .map(|c| CellJson {
                id: c.id,
                support: c.support.one_based(),
                dim: c.dim(),
                rays: c.cone.rays().iter().map(json_vec).collect(),
            })
            .collect(),
        edges: x.hasse_edges().into_iter().map(|(a, b)| [a, b]).collect(),
        char_domains: domains,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub nodes: Vec<PosetNodeJson>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetNodeJson {
    pub id: usize,
    pub dim: usize,
}

fn sorted_nodes(x: &CWComplex) -> Vec<(usize, usize)> {
    let mut nodes: Vec<(usize, usize)> = x.cells().iter().map(|c| (c.dim(), c.id)).collect();
    nodes.sort_unstable();
    nodes
}

pub fn poset_json(x: &CWComplex) -> PosetJson {
    PosetJson {
        nodes: sorted_nodes(x)
            .into_iter()
            .map(|(dim, id)| PosetNodeJson { id, dim })
            .collect(),
        edges: x.hasse_edges().into_iter().map(|(a, b)| [a, b]).collect(),
    }
}

/// Hasse diagram of the closure poset, drawn bottom to top.
pub fn poset_dot(x: &CWComplex) -> String {
    let mut s = String::from("digraph {\n  rankdir=BT;\n");
    for (dim, id) in sorted_nodes(x) {
        writeln!(s, "  C{id} [label=\"C{id} dim={dim}\"];").expect("writing to a string");
    }
    for (lo, hi) in x.hasse_edges() {
        writeln!(s, "  C{lo} -> C{hi};").expect("writing to a string");
    }
    s.push_str("}\n");
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub res: u32,
    pub check: MapCheck,
    /// For systems: the cubified system agrees with the implicitization of
    /// its parametrization.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cubify_consistent: Option<bool>,
    pub pass: bool,
}
