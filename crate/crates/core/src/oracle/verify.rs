use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cone::cone_equal;
use crate::cw::{build_cw, regularity_report, CWComplex};
use crate::error::Result;
use crate::exactnum::IntVec;
use crate::toric::{implicitize, log_cone_of_map, parametrize, MonomialMap, Support, ToricCube};

use super::{achievable_supports, check_sample, fm_cone_equal, grid_image, sample_log_point};

/// Seed used when `TORICUBE_SEED` is unset or unparsable.
pub const DEFAULT_SEED: u64 = 0x7a11_c0be;

/// The random generator for property drivers, seeded from `TORICUBE_SEED`.
pub fn rng_from_env() -> ChaCha8Rng {
    let seed = std::env::var("TORICUBE_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED);
    ChaCha8Rng::seed_from_u64(seed)
}

/// A map with `1..=max_n` coordinates, `1..=max_d` parameters and entries in
/// `0..=max_entry`.
pub fn random_map<R: Rng>(rng: &mut R, max_n: usize, max_d: usize, max_entry: i64) -> MonomialMap {
    let n = rng.gen_range(1..=max_n);
    let d = rng.gen_range(1..=max_d);
    let rows = (0..n)
        .map(|_| {
            let row: Vec<i64> = (0..d).map(|_| rng.gen_range(0..=max_entry)).collect();
            IntVec::from_i64s(&row)
        })
        .collect();
    MonomialMap::new(d, rows).expect("generated rows are well formed")
}

/// Outcome of the oracle cross-checks on one map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapCheck {
    pub grid_points: usize,
    /// Grid images failing the implicitized system.
    pub violations: usize,
    /// Present strata coincide with the combinatorially achievable supports.
    pub supports_agree: bool,
    /// The log-cone survives implicitize then parametrize, by both the
    /// double-description and the Fourier-Motzkin test.
    pub round_trip: bool,
    pub partition_samples: usize,
    /// Sampled image points lying in zero or several cells.
    pub partition_failures: usize,
    pub boundary_subcomplex: bool,
    pub fan_condition: bool,
    pub regular: bool,
    pub cells: usize,
    pub refinements: usize,
}

impl MapCheck {
    pub fn pass(&self) -> bool {
        self.violations == 0
            && self.supports_agree
            && self.round_trip
            && self.partition_failures == 0
            && self.boundary_subcomplex
            && self.fan_condition
            && self.regular
    }
}

pub fn present_supports(cube: &ToricCube) -> BTreeSet<Support> {
    cube.strata()
        .into_iter()
        .filter(|s| s.present())
        .map(|s| s.support)
        .collect()
}

/// Sampled image points in log form that do not lie in exactly one cell.
pub fn partition_failures<R: Rng>(
    m: &MonomialMap,
    x: &CWComplex,
    samples: usize,
    rng: &mut R,
) -> usize {
    (0..samples)
        .filter(|_| {
            let p = sample_log_point(m, rng);
            x.locate(p.support, &p.log_point).len() != 1
        })
        .count()
}

/// Runs every oracle cross-check on `m`.
pub fn check_map<R: Rng>(
    m: &MonomialMap,
    res: u32,
    samples: usize,
    rng: &mut R,
) -> Result<MapCheck> {
    let system = implicitize(m)?;
    let grid = grid_image(m, res)?;
    let violations = check_sample(&system, &grid)?.len();

    let cube = ToricCube::from_map(m)?;
    let supports_agree = present_supports(&cube) == achievable_supports(m);

    let original = log_cone_of_map(m);
    let back = log_cone_of_map(&parametrize(&system));
    let round_trip =
        cone_equal(&back, &original)? && fm_cone_equal(&m.columns(), back.rays(), m.n());

    let x = build_cw(&cube);
    let partition_failures = partition_failures(m, &x, samples, rng);
    Ok(MapCheck {
        grid_points: grid.points.len(),
        violations,
        supports_agree,
        round_trip,
        partition_samples: samples,
        partition_failures,
        boundary_subcomplex: x.boundaries_are_subcomplexes(),
        fan_condition: x.fan_condition(),
        regular: regularity_report(&x).pass,
        cells: x.len(),
        refinements: x.refinements(),
    })
}
