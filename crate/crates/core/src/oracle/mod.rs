//! Brute-force verifiers. Nothing here calls the double-description engine:
//! containment is direct evaluation and cone descriptions come from
//! Fourier-Motzkin elimination.

mod fm;
mod verify;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Result, ToricError};
use crate::toric::{member, BinomialSystem, MonomialMap, Support};

pub use fm::{fm_cone_contains, fm_cone_equal, fm_facets};
pub use verify::{
    check_map, partition_failures, present_supports, random_map, rng_from_env, MapCheck,
    DEFAULT_SEED,
};

/// Upper bound on `res^d` for [`grid_image`].
pub const GRID_CAP: u64 = 1_000_000;

pub const DEFAULT_RES: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    pub params: Vec<BigRational>,
    pub point: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSample {
    pub res: u32,
    pub points: Vec<SamplePoint>,
}

impl GridSample {
    /// Supports of the sampled points.
    pub fn supports(&self) -> BTreeSet<Support> {
        self.points
            .iter()
            .map(|p| point_support(&p.point))
            .collect()
    }
}

pub fn point_support(x: &[BigRational]) -> Support {
    let idx: Vec<usize> = (0..x.len()).filter(|&i| !x[i].is_zero()).collect();
    Support::from_indices(&idx)
}

/// `f(t)` for every `t` in `{0, 1/res, ..., 1}^d`, in lexicographic order of
/// the grid indices.
pub fn grid_image(m: &MonomialMap, res: u32) -> Result<GridSample> {
    if res == 0 {
        return Err(ToricError::ContractViolation(
            "grid resolution must be >= 1".into(),
        ));
    }
    let d = m.d() as u32;
    match u64::from(res).checked_pow(d) {
        Some(k) if k <= GRID_CAP => {}
        _ => {
            return Err(ToricError::ContractViolation(format!(
                "grid of resolution {res} in dimension {d} exceeds {GRID_CAP} points"
            )))
        }
    }
    let side = res as usize + 1;
    let total = side.pow(d);
    let levels: Vec<BigRational> = (0..side)
        .map(|k| BigRational::new(BigInt::from(k), BigInt::from(res)))
        .collect();
    let points = (0..total)
        .into_par_iter()
        .map(|mut code| {
            let mut params = vec![BigRational::zero(); d as usize];
            for slot in params.iter_mut().rev() {
                *slot = levels[code % side].clone();
                code /= side;
            }
            let point = m.eval(&params)?;
            Ok(SamplePoint { params, point })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GridSample { res, points })
}

/// `{S(T) : T subset of the parameters}` where `S(T)` is the set of
/// coordinates whose exponent row is supported inside `T`.
pub fn achievable_supports(m: &MonomialMap) -> BTreeSet<Support> {
    let row_supports: Vec<u64> = m
        .rows()
        .iter()
        .map(|r| r.support().fold(0u64, |acc, i| acc | 1 << i))
        .collect();
    (0u64..1 << m.d())
        .map(|t| {
            let s: Vec<usize> = (0..m.n()).filter(|&j| row_supports[j] & !t == 0).collect();
            Support::from_indices(&s)
        })
        .collect()
}

/// Sample points that fail to satisfy `s`.
pub fn check_sample(s: &BinomialSystem, g: &GridSample) -> Result<Vec<SamplePoint>> {
    if let Some(p) = g.points.first() {
        if p.point.len() != s.n() {
            return Err(ToricError::DimensionMismatch {
                expected: s.n(),
                found: p.point.len(),
            });
        }
    }
    let flags = g
        .points
        .par_iter()
        .map(|p| member(&p.point, s))
        .collect::<Result<Vec<bool>>>()?;
    Ok(g.points
        .iter()
        .zip(flags)
        .filter(|(_, ok)| !ok)
        .map(|(p, _)| p.clone())
        .collect())
}

/// A random point of a map's image, recorded in log coordinates.
///
/// Each parameter is either `0` or `exp(-s_i)` with `s_i` a non-negative
/// rational; the point has support `S(T)` for the set `T` of nonzero
/// parameters, and its log coordinates on that support are `y = E_T s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSample {
    pub support: Support,
    /// Log coordinates on `support`, in increasing coordinate order.
    pub log_point: Vec<BigRational>,
}

pub fn sample_log_point<R: Rng>(m: &MonomialMap, rng: &mut R) -> LogSample {
    let s: Vec<Option<BigRational>> = (0..m.d())
        .map(|_| {
            if rng.gen_range(0..4) == 0 {
                None
            } else if rng.gen_range(0..4) == 0 {
                Some(BigRational::zero())
            } else {
                let num: i64 = rng.gen_range(1..=12);
                let den: i64 = rng.gen_range(1..=4);
                Some(BigRational::new(num.into(), den.into()))
            }
        })
        .collect();
    let mut coords = Vec::new();
    let mut log_point = Vec::new();
    for (j, row) in m.rows().iter().enumerate() {
        if row.support().any(|i| s[i].is_none()) {
            continue;
        }
        coords.push(j);
        let y = row
            .iter()
            .zip(&s)
            .filter_map(|(e, si)| si.as_ref().map(|si| si * BigRational::from(e.clone())))
            .fold(BigRational::zero(), |a, b| a + b);
        log_point.push(y);
    }
    LogSample {
        support: Support::from_indices(&coords),
        log_point,
    }
}
