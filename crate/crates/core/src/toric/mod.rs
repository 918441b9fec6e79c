//! Toric cubes: binomial systems, monomial maps, and the passage between
//! them through log-cones.

mod cube;
mod map;
mod support;
mod system;

pub(crate) use cube::stratum_cone;
pub use cube::{
    cone_of_system, cubify, implicitize, intersect_interiors, is_cube, log_cone_of_map,
    parametrize, strata, Stratum, ToricCube,
};
pub use map::MonomialMap;
pub use support::{Support, DEFAULT_SUPPORT_CAP, MAX_AMBIENT_DIM};
pub use system::{member, stratum_restriction, system_equiv, BinomialInequality, BinomialSystem};
