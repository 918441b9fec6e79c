use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cone::{Cone, FacePoset};
use crate::error::Result;
use crate::exactnum::IntVec;
use crate::toric::MonomialMap;

/// Combinatorial data of the barycentric characteristic map of a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicDomain {
    /// Faces of the cone above the apex; element `k` is indexed by a set of
    /// positions in `rays`.
    pub poset: FacePoset,
    /// Extreme rays, rescaled to a common coordinate sum when requested.
    pub rays: Vec<IntVec>,
    /// `r_sigma`, the sum of the rays of `sigma`, one per poset element.
    pub subdivision_rays: Vec<IntVec>,
    /// Exponent matrix with one column per poset element.
    pub sd_map: MonomialMap,
    /// Maximal chains of the poset, as element indices from a ray upward,
    /// in lexicographic order.
    pub chains: Vec<Vec<usize>>,
}

/// Builds the face poset, the barycentric rays and the subdivided map of a
/// pointed cone of positive dimension.
pub fn characteristic_domain(cone: &Cone, rays_scaled: bool) -> Result<CharacteristicDomain> {
    let poset = cone.face_lattice()?;
    let mut rays = poset.rays().to_vec();
    if rays_scaled {
        let sums: Vec<BigInt> = rays.iter().map(IntVec::sum).collect();
        let l = sums.iter().fold(BigInt::one(), |acc, s| acc.lcm(s));
        rays = rays
            .iter()
            .zip(&sums)
            .map(|(r, s)| r.scale(&(&l / s)))
            .collect();
    }
    let n = cone.ambient_dim();
    let subdivision_rays: Vec<IntVec> = poset
        .elements()
        .iter()
        .map(|sigma| {
            sigma
                .iter()
                .fold(IntVec::zeros(n), |acc, &i| acc.add(&rays[i]))
        })
        .collect();
    let sd_map = MonomialMap::from_columns(n, &subdivision_rays)?;
    let chains = poset.maximal_chains();
    Ok(CharacteristicDomain {
        poset,
        rays,
        subdivision_rays,
        sd_map,
        chains,
    })
}

impl CharacteristicDomain {
    /// `r_sigma` for the element whose ray set is exactly `rays` (given as
    /// vectors), if there is one.
    pub fn ray_for(&self, rays: &[IntVec]) -> Option<&IntVec> {
        let idx: Option<Vec<usize>> = rays
            .iter()
            .map(|r| self.poset.rays().iter().position(|p| p == r))
            .collect();
        let k = self.poset.find(&idx?)?;
        Some(&self.subdivision_rays[k])
    }

    /// The substitution `t_i = prod_{sigma containing i} t_sigma`, as the
    /// exponent matrix from the poset coordinates to the ray coordinates.
    pub fn substitution(&self) -> Vec<IntVec> {
        (0..self.rays.len())
            .map(|i| {
                IntVec::new(
                    self.poset
                        .elements()
                        .iter()
                        .map(|s| {
                            if s.contains(&i) {
                                BigInt::one()
                            } else {
                                BigInt::zero()
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }
}
