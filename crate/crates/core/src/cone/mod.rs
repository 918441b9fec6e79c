//! Exact rational polyhedral cones.
//!
//! A [`Cone`] always carries both descriptions in canonical form:
//!
//! * extreme rays (primitive, sorted) of the pointed part, chosen in the
//!   orthogonal complement of the lineality space, plus a lineality basis in
//!   reduced echelon form;
//! * irredundant facet normals `w` (meaning `w . y >= 0`), chosen inside the
//!   linear span of the cone, plus a basis of the equations cutting out that
//!   span.
//!
//! Because both sides are canonical, two cones are equal as point sets iff
//! they are equal as values.

mod dd;
mod fan;
mod lattice;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Result, ToricError};
use crate::exactnum::{primitive, IntVec};

pub(crate) use dd::extreme_rays;
pub(crate) use fan::{is_union_of_cells, refine_by_hyperplanes, sort_cells};
pub use fan::{subdivide_containing, Fan};
pub use lattice::FacePoset;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    ambient: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    facets: Vec<IntVec>,
    equations: Vec<IntVec>,
}

impl std::fmt::Debug for Cone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cone{:?}", self.rays)?;
        if !self.lineality.is_empty() {
            write!(f, "+lin{:?}", self.lineality)?;
        }
        Ok(())
    }
}

fn check_lengths(n: usize, vs: &[IntVec]) -> Result<()> {
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(ToricError::DimensionMismatch {
            expected: n,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

fn with_negatives(vs: &[IntVec]) -> impl Iterator<Item = IntVec> + '_ {
    vs.iter().flat_map(|v| [v.clone(), v.neg()])
}

impl Cone {
    /// The cone generated by `generators` (zero vectors are ignored).
    pub fn from_rays(n: usize, generators: &[IntVec]) -> Result<Cone> {
        check_lengths(n, generators)?;
        let (facets, equations) = extreme_rays(generators, n);
        let dual: Vec<IntVec> = facets
            .iter()
            .cloned()
            .chain(with_negatives(&equations))
            .collect();
        let (rays, lineality) = extreme_rays(&dual, n);
        Ok(Cone {
            ambient: n,
            rays,
            lineality,
            facets,
            equations,
        })
    }

    /// The cone `{y : w . y >= 0 for w in ineqs, e . y = 0 for e in eqs}`.
    pub fn from_inequalities(n: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> Result<Cone> {
        check_lengths(n, ineqs)?;
        check_lengths(n, eqs)?;
        let all: Vec<IntVec> = ineqs.iter().cloned().chain(with_negatives(eqs)).collect();
        let (rays, lineality) = extreme_rays(&all, n);
        let gens: Vec<IntVec> = rays
            .iter()
            .cloned()
            .chain(with_negatives(&lineality))
            .collect();
        let (facets, equations) = extreme_rays(&gens, n);
        Ok(Cone {
            ambient: n,
            rays,
            lineality,
            facets,
            equations,
        })
    }

    pub fn zero(n: usize) -> Cone {
        Cone::from_rays(n, &[]).expect("no generators")
    }

    pub fn orthant(n: usize) -> Cone {
        let units: Vec<IntVec> = (0..n).map(|i| IntVec::unit(n, i)).collect();
        Cone::from_rays(n, &units).expect("unit vectors have length n")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Extreme rays of the pointed part.
    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// Rays together with both signs of every lineality generator.
    pub fn generators(&self) -> Vec<IntVec> {
        self.rays
            .iter()
            .cloned()
            .chain(with_negatives(&self.lineality))
            .collect()
    }

    /// Facet inequalities together with both signs of every equation.
    pub fn rays_to_facets(&self) -> Vec<IntVec> {
        let mut out: Vec<IntVec> = self
            .facets
            .iter()
            .cloned()
            .chain(with_negatives(&self.equations))
            .collect();
        out.sort();
        out
    }

    /// Extreme rays, plus `±` lineality generators for non-pointed cones.
    pub fn facets_to_rays(&self) -> Vec<IntVec> {
        let mut out = self.generators();
        out.sort();
        out
    }

    /// Normals of every hyperplane appearing in the H-description.
    pub fn hyperplanes(&self) -> Vec<IntVec> {
        self.facets.iter().chain(&self.equations).cloned().collect()
    }

    pub fn contains_int(&self, y: &IntVec) -> bool {
        self.equations.iter().all(|e| e.dot(y).is_zero())
            && self.facets.iter().all(|w| !w.dot(y).is_negative())
    }

    pub fn contains(&self, y: &[BigRational]) -> bool {
        self.equations.iter().all(|e| e.dot_rat(y).is_zero())
            && self.facets.iter().all(|w| !w.dot_rat(y).is_negative())
    }

    /// Membership in the relative interior.
    pub fn relint_contains(&self, y: &[BigRational]) -> bool {
        self.equations.iter().all(|e| e.dot_rat(y).is_zero())
            && self.facets.iter().all(|w| w.dot_rat(y).is_positive())
    }

    pub(crate) fn relint_contains_int(&self, y: &IntVec) -> bool {
        self.equations.iter().all(|e| e.dot(y).is_zero())
            && self.facets.iter().all(|w| w.dot(y).is_positive())
    }

    /// A point of the relative interior: the sum of the extreme rays.
    pub fn interior_point(&self) -> IntVec {
        self.rays
            .iter()
            .fold(IntVec::zeros(self.ambient), |acc, r| acc.add(r))
    }

    pub fn is_subset_of(&self, other: &Cone) -> bool {
        self.ambient == other.ambient && self.generators().iter().all(|g| other.contains_int(g))
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.ambient != other.ambient {
            return Err(ToricError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        let ineqs: Vec<IntVec> = self.facets.iter().chain(&other.facets).cloned().collect();
        let eqs: Vec<IntVec> = self
            .equations
            .iter()
            .chain(&other.equations)
            .cloned()
            .collect();
        Cone::from_inequalities(self.ambient, &ineqs, &eqs)
    }

    /// True when every generator is componentwise non-negative.
    pub fn in_orthant(&self) -> bool {
        self.lineality.is_empty() && self.rays.iter().all(IntVec::is_nonnegative)
    }

    fn check_coords(&self, coords: &[usize]) -> Result<()> {
        match coords.iter().find(|&&i| i >= self.ambient) {
            Some(&index) => Err(ToricError::IndexOutOfRange {
                index,
                dim: self.ambient,
            }),
            None => Ok(()),
        }
    }

    /// The face where all coordinates in `zero_coords` vanish. Requires the
    /// cone to lie in the non-negative orthant, so every `{y_i = 0}` is
    /// supporting.
    pub fn face_zero(&self, zero_coords: &[usize]) -> Result<Cone> {
        self.check_coords(zero_coords)?;
        if !self.in_orthant() {
            return Err(ToricError::NotInOrthant);
        }
        let gens: Vec<IntVec> = self
            .rays
            .iter()
            .filter(|r| zero_coords.iter().all(|&i| r[i].is_zero()))
            .cloned()
            .collect();
        Cone::from_rays(self.ambient, &gens)
    }

    /// Image under the coordinate projection onto `coords` (in that order).
    pub fn project(&self, coords: &[usize]) -> Result<Cone> {
        self.check_coords(coords)?;
        let gens: Vec<IntVec> = self.generators().iter().map(|g| g.select(coords)).collect();
        Cone::from_rays(coords.len(), &gens)
    }

    /// First coordinate outside `support` not covered by the supports of the
    /// rays vanishing on `support`. `None` means every coordinate outside
    /// `support` is covered, i.e. the points of support exactly `support`
    /// occur in the closure of the positive part.
    pub(crate) fn uncovered_coordinate(&self, support: &[usize]) -> Option<usize> {
        let mut covered = vec![false; self.ambient];
        for r in &self.rays {
            if support.iter().all(|&i| r[i].is_zero()) {
                for j in r.support() {
                    covered[j] = true;
                }
            }
        }
        (0..self.ambient).find(|i| !support.contains(i) && !covered[*i])
    }

    /// A valid inequality `w . y >= 0` on the cone with `supp(w+)` inside
    /// `support` and `w` negative somewhere outside it, or `None` when no
    /// such certificate exists.
    ///
    /// With `i` an uncovered coordinate and `M = max_r r_i`, the vector with
    /// `w_i = -1`, `w_j = M` on `support` and zero elsewhere is valid on
    /// every ray: rays vanishing on `support` also vanish at `i`, and every
    /// other ray has an integer entry `>= 1` on `support`.
    pub fn killer_certificate(&self, support: &[usize]) -> Result<Option<IntVec>> {
        self.check_coords(support)?;
        if !self.in_orthant() {
            return Err(ToricError::NotInOrthant);
        }
        let Some(i) = self.uncovered_coordinate(support) else {
            return Ok(None);
        };
        let m = self
            .rays
            .iter()
            .map(|r| r[i].clone())
            .max()
            .unwrap_or_else(BigInt::zero);
        let mut w = IntVec::zeros(self.ambient).into_entries();
        w[i] = BigInt::from(-1);
        for &j in support {
            w[j] = m.clone();
        }
        let w = primitive(&IntVec::new(w)).expect("w_i = -1 is nonzero");
        debug_assert!(self.rays.iter().all(|r| !w.dot(r).is_negative()));
        Ok(Some(w))
    }

    /// Ray-index sets of all faces, including the minimal face (empty set)
    /// and the cone itself.
    pub(crate) fn face_ray_sets(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let tight: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|w| {
                (0..self.rays.len())
                    .filter(|&i| w.dot(&self.rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut stack = vec![all];
        while let Some(face) = stack.pop() {
            if !seen.insert(face.clone()) {
                continue;
            }
            for t in &tight {
                let sub: Vec<usize> = face.iter().copied().filter(|i| t.contains(i)).collect();
                if sub.len() < face.len() && !seen.contains(&sub) {
                    stack.push(sub);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// All faces as cones, from the minimal face up to the cone itself.
    pub fn faces(&self) -> Vec<Cone> {
        let mut out: Vec<Cone> = self
            .face_ray_sets()
            .into_iter()
            .map(|set| {
                let gens: Vec<IntVec> = set
                    .iter()
                    .map(|&i| self.rays[i].clone())
                    .chain(with_negatives(&self.lineality))
                    .collect();
                Cone::from_rays(self.ambient, &gens).expect("face generators have ambient length")
            })
            .collect();
        sort_cells(&mut out);
        out
    }

    pub fn face_lattice(&self) -> Result<FacePoset> {
        FacePoset::of_cone(self)
    }
}

/// Point-set equality by mutual inclusion.
pub fn cone_equal(a: &Cone, b: &Cone) -> Result<bool> {
    if a.ambient != b.ambient {
        return Err(ToricError::DimensionMismatch {
            expected: a.ambient,
            found: b.ambient,
        });
    }
    Ok(a.is_subset_of(b) && b.is_subset_of(a))
}
