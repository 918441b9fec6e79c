use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::cone::Cone;
use crate::error::{Result, ToricError};
use crate::exactnum::IntVec;

use super::map::MonomialMap;
use super::support::{check_enumerable, Support};
use super::system::{stratum_restriction, system_equiv, BinomialInequality, BinomialSystem};

/// A toric cube given by its log-cone.
///
/// The cube lives on the coordinate face of `[0,1]^n` where the coordinates
/// outside `support` vanish; `log_cone` sits in `R^support` (coordinates in
/// increasing order) and the cube is the closure of `exp(-log_cone)`. Cubes
/// in `[0,1]^n` proper have full support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricCube {
    n: usize,
    support: Support,
    log_cone: Cone,
}

impl ToricCube {
    /// The full-support cube with the given log-cone.
    pub fn new(log_cone: Cone) -> Result<Self> {
        let n = log_cone.ambient_dim();
        check_enumerable(n)?;
        Self::with_support(n, Support::full(n), log_cone)
    }

    pub fn with_support(n: usize, support: Support, log_cone: Cone) -> Result<Self> {
        check_enumerable(n)?;
        if let Some(index) = support.indices().into_iter().find(|&i| i >= n) {
            return Err(ToricError::IndexOutOfRange { index, dim: n });
        }
        if log_cone.ambient_dim() != support.len() {
            return Err(ToricError::DimensionMismatch {
                expected: support.len(),
                found: log_cone.ambient_dim(),
            });
        }
        if !log_cone.in_orthant() {
            return Err(ToricError::NotInOrthant);
        }
        Ok(ToricCube {
            n,
            support,
            log_cone,
        })
    }

    pub fn from_map(m: &MonomialMap) -> Result<Self> {
        Self::new(log_cone_of_map(m))
    }

    pub fn from_system(s: &BinomialSystem) -> Result<Self> {
        Self::new(cone_of_system(s))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn log_cone(&self) -> &Cone {
        &self.log_cone
    }

    /// Strata of the cube, one per subset of its support, in support order.
    pub fn strata(&self) -> Vec<Stratum> {
        let subs = self.support.subsets();
        subs.par_iter()
            .map(|&s| Stratum {
                support: s,
                cone: stratum_cone(&self.log_cone, &s.local_indices(self.support)),
            })
            .collect()
    }

    /// The system cutting out this cube inside the face `[0,1]^support`,
    /// in the coordinates of `support`.
    pub fn system(&self) -> BinomialSystem {
        cube_system(&self.log_cone)
    }
}

/// One support set of a cube and, when the cube has points of exactly that
/// support, their log-image in `R^support`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub support: Support,
    pub cone: Option<Cone>,
}

impl Stratum {
    pub fn present(&self) -> bool {
        self.cone.is_some()
    }
}

/// The log-image of the points with support exactly `local` (given in the
/// cone's own coordinates), following the closure rule on the cone's rays.
pub(crate) fn stratum_cone(cone: &Cone, local: &[usize]) -> Option<Cone> {
    if cone.uncovered_coordinate(local).is_some() {
        return None;
    }
    Some(cone.project(local).expect("local coordinates are in range"))
}

pub fn log_cone_of_map(m: &MonomialMap) -> Cone {
    Cone::from_rays(m.n(), &m.columns()).expect("columns have length n")
}

pub fn cone_of_system(s: &BinomialSystem) -> Cone {
    let n = s.n();
    let mut ineqs: Vec<IntVec> = (0..n).map(|i| IntVec::unit(n, i)).collect();
    ineqs.extend(s.inequalities().iter().map(BinomialInequality::normal));
    Cone::from_inequalities(n, &ineqs, &[]).expect("inequalities have length n")
}

pub fn strata(cube: &ToricCube) -> Vec<Stratum> {
    cube.strata()
}

/// Binomial system for the full-support cube with log-cone `d`.
fn cube_system(d: &Cone) -> BinomialSystem {
    let n = d.ambient_dim();
    let mut out: BTreeSet<BinomialInequality> = BTreeSet::new();
    let supports = Support::full(n).subsets();
    let cones: Vec<Option<Cone>> = supports
        .par_iter()
        .map(|s| stratum_cone(d, &s.indices()))
        .collect();
    for (s, cone) in supports.iter().zip(&cones) {
        let Some(g) = cone else { continue };
        let coords = s.indices();
        for w in g.rays_to_facets() {
            let lifted = w.lift(&coords, n);
            let ineq = BinomialInequality::from_normal(&lifted);
            if !ineq.is_trivial() {
                out.insert(ineq);
            }
        }
    }
    for (s, cone) in supports.iter().zip(&cones) {
        if cone.is_some() {
            continue;
        }
        let partial = BinomialSystem::new(n, out.iter().cloned().collect())
            .expect("inequalities have length n");
        if stratum_restriction(&partial, *s)
            .expect("supports are in range")
            .is_none()
        {
            continue;
        }
        let w = d
            .killer_certificate(&s.indices())
            .expect("log-cones lie in the orthant")
            .expect("absent strata have a certificate");
        out.insert(BinomialInequality::from_normal(&w));
    }
    BinomialSystem::new(n, out.into_iter().collect()).expect("inequalities have length n")
}

/// A system whose solution set is the closure of the positive solutions of
/// `s`.
pub fn cubify(s: &BinomialSystem) -> Result<BinomialSystem> {
    check_enumerable(s.n())?;
    Ok(cube_system(&cone_of_system(s)))
}

/// A system whose solution set is the image of `[0,1]^d` under `m`.
pub fn implicitize(m: &MonomialMap) -> Result<BinomialSystem> {
    check_enumerable(m.n())?;
    Ok(cube_system(&log_cone_of_map(m)))
}

/// A monomial map onto the closure of the positive solutions of `s`; its
/// exponent columns are the extreme rays of the log-cone.
pub fn parametrize(s: &BinomialSystem) -> MonomialMap {
    let d = cone_of_system(s);
    MonomialMap::from_columns(s.n(), d.rays()).expect("rays have length n")
}

pub fn is_cube(s: &BinomialSystem) -> Result<bool> {
    system_equiv(s, &cubify(s)?)
}

/// The cube whose interior is the intersection of the two interiors, or
/// `None` when the interiors are disjoint.
pub fn intersect_interiors(c1: &ToricCube, c2: &ToricCube) -> Result<Option<ToricCube>> {
    if c1.n != c2.n {
        return Err(ToricError::DimensionMismatch {
            expected: c1.n,
            found: c2.n,
        });
    }
    if c1.support != c2.support {
        return Ok(None);
    }
    let meet = c1.log_cone.intersect(&c2.log_cone)?;
    let p = meet.interior_point();
    if !(c1.log_cone.relint_contains_int(&p) && c2.log_cone.relint_contains_int(&p)) {
        return Ok(None);
    }
    Ok(Some(ToricCube::with_support(c1.n, c1.support, meet)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::system::member;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn ineq(u: &[i64], v: &[i64]) -> BinomialInequality {
        BinomialInequality::from_i64s(u, v).unwrap()
    }

    fn system(n: usize, pairs: &[(&[i64], &[i64])]) -> BinomialSystem {
        BinomialSystem::new(n, pairs.iter().map(|(u, v)| ineq(u, v)).collect()).unwrap()
    }

    fn cone(n: usize, rows: &[&[i64]]) -> Cone {
        let gens: Vec<IntVec> = rows.iter().map(|r| IntVec::from_i64s(r)).collect();
        Cone::from_rays(n, &gens).unwrap()
    }

    fn map(d: usize, rows: &[&[i64]]) -> MonomialMap {
        MonomialMap::from_i64_rows(d, rows).unwrap()
    }

    fn pairwise_map() -> MonomialMap {
        map(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    fn pairwise_system() -> BinomialSystem {
        // bc <= a, ac <= b, ab <= c
        system(
            3,
            &[
                (&[0, 1, 1], &[1, 0, 0]),
                (&[1, 0, 1], &[0, 1, 0]),
                (&[1, 1, 0], &[0, 0, 1]),
            ],
        )
    }

    fn precube() -> BinomialSystem {
        system(
            4,
            &[
                (&[0, 1, 0, 1], &[1, 0, 1, 0]),
                (&[1, 0, 0, 1], &[0, 1, 1, 0]),
            ],
        )
    }

    fn precube_closure() -> BinomialSystem {
        system(
            4,
            &[
                (&[0, 1, 0, 1], &[1, 0, 1, 0]),
                (&[1, 0, 0, 1], &[0, 1, 1, 0]),
                (&[0, 0, 0, 1], &[0, 0, 1, 0]),
            ],
        )
    }

    #[test]
    fn log_cone_of_map_examples() {
        assert_eq!(
            log_cone_of_map(&pairwise_map()),
            cone(3, &[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1]])
        );
        assert_eq!(log_cone_of_map(&MonomialMap::identity(3)), Cone::orthant(3));
        assert_eq!(
            log_cone_of_map(&map(2, &[&[1, 0], &[2, 1]])),
            cone(2, &[&[1, 2], &[0, 1]])
        );
    }

    #[test]
    fn cone_of_system_examples() {
        let d = cone_of_system(&precube());
        let expected: Vec<IntVec> = [
            [0, 0, 0, 1],
            [0, 0, 1, 1],
            [0, 1, 0, 1],
            [1, 0, 0, 1],
            [1, 1, 0, 0],
        ]
        .iter()
        .map(|r| IntVec::from_i64s(r))
        .collect();
        assert_eq!(d.rays(), &expected[..]);
        assert_eq!(cone_of_system(&BinomialSystem::empty(2)), Cone::orthant(2));
        let eq = cone_of_system(&system(
            3,
            &[(&[1, 1, 0], &[0, 0, 1]), (&[0, 0, 1], &[1, 1, 0])],
        ));
        assert_eq!(eq.equations(), &[IntVec::from_i64s(&[1, 1, -1])]);
        assert_eq!(eq.dim(), 2);
    }

    #[test]
    fn strata_examples() {
        let cube = ToricCube::from_system(&precube()).unwrap();
        let st = cube.strata();
        assert_eq!(st.len(), 16);
        let s34 = st
            .iter()
            .find(|s| s.support == Support::from_indices(&[2, 3]))
            .unwrap();
        assert_eq!(s34.cone, Some(cone(2, &[&[0, 1], &[1, 1]])));
        assert_eq!(st.last().unwrap().cone.as_ref(), Some(cube.log_cone()));

        let cube = ToricCube::from_map(&pairwise_map()).unwrap();
        let present: Vec<Support> = cube
            .strata()
            .into_iter()
            .filter(Stratum::present)
            .map(|s| s.support)
            .collect();
        let expected = [vec![], vec![0], vec![1], vec![2], vec![0, 1, 2]]
            .iter()
            .map(|s| Support::from_indices(s))
            .collect::<Vec<_>>();
        assert_eq!(present, expected);
    }

    #[test]
    fn cubify_examples() {
        let c = cubify(&precube()).unwrap();
        assert!(system_equiv(&c, &precube_closure()).unwrap());

        let s = system(3, &[(&[0, 1, 1], &[2, 0, 0]), (&[1, 0, 1], &[0, 2, 0])]);
        let expected = system(
            3,
            &[
                (&[0, 1, 1], &[2, 0, 0]),
                (&[1, 0, 1], &[0, 2, 0]),
                (&[0, 0, 1], &[1, 0, 0]),
                (&[0, 0, 1], &[0, 1, 0]),
            ],
        );
        assert!(system_equiv(&cubify(&s).unwrap(), &expected).unwrap());
        assert!(!system_equiv(&s, &expected).unwrap());

        let e = pairwise_system();
        assert!(system_equiv(&cubify(&e).unwrap(), &e).unwrap());
    }

    #[test]
    fn implicitize_examples() {
        let s = implicitize(&pairwise_map()).unwrap();
        assert!(system_equiv(&s, &pairwise_system()).unwrap());
        assert!(implicitize(&MonomialMap::identity(3)).unwrap().is_empty());
        let s = implicitize(&map(2, &[&[1, 0], &[1, 2]])).unwrap();
        assert!(system_equiv(&s, &system(2, &[(&[0, 1], &[1, 0])])).unwrap());
    }

    #[test]
    fn parametrize_examples() {
        let m = parametrize(&precube_closure());
        assert_eq!((m.n(), m.d()), (4, 5));
        let mut cols = m.columns();
        cols.sort();
        let mut expected = map(
            5,
            &[
                &[1, 1, 0, 0, 0],
                &[1, 0, 1, 0, 0],
                &[0, 0, 0, 1, 0],
                &[0, 1, 1, 1, 1],
            ],
        )
        .columns();
        expected.sort();
        assert_eq!(cols, expected);

        assert_eq!(
            parametrize(&BinomialSystem::empty(1)),
            MonomialMap::identity(1)
        );

        let mut cols = parametrize(&pairwise_system()).columns();
        cols.sort();
        let mut expected = pairwise_map().columns();
        expected.sort();
        assert_eq!(cols, expected);
    }

    #[test]
    fn is_cube_examples() {
        assert!(!is_cube(&precube()).unwrap());
        assert!(is_cube(&precube_closure()).unwrap());
        assert!(is_cube(&BinomialSystem::empty(3)).unwrap());
        assert!(is_cube(&pairwise_system()).unwrap());
    }

    #[test]
    fn intersect_interiors_examples() {
        let c1 = ToricCube::from_map(&map(2, &[&[1, 0], &[2, 1]])).unwrap();
        let c2 = ToricCube::from_map(&map(2, &[&[1, 0], &[1, 2]])).unwrap();
        assert_eq!(intersect_interiors(&c1, &c1).unwrap(), Some(c1.clone()));
        assert_eq!(intersect_interiors(&c1, &c2).unwrap(), Some(c1.clone()));
        let r1 = ToricCube::new(cone(2, &[&[1, 2]])).unwrap();
        let r2 = ToricCube::new(cone(2, &[&[1, 3]])).unwrap();
        assert_eq!(intersect_interiors(&r1, &r2).unwrap(), None);
    }

    fn random_system() -> impl Strategy<Value = BinomialSystem> {
        (1usize..=3).prop_flat_map(|n| {
            proptest::collection::vec(
                (
                    proptest::collection::vec(0i64..=2, n),
                    proptest::collection::vec(0i64..=2, n),
                ),
                0..=3,
            )
            .prop_map(move |pairs| {
                BinomialSystem::new(n, pairs.iter().map(|(u, v)| ineq(u, v)).collect()).unwrap()
            })
        })
    }

    fn random_map() -> impl Strategy<Value = MonomialMap> {
        (1usize..=3, 1usize..=3).prop_flat_map(|(n, d)| {
            proptest::collection::vec(proptest::collection::vec(0i64..=2, d), n).prop_map(
                move |rows| {
                    MonomialMap::new(d, rows.iter().map(|r| IntVec::from_i64s(r)).collect())
                        .unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn round_trip(s in random_system()) {
            prop_assert_eq!(log_cone_of_map(&parametrize(&s)), cone_of_system(&s));
        }

        #[test]
        fn cubify_idempotent_and_valid(s in random_system()) {
            let c = cubify(&s).unwrap();
            prop_assert!(system_equiv(&c, &cubify(&c).unwrap()).unwrap());
            let d = cone_of_system(&s);
            for ineq in c.inequalities() {
                let w = ineq.normal();
                for r in d.rays() {
                    prop_assert!(w.dot(r) >= 0.into());
                }
            }
            prop_assert!(is_cube(&c).unwrap());
        }

        #[test]
        fn implicitize_is_sound(m in random_map(), ts in proptest::collection::vec(0i64..=3, 3)) {
            let s = implicitize(&m).unwrap();
            let t: Vec<BigRational> = ts[..m.d()]
                .iter()
                .map(|&k| BigRational::new(k.into(), 3.into()))
                .collect();
            prop_assert!(member(&m.eval(&t).unwrap(), &s).unwrap());
        }

        #[test]
        fn cube_is_a_monoid(
            m in random_map(),
            a in proptest::collection::vec(0i64..=2, 3),
            b in proptest::collection::vec(0i64..=2, 3),
        ) {
            let s = implicitize(&m).unwrap();
            let q = |k: &i64| BigRational::new((*k).into(), 2.into());
            let x = m.eval(&a[..m.d()].iter().map(q).collect::<Vec<_>>()).unwrap();
            let y = m.eval(&b[..m.d()].iter().map(q).collect::<Vec<_>>()).unwrap();
            let xy: Vec<BigRational> = x.iter().zip(&y).map(|(p, q)| p * q).collect();
            prop_assert!(member(&x, &s).unwrap() && member(&y, &s).unwrap());
            prop_assert!(member(&xy, &s).unwrap());
        }

        #[test]
        fn intersection_contains_common_point(m1 in random_map(), m2 in random_map()) {
            prop_assume!(m1.n() == m2.n());
            let c1 = ToricCube::from_map(&m1).unwrap();
            let c2 = ToricCube::from_map(&m2).unwrap();
            let meet = c1.log_cone().intersect(c2.log_cone()).unwrap();
            let p = meet.interior_point();
            let common = c1.log_cone().relint_contains_int(&p)
                && c2.log_cone().relint_contains_int(&p);
            match intersect_interiors(&c1, &c2).unwrap() {
                Some(c3) => {
                    prop_assert!(common);
                    prop_assert!(c3.log_cone().relint_contains_int(&p));
                }
                None => prop_assert!(!common),
            }
        }
    }
}
