//! Incremental double description.
//!
//! Computes the extreme rays of `{y : a . y >= 0 for every row a}`. The
//! lineality space is split off first so the iteration always runs on a
//! pointed cone living in the row space of the constraints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactnum::{
    independent_subset, inverse, nullspace, primitive, primitive_from_rationals, IntVec, RatMatrix,
};

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    vec: IntVec,
    zeros: Bits,
}

/// Extreme rays and a lineality basis of `{y in R^n : a . y >= 0}`.
///
/// The rays are primitive, lexicographically sorted and lie in the row space
/// of `ineqs` (the orthogonal complement of the lineality space). The
/// lineality basis is in canonical echelon form.
pub(crate) fn extreme_rays(ineqs: &[IntVec], n: usize) -> (Vec<IntVec>, Vec<IntVec>) {
    let rows: Vec<IntVec> = ineqs.iter().filter(|a| !a.is_zero()).cloned().collect();
    let lineality = nullspace(&rows, n);
    if rows.is_empty() {
        return (Vec::new(), lineality);
    }

    let basis = independent_subset(&rows, n);
    let k = basis.len();
    let b_rows: Vec<&IntVec> = basis.iter().map(|&i| &rows[i]).collect();

    // Gram matrix of the chosen rows; columns of B^T G^{-1} are the rays of
    // the simplicial start cone {y in rowspace : B y >= 0}.
    let gram_rows: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| BigRational::from_integer(b_rows[i].dot(b_rows[j])))
                .collect()
        })
        .collect();
    let gram = RatMatrix::from_rows(k, gram_rows).expect("square gram matrix");
    let ginv = inverse(&gram).expect("independent rows give an invertible gram matrix");

    let total = rows.len();
    let mut rays: Vec<Ray> = (0..k)
        .map(|i| {
            let mut y = vec![BigRational::zero(); n];
            for (j, b) in b_rows.iter().enumerate() {
                let coeff = ginv.get(j, i);
                for (c, entry) in b.iter().enumerate() {
                    y[c] += coeff * BigRational::from_integer(entry.clone());
                }
            }
            let vec = primitive_from_rationals(&y).expect("start ray is nonzero");
            let mut zeros = Bits::new(total);
            for (j, &bj) in basis.iter().enumerate() {
                if j != i {
                    zeros.set(bj);
                }
            }
            Ray { vec, zeros }
        })
        .collect();

    for (idx, a) in rows.iter().enumerate() {
        if basis.contains(&idx) {
            continue;
        }
        rays = add_constraint(rays, a, idx, total);
    }

    let mut out: Vec<IntVec> = rays.into_iter().map(|r| r.vec).collect();
    out.sort();
    out.dedup();
    (out, lineality)
}

fn add_constraint(rays: Vec<Ray>, a: &IntVec, idx: usize, total: usize) -> Vec<Ray> {
    let values: Vec<BigInt> = rays.iter().map(|r| a.dot(&r.vec)).collect();
    let pos: Vec<usize> = (0..rays.len())
        .filter(|&i| values[i].is_positive())
        .collect();
    let neg: Vec<usize> = (0..rays.len())
        .filter(|&i| values[i].is_negative())
        .collect();

    let mut created: Vec<Ray> = Vec::new();
    for &p in &pos {
        for &q in &neg {
            let common = rays[p].zeros.and(&rays[q].zeros);
            let adjacent = rays
                .iter()
                .enumerate()
                .all(|(t, ray)| t == p || t == q || !ray.zeros.is_superset_of(&common));
            if !adjacent {
                continue;
            }
            // (a.r) s - (a.s) r with a.r > 0 > a.s: positive combination on
            // the hyperplane a . y = 0.
            let combo = rays[q]
                .vec
                .scale(&values[p])
                .sub(&rays[p].vec.scale(&values[q]));
            let vec = primitive(&combo).expect("adjacent rays are independent");
            let mut zeros = common;
            zeros.set(idx);
            created.push(Ray { vec, zeros });
        }
    }

    let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
    for (i, mut ray) in rays.into_iter().enumerate() {
        if values[i].is_negative() {
            continue;
        }
        if values[i].is_zero() {
            ray.zeros.set(idx);
        }
        next.push(ray);
    }
    next.extend(created);
    debug_assert!(next.iter().all(|r| r.zeros.0.len() == total.div_ceil(64)));
    next
}
