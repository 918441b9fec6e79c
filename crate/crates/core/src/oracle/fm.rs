//! Fourier-Motzkin elimination, kept apart from the double-description code
//! so the two can check each other.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactnum::IntVec;

#[derive(Clone)]
struct Row {
    coeffs: Vec<BigInt>,
    history: BTreeSet<usize>,
}

fn normalize(mut c: Vec<BigInt>) -> Vec<BigInt> {
    let g = c.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in &mut c {
            *x /= &g;
        }
    }
    c
}

fn keep_smaller(
    kept: &mut BTreeMap<Vec<BigInt>, BTreeSet<usize>>,
    coeffs: Vec<BigInt>,
    history: BTreeSet<usize>,
) {
    match kept.get_mut(&coeffs) {
        Some(h) if h.len() <= history.len() => {}
        Some(h) => *h = history,
        None => {
            kept.insert(coeffs, history);
        }
    }
}

/// An inequality description `{y : w . y >= 0 for all w}` of the cone
/// generated by `rays` in `R^n`, obtained by eliminating the multipliers from
/// `y = sum lambda_i r_i, lambda >= 0`. The output may contain redundant rows
/// but describes the cone exactly.
pub fn fm_facets(rays: &[IntVec], n: usize) -> Vec<IntVec> {
    let d = rays.len();
    // Variables: lambda_0..lambda_{d-1}, then y_0..y_{n-1}. Rows read c . z >= 0.
    let width = d + n;
    let mut rows: Vec<Row> = Vec::new();
    for i in 0..d {
        let mut c = vec![BigInt::zero(); width];
        c[i] = BigInt::from(1);
        rows.push(Row {
            coeffs: c,
            history: BTreeSet::from([i]),
        });
    }
    for j in 0..n {
        // y_j - sum_i lambda_i r_ij = 0, as two inequalities.
        let mut c = vec![BigInt::zero(); width];
        c[d + j] = BigInt::from(1);
        for (i, r) in rays.iter().enumerate() {
            c[i] = -r[j].clone();
        }
        let neg: Vec<BigInt> = c.iter().map(|x| -x).collect();
        rows.push(Row {
            coeffs: c,
            history: BTreeSet::from([d + 2 * j]),
        });
        rows.push(Row {
            coeffs: neg,
            history: BTreeSet::from([d + 2 * j + 1]),
        });
    }

    for (eliminated, var) in (0..d).enumerate() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r.coeffs[var].sign() {
                num_bigint::Sign::Plus => pos.push(r),
                num_bigint::Sign::Minus => neg.push(r),
                num_bigint::Sign::NoSign => rest.push(r),
            }
        }
        // Chernikov: a combination derived from more than k + 2 original
        // rows after k + 1 eliminations is redundant.
        let limit = eliminated + 2;
        // Duplicate rows keep the smallest history; keeping a larger one
        // could let the pruning above discard a row nothing else implies.
        let mut kept: BTreeMap<Vec<BigInt>, BTreeSet<usize>> = BTreeMap::new();
        for r in rest {
            keep_smaller(&mut kept, r.coeffs, r.history);
        }
        for p in &pos {
            for q in &neg {
                let history: BTreeSet<usize> = p.history.union(&q.history).copied().collect();
                if history.len() > limit {
                    continue;
                }
                let a = &p.coeffs[var];
                let b = -&q.coeffs[var];
                let coeffs: Vec<BigInt> = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| x * &b + y * a)
                    .collect();
                let coeffs = normalize(coeffs);
                if !coeffs.iter().all(Zero::is_zero) {
                    keep_smaller(&mut kept, coeffs, history);
                }
            }
        }
        rows = kept
            .into_iter()
            .map(|(coeffs, history)| Row { coeffs, history })
            .collect();
    }

    let out: BTreeSet<IntVec> = rows
        .into_iter()
        .map(|r| IntVec::new(r.coeffs[d..].to_vec()))
        .filter(|w| !w.is_zero())
        .collect();
    out.into_iter().collect()
}

/// Direct evaluation of `w . y >= 0` for every row.
pub fn fm_cone_contains(ineqs: &[IntVec], point: &[BigRational]) -> bool {
    ineqs.iter().all(|w| !w.dot_rat(point).is_negative())
}

/// Equality of the cones generated by two ray lists, decided through
/// [`fm_facets`] only.
pub fn fm_cone_equal(a: &[IntVec], b: &[IntVec], n: usize) -> bool {
    let inside = |rays: &[IntVec], other: &[IntVec]| {
        let h = fm_facets(other, n);
        rays.iter().all(|r| fm_cone_contains(&h, &r.to_rationals()))
    };
    inside(a, b) && inside(b, a)
}
