//! Exact integer vectors and rational matrices.
//!
//! Everything downstream (cones, strata, cell complexes) is built on these
//! two types. There is no floating point anywhere in the crate.

use std::fmt;
use std::ops::{Deref, Index};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, ToricError};

/// Fixed-length vector of arbitrary-precision integers.
///
/// Ordering is lexicographic on the entries, which is the canonical order
/// used for rays and facet normals throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVec(entries)
    }

    pub fn zeros(len: usize) -> Self {
        IntVec(vec![BigInt::zero(); len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = BigInt::one();
        v
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rat(&self, point: &[BigRational]) -> BigRational {
        debug_assert_eq!(self.len(), point.len());
        self.0
            .iter()
            .zip(point)
            .map(|(a, b)| b * BigRational::from_integer(a.clone()))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|a| a * k).collect())
    }

    /// Positive part: `max(v, 0)` entrywise.
    pub fn positive_part(&self) -> IntVec {
        IntVec(
            self.0
                .iter()
                .map(|a| {
                    if a.is_positive() {
                        a.clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect(),
        )
    }

    /// Negative part: `max(-v, 0)` entrywise.
    pub fn negative_part(&self) -> IntVec {
        IntVec(
            self.0
                .iter()
                .map(|a| if a.is_negative() { -a } else { BigInt::zero() })
                .collect(),
        )
    }

    /// Entries at the given coordinates, in the given order.
    pub fn select(&self, coords: &[usize]) -> IntVec {
        IntVec(coords.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// Embeds a vector living on `coords` into a zero vector of length `len`.
    pub fn lift(&self, coords: &[usize], len: usize) -> IntVec {
        debug_assert_eq!(self.len(), coords.len());
        let mut out = Self::zeros(len);
        for (x, &i) in self.0.iter().zip(coords) {
            out.0[i] = x.clone();
        }
        out
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.0
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect()
    }

    /// Entries as `i64` when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Deref for IntVec {
    type Target = [BigInt];
    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

impl Index<usize> for IntVec {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<Vec<BigInt>> for IntVec {
    fn from(v: Vec<BigInt>) -> Self {
        IntVec(v)
    }
}

/// Divides `v` by the gcd of its entries. Direction (and sign) is preserved.
pub fn primitive(v: &IntVec) -> Result<IntVec> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(ToricError::ZeroVector);
    }
    Ok(IntVec(v.iter().map(|x| x / &g).collect()))
}

/// Clears denominators of a rational vector and returns its primitive integer
/// multiple. `None` for the zero vector.
pub fn primitive_from_rationals(v: &[BigRational]) -> Option<IntVec> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = IntVec(v.iter().map(|x| (x * &lcm).to_integer()).collect());
    primitive(&ints).ok()
}

/// Dense rectangular matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(ToricError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_int_rows(cols: usize, rows: &[IntVec]) -> Result<Self> {
        Self::from_rows(cols, rows.iter().map(IntVec::to_rationals).collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        Self::from_rows(cols, rows).expect("rectangular rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    /// Multiplies by a column vector.
    pub fn apply(&self, x: &[BigRational]) -> Result<Vec<BigRational>> {
        if x.len() != self.cols {
            return Err(ToricError::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Rows scaled to integers (each row multiplied by the lcm of its
    /// denominators). Row spaces and ranks are unchanged.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| (x * &lcm).to_integer()).collect()
            })
            .collect()
    }

    /// Exact rank via Bareiss fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows(), self.cols)
    }

    /// One exact solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
        if b.len() != self.rows {
            return Err(ToricError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let width = self.cols + 1;
        let mut aug: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, width);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[r][self.cols].clone();
        }
        Ok(Some(x))
    }
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form in place; returns pivot columns. Zero rows end up
/// at the bottom.
fn rref_in_place(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in &mut m[r][c..] {
            *x = &*x * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rational_rows(rows: &[IntVec]) -> Vec<Vec<BigRational>> {
    rows.iter().map(IntVec::to_rationals).collect()
}

/// Rank of a list of integer vectors of length `cols`.
pub fn rank_of(rows: &[IntVec], cols: usize) -> usize {
    bareiss_rank(rows.iter().map(|r| r.entries().to_vec()).collect(), cols)
}

/// Canonical basis of the row span: the nonzero rows of the reduced row
/// echelon form, each scaled to a primitive integer vector.
pub fn row_basis(rows: &[IntVec], cols: usize) -> Vec<IntVec> {
    let mut m = rational_rows(rows);
    let pivots = rref_in_place(&mut m, cols);
    m.truncate(pivots.len());
    m.iter()
        .map(|r| primitive_from_rationals(r).expect("pivot rows are nonzero"))
        .collect()
}

/// Canonical integer basis of `{x : row . x = 0 for every row}`.
///
/// The basis is returned in reduced echelon form (as rows), so equal
/// subspaces give identical output.
pub fn nullspace(rows: &[IntVec], cols: usize) -> Vec<IntVec> {
    let mut m = rational_rows(rows);
    let pivots = rref_in_place(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<IntVec> = free
        .iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[r][f].clone();
            }
            primitive_from_rationals(&x).expect("free column gives nonzero kernel vector")
        })
        .collect();
    row_basis(&basis, cols)
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily
/// in order.
pub fn independent_subset(rows: &[IntVec], cols: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut echelon: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut v = row.to_rationals();
        for (e, &p) in echelon.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone() / &e[p];
                for k in 0..cols {
                    let delta = &f * &e[k];
                    v[k] -= delta;
                }
            }
        }
        if let Some(p) = (0..cols).find(|&k| !v[k].is_zero()) {
            echelon.push(v);
            pivots.push(p);
            chosen.push(i);
            if chosen.len() == cols {
                break;
            }
        }
    }
    chosen
}

/// Inverse of a square nonsingular rational matrix.
pub(crate) fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.rows();
    debug_assert_eq!(n, m.cols());
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend((0..n).map(|c| {
                if c == r {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = rref_in_place(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let rows = aug.into_iter().map(|r| r[n..].to_vec()).collect();
    Some(RatMatrix::from_rows(n, rows).expect("square"))
}
