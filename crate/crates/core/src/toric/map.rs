use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Result, ToricError};
use crate::exactnum::IntVec;

/// `t -> (t^{a_1}, ..., t^{a_n})` from `[0,1]^d` to `[0,1]^n`; row `j` of the
/// exponent matrix is `a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    n: usize,
    d: usize,
    rows: Vec<IntVec>,
}

impl MonomialMap {
    pub fn new(d: usize, rows: Vec<IntVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != d) {
            return Err(ToricError::DimensionMismatch {
                expected: d,
                found: bad.len(),
            });
        }
        if rows.iter().any(|r| !r.is_nonnegative()) {
            return Err(ToricError::NegativeExponent);
        }
        Ok(MonomialMap {
            n: rows.len(),
            d,
            rows,
        })
    }

    pub fn from_i64_rows(d: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(d, rows.iter().map(|r| IntVec::from_i64s(r)).collect())
    }

    /// The map whose exponent matrix has the given columns.
    pub fn from_columns(n: usize, columns: &[IntVec]) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(ToricError::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let rows = (0..n)
            .map(|j| IntVec::new(columns.iter().map(|c| c[j].clone()).collect()))
            .collect();
        Self::new(columns.len(), rows)
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap {
            n,
            d: n,
            rows: (0..n).map(|i| IntVec::unit(n, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rows(&self) -> &[IntVec] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.d)
            .map(|i| IntVec::new(self.rows.iter().map(|r| r[i].clone()).collect()))
            .collect()
    }

    /// Exact evaluation with `0^0 = 1`.
    pub fn eval(&self, t: &[BigRational]) -> Result<Vec<BigRational>> {
        if t.len() != self.d {
            return Err(ToricError::DimensionMismatch {
                expected: self.d,
                found: t.len(),
            });
        }
        self.rows
            .iter()
            .map(|a| {
                let mut acc = BigRational::one();
                for (ti, ai) in t.iter().zip(a.iter()) {
                    if ai.is_zero() {
                        continue;
                    }
                    let e = ai
                        .to_i32()
                        .ok_or_else(|| ToricError::ExponentTooLarge(ai.to_string()))?;
                    acc *= num_traits::pow::Pow::pow(ti, e);
                }
                Ok(acc)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn evaluation() {
        let m = MonomialMap::from_i64_rows(2, &[&[1, 0], &[2, 1]]).unwrap();
        assert_eq!(
            m.eval(&[rat(1, 2), rat(1, 2)]).unwrap(),
            vec![rat(1, 2), rat(1, 8)]
        );
        // A zero row is the constant 1, even at t = 0.
        let m = MonomialMap::from_i64_rows(1, &[&[0], &[1]]).unwrap();
        assert_eq!(m.eval(&[rat(0, 1)]).unwrap(), vec![rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn columns_round_trip() {
        let m = MonomialMap::from_i64_rows(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        assert_eq!(MonomialMap::from_columns(3, &m.columns()).unwrap(), m);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(MonomialMap::from_i64_rows(2, &[&[1, 0], &[1]]).is_err());
        assert_eq!(
            MonomialMap::from_i64_rows(1, &[&[-1]]),
            Err(ToricError::NegativeExponent)
        );
    }
}
