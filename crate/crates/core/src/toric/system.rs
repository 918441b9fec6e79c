//! Binomial inequalities and systems of them.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cone::{cone_equal, Cone};
use crate::error::{Result, ToricError};
use crate::exactnum::IntVec;

use super::support::{check_enumerable, Support};

/// `x^u <= x^v` on `[0,1]^n`.
///
/// `u` and `v` are kept exactly as given. Cancelling a common factor `x_i`
/// would change the solution set on `{x_i = 0}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialInequality {
    u: IntVec,
    v: IntVec,
}

impl BinomialInequality {
    pub fn new(u: IntVec, v: IntVec) -> Result<Self> {
        if u.len() != v.len() {
            return Err(ToricError::DimensionMismatch {
                expected: u.len(),
                found: v.len(),
            });
        }
        if !u.is_nonnegative() || !v.is_nonnegative() {
            return Err(ToricError::NegativeExponent);
        }
        Ok(BinomialInequality { u, v })
    }

    pub fn from_i64s(u: &[i64], v: &[i64]) -> Result<Self> {
        Self::new(IntVec::from_i64s(u), IntVec::from_i64s(v))
    }

    /// The inequality `x^{w+} <= x^{w-}`, whose log form is `w . y >= 0`.
    pub fn from_normal(w: &IntVec) -> Self {
        BinomialInequality {
            u: w.positive_part(),
            v: w.negative_part(),
        }
    }

    pub fn u(&self) -> &IntVec {
        &self.u
    }

    pub fn v(&self) -> &IntVec {
        &self.v
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    /// `u - v`: the inequality reads `(u - v) . y >= 0` for `y = -log x`.
    pub fn normal(&self) -> IntVec {
        self.u.sub(&self.v)
    }

    /// True when the right-hand side is the constant monomial, so the
    /// inequality holds on the whole cube.
    pub fn is_trivial(&self) -> bool {
        self.v.is_zero()
    }

    pub fn holds_at(&self, x: &[BigRational]) -> Result<bool> {
        Ok(monomial(x, &self.u)? <= monomial(x, &self.v)?)
    }
}

/// `x^a` with `0^0 = 1`.
fn monomial(x: &[BigRational], a: &IntVec) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for (xi, ai) in x.iter().zip(a.iter()) {
        if ai.is_zero() {
            continue;
        }
        let e = ai
            .to_i32()
            .ok_or_else(|| ToricError::ExponentTooLarge(ai.to_string()))?;
        acc *= num_traits::pow::Pow::pow(xi, e);
    }
    Ok(acc)
}

/// A finite list of binomial inequalities on `[0,1]^n`. The empty list is the
/// whole cube.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialSystem {
    n: usize,
    ineqs: Vec<BinomialInequality>,
}

impl BinomialSystem {
    pub fn new(n: usize, ineqs: Vec<BinomialInequality>) -> Result<Self> {
        if let Some(bad) = ineqs.iter().find(|i| i.len() != n) {
            return Err(ToricError::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(BinomialSystem { n, ineqs })
    }

    pub fn empty(n: usize) -> Self {
        BinomialSystem {
            n,
            ineqs: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inequalities(&self) -> &[BinomialInequality] {
        &self.ineqs
    }

    pub fn len(&self) -> usize {
        self.ineqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ineqs.is_empty()
    }
}

/// Exact membership of a point of `[0,1]^n`.
pub fn member(x: &[BigRational], s: &BinomialSystem) -> Result<bool> {
    if x.len() != s.n {
        return Err(ToricError::DimensionMismatch {
            expected: s.n,
            found: x.len(),
        });
    }
    if let Some(index) = x
        .iter()
        .position(|xi| xi.is_negative() || *xi > BigRational::one())
    {
        return Err(ToricError::CoordinateOutOfRange { index });
    }
    for ineq in &s.ineqs {
        if !ineq.holds_at(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Log-image (in the coordinates of `support`, in increasing order) of the
/// solutions whose positive coordinates are exactly `support`, or `None`
/// when there are no such solutions.
pub fn stratum_restriction(s: &BinomialSystem, support: Support) -> Result<Option<Cone>> {
    let coords = support.indices();
    if let Some(&index) = coords.iter().find(|&&i| i >= s.n) {
        return Err(ToricError::IndexOutOfRange { index, dim: s.n });
    }
    let outside = |a: &IntVec| a.support().any(|i| !support.contains(i));
    let k = coords.len();
    let mut ineqs: Vec<IntVec> = (0..k).map(|i| IntVec::unit(k, i)).collect();
    for ineq in &s.ineqs {
        if outside(&ineq.u) {
            // 0 <= x^v always holds.
            continue;
        }
        if outside(&ineq.v) {
            // 0 < x^u <= 0 is impossible.
            return Ok(None);
        }
        ineqs.push(ineq.normal().select(&coords));
    }
    Ok(Some(Cone::from_inequalities(k, &ineqs, &[])?))
}

/// Equality of solution sets in `[0,1]^n`, decided stratum by stratum.
pub fn system_equiv(a: &BinomialSystem, b: &BinomialSystem) -> Result<bool> {
    if a.n != b.n {
        return Err(ToricError::DimensionMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    check_enumerable(a.n)?;
    for support in Support::full(a.n).subsets() {
        let same = match (
            stratum_restriction(a, support)?,
            stratum_restriction(b, support)?,
        ) {
            (None, None) => true,
            (Some(x), Some(y)) => cone_equal(&x, &y)?,
            _ => false,
        };
        if !same {
            return Ok(false);
        }
    }
    Ok(true)
}
