//! Exact rational solutions of `x^y = y^x` with `y > x`:
//! `x = ((n+1)/n)^n`, `y = ((n+1)/n)^(n+1)` for `n >= 1`.
//!
//! Generic over the integer scalar of the numerator and denominator. Fixed
//! width scalars report [`Error::Overflow`] once `(n+1)^(n+1)` no longer
//! fits; [`BigUint`] is bounded only by the guard.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{checked_pow, CheckedMul, FromPrimitive};

use crate::error::{Error, Result};
use crate::exactpow::{Guard, Natural};

/// Scalar usable as numerator/denominator of a solution.
pub trait RationalScalar: Natural + CheckedMul + FromPrimitive {}

impl<T> RationalScalar for T where T: Natural + CheckedMul + FromPrimitive {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSolution<T: Clone + Integer> {
    n: u64,
    x: Ratio<T>,
    y: Ratio<T>,
}

impl<T: RationalScalar> RationalSolution<T> {
    /// Assembles a candidate without checking it; see [`verify_rational_solution`].
    pub fn from_parts(n: u64, x: Ratio<T>, y: Ratio<T>) -> Self {
        Self { n, x, y }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn x(&self) -> &Ratio<T> {
        &self.x
    }

    pub fn y(&self) -> &Ratio<T> {
        &self.y
    }
}

fn scalar<T: RationalScalar>(v: u64) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow("rational solution"))
}

fn ratio_pow<T: RationalScalar>(r: &Ratio<T>, exp: u64) -> Result<Ratio<T>> {
    let exp = usize::try_from(exp).map_err(|_| Error::Overflow("rational solution"))?;
    let numer = checked_pow(r.numer().clone(), exp).ok_or(Error::Overflow("rational solution"))?;
    let denom = checked_pow(r.denom().clone(), exp).ok_or(Error::Overflow("rational solution"))?;
    Ok(Ratio::new(numer, denom))
}

/// The `n`-th solution, in lowest terms.
pub fn rational_solution<T: RationalScalar>(n: u64, guard: &Guard) -> Result<RationalSolution<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let n1 = n
        .checked_add(1)
        .ok_or(Error::Overflow("rational solution"))?;
    // (n+1)^(n+1) is the widest numerator produced.
    guard.pow(&BigUint::from(n1), &BigUint::from(n1))?;
    let r = Ratio::new(scalar::<T>(n1)?, scalar::<T>(n)?);
    Ok(RationalSolution {
        n,
        x: ratio_pow(&r, n)?,
        y: ratio_pow(&r, n1)?,
    })
}

fn widen<T: RationalScalar>(r: &Ratio<T>) -> Ratio<BigUint> {
    Ratio::new(r.numer().clone().into(), r.denom().clone().into())
}

/// Checks that `x = r^n` and `n·y = (n+1)·x` with `r = (n+1)/n`.
///
/// Writing `x = r^n`, `y = r^(n+1)` gives `x^y = r^(n·y)` and
/// `y^x = r^((n+1)·x)`, so the second identity is exactly `x^y = y^x`.
/// Evaluated in arbitrary precision whatever `T` is.
pub fn verify_rational_solution<T: RationalScalar>(s: &RationalSolution<T>) -> bool {
    if s.n == 0 {
        return false;
    }
    let n = BigUint::from(s.n);
    let n1 = &n + 1u32;
    let r = Ratio::new(n1.clone(), n.clone());
    let Ok(exp) = usize::try_from(s.n) else {
        return false;
    };
    let x = widen(&s.x);
    let y = widen(&s.y);
    let r_n = num_traits::pow(r, exp);
    x == r_n && Ratio::from_integer(n) * y == Ratio::from_integer(n1) * x
}

/// A rational which is not an integer.
pub fn is_proper_rational<T: RationalScalar>(r: &Ratio<T>) -> bool {
    !r.denom().is_one()
}
