//! Exact equality of very large powers.
//!
//! A power `a^E` is never evaluated. Instead the base is factorized into
//! primes and every multiplicity is scaled by `E`, which yields a canonical
//! form: two powers denote the same integer exactly when their canonical
//! forms coincide (unique factorization).
//!
//! Everything here is generic over the unsigned scalar used for bases and
//! primes (`u32`, `u64`, `u128`, [`BigUint`], ...). Exponents and
//! multiplicities are always arbitrary precision.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default guard limit: 2^20 bits.
pub const DEFAULT_GUARD_BITS: u64 = 1 << 20;

/// Unsigned integer scalar usable as a base or a prime.
pub trait Natural:
    Integer + Clone + fmt::Debug + fmt::Display + Into<BigUint> + Send + Sync
{
}

impl<T> Natural for T where
    T: Integer + Clone + fmt::Debug + fmt::Display + Into<BigUint> + Send + Sync
{
}

/// Upper bound on the bit-length of exponents and materialized values.
///
/// Exceeding the limit is always reported as [`Error::ExponentTooLarge`];
/// nothing is truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Guard {
    max_bits: u64,
}

impl Default for Guard {
    fn default() -> Self {
        Self::new(DEFAULT_GUARD_BITS)
    }
}

impl Guard {
    pub const fn new(max_bits: u64) -> Self {
        Self { max_bits }
    }

    pub const fn max_bits(&self) -> u64 {
        self.max_bits
    }

    pub fn check_bits(&self, required: u64) -> Result<()> {
        if required > self.max_bits {
            Err(Error::ExponentTooLarge {
                required,
                limit: self.max_bits,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_exponent(&self, exponent: &BigUint) -> Result<()> {
        self.check_bits(exponent.bits())
    }

    /// Exact `base^exp`. Fails iff the result would have more than
    /// `max_bits` bits; the check happens before any large allocation.
    pub fn pow(&self, base: &BigUint, exp: &BigUint) -> Result<BigUint> {
        if exp.is_zero() || base.is_one() {
            return Ok(BigUint::one());
        }
        if base.is_zero() {
            return Ok(BigUint::zero());
        }
        // bits(base^e) >= (bits(base) - 1) * e + 1
        let lower = exp * (base.bits() - 1) + 1u32;
        if lower > BigUint::from(self.max_bits) {
            return Err(Error::ExponentTooLarge {
                required: lower.to_u64().unwrap_or(u64::MAX),
                limit: self.max_bits,
            });
        }
        // lower <= max_bits, so exp fits in u64.
        let e = exp.to_u64().ok_or(Error::Overflow("guarded pow"))?;
        let value = Pow::pow(base, e);
        self.check_bits(value.bits())?;
        Ok(value)
    }
}

/// Direct evaluation of `base^exp` under the guard.
pub fn big_pow<T: Natural>(base: &T, exp: &BigUint, guard: &Guard) -> Result<BigUint> {
    guard.pow(&base.clone().into(), exp)
}

/// Prime factorization: prime → multiplicity. The empty map is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization<T> {
    factors: BTreeMap<T, BigUint>,
}

impl<T: Natural> Factorization<T> {
    pub fn one() -> Self {
        Self {
            factors: BTreeMap::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct primes.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn multiplicity(&self, prime: &T) -> BigUint {
        self.factors.get(prime).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, &BigUint)> {
        self.factors.iter()
    }

    /// Factorization of `self^exp`.
    pub fn pow(&self, exp: &BigUint) -> Self {
        if exp.is_zero() {
            return Self::one();
        }
        Self {
            factors: self
                .factors
                .iter()
                .map(|(p, m)| (p.clone(), m * exp))
                .collect(),
        }
    }

    /// Factorization of the product of two factorized integers.
    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (p, m) in &other.factors {
            *factors.entry(p.clone()).or_default() += m;
        }
        Self { factors }
    }

    /// Re-multiplies `∏ p^m`, refusing results wider than the guard.
    pub fn value(&self, guard: &Guard) -> Result<BigUint> {
        let mut acc = BigUint::one();
        for (p, m) in &self.factors {
            acc *= big_pow(p, m, guard)?;
            guard.check_bits(acc.bits())?;
        }
        Ok(acc)
    }
}

/// Factorizes `n` by trial division up to `√n`.
///
/// # Panics
///
/// If `n` is zero.
pub fn factorize<T: Natural>(n: &T) -> Factorization<T> {
    assert!(!n.is_zero(), "factorize requires a positive integer");
    let mut rest = n.clone();
    let mut factors = BTreeMap::new();
    let two = T::one() + T::one();
    let mut d = two.clone();
    // `d <= rest / d` rather than `d * d <= rest` so fixed-width scalars never overflow.
    while d <= rest.clone() / d.clone() {
        let mut count = 0u64;
        while (rest.clone() % d.clone()).is_zero() {
            rest = rest / d.clone();
            count += 1;
        }
        if count > 0 {
            factors.insert(d.clone(), BigUint::from(count));
        }
        d = if d == two {
            d + T::one()
        } else {
            d + two.clone()
        };
    }
    if rest > T::one() {
        *factors.entry(rest).or_default() += 1u32;
    }
    Factorization { factors }
}

/// The power `base^exponent`, kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerExpr<T> {
    base: T,
    exponent: BigUint,
}

impl<T: Natural> PowerExpr<T> {
    /// Both `base` and `exponent` must be at least 1.
    pub fn new(base: T, exponent: impl Into<BigUint>) -> Result<Self> {
        let exponent = exponent.into();
        if base.is_zero() {
            return Err(Error::InvalidArgument("power base must be >= 1".into()));
        }
        if exponent.is_zero() {
            return Err(Error::InvalidArgument("power exponent must be >= 1".into()));
        }
        Ok(Self { base, exponent })
    }

    pub fn base(&self) -> &T {
        &self.base
    }

    pub fn exponent(&self) -> &BigUint {
        &self.exponent
    }

    /// Evaluates the power. Only sensible for small values.
    pub fn evaluate(&self, guard: &Guard) -> Result<BigUint> {
        big_pow(&self.base, &self.exponent, guard)
    }
}

impl<T: fmt::Display> fmt::Display for PowerExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.base, self.exponent)
    }
}

/// Prime-exponent normal form of a power: prime → total multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalPower<T> {
    factors: BTreeMap<T, BigUint>,
}

impl<T: Natural> CanonicalPower<T> {
    /// Canonical form of `(∏ p^m)^exponent` from an already known
    /// factorization of the base. Lets callers skip factorizing bases such
    /// as `b^c` that they built themselves.
    pub fn from_factored(
        base: &Factorization<T>,
        exponent: &BigUint,
        guard: &Guard,
    ) -> Result<Self> {
        guard.check_exponent(exponent)?;
        Ok(Self {
            factors: base.pow(exponent).factors,
        })
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn multiplicity(&self, prime: &T) -> BigUint {
        self.factors.get(prime).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, &BigUint)> {
        self.factors.iter()
    }
}

impl<T: fmt::Display> fmt::Display for CanonicalPower<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{p}^{m}")?;
        }
        Ok(())
    }
}

pub fn canonicalize<T: Natural>(p: &PowerExpr<T>, guard: &Guard) -> Result<CanonicalPower<T>> {
    CanonicalPower::from_factored(&factorize(&p.base), &p.exponent, guard)
}

/// Whether two powers denote the same integer.
pub fn power_equal<T: Natural>(
    lhs: &PowerExpr<T>,
    rhs: &PowerExpr<T>,
    guard: &Guard,
) -> Result<bool> {
    guard.check_exponent(&lhs.exponent)?;
    guard.check_exponent(&rhs.exponent)?;
    if lhs.base == rhs.base {
        return Ok(lhs.base.is_one() || lhs.exponent == rhs.exponent);
    }
    Ok(canonicalize(lhs, guard)? == canonicalize(rhs, guard)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fact(pairs: &[(u64, u64)]) -> Vec<(u64, BigUint)> {
        pairs.iter().map(|&(p, m)| (p, BigUint::from(m))).collect()
    }

    fn listed<T: Natural>(f: &Factorization<T>) -> Vec<(T, BigUint)> {
        f.iter().map(|(p, m)| (p.clone(), m.clone())).collect()
    }

    fn power(base: u64, exp: u64) -> PowerExpr<u64> {
        PowerExpr::new(base, exp).unwrap()
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(&1u64).is_one());
        assert_eq!(listed(&factorize(&360u64)), fact(&[(2, 3), (3, 2), (5, 1)]));
        assert_eq!(listed(&factorize(&64u64)), fact(&[(2, 6)]));
        assert_eq!(listed(&factorize(&97u64)), fact(&[(97, 1)]));
    }

    #[test]
    fn factorize_round_trip_to_100k() {
        let guard = Guard::default();
        for n in 1u64..=100_000 {
            let f = factorize(&n);
            assert_eq!(f.value(&guard).unwrap(), BigUint::from(n), "n = {n}");
        }
    }

    #[test]
    fn factorize_is_generic_over_scalar() {
        assert_eq!(
            listed(&factorize(&360u32)),
            vec![(2u32, 3u32.into()), (3, 2u32.into()), (5, 1u32.into())]
        );
        let big = BigUint::from(2u32).pow(70u32) * 3u32;
        let f = factorize(&big);
        assert_eq!(f.multiplicity(&BigUint::from(2u32)), BigUint::from(70u32));
        assert_eq!(f.multiplicity(&BigUint::from(3u32)), BigUint::one());
        // largest 32-bit prime; trial division runs d up to ~2^32 here
        let p = 4_294_967_291u64;
        assert_eq!(listed(&factorize(&p)), fact(&[(p, 1)]));
        assert_eq!(listed(&factorize(&(p * 2))), fact(&[(2, 1), (p, 1)]));
    }

    #[test]
    #[should_panic]
    fn factorize_zero_panics() {
        factorize(&0u64);
    }

    #[test]
    fn canonicalize_examples() {
        let g = Guard::default();
        let one = PowerExpr::new(1u64, 1_000_000_000u64).unwrap();
        assert!(canonicalize(&one, &g).unwrap().is_one());

        let c = canonicalize(&power(4, 3), &g).unwrap();
        assert_eq!(
            c.iter().map(|(p, m)| (*p, m.clone())).collect::<Vec<_>>(),
            fact(&[(2, 6)])
        );

        let c = canonicalize(&power(12, 5), &g).unwrap();
        assert_eq!(
            c.iter().map(|(p, m)| (*p, m.clone())).collect::<Vec<_>>(),
            fact(&[(2, 10), (3, 5)])
        );
        assert_eq!(c.to_string(), "2^10 * 3^5");
        assert_eq!(
            CanonicalPower::from_factored(&factorize(&12u64), &5u32.into(), &g).unwrap(),
            c
        );
    }

    #[test]
    fn canonicalize_rejects_exponent_past_guard() {
        let g = Guard::new(16);
        let p = PowerExpr::new(3u64, BigUint::one() << 16usize).unwrap();
        assert_eq!(
            canonicalize(&p, &g),
            Err(Error::ExponentTooLarge {
                required: 17,
                limit: 16
            })
        );
    }

    #[test]
    fn power_equal_examples() {
        let g = Guard::default();
        assert!(power_equal(&power(2, 4), &power(4, 2), &g).unwrap());
        assert!(power_equal(&power(7, 123), &power(7, 123), &g).unwrap());
        assert!(!power_equal(&power(2, 9), &power(2, 6), &g).unwrap());
        assert!(power_equal(&power(1, 9), &power(1, 6), &g).unwrap());
        assert!(!power_equal(&power(1, 9), &power(2, 6), &g).unwrap());
        assert!(!power_equal(&power(6, 2), &power(2, 6), &g).unwrap());
        assert!(power_equal(&power(8, 8), &power(2, 24), &g).unwrap());
    }

    #[test]
    fn power_expr_rejects_zero() {
        assert!(PowerExpr::new(0u64, 3u32).is_err());
        assert!(PowerExpr::new(3u64, 0u32).is_err());
    }

    #[test]
    fn big_pow_examples() {
        let g = Guard::default();
        assert_eq!(
            big_pow(&2u64, &10u32.into(), &g).unwrap(),
            BigUint::from(1024u32)
        );
        assert_eq!(
            big_pow(&17u64, &BigUint::zero(), &g).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            big_pow(&1u64, &1_000_000u32.into(), &g).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn big_pow_guard_is_exact_at_the_boundary() {
        let g = Guard::new(64);
        // 2^63 has 64 bits, 2^64 has 65.
        assert!(big_pow(&2u64, &63u32.into(), &g).is_ok());
        assert_eq!(
            big_pow(&2u64, &64u32.into(), &g),
            Err(Error::ExponentTooLarge {
                required: 65,
                limit: 64
            })
        );
        // 3^40 has 64 bits, 3^41 has 65.
        assert_eq!(big_pow(&3u64, &40u32.into(), &g).unwrap().bits(), 64);
        assert!(big_pow(&3u64, &41u32.into(), &g).is_err());
        // An astronomically large exponent is refused without allocating.
        assert!(big_pow(&2u64, &(BigUint::one() << 200usize), &g).is_err());
    }

    #[test]
    fn factorization_mul_and_pow() {
        let a = factorize(&12u64);
        let b = factorize(&18u64);
        assert_eq!(a.mul(&b), factorize(&216u64));
        assert_eq!(a.pow(&3u32.into()), factorize(&1728u64));
        assert!(a.pow(&BigUint::zero()).is_one());
    }
}
