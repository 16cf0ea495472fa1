//! The five three-variable exponential equations and the two-variable
//! equation `x^y = y^x`, as total predicates over positive integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactpow::{power_equal, Guard, PowerExpr};

/// Which equation a triple (or pair) is fed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EquationId {
    /// `x^(y^z) = x^(y·z)`
    E1,
    /// `x^(y^z) = x^(z^y)`
    E2,
    /// `x^(y^z) = y^(x·z)`
    E3,
    /// `x^(y·z) = y^(x·z)`
    E4,
    /// `x^(y^z) = z^(x·y)`
    E5,
    /// `x^y = y^x` over pairs.
    Key2,
}

impl EquationId {
    pub const TRIPLE_EQUATIONS: [EquationId; 5] =
        [Self::E1, Self::E2, Self::E3, Self::E4, Self::E5];

    pub fn tag(self) -> &'static str {
        match self {
            Self::E1 => "E1",
            Self::E2 => "E2",
            Self::E3 => "E3",
            Self::E4 => "E4",
            Self::E5 => "E5",
            Self::Key2 => "KEY2",
        }
    }

    pub fn is_triple_equation(self) -> bool {
        self != Self::Key2
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for EquationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e1" => Ok(Self::E1),
            "e2" => Ok(Self::E2),
            "e3" => Ok(Self::E3),
            "e4" => Ok(Self::E4),
            "e5" => Ok(Self::E5),
            "key2" => Ok(Self::Key2),
            _ => Err(Error::UnknownEquation(s.to_string())),
        }
    }
}

impl Serialize for EquationId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

/// An ordered triple of positive integers. Orders lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl Triple {
    pub fn new(x: u64, y: u64, z: u64) -> Result<Self> {
        if x == 0 || y == 0 || z == 0 {
            return Err(Error::InvalidArgument(format!(
                "triple ({x},{y},{z}) must have positive components"
            )));
        }
        Ok(Self { x, y, z })
    }

    pub fn max_coord(&self) -> u64 {
        self.x.max(self.y).max(self.z)
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.x, self.y, self.z]
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Parses `x,y,z` (no spaces, strictly positive).
impl FromStr for Triple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("triple `{s}` is not of the form x,y,z"));
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut coords = [0u64; 3];
        for (slot, part) in coords.iter_mut().zip(&parts) {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            *slot = part.parse().map_err(|_| bad())?;
        }
        Triple::new(coords[0], coords[1], coords[2])
    }
}

impl Serialize for Triple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_array().serialize(serializer)
    }
}

fn pow_exp(base: u64, exp: u64, guard: &Guard) -> Result<BigUint> {
    guard.pow(&BigUint::from(base), &BigUint::from(exp))
}

fn product(a: u64, b: u64) -> BigUint {
    BigUint::from(a) * b
}

/// Left and right sides of a three-variable equation at `t`.
pub fn sides(eq: EquationId, t: Triple, guard: &Guard) -> Result<(PowerExpr<u64>, PowerExpr<u64>)> {
    let Triple { x, y, z } = t;
    let (lhs, rhs) = match eq {
        EquationId::E1 => ((x, pow_exp(y, z, guard)?), (x, product(y, z))),
        EquationId::E2 => ((x, pow_exp(y, z, guard)?), (x, pow_exp(z, y, guard)?)),
        EquationId::E3 => ((x, pow_exp(y, z, guard)?), (y, product(x, z))),
        EquationId::E4 => ((x, product(y, z)), (y, product(x, z))),
        EquationId::E5 => ((x, pow_exp(y, z, guard)?), (z, product(x, y))),
        EquationId::Key2 => return Err(Error::PairEquation),
    };
    Ok((PowerExpr::new(lhs.0, lhs.1)?, PowerExpr::new(rhs.0, rhs.1)?))
}

/// Whether `t` solves `eq`.
pub fn satisfies(eq: EquationId, t: Triple, guard: &Guard) -> Result<bool> {
    let (lhs, rhs) = sides(eq, t, guard)?;
    power_equal(&lhs, &rhs, guard)
}

/// Whether `x^y = y^x`.
pub fn satisfies_pair(x: u64, y: u64, guard: &Guard) -> Result<bool> {
    if x == 0 || y == 0 {
        return Err(Error::InvalidArgument(format!(
            "pair ({x},{y}) must have positive components"
        )));
    }
    power_equal(&PowerExpr::new(x, y)?, &PowerExpr::new(y, x)?, guard)
}
