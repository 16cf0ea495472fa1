//! Closed-form solution families of the five equations.
//!
//! Each family is a membership predicate plus an exact enumerator of its
//! members inside the inclusive box `[1..N]^3`. Families are looked up by
//! [`FamilyId`]; the two-variable equation has its own [`PairFamilyId`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::equations::{EquationId, Triple};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    T1S1,
    T1S2,
    T1S3,
    T2S1,
    T2S2,
    T2S3,
    T2S4,
    T2S5,
    T3S1,
    T3S2,
    T3S3,
    T3S4,
    T3S5,
    T4S1,
    T4S2,
    T4S3,
    T4S4,
    T4S5,
    T4S6,
    T4S7,
    T5A,
    T5B,
    T5C,
}

impl FamilyId {
    pub const ALL: [FamilyId; 23] = [
        Self::T1S1,
        Self::T1S2,
        Self::T1S3,
        Self::T2S1,
        Self::T2S2,
        Self::T2S3,
        Self::T2S4,
        Self::T2S5,
        Self::T3S1,
        Self::T3S2,
        Self::T3S3,
        Self::T3S4,
        Self::T3S5,
        Self::T4S1,
        Self::T4S2,
        Self::T4S3,
        Self::T4S4,
        Self::T4S5,
        Self::T4S6,
        Self::T4S7,
        Self::T5A,
        Self::T5B,
        Self::T5C,
    ];

    pub fn tag(self) -> &'static str {
        use FamilyId::*;
        match self {
            T1S1 => "T1.S1",
            T1S2 => "T1.S2",
            T1S3 => "T1.S3",
            T2S1 => "T2.S1",
            T2S2 => "T2.S2",
            T2S3 => "T2.S3",
            T2S4 => "T2.S4",
            T2S5 => "T2.S5",
            T3S1 => "T3.S1",
            T3S2 => "T3.S2",
            T3S3 => "T3.S3",
            T3S4 => "T3.S4",
            T3S5 => "T3.S5",
            T4S1 => "T4.S1",
            T4S2 => "T4.S2",
            T4S3 => "T4.S3",
            T4S4 => "T4.S4",
            T4S5 => "T4.S5",
            T4S6 => "T4.S6",
            T4S7 => "T4.S7",
            T5A => "T5.A",
            T5B => "T5.B",
            T5C => "T5.C",
        }
    }

    /// Human-readable shape of the family.
    pub fn shape(self) -> &'static str {
        use FamilyId::*;
        match self {
            T1S1 | T2S1 => "(1,b,c)",
            T1S2 => "(a,b,1), a >= 2",
            T1S3 => "(a,2,2), a >= 2",
            T2S2 => "(a,1,1), a >= 2",
            T2S3 => "(a,b,b), a >= 2, b >= 2",
            T2S4 => "(a,4,2), a >= 2",
            T2S5 => "(a,2,4), a >= 2",
            T3S1 | T4S1 => "(1,1,c)",
            T3S2 | T4S2 => "(a,a,1), a >= 2",
            T3S3 | T4S3 => "(4,2,1)",
            T3S4 | T4S4 => "(2,4,1)",
            T3S5 => "(b^c,b,c), b >= 2, c >= 2",
            T4S5 => "(a,a,c), a >= 2, c >= 2",
            T4S6 => "(4,2,c), c >= 2",
            T4S7 => "(2,4,c), c >= 2",
            T5A => "(1,b,1)",
            T5B => "(2,2,2)",
            T5C => "(b^b,b,b), b >= 2",
        }
    }

    pub fn equation(self) -> EquationId {
        use FamilyId::*;
        match self {
            T1S1 | T1S2 | T1S3 => EquationId::E1,
            T2S1 | T2S2 | T2S3 | T2S4 | T2S5 => EquationId::E2,
            T3S1 | T3S2 | T3S3 | T3S4 | T3S5 => EquationId::E3,
            T4S1 | T4S2 | T4S3 | T4S4 | T4S5 | T4S6 | T4S7 => EquationId::E4,
            T5A | T5B | T5C => EquationId::E5,
        }
    }

    /// Families listed for `eq`, in declaration order. Empty for KEY2.
    pub fn of(eq: EquationId) -> impl Iterator<Item = FamilyId> {
        Self::ALL.into_iter().filter(move |id| id.equation() == eq)
    }

    /// Membership predicate.
    pub fn contains(self, t: Triple) -> bool {
        use FamilyId::*;
        let Triple { x, y, z } = t;
        match self {
            T1S1 | T2S1 => x == 1,
            T1S2 => x >= 2 && z == 1,
            T1S3 => x >= 2 && y == 2 && z == 2,
            T2S2 => x >= 2 && y == 1 && z == 1,
            T2S3 => x >= 2 && y >= 2 && y == z,
            T2S4 => x >= 2 && y == 4 && z == 2,
            T2S5 => x >= 2 && y == 2 && z == 4,
            T3S1 | T4S1 => x == 1 && y == 1,
            T3S2 | T4S2 => x >= 2 && x == y && z == 1,
            T3S3 | T4S3 => (x, y, z) == (4, 2, 1),
            T3S4 | T4S4 => (x, y, z) == (2, 4, 1),
            T3S5 => y >= 2 && z >= 2 && exact_pow(y, z) == Some(x),
            T4S5 => x >= 2 && x == y && z >= 2,
            T4S6 => x == 4 && y == 2 && z >= 2,
            T4S7 => x == 2 && y == 4 && z >= 2,
            T5A => x == 1 && z == 1,
            T5B => (x, y, z) == (2, 2, 2),
            T5C => y >= 2 && y == z && exact_pow(y, y) == Some(x),
        }
    }

    /// Every member with all coordinates in `[1, bound]`, sorted.
    pub fn members(self, bound: u64) -> Vec<Triple> {
        use FamilyId::*;
        let n = bound;
        let mut out: Vec<Triple> = match self {
            T1S1 | T2S1 => grid(1..=1, 1..=n, 1..=n),
            T1S2 => grid(2..=n, 1..=n, 1..=1),
            T1S3 => grid(2..=n, 2..=2, 2..=2),
            T2S2 => grid(2..=n, 1..=1, 1..=1),
            T2S3 => (2..=n)
                .flat_map(|a| (2..=n).map(move |b| tri(a, b, b)))
                .collect(),
            T2S4 => grid(2..=n, 4..=4, 2..=2),
            T2S5 => grid(2..=n, 2..=2, 4..=4),
            T3S1 | T4S1 => grid(1..=1, 1..=1, 1..=n),
            T3S2 | T4S2 => (2..=n).map(|a| tri(a, a, 1)).collect(),
            T3S3 | T4S3 => grid(4..=4, 2..=2, 1..=1),
            T3S4 | T4S4 => grid(2..=2, 4..=4, 1..=1),
            T3S5 => {
                let mut v = Vec::new();
                for b in 2..=n {
                    for c in 2..=n {
                        match exact_pow(b, c) {
                            Some(x) if x <= n => v.push(tri(x, b, c)),
                            _ => break,
                        }
                    }
                }
                v
            }
            T4S5 => (2..=n)
                .flat_map(|a| (2..=n).map(move |c| tri(a, a, c)))
                .collect(),
            T4S6 => grid(4..=4, 2..=2, 2..=n),
            T4S7 => grid(2..=2, 4..=4, 2..=n),
            T5A => grid(1..=1, 1..=n, 1..=1),
            T5B => grid(2..=2, 2..=2, 2..=2),
            T5C => (2..=n)
                .map_while(|b| exact_pow(b, b).filter(|&x| x <= n).map(|x| tri(x, b, b)))
                .collect(),
        };
        out.retain(|t| t.max_coord() <= bound);
        out.sort_unstable();
        out
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

fn tri(x: u64, y: u64, z: u64) -> Triple {
    Triple { x, y, z }
}

fn grid(
    xs: std::ops::RangeInclusive<u64>,
    ys: std::ops::RangeInclusive<u64>,
    zs: std::ops::RangeInclusive<u64>,
) -> Vec<Triple> {
    let mut v = Vec::new();
    for x in xs {
        for y in ys.clone() {
            for z in zs.clone() {
                v.push(tri(x, y, z));
            }
        }
    }
    v
}

/// `base^exp` if it fits in a `u64`.
fn exact_pow(base: u64, exp: u64) -> Option<u64> {
    base.checked_pow(u32::try_from(exp).ok()?)
}

/// In-box members of a family, looked up by its tag.
pub fn family_members(id: &str, bound: u64) -> Result<Vec<Triple>> {
    Ok(id.parse::<FamilyId>()?.members(bound))
}

/// All families of `eq` containing `t`. Empty means `t` is not a listed
/// solution; it may still solve `eq` (only possible for E5).
pub fn classify(eq: EquationId, t: Triple) -> Vec<FamilyId> {
    FamilyId::of(eq).filter(|id| id.contains(t)).collect()
}

/// Union of all in-box family members for `eq`, deduplicated and sorted.
pub fn union_members(eq: EquationId, bound: u64) -> Result<Vec<Triple>> {
    if !eq.is_triple_equation() {
        return Err(Error::PairEquation);
    }
    let set: BTreeSet<Triple> = FamilyId::of(eq).flat_map(|id| id.members(bound)).collect();
    Ok(set.into_iter().collect())
}

/// Families of the two-variable equation `x^y = y^x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairFamilyId {
    /// `(a,a)`
    Diagonal,
    /// `(4,2)`
    FourTwo,
    /// `(2,4)`
    TwoFour,
}

impl PairFamilyId {
    pub const ALL: [PairFamilyId; 3] = [Self::Diagonal, Self::FourTwo, Self::TwoFour];

    pub fn tag(self) -> &'static str {
        match self {
            Self::Diagonal => "R2.S1",
            Self::FourTwo => "R2.S2",
            Self::TwoFour => "R2.S3",
        }
    }

    pub fn contains(self, (x, y): (u64, u64)) -> bool {
        match self {
            Self::Diagonal => x >= 1 && x == y,
            Self::FourTwo => (x, y) == (4, 2),
            Self::TwoFour => (x, y) == (2, 4),
        }
    }

    pub fn members(self, bound: u64) -> Vec<(u64, u64)> {
        match self {
            Self::Diagonal => (1..=bound).map(|a| (a, a)).collect(),
            Self::FourTwo if bound >= 4 => vec![(4, 2)],
            Self::TwoFour if bound >= 4 => vec![(2, 4)],
            _ => Vec::new(),
        }
    }
}

/// Union of the pair families inside `[1..bound]^2`, sorted.
pub fn pair_union_members(bound: u64) -> Vec<(u64, u64)> {
    let set: BTreeSet<(u64, u64)> = PairFamilyId::ALL
        .into_iter()
        .flat_map(|id| id.members(bound))
        .collect();
    set.into_iter().collect()
}
