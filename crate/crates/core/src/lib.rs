//! Exact deciders for the exponential Diophantine equations
//!
//! ```text
//! E1: x^(y^z) = x^(y·z)      E4: x^(y·z) = y^(x·z)
//! E2: x^(y^z) = x^(z^y)      E5: x^(y^z) = z^(x·y)
//! E3: x^(y^z) = y^(x·z)      KEY2: x^y = y^x
//! ```
//!
//! over the positive integers, the closed-form solution families known for
//! each, and a brute-force oracle that checks the families against every
//! triple of a bounded box.
//!
//! Powers are compared through their prime-exponent normal form
//! ([`exactpow`]), so sides such as `24^(24^24)` are never evaluated.
//! The arithmetic core is generic over the unsigned scalar; the aliases
//! below fix the scalars used by the equations and the CLI.

pub mod cli;
pub mod equations;
pub mod error;
pub mod exactpow;
pub mod families;
pub mod oracle;
pub mod rationals;

pub use equations::{satisfies, satisfies_pair, sides, EquationId, Triple};
pub use error::{Error, Result};
pub use exactpow::{big_pow, canonicalize, factorize, power_equal, Guard, Natural};
pub use families::{classify, family_members, union_members, FamilyId, PairFamilyId};
pub use oracle::{
    check_lemma1, enumerate_solutions, search_eq5_open, verify_identity_9, verify_result2,
    verify_theorem, OpenSearchReport, PairReport, SearchConfig, VerificationReport,
};
pub use rationals::{is_proper_rational, rational_solution, verify_rational_solution};

use num_bigint::BigUint;

/// Power with a machine-word base, as produced by the equations.
pub type PowerExpr = exactpow::PowerExpr<u64>;
/// Power with an arbitrary-precision base.
pub type BigPowerExpr = exactpow::PowerExpr<BigUint>;
pub type Factorization = exactpow::Factorization<u64>;
pub type BigFactorization = exactpow::Factorization<BigUint>;
pub type CanonicalPower = exactpow::CanonicalPower<u64>;
pub type BigCanonicalPower = exactpow::CanonicalPower<BigUint>;
/// Positive rational in lowest terms.
pub type Rational = num_rational::Ratio<BigUint>;
pub type RationalSolution = rationals::RationalSolution<BigUint>;
