//! Test-only oracles that share no code path with the factorization engine.
#![allow(dead_code)]

use num_bigint::BigUint;
use num_integer::Roots;

use expdio::{EquationId, Triple};

/// `base^exp` by repeated multiplication.
pub fn naive_pow(base: u64, exp: u64) -> BigUint {
    let b = BigUint::from(base);
    let mut acc = BigUint::from(1u32);
    for _ in 0..exp {
        acc *= &b;
    }
    acc
}

/// Writes `a >= 2` as `r^k` with `k` maximal (so `r` is not itself a
/// perfect power). Uses integer k-th roots only.
pub fn minimal_root(a: u64) -> (u64, u64) {
    assert!(a >= 2);
    for k in (2..=63u32).rev() {
        let r = a.nth_root(k);
        if r >= 2 && r.checked_pow(k) == Some(a) {
            return (r, u64::from(k));
        }
    }
    (a, 1)
}

/// `a^e = b^f` decided through minimal roots: for `a, b >= 2`,
/// `a^e = b^f` iff both share the same minimal root `r` and
/// `k_a·e = k_b·f`.
pub fn powers_equal_by_roots(a: u64, e: &BigUint, b: u64, f: &BigUint) -> bool {
    match (a == 1, b == 1) {
        (true, true) => true,
        (true, false) | (false, true) => false,
        (false, false) => {
            let (ra, ka) = minimal_root(a);
            let (rb, kb) = minimal_root(b);
            ra == rb && e * ka == f * kb
        }
    }
}

fn exp_pow(b: u64, e: u64) -> BigUint {
    naive_pow(b, e)
}

/// Bases and exponents of both sides, computed independently of `sides`.
pub fn raw_sides(eq: EquationId, t: Triple) -> ((u64, BigUint), (u64, BigUint)) {
    let Triple { x, y, z } = t;
    let prod = |a: u64, b: u64| BigUint::from(a) * b;
    match eq {
        EquationId::E1 => ((x, exp_pow(y, z)), (x, prod(y, z))),
        EquationId::E2 => ((x, exp_pow(y, z)), (x, exp_pow(z, y))),
        EquationId::E3 => ((x, exp_pow(y, z)), (y, prod(x, z))),
        EquationId::E4 => ((x, prod(y, z)), (y, prod(x, z))),
        EquationId::E5 => ((x, exp_pow(y, z)), (z, prod(x, y))),
        EquationId::Key2 => unreachable!("pair equation"),
    }
}

/// Exact decision of `eq` at `t` via minimal roots.
pub fn solves_by_roots(eq: EquationId, t: Triple) -> bool {
    let ((a, e), (b, f)) = raw_sides(eq, t);
    powers_equal_by_roots(a, &e, b, &f)
}

/// Direct evaluation of both sides when each has at most `max_bits` bits.
pub fn solves_by_evaluation(eq: EquationId, t: Triple, max_bits: u64) -> Option<bool> {
    let ((a, e), (b, f)) = raw_sides(eq, t);
    let fits = |base: u64, exp: &BigUint| {
        let bits = 64 - base.leading_zeros() as u64;
        exp.bits() <= 40 && BigUint::from(bits) * exp <= BigUint::from(max_bits)
    };
    if !fits(a, &e) || !fits(b, &f) {
        return None;
    }
    let e: u32 = e.try_into().ok()?;
    let f: u32 = f.try_into().ok()?;
    Some(BigUint::from(a).pow(e) == BigUint::from(b).pow(f))
}

pub fn triple(x: u64, y: u64, z: u64) -> Triple {
    Triple::new(x, y, z).unwrap()
}

pub fn cube(bound: u64) -> impl Iterator<Item = Triple> {
    (1..=bound)
        .flat_map(move |x| (1..=bound).flat_map(move |y| (1..=bound).map(move |z| triple(x, y, z))))
}
