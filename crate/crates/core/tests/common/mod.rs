#![allow(dead_code)]

use proptest::prelude::*;

/// Membership over `[0, window)` by the closure recurrence
/// `n in S <=> n == 0 or n - a in S for some generator a <= n`.
pub fn closure(gens: &[u64], window: usize) -> Vec<bool> {
    let mut m = vec![false; window];
    m[0] = true;
    for n in 1..window {
        m[n] = gens.iter().any(|&a| (a as usize) <= n && m[n - a as usize]);
    }
    m
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Window past the conductor, from Schur's bound
/// `F <= (min - 1)(max - 1) - 1` for coprime generator sets.
pub fn safe_window(gens: &[u64]) -> usize {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    (lo * hi + hi + 2) as usize
}

pub fn brute_gaps(gens: &[u64]) -> Vec<u64> {
    let m = closure(gens, safe_window(gens));
    (0..m.len() as u64).filter(|&n| !m[n as usize]).collect()
}

/// Residual set by direct scan of a generous window, independent of the
/// conductor-based cutoff.
pub fn brute_residual(gens: &[u64], shifts: &[u64]) -> Vec<u64> {
    let w = safe_window(gens) + *shifts.iter().max().unwrap() as usize * 2;
    let m = closure(gens, w);
    (0..w)
        .filter(|&n| m[n] && !shifts.iter().any(|&s| n >= s as usize && m[n - s as usize]))
        .map(|n| n as u64)
        .collect()
}

/// Coprime generator sets with entries in `[2, 30]`.
pub fn coprime_gens() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::btree_set(2u64..=30, 2..=5)
        .prop_map(|s| s.into_iter().collect::<Vec<_>>())
        .prop_filter("gcd 1", |v| v.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}
