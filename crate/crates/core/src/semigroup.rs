//! Numerical semigroups with finitely many gaps.
//!
//! A [`NumericalSemigroup`] keeps the generating set exactly as supplied and
//! materializes membership as a bit-set over `[0, conductor]`; everything at
//! or above the conductor is an element, so the bit-set together with the
//! conductor describes the whole semigroup.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use bitvec::prelude::*;

use crate::error::{Error, Result};

/// Default cap on the number of membership bits a single semigroup may use.
pub const DEFAULT_MAX_BITS: u64 = 1 << 28;

pub(crate) type Bits = BitVec<u64, Lsb0>;

/// A submonoid of the non-negative integers with finite complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    multiplicity: u64,
    conductor: u64,
    genus: u64,
    membership: Bits,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens` under the default memory guard.
    ///
    /// The generators are stored verbatim (order and redundancy included)
    /// since bounds depending on the generating set use them as given.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        Self::from_generators_with_limit(gens, DEFAULT_MAX_BITS)
    }

    pub fn from_generators_with_limit(gens: &[u64], max_bits: u64) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gcd_of(gens);
        if g != 1 {
            return Err(Error::NonCoprimeGenerators(g));
        }
        let multiplicity = *gens.iter().min().expect("non-empty");
        if multiplicity == 1 {
            return Ok(Self::naturals_with_generators(gens.to_vec()));
        }
        // 1..multiplicity are all gaps, so the window is at least that long.
        guard(multiplicity, max_bits)?;

        let apery = apery_by_shortest_paths(gens, multiplicity)?;
        let frobenius = apery.iter().max().expect("non-empty") - multiplicity;
        let conductor = frobenius + 1;
        guard(conductor + 1, max_bits)?;

        let mut membership = Bits::with_capacity(conductor as usize + 1);
        for n in 0..=conductor {
            membership.push(n >= apery[(n % multiplicity) as usize]);
        }
        let genus = membership.count_zeros() as u64;
        Ok(Self {
            generators: gens.to_vec(),
            multiplicity,
            conductor,
            genus,
            membership,
        })
    }

    /// Builds the semigroup whose gap set is `gaps`, checking that the
    /// complement is closed under addition. Generators are the minimal ones.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        if gaps.contains(&0) {
            return Err(Error::InvalidArgument("0 cannot be a gap".into()));
        }
        let top = gaps.iter().copied().max().unwrap_or(0);
        guard(top + 1, DEFAULT_MAX_BITS)?;
        let mut bits = bitvec![u64, Lsb0; 1; top as usize + 1];
        for &g in gaps {
            bits.set(g as usize, false);
        }
        for &g in gaps {
            for a in 1..g {
                if bits[a as usize] && bits[(g - a) as usize] {
                    return Err(Error::InvalidArgument(format!(
                        "gap {g} is the sum of elements {a} and {}",
                        g - a
                    )));
                }
            }
        }
        Ok(Self::from_membership(bits))
    }

    /// Builds a semigroup from a membership window `[0, w]`; every integer
    /// past the window is taken to be an element. The caller guarantees
    /// closure under addition.
    pub(crate) fn from_membership(mut bits: Bits) -> Self {
        debug_assert!(bits.first().is_none_or(|b| *b));
        let conductor = bits.last_zero().map_or(0, |f| f as u64 + 1);
        bits.resize(conductor as usize + 1, true);
        let genus = bits.count_zeros() as u64;
        let multiplicity = bits
            .iter_ones()
            .find(|&n| n > 0)
            .map_or(conductor.max(1), |n| n as u64);
        let mut s = Self {
            generators: Vec::new(),
            multiplicity,
            conductor,
            genus,
            membership: bits,
        };
        s.generators = s.minimal_generators();
        s
    }

    fn naturals_with_generators(generators: Vec<u64>) -> Self {
        Self {
            generators,
            multiplicity: 1,
            conductor: 0,
            genus: 0,
            membership: bitvec![u64, Lsb0; 1; 1],
        }
    }

    /// The semigroup of all non-negative integers, `<1>`.
    pub fn naturals() -> Self {
        Self::naturals_with_generators(vec![1])
    }

    /// The ordinary semigroup `{0, g+1, g+2, ...}` of genus `g`.
    pub fn ordinary(genus: u64) -> Result<Self> {
        let gens: Vec<u64> = (genus + 1..=2 * genus + 1).collect();
        Self::from_generators(&gens)
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Smallest `c` with `[c, inf)` contained in the semigroup.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Largest gap, or -1 for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.conductor == 2 * self.genus
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.membership[n as usize]
    }

    /// Membership for possibly negative integers; negatives are never elements.
    pub fn contains_signed(&self, n: i64) -> bool {
        n >= 0 && self.contains(n as u64)
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.membership.iter_zeros().map(|n| n as u64).collect()
    }

    /// Elements `<= limit` in ascending order.
    pub fn elements_up_to(&self, limit: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=limit).filter(move |&n| self.contains(n))
    }

    /// The `k` smallest nonzero elements.
    pub fn smallest_nonzero(&self, k: usize) -> Vec<u64> {
        (1..).filter(|&n| self.contains(n)).take(k).collect()
    }

    /// `gamma + S`.
    pub fn shifted(&self, shift: u64) -> ShiftSet<'_> {
        ShiftSet { base: self, shift }
    }

    /// For each residue `r` mod `n`, the smallest element congruent to `r`.
    ///
    /// With `n` the multiplicity, `conductor = max - n + 1` and
    /// `genus = sum / n - (n - 1) / 2`.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotAnElement(n));
        }
        guard(n, DEFAULT_MAX_BITS)?;
        Ok((0..n)
            .map(|r| {
                let mut w = r;
                while !self.contains(w) {
                    w += n;
                }
                w
            })
            .collect())
    }

    /// The unique minimal generating set, ascending.
    ///
    /// These are the multiplicity together with the nonzero Apery elements
    /// that are not another Apery element plus a semigroup element.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let m = self.multiplicity;
        if m == 1 {
            return vec![1];
        }
        let mut apery = self.apery_set(m).expect("multiplicity is an element");
        apery.sort_unstable();
        let nonzero = &apery[1..];
        let mut gens = vec![m];
        for (i, &w) in nonzero.iter().enumerate() {
            if !nonzero[..i].iter().any(|&v| self.contains(w - v)) {
                gens.push(w);
            }
        }
        gens.sort_unstable();
        gens
    }

    /// All elements not lying in any of the shifted copies `shift + S`.
    ///
    /// Every element `>= min(shift) + conductor` lies in `min(shift) + S`, so
    /// the scan stops there.
    pub fn residual_set(&self, shifts: &[u64]) -> Result<Vec<u64>> {
        let shifts = self.validated_shifts(shifts)?;
        let window = shifts[0]
            .checked_add(self.conductor)
            .ok_or(Error::Overflow("residual window"))?;
        Ok((0..window)
            .filter(|&n| self.contains(n) && !shifts.iter().any(|&s| self.shifted(s).contains(n)))
            .collect())
    }

    pub fn count_residual(&self, shifts: &[u64]) -> Result<u64> {
        Ok(self.residual_set(shifts)?.len() as u64)
    }

    /// Sorted, deduplicated shifts after checking each is a positive element.
    fn validated_shifts(&self, shifts: &[u64]) -> Result<Vec<u64>> {
        if shifts.is_empty() {
            return Err(Error::EmptyShifts);
        }
        if let Some(&bad) = shifts.iter().find(|&&s| s == 0 || !self.contains(s)) {
            return Err(Error::ShiftNotInSemigroup(bad));
        }
        let mut v = shifts.to_vec();
        v.sort_unstable();
        v.dedup();
        Ok(v)
    }
}

/// A translate `shift + S` of a semigroup.
#[derive(Clone, Copy, Debug)]
pub struct ShiftSet<'a> {
    pub base: &'a NumericalSemigroup,
    pub shift: u64,
}

impl ShiftSet<'_> {
    pub fn contains(&self, n: u64) -> bool {
        n >= self.shift && self.base.contains(n - self.shift)
    }
}

pub fn gcd_of(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| num_integer::gcd(acc, v))
}

pub(crate) fn guard(required: u64, limit: u64) -> Result<()> {
    if required > limit {
        Err(Error::MemoryGuard { required, limit })
    } else {
        Ok(())
    }
}

/// Apery set with respect to `m` as shortest paths in the residue graph
/// mod `m`, one edge per generator.
fn apery_by_shortest_paths(gens: &[u64], m: u64) -> Result<Vec<u64>> {
    let mut steps: Vec<u64> = gens.iter().copied().filter(|a| a % m != 0).collect();
    steps.sort_unstable();
    steps.dedup();

    let mut dist = vec![u64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0u64))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r as usize] {
            continue;
        }
        for &a in &steps {
            let next = (r + a % m) % m;
            let nd = d.checked_add(a).ok_or(Error::Overflow("Apery set"))?;
            if nd < dist[next as usize] {
                dist[next as usize] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn full_semigroup() {
        let s = sg(&[1]);
        assert_eq!((s.genus(), s.conductor(), s.multiplicity()), (0, 0, 1));
        assert!(s.gaps().is_empty());
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.apery_set(1).unwrap(), vec![0]);
        assert_eq!(s.minimal_generators(), vec![1]);
    }

    #[test]
    fn three_five() {
        let s = sg(&[3, 5]);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.genus(), 4);
        assert_eq!(s.conductor(), 8);
        assert_eq!(s.gaps(), vec![1, 2, 4, 7]);
        assert_eq!(
            s.elements_up_to(10).collect::<Vec<_>>(),
            vec![0, 3, 5, 6, 8, 9, 10]
        );
        assert!(!s.contains(7));
        assert!(s.contains(8));
        assert!(s.contains(0));
        assert!(!s.contains_signed(-3));
        assert_eq!(s.apery_set(3).unwrap(), vec![0, 10, 5]);
    }

    #[test]
    fn genus_eight_examples() {
        assert_eq!(sg(&[4, 6, 13]).genus(), 8);
        let s = sg(&[2, 17]);
        assert_eq!(s.gaps(), vec![1, 3, 5, 7, 9, 11, 13, 15]);
        assert_eq!(s.apery_set(2).unwrap(), vec![0, 17]);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::ZeroGenerator)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NonCoprimeGenerators(2))
        );
        assert!(matches!(
            NumericalSemigroup::from_generators_with_limit(&[1000, 1001], 5000),
            Err(Error::MemoryGuard { .. })
        ));
    }

    #[test]
    fn generators_kept_as_supplied() {
        let s = sg(&[5, 3, 8]);
        assert_eq!(s.generators(), &[5, 3, 8]);
        assert_eq!(s.minimal_generators(), vec![3, 5]);
        assert_eq!(s.multiplicity(), 3);
    }

    #[test]
    fn minimal_generators_examples() {
        assert_eq!(sg(&[4, 6, 13]).minimal_generators(), vec![4, 6, 13]);
        let interval: Vec<u64> = (9..=17).collect();
        assert_eq!(sg(&interval).minimal_generators(), interval);
    }

    #[test]
    fn apery_rejects_non_elements() {
        let s = sg(&[3, 5]);
        assert_eq!(s.apery_set(7), Err(Error::NotAnElement(7)));
        assert_eq!(s.apery_set(0), Err(Error::NotAnElement(0)));
    }

    #[test]
    fn residual_examples() {
        let s = sg(&[3, 5]);
        assert_eq!(s.residual_set(&[6]).unwrap(), vec![0, 3, 5, 8, 10, 13]);
        assert_eq!(s.residual_set(&[6, 10]).unwrap(), vec![0, 3, 5, 8]);
        assert_eq!(s.count_residual(&[6, 10]).unwrap(), 4);
        assert_eq!(sg(&[1]).count_residual(&[7]).unwrap(), 7);
        assert_eq!(sg(&[8, 9, 20]).count_residual(&[16, 18, 40]).unwrap(), 8);
    }

    #[test]
    fn residual_errors() {
        let s = sg(&[3, 5]);
        assert_eq!(s.residual_set(&[7]), Err(Error::ShiftNotInSemigroup(7)));
        assert_eq!(s.residual_set(&[0]), Err(Error::ShiftNotInSemigroup(0)));
        assert_eq!(s.residual_set(&[]), Err(Error::EmptyShifts));
    }

    #[test]
    fn from_gaps_round_trip() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 4, 7]).unwrap();
        assert_eq!(s.generators(), &[3, 5]);
        assert_eq!(s, sg(&[3, 5]));
        assert!(NumericalSemigroup::from_gaps(&[1, 2, 6]).is_err());
        assert_eq!(NumericalSemigroup::from_gaps(&[]).unwrap().genus(), 0);
    }

    #[test]
    fn ordinary_semigroup() {
        let s = NumericalSemigroup::ordinary(5).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 3, 4, 5]);
        assert_eq!(s.multiplicity(), 6);
        assert_eq!(NumericalSemigroup::ordinary(0).unwrap().genus(), 0);
    }
}
