//! Weierstrass semigroups at the pole of `x_1` in the second
//! Garcia-Stichtenoth tower over `F_{q^2}`, given by
//! `x_{i+1}^q + x_{i+1} = x_i^q / (x_i^{q-1} + 1)`.
//!
//! Only the semigroups are computed: `S_1 = N_0` and
//! `S_{i+1} = q S_i ∪ [c_{i+1}, inf)`. Nothing is derived from the equation.

use bitvec::prelude::*;

use crate::bounds::{geil_matsumoto_bound, lewittes_bound, Rational};
use crate::error::{Error, Result};
use crate::semigroup::{guard, Bits, NumericalSemigroup, DEFAULT_MAX_BITS};

fn check(q: u64, i: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidFieldSize(q));
    }
    if i == 0 {
        return Err(Error::InvalidArgument("tower levels start at 1".into()));
    }
    Ok(())
}

fn pow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e).ok_or(Error::Overflow("tower power"))
}

/// `c_i = q^i - q^{i/2}` for even `i`, `q^i - q^{(i+1)/2}` for odd `i`.
pub fn gs_c(q: u64, i: u32) -> Result<u64> {
    check(q, i)?;
    let half = if i % 2 == 0 { i / 2 } else { (i + 1) / 2 };
    Ok(pow(q, i)? - pow(q, half)?)
}

/// `(q^{i/2} - 1)^2` for even `i`, `(q^{(i+1)/2} - 1)(q^{(i-1)/2} - 1)` for odd.
pub fn gs_genus(q: u64, i: u32) -> Result<u64> {
    check(q, i)?;
    let (a, b) = if i % 2 == 0 {
        (i / 2, i / 2)
    } else {
        ((i + 1) / 2, (i - 1) / 2)
    };
    (pow(q, a)? - 1)
        .checked_mul(pow(q, b)? - 1)
        .ok_or(Error::Overflow("tower genus"))
}

/// Membership window of `S_i` over `[0, c_i]` (empty window means `N_0`).
#[derive(Clone, Debug)]
pub struct TowerMembership {
    pub q: u64,
    pub i: u32,
    bits: Bits,
}

impl TowerMembership {
    pub fn contains(&self, n: u64) -> bool {
        (n as usize) >= self.bits.len() || self.bits[n as usize]
    }

    pub fn gap_count(&self) -> u64 {
        self.bits.count_zeros() as u64
    }

    /// The `k` smallest nonzero elements.
    pub fn smallest_nonzero(&self, k: usize) -> Vec<u64> {
        (1..).filter(|&n| self.contains(n)).take(k).collect()
    }

    pub fn into_semigroup(self) -> NumericalSemigroup {
        NumericalSemigroup::from_membership(self.bits)
    }
}

/// Runs the recursion up to level `i`, each window `[0, c_j]`.
pub fn gs_membership(q: u64, i: u32, max_bits: u64) -> Result<TowerMembership> {
    check(q, i)?;
    let mut bits: Bits = bitvec![u64, Lsb0; 1; 1];
    for level in 2..=i {
        let c = gs_c(q, level)?;
        guard(c + 1, max_bits)?;
        let prev = bits;
        let in_prev = |m: u64| (m as usize) >= prev.len() || prev[m as usize];
        let mut next = Bits::with_capacity(c as usize + 1);
        for n in 0..=c {
            next.push(n == c || (n % q == 0 && in_prev(n / q)));
        }
        bits = next;
    }
    Ok(TowerMembership { q, i, bits })
}

/// `S_i` as a semigroup with minimal generators.
pub fn gs_semigroup(q: u64, i: u32) -> Result<NumericalSemigroup> {
    gs_semigroup_with_limit(q, i, DEFAULT_MAX_BITS)
}

pub fn gs_semigroup_with_limit(q: u64, i: u32, max_bits: u64) -> Result<NumericalSemigroup> {
    Ok(gs_membership(q, i, max_bits)?.into_semigroup())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    pub q: u64,
    pub i: u32,
    pub c_i: u64,
    pub semigroup: NumericalSemigroup,
    pub genus_formula: u64,
    pub lambda1: u64,
    pub lambda2: Option<u64>,
    /// `lambda1 / g`, undefined at genus 0.
    pub ratio_lambda1_g: Option<Rational>,
    /// `q^2 l1 + 2g <= q^2 l2`, the sufficient test for the two bounds to
    /// agree at field size `q^2`.
    pub coincidence_condition: bool,
    pub lewittes: u64,
    pub geil_matsumoto: u64,
}

/// Level `i` with both bounds evaluated at field size `q^2`.
pub fn gs_level_report(q: u64, i: u32) -> Result<TowerLevel> {
    gs_level_report_with_limit(q, i, DEFAULT_MAX_BITS)
}

pub fn gs_level_report_with_limit(q: u64, i: u32, max_bits: u64) -> Result<TowerLevel> {
    let s = gs_semigroup_with_limit(q, i, max_bits)?;
    let field = pow(q, 2)?;
    let g = gs_genus(q, i)?;
    let lambda1 = s.multiplicity();
    let lambda2 = s.generators().iter().copied().find(|&x| x > lambda1);
    let coincidence_condition = match lambda2 {
        None => true,
        Some(l2) => field as u128 * lambda1 as u128 + 2 * g as u128 <= field as u128 * l2 as u128,
    };
    Ok(TowerLevel {
        q,
        i,
        c_i: gs_c(q, i)?,
        lewittes: lewittes_bound(&s, field)?,
        geil_matsumoto: geil_matsumoto_bound(&s, field)?,
        semigroup: s,
        genus_formula: g,
        lambda1,
        lambda2,
        ratio_lambda1_g: (g > 0).then(|| Rational::new(lambda1 as i128, g as i128)),
        coincidence_condition,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticRow {
    pub i: u32,
    pub lambda1: u64,
    pub genus_gap_count: u64,
    pub genus_formula: u64,
    pub ratio: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerAsymptotics {
    pub q: u64,
    pub rows: Vec<AsymptoticRow>,
    /// `1/q`, the limit of `lambda1 / g`.
    pub limit: Rational,
    /// `(q - 1)/q^2`, the floor forced by Lewittes' bound at field size `q^2`
    /// given `N/g -> q - 1`.
    pub floor: Rational,
    pub floor_holds: bool,
    /// Ratios strictly decrease and stay above the limit.
    pub monotone_from_above: bool,
}

/// `lambda1 / g` for levels `1..=i_max`, from the membership windows alone.
pub fn tower_asymptotics(q: u64, i_max: u32, max_bits: u64) -> Result<TowerAsymptotics> {
    check(q, i_max)?;
    let mut rows = Vec::with_capacity(i_max as usize);
    for i in 1..=i_max {
        let w = gs_membership(q, i, max_bits)?;
        let lambda1 = w.smallest_nonzero(1)[0];
        let genus_formula = gs_genus(q, i)?;
        rows.push(AsymptoticRow {
            i,
            lambda1,
            genus_gap_count: w.gap_count(),
            genus_formula,
            ratio: (genus_formula > 0)
                .then(|| Rational::new(lambda1 as i128, genus_formula as i128)),
        });
    }
    let qr = q as i128;
    let limit = Rational::new(1, qr);
    let floor = Rational::new(qr - 1, qr * qr);
    let ratios: Vec<Rational> = rows.iter().filter_map(|r| r.ratio).collect();
    Ok(TowerAsymptotics {
        q,
        floor_holds: ratios.iter().all(|&r| r >= floor),
        monotone_from_above: ratios.iter().all(|&r| r > limit)
            && ratios.windows(2).all(|w| w[1] < w[0]),
        rows,
        limit,
        floor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_values() {
        assert_eq!(gs_c(2, 2).unwrap(), 2);
        assert_eq!(gs_c(2, 4).unwrap(), 12);
        assert_eq!(gs_c(3, 3).unwrap(), 18);
        assert!(gs_c(1, 3).is_err());
        assert!(matches!(gs_c(2, 80), Err(Error::Overflow(_))));
    }

    #[test]
    fn genus_values() {
        assert_eq!(gs_genus(2, 4).unwrap(), 9);
        assert_eq!(gs_genus(2, 3).unwrap(), 3);
        assert_eq!(gs_genus(5, 1).unwrap(), 0);
    }

    #[test]
    fn small_levels() {
        let s = gs_semigroup(2, 2).unwrap();
        assert_eq!(s.gaps(), vec![1]);
        let s = gs_semigroup(2, 4).unwrap();
        assert_eq!(s.elements_up_to(12).collect::<Vec<_>>(), vec![0, 8, 10, 12]);
        assert_eq!(s.genus(), 9);
        assert_eq!(gs_semigroup(7, 1).unwrap(), NumericalSemigroup::naturals());
    }

    #[test]
    fn level_report() {
        let l = gs_level_report(2, 4).unwrap();
        assert_eq!((l.lambda1, l.genus_formula), (8, 9));
        assert_eq!(l.ratio_lambda1_g, Some(Rational::new(8, 9)));
        let l1 = gs_level_report(3, 1).unwrap();
        assert_eq!(l1.ratio_lambda1_g, None);
        for i in 2..=5 {
            assert!(gs_level_report(3, i).unwrap().coincidence_condition);
        }
    }

    #[test]
    fn memory_guard() {
        assert!(matches!(
            gs_membership(2, 12, 1000),
            Err(Error::MemoryGuard { .. })
        ));
    }

    #[test]
    fn asymptotics_prefix() {
        let a = tower_asymptotics(4, 2, DEFAULT_MAX_BITS).unwrap();
        assert_eq!(a.rows[1].ratio, Some(Rational::new(4, 9)));
        assert!(a.floor_holds);
    }
}
