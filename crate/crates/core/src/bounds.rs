//! Upper bounds on the number of rational places.
//!
//! Bounds in terms of a Weierstrass semigroup `S` and the field size `q`
//! (Lewittes' bound, the residual-set bound over all generators and their
//! refinements) and, for comparison, classical bounds on `N_q(g)`.
//!
//! Every rational-valued bound is an exact [`Rational`]; callers take floors
//! only when presenting.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub type Rational = Ratio<i128>;

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        Err(Error::InvalidFieldSize(q))
    } else {
        Ok(())
    }
}

fn mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// `q * multiplicity + 1`.
pub fn lewittes_bound(s: &NumericalSemigroup, q: u64) -> Result<u64> {
    check_q(q)?;
    Ok(mul(q, s.multiplicity(), "Lewittes' bound")? + 1)
}

/// Number of elements outside every `q * gen + S`, plus one, taken over the
/// generators exactly as supplied.
pub fn geil_matsumoto_bound(s: &NumericalSemigroup, q: u64) -> Result<u64> {
    Ok(geil_matsumoto_residual(s, q)?.len() as u64 + 1)
}

/// The residual set witnessing [`geil_matsumoto_bound`].
pub fn geil_matsumoto_residual(s: &NumericalSemigroup, q: u64) -> Result<Vec<u64>> {
    check_q(q)?;
    let shifts = s
        .generators()
        .iter()
        .map(|&g| mul(q, g, "generator shift"))
        .collect::<Result<Vec<_>>>()?;
    s.residual_set(&shifts)
}

/// Result of the refinement that discounts elements just above the
/// multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TRefined {
    pub t: u64,
    pub bound: u64,
}

/// Counts the elements in `[m + 1, m + ceil(m / q) - 1]` where `m` is the
/// multiplicity and subtracts them from Lewittes' bound.
pub fn t_refined_bound(s: &NumericalSemigroup, q: u64) -> Result<TRefined> {
    let lewittes = lewittes_bound(s, q)?;
    let m = s.multiplicity();
    let hi = m + m.div_ceil(q) - 1;
    let t = (m + 1..=hi).filter(|&n| s.contains(n)).count() as u64;
    Ok(TRefined {
        t,
        bound: lewittes - t,
    })
}

/// Lower estimate for `t` in terms of multiplicity and genus alone:
/// `max(ceil(m / q) - 1 - (g - (m - 1)), 0)`. Meaningful for `m <= g + 1`.
pub fn t_lower_estimate(multiplicity: u64, genus: u64, q: u64) -> Result<u64> {
    check_q(q)?;
    let m = multiplicity as i128;
    let g = genus as i128;
    let v = Integer::div_ceil(&m, &(q as i128)) - 1 - (g - (m - 1));
    Ok(v.max(0) as u64)
}

/// Residual-set bound restricted to elements `<= n_prime + 2g - 2`, where
/// `n_prime` is any known upper bound on the number of rational places.
pub fn sharpened_bound(s: &NumericalSemigroup, q: u64, n_prime: u64) -> Result<u64> {
    if n_prime == 0 {
        return Err(Error::InvalidArgument("N' must be at least 1".into()));
    }
    let limit = n_prime as i128 + 2 * s.genus() as i128 - 2;
    let kept = geil_matsumoto_residual(s, q)?
        .into_iter()
        .filter(|&n| (n as i128) <= limit)
        .count() as u64;
    Ok(kept + 1)
}

/// `g * floor(2 sqrt(q)) + q + 1`.
pub fn serre_upper(genus: u64, q: u64) -> Result<u64> {
    check_q(q)?;
    let m = mul(4, q, "Serre bound")?.isqrt();
    mul(genus, m, "Serre bound")?
        .checked_add(q + 1)
        .ok_or(Error::Overflow("Serre bound"))
}

/// `(q - 1/q) g + q + 2 - 1/q`.
pub fn proposition_nq(genus: u64, q: u64) -> Result<Rational> {
    check_q(q)?;
    let q = Rational::from_integer(q as i128);
    let g = Rational::from_integer(genus as i128);
    let inv = q.recip();
    Ok((q - inv) * g + q + Rational::from_integer(2) - inv)
}

/// Which radicand to use in Ihara's bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IharaVariant {
    /// `(8q + 1) g^2 + 4 (q^2 - q) g`, the usual form.
    #[default]
    Standard,
    /// `(8g + 1) g^2 + 4 (q^2 - q) g`, as sometimes misprinted.
    PrintedRadicand,
}

/// `q + 1 + floor((sqrt((8q+1) g^2 + 4 (q^2 - q) g) - g) / 2)`, all in
/// integers.
pub fn ihara_bound(genus: u64, q: u64) -> Result<u64> {
    ihara_bound_variant(genus, q, IharaVariant::Standard)
}

pub fn ihara_bound_variant(genus: u64, q: u64, variant: IharaVariant) -> Result<u64> {
    check_q(q)?;
    let g = genus as u128;
    let q = q as u128;
    let lead = match variant {
        IharaVariant::Standard => 8 * q + 1,
        IharaVariant::PrintedRadicand => 8 * g + 1,
    };
    let radicand = lead
        .checked_mul(g * g)
        .and_then(|a| a.checked_add(4 * (q * q - q) * g))
        .ok_or(Error::Overflow("Ihara bound"))?;
    // floor((sqrt(R) - g) / 2) == floor((floor(sqrt(R)) - g) / 2) since g is an
    // integer, and sqrt(R) >= g here.
    let root = radicand.isqrt();
    let v = q + 1 + (root - g) / 2;
    u64::try_from(v).map_err(|_| Error::Overflow("Ihara bound"))
}

/// `0.83 g + 5.35` for `q = 2`, exactly.
pub fn oesterle_q2(genus: u64) -> Rational {
    Rational::new(83 * genus as i128 + 535, 100)
}

/// Which sufficient condition established that the two bounds agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoincidenceTest {
    /// Only one distinct generator (the semigroup is `<1>`).
    SingleGenerator,
    /// `q m + 2g <= q l2`; implies the conductor test.
    TwiceGenus,
    /// `q m + c <= q l2`.
    Conductor,
    /// Neither test fired; the bounds may still agree.
    NotEstablished,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coincidence {
    pub holds: bool,
    pub test: CoincidenceTest,
}

/// Sufficient test for Lewittes' bound to equal the residual-set bound.
/// `l2` is the smallest supplied generator above the multiplicity.
pub fn bounds_coincide(s: &NumericalSemigroup, q: u64) -> Result<Coincidence> {
    check_q(q)?;
    let m = s.multiplicity();
    let Some(l2) = s.generators().iter().copied().filter(|&g| g > m).min() else {
        return Ok(Coincidence {
            holds: true,
            test: CoincidenceTest::SingleGenerator,
        });
    };
    let qm = mul(q, m, "coincidence test")? as u128;
    let ql2 = mul(q, l2, "coincidence test")? as u128;
    let test = if qm + 2 * s.genus() as u128 <= ql2 {
        CoincidenceTest::TwiceGenus
    } else if qm + s.conductor() as u128 <= ql2 {
        CoincidenceTest::Conductor
    } else {
        CoincidenceTest::NotEstablished
    };
    Ok(Coincidence {
        holds: test != CoincidenceTest::NotEstablished,
        test,
    })
}

/// A rational place count `n` forces every Weierstrass semigroup at a
/// rational place to have multiplicity at least `(n - 1) / q`.
pub fn min_multiplicity_for_places(n: u64, q: u64) -> Result<Rational> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    Ok(Rational::new(n as i128 - 1, q as i128))
}

/// All bounds for one `(S, q)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub q: u64,
    pub semigroup: NumericalSemigroup,
    pub lewittes: u64,
    pub geil_matsumoto: u64,
    pub t_value: u64,
    pub t_bound: u64,
    /// `(N', bound)` when an a priori bound was supplied.
    pub sharpened: Option<(u64, u64)>,
    pub coincidence: Coincidence,
    pub serre: u64,
    pub witness: Vec<u64>,
}

pub fn full_report(s: &NumericalSemigroup, q: u64, n_prime: Option<u64>) -> Result<BoundReport> {
    let lewittes = lewittes_bound(s, q)?;
    let witness = geil_matsumoto_residual(s, q)?;
    let TRefined { t, bound } = t_refined_bound(s, q)?;
    let sharpened = n_prime
        .map(|n| sharpened_bound(s, q, n).map(|b| (n, b)))
        .transpose()?;
    Ok(BoundReport {
        q,
        semigroup: s.clone(),
        lewittes,
        geil_matsumoto: witness.len() as u64 + 1,
        t_value: t,
        t_bound: bound,
        sharpened,
        coincidence: bounds_coincide(s, q)?,
        serre: serre_upper(s.genus(), q)?,
        witness,
    })
}

/// Whether `q` is a power of a prime. The bounds are purely combinatorial
/// and are computed for any `q >= 2`; this only drives warnings.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn lewittes_examples() {
        assert_eq!(lewittes_bound(&sg(&[3, 5]), 2).unwrap(), 7);
        assert_eq!(lewittes_bound(&sg(&[8, 9, 20]), 16).unwrap(), 129);
        assert_eq!(lewittes_bound(&sg(&[1]), 7).unwrap(), 8);
        assert_eq!(lewittes_bound(&sg(&[1]), 1), Err(Error::InvalidFieldSize(1)));
    }

    #[test]
    fn geil_matsumoto_examples() {
        assert_eq!(geil_matsumoto_bound(&sg(&[3, 5]), 2).unwrap(), 5);
        assert_eq!(geil_matsumoto_bound(&sg(&[8, 9, 20]), 2).unwrap(), 9);
        assert_eq!(geil_matsumoto_bound(&sg(&[5, 6, 13]), 4).unwrap(), 18);
        let interval: Vec<u64> = (9..=17).collect();
        assert_eq!(geil_matsumoto_bound(&sg(&interval), 2).unwrap(), 15);
    }

    #[test]
    fn t_refined_examples() {
        assert_eq!(
            t_refined_bound(&sg(&[3, 5]), 2).unwrap(),
            TRefined { t: 0, bound: 7 }
        );
        let interval: Vec<u64> = (9..=17).collect();
        assert_eq!(
            t_refined_bound(&sg(&interval), 2).unwrap(),
            TRefined { t: 4, bound: 15 }
        );
        assert_eq!(
            t_refined_bound(&sg(&[1]), 5).unwrap(),
            TRefined { t: 0, bound: 6 }
        );
    }

    #[test]
    fn t_lower_estimate_examples() {
        assert_eq!(t_lower_estimate(9, 8, 2).unwrap(), 4);
        assert_eq!(t_lower_estimate(3, 4, 2).unwrap(), 0);
        assert_eq!(t_lower_estimate(1, 0, 3).unwrap(), 0);
    }

    #[test]
    fn sharpened_examples() {
        let s = sg(&[3, 5]);
        assert_eq!(sharpened_bound(&s, 2, 100).unwrap(), 5);
        assert_eq!(sharpened_bound(&s, 2, 5).unwrap(), 5);
        // window 1 + 8 - 2 = 7 keeps {0, 3, 5}
        assert_eq!(sharpened_bound(&s, 2, 1).unwrap(), 4);
        assert_eq!(sharpened_bound(&sg(&[1]), 4, 5).unwrap(), 5);
        assert!(sharpened_bound(&s, 2, 0).is_err());
    }

    #[test]
    fn serre_examples() {
        assert_eq!(serre_upper(8, 4).unwrap(), 37);
        assert_eq!(serre_upper(0, 9).unwrap(), 10);
        assert_eq!(serre_upper(20, 2).unwrap(), 43);
    }

    #[test]
    fn proposition_examples() {
        assert_eq!(proposition_nq(0, 3).unwrap(), r(14, 3));
        for g in 0..20u64 {
            let gi = g as i128;
            assert_eq!(proposition_nq(g, 2).unwrap(), r(3, 2) * gi + r(7, 2));
            assert_eq!(proposition_nq(g, 4).unwrap(), r(15, 4) * gi + r(23, 4));
        }
    }

    #[test]
    fn ihara_examples() {
        assert_eq!(ihara_bound(0, 5).unwrap(), 6);
        // sqrt(1152) = 33.94..., (33 - 8) / 2 = 12
        assert_eq!(ihara_bound(8, 2).unwrap(), 15);
        // sqrt(68985) = 262.6..., (262 - 45) / 2 = 108
        assert_eq!(ihara_bound(45, 4).unwrap(), 113);
        // sqrt(65 * 64 + 64) = 64.99..., (64 - 8) / 2 = 28
        assert_eq!(
            ihara_bound_variant(8, 2, IharaVariant::PrintedRadicand).unwrap(),
            31
        );
    }

    #[test]
    fn oesterle_examples() {
        assert_eq!(oesterle_q2(0), r(535, 100));
        assert_eq!(oesterle_q2(45), r(427, 10));
        assert_eq!(oesterle_q2(8), r(1199, 100));
    }

    #[test]
    fn coincidence_examples() {
        // c = 40 for <8,9,20>: 128 + 40 > 144, so the sufficient test is
        // silent although both bounds are 129.
        let s = sg(&[8, 9, 20]);
        assert_eq!(s.conductor(), 40);
        let c = bounds_coincide(&s, 16).unwrap();
        assert!(!c.holds);
        assert_eq!(lewittes_bound(&s, 16), geil_matsumoto_bound(&s, 16));

        assert!(!bounds_coincide(&sg(&[3, 5]), 2).unwrap().holds);
        assert_eq!(
            bounds_coincide(&sg(&[1]), 3).unwrap().test,
            CoincidenceTest::SingleGenerator
        );
        // <2, 17>: 2q + 16 <= 17q for q >= 2
        assert_eq!(
            bounds_coincide(&sg(&[2, 17]), 2).unwrap().test,
            CoincidenceTest::TwiceGenus
        );
    }

    #[test]
    fn min_multiplicity_examples() {
        assert_eq!(min_multiplicity_for_places(1, 5).unwrap(), r(0, 1));
        assert_eq!(min_multiplicity_for_places(9, 4).unwrap(), r(2, 1));
        // norm-trace over F_{q^r}: N = q^{2r-1} + 1, multiplicity q^{r-1}
        for (q, rr) in [(2u64, 2u32), (2, 3), (3, 2), (4, 2)] {
            let n = q.pow(2 * rr - 1) + 1;
            let s = sg(&[q.pow(rr - 1), (q.pow(rr) - 1) / (q - 1)]);
            let need = min_multiplicity_for_places(n, q.pow(rr)).unwrap();
            assert_eq!(need, r(s.multiplicity() as i128, 1));
        }
    }

    #[test]
    fn report_is_consistent() {
        let rep = full_report(&sg(&[3, 5]), 2, Some(5)).unwrap();
        assert_eq!(rep.lewittes, 7);
        assert_eq!(rep.geil_matsumoto, 5);
        assert_eq!(rep.witness, vec![0, 3, 5, 8]);
        assert_eq!(rep.sharpened, Some((5, 5)));
        assert_eq!((rep.t_value, rep.t_bound), (0, 7));
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..=32).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(
            pp,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }
}
