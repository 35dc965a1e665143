//! Telescopic semigroups.
//!
//! For generators `a_1, ..., a_k` let `d_j = gcd(a_1, ..., a_j)` and
//! `S_j = <a_1/d_j, ..., a_j/d_j>`. The sequence is telescopic when
//! `a_j/d_j` lies in `S_{j-1}` for every `j >= 2`. Telescopic semigroups are
//! symmetric and have Frobenius number
//! `sum_{j>=2} (d_{j-1}/d_j - 1) a_j - a_1`.

use itertools::Itertools;

use crate::bounds::{lewittes_bound, Rational};
use crate::error::{Error, Result};
use crate::semigroup::{gcd_of, NumericalSemigroup};

/// Largest generator count for [`find_telescopic_order`].
pub const PERMUTATION_SEARCH_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TelescopicAnalysis {
    pub generators: Vec<u64>,
    /// Prefix gcds `d_1, ..., d_k`.
    pub d: Vec<u64>,
    pub verdict: bool,
    /// First `j` (1-based) at which the membership test fails.
    pub failing_index: Option<usize>,
    pub closed_form_genus: Option<u64>,
}

impl TelescopicAnalysis {
    /// `S_j = <a_1/d_j, ..., a_j/d_j>` for 1-based `j`.
    pub fn quotient_semigroup(&self, j: usize) -> Result<NumericalSemigroup> {
        quotient(&self.generators, &self.d, j)
    }

    /// Number of generators left after dropping those with `d_{j-1} = d_j`,
    /// which are redundant in a telescopic sequence.
    pub fn reduced_length(&self) -> usize {
        1 + self.d.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// The ratios `d_{j-1}/d_j` for `j = 2..=k`.
    pub fn ratios(&self) -> Vec<u64> {
        self.d.windows(2).map(|w| w[0] / w[1]).collect()
    }
}

fn quotient(gens: &[u64], d: &[u64], j: usize) -> Result<NumericalSemigroup> {
    let dj = d[j - 1];
    let scaled: Vec<u64> = gens[..j].iter().map(|&a| a / dj).collect();
    NumericalSemigroup::from_generators(&scaled)
}

fn prefix_gcds(gens: &[u64]) -> Vec<u64> {
    gens.iter()
        .scan(0u64, |acc, &a| {
            *acc = num_integer::gcd(*acc, a);
            Some(*acc)
        })
        .collect()
}

fn validate(gens: &[u64]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if gens.contains(&0) {
        return Err(Error::ZeroGenerator);
    }
    match gcd_of(gens) {
        1 => Ok(()),
        g => Err(Error::NonCoprimeGenerators(g)),
    }
}

/// Tests telescopicity of `gens` in the order supplied.
pub fn analyze_telescopic(gens: &[u64]) -> Result<TelescopicAnalysis> {
    validate(gens)?;
    let d = prefix_gcds(gens);
    let mut failing_index = None;
    for j in 2..=gens.len() {
        let prev = quotient(gens, &d, j - 1)?;
        if !prev.contains(gens[j - 1] / d[j - 1]) {
            failing_index = Some(j);
            break;
        }
    }
    let verdict = failing_index.is_none();
    let closed_form_genus = verdict.then(|| genus_from_chain(gens, &d)).transpose()?;
    Ok(TelescopicAnalysis {
        generators: gens.to_vec(),
        d,
        verdict,
        failing_index,
        closed_form_genus,
    })
}

fn genus_from_chain(gens: &[u64], d: &[u64]) -> Result<u64> {
    let mut sum: i128 = -(gens[0] as i128);
    for j in 1..gens.len() {
        let ratio = (d[j - 1] / d[j]) as i128;
        sum = (ratio - 1)
            .checked_mul(gens[j] as i128)
            .and_then(|t| sum.checked_add(t))
            .ok_or(Error::Overflow("telescopic genus"))?;
    }
    // sum is the Frobenius number; symmetry gives g = (F + 1) / 2.
    Ok(((sum + 1) / 2) as u64)
}

/// Genus from the telescopic closed form.
pub fn telescopic_genus(gens: &[u64]) -> Result<u64> {
    analyze_telescopic(gens)?
        .closed_form_genus
        .ok_or_else(|| Error::NotTelescopic(gens.to_vec()))
}

/// Coefficients `x_1, ..., x_k` with `value = sum x_j a_j` and
/// `0 <= x_j < d_{j-1}/d_j` for `j >= 2`; these exist and are unique for
/// every element of a telescopic semigroup. Built from `j = k` down, each
/// `x_j` being forced by a congruence mod `d_{j-1}`.
pub fn telescopic_representation(gens: &[u64], value: u64) -> Result<Vec<u64>> {
    let analysis = analyze_telescopic(gens)?;
    if !analysis.verdict {
        return Err(Error::NotTelescopic(gens.to_vec()));
    }
    let d = &analysis.d;
    let mut x = vec![0u64; gens.len()];
    let mut rest = value;
    for j in (1..gens.len()).rev() {
        let modulus = d[j - 1] as u128;
        let step = gens[j] as u128 % modulus;
        let target = rest as u128 % modulus;
        let k = (0..d[j - 1] / d[j])
            .find(|&k| (k as u128 * step) % modulus == target)
            .ok_or(Error::NotAnElement(value))?;
        let used = k
            .checked_mul(gens[j])
            .ok_or(Error::Overflow("telescopic representation"))?;
        rest = rest.checked_sub(used).ok_or(Error::NotAnElement(value))?;
        x[j] = k;
    }
    if rest % gens[0] != 0 {
        return Err(Error::NotAnElement(value));
    }
    x[0] = rest / gens[0];
    Ok(x)
}

/// Searches generator orders for a telescopic one; factorial cost.
pub fn find_telescopic_order(gens: &[u64]) -> Result<Option<Vec<u64>>> {
    validate(gens)?;
    if gens.len() > PERMUTATION_SEARCH_CAP {
        return Err(Error::TooManyGenerators {
            got: gens.len(),
            cap: PERMUTATION_SEARCH_CAP,
        });
    }
    for perm in gens.iter().copied().permutations(gens.len()) {
        if analyze_telescopic(&perm)?.verdict {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}

/// One level of a tower whose Weierstrass semigroups are telescopic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TelescopicLevel {
    pub generators: Vec<u64>,
    pub q: u64,
    /// Length of the description once redundant generators are dropped.
    pub m: usize,
    pub multiplicity: u64,
    pub genus: u64,
    pub lewittes: u64,
    /// `(q m_1 + 1) / g`.
    pub ratio: Rational,
    /// Whether `g >= (m - 1) m_1 / 2`, the estimate driving the ratio to 0.
    pub genus_estimate_holds: bool,
}

/// Per-level genus, multiplicity and Lewittes ratio. The ratio is at most
/// `2 (q m_1 + 1) / ((m - 1) m_1)` and so decays as the descriptions grow.
pub fn telescopic_tower_diagnostic(levels: &[(Vec<u64>, u64)]) -> Result<Vec<TelescopicLevel>> {
    levels
        .iter()
        .map(|(gens, q)| {
            let analysis = analyze_telescopic(gens)?;
            if !analysis.verdict {
                return Err(Error::NotTelescopic(gens.clone()));
            }
            let s = NumericalSemigroup::from_generators(gens)?;
            if s.genus() == 0 {
                return Err(Error::DegenerateLevel(format!(
                    "{gens:?} has genus 0, ratio undefined"
                )));
            }
            let lewittes = lewittes_bound(&s, *q)?;
            let m = analysis.reduced_length();
            Ok(TelescopicLevel {
                generators: gens.clone(),
                q: *q,
                m,
                multiplicity: s.multiplicity(),
                genus: s.genus(),
                lewittes,
                ratio: Rational::new(lewittes as i128, s.genus() as i128),
                genus_estimate_holds: 2 * s.genus() as u128
                    >= (m as u128 - 1) * s.multiplicity() as u128,
            })
        })
        .collect()
}
