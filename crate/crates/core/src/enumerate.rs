//! Enumeration of all numerical semigroups of a given genus.
//!
//! The genus tree has `N_0` at its root; the children of `S` are the sets
//! `S \ {x}` for minimal generators `x` above the Frobenius number. Adding
//! `x` to the gap set appends it to the sorted gap sequence, so the tree is
//! a trie over gap sequences and a depth-first walk taking children in
//! increasing `x` visits each genus level in lexicographic gap-set order.
//!
//! Nodes are `u128` membership masks, which is exact as long as every
//! minimal generator (all below `3g + 2`) fits in the mask.

use std::cmp::Ordering;

use itertools::Itertools;

use crate::bounds::{geil_matsumoto_bound, lewittes_bound};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_GENUS_CAP: u32 = 25;
/// Largest genus the `u128` node encoding supports.
pub const MAX_SUPPORTED_GENUS: u32 = 41;
pub const ORACLE_GENUS_CAP: u32 = 12;

/// One vertex of the genus tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusTreeNode {
    pub semigroup: NumericalSemigroup,
    /// Largest gap, -1 for `N_0`.
    pub frobenius: i64,
    /// Minimal generators above the Frobenius number; removing one gives a
    /// child of genus one higher.
    pub removable: Vec<u64>,
}

impl GenusTreeNode {
    pub fn root() -> Self {
        Self::from_mask(u128::MAX, -1)
    }

    fn from_mask(mask: u128, frobenius: i64) -> Self {
        let gens = minimal_generators_mask(mask);
        let removable = bits(gens).filter(|&x| x as i64 > frobenius).collect();
        let gens: Vec<u64> = bits(gens).collect();
        Self {
            semigroup: NumericalSemigroup::from_generators(&gens).expect("valid generators"),
            frobenius,
            removable,
        }
    }

    pub fn children(&self) -> Vec<GenusTreeNode> {
        let mask = mask_of(&self.semigroup);
        self.removable
            .iter()
            .map(|&x| Self::from_mask(mask & !(1u128 << x), x as i64))
            .collect()
    }
}

fn mask_of(s: &NumericalSemigroup) -> u128 {
    (0..128u64)
        .filter(|&n| s.contains(n))
        .fold(0u128, |m, n| m | (1u128 << n))
}

fn bits(mask: u128) -> impl Iterator<Item = u64> {
    (0..128u64).filter(move |&n| mask >> n & 1 == 1)
}

/// Nonzero elements below 128 that are not a sum of two nonzero elements.
fn minimal_generators_mask(mask: u128) -> u128 {
    let nonzero = mask & !1;
    let mut sums = 0u128;
    let mut rest = nonzero;
    while rest != 0 {
        let a = rest.trailing_zeros();
        sums |= nonzero << a;
        rest &= rest - 1;
    }
    nonzero & !sums
}

struct Frame {
    mask: u128,
    frobenius: i64,
    depth: u32,
}

/// Depth-first walk of the genus tree, yielding the nodes at one depth in
/// lexicographic gap-set order. Memory use is bounded by the stack depth
/// times the branching factor.
pub struct GenusTree {
    target: u32,
    stack: Vec<Frame>,
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        while let Some(Frame {
            mask,
            frobenius,
            depth,
        }) = self.stack.pop()
        {
            let gens = minimal_generators_mask(mask);
            if depth == self.target {
                let gens: Vec<u64> = bits(gens).collect();
                return Some(NumericalSemigroup::from_generators(&gens).expect("valid generators"));
            }
            // Push in descending order so the smallest child is visited first.
            let above = if frobenius < 0 {
                gens
            } else {
                gens & !((1u128 << (frobenius + 1)) - 1)
            };
            let mut children: Vec<u64> = bits(above).collect();
            children.reverse();
            for x in children {
                self.stack.push(Frame {
                    mask: mask & !(1u128 << x),
                    frobenius: x as i64,
                    depth: depth + 1,
                });
            }
        }
        None
    }
}

/// All numerical semigroups of genus `genus`, each once, in lexicographic
/// order of their gap sets, with minimal generators.
pub fn semigroups_of_genus(genus: u32) -> Result<GenusTree> {
    semigroups_of_genus_capped(genus, DEFAULT_GENUS_CAP)
}

pub fn semigroups_of_genus_capped(genus: u32, cap: u32) -> Result<GenusTree> {
    let cap = cap.min(MAX_SUPPORTED_GENUS);
    if genus > cap {
        return Err(Error::GenusCapExceeded { genus, cap });
    }
    Ok(GenusTree {
        target: genus,
        stack: vec![Frame {
            mask: u128::MAX,
            frobenius: -1,
            depth: 0,
        }],
    })
}

/// Independent census: tries every `genus`-subset of `[1, 2 genus - 1]` as a
/// gap set. Same order as [`semigroups_of_genus`].
pub fn brute_force_census(genus: u32) -> Result<Vec<NumericalSemigroup>> {
    if genus > ORACLE_GENUS_CAP {
        return Err(Error::OracleCapExceeded {
            genus,
            cap: ORACLE_GENUS_CAP,
        });
    }
    let g = genus as usize;
    if g == 0 {
        return Ok(vec![NumericalSemigroup::naturals()]);
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    for gaps in (1..=top).combinations(g) {
        let mut is_gap = vec![false; top + 1];
        for &x in &gaps {
            is_gap[x] = true;
        }
        let closed = (1..=top).all(|a| {
            is_gap[a] || (a..=top - a).all(|b| is_gap[b] || !is_gap[a + b])
        });
        if closed {
            let gaps: Vec<u64> = gaps.iter().map(|&x| x as u64).collect();
            out.push(NumericalSemigroup::from_gaps(&gaps)?);
        }
    }
    Ok(out)
}

/// Lexicographic comparison of gap sets.
pub fn gap_order(a: &NumericalSemigroup, b: &NumericalSemigroup) -> Ordering {
    a.gaps().cmp(&b.gaps())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundMethod {
    Lewittes,
    GeilMatsumoto,
}

impl BoundMethod {
    pub fn evaluate(self, s: &NumericalSemigroup, q: u64) -> Result<u64> {
        match self {
            BoundMethod::Lewittes => lewittes_bound(s, q),
            BoundMethod::GeilMatsumoto => geil_matsumoto_bound(s, q),
        }
    }
}

/// Genus-`genus` semigroups whose bound is below `n_target`; none of them
/// can be the Weierstrass semigroup of a rational place on a function field
/// with `n_target` rational places.
pub fn excluded_semigroups(
    genus: u32,
    q: u64,
    n_target: u64,
    method: BoundMethod,
) -> Result<Vec<(NumericalSemigroup, u64)>> {
    if n_target == 0 {
        return Err(Error::InvalidArgument("target must be at least 1".into()));
    }
    let mut out = Vec::new();
    for s in semigroups_of_genus(genus)? {
        let b = method.evaluate(&s, q)?;
        if b < n_target {
            out.push((s, b));
        }
    }
    Ok(out)
}
