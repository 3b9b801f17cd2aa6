//! Brute-force ground truth, kept apart from the main code paths.
//!
//! Semigroups here are plain 64-bit gap masks and generators are handled by
//! a boolean table. Nothing in this module calls the minimal-generator,
//! Apéry or Coe routines of the rest of the crate, so agreement between the
//! two is evidence rather than tautology.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::semigroup::{GeneratorSet, NumericalSemigroup};

/// Genus limit for exhaustive enumeration; all gaps then fit below 64.
pub const MAX_ORACLE_GENUS: u32 = 25;

/// Largest DP table `dp_invariants` will build.
pub const MAX_DP_TABLE: u64 = 1 << 24;

/// A numerical semigroup as the bitmask of its gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapMask(pub u64);

impl GapMask {
    pub fn member(self, n: u32) -> bool {
        n >= 64 || self.0 >> n & 1 == 0
    }

    pub fn genus(self) -> u32 {
        self.0.count_ones()
    }

    pub fn frobenius(self) -> i64 {
        if self.0 == 0 {
            -1
        } else {
            63 - i64::from(self.0.leading_zeros())
        }
    }

    pub fn gaps(self) -> Vec<u32> {
        (0..64).filter(|&n| !self.member(n)).collect()
    }

    pub fn to_semigroup(self) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(&self.gaps()).expect("oracle masks are semigroups")
    }

    /// Children in the classical genus tree: drop `x > F` whenever `x` is not
    /// a sum of two nonzero members.
    fn children(self) -> Vec<GapMask> {
        let f = self.frobenius();
        let start = (f + 1).max(1) as u32;
        let m = (1..).find(|&n| self.member(n)).expect("some member exists");
        (start..start + m)
            .filter(|&x| x < 64 && self.member(x))
            .filter(|&x| !(1..=x / 2).any(|t| self.member(t) && self.member(x - t)))
            .map(|x| GapMask(self.0 | 1 << x))
            .collect()
    }
}

/// All numerical semigroups of genus exactly `0..=g`, level by level.
pub fn levels_up_to_genus(g: u32, exec: Execution) -> Result<Vec<Vec<GapMask>>> {
    if g > MAX_ORACLE_GENUS {
        return Err(Error::BoundTooLarge {
            limit: u64::from(MAX_ORACLE_GENUS),
        });
    }
    let mut levels = vec![vec![GapMask(0)]];
    for _ in 0..g {
        let last = levels.last().expect("nonempty");
        let next: Vec<GapMask> = par::map(exec, last, |s| s.children())
            .into_iter()
            .flatten()
            .collect();
        levels.push(next);
    }
    Ok(levels)
}

/// Every numerical semigroup of genus at most `g`, without duplicates.
pub fn all_semigroups_up_to_genus(g: u32) -> Result<Vec<NumericalSemigroup>> {
    Ok(levels_up_to_genus(g, Execution::default())?
        .into_iter()
        .flatten()
        .map(GapMask::to_semigroup)
        .collect())
}

/// The defining condition checked on every odd member up to `F(S) + 2`.
pub fn coe_definitional(s: &NumericalSemigroup) -> bool {
    let top = s.frobenius() + 2;
    (1..=top)
        .step_by(2)
        .filter(|&x| s.contains(x))
        .all(|x| s.contains(x - 1) && s.contains(x + 1))
}

fn coe_mask(s: GapMask) -> bool {
    let top = s.frobenius() + 2;
    (1..=top.max(0) as u32)
        .step_by(2)
        .filter(|&x| s.member(x))
        .all(|x| s.member(x - 1) && s.member(x + 1))
}

fn plain_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        plain_gcd(b, a % b)
    }
}

/// (Frobenius number, genus, multiplicity) of ⟨gens⟩ from a boolean table
/// over `[0, min·max]`.
pub fn dp_invariants(gens: &GeneratorSet) -> Result<(i64, u32, u32)> {
    let g = gens.as_slice();
    let d = g.iter().fold(0, |acc, &x| plain_gcd(x, acc));
    if d != 1 {
        return Err(Error::GcdNotOne(d));
    }
    let lo = *g.iter().min().expect("nonempty");
    let hi = *g.iter().max().expect("nonempty");
    let size = u64::from(lo) * u64::from(hi) + 1;
    if size > MAX_DP_TABLE {
        return Err(Error::BoundTooLarge {
            limit: MAX_DP_TABLE,
        });
    }
    let size = size as usize;
    let mut table = vec![false; size];
    table[0] = true;
    for n in 1..size {
        table[n] = g
            .iter()
            .any(|&x| (x as usize) <= n && table[n - x as usize]);
    }
    let frobenius = table.iter().rposition(|&b| !b).map_or(-1, |f| f as i64);
    let genus = table.iter().filter(|&&b| !b).count() as u32;
    let multiplicity = if frobenius < 0 { 1 } else { lo };
    Ok((frobenius, genus, multiplicity))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub genus: u32,
    pub all: usize,
    pub coe: usize,
}

/// Per-genus counts of all numerical semigroups and of Coe-semigroups.
pub fn census(max_genus: u32) -> Result<Vec<CensusRow>> {
    census_with(max_genus, Execution::default())
}

pub fn census_with(max_genus: u32, exec: Execution) -> Result<Vec<CensusRow>> {
    let levels = levels_up_to_genus(max_genus, exec)?;
    Ok(levels
        .iter()
        .enumerate()
        .map(|(genus, level)| CensusRow {
            genus: genus as u32,
            all: level.len(),
            coe: par::map(exec, level, |&s| coe_mask(s))
                .into_iter()
                .filter(|&b| b)
                .count(),
        })
        .collect())
}
