//! The Coe predicate, chains to ℕ, and the Coe-closure of a set.
//!
//! A numerical semigroup is *coated with odd elements* (a Coe-semigroup)
//! when `x − 1` and `x + 1` belong to it for every odd member `x`. It is
//! enough to check the odd minimal generators.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{GeneratorSet, NumericalSemigroup};

/// Checks the coating condition on the odd minimal generators only.
pub fn is_coe(s: &NumericalSemigroup) -> bool {
    s.minimal_generators()
        .iter()
        .filter(|&&x| x % 2 == 1)
        .all(|&x| s.has(x - 1) && s.has(x + 1))
}

/// Parity facts every Coe-semigroup other than ℕ satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoeSanity {
    pub multiplicity_even: bool,
    pub frobenius_odd: bool,
}

impl CoeSanity {
    pub fn holds(&self) -> bool {
        self.multiplicity_even && self.frobenius_odd
    }
}

pub fn coe_sanity(s: &NumericalSemigroup) -> Result<CoeSanity> {
    if s.is_full() {
        return Err(Error::IsFullSemigroup);
    }
    if !is_coe(s) {
        return Err(Error::NotCoe);
    }
    Ok(CoeSanity {
        multiplicity_even: s.multiplicity().is_multiple_of(2),
        frobenius_odd: s.frobenius() % 2 == 1,
    })
}

/// `S = S₀ ⊊ S₁ ⊊ … ⊊ S_k = ℕ` where each link fills in the Frobenius number
/// and its predecessor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRecord {
    pub links: Vec<NumericalSemigroup>,
}

impl ChainRecord {
    pub fn length(&self) -> usize {
        self.links.len() - 1
    }
}

pub fn chain_to_full(s: &NumericalSemigroup) -> Result<ChainRecord> {
    if !is_coe(s) {
        return Err(Error::NotCoe);
    }
    let mut links = vec![s.clone()];
    loop {
        let last = links.last().expect("chain starts nonempty");
        if last.is_full() {
            break;
        }
        let next = last.fill_frobenius()?;
        links.push(next);
    }
    Ok(ChainRecord { links })
}

/// A submonoid of ℕ that is an intersection of Coe-semigroups.
///
/// Either the monoid contains an odd element, in which case it is itself a
/// Coe-semigroup (`scale == 1`), or all its elements are even and it equals
/// `scale · base` for a numerical semigroup `base` and an even `scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeMonoid {
    scale: u32,
    base: NumericalSemigroup,
}

impl CoeMonoid {
    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn is_semigroup(&self) -> bool {
        self.scale == 1
    }

    pub fn contains(&self, n: u64) -> bool {
        n.is_multiple_of(u64::from(self.scale))
            && self.base.contains((n / u64::from(self.scale)) as i64)
    }

    /// Minimal generators of the monoid itself (not of the base).
    pub fn minimal_generators(&self) -> Vec<u32> {
        self.base
            .minimal_generators()
            .iter()
            .map(|&g| g * self.scale)
            .collect()
    }

    pub fn into_semigroup(self) -> Option<NumericalSemigroup> {
        self.is_semigroup().then_some(self.base)
    }
}

/// Decides whether ⟨gens⟩ is a Coe-monoid.
///
/// All-even generators always give one. Otherwise every odd minimal
/// generator `x` must have `x ± 1` in the monoid.
pub fn classify_monoid(gens: &GeneratorSet) -> Option<CoeMonoid> {
    let d = gens.gcd();
    let reduced = GeneratorSet::new(gens.as_slice().iter().map(|&g| g / d))
        .expect("dividing positive generators by their gcd keeps them positive");
    let base = NumericalSemigroup::from_generators(&reduced)
        .expect("generators divided by their gcd have gcd 1");
    let monoid = CoeMonoid { scale: d, base };
    if d.is_multiple_of(2) {
        return Some(monoid);
    }
    let ok = monoid
        .minimal_generators()
        .iter()
        .filter(|&&x| x % 2 == 1)
        .all(|&x| monoid.contains(u64::from(x) - 1) && monoid.contains(u64::from(x) + 1));
    ok.then_some(monoid)
}

/// The smallest Coe-monoid containing `x`: the monoid generated by `x`
/// together with `y − 1` and `y + 1` for each odd `y ∈ x`.
pub fn coe_closure(x: &GeneratorSet) -> CoeMonoid {
    let mut a: Vec<u32> = x.as_slice().to_vec();
    for &y in x.as_slice().iter().filter(|&&y| y % 2 == 1) {
        if y > 1 {
            a.push(y - 1);
        }
        a.push(y + 1);
    }
    let a = GeneratorSet::new(a).expect("closure generators are positive");
    classify_monoid(&a).expect("the coated generating set always gives a Coe-monoid")
}
