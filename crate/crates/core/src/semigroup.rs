//! Canonical representation of numerical semigroups and their classical
//! invariants.
//!
//! A numerical semigroup is stored as its conductor `c` together with a bitset
//! of the elements in `[0, c)`. Everything at or above the conductor is a
//! member. Because the conductor is always the true one (never an upper
//! bound), structural equality of the fields coincides with equality of the
//! sets.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest table the generator DP is allowed to build.
pub const MAX_TABLE: u64 = 1 << 26;

const WORD: u32 = 64;

/// A nonempty, sorted, duplicate-free set of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(Vec<u32>);

impl GeneratorSet {
    pub fn new(gens: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut gens: Vec<u32> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        gens.sort_unstable();
        gens.dedup();
        Ok(GeneratorSet(gens))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn min(&self) -> u32 {
        self.0[0]
    }

    pub fn max(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |acc, &g| gcd(acc, g))
    }
}

/// Strict syntax: `4,6,7`. No whitespace, no empty items, no signs.
impl FromStr for GeneratorSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let mut gens = Vec::new();
        for item in s.split(',') {
            if item.is_empty() || !item.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            gens.push(item.parse::<u32>().map_err(|_| bad())?);
        }
        GeneratorSet::new(gens)
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// A numerical semigroup: a submonoid of (ℕ, +) with finite complement.
pub struct NumericalSemigroup {
    conductor: u32,
    /// Bit `i` is set iff `i ∈ S`, for `i < conductor`.
    below: Box<[u64]>,
    msg: OnceLock<Box<[u32]>>,
}

/// The JSON view of a semigroup: `{"msg":[...],"frobenius":..,"genus":..,"multiplicity":..}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupInfo {
    pub msg: Vec<u32>,
    pub frobenius: i64,
    pub genus: u32,
    pub multiplicity: u32,
}

impl NumericalSemigroup {
    /// ℕ itself.
    pub fn full() -> Self {
        NumericalSemigroup {
            conductor: 0,
            below: Box::new([]),
            msg: OnceLock::new(),
        }
    }

    /// Builds the semigroup whose members below `limit` are given by `member`
    /// and which contains every integer `>= limit`. The caller guarantees the
    /// result is additively closed.
    pub(crate) fn from_predicate(limit: u32, member: impl Fn(u32) -> bool) -> Self {
        let conductor = (0..limit).rev().find(|&n| !member(n)).map_or(0, |f| f + 1);
        let words = conductor.div_ceil(WORD) as usize;
        let mut below = vec![0u64; words];
        for n in 0..conductor {
            if member(n) {
                below[(n / WORD) as usize] |= 1 << (n % WORD);
            }
        }
        NumericalSemigroup {
            conductor,
            below: below.into_boxed_slice(),
            msg: OnceLock::new(),
        }
    }

    /// The numerical semigroup generated by `gens`.
    ///
    /// Membership is computed by dynamic programming. The table is extended
    /// until `m(S)` consecutive members appear, which pins the conductor
    /// exactly; by the Sylvester bound this happens before `min·max`.
    pub fn from_generators(gens: &GeneratorSet) -> Result<Self> {
        let d = gens.gcd();
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let g = gens.as_slice();
        let m = g[0];
        if m == 1 {
            return Ok(Self::full());
        }
        let cap = u64::from(m) * u64::from(gens.max()) + u64::from(m);
        let limit = cap.min(MAX_TABLE);
        let mut table: Vec<bool> = Vec::new();
        let mut run = 0u32;
        let mut n = 0u64;
        loop {
            if n >= limit {
                return Err(Error::BoundTooLarge { limit: MAX_TABLE });
            }
            let k = n as usize;
            let member = k == 0
                || g.iter()
                    .take_while(|&&x| (x as usize) <= k)
                    .any(|&x| table[k - x as usize]);
            table.push(member);
            if member {
                run += 1;
                if run == m {
                    break;
                }
            } else {
                run = 0;
            }
            n += 1;
        }
        let conductor = (n + 1 - u64::from(m)) as u32;
        Ok(Self::from_predicate(conductor, |k| table[k as usize]))
    }

    /// Builds `{e_0, e_1, …, c, →}` from the elements below the conductor and
    /// the conductor itself.
    pub fn with_small_elements(elements: &[u32], conductor: u32) -> Result<Self> {
        let mut table = vec![false; conductor as usize];
        for &e in elements {
            if e >= conductor {
                continue;
            }
            table[e as usize] = true;
        }
        if conductor > 0 && !table[0] {
            return Err(Error::NotASemigroup);
        }
        let small: Vec<u32> = (0..conductor).filter(|&n| table[n as usize]).collect();
        for (i, &a) in small.iter().enumerate() {
            for &b in &small[i..] {
                let s = a + b;
                if s < conductor && !table[s as usize] {
                    return Err(Error::NotASemigroup);
                }
            }
        }
        Ok(Self::from_predicate(conductor, |n| table[n as usize]))
    }

    /// Builds a semigroup from its gap set, checking additive closure.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        let conductor = gaps.iter().max().map_or(0, |&f| f + 1);
        let mut table = vec![true; conductor as usize];
        for &g in gaps {
            if g == 0 {
                return Err(Error::NotASemigroup);
            }
            table[g as usize] = false;
        }
        let small: Vec<u32> = (0..conductor).filter(|&n| table[n as usize]).collect();
        Self::with_small_elements(&small, conductor)
    }

    #[inline]
    pub(crate) fn has(&self, n: u32) -> bool {
        n >= self.conductor || self.below[(n / WORD) as usize] >> (n % WORD) & 1 == 1
    }

    /// Membership test; negative integers are never members.
    pub fn contains<N: Into<i64>>(&self, n: N) -> bool {
        let n = n.into();
        if n < 0 {
            return false;
        }
        n >= i64::from(self.conductor) || self.has(n as u32)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_full(&self) -> bool {
        self.conductor == 0
    }

    /// F(S); −1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        i64::from(self.conductor) - 1
    }

    pub fn genus(&self) -> u32 {
        let members: u32 = self.below.iter().map(|w| w.count_ones()).sum();
        self.conductor - members
    }

    /// m(S); 1 for ℕ.
    pub fn multiplicity(&self) -> u32 {
        if self.is_full() {
            return 1;
        }
        (1..self.conductor)
            .find(|&n| self.has(n))
            .unwrap_or(self.conductor)
    }

    /// Elements strictly below the conductor, ascending.
    pub fn small_elements(&self) -> Vec<u32> {
        (0..self.conductor).filter(|&n| self.has(n)).collect()
    }

    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor).filter(|&n| !self.has(n)).collect()
    }

    /// The minimal system of generators, ascending. Computed once.
    ///
    /// Every minimal generator other than m(S) lies in Ap(S, m(S)), so only
    /// those candidates are sieved.
    pub fn minimal_generators(&self) -> &[u32] {
        self.msg.get_or_init(|| {
            if self.is_full() {
                return Box::new([1]);
            }
            let m = self.multiplicity();
            let mut out = vec![m];
            for w in self.apery_unchecked(m).into_iter().skip(1) {
                let decomposable = (m..=w / 2).any(|t| self.has(t) && self.has(w - t));
                if !decomposable {
                    out.push(w);
                }
            }
            out.sort_unstable();
            out.into_boxed_slice()
        })
    }

    /// e(S) = |msg(S)|.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    pub fn generator_set(&self) -> GeneratorSet {
        GeneratorSet(self.minimal_generators().to_vec())
    }

    /// Ap(S, n) sorted ascending: the least element of S in each class mod `n`.
    pub fn apery_set(&self, n: u32) -> Result<Vec<u32>> {
        if n == 0 || !self.has(n) {
            return Err(Error::NotAnElement(n));
        }
        Ok(self.apery_unchecked(n))
    }

    /// `w(i)` for `i = 0..n`, indexed by residue.
    pub fn apery_by_residue(&self, n: u32) -> Result<Vec<u32>> {
        if n == 0 || !self.has(n) {
            return Err(Error::NotAnElement(n));
        }
        Ok((0..n).map(|i| self.least_in_class(i, n)).collect())
    }

    fn least_in_class(&self, i: u32, n: u32) -> u32 {
        let mut w = i;
        while !self.has(w) {
            w += n;
        }
        w
    }

    fn apery_unchecked(&self, n: u32) -> Vec<u32> {
        let mut ap: Vec<u32> = (0..n).map(|i| self.least_in_class(i, n)).collect();
        ap.sort_unstable();
        ap
    }

    /// S ∖ {x}; requires x ∈ msg(S).
    pub fn remove_element(&self, x: u32) -> Result<Self> {
        if self.minimal_generators().binary_search(&x).is_err() {
            return Err(Error::NotMinimalGenerator(x));
        }
        Ok(self.without(&[x]))
    }

    /// S ∖ {x, x+1}; requires {x, x+1} ⊆ msg(S).
    pub fn remove_pair(&self, x: u32) -> Result<Self> {
        let msg = self.minimal_generators();
        let ok = x
            .checked_add(1)
            .is_some_and(|y| msg.binary_search(&x).is_ok() && msg.binary_search(&y).is_ok());
        if !ok {
            return Err(Error::PairNotMinimal(x));
        }
        Ok(self.without(&[x, x + 1]))
    }

    pub(crate) fn without(&self, removed: &[u32]) -> Self {
        let limit = removed
            .iter()
            .map(|&r| r + 1)
            .max()
            .unwrap_or(0)
            .max(self.conductor);
        Self::from_predicate(limit, |n| self.has(n) && !removed.contains(&n))
    }

    /// The gaps that [`fill_frobenius`](Self::fill_frobenius) adds: `{F}` or `{F−1, F}`.
    pub fn frobenius_fill_set(&self) -> Result<Vec<u32>> {
        if self.is_full() {
            return Err(Error::AlreadyFull);
        }
        let f = self.conductor - 1;
        Ok([f.checked_sub(1), Some(f)]
            .into_iter()
            .flatten()
            .filter(|&n| !self.has(n))
            .collect())
    }

    /// S ∪ {F(S) − 1, F(S)}.
    pub fn fill_frobenius(&self) -> Result<Self> {
        let added = self.frobenius_fill_set()?;
        Ok(Self::from_predicate(self.conductor, |n| {
            self.has(n) || added.contains(&n)
        }))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let limit = self.conductor.max(other.conductor);
        Self::from_predicate(limit, |n| self.has(n) && other.has(n))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.conductor >= other.conductor
            && (0..self.conductor).all(|n| !self.has(n) || other.has(n))
    }

    /// g(S) = (F(S) + 1) / 2.
    pub fn is_symmetric(&self) -> bool {
        2 * i64::from(self.genus()) == self.frobenius() + 1
    }

    /// n(S) = F(S) + 1 − g(S), the number of elements of S below F(S).
    pub fn small_count(&self) -> u32 {
        self.conductor - self.genus()
    }

    /// g(S) ≤ (e(S) − 1)·n(S).
    pub fn wilf_holds(&self) -> bool {
        let e = self.embedding_dimension() as u64;
        u64::from(self.genus()) <= (e - 1) * u64::from(self.small_count())
    }

    pub fn info(&self) -> SemigroupInfo {
        SemigroupInfo {
            msg: self.minimal_generators().to_vec(),
            frobenius: self.frobenius(),
            genus: self.genus(),
            multiplicity: self.multiplicity(),
        }
    }

    /// Listing in the form `{0,6,8,12,→}`.
    pub fn notation(&self) -> String {
        if self.is_full() {
            return "ℕ".to_string();
        }
        let mut s = String::from("{");
        for e in self.small_elements() {
            s.push_str(&format!("{e},"));
        }
        s.push_str(&format!("{},→}}", self.conductor));
        s
    }
}

/// Frobenius number and genus of ⟨a, b⟩ for coprime `2 ≤ a < b`.
pub fn sylvester(a: u32, b: u32) -> Result<(i64, u64)> {
    if a < 2 || a >= b || gcd(a, b) != 1 {
        return Err(Error::BadArguments(format!(
            "sylvester needs coprime 2 <= a < b, got ({a}, {b})"
        )));
    }
    let (a, b) = (i64::from(a), i64::from(b));
    Ok((a * b - a - b, ((a - 1) * (b - 1) / 2) as u64))
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        NumericalSemigroup {
            conductor: self.conductor,
            below: self.below.clone(),
            msg: self.msg.clone(),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor && self.below == other.below
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor.hash(state);
        self.below.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.below.cmp(&other.below))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

/// Renders the minimal generators as `⟨a,b,…⟩`, and ℕ as `ℕ`.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            return f.write_str("ℕ");
        }
        f.write_str("⟨")?;
        write_list(f, self.minimal_generators())?;
        f.write_str("⟩")
    }
}
