//! Shift and doubling constructions, with the closed formulas they come with.
//!
//! Every constructed semigroup is materialized from its membership
//! definition and its invariants are computed from scratch; the formulas are
//! reported next to the computed values, never substituted for them.

use serde::Serialize;

use crate::coe::is_coe;
use crate::error::{Error, Result};
use crate::semigroup::{sylvester, GeneratorSet, NumericalSemigroup};

/// The invariants a construction report compares.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub multiplicity: u32,
    pub frobenius: i64,
    pub genus: u32,
    pub msg: Vec<u32>,
    pub embedding_dimension: usize,
}

impl Invariants {
    pub fn of(s: &NumericalSemigroup) -> Self {
        Invariants {
            multiplicity: s.multiplicity(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            msg: s.minimal_generators().to_vec(),
            embedding_dimension: s.embedding_dimension(),
        }
    }
}

/// Which predicted invariants matched the computed ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Clauses {
    pub multiplicity: bool,
    pub frobenius: bool,
    pub genus: bool,
    pub msg: bool,
    pub embedding_dimension: bool,
}

impl Clauses {
    fn compare(predicted: &Invariants, computed: &Invariants) -> Self {
        Clauses {
            multiplicity: predicted.multiplicity == computed.multiplicity,
            frobenius: predicted.frobenius == computed.frobenius,
            genus: predicted.genus == computed.genus,
            msg: predicted.msg == computed.msg,
            embedding_dimension: predicted.embedding_dimension == computed.embedding_dimension,
        }
    }

    pub fn all(&self) -> bool {
        self.multiplicity && self.frobenius && self.genus && self.msg && self.embedding_dimension
    }

    /// Names of the clauses that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("multiplicity", self.multiplicity),
            ("frobenius", self.frobenius),
            ("genus", self.genus),
            ("msg", self.msg),
            ("embedding_dimension", self.embedding_dimension),
        ]
        .into_iter()
        .filter_map(|(name, ok)| (!ok).then_some(name))
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub predicted: Invariants,
    pub computed: Invariants,
    pub clauses: Clauses,
}

impl Report {
    fn new(predicted: Invariants, result: &NumericalSemigroup) -> Self {
        let computed = Invariants::of(result);
        let clauses = Clauses::compare(&predicted, &computed);
        Report {
            predicted,
            computed,
            clauses,
        }
    }
}

/// `S_x = ({x} + S) ∪ {0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedLift {
    pub base: NumericalSemigroup,
    pub shift: u32,
    pub result: NumericalSemigroup,
    /// Predicted: `m = x`, `F = F(S) + x`, `g = g(S) + x − 1`,
    /// `msg = Ap(S, x) + x`, `e = m`.
    pub report: Report,
}

impl MedLift {
    pub fn result_is_med(&self) -> bool {
        is_med(&self.result)
    }

    /// An even shift of a Coe-semigroup yields a Coe-semigroup.
    pub fn coe_transfer_holds(&self) -> bool {
        !(self.shift.is_multiple_of(2) && is_coe(&self.base)) || is_coe(&self.result)
    }
}

pub fn med_lift(s: &NumericalSemigroup, x: u32) -> Result<MedLift> {
    let apery = s.apery_set(x)?;
    let result = NumericalSemigroup::from_predicate(s.conductor() + x, |n| {
        n == 0 || (n >= x && s.has(n - x))
    });
    let msg: Vec<u32> = apery.iter().map(|w| w + x).collect();
    let predicted = Invariants {
        multiplicity: x,
        frobenius: s.frobenius() + i64::from(x),
        genus: s.genus() + x - 1,
        embedding_dimension: msg.len(),
        msg,
    };
    let report = Report::new(predicted, &result);
    Ok(MedLift {
        base: s.clone(),
        shift: x,
        result,
        report,
    })
}

/// e(S) = m(S).
pub fn is_med(s: &NumericalSemigroup) -> bool {
    s.embedding_dimension() == s.multiplicity() as usize
}

/// `{t − m(T) : t ∈ T ∖ {0}}` for a semigroup of maximal embedding dimension.
/// ℕ maps to ℕ.
pub fn med_unlift(t: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if !is_med(t) {
        return Err(Error::NotMed);
    }
    let m = t.multiplicity();
    let limit = t.conductor().saturating_sub(m);
    Ok(NumericalSemigroup::from_predicate(limit, |n| t.has(n + m)))
}

/// `T = 2S ∪ ({2s+1} + 2S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleLift {
    pub base: NumericalSemigroup,
    pub s: u32,
    pub result: NumericalSemigroup,
    /// Predicted: `m = 2m(S)`, `F = 2F(S) + 2s + 1`, `g = 2g(S) + s`,
    /// `msg = 2·msg(S) ∪ {2s+1}`, `e = e(S) + 1`.
    pub report: Report,
}

impl DoubleLift {
    /// `2s + 1` is the only odd minimal generator of the result.
    pub fn unique_odd_generator(&self) -> bool {
        let odd: Vec<u32> = self
            .result
            .minimal_generators()
            .iter()
            .copied()
            .filter(|x| x % 2 == 1)
            .collect();
        odd == [2 * self.s + 1]
    }
}

pub fn double_lift(base: &NumericalSemigroup, s: u32) -> Result<DoubleLift> {
    if !base.has(s) || !base.has(s + 1) {
        return Err(Error::PairNotInS(s));
    }
    let odd = 2 * s + 1;
    let limit = 2 * base.conductor() + odd + 1;
    let result = NumericalSemigroup::from_predicate(limit, |n| {
        if n % 2 == 0 {
            base.has(n / 2)
        } else {
            n >= odd && base.has((n - odd) / 2)
        }
    });
    let mut msg: Vec<u32> = base.minimal_generators().iter().map(|g| 2 * g).collect();
    msg.push(odd);
    msg.sort_unstable();
    let predicted = Invariants {
        multiplicity: 2 * base.multiplicity(),
        frobenius: 2 * base.frobenius() + i64::from(odd),
        genus: 2 * base.genus() + s,
        msg,
        embedding_dimension: base.embedding_dimension() + 1,
    };
    let report = Report::new(predicted, &result);
    Ok(DoubleLift {
        base: base.clone(),
        s,
        result,
        report,
    })
}

/// Recovers `(S, s)` from a Coe-semigroup with exactly one odd minimal
/// generator `2s + 1`: `S` is generated by the halves of the even ones.
pub fn double_unlift(t: &NumericalSemigroup) -> Result<(NumericalSemigroup, u32)> {
    if t.is_full() {
        return Err(Error::IsFullSemigroup);
    }
    if !is_coe(t) {
        return Err(Error::NotCoe);
    }
    let (odd, even): (Vec<u32>, Vec<u32>) =
        t.minimal_generators().iter().partition(|&&x| x % 2 == 1);
    let [x] = odd[..] else {
        return Err(Error::NotUniqueOddGenerator);
    };
    let halves = GeneratorSet::new(even.iter().map(|a| a / 2))?;
    let base = NumericalSemigroup::from_generators(&halves)?;
    Ok((base, (x - 1) / 2))
}

/// Frobenius number and genus of a Coe-semigroup with three minimal
/// generators, from the generators alone. The odd generator is located by
/// parity, so argument order does not matter.
pub fn ed3_formulas(n1: u32, n2: u32, n3: u32) -> Result<(i64, u64)> {
    let mut listed = vec![n1, n2, n3];
    listed.sort_unstable();
    let not_ed3 = || Error::NotEd3Coe(listed.clone());
    let gens = GeneratorSet::new(listed.iter().copied()).map_err(|_| not_ed3())?;
    let s = NumericalSemigroup::from_generators(&gens).map_err(|_| not_ed3())?;
    if !is_coe(&s) || s.minimal_generators() != listed.as_slice() {
        return Err(not_ed3());
    }
    let (odd, even): (Vec<u32>, Vec<u32>) = listed.iter().partition(|&&x| x % 2 == 1);
    let (&[odd], &[a, b]) = (&odd[..], &even[..]) else {
        return Err(not_ed3());
    };
    let (a, b, odd) = (i64::from(a), i64::from(b), i64::from(odd));
    let frobenius = odd + a * b / 2 - a - b;
    let genus = (odd - 1) / 2 + (a / 2 - 1) * (b / 2 - 1);
    Ok((frobenius, genus as u64))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ed3Report {
    pub msg: Vec<u32>,
    pub predicted_frobenius: i64,
    pub predicted_genus: u64,
    pub computed_frobenius: i64,
    pub computed_genus: u32,
    pub symmetric: bool,
}

pub fn ed3_report(n1: u32, n2: u32, n3: u32) -> Result<Ed3Report> {
    let (frobenius, genus) = ed3_formulas(n1, n2, n3)?;
    let s = NumericalSemigroup::from_generators(&GeneratorSet::new([n1, n2, n3])?)?;
    Ok(Ed3Report {
        msg: s.minimal_generators().to_vec(),
        predicted_frobenius: frobenius,
        predicted_genus: genus,
        computed_frobenius: s.frobenius(),
        computed_genus: s.genus(),
        symmetric: s.is_symmetric(),
    })
}

/// Instance check that Wilf's inequality passes from `S` to its doubling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WilfReport {
    pub s: u32,
    pub base_wilf: bool,
    pub lifted_wilf: bool,
    pub base_small_count: u32,
    pub lifted_small_count: u32,
    /// `n(T) = 2·n(S) + s`.
    pub small_count_identity: bool,
    /// `wilf(S) ⇒ wilf(T)`.
    pub implication: bool,
}

impl WilfReport {
    pub fn holds(&self) -> bool {
        self.small_count_identity && self.implication
    }
}

pub fn wilf_transfer_check(base: &NumericalSemigroup, s: u32) -> Result<WilfReport> {
    let lift = double_lift(base, s)?;
    let t = &lift.result;
    let base_wilf = base.wilf_holds();
    let lifted_wilf = t.wilf_holds();
    Ok(WilfReport {
        s,
        base_wilf,
        lifted_wilf,
        base_small_count: base.small_count(),
        lifted_small_count: t.small_count(),
        small_count_identity: t.small_count() == 2 * base.small_count() + s,
        implication: !base_wilf || lifted_wilf,
    })
}

/// Whether `⟨2a, 2b, 2s+1⟩` is a valid parametrization of an embedding
/// dimension three Coe-semigroup.
pub fn ed3_parameters_valid(a: u32, b: u32, s: u32) -> bool {
    if sylvester(a, b).is_err() {
        return false;
    }
    let ab = NumericalSemigroup::from_generators(&GeneratorSet::new([a, b]).expect("positive"))
        .expect("coprime");
    ab.has(s) && ab.has(s + 1)
}
