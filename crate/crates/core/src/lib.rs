//! Numerical semigroups coated with odd elements.
//!
//! A numerical semigroup `S` is a *Coe-semigroup* when `x − 1` and `x + 1`
//! lie in `S` for every odd `x ∈ S`. This crate provides:
//!
//! - [`semigroup`]: a canonical representation of numerical semigroups with
//!   membership, Frobenius number, genus, multiplicity, minimal generators
//!   and Apéry sets;
//! - [`coe`]: the Coe predicate, the chain of a Coe-semigroup up to ℕ, and
//!   the Coe-closure of a set of integers;
//! - [`trees`]: breadth-first enumeration of the rooted trees of all
//!   Coe-semigroups and of the three finite restricted families;
//! - [`constructions`]: the shift `({x}+S) ∪ {0}` and the doubling
//!   `2S ∪ ({2s+1}+2S)`, each reporting predicted versus computed invariants;
//! - [`oracle`]: an independent brute-force enumeration of all numerical
//!   semigroups by genus, used to cross-check everything else.
//!
//! ```
//! use coe_core::{coe, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::from_generators(&"4,6,7".parse().unwrap()).unwrap();
//! assert!(coe::is_coe(&s));
//! assert_eq!((s.frobenius(), s.genus()), (9, 5));
//! assert_eq!(coe::chain_to_full(&s).unwrap().length(), 4);
//! ```

pub mod coe;
pub mod constructions;
pub mod error;
pub mod oracle;
pub mod par;
pub mod semigroup;
pub mod trees;

pub use coe::{chain_to_full, classify_monoid, coe_closure, is_coe, ChainRecord, CoeMonoid};
pub use error::{Error, Result};
pub use par::Execution;
pub use semigroup::{sylvester, GeneratorSet, NumericalSemigroup, SemigroupInfo};
pub use trees::{enumerate, EnumerationBound, Family, Tree, TreeEdge, TreeSpec};
