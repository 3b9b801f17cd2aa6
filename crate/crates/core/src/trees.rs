//! Rooted trees of Coe-semigroups.
//!
//! Every Coe-semigroup `S ≠ ℕ` has a parent `S ∪ {F(S)−1, F(S)}`, which is
//! again Coe. Following these links from any vertex reaches ℕ, so the
//! Coe-semigroups form a tree rooted at ℕ. Traversal goes the other way:
//! the sons of `S` are obtained by removing either one odd minimal
//! generator above `F(S)` or the pair `{F(S)+1, F(S)+2}` when both are
//! minimal generators. The three restricted families (containing `k`,
//! Frobenius number at most `F`, genus at most `g`) are subtrees with
//! filtered son rules.
//!
//! Edges are stored parent → child. Each vertex is produced exactly once, so
//! the traversal keeps no visited set.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::coe::is_coe;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    All,
    ContainsK(u32),
    FrobAtMost(u32),
    GenusAtMost(u32),
}

impl Family {
    /// Families with finitely many members.
    pub fn is_finite(self) -> bool {
        match self {
            Family::All => false,
            Family::ContainsK(k) => k % 2 == 1,
            Family::FrobAtMost(_) | Family::GenusAtMost(_) => true,
        }
    }

    pub fn contains(self, s: &NumericalSemigroup) -> bool {
        is_coe(s)
            && match self {
                Family::All => true,
                Family::ContainsK(k) => s.contains(k),
                Family::FrobAtMost(f) => s.frobenius() <= i64::from(f),
                Family::GenusAtMost(g) => s.genus() <= g,
            }
    }
}

/// Stopping rule for traversal. `max_genus` prunes children of larger genus,
/// `max_depth` stops expanding at that depth, `max_nodes` truncates the
/// breadth-first emission after that many vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationBound {
    pub max_genus: Option<u32>,
    pub max_depth: Option<u32>,
    pub max_nodes: Option<usize>,
}

impl EnumerationBound {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn genus(g: u32) -> Self {
        EnumerationBound {
            max_genus: Some(g),
            ..Self::default()
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.max_genus.is_none() && self.max_depth.is_none() && self.max_nodes.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeSpec {
    pub family: Family,
    pub bound: EnumerationBound,
}

impl TreeSpec {
    pub fn new(family: Family, bound: EnumerationBound) -> Result<Self> {
        let spec = TreeSpec { family, bound };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            Family::ContainsK(0) | Family::FrobAtMost(0) | Family::GenusAtMost(0) => {
                return Err(Error::BadArguments(
                    "family parameter must be a positive integer".into(),
                ))
            }
            _ => {}
        }
        if !self.family.is_finite() && self.bound.is_unlimited() {
            return Err(Error::UnboundedInfiniteFamily);
        }
        Ok(())
    }
}

/// A parent → child edge labelled with the removed elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub parent: NumericalSemigroup,
    pub child: NumericalSemigroup,
    pub removed: Vec<u32>,
}

/// Removal sets producing the sons of `s` in the tree of `family`, ordered
/// by their least element. Assumes `s` is a vertex of that tree.
pub(crate) fn son_removals(s: &NumericalSemigroup, family: Family) -> Vec<Vec<u32>> {
    let (allow_singles, allow_pair) = match family {
        Family::GenusAtMost(g) => {
            let genus = s.genus();
            (genus < g, genus + 2 <= g)
        }
        _ => (true, true),
    };
    let allowed = |x: u32| match family {
        Family::All | Family::GenusAtMost(_) => true,
        Family::ContainsK(k) => x != k,
        Family::FrobAtMost(bound) => x <= bound,
    };
    let msg = s.minimal_generators();
    let f = s.frobenius();
    let mut out = Vec::new();
    // F(S) + 1 as an unsigned value; zero for ℕ, which is never a generator.
    let p = s.conductor();
    if allow_pair
        && allowed(p)
        && allowed(p + 1)
        && msg.binary_search(&p).is_ok()
        && msg.binary_search(&(p + 1)).is_ok()
    {
        out.push(vec![p, p + 1]);
    }
    if allow_singles {
        out.extend(
            msg.iter()
                .filter(|&&x| x % 2 == 1 && i64::from(x) > f && allowed(x))
                .map(|&x| vec![x]),
        );
    }
    out
}

fn edges_for(s: &NumericalSemigroup, family: Family) -> Vec<TreeEdge> {
    son_removals(s, family)
        .into_iter()
        .map(|removed| TreeEdge {
            parent: s.clone(),
            child: s.without(&removed),
            removed,
        })
        .collect()
}

fn require_coe(s: &NumericalSemigroup) -> Result<()> {
    if is_coe(s) {
        Ok(())
    } else {
        Err(Error::NotCoe)
    }
}

/// Sons of `s` in the tree of all Coe-semigroups.
pub fn sons_all(s: &NumericalSemigroup) -> Result<Vec<TreeEdge>> {
    require_coe(s)?;
    Ok(edges_for(s, Family::All))
}

/// Sons in the tree of Coe-semigroups containing `k`.
pub fn sons_contains_k(s: &NumericalSemigroup, k: u32) -> Result<Vec<TreeEdge>> {
    require_coe(s)?;
    if !s.contains(k) {
        return Err(Error::KNotMember(k));
    }
    Ok(edges_for(s, Family::ContainsK(k)))
}

/// Sons in the tree of Coe-semigroups with Frobenius number at most `bound`.
pub fn sons_frob_bounded(s: &NumericalSemigroup, bound: u32) -> Result<Vec<TreeEdge>> {
    require_coe(s)?;
    if s.frobenius() > i64::from(bound) {
        return Err(Error::FrobExceeded {
            frobenius: s.frobenius(),
            bound,
        });
    }
    Ok(edges_for(s, Family::FrobAtMost(bound)))
}

/// Sons in the tree of Coe-semigroups with genus at most `bound`.
pub fn sons_genus_bounded(s: &NumericalSemigroup, bound: u32) -> Result<Vec<TreeEdge>> {
    require_coe(s)?;
    if s.genus() > bound {
        return Err(Error::GenusExceeded {
            genus: s.genus(),
            bound,
        });
    }
    Ok(edges_for(s, Family::GenusAtMost(bound)))
}

/// Dispatches to the son rule of `family`, with its precondition checks.
pub fn sons(s: &NumericalSemigroup, family: Family) -> Result<Vec<TreeEdge>> {
    match family {
        Family::All => sons_all(s),
        Family::ContainsK(k) => sons_contains_k(s, k),
        Family::FrobAtMost(f) => sons_frob_bounded(s, f),
        Family::GenusAtMost(g) => sons_genus_bounded(s, g),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeVertex {
    pub semigroup: NumericalSemigroup,
    /// Index of the parent in [`Tree::vertices`]; `None` for the root.
    pub parent: Option<usize>,
    pub removed: Option<Vec<u32>>,
    pub depth: u32,
}

/// A borrowed parent → child edge of an enumerated tree.
#[derive(Debug, Clone, Copy)]
pub struct EdgeRef<'a> {
    pub parent: &'a NumericalSemigroup,
    pub child: &'a NumericalSemigroup,
    pub removed: &'a [u32],
}

/// One JSON-lines record per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeRecord {
    pub msg: Vec<u32>,
    pub genus: u32,
    pub frobenius: i64,
    pub parent_msg: Option<Vec<u32>>,
    pub removed: Option<Vec<u32>>,
}

/// Vertices in breadth-first order; siblings follow the son-rule order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    vertices: Vec<TreeVertex>,
}

impl Tree {
    pub fn vertices(&self) -> &[TreeVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn semigroups(&self) -> impl Iterator<Item = &NumericalSemigroup> {
        self.vertices.iter().map(|v| &v.semigroup)
    }

    pub fn into_semigroups(self) -> Vec<NumericalSemigroup> {
        self.vertices.into_iter().map(|v| v.semigroup).collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeRef<'_>> {
        self.vertices.iter().filter_map(|v| {
            Some(EdgeRef {
                parent: &self.vertices[v.parent?].semigroup,
                child: &v.semigroup,
                removed: v.removed.as_deref()?,
            })
        })
    }

    /// Debug check that no semigroup was produced twice.
    pub fn is_unique(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.len());
        self.semigroups().all(|s| seen.insert(s))
    }

    pub fn records(&self) -> Vec<TreeRecord> {
        self.vertices
            .iter()
            .map(|v| TreeRecord {
                msg: v.semigroup.minimal_generators().to_vec(),
                genus: v.semigroup.genus(),
                frobenius: v.semigroup.frobenius(),
                parent_msg: v
                    .parent
                    .map(|p| self.vertices[p].semigroup.minimal_generators().to_vec()),
                removed: v.removed.clone(),
            })
            .collect()
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in self.records() {
            out.push_str(&serde_json::to_string(&r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    /// Graphviz rendering: nodes labelled `⟨a,b,…⟩`, edges labelled with
    /// the removed set.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph coe {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", v.semigroup);
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if let (Some(p), Some(removed)) = (v.parent, &v.removed) {
                let label: Vec<String> = removed.iter().map(u32::to_string).collect();
                let _ = writeln!(out, "  n{p} -> n{i} [label=\"{{{}}}\"];", label.join(","));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first traversal from ℕ.
pub fn enumerate(spec: &TreeSpec) -> Result<Tree> {
    enumerate_with(spec, Execution::default())
}

/// Like [`enumerate`], choosing how each level's sons are generated. The
/// output is identical for both execution modes.
pub fn enumerate_with(spec: &TreeSpec, exec: Execution) -> Result<Tree> {
    spec.validate()?;
    let bound = spec.bound;
    let max_nodes = bound.max_nodes.unwrap_or(usize::MAX);
    let mut vertices = vec![TreeVertex {
        semigroup: NumericalSemigroup::full(),
        parent: None,
        removed: None,
        depth: 0,
    }];
    if max_nodes == 0 {
        vertices.clear();
        return Ok(Tree { vertices });
    }
    let mut frontier: Vec<usize> = vec![0];
    let mut depth = 0u32;
    while !frontier.is_empty() && vertices.len() < max_nodes {
        if bound.max_depth.is_some_and(|d| depth >= d) {
            break;
        }
        let level: Vec<(usize, &NumericalSemigroup)> = frontier
            .iter()
            .map(|&i| (i, &vertices[i].semigroup))
            .collect();
        let children = par::map(exec, &level, |&(i, s)| {
            son_removals(s, spec.family)
                .into_iter()
                .map(|removed| (i, s.without(&removed), removed))
                .filter(|(_, child, _)| bound.max_genus.is_none_or(|g| child.genus() <= g))
                .collect::<Vec<_>>()
        });
        depth += 1;
        let mut next = Vec::new();
        'level: for (parent, child, removed) in children.into_iter().flatten() {
            if vertices.len() >= max_nodes {
                break 'level;
            }
            next.push(vertices.len());
            vertices.push(TreeVertex {
                semigroup: child,
                parent: Some(parent),
                removed: Some(removed),
                depth,
            });
        }
        frontier = next;
    }
    Ok(Tree { vertices })
}

/// Number of Coe-semigroups of each genus `0..=g_max`.
pub fn count_by_genus(g_max: u32) -> Vec<usize> {
    count_by_genus_with(g_max, Execution::default())
}

pub fn count_by_genus_with(g_max: u32, exec: Execution) -> Vec<usize> {
    let spec = TreeSpec {
        family: Family::All,
        bound: EnumerationBound::genus(g_max),
    };
    let tree = enumerate_with(&spec, exec).expect("genus-bounded spec is valid");
    let mut counts = vec![0; g_max as usize + 1];
    for s in tree.semigroups() {
        counts[s.genus() as usize] += 1;
    }
    counts
}
