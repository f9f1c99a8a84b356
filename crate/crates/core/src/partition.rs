//! Sets with overlapping parts.
//!
//! Parts may overlap, nest, fail to cover, or be empty; the family of parts
//! may itself be empty. Parts are stored as a set, so identical parts collapse.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartitionedSet<T: Ord = VertexId> {
    underlying: BTreeSet<T>,
    parts: BTreeSet<BTreeSet<T>>,
}

impl<T: Ord + fmt::Debug> fmt::Debug for PartitionedSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartitionedSet")
            .field("underlying", &self.underlying)
            .field("parts", &self.parts)
            .finish()
    }
}

impl<T: Ord + Clone + fmt::Debug> PartitionedSet<T> {
    /// Fails when a part is not contained in the underlying set.
    pub fn new(underlying: BTreeSet<T>, parts: impl IntoIterator<Item = BTreeSet<T>>) -> Result<Self> {
        let parts: BTreeSet<BTreeSet<T>> = parts.into_iter().collect();
        if let Some(bad) = parts.iter().find(|p| !p.is_subset(&underlying)) {
            return Err(Error::Domain(format!("part {bad:?} is not contained in the underlying set")));
        }
        Ok(Self { underlying, parts })
    }

    pub(crate) fn from_trusted(underlying: BTreeSet<T>, parts: BTreeSet<BTreeSet<T>>) -> Self {
        debug_assert!(parts.iter().all(|p| p.is_subset(&underlying)));
        Self { underlying, parts }
    }

    pub fn underlying(&self) -> &BTreeSet<T> {
        &self.underlying
    }

    pub fn parts(&self) -> &BTreeSet<BTreeSet<T>> {
        &self.parts
    }

    pub fn has_part(&self, p: &BTreeSet<T>) -> bool {
        self.parts.contains(p)
    }

    /// True when the whole underlying set is one of the parts.
    pub fn has_full_part(&self) -> bool {
        self.parts.contains(&self.underlying)
    }

    /// Parts that are not strictly contained in another part.
    pub fn maximal_parts(&self) -> BTreeSet<BTreeSet<T>> {
        self.parts
            .iter()
            .filter(|p| !self.parts.iter().any(|q| p.len() < q.len() && p.is_subset(q)))
            .cloned()
            .collect()
    }
}

/// A total function between underlying sets, checked against the parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMorphism<S: Ord = VertexId, T: Ord = VertexId> {
    pub source: PartitionedSet<S>,
    pub target: PartitionedSet<T>,
    pub map: BTreeMap<S, T>,
}

/// A source part whose image lies in no target part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncoveredPart<S, T> {
    pub part: BTreeSet<S>,
    pub image: BTreeSet<T>,
}

impl<S: Ord + fmt::Debug, T: Ord + fmt::Debug> fmt::Display for UncoveredPart<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "image {:?} of part {:?} lies in no target part", self.image, self.part)
    }
}

/// Checks that every source part maps into some target part. The outer error
/// is a domain error (map not total or leaving the target); the inner one
/// lists the uncovered parts.
#[allow(clippy::type_complexity)]
pub fn validate_partition_morphism<S, T>(
    m: &PartitionMorphism<S, T>,
) -> Result<core::result::Result<(), Vec<UncoveredPart<S, T>>>>
where
    S: Ord + Clone + fmt::Debug,
    T: Ord + Clone + fmt::Debug,
{
    check_parts_map(&m.source, &m.target, |s| m.map.get(s).cloned())
}

#[allow(clippy::type_complexity)]
pub(crate) fn check_parts_map<S, T, F>(
    source: &PartitionedSet<S>,
    target: &PartitionedSet<T>,
    f: F,
) -> Result<core::result::Result<(), Vec<UncoveredPart<S, T>>>>
where
    S: Ord + Clone + fmt::Debug,
    T: Ord + Clone + fmt::Debug,
    F: Fn(&S) -> Option<T>,
{
    let mut image_of = BTreeMap::new();
    for s in &source.underlying {
        let t = f(s).ok_or_else(|| Error::Domain(format!("map is not total: {s:?} has no image")))?;
        if !target.underlying.contains(&t) {
            return Err(Error::Domain(format!("{s:?} maps to {t:?} outside the target set")));
        }
        image_of.insert(s, t);
    }
    let mut uncovered = Vec::new();
    for p in &source.parts {
        let image: BTreeSet<T> = p.iter().map(|s| image_of[s].clone()).collect();
        if !target.parts.iter().any(|q| image.is_subset(q)) {
            uncovered.push(UncoveredPart { part: p.clone(), image });
        }
    }
    Ok(if uncovered.is_empty() { Ok(()) } else { Err(uncovered) })
}

/// Identity on the underlying set, as a partition morphism `a → b`.
pub fn identity_morphism<T: Ord + Clone>(a: &PartitionedSet<T>, b: &PartitionedSet<T>) -> PartitionMorphism<T, T> {
    PartitionMorphism {
        source: a.clone(),
        target: b.clone(),
        map: a.underlying.iter().map(|x| (x.clone(), x.clone())).collect(),
    }
}

/// Drops every part strictly contained in another part.
pub fn remove_spurious<T: Ord + Clone + fmt::Debug>(p: &PartitionedSet<T>) -> PartitionedSet<T> {
    PartitionedSet {
        underlying: p.underlying.clone(),
        parts: p.maximal_parts(),
    }
}

/// Why one partitioned set fails to refine another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefinementViolation<T> {
    /// A part of the finer set lies in no part of the coarser one.
    NotContained(BTreeSet<T>),
    /// A part of the coarser set is missing from the finer one.
    Missing(BTreeSet<T>),
}

/// `p1` refines `p2` when every part of `p1` lies in a part of `p2` and every
/// part of `p2` is a part of `p1`. Reports the first offending part in sorted
/// order, containment clause first.
pub fn is_refinement<T: Ord + Clone + fmt::Debug>(
    p1: &PartitionedSet<T>,
    p2: &PartitionedSet<T>,
) -> Result<core::result::Result<(), RefinementViolation<T>>> {
    if p1.underlying != p2.underlying {
        return Err(Error::Domain("refinement needs equal underlying sets".into()));
    }
    if let Some(p) = p1.parts.iter().find(|p| !p2.parts.iter().any(|q| p.is_subset(q))) {
        return Ok(Err(RefinementViolation::NotContained(p.clone())));
    }
    if let Some(q) = p2.parts.iter().find(|q| !p1.parts.contains(*q)) {
        return Ok(Err(RefinementViolation::Missing(q.clone())));
    }
    Ok(Ok(()))
}

/// `Υ`: replace every element (itself a vertex set) by the union of its members.
pub fn part_union(a: &PartitionedSet<VertexSet>) -> PartitionedSet<VertexId> {
    let union = |family: &BTreeSet<VertexSet>| -> VertexSet { family.iter().flatten().cloned().collect() };
    PartitionedSet {
        underlying: union(&a.underlying),
        parts: a.parts.iter().map(union).collect(),
    }
}

/// Parts are pairwise disjoint.
pub fn is_non_overlapping<T: Ord>(p: &PartitionedSet<T>) -> bool {
    let mut seen = BTreeSet::new();
    p.parts.iter().all(|part| part.iter().all(|x| seen.insert(x)))
}
