//! Invariable generation of finite groups.
//!
//! `S` invariably generates `G` when every choice of conjugates `c_s ∼ s`
//! generates `G`. Two independent deciders are provided: a search over
//! tuples of class members, and the maximal-subgroup criterion (no maximal
//! subgroup meets the class of every `s ∈ S`). They must always agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_SUBGROUP_CAP};
use crate::perm::Perm;

/// Largest group order accepted by [`min_invariable_size`].
pub const DEFAULT_SEARCH_CAP: usize = 10_000;

/// A choice of conjugates that fails to generate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IgWitness {
    /// `(s, c_s)` pairs in the order of `S`.
    pub choice: Vec<(Perm, Perm)>,
    /// `|⟨c_s⟩|`, always smaller than `|G|`.
    pub generated_order: usize,
}

impl IgWitness {
    /// Re-checks the witness from scratch against `group`.
    pub fn validate(&self, group: &FiniteGroup) -> Result<bool> {
        for (s, c) in &self.choice {
            if !group.are_conjugate(s, c)? {
                return Ok(false);
            }
        }
        let chosen: Vec<Perm> = self.choice.iter().map(|(_, c)| c.clone()).collect();
        let order = crate::group::closure(&chosen)?.order();
        Ok(order == self.generated_order && order < group.order())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IgVerdict {
    pub invariably_generates: bool,
    pub witness: Option<IgWitness>,
}

/// Whether the first conjugate is pinned to `s₁` itself.
///
/// Conjugating a whole tuple by one element preserves generation, so any
/// failing tuple can be moved to one whose first entry is `s₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pruning {
    FixFirst,
    Exhaustive,
}

fn dedup_indices(group: &FiniteGroup, set: &[Perm]) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(Error::Precondition("the candidate set is empty".into()));
    }
    let mut out: Vec<usize> = Vec::new();
    for p in set {
        let i = group.require_index(p)?;
        if !out.contains(&i) {
            out.push(i);
        }
    }
    Ok(out)
}

pub fn invariably_generates(group: &FiniteGroup, set: &[Perm]) -> Result<IgVerdict> {
    invariably_generates_with(group, set, Pruning::FixFirst)
}

/// Tuple search over class members. Tuples are visited lexicographically
/// (members of each class in sorted order); the first failing tuple is the
/// witness. A prefix that already generates `G` is not expanded further.
pub fn invariably_generates_with(
    group: &FiniteGroup,
    set: &[Perm],
    pruning: Pruning,
) -> Result<IgVerdict> {
    let s = dedup_indices(group, set)?;
    let n = group.order();
    let candidates: Vec<Vec<usize>> = s
        .iter()
        .enumerate()
        .map(|(pos, &si)| {
            if pos == 0 && pruning == Pruning::FixFirst {
                vec![si]
            } else {
                let class = group.class_index(si);
                group.conjugacy_classes()[class]
                    .members
                    .iter()
                    .map(|m| group.index_of(m).unwrap())
                    .collect()
            }
        })
        .collect();

    let mut chosen = Vec::with_capacity(s.len());
    let failing = search(group, n, &candidates, &mut chosen);
    let witness = failing.map(|(tuple, order)| IgWitness {
        choice: s
            .iter()
            .zip(&tuple)
            .map(|(&a, &c)| (group.element(a).clone(), group.element(c).clone()))
            .collect(),
        generated_order: order,
    });
    Ok(IgVerdict {
        invariably_generates: witness.is_none(),
        witness,
    })
}

fn search(
    group: &FiniteGroup,
    n: usize,
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> Option<(Vec<usize>, usize)> {
    let depth = chosen.len();
    if depth == candidates.len() {
        let order = group.generated_order(chosen, n);
        return (order < n).then(|| (chosen.clone(), order));
    }
    if depth > 0 && group.generated_order(chosen, n) == n {
        return None;
    }
    for &c in &candidates[depth] {
        chosen.push(c);
        let found = search(group, n, candidates, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn invariably_generates_oracle(group: &FiniteGroup, set: &[Perm]) -> Result<bool> {
    invariably_generates_oracle_with_cap(group, set, DEFAULT_SUBGROUP_CAP)
}

/// The maximal-subgroup criterion.
pub fn invariably_generates_oracle_with_cap(
    group: &FiniteGroup,
    set: &[Perm],
    cap: usize,
) -> Result<bool> {
    let s = dedup_indices(group, set)?;
    let classes: Vec<usize> = s.iter().map(|&i| group.class_index(i)).collect();
    let maximal = group.maximal_subgroups_with_cap(cap)?;
    Ok(!maximal
        .iter()
        .any(|m| classes.iter().all(|&c| m.intersects(group.class_set(c)))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinIgSet {
    pub size: usize,
    pub set: Vec<Perm>,
}

pub fn min_invariable_size(group: &FiniteGroup) -> Result<MinIgSet> {
    min_invariable_size_with_cap(group, DEFAULT_SEARCH_CAP)
}

/// Smallest invariable generating set. The answer depends only on the
/// multiset of classes met by the set, so candidates are multisets of
/// non-identity classes (a class used `j` times contributes its first `j`
/// members). The trivial group gives size 0.
pub fn min_invariable_size_with_cap(group: &FiniteGroup, cap: usize) -> Result<MinIgSet> {
    if group.order() > cap {
        return Err(Error::TooLarge {
            what: "group for minimal invariable generation search",
            cap,
        });
    }
    if group.order() == 1 {
        return Ok(MinIgSet {
            size: 0,
            set: Vec::new(),
        });
    }
    let classes = group.conjugacy_classes();
    let nontrivial: Vec<usize> = (1..classes.len()).collect();
    for k in 1.. {
        let mut combo = Vec::with_capacity(k);
        if let Some(set) = multisets(group, &nontrivial, k, 0, &mut combo)? {
            return Ok(MinIgSet { size: k, set });
        }
    }
    unreachable!("the whole group invariably generates itself")
}

fn multisets(
    group: &FiniteGroup,
    classes: &[usize],
    k: usize,
    from: usize,
    combo: &mut Vec<usize>,
) -> Result<Option<Vec<Perm>>> {
    if combo.len() == k {
        let all = group.conjugacy_classes();
        let mut set = Vec::with_capacity(k);
        let mut i = 0;
        while i < combo.len() {
            let c = combo[i];
            let reps = combo[i..].iter().take_while(|&&x| x == c).count();
            if reps > all[c].size() {
                return Ok(None);
            }
            set.extend(all[c].members[..reps].iter().cloned());
            i += reps;
        }
        let verdict = invariably_generates(group, &set)?;
        return Ok(verdict.invariably_generates.then_some(set));
    }
    for j in from..classes.len() {
        combo.push(classes[j]);
        let found = multisets(group, classes, k, j, combo)?;
        combo.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn p(degree: usize, cycles: &[&[u32]]) -> Perm {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn sym3_pairs() {
        let s3 = named::symmetric(3).unwrap();
        let yes = invariably_generates(&s3, &[p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])]).unwrap();
        assert!(yes.invariably_generates);
        assert!(yes.witness.is_none());

        let no = invariably_generates(&s3, &[p(3, &[&[0, 1]]), p(3, &[&[0, 2]])]).unwrap();
        assert!(!no.invariably_generates);
        let w = no.witness.unwrap();
        assert_eq!(w.choice[0].1, p(3, &[&[0, 1]]));
        assert_eq!(w.choice[1].1, p(3, &[&[0, 1]]));
        assert_eq!(w.generated_order, 2);
        assert!(w.validate(&s3).unwrap());
    }

    #[test]
    fn abelian_reduces_to_generation() {
        let c6 = named::cyclic(6).unwrap();
        for e in c6.elements() {
            let ig = invariably_generates(&c6, std::slice::from_ref(e)).unwrap();
            assert_eq!(ig.invariably_generates, e.order() == 6);
        }
    }

    #[test]
    fn oracle_examples() {
        let s3 = named::symmetric(3).unwrap();
        assert!(invariably_generates_oracle(&s3, &[p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])]).unwrap());
        assert!(!invariably_generates_oracle(&s3, &[p(3, &[&[0, 1, 2]])]).unwrap());
        let c5 = named::cyclic(5).unwrap();
        for e in c5.elements().iter().skip(1) {
            assert!(invariably_generates_oracle(&c5, std::slice::from_ref(e)).unwrap());
        }
    }

    #[test]
    fn preconditions() {
        let s3 = named::symmetric(3).unwrap();
        assert!(invariably_generates(&s3, &[]).is_err());
        assert!(invariably_generates(&s3, &[p(4, &[&[0, 1]])]).is_err());
    }

    #[test]
    fn minimal_sizes() {
        let c6 = named::cyclic(6).unwrap();
        assert_eq!(min_invariable_size(&c6).unwrap().size, 1);
        let s3 = named::symmetric(3).unwrap();
        let m = min_invariable_size(&s3).unwrap();
        assert_eq!(m.size, 2);
        assert!(invariably_generates(&s3, &m.set).unwrap().invariably_generates);
        let trivial = named::cyclic(1).unwrap();
        assert_eq!(min_invariable_size(&trivial).unwrap().size, 0);
        // C2 × C2 needs two generators
        assert_eq!(min_invariable_size(&named::klein4()).unwrap().size, 2);
    }

    #[test]
    fn pruning_matches_exhaustive() {
        let s3 = named::symmetric(3).unwrap();
        for a in s3.elements() {
            for b in s3.elements() {
                let set = [a.clone(), b.clone()];
                let pruned = invariably_generates_with(&s3, &set, Pruning::FixFirst).unwrap();
                let full = invariably_generates_with(&s3, &set, Pruning::Exhaustive).unwrap();
                assert_eq!(pruned.invariably_generates, full.invariably_generates);
            }
        }
    }
}
