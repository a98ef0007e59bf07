//! Finite permutation groups: closure, conjugacy classes and subgroup lattices.
//!
//! Elements of a [`FiniteGroup`] are kept in breadth-first order from the
//! identity (generators applied in the order given), so indices into
//! [`FiniteGroup::elements`] are stable and reproducible. Most internal
//! algorithms work on those indices rather than on permutations.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default ceiling on the order of a group built by [`closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;
/// Default ceiling on the order of a group whose subgroup lattice is enumerated.
pub const DEFAULT_SUBGROUP_CAP: usize = 200;
// above this order products are looked up through the element index instead
const TABLE_LIMIT: usize = 1024;

/// A set of element indices of some [`FiniteGroup`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Member indices in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }
}

/// One conjugacy class of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// First member of the class in the group's element order.
    pub representative: Perm,
    /// All members, sorted.
    pub members: Vec<Perm>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
struct ClassData {
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    member_sets: Vec<ElementSet>,
}

/// A finite permutation group given by generators together with its full,
/// closed element list.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    classes: OnceLock<ClassData>,
    table: OnceLock<Vec<u32>>,
    maximal: OnceLock<Vec<ElementSet>>,
}

/// The group generated by `generators`, with the default size cap.
pub fn closure(generators: &[Perm]) -> Result<FiniteGroup> {
    closure_with_cap(generators, DEFAULT_CLOSURE_CAP)
}

/// Breadth-first closure from the identity. Fails with [`Error::TooLarge`]
/// as soon as more than `cap` elements have been found.
pub fn closure_with_cap(generators: &[Perm], cap: usize) -> Result<FiniteGroup> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let degree = first.degree();
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: bad.degree(),
        });
    }
    let identity = Perm::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut next = 0;
    while next < elements.len() {
        for g in generators {
            let prod = elements[next].mul(g);
            if !index.contains_key(&prod) {
                if elements.len() >= cap {
                    return Err(Error::TooLarge {
                        what: "group",
                        cap,
                    });
                }
                index.insert(prod.clone(), elements.len());
                elements.push(prod);
            }
        }
        next += 1;
    }
    Ok(FiniteGroup {
        degree,
        generators: generators.to_vec(),
        elements,
        index,
        classes: OnceLock::new(),
        table: OnceLock::new(),
        maximal: OnceLock::new(),
    })
}

impl FiniteGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> &Perm {
        &self.elements[0]
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub(crate) fn require_index(&self, p: &Perm) -> Result<usize> {
        self.index_of(p).ok_or_else(|| Error::NotAMember(p.to_string()))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.mul(b) == b.mul(a))
        })
    }

    fn table(&self) -> Option<&[u32]> {
        if self.order() > TABLE_LIMIT {
            return None;
        }
        let t = self.table.get_or_init(|| {
            let n = self.order();
            let mut t = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    t.push(self.index[&a.mul(b)] as u32);
                }
            }
            t
        });
        Some(t)
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].mul(&self.elements[b])],
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn subgroup_closure(&self, gens: &[usize]) -> ElementSet {
        self.bounded_closure(gens, usize::MAX).0
    }

    /// Size of `⟨gens⟩`, stopping early once it reaches `stop_at`.
    pub(crate) fn generated_order(&self, gens: &[usize], stop_at: usize) -> usize {
        self.bounded_closure(gens, stop_at).1
    }

    fn bounded_closure(&self, gens: &[usize], stop_at: usize) -> (ElementSet, usize) {
        let mut set = ElementSet::empty(self.order());
        set.insert(0);
        let mut count = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul_idx(x, g);
                if set.insert(y) {
                    count += 1;
                    if count >= stop_at {
                        return (set, count);
                    }
                    queue.push_back(y);
                }
            }
        }
        (set, count)
    }

    /// True iff `subset` generates the whole group.
    pub fn generates(&self, subset: &[Perm]) -> Result<bool> {
        let idx = subset
            .iter()
            .map(|p| self.require_index(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.generated_order(&idx, self.order()) == self.order())
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gen_idx: Vec<usize> = self.generators.iter().map(|g| self.index[g]).collect();
            let gen_inv: Vec<usize> = self
                .generators
                .iter()
                .map(|g| self.index[&g.inverse()])
                .collect();
            let mut class_of = vec![usize::MAX; n];
            let mut member_sets = Vec::new();
            let mut classes = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let cid = classes.len();
                let mut set = ElementSet::empty(n);
                set.insert(start);
                class_of[start] = cid;
                let mut queue = VecDeque::from([start]);
                // orbit under conjugation by generators is the full class
                while let Some(x) = queue.pop_front() {
                    for (&g, &gi) in gen_idx.iter().zip(&gen_inv) {
                        let y = self.mul_idx(self.mul_idx(gi, x), g);
                        if set.insert(y) {
                            class_of[y] = cid;
                            queue.push_back(y);
                        }
                    }
                }
                let mut members: Vec<Perm> =
                    set.indices().into_iter().map(|i| self.elements[i].clone()).collect();
                members.sort();
                classes.push(ConjClass {
                    representative: self.elements[start].clone(),
                    members,
                });
                member_sets.push(set);
            }
            ClassData {
                classes,
                class_of,
                member_sets,
            }
        })
    }

    /// Conjugacy classes; the identity's class comes first and the rest
    /// follow in order of first appearance among the elements.
    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        &self.class_data().classes
    }

    /// Index (into [`FiniteGroup::conjugacy_classes`]) of the class of an element index.
    pub fn class_index(&self, element: usize) -> usize {
        self.class_data().class_of[element]
    }

    pub fn class_set(&self, class: usize) -> &ElementSet {
        &self.class_data().member_sets[class]
    }

    pub fn are_conjugate(&self, a: &Perm, b: &Perm) -> Result<bool> {
        let (a, b) = (self.require_index(a)?, self.require_index(b)?);
        Ok(self.class_index(a) == self.class_index(b))
    }

    pub fn perms_of(&self, set: &ElementSet) -> Vec<Perm> {
        let mut v: Vec<Perm> = set
            .indices()
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect();
        v.sort();
        v
    }

    pub fn all_subgroups(&self) -> Result<Vec<ElementSet>> {
        self.all_subgroups_with_cap(DEFAULT_SUBGROUP_CAP)
    }

    /// Every subgroup, found by joining cyclic subgroups until nothing new
    /// appears. Sorted by order, then by member indices.
    pub fn all_subgroups_with_cap(&self, cap: usize) -> Result<Vec<ElementSet>> {
        if self.order() > cap {
            return Err(Error::TooLarge {
                what: "group for subgroup enumeration",
                cap,
            });
        }
        let n = self.order();
        let mut seen: HashSet<ElementSet> = HashSet::new();
        let mut cyclic: Vec<(usize, ElementSet)> = Vec::new();
        for e in 0..n {
            let s = self.subgroup_closure(&[e]);
            if seen.insert(s.clone()) {
                cyclic.push((e, s));
            }
        }
        let mut found: Vec<(Vec<usize>, ElementSet)> =
            cyclic.iter().map(|(e, s)| (vec![*e], s.clone())).collect();
        let mut i = 0;
        while i < found.len() {
            for (e, _) in &cyclic {
                if found[i].1.contains(*e) {
                    continue;
                }
                let mut gens = found[i].0.clone();
                gens.push(*e);
                let joined = self.subgroup_closure(&gens);
                if seen.insert(joined.clone()) {
                    found.push((gens, joined));
                }
            }
            i += 1;
        }
        let mut out: Vec<ElementSet> = found.into_iter().map(|(_, s)| s).collect();
        out.sort_by_key(|s| (s.len(), s.indices()));
        Ok(out)
    }

    pub fn maximal_subgroups(&self) -> Result<Vec<ElementSet>> {
        self.maximal_subgroups_with_cap(DEFAULT_SUBGROUP_CAP)
    }

    /// Maximal members of the poset of proper subgroups. Computed once and
    /// cached; `cap` bounds the group order as in [`Self::all_subgroups_with_cap`].
    pub fn maximal_subgroups_with_cap(&self, cap: usize) -> Result<Vec<ElementSet>> {
        if self.order() > cap {
            return Err(Error::TooLarge {
                what: "group for subgroup enumeration",
                cap,
            });
        }
        if let Some(m) = self.maximal.get() {
            return Ok(m.clone());
        }
        let proper: Vec<ElementSet> = self
            .all_subgroups_with_cap(cap)?
            .into_iter()
            .filter(|s| s.len() < self.order())
            .collect();
        let maximal: Vec<ElementSet> = proper
            .iter()
            .filter(|s| {
                !proper
                    .iter()
                    .any(|t| t.len() > s.len() && s.is_subset(t))
            })
            .cloned()
            .collect();
        Ok(self.maximal.get_or_init(|| maximal).clone())
    }
}
