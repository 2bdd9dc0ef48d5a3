//! Finite groups as explicit multiplication tables.
//!
//! Groups are built either from permutation generators (closure by BFS, so
//! element indices are discovery order with the identity at index 0) or from a
//! raw multiplication table (validated: identity at index 0, Latin square,
//! associativity via Light's test against a greedy generating set — checking
//! x(sy) = (xs)y for generators s proves full associativity, since the set of
//! elements that associate in the middle slot is closed under products).

use crate::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

pub struct FiniteGroup {
    pub name: String,
    pub order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

/// Cap on closure size when generating from permutations.
pub const GROUP_ORDER_CAP: usize = 512;
/// Cap on the number of subgroups enumerated by `all_subgroups`.
const SUBGROUP_ENUM_CAP: usize = 20_000;

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a*b)(i) = a(b(i))
    b.iter().map(|&i| a[i]).collect()
}

impl FiniteGroup {
    /// Closure of 0-based permutation generators under composition.
    /// Element 0 is the identity; the rest follow BFS discovery order.
    pub fn from_permutations(
        name: &str,
        degree: usize,
        gens: &[Vec<usize>],
        cap: usize,
    ) -> Result<Arc<Self>> {
        if degree == 0 {
            return Err(Error::BadPermutation("degree must be at least 1".into()));
        }
        for g in gens {
            if g.len() != degree {
                return Err(Error::BadPermutation(format!(
                    "generator has length {} but degree is {}",
                    g.len(),
                    degree
                )));
            }
            let mut seen = vec![false; degree];
            for &i in g {
                if i >= degree || seen[i] {
                    return Err(Error::BadPermutation(format!(
                        "image list {g:?} is not a permutation of 0..{degree}"
                    )));
                }
                seen[i] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0usize;
        while head < elements.len() {
            for g in gens {
                let w = compose(&elements[head], g);
                if !index.contains_key(&w) {
                    if elements.len() == cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(w.clone(), elements.len());
                    elements.push(w);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut mult = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let w = compose(&elements[a], &elements[b]);
                mult[a * n + b] = index[&w] as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mult[a * n + b] == 0).unwrap() as u32;
        }
        Ok(Arc::new(FiniteGroup {
            name: name.to_string(),
            order: n,
            mult,
            inv,
        }))
    }

    /// Validate a 0-based multiplication table and wrap it as a group.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<Arc<Self>> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {} in a table of size {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::NotAGroup(format!(
                        "entry {v} in row {i} is out of range"
                    )));
                }
            }
        }
        // identity axiom: element 0 must be a two-sided identity
        for i in 0..n {
            if table[0][i] != i || table[i][0] != i {
                return Err(Error::NotAGroup(format!(
                    "identity axiom fails: element 0 is not a two-sided identity at element {i}"
                )));
            }
        }
        // cancellation (Latin square): every row and column is a permutation
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if row_seen[table[i][j]] {
                    return Err(Error::NotAGroup(format!(
                        "cancellation axiom fails: row {i} repeats a value"
                    )));
                }
                row_seen[table[i][j]] = true;
                if col_seen[table[j][i]] {
                    return Err(Error::NotAGroup(format!(
                        "cancellation axiom fails: column {i} repeats a value"
                    )));
                }
                col_seen[table[j][i]] = true;
            }
        }
        // associativity via Light's test on a greedy generating set
        let closure = |gens: &[usize]| -> Vec<bool> {
            let mut in_set = vec![false; n];
            in_set[0] = true;
            let mut queue: VecDeque<usize> = VecDeque::new();
            queue.push_back(0);
            for &g in gens {
                if !in_set[g] {
                    in_set[g] = true;
                    queue.push_back(g);
                }
            }
            let mut members = vec![0usize];
            members.extend(gens.iter().copied().filter(|&g| g != 0));
            let mut head = 0;
            while head < members.len() {
                let a = members[head];
                head += 1;
                for i in 0..members.len() {
                    let b = members[i];
                    for w in [table[a][b], table[b][a]] {
                        if !in_set[w] {
                            in_set[w] = true;
                            members.push(w);
                        }
                    }
                }
            }
            in_set
        };
        let mut gens: Vec<usize> = Vec::new();
        let mut covered = closure(&gens);
        for e in 0..n {
            if !covered[e] {
                gens.push(e);
                covered = closure(&gens);
            }
        }
        for &s in &gens {
            for x in 0..n {
                for y in 0..n {
                    if table[x][table[s][y]] != table[table[x][s]][y] {
                        return Err(Error::NotAGroup(format!(
                            "associativity axiom fails: ({x}*{s})*{y} != {x}*({s}*{y})"
                        )));
                    }
                }
            }
        }
        // inverses: ab = 0 exists by the Latin property; with associativity it
        // is two-sided, but verify to keep the invariant explicit.
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let b = (0..n).find(|&b| table[a][b] == 0).unwrap();
            if table[b][a] != 0 {
                return Err(Error::NotAGroup(format!(
                    "inverse axiom fails: element {a} has no two-sided inverse"
                )));
            }
            inv[a] = b as u32;
        }
        let mut mult = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mult[a * n + b] = table[a][b] as u32;
            }
        }
        Ok(Arc::new(FiniteGroup {
            name: name.to_string(),
            order: n,
            mult,
            inv,
        }))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv_of(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// g x g^{-1}
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv_of(g))
    }

    pub fn order_of(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order)
            .map(|a| self.order_of(a) as u64)
            .fold(1u64, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted ascending, ordered by least element
    /// (so the identity class {0} comes first).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for e in 0..n {
            if assigned[e] {
                continue;
            }
            let mut class: BTreeSet<usize> = BTreeSet::new();
            for g in 0..n {
                class.insert(self.conj(g, e));
            }
            let class: Vec<usize> = class.into_iter().collect();
            for &x in &class {
                assigned[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// A small generating set found greedily by scanning elements ascending.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut covered = self.closure_of(&gens);
        for e in 0..self.order {
            if !covered[e] {
                gens.push(e);
                covered = self.closure_of(&gens);
            }
        }
        gens
    }

    fn closure_of(&self, gens: &[usize]) -> Vec<bool> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut members = vec![0usize];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                members.push(g);
            }
        }
        let mut head = 0;
        while head < members.len() {
            let a = members[head];
            head += 1;
            for i in 0..members.len() {
                let b = members[i];
                for w in [self.mul(a, b), self.mul(b, a)] {
                    if !in_set[w] {
                        in_set[w] = true;
                        members.push(w);
                    }
                }
            }
        }
        in_set
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A subgroup, stored as a sorted element list together with its parent.
#[derive(Clone)]
pub struct Subgroup {
    pub group: Arc<FiniteGroup>,
    pub elements: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.elements == other.elements
    }
}
impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?} of {}", self.elements, self.group.name)
    }
}

impl Subgroup {
    pub fn trivial(group: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup {
            group: group.clone(),
            elements: vec![0],
        }
    }

    pub fn full(group: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup {
            group: group.clone(),
            elements: (0..group.order).collect(),
        }
    }

    pub fn generate(group: &Arc<FiniteGroup>, gens: &[usize]) -> Subgroup {
        let mut in_set = vec![false; group.order];
        in_set[0] = true;
        let mut members = vec![0usize];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                members.push(g);
            }
        }
        let mut head = 0;
        while head < members.len() {
            let a = members[head];
            head += 1;
            for i in 0..members.len() {
                let w = group.mul(a, members[i]);
                if !in_set[w] {
                    in_set[w] = true;
                    members.push(w);
                }
                let w = group.mul(members[i], a);
                if !in_set[w] {
                    in_set[w] = true;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        Subgroup {
            group: group.clone(),
            elements: members,
        }
    }

    /// Wrap an element list known to be closed; verifies closure.
    pub fn from_elements(group: &Arc<FiniteGroup>, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        if elements.binary_search(&0).is_err() {
            return Err(Error::NotAGroup(
                "subgroup must contain the identity".into(),
            ));
        }
        for &a in &elements {
            for &b in &elements {
                if elements.binary_search(&group.mul(a, b)).is_err() {
                    return Err(Error::NotAGroup(format!(
                        "element set is not closed: {a}*{b} escapes"
                    )));
                }
            }
        }
        Ok(Subgroup {
            group: group.clone(),
            elements,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&x| self.group.conj(g, x))
            .collect();
        elements.sort_unstable();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    pub fn is_normal(&self) -> bool {
        (0..self.group.order).all(|g| self.conjugate_by(g).elements == self.elements)
    }

    /// Elements of the parent commuting with every element of this subgroup.
    pub fn centralizer(&self) -> Subgroup {
        let g = &self.group;
        let elements: Vec<usize> = (0..g.order)
            .filter(|&x| self.elements.iter().all(|&h| g.mul(x, h) == g.mul(h, x)))
            .collect();
        Subgroup {
            group: g.clone(),
            elements,
        }
    }

    /// Elements g with g H g^{-1} = H.
    pub fn normalizer(&self) -> Subgroup {
        let g = &self.group;
        let elements: Vec<usize> = (0..g.order)
            .filter(|&x| self.conjugate_by(x).elements == self.elements)
            .collect();
        Subgroup {
            group: g.clone(),
            elements,
        }
    }

    /// Position of a parent element within this subgroup's element list.
    pub fn index_of(&self, e: usize) -> Option<usize> {
        self.elements.binary_search(&e).ok()
    }

    /// Reindex as a standalone group. Returns the group and the embedding
    /// (new index -> parent element). The parent identity maps to index 0.
    pub fn as_group(&self) -> Result<(Arc<FiniteGroup>, Vec<usize>)> {
        let m = self.order();
        let table: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let w = self.group.mul(self.elements[i], self.elements[j]);
                        self.index_of(w).expect("subgroup not closed")
                    })
                    .collect()
            })
            .collect();
        let name = format!("{}|{:?}", self.group.name, self.elements);
        let g = FiniteGroup::from_table(&name, table)?;
        Ok((g, self.elements.clone()))
    }
}

/// The center of the group as a subgroup.
pub fn center(group: &Arc<FiniteGroup>) -> Subgroup {
    Subgroup::full(group).centralizer()
}

/// A Sylow p-subgroup, grown deterministically by least-element extension.
pub fn sylow(group: &Arc<FiniteGroup>, p: u64) -> Subgroup {
    let mut target = group.order;
    let mut sylow_order = 1usize;
    while target % p as usize == 0 {
        target /= p as usize;
        sylow_order *= p as usize;
    }
    let mut h = Subgroup::trivial(group);
    'grow: while h.order() < sylow_order {
        for x in 0..group.order {
            if h.contains(x) || !is_p_power(group.order_of(x), p) {
                continue;
            }
            let mut gens = h.elements.clone();
            gens.push(x);
            let k = Subgroup::generate(group, &gens);
            if is_p_power(k.order(), p) && k.order() > h.order() {
                h = k;
                continue 'grow;
            }
        }
        unreachable!("Sylow subgroup extension stalled below p^a");
    }
    h
}

fn is_p_power(mut n: usize, p: u64) -> bool {
    while n % p as usize == 0 {
        n /= p as usize;
    }
    n == 1
}

/// A conjugacy class of p-subgroups: a least representative plus all members.
pub struct PSubgroupClass {
    pub rep: Subgroup,
    /// Sorted element lists of every conjugate, ascending.
    pub members: Vec<Vec<usize>>,
}

/// All p-subgroups up to conjugacy, classes ordered by (order, representative
/// element list); the trivial subgroup comes first. Members are complete.
pub fn p_subgroup_classes(group: &Arc<FiniteGroup>, p: u64) -> Vec<PSubgroupClass> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = Subgroup::trivial(group);
    seen.insert(trivial.elements.clone());
    let mut queue: VecDeque<Subgroup> = VecDeque::new();
    queue.push_back(trivial);
    let mut all: Vec<Subgroup> = Vec::new();
    while let Some(h) = queue.pop_front() {
        all.push(h.clone());
        for x in 0..group.order {
            if h.contains(x) || !is_p_power(group.order_of(x), p) {
                continue;
            }
            let mut gens = h.elements.clone();
            gens.push(x);
            let k = Subgroup::generate(group, &gens);
            if !is_p_power(k.order(), p) || seen.contains(&k.elements) {
                continue;
            }
            seen.insert(k.elements.clone());
            queue.push_back(k);
        }
    }
    group_into_conjugacy_classes(group, all)
}

fn group_into_conjugacy_classes(
    group: &Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
) -> Vec<PSubgroupClass> {
    let mut remaining: BTreeSet<Vec<usize>> =
        subgroups.iter().map(|s| s.elements.clone()).collect();
    let mut classes: Vec<PSubgroupClass> = Vec::new();
    while let Some(first) = remaining.iter().next().cloned() {
        let h = Subgroup {
            group: group.clone(),
            elements: first,
        };
        let mut members: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in 0..group.order {
            members.insert(h.conjugate_by(g).elements);
        }
        for m in &members {
            remaining.remove(m);
        }
        let members: Vec<Vec<usize>> = members.into_iter().collect();
        let rep = Subgroup {
            group: group.clone(),
            elements: members[0].clone(),
        };
        classes.push(PSubgroupClass { rep, members });
    }
    classes.sort_by(|a, b| {
        (a.rep.order(), &a.rep.elements).cmp(&(b.rep.order(), &b.rep.elements))
    });
    classes
}

/// Every subgroup, found by closing under single-element extensions,
/// sorted by (order, element list).
pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Result<Vec<Subgroup>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = Subgroup::trivial(group);
    seen.insert(trivial.elements.clone());
    let mut queue: VecDeque<Subgroup> = VecDeque::new();
    queue.push_back(trivial);
    let mut all: Vec<Subgroup> = Vec::new();
    while let Some(h) = queue.pop_front() {
        all.push(h.clone());
        for x in 0..group.order {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.elements.clone();
            gens.push(x);
            let k = Subgroup::generate(group, &gens);
            if seen.contains(&k.elements) {
                continue;
            }
            if seen.len() == SUBGROUP_ENUM_CAP {
                return Err(Error::CapExceeded(format!(
                    "subgroup enumeration exceeded {SUBGROUP_ENUM_CAP} subgroups"
                )));
            }
            seen.insert(k.elements.clone());
            queue.push_back(k);
        }
    }
    all.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(all)
}

/// Quotient by a normal subgroup. Coset representatives are least elements;
/// representatives are indexed ascending, so the identity coset is index 0.
/// Returns the quotient and the projection map (parent element -> coset index).
pub fn quotient(
    group: &Arc<FiniteGroup>,
    normal: &Subgroup,
) -> Result<(Arc<FiniteGroup>, Vec<usize>)> {
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = group.order;
    let mut coset_rep: Vec<Option<usize>> = vec![None; n];
    let mut reps: Vec<usize> = Vec::new();
    for e in 0..n {
        if coset_rep[e].is_some() {
            continue;
        }
        reps.push(e);
        for &h in &normal.elements {
            coset_rep[group.mul(e, h)] = Some(e);
        }
    }
    let rep_index: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let proj: Vec<usize> = (0..n).map(|e| rep_index[&coset_rep[e].unwrap()]).collect();
    let m = reps.len();
    let table: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).map(|j| proj[group.mul(reps[i], reps[j])]).collect())
        .collect();
    let name = format!("{}/{:?}", group.name, normal.elements);
    let q = FiniteGroup::from_table(&name, table)?;
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::from_permutations("s3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], GROUP_ORDER_CAP)
            .unwrap()
    }

    pub(crate) fn d8() -> Arc<FiniteGroup> {
        FiniteGroup::from_permutations(
            "d8",
            4,
            &[vec![1, 2, 3, 0], vec![1, 0, 3, 2]],
            GROUP_ORDER_CAP,
        )
        .unwrap()
    }

    #[test]
    fn s3_structure() {
        let g = s3();
        assert_eq!(g.order, 6);
        assert!(!g.is_abelian());
        assert_eq!(g.exponent(), 6);
        let classes = g.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        assert_eq!(classes[0], vec![0]);
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(center(&g).order(), 1);
    }

    #[test]
    fn identity_is_element_zero_and_inverses_work() {
        let g = d8();
        assert_eq!(g.order, 8);
        for a in 0..g.order {
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, g.inv_of(a)), 0);
            assert_eq!(g.mul(g.inv_of(a), a), 0);
        }
        assert_eq!(center(&g).order(), 2);
    }

    #[test]
    fn from_table_accepts_c4_and_validates() {
        let table: Vec<Vec<usize>> = (0..4)
            .map(|i| (0..4).map(|j| (i + j) % 4).collect())
            .collect();
        let g = FiniteGroup::from_table("c4", table).unwrap();
        assert_eq!(g.order, 4);
        assert_eq!(g.order_of(1), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn from_table_rejects_nonassociative_loop() {
        // A Latin square with two-sided identity that is not a group
        // (element 1 squares to the identity, impossible in C5).
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let err = FiniteGroup::from_table("loop5", table).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("associativity"), "unexpected error: {msg}");
    }

    #[test]
    fn from_table_rejects_misplaced_identity() {
        // shift C3's table so the identity is element 1
        let table = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        let err = FiniteGroup::from_table("c3-shifted", table).unwrap_err();
        assert!(err.to_string().contains("identity"));
    }

    #[test]
    fn sylow_subgroups_of_s4() {
        let g = FiniteGroup::from_permutations(
            "s4",
            4,
            &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
            GROUP_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(g.order, 24);
        assert_eq!(sylow(&g, 2).order(), 8);
        assert_eq!(sylow(&g, 3).order(), 3);
        assert_eq!(sylow(&g, 5).order(), 1);
    }

    #[test]
    fn p_subgroup_classes_of_s3() {
        let g = s3();
        let at2 = p_subgroup_classes(&g, 2);
        assert_eq!(at2.len(), 2); // trivial + the three conjugate C2s
        assert_eq!(at2[0].rep.order(), 1);
        assert_eq!(at2[1].rep.order(), 2);
        assert_eq!(at2[1].members.len(), 3);
        let at3 = p_subgroup_classes(&g, 3);
        assert_eq!(at3.len(), 2); // trivial + the normal C3
        assert_eq!(at3[1].members.len(), 1);
    }

    #[test]
    fn all_subgroups_counts_match_known_groups() {
        assert_eq!(all_subgroups(&s3()).unwrap().len(), 6);
        assert_eq!(all_subgroups(&d8()).unwrap().len(), 10);
        let xor_table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let v4 = FiniteGroup::from_table("c2xc2", xor_table).unwrap();
        assert_eq!(all_subgroups(&v4).unwrap().len(), 5);
    }

    #[test]
    fn quotient_of_d8_by_center_is_klein_four() {
        let g = d8();
        let z = center(&g);
        let (q, proj) = quotient(&g, &z).unwrap();
        assert_eq!(q.order, 4);
        assert_eq!(q.exponent(), 2);
        // projection is a homomorphism
        for a in 0..g.order {
            for b in 0..g.order {
                assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
    }

    #[test]
    fn quotient_rejects_non_normal_subgroup() {
        let g = s3();
        let h = Subgroup::generate(&g, &[1]); // a transposition
        assert_eq!(h.order(), 2);
        assert!(matches!(quotient(&g, &h), Err(Error::NotNormal)));
    }

    #[test]
    fn subgroup_as_group_reindexes() {
        let g = d8();
        let s = sylow(&g, 2);
        assert_eq!(s.order(), 8);
        let h = Subgroup::generate(&g, &[1]);
        let (hg, embed) = h.as_group().unwrap();
        assert_eq!(hg.order, h.order());
        assert_eq!(embed[0], 0);
        for i in 0..hg.order {
            for j in 0..hg.order {
                assert_eq!(embed[hg.mul(i, j)], g.mul(embed[i], embed[j]));
            }
        }
    }

    #[test]
    fn centralizer_and_normalizer() {
        let g = s3();
        let x = (0..g.order).find(|&e| g.order_of(e) == 3).unwrap();
        let c3 = Subgroup::generate(&g, &[x]);
        assert_eq!(c3.order(), 3);
        assert_eq!(c3.centralizer().order(), 3);
        assert_eq!(c3.normalizer().order(), 6);
        let t = (0..g.order).find(|&e| g.order_of(e) == 2).unwrap();
        let c2 = Subgroup::generate(&g, &[t]);
        assert_eq!(c2.centralizer().order(), 2);
        assert_eq!(c2.normalizer().order(), 2);
    }
}
