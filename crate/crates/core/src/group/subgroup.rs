use std::fmt;

use super::{Group, Hom};
use crate::error::{Error, Result};

/// A subgroup recorded as a sorted element set of its parent.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    elements: Vec<usize>,
    member: Vec<bool>,
}

/// Extends `member`/`elems` (already a subgroup) to the subgroup generated by
/// it together with `gens`.
pub(crate) fn close_under(g: &Group, member: &mut [bool], elems: &mut Vec<usize>, gens: &[usize]) {
    // products of closed set with the generators, breadth first
    let mut frontier = 0;
    let mut queue: Vec<usize> = elems.clone();
    for &t in gens {
        if !member[t] {
            member[t] = true;
            elems.push(t);
            queue.push(t);
        }
    }
    while frontier < queue.len() {
        let x = queue[frontier];
        frontier += 1;
        for &t in gens {
            let y = g.mul(x, t);
            if !member[y] {
                member[y] = true;
                elems.push(y);
                queue.push(y);
            }
        }
    }
}

impl Subgroup {
    /// Checks that `elements` is a subgroup of `parent`.
    pub fn new(parent: &Group, elements: &[usize]) -> Result<Subgroup> {
        let mut member = vec![false; parent.order()];
        for &x in elements {
            if x >= parent.order() {
                return Err(Error::ElementOutOfRange(x));
            }
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::InvalidStructure("subgroup misses the identity".into()));
        }
        for &a in elements {
            if !member[parent.inv(a)] {
                return Err(Error::InvalidStructure(format!("subgroup misses inverse of {a}")));
            }
            for &b in elements {
                if !member[parent.mul(a, b)] {
                    return Err(Error::InvalidStructure(format!(
                        "subgroup not closed at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Subgroup::from_member(parent, member))
    }

    pub(crate) fn from_member(parent: &Group, member: Vec<bool>) -> Subgroup {
        let elements = (0..parent.order()).filter(|&x| member[x]).collect();
        Subgroup {
            parent: parent.clone(),
            elements,
            member,
        }
    }

    pub fn whole(parent: &Group) -> Subgroup {
        Subgroup::from_member(parent, vec![true; parent.order()])
    }

    pub fn trivial(parent: &Group) -> Subgroup {
        let mut member = vec![false; parent.order()];
        member[0] = true;
        Subgroup::from_member(parent, member)
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// Position of `x` in [`Self::elements`], which is also its index in
    /// [`Self::to_group`].
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// The subgroup as a standalone group, with its embedding.
    pub fn to_group(&self) -> (Group, Hom) {
        let n = self.order();
        let mut mul = vec![0u32; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                mul[i * n + j] = self.index_of(self.parent.mul(a, b)).unwrap() as u32;
            }
        }
        let g = Group::from_flat_unchecked(n, mul);
        let emb = Hom::from_fn_unchecked(&g, &self.parent, |i| self.elements[i]);
        (g, emb)
    }

    /// A pair `(h, g)` with `g h g^-1` outside the subgroup, if any.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let gens = self.parent.generators();
        for &h in &self.elements {
            for &g in gens {
                if !self.contains(self.parent.conj(g, h)) {
                    return Some((h, g));
                }
            }
        }
        None
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({:?} of {:?})", self.elements, self.parent)
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_generated(g: &Group, gens: &[usize]) -> Subgroup {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut elems = vec![0];
    let mut used: Vec<usize> = Vec::new();
    for &t in gens {
        if !member[t] {
            used.push(t);
            close_under(g, &mut member, &mut elems, &used);
        }
    }
    Subgroup::from_member(g, member)
}

/// Smallest normal subgroup containing `gens`.
pub fn normal_closure(g: &Group, gens: &[usize]) -> Subgroup {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut elems = vec![0];
    let mut used: Vec<usize> = Vec::new();
    let conjugators = g.generators().to_vec();
    let mut pending: Vec<usize> = gens.to_vec();
    while let Some(t) = pending.pop() {
        if member[t] {
            continue;
        }
        used.push(t);
        let before = elems.len();
        close_under(g, &mut member, &mut elems, &used);
        // conjugates of the new elements by group generators must also lie inside
        for &x in &elems[before..] {
            for &c in &conjugators {
                let y = g.conj(c, x);
                if !member[y] {
                    pending.push(y);
                }
            }
        }
    }
    Subgroup::from_member(g, member)
}

pub fn kernel(h: &Hom) -> Subgroup {
    let member = h.dom().elements().map(|x| h.apply(x) == 0).collect();
    Subgroup::from_member(h.dom(), member)
}

pub fn image(h: &Hom) -> Subgroup {
    let mut member = vec![false; h.cod().order()];
    for x in h.dom().elements() {
        member[h.apply(x)] = true;
    }
    Subgroup::from_member(h.cod(), member)
}

pub fn intersect(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    if a.parent != b.parent {
        return Err(Error::ParentMismatch);
    }
    let member = a.member.iter().zip(&b.member).map(|(&x, &y)| x && y).collect();
    Ok(Subgroup::from_member(&a.parent, member))
}

/// `[G, G]`
pub fn commutator_subgroup(g: &Group) -> Subgroup {
    let gens: Vec<usize> = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    // the commutator subgroup is normal, so plain generation suffices
    subgroup_generated(g, &gens)
}

/// A quotient group with its canonical projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    pub projection: Hom,
    /// Smallest element of each coset, indexed by coset.
    pub representatives: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: usize) -> usize {
        self.projection.apply(x)
    }

    pub fn lift(&self, coset: usize) -> usize {
        self.representatives[coset]
    }
}

/// `G / N`; cosets are labeled in order of their smallest element.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<Quotient> {
    if n.parent() != g {
        return Err(Error::ParentMismatch);
    }
    if let Some((element, by)) = n.normality_witness() {
        return Err(Error::NotNormal { element, by });
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &k in n.elements() {
            coset_of[g.mul(x, k)] = c;
        }
    }
    let q = reps.len();
    let mut mul = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * q + j] = coset_of[g.mul(a, b)] as u32;
        }
    }
    let group = Group::from_flat_unchecked(q, mul);
    let projection = Hom::from_fn_unchecked(g, &group, |x| coset_of[x]);
    Ok(Quotient {
        group,
        projection,
        representatives: reps,
    })
}

pub fn abelianization(g: &Group) -> Quotient {
    quotient(g, &commutator_subgroup(g)).expect("commutator subgroup is normal")
}
