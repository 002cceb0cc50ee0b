//! Finite groups as multiplication tables over element indices.
//!
//! Every group stores its table flat with the identity at index 0. All
//! algebra in the crate is exhaustive over these indices.

mod action;
pub mod builtin;
mod hom;
mod iso;
mod semidirect;
mod subgroup;
pub(crate) mod tuple;

pub use action::{make_action, Action};
pub use hom::{make_hom, Hom};
pub use iso::{
    describe, find_isomorphism, fingerprint, is_isomorphic, is_isomorphic_bounded, Fingerprint,
    DEFAULT_ISO_BOUND,
};
pub use semidirect::{semidirect, SemidirectProduct};
pub use subgroup::{
    abelianization, commutator_subgroup, image, intersect, kernel, normal_closure, quotient,
    subgroup_generated, Quotient, Subgroup,
};

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
///
/// Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupData>,
}

struct GroupData {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    name: Option<String>,
    generators: OnceLock<Vec<usize>>,
    element_orders: OnceLock<Vec<usize>>,
}

/// Validates a square table and returns the group it defines.
///
/// If the identity is not at index 0 the elements are relabeled by swapping
/// the identity with 0, so every group the crate sees is canonical.
pub fn make_group(table: &[Vec<usize>]) -> Result<Group> {
    Group::from_table(table)
}

impl Group {
    pub fn from_table(table: &[Vec<usize>]) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::MalformedTable(format!(
                    "row {i} contains {bad}, out of range"
                )));
            }
        }
        let at = |a: usize, b: usize| table[a][b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| at(x, y) == identity && at(y, x) == identity) {
                return Err(Error::NoInverse(x));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NonAssociative(a, b, c));
                    }
                }
            }
        }
        // swap labels identity <-> 0
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(at(a, b)) as u32;
            }
        }
        Ok(Group::from_flat_unchecked(n, mul))
    }

    /// Builds a group from a flat table known to be a group with identity 0.
    pub(crate) fn from_flat_unchecked(order: usize, mul: Vec<u32>) -> Group {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).expect("group element without inverse");
            inv[x] = y as u32;
        }
        Group {
            inner: Arc::new(GroupData {
                order,
                mul,
                inv,
                name: None,
                generators: OnceLock::new(),
                element_orders: OnceLock::new(),
            }),
        }
    }

    pub fn trivial() -> Group {
        Group::from_flat_unchecked(1, vec![0]).with_name("1")
    }

    /// Returns a copy of the group carrying the given label.
    pub fn with_name(&self, name: impl Into<String>) -> Group {
        let d = &self.inner;
        Group {
            inner: Arc::new(GroupData {
                order: d.order,
                mul: d.mul.clone(),
                inv: d.inv.clone(),
                name: Some(name.into()),
                generators: OnceLock::new(),
                element_orders: OnceLock::new(),
            }),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inner.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.mul[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inv[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order()
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a, b] = a b a^-1 b^-1`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders()[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.inner.element_orders.get_or_init(|| {
            (0..self.order())
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != 0 {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A small generating set, found greedily in index order.
    pub fn generators(&self) -> &[usize] {
        self.inner.generators.get_or_init(|| {
            let n = self.order();
            let mut member = vec![false; n];
            member[0] = true;
            let mut elems = vec![0usize];
            let mut gens = Vec::new();
            for x in 0..n {
                if member[x] {
                    continue;
                }
                gens.push(x);
                subgroup::close_under(self, &mut member, &mut elems, &gens);
            }
            gens
        })
    }

    /// The table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|a| (0..n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn ptr_eq(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

impl PartialEq for Group {
    /// Tables are compared; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.inner.mul == other.inner.mul
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(n) => write!(f, "Group({n}, order {})", self.order()),
            None => write!(f, "Group(order {})", self.order()),
        }
    }
}
