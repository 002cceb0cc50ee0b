use std::hash::Hash;

use rustc_hash::FxHashMap;

use super::Group;

/// A group whose elements are explicit values (tuples of indices in other
/// groups), enumerated once and indexed by hash.
#[derive(Clone, Debug)]
pub(crate) struct TupleGroup<T> {
    pub group: Group,
    pub elems: Vec<T>,
    pub index: FxHashMap<T, usize>,
}

impl<T: Clone + Eq + Hash> TupleGroup<T> {
    /// `elems` must be closed under `mul` and contain `identity`; the
    /// identity is moved to index 0.
    pub fn new(mut elems: Vec<T>, identity: &T, mul: impl Fn(&T, &T) -> T) -> TupleGroup<T> {
        let pos = elems
            .iter()
            .position(|e| e == identity)
            .expect("identity missing from enumerated group");
        elems.swap(0, pos);
        let index: FxHashMap<T, usize> =
            elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(index[&mul(a, b)] as u32);
            }
        }
        TupleGroup {
            group: Group::from_flat_unchecked(n, table),
            elems,
            index,
        }
    }

    pub fn get(&self, t: &T) -> usize {
        self.index[t]
    }
}
