use std::fmt;

use super::{Group, Hom};
use crate::error::{Error, Result};

/// A left action of `actor` on `target` by automorphisms, written `^g m`.
#[derive(Clone, PartialEq, Eq)]
pub struct Action {
    actor: Group,
    target: Group,
    table: Vec<u32>,
}

/// Validates an action table with one row per actor element.
pub fn make_action(actor: &Group, target: &Group, table: &[Vec<usize>]) -> Result<Action> {
    if table.len() != actor.order() {
        return Err(Error::MalformedTable(format!(
            "action has {} rows, expected {}",
            table.len(),
            actor.order()
        )));
    }
    for row in table {
        if row.len() != target.order() {
            return Err(Error::MalformedTable(format!(
                "action row has length {}, expected {}",
                row.len(),
                target.order()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&m| m >= target.order()) {
            return Err(Error::ElementOutOfRange(bad));
        }
    }
    Action::from_fn(actor, target, |g, m| table[g][m])
}

impl Action {
    pub fn from_fn(
        actor: &Group,
        target: &Group,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Action> {
        let act = Action::from_fn_unchecked(actor, target, f);
        act.validate()?;
        Ok(act)
    }

    pub(crate) fn from_fn_unchecked(
        actor: &Group,
        target: &Group,
        f: impl Fn(usize, usize) -> usize,
    ) -> Action {
        let t = target.order();
        let mut table = vec![0u32; actor.order() * t];
        for g in actor.elements() {
            for m in target.elements() {
                table[g * t + m] = f(g, m) as u32;
            }
        }
        Action {
            actor: actor.clone(),
            target: target.clone(),
            table,
        }
    }

    fn validate(&self) -> Result<()> {
        let (a, t) = (&self.actor, &self.target);
        for g in a.elements() {
            let mut seen = vec![false; t.order()];
            for m in t.elements() {
                let y = self.act(g, m);
                if y >= t.order() || std::mem::replace(&mut seen[y], true) {
                    return Err(Error::RowNotAutomorphism(g));
                }
            }
            for m in t.elements() {
                for n in t.elements() {
                    if self.act(g, t.mul(m, n)) != t.mul(self.act(g, m), self.act(g, n)) {
                        return Err(Error::RowNotAutomorphism(g));
                    }
                }
            }
        }
        for m in t.elements() {
            if self.act(0, m) != m {
                return Err(Error::NotAction(0, 0, m));
            }
        }
        for g1 in a.elements() {
            for g2 in a.elements() {
                let g = a.mul(g1, g2);
                for m in t.elements() {
                    if self.act(g, m) != self.act(g1, self.act(g2, m)) {
                        return Err(Error::NotAction(g1, g2, m));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial(actor: &Group, target: &Group) -> Action {
        Action::from_fn_unchecked(actor, target, |_, m| m)
    }

    /// A group acting on itself by conjugation.
    pub fn conjugation(g: &Group) -> Action {
        Action::from_fn_unchecked(g, g, |x, m| g.conj(x, m))
    }

    /// Action of `actor` through `via: actor -> self.actor`.
    pub fn pullback(&self, via: &Hom) -> Action {
        debug_assert_eq!(via.cod().order(), self.actor.order());
        Action::from_fn_unchecked(via.dom(), &self.target, |x, m| self.act(via.apply(x), m))
    }

    pub fn actor(&self) -> &Group {
        &self.actor
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    #[inline]
    pub fn act(&self, g: usize, m: usize) -> usize {
        self.table[g * self.target.order() + m] as usize
    }

    pub fn is_trivial(&self) -> bool {
        self.actor
            .elements()
            .all(|g| self.target.elements().all(|m| self.act(g, m) == m))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.actor
            .elements()
            .map(|g| self.target.elements().map(|m| self.act(g, m)).collect())
            .collect()
    }
}

impl fmt::Debug for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Action({:?} on {:?})", self.actor, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::{cyclic, symmetric};
    use crate::group::subgroup_generated;

    #[test]
    fn trivial_action_is_valid() {
        let (g, h) = (symmetric(3), cyclic(4));
        let rows = vec![h.elements().collect::<Vec<_>>(); g.order()];
        assert!(make_action(&g, &h, &rows).is_ok());
    }

    #[test]
    fn inversion_of_c3_by_c2() {
        let (c2, c3) = (cyclic(2), cyclic(3));
        let rows = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let act = make_action(&c2, &c3, &rows).unwrap();
        assert_eq!(act.act(1, 1), 2);
    }

    #[test]
    fn conjugation_on_a3() {
        let s3 = symmetric(3);
        let a3 = subgroup_generated(&s3, &[3]);
        let (grp, emb) = a3.to_group();
        let act = Action::from_fn(&s3, &grp, |g, m| {
            a3.index_of(s3.conj(g, emb.apply(m))).unwrap()
        });
        assert!(act.is_ok());
    }

    #[test]
    fn non_automorphism_row() {
        let (c2, c3) = (cyclic(2), cyclic(3));
        let rows = vec![vec![0, 1, 2], vec![0, 1, 1]];
        assert_eq!(
            make_action(&c2, &c3, &rows).unwrap_err(),
            Error::RowNotAutomorphism(1)
        );
    }

    #[test]
    fn not_an_action() {
        // C3 acting on C3 by "inversion" for both nonzero elements breaks composition
        let c3 = cyclic(3);
        let rows = vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]];
        assert!(matches!(
            make_action(&c3, &c3, &rows).unwrap_err(),
            Error::NotAction(..)
        ));
    }
}
