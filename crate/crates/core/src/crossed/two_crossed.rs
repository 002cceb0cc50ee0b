use super::precrossed::{check_crossed_module, PreCrossedModule};
use crate::error::{Error, Result};
use crate::group::{Action, Group, Hom};
use crate::report::Report;

/// A complex `L --∂₂--> M --∂₁--> N` with `N`-actions on `M` and `L` and a
/// Peiffer lifting `{-,-}: M × M -> L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCrossedModule {
    pub d2: Hom,
    pub d1: Hom,
    pub act_m: Action,
    pub act_l: Action,
    lifting: Vec<u32>,
}

impl TwoCrossedModule {
    pub fn new(
        d2: Hom,
        d1: Hom,
        act_m: Action,
        act_l: Action,
        lifting: &[Vec<usize>],
    ) -> Result<TwoCrossedModule> {
        let (l, m) = (d2.dom(), d2.cod());
        if d1.dom() != m {
            return Err(Error::InvalidStructure("∂₁ must start where ∂₂ ends".into()));
        }
        if act_m.actor() != d1.cod() || act_m.target() != m {
            return Err(Error::InvalidStructure("N must act on M".into()));
        }
        if act_l.actor() != d1.cod() || act_l.target() != l {
            return Err(Error::InvalidStructure("N must act on L".into()));
        }
        if lifting.len() != m.order() || lifting.iter().any(|r| r.len() != m.order()) {
            return Err(Error::MalformedTable(format!(
                "lifting table must be {0}×{0}",
                m.order()
            )));
        }
        if let Some(&bad) = lifting.iter().flatten().find(|&&v| v >= l.order()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        Ok(TwoCrossedModule::from_fn(d2, d1, act_m, act_l, |x, y| lifting[x][y]))
    }

    pub(crate) fn from_fn(
        d2: Hom,
        d1: Hom,
        act_m: Action,
        act_l: Action,
        f: impl Fn(usize, usize) -> usize,
    ) -> TwoCrossedModule {
        let m = d2.cod().order();
        let mut lifting = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                lifting.push(f(x, y) as u32);
            }
        }
        TwoCrossedModule {
            d2,
            d1,
            act_m,
            act_l,
            lifting,
        }
    }

    pub fn l(&self) -> &Group {
        self.d2.dom()
    }

    pub fn m(&self) -> &Group {
        self.d2.cod()
    }

    pub fn n(&self) -> &Group {
        self.d1.cod()
    }

    /// `{x, y}`
    #[inline]
    pub fn lift(&self, x: usize, y: usize) -> usize {
        self.lifting[x * self.m().order() + y] as usize
    }

    pub fn set_lift(&mut self, x: usize, y: usize, value: usize) {
        let m = self.m().order();
        self.lifting[x * m + y] = value as u32;
    }

    pub fn lifting_table(&self) -> Vec<Vec<usize>> {
        let m = self.m();
        m.elements()
            .map(|x| m.elements().map(|y| self.lift(x, y)).collect())
            .collect()
    }

    /// The action of `M` on `L` defined by the lifting, `ᵐl = {∂₂l, m} l`.
    pub fn derived_act(&self, m: usize, l: usize) -> usize {
        self.l().mul(self.lift(self.d2.apply(l), m), l)
    }

    pub fn peiffer(&self, x: usize, y: usize) -> usize {
        let m = self.m();
        let a = self.act_m.act(self.d1.apply(x), y);
        m.product([a, x, m.inv(y), m.inv(x)])
    }

    /// `∂₁` with its `N`-action, as a pre-crossed module.
    pub fn bottom(&self) -> PreCrossedModule {
        PreCrossedModule {
            boundary: self.d1.clone(),
            act: self.act_m.clone(),
        }
    }
}

/// Exhaustive check of the 2-crossed module axioms.
///
/// Axiom ids: `complex`, `equivariance.d2`, `equivariance.d1`, `lifting.n`,
/// `unit`, `2CM1`, `2CM2`, `2CM3i`, `2CM3ii`, `2CM4`, `2CM4a`, `2CM4b`,
/// `2CM5`, `derived.action` and `derived.*` for the crossed module
/// `(L, M, ∂₂)` under the derived action.
pub fn check_two_crossed(t: &TwoCrossedModule) -> Report {
    let mut r = Report::new();
    let (l, m, n) = (t.l(), t.m(), t.n());
    let (d1, d2) = (&t.d1, &t.d2);

    for a in l.elements() {
        r.check(d1.apply(d2.apply(a)) == 0, "complex", &[a]);
    }
    for g in n.elements() {
        for a in l.elements() {
            let ok = d2.apply(t.act_l.act(g, a)) == t.act_m.act(g, d2.apply(a));
            r.check(ok, "equivariance.d2", &[g, a]);
        }
        for x in m.elements() {
            let ok = d1.apply(t.act_m.act(g, x)) == n.conj(g, d1.apply(x));
            r.check(ok, "equivariance.d1", &[g, x]);
        }
    }
    for x in m.elements() {
        r.check(t.lift(0, x) == 0 && t.lift(x, 0) == 0, "unit", &[x]);
        for y in m.elements() {
            r.check(d2.apply(t.lift(x, y)) == t.peiffer(x, y), "2CM1", &[x, y]);
        }
    }
    for a in l.elements() {
        for b in l.elements() {
            let ok = t.lift(d2.apply(a), d2.apply(b)) == l.commutator(b, a);
            r.check(ok, "2CM2", &[a, b]);
        }
    }
    for x in m.elements() {
        let dx = d1.apply(x);
        for y in m.elements() {
            let xy = m.mul(x, y);
            let xyx = m.conj(x, y);
            for z in m.elements() {
                let lhs = t.lift(xy, z);
                let rhs = l.mul(t.act_l.act(dx, t.lift(y, z)), t.lift(x, m.conj(y, z)));
                r.check(lhs == rhs, "2CM3i", &[x, y, z]);
                let lhs = t.lift(x, m.mul(y, z));
                let rhs = l.mul(t.lift(x, y), t.derived_act(xyx, t.lift(x, z)));
                r.check(lhs == rhs, "2CM3ii", &[x, y, z]);
            }
        }
        for a in l.elements() {
            let da = d2.apply(a);
            let lhs = l.mul(t.lift(x, da), t.lift(da, x));
            let rhs = l.mul(t.act_l.act(dx, a), l.inv(a));
            r.check(lhs == rhs, "2CM4", &[x, a]);
            let rhs = l.mul(t.derived_act(x, a), l.inv(a));
            r.check(t.lift(da, x) == rhs, "2CM4a", &[x, a]);
            let rhs = l.mul(t.act_l.act(dx, a), t.derived_act(x, l.inv(a)));
            r.check(t.lift(x, da) == rhs, "2CM4b", &[x, a]);
        }
    }
    for g in n.elements() {
        for x in m.elements() {
            let gx = t.act_m.act(g, x);
            for y in m.elements() {
                let ok = t.act_l.act(g, t.lift(x, y)) == t.lift(gx, t.act_m.act(g, y));
                r.check(ok, "2CM5", &[g, x, y]);
            }
        }
    }
    match Action::from_fn(m, l, |x, a| t.derived_act(x, a)) {
        Ok(act) => {
            let cm = PreCrossedModule {
                boundary: d2.clone(),
                act,
            };
            r.absorb("derived", check_crossed_module(&cm));
        }
        Err(e) => {
            let witness = match e {
                Error::RowNotAutomorphism(x) => vec![x],
                Error::NotAction(x, y, a) => vec![x, y, a],
                _ => vec![],
            };
            r.record("derived.action", &witness);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::symmetric;

    #[test]
    fn trivial_top_over_any_group() {
        let g = symmetric(3);
        let one = Group::trivial();
        let t = TwoCrossedModule::new(
            Hom::identity(&one),
            Hom::trivial(&one, &g),
            Action::trivial(&g, &one),
            Action::trivial(&g, &one),
            &[vec![0]],
        )
        .unwrap();
        assert!(check_two_crossed(&t).is_ok());
    }

    #[test]
    fn shape_errors() {
        let g = symmetric(3);
        let one = Group::trivial();
        let err = TwoCrossedModule::new(
            Hom::identity(&one),
            Hom::trivial(&one, &g),
            Action::trivial(&g, &one),
            Action::trivial(&g, &one),
            &[vec![0, 0]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MalformedTable(_)));
    }
}
