use crate::error::{Error, Result};
use crate::group::{normal_closure, Action, Group, Hom, Subgroup};
use crate::report::Report;

/// A homomorphism `∂: M -> N` with an action of `N` on `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreCrossedModule {
    pub boundary: Hom,
    pub act: Action,
}

/// A crossed module is a pre-crossed module that also satisfies the Peiffer
/// identity; [`check_crossed_module`] decides which one a value is.
pub type CrossedModule = PreCrossedModule;

impl PreCrossedModule {
    pub fn new(boundary: Hom, act: Action) -> Result<PreCrossedModule> {
        if act.target() != boundary.dom() || act.actor() != boundary.cod() {
            return Err(Error::InvalidStructure(
                "action must be of the codomain of the boundary on its domain".into(),
            ));
        }
        Ok(PreCrossedModule { boundary, act })
    }

    /// Inclusion of a normal subgroup with the conjugation action.
    pub fn normal_inclusion(sub: &Subgroup) -> Result<PreCrossedModule> {
        if let Some((element, by)) = sub.normality_witness() {
            return Err(Error::NotNormal { element, by });
        }
        let (m, emb) = sub.to_group();
        let p = sub.parent();
        let act = Action::from_fn_unchecked(p, &m, |g, x| {
            sub.index_of(p.conj(g, emb.apply(x))).expect("normal subgroup")
        });
        Ok(PreCrossedModule { boundary: emb, act })
    }

    pub fn m(&self) -> &Group {
        self.boundary.dom()
    }

    pub fn n(&self) -> &Group {
        self.boundary.cod()
    }

    /// `⟨x, y⟩ = (^{∂x}y) x y⁻¹ x⁻¹`
    pub fn peiffer(&self, x: usize, y: usize) -> usize {
        let m = self.m();
        let a = self.act.act(self.boundary.apply(x), y);
        m.product([a, x, m.inv(y), m.inv(x)])
    }
}

pub fn peiffer_commutator(p: &PreCrossedModule, x: usize, y: usize) -> usize {
    p.peiffer(x, y)
}

/// Equivariance `∂(ⁿm) = n ∂(m) n⁻¹`.
pub fn check_precrossed(p: &PreCrossedModule) -> Report {
    let mut r = Report::new();
    let n = p.n();
    for g in n.elements() {
        for x in p.m().elements() {
            let lhs = p.boundary.apply(p.act.act(g, x));
            r.check(lhs == n.conj(g, p.boundary.apply(x)), "equivariance", &[g, x]);
        }
    }
    r
}

/// Equivariance plus the Peiffer identity `^{∂m}m' = m m' m⁻¹`.
pub fn check_crossed_module(c: &CrossedModule) -> Report {
    let mut r = check_precrossed(c);
    let m = c.m();
    for x in m.elements() {
        let dx = c.boundary.apply(x);
        for y in m.elements() {
            r.check(c.act.act(dx, y) == m.conj(x, y), "peiffer", &[x, y]);
        }
    }
    r
}

/// The Peiffer subgroups `P₂` and `P₃`, both as normal closures.
pub fn peiffer_subgroups(p: &PreCrossedModule) -> (Subgroup, Subgroup) {
    let m = p.m();
    let mut brackets = Vec::new();
    for x in m.elements() {
        for y in m.elements() {
            brackets.push(p.peiffer(x, y));
        }
    }
    brackets.sort_unstable();
    brackets.dedup();
    let p2 = normal_closure(m, &brackets);
    let mut triples = Vec::new();
    for &b in &brackets {
        for z in m.elements() {
            triples.push(p.peiffer(b, z));
            triples.push(p.peiffer(z, b));
        }
    }
    triples.sort_unstable();
    triples.dedup();
    let p3 = normal_closure(m, &triples);
    (p2, p3)
}
