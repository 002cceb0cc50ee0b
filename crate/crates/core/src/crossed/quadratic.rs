use super::precrossed::{check_precrossed, PreCrossedModule};
use crate::error::{Error, Result};
use crate::group::{normal_closure, quotient, Action, Group, Hom, Quotient};
use crate::report::Report;

/// A quadratic module `C ⊗ C --ω--> L --δ--> M --∂--> N`.
///
/// `C = (M^{cr})^{ab}` is recomputed from `∂` and stored with its projection
/// `q: M -> C`; `ω` is a table on `C × C` whose bilinearity is checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticModule {
    pub delta: Hom,
    pub boundary: Hom,
    pub act_m: Action,
    pub act_l: Action,
    pub q: Hom,
    omega: Vec<u32>,
}

/// `M -> (M / P₂)^{ab}`, i.e. the quotient by the normal closure of all
/// Peiffer commutators and all commutators.
pub fn nil2_quotient(p: &PreCrossedModule) -> Quotient {
    let m = p.m();
    let mut gens = Vec::new();
    for x in m.elements() {
        for y in m.elements() {
            gens.push(p.peiffer(x, y));
            gens.push(m.commutator(x, y));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    quotient(m, &normal_closure(m, &gens)).expect("normal closure is normal")
}

impl QuadraticModule {
    pub fn new(
        delta: Hom,
        boundary: Hom,
        act_m: Action,
        act_l: Action,
        omega: &[Vec<usize>],
    ) -> Result<QuadraticModule> {
        if delta.cod() != boundary.dom() {
            return Err(Error::InvalidStructure("δ must end where ∂ starts".into()));
        }
        let pre = PreCrossedModule::new(boundary.clone(), act_m.clone())?;
        if act_l.actor() != boundary.cod() || act_l.target() != delta.dom() {
            return Err(Error::InvalidStructure("N must act on L".into()));
        }
        let c = nil2_quotient(&pre);
        let k = c.group.order();
        if omega.len() != k || omega.iter().any(|r| r.len() != k) {
            return Err(Error::MalformedTable(format!("omega table must be {k}×{k}")));
        }
        if let Some(&v) = omega.iter().flatten().find(|&&v| v >= delta.dom().order()) {
            return Err(Error::ElementOutOfRange(v));
        }
        let omega = omega.iter().flatten().map(|&v| v as u32).collect();
        Ok(QuadraticModule {
            delta,
            boundary,
            act_m,
            act_l,
            q: c.projection,
            omega,
        })
    }

    /// Builds the module with `ω(x̄, ȳ) = f(x, y)` evaluated on coset
    /// representatives.
    pub(crate) fn from_lift(
        delta: Hom,
        boundary: Hom,
        act_m: Action,
        act_l: Action,
        f: impl Fn(usize, usize) -> usize,
    ) -> QuadraticModule {
        let pre = PreCrossedModule {
            boundary: boundary.clone(),
            act: act_m.clone(),
        };
        let c = nil2_quotient(&pre);
        let k = c.group.order();
        let mut omega = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                omega.push(f(c.lift(a), c.lift(b)) as u32);
            }
        }
        QuadraticModule {
            delta,
            boundary,
            act_m,
            act_l,
            q: c.projection,
            omega,
        }
    }

    pub fn l(&self) -> &Group {
        self.delta.dom()
    }

    pub fn m(&self) -> &Group {
        self.delta.cod()
    }

    pub fn n(&self) -> &Group {
        self.boundary.cod()
    }

    pub fn c(&self) -> &Group {
        self.q.cod()
    }

    #[inline]
    pub fn omega(&self, a: usize, b: usize) -> usize {
        self.omega[a * self.c().order() + b] as usize
    }

    pub fn set_omega(&mut self, a: usize, b: usize, value: usize) {
        let k = self.c().order();
        self.omega[a * k + b] = value as u32;
    }

    pub fn omega_table(&self) -> Vec<Vec<usize>> {
        let c = self.c();
        c.elements()
            .map(|a| c.elements().map(|b| self.omega(a, b)).collect())
            .collect()
    }

    pub fn pre(&self) -> PreCrossedModule {
        PreCrossedModule {
            boundary: self.boundary.clone(),
            act: self.act_m.clone(),
        }
    }
}

/// Exhaustive check of the quadratic module axioms.
///
/// Axiom ids: `QM1.precrossed.*`, `QM1.nil2`, `QM1.C`, `QM2.complex`,
/// `QM2.lift`, `QM3.equivariance.delta`, `QM3.equivariance.omega`,
/// `QM3.formula`, `QM4`, `bilinear.left`, `bilinear.right`.
pub fn check_quadratic(qm: &QuadraticModule) -> Report {
    let mut r = Report::new();
    let (l, m, n, c) = (qm.l(), qm.m(), qm.n(), qm.c());
    let pre = qm.pre();
    r.absorb("QM1.precrossed", check_precrossed(&pre));

    let w: Vec<Vec<usize>> = m
        .elements()
        .map(|x| m.elements().map(|y| pre.peiffer(x, y)).collect())
        .collect();
    for x in m.elements() {
        for y in m.elements() {
            for z in m.elements() {
                let ok = pre.peiffer(w[x][y], z) == 0 && pre.peiffer(x, w[y][z]) == 0;
                r.check(ok, "QM1.nil2", &[x, y, z]);
            }
        }
    }
    let expected = nil2_quotient(&pre);
    let q_is_hom = qm.q.first_violation().is_none();
    if !q_is_hom || !qm.q.is_surjective() {
        r.record("QM1.C", &[]);
    } else {
        for x in m.elements() {
            let ok = (qm.q.apply(x) == 0) == (expected.projection.apply(x) == 0);
            r.check(ok, "QM1.C", &[x]);
        }
    }

    let q = |x: usize| qm.q.apply(x);
    for a in l.elements() {
        r.check(qm.boundary.apply(qm.delta.apply(a)) == 0, "QM2.complex", &[a]);
    }
    for x in m.elements() {
        for y in m.elements() {
            let ok = qm.delta.apply(qm.omega(q(x), q(y))) == w[x][y];
            r.check(ok, "QM2.lift", &[x, y]);
        }
    }

    for g in n.elements() {
        for a in l.elements() {
            let ok = qm.delta.apply(qm.act_l.act(g, a)) == qm.act_m.act(g, qm.delta.apply(a));
            r.check(ok, "QM3.equivariance.delta", &[g, a]);
        }
        for x in m.elements() {
            let gx = q(qm.act_m.act(g, x));
            for y in m.elements() {
                let lhs = qm.omega(gx, q(qm.act_m.act(g, y)));
                let ok = lhs == qm.act_l.act(g, qm.omega(q(x), q(y)));
                r.check(ok, "QM3.equivariance.omega", &[g, x, y]);
            }
        }
    }
    for x in m.elements() {
        let (dx, qx) = (qm.boundary.apply(x), q(x));
        for a in l.elements() {
            let qa = q(qm.delta.apply(a));
            let rhs = l.product([qm.omega(qx, qa), qm.omega(qa, qx), a]);
            r.check(qm.act_l.act(dx, a) == rhs, "QM3.formula", &[x, a]);
        }
    }
    for a in l.elements() {
        let qa = q(qm.delta.apply(a));
        for b in l.elements() {
            let ok = qm.omega(qa, q(qm.delta.apply(b))) == l.commutator(b, a);
            r.check(ok, "QM4", &[a, b]);
        }
    }

    for a in c.elements() {
        for b in c.elements() {
            let ab = c.mul(a, b);
            for d in c.elements() {
                let ok = qm.omega(ab, d) == l.mul(qm.omega(a, d), qm.omega(b, d));
                r.check(ok, "bilinear.left", &[a, b, d]);
                let ok = qm.omega(d, ab) == l.mul(qm.omega(d, a), qm.omega(d, b));
                r.check(ok, "bilinear.right", &[d, a, b]);
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_module_is_valid() {
        let one = Group::trivial();
        let qm = QuadraticModule::new(
            Hom::identity(&one),
            Hom::identity(&one),
            Action::trivial(&one, &one),
            Action::trivial(&one, &one),
            &[vec![0]],
        )
        .unwrap();
        assert!(check_quadratic(&qm).is_ok());
    }

    #[test]
    fn wrong_omega_shape() {
        let one = Group::trivial();
        let err = QuadraticModule::new(
            Hom::identity(&one),
            Hom::identity(&one),
            Action::trivial(&one, &one),
            Action::trivial(&one, &one),
            &[vec![0, 0]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MalformedTable(_)));
    }
}
