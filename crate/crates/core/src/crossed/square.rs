use super::precrossed::{check_crossed_module, PreCrossedModule};
use crate::error::{Error, Result};
use crate::group::{intersect, Action, Group, Hom, Subgroup};
use crate::report::Report;

/// A commutative square
///
/// ```text
///   L --λ--> M
///   |λ'      |μ
///   v        v
///   N --ν--> P
/// ```
///
/// with `P` acting on `L`, `M`, `N` and an h-map `M × N -> L`. `M` and `N`
/// act on everything through `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSquare {
    pub lam: Hom,
    pub lamp: Hom,
    pub mu: Hom,
    pub nu: Hom,
    pub act_l: Action,
    pub act_m: Action,
    pub act_n: Action,
    h: Vec<u32>,
}

impl CrossedSquare {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        lam: Hom,
        lamp: Hom,
        mu: Hom,
        nu: Hom,
        act_l: Action,
        act_m: Action,
        act_n: Action,
        h: &[Vec<usize>],
    ) -> Result<CrossedSquare> {
        let bad = |what: &str| Err(Error::InvalidStructure(what.to_string()));
        let (l, m, n, p) = (lam.dom(), lam.cod(), lamp.cod(), mu.cod());
        if lamp.dom() != l || mu.dom() != m || nu.dom() != n || nu.cod() != p {
            return bad("maps do not form a square L -> M, L -> N, M -> P, N -> P");
        }
        if act_l.actor() != p || act_l.target() != l {
            return bad("P must act on L");
        }
        if act_m.actor() != p || act_m.target() != m {
            return bad("P must act on M");
        }
        if act_n.actor() != p || act_n.target() != n {
            return bad("P must act on N");
        }
        if h.len() != m.order() || h.iter().any(|r| r.len() != n.order()) {
            return Err(Error::MalformedTable(format!(
                "h table must be {}×{}",
                m.order(),
                n.order()
            )));
        }
        if let Some(&v) = h.iter().flatten().find(|&&v| v >= l.order()) {
            return Err(Error::ElementOutOfRange(v));
        }
        Ok(CrossedSquare::from_fn(
            lam,
            lamp,
            mu,
            nu,
            act_l,
            act_m,
            act_n,
            |x, y| h[x][y],
        ))
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_fn(
        lam: Hom,
        lamp: Hom,
        mu: Hom,
        nu: Hom,
        act_l: Action,
        act_m: Action,
        act_n: Action,
        f: impl Fn(usize, usize) -> usize,
    ) -> CrossedSquare {
        let (m, n) = (lam.cod().order(), lamp.cod().order());
        let mut h = Vec::with_capacity(m * n);
        for x in 0..m {
            for y in 0..n {
                h.push(f(x, y) as u32);
            }
        }
        CrossedSquare {
            lam,
            lamp,
            mu,
            nu,
            act_l,
            act_m,
            act_n,
            h,
        }
    }

    /// Square of two normal subgroups `M, N` of `P` with `L = M ∩ N`,
    /// inclusions, conjugation actions and `h(m, n) = [m, n]`.
    pub fn commutator_square(m: &Subgroup, n: &Subgroup) -> Result<CrossedSquare> {
        let p = m.parent();
        for s in [m, n] {
            if let Some((element, by)) = s.normality_witness() {
                return Err(Error::NotNormal { element, by });
            }
        }
        let l = intersect(m, n)?;
        let inc = |s: &Subgroup| PreCrossedModule::normal_inclusion(s).expect("normal");
        let (cl, cm, cn) = (inc(&l), inc(m), inc(n));
        let lam = Hom::from_fn_unchecked(cl.m(), cm.m(), |x| {
            m.index_of(l.elements()[x]).expect("L ⊂ M")
        });
        let lamp = Hom::from_fn_unchecked(cl.m(), cn.m(), |x| {
            n.index_of(l.elements()[x]).expect("L ⊂ N")
        });
        Ok(CrossedSquare::from_fn(
            lam,
            lamp,
            cm.boundary,
            cn.boundary,
            cl.act,
            cm.act,
            cn.act,
            |x, y| {
                let c = p.commutator(m.elements()[x], n.elements()[y]);
                l.index_of(c).expect("[M, N] ⊂ M ∩ N")
            },
        ))
    }

    pub fn l(&self) -> &Group {
        self.lam.dom()
    }

    pub fn m(&self) -> &Group {
        self.lam.cod()
    }

    pub fn n(&self) -> &Group {
        self.lamp.cod()
    }

    pub fn p(&self) -> &Group {
        self.mu.cod()
    }

    #[inline]
    pub fn h(&self, m: usize, n: usize) -> usize {
        self.h[m * self.n().order() + n] as usize
    }

    pub fn set_h(&mut self, m: usize, n: usize, value: usize) {
        let k = self.n().order();
        self.h[m * k + n] = value as u32;
    }

    pub fn h_table(&self) -> Vec<Vec<usize>> {
        self.m()
            .elements()
            .map(|x| self.n().elements().map(|y| self.h(x, y)).collect())
            .collect()
    }

    /// `ᵐn = ^{μ m}n`
    pub fn m_on_n(&self, m: usize, n: usize) -> usize {
        self.act_n.act(self.mu.apply(m), n)
    }

    /// `ⁿm = ^{ν n}m`
    pub fn n_on_m(&self, n: usize, m: usize) -> usize {
        self.act_m.act(self.nu.apply(n), m)
    }

    /// `ᵐl = ^{μ m}l`
    pub fn m_on_l(&self, m: usize, l: usize) -> usize {
        self.act_l.act(self.mu.apply(m), l)
    }

    /// `ⁿl = ^{ν n}l`
    pub fn n_on_l(&self, n: usize, l: usize) -> usize {
        self.act_l.act(self.nu.apply(n), l)
    }
}

/// Exhaustive check of the crossed square axioms.
///
/// Axiom ids: `commutes`; `i.mu.*`, `i.nu.*`, `i.lambda.*`, `i.lambda'.*`,
/// `i.mulambda.*` for the five crossed modules; `i.equivariance.lambda`,
/// `i.equivariance.lambda'`; and `ii` to `viii` for the h-map.
pub fn check_crossed_square(s: &CrossedSquare) -> Report {
    let mut r = Report::new();
    let (l, m, n, p) = (s.l(), s.m(), s.n(), s.p());
    for a in l.elements() {
        let ok = s.mu.apply(s.lam.apply(a)) == s.nu.apply(s.lamp.apply(a));
        r.check(ok, "commutes", &[a]);
    }

    let xmod = |boundary: &Hom, act: &Action| PreCrossedModule {
        boundary: boundary.clone(),
        act: act.clone(),
    };
    r.absorb("i.mu", check_crossed_module(&xmod(&s.mu, &s.act_m)));
    r.absorb("i.nu", check_crossed_module(&xmod(&s.nu, &s.act_n)));
    r.absorb(
        "i.lambda",
        check_crossed_module(&xmod(&s.lam, &s.act_l.pullback(&s.mu))),
    );
    r.absorb(
        "i.lambda'",
        check_crossed_module(&xmod(&s.lamp, &s.act_l.pullback(&s.nu))),
    );
    r.absorb(
        "i.mulambda",
        check_crossed_module(&xmod(&s.lam.then(&s.mu), &s.act_l)),
    );
    for g in p.elements() {
        for a in l.elements() {
            let ga = s.act_l.act(g, a);
            r.check(
                s.lam.apply(ga) == s.act_m.act(g, s.lam.apply(a)),
                "i.equivariance.lambda",
                &[g, a],
            );
            r.check(
                s.lamp.apply(ga) == s.act_n.act(g, s.lamp.apply(a)),
                "i.equivariance.lambda'",
                &[g, a],
            );
        }
    }

    for x in m.elements() {
        for x2 in m.elements() {
            let xx2 = m.mul(x, x2);
            let x_x2 = s.act_m.act(s.mu.apply(x), x2);
            for y in n.elements() {
                let rhs = l.mul(s.h(x_x2, s.m_on_n(x, y)), s.h(x, y));
                r.check(s.h(xx2, y) == rhs, "ii", &[x, x2, y]);
            }
        }
    }
    for x in m.elements() {
        for y in n.elements() {
            let y_x = s.n_on_m(y, x);
            for y2 in n.elements() {
                let rhs = l.mul(s.h(x, y), s.h(y_x, s.act_n.act(s.nu.apply(y), y2)));
                r.check(s.h(x, n.mul(y, y2)) == rhs, "iii", &[x, y, y2]);
            }
        }
    }
    for x in m.elements() {
        for y in n.elements() {
            let hxy = s.h(x, y);
            let rhs = m.mul(x, s.n_on_m(y, m.inv(x)));
            r.check(s.lam.apply(hxy) == rhs, "iv", &[x, y]);
            let rhs = n.mul(s.m_on_n(x, y), n.inv(y));
            r.check(s.lamp.apply(hxy) == rhs, "v", &[x, y]);
        }
    }
    for a in l.elements() {
        let la = s.lam.apply(a);
        for y in n.elements() {
            let rhs = l.mul(a, s.n_on_l(y, l.inv(a)));
            r.check(s.h(la, y) == rhs, "vi", &[a, y]);
        }
        let lpa = s.lamp.apply(a);
        for x in m.elements() {
            let rhs = l.mul(s.m_on_l(x, a), l.inv(a));
            r.check(s.h(x, lpa) == rhs, "vii", &[x, a]);
        }
    }
    for g in p.elements() {
        for x in m.elements() {
            let gx = s.act_m.act(g, x);
            for y in n.elements() {
                let ok = s.h(gx, s.act_n.act(g, y)) == s.act_l.act(g, s.h(x, y));
                r.check(ok, "viii", &[g, x, y]);
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::symmetric;
    use crate::group::subgroup_generated;

    #[test]
    fn trivial_square_over_c2() {
        let s = crate::corpus::square_trivial_c2();
        assert!(check_crossed_square(&s).is_ok());
    }

    #[test]
    fn a3_commutator_square() {
        let s3 = symmetric(3);
        let a3 = subgroup_generated(&s3, &[3]);
        let sq = CrossedSquare::commutator_square(&a3, &a3).unwrap();
        assert_eq!(
            [sq.l().order(), sq.m().order(), sq.n().order(), sq.p().order()],
            [3, 3, 3, 6]
        );
        assert!(check_crossed_square(&sq).is_ok());
    }

    #[test]
    fn tampered_h_breaks_axiom_iv() {
        let s3 = symmetric(3);
        let whole = Subgroup::whole(&s3);
        let mut sq = CrossedSquare::commutator_square(&whole, &whole).unwrap();
        assert!(check_crossed_square(&sq).is_ok());
        // (12) and (123) do not commute
        let (x, y) = (1, 3);
        assert_ne!(sq.h(x, y), 0);
        sq.set_h(x, y, 0);
        let r = check_crossed_square(&sq);
        assert!(r.count("iv") > 0);
        assert_eq!(r.first("iv").unwrap().witness, vec![x, y]);
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let s3 = symmetric(3);
        let t = subgroup_generated(&s3, &[1]);
        assert!(matches!(
            CrossedSquare::commutator_square(&t, &t).unwrap_err(),
            Error::NotNormal { .. }
        ));
    }
}
