use super::precrossed::{CrossedModule, PreCrossedModule};
use super::square::CrossedSquare;
use crate::error::{Error, Result};
use crate::group::{image, intersect, kernel, semidirect, Action, Group, Hom, Subgroup};
use crate::report::Report;

/// A group with source and target endomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cat1Group {
    pub g: Group,
    pub s: Hom,
    pub t: Hom,
}

/// A group with two commuting cat¹ structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cat2Group {
    pub g: Group,
    pub s1: Hom,
    pub t1: Hom,
    pub s2: Hom,
    pub t2: Hom,
}

/// Axiom ids: `hom.s`, `hom.t`, `st=t`, `ts=s`, `idempotent.s`,
/// `idempotent.t`, `[ker s,ker t]`.
pub fn check_cat1(k: &Cat1Group) -> Report {
    let mut r = Report::new();
    let g = &k.g;
    for (name, f) in [("hom.s", &k.s), ("hom.t", &k.t)] {
        if let Some((x, y)) = f.first_violation() {
            r.record(name, &[x, y]);
        }
    }
    for x in g.elements() {
        let (sx, tx) = (k.s.apply(x), k.t.apply(x));
        r.check(k.s.apply(tx) == tx, "st=t", &[x]);
        r.check(k.t.apply(sx) == sx, "ts=s", &[x]);
        r.check(k.s.apply(sx) == sx, "idempotent.s", &[x]);
        r.check(k.t.apply(tx) == tx, "idempotent.t", &[x]);
    }
    let (ks, kt) = (kernel(&k.s), kernel(&k.t));
    for &a in ks.elements() {
        for &b in kt.elements() {
            r.check(g.mul(a, b) == g.mul(b, a), "[ker s,ker t]", &[a, b]);
        }
    }
    r
}

/// Axiom ids: `1.*` and `2.*` for the two cat¹ structures, then
/// `s1s2=s2s1`, `t1t2=t2t1`, `s1t2=t2s1`, `s2t1=t1s2`.
pub fn check_cat2(k: &Cat2Group) -> Report {
    let mut r = Report::new();
    r.absorb("1", check_cat1(&k.first()));
    r.absorb("2", check_cat1(&k.second()));
    let ap = |f: &Hom, h: &Hom, x: usize| f.apply(h.apply(x));
    for x in k.g.elements() {
        r.check(ap(&k.s1, &k.s2, x) == ap(&k.s2, &k.s1, x), "s1s2=s2s1", &[x]);
        r.check(ap(&k.t1, &k.t2, x) == ap(&k.t2, &k.t1, x), "t1t2=t2t1", &[x]);
        r.check(ap(&k.s1, &k.t2, x) == ap(&k.t2, &k.s1, x), "s1t2=t2s1", &[x]);
        r.check(ap(&k.s2, &k.t1, x) == ap(&k.t1, &k.s2, x), "s2t1=t1s2", &[x]);
    }
    r
}

impl Cat2Group {
    pub fn first(&self) -> Cat1Group {
        Cat1Group {
            g: self.g.clone(),
            s: self.s1.clone(),
            t: self.t1.clone(),
        }
    }

    pub fn second(&self) -> Cat1Group {
        Cat1Group {
            g: self.g.clone(),
            s: self.s2.clone(),
            t: self.t2.clone(),
        }
    }
}

/// `G = C ⋊ B` with `s(c, b) = (1, b)` and `t(c, b) = (1, ∂(c) b)`.
pub fn cat1_from_crossed_module(c: &CrossedModule) -> Cat1Group {
    let sd = semidirect(&c.act);
    let g = sd.result.clone();
    let s = Hom::from_fn_unchecked(&g, &g, |x| sd.pair(0, sd.split(x).1));
    let t = Hom::from_fn_unchecked(&g, &g, |x| {
        let (k, b) = sd.split(x);
        sd.pair(0, c.n().mul(c.boundary.apply(k), b))
    });
    Cat1Group { g, s, t }
}

/// `∂ = t|: ker s -> im s` with the conjugation action.
pub fn crossed_module_from_cat1(k: &Cat1Group) -> Result<CrossedModule> {
    let r = check_cat1(k);
    if !r.is_ok() {
        return Err(Error::NotCat1(r.to_string()));
    }
    let (cs, bs) = (kernel(&k.s), image(&k.s));
    Ok(restricted_xmod(&k.g, &cs, &bs, &k.t))
}

/// Restriction of `t` to `dom -> cod` with `cod` acting on `dom` by
/// conjugation in the ambient group.
fn restricted_xmod(g: &Group, dom: &Subgroup, cod: &Subgroup, t: &Hom) -> PreCrossedModule {
    let (dg, _) = dom.to_group();
    let (cg, _) = cod.to_group();
    let boundary = Hom::from_fn_unchecked(&dg, &cg, |x| {
        cod.index_of(t.apply(dom.elements()[x]))
            .expect("t maps the kernel of s into the image of s")
    });
    PreCrossedModule {
        boundary,
        act: conjugation_on(g, cod, dom),
    }
}

fn conjugation_on(g: &Group, actor: &Subgroup, target: &Subgroup) -> Action {
    let (ag, _) = actor.to_group();
    let (tg, _) = target.to_group();
    Action::from_fn_unchecked(&ag, &tg, |a, x| {
        target
            .index_of(g.conj(actor.elements()[a], target.elements()[x]))
            .expect("target is normalised by the actor")
    })
}

/// Index arithmetic for the big group `(L ⋊ N) ⋊ (M ⋊ P)` of a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareCoords {
    pub l: usize,
    pub n: usize,
    pub m: usize,
    pub p: usize,
}

impl SquareCoords {
    pub fn of(s: &CrossedSquare) -> SquareCoords {
        SquareCoords {
            l: s.l().order(),
            n: s.n().order(),
            m: s.m().order(),
            p: s.p().order(),
        }
    }

    /// Index of `((l, n), (m, p))`.
    #[inline]
    pub fn encode(&self, l: usize, n: usize, m: usize, p: usize) -> usize {
        (l + self.l * n) + self.l * self.n * (m + self.m * p)
    }

    #[inline]
    pub fn decode(&self, x: usize) -> (usize, usize, usize, usize) {
        let ln = self.l * self.n;
        let (a, b) = (x % ln, x / ln);
        (a % self.l, a / self.l, b % self.m, b / self.m)
    }
}

/// The cat²-group on `(L ⋊ N) ⋊ (M ⋊ P)`.
///
/// `(s1, t1)` is the pair called `s', t'` on the `M` side and `(s2, t2)` the
/// pair `s, t` on the `N` side, so that `im s1 ∩ ker s2` recovers `M` and
/// `ker s1 ∩ im s2` recovers `N`.
pub fn cat2_from_crossed_square(s: &CrossedSquare) -> Result<Cat2Group> {
    let (l, m, n, p) = (s.l(), s.m(), s.n(), s.p());
    let ln = semidirect(&Action::from_fn(n, l, |y, a| s.n_on_l(y, a))?);
    let mp = semidirect(&s.act_m);
    let act = Action::from_fn(&mp.result, &ln.result, |x, y| {
        let (mm, pp) = mp.split(x);
        let (a, b) = ln.split(y);
        let pb = s.act_n.act(pp, b);
        let first = l.mul(s.m_on_l(mm, s.act_l.act(pp, a)), s.h(mm, pb));
        ln.pair(first, pb)
    })?;
    let big = semidirect(&act);
    let g = big.result.clone();
    let c = SquareCoords::of(s);
    let s1 = Hom::from_fn_unchecked(&g, &g, |x| {
        let (_, _, mm, pp) = c.decode(x);
        c.encode(0, 0, mm, pp)
    });
    let t1 = Hom::from_fn_unchecked(&g, &g, |x| {
        let (a, b, mm, pp) = c.decode(x);
        let mm = m.mul(s.lam.apply(a), s.n_on_m(b, mm));
        c.encode(0, 0, mm, p.mul(s.nu.apply(b), pp))
    });
    let s2 = Hom::from_fn_unchecked(&g, &g, |x| {
        let (_, b, _, pp) = c.decode(x);
        c.encode(0, b, 0, pp)
    });
    let t2 = Hom::from_fn_unchecked(&g, &g, |x| {
        let (a, b, mm, pp) = c.decode(x);
        c.encode(0, n.mul(s.lamp.apply(a), b), 0, p.mul(s.mu.apply(mm), pp))
    });
    Ok(Cat2Group { g, s1, t1, s2, t2 })
}

/// Corners `ker∩ker`, `im s1∩ker s2`, `ker s1∩im s2`, `im∩im` with the
/// restricted targets, conjugation actions and the commutator as h-map.
pub fn crossed_square_from_cat2(k: &Cat2Group) -> Result<CrossedSquare> {
    let r = check_cat2(k);
    if !r.is_ok() {
        return Err(Error::NotCat2(r.to_string()));
    }
    let g = &k.g;
    let (ks1, ks2, is1, is2) = (kernel(&k.s1), kernel(&k.s2), image(&k.s1), image(&k.s2));
    let l = intersect(&ks1, &ks2)?;
    let m = intersect(&is1, &ks2)?;
    let n = intersect(&ks1, &is2)?;
    let p = intersect(&is1, &is2)?;
    let lam = restricted_xmod(g, &l, &m, &k.t1).boundary;
    let lamp = restricted_xmod(g, &l, &n, &k.t2).boundary;
    let mu = restricted_xmod(g, &m, &p, &k.t2);
    let nu = restricted_xmod(g, &n, &p, &k.t1);
    let on_l = conjugation_on(g, &p, &l);
    Ok(CrossedSquare::from_fn(
        lam,
        lamp,
        mu.boundary,
        nu.boundary,
        on_l,
        mu.act,
        nu.act,
        |x, y| {
            let c = g.commutator(m.elements()[x], n.elements()[y]);
            l.index_of(c).expect("[M, N] lies in L")
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::check_crossed_square;
    use crate::group::builtin::{cyclic, symmetric};
    use crate::group::{is_isomorphic, subgroup_generated};

    fn a3_in_s3() -> CrossedModule {
        let s3 = symmetric(3);
        PreCrossedModule::normal_inclusion(&subgroup_generated(&s3, &[3])).unwrap()
    }

    #[test]
    fn trivial_crossed_module() {
        let one = Group::trivial();
        let c = PreCrossedModule::new(Hom::identity(&one), Action::trivial(&one, &one)).unwrap();
        let k = cat1_from_crossed_module(&c);
        assert_eq!(k.g.order(), 1);
        assert!(check_cat1(&k).is_ok());
    }

    #[test]
    fn a3_s3_round_trip() {
        let c = a3_in_s3();
        let k = cat1_from_crossed_module(&c);
        assert_eq!(k.g.order(), 18);
        assert!(check_cat1(&k).is_ok());
        let back = crossed_module_from_cat1(&k).unwrap();
        assert!(is_isomorphic(back.m(), c.m()).unwrap());
        assert!(is_isomorphic(back.n(), c.n()).unwrap());
        // identity labels survive the round trip
        assert_eq!(back, c);
    }

    #[test]
    fn c4_onto_c2() {
        let (c4, c2) = (cyclic(4), cyclic(2));
        let c = PreCrossedModule::new(
            Hom::from_fn(&c4, &c2, |x| x % 2).unwrap(),
            Action::trivial(&c2, &c4),
        )
        .unwrap();
        let k = cat1_from_crossed_module(&c);
        assert_eq!(k.g.order(), 8);
        let r = check_cat1(&k);
        assert_eq!(r.count("[ker s,ker t]"), 0);
        assert!(r.is_ok());
    }

    #[test]
    fn broken_cat1_is_rejected() {
        let s3 = symmetric(3);
        let k = Cat1Group {
            g: s3.clone(),
            s: Hom::trivial(&s3, &s3),
            t: Hom::trivial(&s3, &s3),
        };
        // ker s = ker t = S3 does not commute with itself
        assert!(matches!(
            crossed_module_from_cat1(&k).unwrap_err(),
            Error::NotCat1(_)
        ));
    }

    #[test]
    fn square_round_trip() {
        let s3 = symmetric(3);
        let a3 = subgroup_generated(&s3, &[3]);
        let sq = CrossedSquare::commutator_square(&a3, &a3).unwrap();
        let k = cat2_from_crossed_square(&sq).unwrap();
        assert_eq!(k.g.order(), 162);
        assert!(check_cat2(&k).is_ok());
        let back = crossed_square_from_cat2(&k).unwrap();
        assert!(check_crossed_square(&back).is_ok());
        assert_eq!(back, sq);
    }

    #[test]
    fn coords_round_trip() {
        let c = SquareCoords { l: 2, n: 3, m: 4, p: 5 };
        for x in 0..120 {
            let (a, b, m, p) = c.decode(x);
            assert_eq!(c.encode(a, b, m, p), x);
        }
    }
}
