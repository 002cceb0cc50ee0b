use super::{quadratic_from_two_crossed, six_term_lifting};
use crate::crossed::{cat2_from_crossed_square, CrossedSquare, QuadraticModule, TwoCrossedModule};
use crate::error::{Error, Result};
use crate::group::{kernel, intersect, normal_closure, semidirect, Action, Hom, SemidirectProduct, Subgroup};
use crate::simplicial::{binerve_cells, codiagonal_with_components, explicit_codiagonal, moore_complex};

/// `M ⋊ N` with `N` acting through `ν` and the `P`-action on `M`; the
/// pair `(m, n)` has index `m + |M| n`.
pub fn mapping_cone_group(s: &CrossedSquare) -> SemidirectProduct {
    let act = Action::from_fn_unchecked(s.n(), s.m(), |n, m| s.n_on_m(n, m));
    semidirect(&act)
}

/// The mapping cone `L -> M ⋊ N -> P` with `∂₂ l = (λl⁻¹, λ'l)`,
/// `∂₁(m, n) = μ(m)ν(n)` and `{(m,n), (c,a)} = h(m, n a n⁻¹)`.
pub fn two_crossed_from_square(s: &CrossedSquare) -> TwoCrossedModule {
    let sd = mapping_cone_group(s);
    let (l, m, n, p) = (s.l(), s.m(), s.n(), s.p());
    let mn = &sd.result;
    let d2 = Hom::from_fn_unchecked(l, mn, |x| sd.pair(m.inv(s.lam.apply(x)), s.lamp.apply(x)));
    let d1 = Hom::from_fn_unchecked(mn, p, |x| {
        let (a, b) = sd.split(x);
        p.mul(s.mu.apply(a), s.nu.apply(b))
    });
    let act_m = Action::from_fn_unchecked(p, mn, |g, x| {
        let (a, b) = sd.split(x);
        sd.pair(s.act_m.act(g, a), s.act_n.act(g, b))
    });
    TwoCrossedModule::from_fn(d2, d1, act_m, s.act_l.clone(), |x, y| {
        let (mm, nn) = sd.split(x);
        let (_, a) = sd.split(y);
        s.h(mm, n.product([nn, a, n.inv(nn)]))
    })
}

/// The same 2-crossed module read off the codiagonal of the binerve of the
/// associated cat²-group, through `f₁: (n⁻¹, m⁻¹, μ(m)ν(n)) ↦ (m, n)` on
/// `NG₁` and `l ↦ (l, λ'l⁻¹, λl⁻¹, 1, λl, 1)` on `ker d₀ ∩ ker d₁`.
///
/// Uses `M ⋊ N`, `L` and `P` of the square as carriers so the result can be
/// compared with [`two_crossed_from_square`] by equality.
pub fn two_crossed_from_square_via_codiagonal(s: &CrossedSquare) -> Result<TwoCrossedModule> {
    let cat2 = cat2_from_crossed_square(s)?;
    let bn = binerve_cells(&cat2, 2)?;
    let cod = codiagonal_with_components(&bn.grid)?;
    let exp = explicit_codiagonal(s)?;
    let g = &cod.simplicial;
    let sd = mapping_cone_group(s);
    let (l, m, n, p) = (s.l(), s.m(), s.n(), s.p());
    let mn = &sd.result;
    let broken = |what: &str| Error::InvalidStructure(format!("codiagonal identification fails: {what}"));

    let phi0: Vec<usize> = p
        .elements()
        .map(|x| exp.to_generic(&bn, &cod, 0, x).ok_or_else(|| broken("level 0")))
        .collect::<Result<_>>()?;
    let phi1: Vec<usize> = mn
        .elements()
        .map(|x| {
            let (a, b) = sd.split(x);
            let e = exp.encode1(n.inv(b), m.inv(a), p.mul(s.mu.apply(a), s.nu.apply(b)));
            exp.to_generic(&bn, &cod, 1, e).ok_or_else(|| broken("M ⋊ N"))
        })
        .collect::<Result<_>>()?;
    let phi2: Vec<usize> = l
        .elements()
        .map(|x| {
            let (lm, ln) = (s.lam.apply(x), s.lamp.apply(x));
            let e = exp.encode2([x, n.inv(ln), m.inv(lm), 0, lm, 0]);
            exp.to_generic(&bn, &cod, 2, e).ok_or_else(|| broken("L"))
        })
        .collect::<Result<_>>()?;

    let moore = moore_complex(g);
    let top = intersect(&kernel(g.d(2, 0)), &kernel(g.d(2, 1)))?;
    let targets = [
        (Subgroup::whole(g.level(0)), &phi0, p),
        (moore.term(1).clone(), &phi1, mn),
        (top, &phi2, l),
    ];
    let mut inverses = Vec::new();
    for (lvl, (sub, phi, src)) in targets.iter().enumerate() {
        let mut inv = vec![usize::MAX; g.level(lvl).order()];
        for (x, &y) in phi.iter().enumerate() {
            if !sub.contains(y) || inv[y] != usize::MAX {
                return Err(broken("not a bijection onto the Moore term"));
            }
            inv[y] = x;
        }
        if phi.len() != sub.order() {
            return Err(broken("not onto the Moore term"));
        }
        for x in src.elements() {
            for y in src.elements() {
                if phi[src.mul(x, y)] != g.level(lvl).mul(phi[x], phi[y]) {
                    return Err(broken("not a homomorphism"));
                }
            }
        }
        inverses.push(inv);
    }
    let (inv0, inv1, inv2) = (&inverses[0], &inverses[1], &inverses[2]);
    let (g1, g2) = (g.level(1), g.level(2));
    let d2 = Hom::from_fn_unchecked(l, mn, |x| inv1[g.face(2, 2, phi2[x])]);
    let d1 = Hom::from_fn_unchecked(mn, p, |x| inv0[g.face(1, 1, phi1[x])]);
    let act_m = Action::from_fn_unchecked(p, mn, |a, x| {
        inv1[g1.conj(g.degen(0, 0, phi0[a]), phi1[x])]
    });
    let act_l = Action::from_fn_unchecked(p, l, |a, x| {
        let lifted = g.degen(1, 1, g.degen(0, 0, phi0[a]));
        inv2[g2.conj(lifted, phi2[x])]
    });
    let mut lifting = Vec::with_capacity(mn.order());
    for x in mn.elements() {
        let mut row = Vec::with_capacity(mn.order());
        for y in mn.elements() {
            let v = six_term_lifting(g, phi1[x], phi1[y]);
            if inv2[v] == usize::MAX {
                return Err(broken("lifting leaves ker d0 ∩ ker d1"));
            }
            row.push(inv2[v]);
        }
        lifting.push(row);
    }
    Ok(TwoCrossedModule::from_fn(d2, d1, act_m, act_l, |x, y| lifting[x][y]))
}

/// `⟨(m,n), (c,a)⟩ = (^{ν(nan⁻¹)}m · m⁻¹, ^{μ(m)}(nan⁻¹) · n a⁻¹ n⁻¹)` in
/// `M ⋊ N`; `c` does not enter.
pub fn mapping_cone_peiffer_commutator(s: &CrossedSquare, x: usize, y: usize) -> usize {
    let sd = mapping_cone_group(s);
    let (m, n) = (s.m(), s.n());
    let (mm, nn) = sd.split(x);
    let (_, a) = sd.split(y);
    let nan = n.product([nn, a, n.inv(nn)]);
    let first = m.mul(s.n_on_m(nan, mm), m.inv(mm));
    let second = n.mul(s.m_on_n(mm, nan), n.inv(nan));
    sd.pair(first, second)
}

/// The composite `quadratic_from_two_crossed ∘ two_crossed_from_square`.
pub fn quadratic_from_square(s: &CrossedSquare) -> Result<QuadraticModule> {
    quadratic_from_two_crossed(&two_crossed_from_square(s))
}

/// The closed-form generators of `P₃'` for the mapping cone of a square set
/// against the normal closure the composite path uses.
#[derive(Clone, Debug)]
pub struct ClosedFormComparison {
    pub closed_form: Subgroup,
    pub composite: Subgroup,
}

impl ClosedFormComparison {
    pub fn agree(&self) -> bool {
        self.closed_form.elements() == self.composite.elements()
    }
}

/// Generators `h(^{ν(nan⁻¹)}m m⁻¹, ^{ν(^{μ(m)}(nan⁻¹)(na⁻¹n⁻¹))}n')` and
/// `h(m, ^{ν(n)}(^{μ(c)}(an'a⁻¹)(an'⁻¹a⁻¹)))` over all
/// `(m,n), (c,a), (m',n')`, compared with `P₃'` built from the lifting.
pub fn p3_prime_closed_forms(s: &CrossedSquare) -> ClosedFormComparison {
    let (l, m, n) = (s.l(), s.m(), s.n());
    let mut closed = Vec::new();
    for mm in m.elements() {
        for nn in n.elements() {
            for c in m.elements() {
                for a in n.elements() {
                    let nan = n.product([nn, a, n.inv(nn)]);
                    let first = m.mul(s.n_on_m(nan, mm), m.inv(mm));
                    let tail = n.mul(s.m_on_n(mm, nan), n.product([nn, n.inv(a), n.inv(nn)]));
                    for n2 in n.elements() {
                        closed.push(s.h(first, s.act_n.act(s.nu.apply(tail), n2)));
                        let inner = n.mul(
                            s.m_on_n(c, n.product([a, n2, n.inv(a)])),
                            n.product([a, n.inv(n2), n.inv(a)]),
                        );
                        closed.push(s.h(mm, s.act_n.act(s.nu.apply(nn), inner)));
                    }
                }
            }
        }
    }
    closed.sort_unstable();
    closed.dedup();
    let t = two_crossed_from_square(s);
    let tm = t.m();
    let mut brackets = Vec::new();
    for x in tm.elements() {
        for y in tm.elements() {
            brackets.push(t.peiffer(x, y));
        }
    }
    brackets.sort_unstable();
    brackets.dedup();
    let mut gens = Vec::new();
    for &b in &brackets {
        for z in tm.elements() {
            gens.push(t.lift(b, z));
            gens.push(t.lift(z, b));
        }
    }
    ClosedFormComparison {
        closed_form: normal_closure(l, &closed),
        composite: normal_closure(l, &gens),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::crossed::{check_quadratic, check_two_crossed};

    #[test]
    fn trivial_square_cone() {
        let t = two_crossed_from_square(&corpus::square_trivial_c2());
        assert_eq!((t.l().order(), t.m().order(), t.n().order()), (1, 1, 2));
        assert!(check_two_crossed(&t).is_ok());
    }

    #[test]
    fn a3_s3_cone() {
        let t = two_crossed_from_square(&corpus::square_a3_s3());
        assert_eq!((t.l().order(), t.m().order(), t.n().order()), (3, 9, 6));
        let r = check_two_crossed(&t);
        assert!(r.is_ok(), "{r}");
    }

    #[test]
    fn c4_c2_cone_has_trivial_lifting() {
        let t = two_crossed_from_square(&corpus::square_c4_c2());
        assert_eq!((t.l().order(), t.m().order()), (1, 4));
        assert!(t.lifting_table().iter().flatten().all(|&v| v == 0));
        assert!(check_two_crossed(&t).is_ok());
    }

    #[test]
    fn codiagonal_path_matches() {
        for (name, s) in corpus::squares() {
            let direct = two_crossed_from_square(&s);
            let via = two_crossed_from_square_via_codiagonal(&s).unwrap();
            assert_eq!(via.d2, direct.d2, "{name} ∂₂");
            assert_eq!(via.d1, direct.d1, "{name} ∂₁");
            assert_eq!(via.act_m, direct.act_m, "{name} action on M ⋊ N");
            assert_eq!(via.act_l, direct.act_l, "{name} action on L");
            assert_eq!(via.lifting_table(), direct.lifting_table(), "{name} lifting");
        }
    }

    #[test]
    fn closed_form_peiffer() {
        for (name, s) in corpus::squares() {
            let t = two_crossed_from_square(&s);
            let sd = mapping_cone_group(&s);
            for x in t.m().elements() {
                for y in t.m().elements() {
                    let v = mapping_cone_peiffer_commutator(&s, x, y);
                    assert_eq!(v, t.peiffer(x, y), "{name} at ({x},{y})");
                    // c does not matter
                    let (_, a) = sd.split(y);
                    for c in s.m().elements() {
                        assert_eq!(mapping_cone_peiffer_commutator(&s, x, sd.pair(c, a)), v);
                    }
                }
            }
        }
    }

    #[test]
    fn quadratic_from_squares() {
        for (name, s) in corpus::squares() {
            let q = quadratic_from_square(&s).unwrap();
            let r = check_quadratic(&q);
            assert!(r.is_ok(), "{name}: {r}");
        }
        let q = quadratic_from_square(&corpus::square_c4_c2()).unwrap();
        assert_eq!(q.l().order(), 1);
        assert_eq!(q.m().order(), 4);
        assert!(q.boundary.is_surjective());
    }
}
