use super::{quadratic_from_two_crossed, six_term_lifting};
use crate::crossed::{CrossedSquare, QuadraticModule, TwoCrossedModule};
use crate::error::{Error, Result};
use crate::group::{intersect, kernel, quotient, subgroup_generated, Action, Hom, Subgroup};
use crate::report::Report;
use crate::simplicial::{
    degenerate_subgroup, moore_complex, peiffer_pairing_raw, PairingIndex,
    TruncatedSimplicialGroup,
};

/// `d3(H)` for a subgroup `H` of `G3`.
fn boundary3(g: &TruncatedSimplicialGroup, h: &Subgroup) -> Subgroup {
    let imgs: Vec<usize> = h.elements().iter().map(|&x| g.face(3, 3, x)).collect();
    subgroup_generated(g.level(2), &imgs)
}

/// `NG2 / top --d2--> NG1 --d1--> G0` with `G0` acting by conjugation with
/// `s0` and `s1 s0`, and the six-term lifting.
fn two_crossed_with_top(g: &TruncatedSimplicialGroup, top: &Subgroup) -> Result<TwoCrossedModule> {
    let moore = moore_complex(g);
    let (ng1, ng2) = (moore.term(1), moore.term(2));
    let (ng2_group, _) = ng2.to_group();
    let inside: Vec<usize> = top
        .elements()
        .iter()
        .map(|&x| ng2.index_of(x).ok_or_else(|| Error::InvalidStructure("divisor leaves NG2".into())))
        .collect::<Result<_>>()?;
    let lq = quotient(&ng2_group, &Subgroup::new(&ng2_group, &inside)?)?;
    let (m, _) = ng1.to_group();
    let n = g.level(0);
    let (g1, g2) = (g.level(1), g.level(2));
    let in_ng1 = |x: usize| ng1.index_of(x).expect("d2 maps NG2 into NG1");
    let rep = |x: usize| ng2.elements()[lq.lift(x)];
    let d2 = Hom::from_fn_unchecked(&lq.group, &m, |x| in_ng1(g.face(2, 2, rep(x))));
    let d1 = Hom::from_fn_unchecked(&m, n, |x| g.face(1, 1, ng1.elements()[x]));
    let act_m = Action::from_fn_unchecked(n, &m, |p, x| {
        in_ng1(g1.conj(g.degen(0, 0, p), ng1.elements()[x]))
    });
    let act_l = Action::from_fn_unchecked(n, &lq.group, |p, x| {
        let by = g.degen(1, 1, g.degen(0, 0, p));
        lq.project(ng2.index_of(g2.conj(by, rep(x))).expect("NG2 is normal in G2"))
    });
    let mut lifting = Vec::with_capacity(m.order());
    for &x in ng1.elements() {
        let mut row = Vec::with_capacity(m.order());
        for &y in ng1.elements() {
            let v = six_term_lifting(g, x, y);
            let idx = ng2.index_of(v).ok_or_else(|| {
                Error::InvalidStructure(format!("lifting of ({x}, {y}) leaves NG2"))
            })?;
            row.push(lq.project(idx));
        }
        lifting.push(row);
    }
    Ok(TwoCrossedModule::from_fn(d2, d1, act_m, act_l, |x, y| lifting[x][y]))
}

/// `NG2/∂3(NG3 ∩ D3) -> NG1 -> NG0` with
/// `{x, y} = s0x s1y s0x⁻¹ s1x s1y⁻¹ s1x⁻¹`.
pub fn two_crossed_from_simplicial(g: &TruncatedSimplicialGroup) -> Result<TwoCrossedModule> {
    g.require_depth(3)?;
    let moore = moore_complex(g);
    let nd = intersect(moore.term(3), &degenerate_subgroup(g, 3))?;
    two_crossed_with_top(g, &boundary3(g, &nd))
}

/// The same construction on a depth-2 group, with `NG2` left unquotiented.
pub fn two_crossed_from_simplicial_depth2(g: &TruncatedSimplicialGroup) -> Result<TwoCrossedModule> {
    g.require_depth(2)?;
    two_crossed_with_top(g, &Subgroup::trivial(g.level(2)))
}

/// `M = NG1/P3`, `L = (NG2/∂3 NG3)/P3'`, `ω = q2(six-term lifting)`.
/// Requires `G3 = D3`.
pub fn quadratic_from_simplicial(g: &TruncatedSimplicialGroup) -> Result<QuadraticModule> {
    g.require_depth(3)?;
    let d3 = degenerate_subgroup(g, 3);
    if !d3.is_whole() {
        return Err(Error::HypothesisG3NotDegenerate {
            degenerate: d3.order(),
            order: g.level(3).order(),
        });
    }
    let moore = moore_complex(g);
    let t = two_crossed_with_top(g, &moore.boundary_image(3))?;
    quadratic_from_two_crossed(&t)
}

/// `M(G, 2)`: corners `NG2/∂3 NG3`, `NG1 = ker d0`, `ker d1`, `G1`, with
/// `λ = λ' = d2`, inclusions below, conjugation actions and
/// `h(x, y) = [s1 x, s1 y · s0 y⁻¹]`.
pub fn square_from_simplicial(g: &TruncatedSimplicialGroup) -> Result<CrossedSquare> {
    g.require_depth(3)?;
    let moore = moore_complex(g);
    let ng2 = moore.term(2);
    let (ng2_group, _) = ng2.to_group();
    let div: Vec<usize> = moore
        .boundary_image(3)
        .elements()
        .iter()
        .map(|&x| ng2.index_of(x).expect("∂3 NG3 lies in NG2"))
        .collect();
    let lq = quotient(&ng2_group, &Subgroup::new(&ng2_group, &div)?)?;
    let (g1, g2) = (g.level(1), g.level(2));
    let msub = moore.term(1).clone();
    let nsub = kernel(g.d(1, 1));
    let (m, _) = msub.to_group();
    let (n, _) = nsub.to_group();
    let rep = |x: usize| ng2.elements()[lq.lift(x)];
    let lam = Hom::from_fn_unchecked(&lq.group, &m, |x| {
        msub.index_of(g.face(2, 2, rep(x))).expect("d2 NG2 ⊂ ker d0")
    });
    let lamp = Hom::from_fn_unchecked(&lq.group, &n, |x| {
        nsub.index_of(g.face(2, 2, rep(x))).expect("d2 NG2 ⊂ ker d1")
    });
    let mu = Hom::from_fn_unchecked(&m, g1, |x| msub.elements()[x]);
    let nu = Hom::from_fn_unchecked(&n, g1, |x| nsub.elements()[x]);
    let act_l = Action::from_fn_unchecked(g1, &lq.group, |p, x| {
        let c = g2.conj(g.degen(1, 1, p), rep(x));
        lq.project(ng2.index_of(c).expect("NG2 is stable under s1(G1)"))
    });
    let act_m = Action::from_fn_unchecked(g1, &m, |p, x| {
        msub.index_of(g1.conj(p, msub.elements()[x])).expect("normal")
    });
    let act_n = Action::from_fn_unchecked(g1, &n, |p, x| {
        nsub.index_of(g1.conj(p, nsub.elements()[x])).expect("normal")
    });
    let mut h = Vec::with_capacity(m.order());
    for &x in msub.elements() {
        let mut row = Vec::with_capacity(n.order());
        for &y in nsub.elements() {
            let s1y = g.degen(1, 1, y);
            let s0y = g.degen(1, 0, y);
            let v = g2.commutator(g.degen(1, 1, x), g2.mul(s1y, g2.inv(s0y)));
            let idx = ng2.index_of(v).ok_or_else(|| {
                Error::InvalidStructure(format!("h({x}, {y}) leaves NG2"))
            })?;
            row.push(lq.project(idx));
        }
        h.push(row);
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

/// The three `d3 ∘ F` identities behind the quadratic module of a
/// simplicial group, for `x` in `NG1` and `a, b` in `NG2`:
///
/// ```text
/// d3 F(2,0)(1)(x, a) = [s0x, s1d2a][s1d2a, s1x][s1x, a][a, s0x]
/// d3 F(0)(2,1)(a, x) = [s0d2a, s1x][s1x, s1d2a][a, s1x]
/// d3 F(0)(1)(a, b)   = [s0d2a, s1d2b][s1d2b, s1d2a][a, b]
/// ```
///
/// Axiom ids `F(2,0)(1)`, `F(0)(2,1)`, `F(0)(1)`; each value is also
/// checked to lie in `∂3(NG3 ∩ D3)` under ids with a `.image` suffix.
pub fn check_pairing_congruences(g: &TruncatedSimplicialGroup) -> Result<Report> {
    g.require_depth(3)?;
    let moore = moore_complex(g);
    let nd = intersect(moore.term(3), &degenerate_subgroup(g, 3))?;
    let image = boundary3(g, &nd);
    let g2 = g.level(2);
    let s0 = |z: usize| g.degen(1, 0, z);
    let s1 = |z: usize| g.degen(1, 1, z);
    let d2 = |z: usize| g.face(2, 2, z);
    let c = |a: usize, b: usize| g2.commutator(a, b);
    let d3f = |alpha: &[usize], beta: &[usize], x: usize, y: usize| {
        let idx = PairingIndex::new(3, alpha, beta).expect("supported");
        g.face(3, 3, peiffer_pairing_raw(g, &idx, x, y))
    };
    let mut r = Report::new();
    let (ng1, ng2) = (moore.term(1).elements(), moore.term(2).elements());
    for &x in ng1 {
        for &a in ng2 {
            let lhs = d3f(&[2, 0], &[1], x, a);
            let rhs = g2.product([c(s0(x), s1(d2(a))), c(s1(d2(a)), s1(x)), c(s1(x), a), c(a, s0(x))]);
            r.check(lhs == rhs, "F(2,0)(1)", &[x, a]);
            r.check(image.contains(lhs), "F(2,0)(1).image", &[x, a]);
            let lhs = d3f(&[0], &[2, 1], a, x);
            let rhs = g2.product([c(s0(d2(a)), s1(x)), c(s1(x), s1(d2(a))), c(a, s1(x))]);
            r.check(lhs == rhs, "F(0)(2,1)", &[a, x]);
            r.check(image.contains(lhs), "F(0)(2,1).image", &[a, x]);
        }
    }
    for &a in ng2 {
        for &b in ng2 {
            let lhs = d3f(&[0], &[1], a, b);
            let rhs = g2.product([c(s0(d2(a)), s1(d2(b))), c(s1(d2(b)), s1(d2(a))), c(a, b)]);
            r.check(lhs == rhs, "F(0)(1)", &[a, b]);
            r.check(image.contains(lhs), "F(0)(1).image", &[a, b]);
        }
    }
    Ok(r)
}
