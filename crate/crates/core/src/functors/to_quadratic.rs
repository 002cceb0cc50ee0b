use crate::crossed::{nil2_quotient, peiffer_subgroups, PreCrossedModule, QuadraticModule, TwoCrossedModule};
use crate::error::{Error, Result};
use crate::group::{normal_closure, quotient, Action, Hom, Quotient, Subgroup};

/// `L/P₃' --δ--> M/P₃ --∂--> N` with `ω(x̄ ⊗ ȳ) = q₂{x, y}`.
///
/// `P₃` is the normal closure of `⟨⟨x,y⟩,z⟩` and `⟨x,⟨y,z⟩⟩`, `P₃'` that of
/// `{⟨x,y⟩,z}` and `{x,⟨y,z⟩}`. Fails with `OmegaNotWellDefined` when two
/// representatives of the same pair of classes in `C` give different values.
pub fn quadratic_from_two_crossed(t: &TwoCrossedModule) -> Result<QuadraticModule> {
    let m = t.m();
    let (_, p3) = peiffer_subgroups(&t.bottom());
    let mq = quotient(m, &p3)?;
    let lq = quotient(t.l(), &p3_prime(t))?;
    build(t, &mq, &lq)
}

/// `P₃'`: the normal closure in `L` of `{⟨x,y⟩,z}` and `{x,⟨y,z⟩}`.
pub(crate) fn p3_prime(t: &TwoCrossedModule) -> Subgroup {
    let (l, m) = (t.l(), t.m());
    let mut brackets: Vec<usize> = Vec::new();
    for x in m.elements() {
        for y in m.elements() {
            brackets.push(t.peiffer(x, y));
        }
    }
    brackets.sort_unstable();
    brackets.dedup();
    let mut gens = Vec::new();
    for &b in &brackets {
        for z in m.elements() {
            gens.push(t.lift(b, z));
            gens.push(t.lift(z, b));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    normal_closure(l, &gens)
}

fn build(t: &TwoCrossedModule, mq: &Quotient, lq: &Quotient) -> Result<QuadraticModule> {
    let m = t.m();
    let n = t.n();
    let delta = Hom::from_fn_unchecked(&lq.group, &mq.group, |x| {
        mq.project(t.d2.apply(lq.lift(x)))
    });
    let boundary = Hom::from_fn_unchecked(&mq.group, n, |x| t.d1.apply(mq.lift(x)));
    let act_m = Action::from_fn_unchecked(n, &mq.group, |g, x| {
        mq.project(t.act_m.act(g, mq.lift(x)))
    });
    let act_l = Action::from_fn_unchecked(n, &lq.group, |g, x| {
        lq.project(t.act_l.act(g, lq.lift(x)))
    });

    let c = nil2_quotient(&PreCrossedModule {
        boundary: boundary.clone(),
        act: act_m.clone(),
    });
    let k = c.group.order();
    let class = |x: usize| c.project(mq.project(x));
    let mut seen: Vec<Option<(usize, usize, usize)>> = vec![None; k * k];
    for x in m.elements() {
        for y in m.elements() {
            let v = lq.project(t.lift(x, y));
            let slot = &mut seen[class(x) * k + class(y)];
            match *slot {
                None => *slot = Some((v, x, y)),
                Some((w, x0, y0)) if w != v => {
                    return Err(Error::OmegaNotWellDefined(x0, y0, x, y));
                }
                Some(_) => {}
            }
        }
    }
    Ok(QuadraticModule::from_lift(
        delta,
        boundary,
        act_m,
        act_l,
        |a, b| lq.project(t.lift(mq.lift(a), mq.lift(b))),
    ))
}
