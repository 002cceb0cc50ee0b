//! Homotopy groups `π1, π2, π3` of every model.

use std::fmt;

use crate::crossed::{CrossedSquare, QuadraticModule, TwoCrossedModule};
use crate::error::{Error, Result};
use crate::functors::{p3_prime, quadratic_from_two_crossed, two_crossed_from_square};
use crate::group::{describe, image, is_isomorphic_bounded, kernel, quotient, Group, Hom, Subgroup};
use crate::report::Report;
use crate::simplicial::{moore_complex, TruncatedSimplicialGroup};

/// `(π1, π2, π3)`. `pi3_unquotiented` marks a depth-2 simplicial input where
/// `π3` is reported as `ker ∂2 ∩ NG2` with nothing divided out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopySignature {
    pub pi1: Group,
    pub pi2: Group,
    pub pi3: Group,
    pub pi3_unquotiented: bool,
}

impl HomotopySignature {
    pub fn groups(&self) -> [&Group; 3] {
        [&self.pi1, &self.pi2, &self.pi3]
    }

    /// Whether `π2` and `π3` are abelian. Recorded, never assumed.
    pub fn higher_abelian(&self) -> bool {
        self.pi2.is_abelian() && self.pi3.is_abelian()
    }
}

impl fmt::Display for HomotopySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            describe(&self.pi1),
            describe(&self.pi2),
            describe(&self.pi3)
        )
    }
}

/// `z / b` for subgroups `b ⊆ z` of a common group, with normality of `b`
/// in `z` verified.
fn homology(z: &Subgroup, b: &Subgroup, context: &str) -> Result<Group> {
    let (zg, _) = z.to_group();
    let mut inside = Vec::with_capacity(b.order());
    for &x in b.elements() {
        inside.push(z.index_of(x).ok_or_else(|| Error::NotNormalImage {
            context: format!("{context}: boundary {x} is not a cycle"),
            element: x,
            by: 0,
        })?);
    }
    let bs = Subgroup::new(&zg, &inside)?;
    if let Some((e, by)) = bs.normality_witness() {
        return Err(Error::NotNormalImage {
            context: context.to_string(),
            element: b.elements()[bs.index_of(e).expect("member")],
            by: z.elements()[by],
        });
    }
    Ok(quotient(&zg, &bs)?.group)
}

/// Homology of the Moore complex: `π1 = NG0/d1 NG1`,
/// `π2 = (ker d1 ∩ NG1)/d2 NG2`, `π3 = (ker d2 ∩ NG2)/d3 NG3`. Depth-2 input
/// reports `π3 = ker d2 ∩ NG2` with the flag set.
pub fn homotopy_simplicial(g: &TruncatedSimplicialGroup) -> Result<HomotopySignature> {
    g.require_depth(2)?;
    let m = moore_complex(g);
    let pi1 = homology(m.term(0), &m.boundary_image(1), "π1: d1 NG1 in NG0")?;
    let pi2 = homology(&m.cycles(1), &m.boundary_image(2), "π2: d2 NG2 in ker d1")?;
    let (pi3, flag) = if g.depth() >= 3 {
        (homology(&m.cycles(2), &m.boundary_image(3), "π3: d3 NG3 in ker d2")?, false)
    } else {
        (m.cycles(2).to_group().0, true)
    };
    Ok(HomotopySignature {
        pi1,
        pi2,
        pi3,
        pi3_unquotiented: flag,
    })
}

/// `π1 = C0/∂1 C1`, `π2 = ker ∂1/im ∂2`, `π3 = ker ∂2`.
pub fn homotopy_two_crossed(t: &TwoCrossedModule) -> Result<HomotopySignature> {
    complex_homotopy(&t.d2, &t.d1)
}

/// `π1 = N/∂M`, `π2 = ker ∂/im δ`, `π3 = ker δ`.
pub fn homotopy_quadratic(q: &QuadraticModule) -> Result<HomotopySignature> {
    complex_homotopy(&q.delta, &q.boundary)
}

/// Homology of the mapping cone `L -> M ⋊ N -> P`.
pub fn homotopy_square(s: &CrossedSquare) -> Result<HomotopySignature> {
    homotopy_two_crossed(&two_crossed_from_square(s))
}

fn complex_homotopy(top: &Hom, bottom: &Hom) -> Result<HomotopySignature> {
    let pi1 = homology(&Subgroup::whole(bottom.cod()), &image(bottom), "π1: image of ∂1")?;
    let pi2 = homology(&kernel(bottom), &image(top), "π2: image of ∂2 in ker ∂1")?;
    let pi3 = kernel(top).to_group().0;
    Ok(HomotopySignature {
        pi1,
        pi2,
        pi3,
        pi3_unquotiented: false,
    })
}

/// Componentwise isomorphism, each search bounded by `bound`.
pub fn signatures_isomorphic(
    a: &HomotopySignature,
    b: &HomotopySignature,
    bound: usize,
) -> Result<bool> {
    for (x, y) in a.groups().into_iter().zip(b.groups()) {
        if !is_isomorphic_bounded(x, y, bound)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The maps between `π3 = ker ∂2` of a 2-crossed module and `π3' = ker δ`
/// of its quadratic module: `β(x) = x P3'` and its inverse `α`. Axiom ids
/// `beta.injective`, `beta.onto`, `beta.hom`.
pub fn check_pi3_comparison(t: &TwoCrossedModule) -> Result<Report> {
    let q = quadratic_from_two_crossed(t)?;
    let lq = quotient(t.l(), &p3_prime(t))?;
    let k2 = kernel(&t.d2);
    let kd = kernel(&q.delta);
    let mut r = Report::new();
    let mut hit = vec![false; lq.group.order()];
    for &x in k2.elements() {
        let b = lq.project(x);
        r.check(kd.contains(b), "beta.onto", &[x]);
        r.check(!hit[b], "beta.injective", &[x]);
        hit[b] = true;
        for &y in k2.elements() {
            let lhs = lq.project(t.l().mul(x, y));
            r.check(lhs == lq.group.mul(b, lq.project(y)), "beta.hom", &[x, y]);
        }
    }
    for &y in kd.elements() {
        r.check(hit[y], "beta.onto", &[y]);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::group::builtin::{cyclic, symmetric};
    use crate::group::is_isomorphic;

    fn sig_orders(s: &HomotopySignature) -> [usize; 3] {
        [s.pi1.order(), s.pi2.order(), s.pi3.order()]
    }

    #[test]
    fn constant_group() {
        let g = TruncatedSimplicialGroup::constant(&symmetric(3), 3);
        let s = homotopy_simplicial(&g).unwrap();
        assert!(is_isomorphic(&s.pi1, &symmetric(3)).unwrap());
        assert_eq!(sig_orders(&s), [6, 1, 1]);
    }

    #[test]
    fn nerves() {
        let s = homotopy_simplicial(&corpus::nerve_a3_s3(3)).unwrap();
        assert!(is_isomorphic(&s.pi1, &cyclic(2)).unwrap());
        assert_eq!(sig_orders(&s), [2, 1, 1]);
        let s = homotopy_simplicial(&corpus::nerve_c4_c2(3)).unwrap();
        assert_eq!(sig_orders(&s), [1, 2, 1]);
        assert_eq!(s.to_string(), "(1, C2, 1)");
    }

    #[test]
    fn eilenberg_maclane() {
        let s = homotopy_simplicial(&corpus::eilenberg_maclane_c2_2()).unwrap();
        assert_eq!(s.to_string(), "(1, 1, C2)");
    }

    #[test]
    fn squares() {
        let s = homotopy_square(&corpus::square_a3_s3()).unwrap();
        assert_eq!(s.to_string(), "(C2, 1, 1)");
        let s = homotopy_square(&corpus::square_c4_c2()).unwrap();
        assert_eq!(s.to_string(), "(1, C2, 1)");
        let s = homotopy_square(&corpus::square_trivial_c2()).unwrap();
        assert_eq!(s.to_string(), "(C2, 1, 1)");
    }

    #[test]
    fn signature_comparison() {
        let a = homotopy_square(&corpus::square_a3_s3()).unwrap();
        let b = homotopy_square(&corpus::square_c4_c2()).unwrap();
        assert!(signatures_isomorphic(&a, &a, 64).unwrap());
        assert!(!signatures_isomorphic(&a, &b, 64).unwrap());
    }

    #[test]
    fn depth_two_flag() {
        let s = homotopy_simplicial(&corpus::nerve_a3_s3(2)).unwrap();
        assert!(s.pi3_unquotiented);
    }

    #[test]
    fn pi3_maps_are_isomorphisms() {
        for (name, s) in corpus::squares() {
            let r = check_pi3_comparison(&two_crossed_from_square(&s)).unwrap();
            assert!(r.is_ok(), "{name}: {r}");
        }
    }
}
