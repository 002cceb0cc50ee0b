use super::{Action, Group, Hom};

/// `K ⋊ A` for an action of `A` on `K`, elements written `(k, a)`.
///
/// The pair `(k, a)` has index `k + |K| * a`, so `(0, 0)` is the identity and
/// iterated products nest to the right: `K ⋊ (K' ⋊ A)` has elements
/// `(k, (k', a))`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub result: Group,
    pub kernel_injection: Hom,
    pub acting_injection: Hom,
    pub projection: Hom,
    pub action: Action,
}

/// Builds `K ⋊ A` with `(k1, a1)(k2, a2) = (k1 · ^{a1}k2, a1 a2)`.
pub fn semidirect(act: &Action) -> SemidirectProduct {
    let (k, a) = (act.target(), act.actor());
    let (nk, na) = (k.order(), a.order());
    let n = nk * na;
    let mut mul = vec![0u32; n * n];
    for a1 in 0..na {
        for k1 in 0..nk {
            let x = k1 + nk * a1;
            for a2 in 0..na {
                let a12 = a.mul(a1, a2);
                for k2 in 0..nk {
                    let kk = k.mul(k1, act.act(a1, k2));
                    mul[x * n + k2 + nk * a2] = (kk + nk * a12) as u32;
                }
            }
        }
    }
    let result = Group::from_flat_unchecked(n, mul);
    let kernel_injection = Hom::from_fn_unchecked(k, &result, |x| x);
    let acting_injection = Hom::from_fn_unchecked(a, &result, |x| nk * x);
    let projection = Hom::from_fn_unchecked(&result, a, |x| x / nk);
    SemidirectProduct {
        result,
        kernel_injection,
        acting_injection,
        projection,
        action: act.clone(),
    }
}

impl SemidirectProduct {
    pub fn kernel(&self) -> &Group {
        self.action.target()
    }

    pub fn actor(&self) -> &Group {
        self.action.actor()
    }

    #[inline]
    pub fn pair(&self, k: usize, a: usize) -> usize {
        k + self.kernel().order() * a
    }

    #[inline]
    pub fn split(&self, x: usize) -> (usize, usize) {
        let nk = self.kernel().order();
        (x % nk, x / nk)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::{cyclic, symmetric};
    use crate::group::is_isomorphic;

    #[test]
    fn inversion_gives_s3() {
        let (c2, c3) = (cyclic(2), cyclic(3));
        let act = Action::from_fn(&c2, &c3, |g, m| if g == 0 { m } else { c3.inv(m) }).unwrap();
        let sd = semidirect(&act);
        assert_eq!(sd.result.order(), 6);
        assert!(is_isomorphic(&sd.result, &symmetric(3)).unwrap());
    }

    #[test]
    fn trivial_action_gives_direct_product() {
        let sd = semidirect(&Action::trivial(&cyclic(2), &cyclic(3)));
        assert!(is_isomorphic(&sd.result, &cyclic(6)).unwrap());
    }

    #[test]
    fn trivial_actor() {
        let s3 = symmetric(3);
        let sd = semidirect(&Action::trivial(&Group::trivial(), &s3));
        assert!(is_isomorphic(&sd.result, &s3).unwrap());
    }

    #[test]
    fn product_formula_reproduces_table() {
        let (c2, c3) = (cyclic(2), cyclic(3));
        let act = Action::from_fn(&c2, &c3, |g, m| if g == 0 { m } else { c3.inv(m) }).unwrap();
        let sd = semidirect(&act);
        for x in sd.result.elements() {
            for y in sd.result.elements() {
                let ((k1, a1), (k2, a2)) = (sd.split(x), sd.split(y));
                let expect = sd.pair(c3.mul(k1, act.act(a1, k2)), c2.mul(a1, a2));
                assert_eq!(sd.result.mul(x, y), expect);
            }
        }
        assert!(sd.kernel_injection.first_violation().is_none());
        assert!(sd.acting_injection.first_violation().is_none());
        assert!(sd.projection.first_violation().is_none());
    }
}
