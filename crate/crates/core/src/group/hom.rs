use std::fmt;

use super::Group;
use crate::error::{Error, Result};

/// A group homomorphism stored as an image table.
#[derive(Clone, PartialEq, Eq)]
pub struct Hom {
    dom: Group,
    cod: Group,
    map: Vec<u32>,
}

/// Validates `map` as a homomorphism `dom -> cod`.
pub fn make_hom(dom: &Group, cod: &Group, map: Vec<usize>) -> Result<Hom> {
    if map.len() != dom.order() {
        return Err(Error::MapLength {
            expected: dom.order(),
            got: map.len(),
        });
    }
    if let Some(&bad) = map.iter().find(|&&y| y >= cod.order()) {
        return Err(Error::ElementOutOfRange(bad));
    }
    let hom = Hom {
        dom: dom.clone(),
        cod: cod.clone(),
        map: map.into_iter().map(|y| y as u32).collect(),
    };
    if let Some((x, y)) = hom.first_violation() {
        return Err(Error::NotHomomorphism(x, y));
    }
    Ok(hom)
}

impl Hom {
    pub fn new(dom: &Group, cod: &Group, map: Vec<usize>) -> Result<Hom> {
        make_hom(dom, cod, map)
    }

    /// Builds a homomorphism from a function, validating it.
    pub fn from_fn(dom: &Group, cod: &Group, f: impl Fn(usize) -> usize) -> Result<Hom> {
        make_hom(dom, cod, dom.elements().map(f).collect())
    }

    pub(crate) fn from_fn_unchecked(dom: &Group, cod: &Group, f: impl Fn(usize) -> usize) -> Hom {
        Hom {
            dom: dom.clone(),
            cod: cod.clone(),
            map: dom.elements().map(|x| f(x) as u32).collect(),
        }
    }

    pub fn identity(g: &Group) -> Hom {
        Hom::from_fn_unchecked(g, g, |x| x)
    }

    pub fn trivial(dom: &Group, cod: &Group) -> Hom {
        Hom::from_fn_unchecked(dom, cod, |_| 0)
    }

    pub fn dom(&self) -> &Group {
        &self.dom
    }

    pub fn cod(&self) -> &Group {
        &self.cod
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&y| y as usize).collect()
    }

    /// `then ∘ self`
    pub fn then(&self, then: &Hom) -> Hom {
        debug_assert_eq!(self.cod.order(), then.dom.order());
        Hom::from_fn_unchecked(&self.dom, &then.cod, |x| then.apply(self.apply(x)))
    }

    pub fn is_trivial(&self) -> bool {
        self.map.iter().all(|&y| y == 0)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        for &y in &self.map {
            seen[y as usize] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.order() == self.cod.order() && self.is_injective()
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Option<Hom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0usize; self.cod.order()];
        for x in self.dom.elements() {
            inv[self.apply(x)] = x;
        }
        Some(Hom::from_fn_unchecked(&self.cod, &self.dom, |y| inv[y]))
    }

    /// First pair `(x, y)` with `f(xy) != f(x) f(y)`.
    pub fn first_violation(&self) -> Option<(usize, usize)> {
        if self.map.first().is_some_and(|&e| e != 0) {
            return Some((0, 0));
        }
        for x in self.dom.elements() {
            let fx = self.apply(x);
            for y in self.dom.elements() {
                if self.apply(self.dom.mul(x, y)) != self.cod.mul(fx, self.apply(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom({:?} -> {:?}, {:?})", self.dom, self.cod, self.map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::{cyclic, symmetric};

    #[test]
    fn identity_on_s3() {
        let s3 = symmetric(3);
        assert!(make_hom(&s3, &s3, s3.elements().collect()).is_ok());
    }

    #[test]
    fn sign_map() {
        let s3 = symmetric(3);
        let c2 = cyclic(2);
        let sign = crate::group::builtin::sign_map(3);
        let h = make_hom(&s3, &c2, sign).unwrap();
        // brute-force confirmation over all 36 pairs
        for x in s3.elements() {
            for y in s3.elements() {
                assert_eq!(h.apply(s3.mul(x, y)), c2.mul(h.apply(x), h.apply(y)));
            }
        }
    }

    #[test]
    fn broken_map_names_pair() {
        // relabeled C4: 0, a, a^3, a^2 so cubing looks innocent but is not additive
        let c4 = cyclic(4);
        // send 1 -> 2, 2 -> 3, 3 -> 1: not a homomorphism
        let err = make_hom(&c4, &c4, vec![0, 2, 3, 1]).unwrap_err();
        let Error::NotHomomorphism(x, y) = err else {
            panic!("wrong error {err:?}")
        };
        let f = [0usize, 2, 3, 1];
        assert_ne!(f[c4.mul(x, y)], c4.mul(f[x], f[y]));
    }

    #[test]
    fn length_mismatch() {
        let c2 = cyclic(2);
        assert!(matches!(
            make_hom(&c2, &c2, vec![0]).unwrap_err(),
            Error::MapLength { .. }
        ));
    }
}
