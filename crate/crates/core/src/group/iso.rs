use std::collections::BTreeMap;

use super::{abelianization, Group, Hom};
use crate::error::{Error, Result};

/// Isomorphism searches refuse groups above this order unless told otherwise.
pub const DEFAULT_ISO_BOUND: usize = 64;

/// Cheap isomorphism invariants, compared before any search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// `(element order, count)` pairs in increasing element order.
    pub order_histogram: Vec<(usize, usize)>,
    pub abelianization_order: usize,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let mut hist = BTreeMap::new();
    for &k in g.element_orders() {
        *hist.entry(k).or_insert(0) += 1;
    }
    Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        order_histogram: hist.into_iter().collect(),
        abelianization_order: abelianization(g).group.order(),
    }
}

pub fn is_isomorphic(a: &Group, b: &Group) -> Result<bool> {
    is_isomorphic_bounded(a, b, DEFAULT_ISO_BOUND)
}

pub fn is_isomorphic_bounded(a: &Group, b: &Group, bound: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, bound)?.is_some())
}

/// Searches for an isomorphism `a -> b` by assigning images to a generating
/// set of `a`, pruning on element orders and on consistency of the partial
/// map.
pub fn find_isomorphism(a: &Group, b: &Group, bound: usize) -> Result<Option<Hom>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    if a.order() > bound {
        return Err(Error::OrderTooLarge {
            order: a.order(),
            bound,
        });
    }
    if fingerprint(a) != fingerprint(b) {
        return Ok(None);
    }
    let gens = a.generators().to_vec();
    let mut search = Search {
        a,
        b,
        gens: &gens,
        image: vec![usize::MAX; a.order()],
        used: vec![false; b.order()],
    };
    search.image[0] = 0;
    search.used[0] = true;
    if search.extend(0) {
        let map = search.image.clone();
        Ok(Some(Hom::from_fn_unchecked(a, b, |x| map[x])))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    a: &'a Group,
    b: &'a Group,
    gens: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.gens.len() {
            return self.image.iter().all(|&y| y != usize::MAX);
        }
        let g = self.gens[depth];
        if self.image[g] != usize::MAX {
            // already reached from earlier generators
            return self.extend(depth + 1);
        }
        let want = self.a.element_order(g);
        for y in self.b.elements() {
            if self.used[y] || self.b.element_order(y) != want {
                continue;
            }
            let saved = (self.image.clone(), self.used.clone());
            if self.close(depth, y) && self.extend(depth + 1) {
                return true;
            }
            (self.image, self.used) = saved;
        }
        false
    }

    /// Sets `gens[depth] -> y` and propagates over the subgroup generated by
    /// `gens[..=depth]`, failing on any inconsistency.
    fn close(&mut self, depth: usize, y: usize) -> bool {
        let gens = &self.gens[..=depth];
        let targets: Vec<usize> = gens.iter().map(|&g| self.image_or(g, depth, y)).collect();
        let mut queue: Vec<usize> = (0..self.a.order())
            .filter(|&x| self.image[x] != usize::MAX)
            .collect();
        if !self.assign(gens[depth], y) {
            return false;
        }
        queue.push(gens[depth]);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (i, &g) in gens.iter().enumerate() {
                let z = self.a.mul(x, g);
                let fz = self.b.mul(self.image[x], targets[i]);
                if self.image[z] == usize::MAX {
                    if !self.assign(z, fz) {
                        return false;
                    }
                    queue.push(z);
                } else if self.image[z] != fz {
                    return false;
                }
            }
        }
        true
    }

    fn image_or(&self, g: usize, depth: usize, y: usize) -> usize {
        if g == self.gens[depth] {
            y
        } else {
            self.image[g]
        }
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.used[y] {
            return false;
        }
        self.image[x] = y;
        self.used[y] = true;
        true
    }
}

/// Human-readable structure: invariant factors for abelian groups of order
/// at most 16, otherwise order, abelian flag and element-order histogram.
pub fn describe(g: &Group) -> String {
    if g.order() == 1 {
        return "1".into();
    }
    if g.is_abelian() && g.order() <= 16 {
        if let Some(factors) = invariant_factors(g) {
            return factors
                .iter()
                .map(|d| format!("C{d}"))
                .collect::<Vec<_>>()
                .join("×");
        }
    }
    let fp = fingerprint(g);
    let hist = fp
        .order_histogram
        .iter()
        .map(|(k, c)| format!("{k}:{c}"))
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "order {}, {}, element orders [{hist}]",
        fp.order,
        if fp.abelian { "abelian" } else { "nonabelian" }
    )
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Invariant factors `d1 | d2 | ...` of an abelian group, matched through the
/// counts of elements whose order divides each divisor of `|G|`.
fn invariant_factors(g: &Group) -> Option<Vec<usize>> {
    let n = g.order();
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let counts: Vec<usize> = divisors
        .iter()
        .map(|&m| g.element_orders().iter().filter(|&&k| m % k == 0).count())
        .collect();
    let mut candidates = Vec::new();
    chains(n, 1, &mut Vec::new(), &mut candidates);
    candidates.into_iter().find(|fs| {
        divisors
            .iter()
            .zip(&counts)
            .all(|(&m, &c)| fs.iter().map(|&d| gcd(m, d)).product::<usize>() == c)
    })
}

/// All chains `d1 | d2 | ... | dk` with each `di > 1` and product `rest`.
fn chains(rest: usize, last: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 1 {
        out.push(cur.clone());
        return;
    }
    for d in 2..=rest {
        if rest % d == 0 && d % last == 0 {
            // remaining factors must be multiples of d
            let r = rest / d;
            if r == 1 || r % d == 0 {
                cur.push(d);
                chains(r, d, cur, out);
                cur.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::{cyclic, dihedral, direct_product, klein4, quaternion8, symmetric};

    #[test]
    fn c4_vs_klein() {
        assert!(!is_isomorphic(&cyclic(4), &klein4()).unwrap());
    }

    #[test]
    fn s3_vs_c6() {
        assert!(!is_isomorphic(&symmetric(3), &cyclic(6)).unwrap());
    }

    #[test]
    fn c6_vs_c2xc3() {
        let prod = direct_product(&cyclic(2), &cyclic(3));
        let iso = find_isomorphism(&cyclic(6), &prod, 64).unwrap().unwrap();
        assert!(iso.first_violation().is_none());
        assert!(iso.is_bijective());
    }

    #[test]
    fn q8_vs_d8_same_order_histogram_differs() {
        assert!(!is_isomorphic(&quaternion8(), &dihedral(4)).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        let big = cyclic(65);
        assert_eq!(
            is_isomorphic(&big, &big).unwrap_err(),
            Error::OrderTooLarge {
                order: 65,
                bound: 64
            }
        );
        assert!(is_isomorphic_bounded(&big, &big, 100).unwrap());
    }

    #[test]
    fn descriptions() {
        assert_eq!(describe(&Group::trivial()), "1");
        assert_eq!(describe(&cyclic(2)), "C2");
        assert_eq!(describe(&klein4()), "C2×C2");
        assert_eq!(describe(&direct_product(&cyclic(2), &cyclic(6))), "C2×C6");
        assert_eq!(describe(&cyclic(12)), "C12");
        assert!(describe(&symmetric(3)).starts_with("order 6, nonabelian"));
    }
}
