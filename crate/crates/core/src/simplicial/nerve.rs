use super::{TruncatedSimplicialGroup, MAX_DEPTH};
use crate::crossed::{crossed_module_from_cat1, Cat1Group, CrossedModule};
use crate::error::{Error, Result};
use crate::group::{semidirect, Hom};

/// Index arithmetic for nerve levels `C ⋊ (C ⋊ (... ⋊ B))`.
///
/// A level-`n` element `(c_n, ..., c_1, b)` is the path of arrows
/// `b -> ∂c_1 b -> ∂c_2 ∂c_1 b -> ...` and has index
/// `c_n + |C| (c_{n-1} + |C| (... + |C| b))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NerveCoords {
    pub c: usize,
    pub b: usize,
}

impl NerveCoords {
    /// `cs[k]` is `c_{k+1}`.
    pub fn encode(&self, cs: &[usize], b: usize) -> usize {
        cs.iter().fold(b, |acc, &c| c + self.c * acc)
    }

    pub fn decode(&self, n: usize, mut x: usize) -> (Vec<usize>, usize) {
        let mut cs = vec![0; n];
        for k in (0..n).rev() {
            cs[k] = x % self.c;
            x /= self.c;
        }
        (cs, x)
    }
}

/// Nerve of the internal category of a crossed module, up to `depth`.
pub fn nerve_crossed_module(x: &CrossedModule, depth: usize) -> Result<TruncatedSimplicialGroup> {
    if depth > MAX_DEPTH {
        return Err(Error::InvalidStructure(format!(
            "depth {depth} exceeds {MAX_DEPTH}"
        )));
    }
    let (c, b) = (x.m(), x.n());
    let co = NerveCoords {
        c: c.order(),
        b: b.order(),
    };
    let mut levels = vec![b.clone()];
    // target of a path, as a hom to B
    let mut target = Hom::identity(b);
    for _ in 1..=depth {
        let prev = levels.last().expect("level 0").clone();
        let act = x.act.pullback(&target);
        let sd = semidirect(&act);
        let lvl = sd.result.clone();
        let t = target.clone();
        target = Hom::from_fn_unchecked(&lvl, b, |z| {
            let (cn, y) = sd.split(z);
            b.mul(x.boundary.apply(cn), t.apply(y))
        });
        debug_assert_eq!(prev.order() * co.c, lvl.order());
        levels.push(lvl);
    }
    let mut faces = vec![Vec::new()];
    for n in 1..=depth {
        let (src, dst) = (&levels[n], &levels[n - 1]);
        let mut ds = Vec::with_capacity(n + 1);
        for i in 0..=n {
            ds.push(Hom::from_fn_unchecked(src, dst, |z| {
                let (mut cs, mut bb) = co.decode(n, z);
                if i == 0 {
                    bb = b.mul(x.boundary.apply(cs[0]), bb);
                    cs.remove(0);
                } else if i == n {
                    cs.pop();
                } else {
                    let merged = c.mul(cs[i], cs[i - 1]);
                    cs[i - 1] = merged;
                    cs.remove(i);
                }
                co.encode(&cs, bb)
            }));
        }
        faces.push(ds);
    }
    let mut degens = Vec::new();
    for n in 0..depth {
        let (src, dst) = (&levels[n], &levels[n + 1]);
        let ss = (0..=n)
            .map(|i| {
                Hom::from_fn_unchecked(src, dst, |z| {
                    let (mut cs, bb) = co.decode(n, z);
                    cs.insert(i, 0);
                    co.encode(&cs, bb)
                })
            })
            .collect();
        degens.push(ss);
    }
    Ok(TruncatedSimplicialGroup::from_parts(levels, faces, degens))
}

/// Nerve of a cat¹-group, through its crossed module `ker s -> im s`.
pub fn nerve_cat1(k: &Cat1Group, depth: usize) -> Result<TruncatedSimplicialGroup> {
    nerve_crossed_module(&crossed_module_from_cat1(k)?, depth)
}
