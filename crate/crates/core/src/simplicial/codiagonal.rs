use super::bisimplicial::{binerve_cells, Binerve};
use super::{check_simplicial, TruncatedBisimplicialGroup, TruncatedSimplicialGroup};
use crate::crossed::{cat2_from_crossed_square, CrossedSquare, SquareCoords};
use crate::error::{Error, Result};
use crate::group::tuple::TupleGroup;
use crate::group::{semidirect, Action, Group, Hom, SemidirectProduct};
use crate::report::Report;

/// Codiagonal levels above this order are refused; their tables would not
/// fit comfortably in memory.
pub const CODIAGONAL_ORDER_BOUND: usize = 4096;

type Comps = [u32; 3];

/// `∇` up to level 2 with the components `(x_0, ..., x_n)`, `x_p` in
/// `G_{p,n-p}`, of every element.
#[derive(Clone, Debug)]
pub struct Codiagonal {
    pub simplicial: TruncatedSimplicialGroup,
    levels: Vec<TupleGroup<Comps>>,
}

impl Codiagonal {
    pub fn components(&self, n: usize, x: usize) -> &[u32] {
        &self.levels[n].elems[x][..=n]
    }

    pub fn index_of(&self, n: usize, comps: &[u32]) -> Option<usize> {
        let mut key = [0u32; 3];
        key[..comps.len()].copy_from_slice(comps);
        self.levels[n].index.get(&key).copied()
    }
}

pub fn codiagonal(b: &TruncatedBisimplicialGroup) -> Result<TruncatedSimplicialGroup> {
    Ok(codiagonal_with_components(b)?.simplicial)
}

/// Enumerates `∇_n` for `n <= 2` through the matching conditions
/// `d_0^v x_p = d_{p+1}^h x_{p+1}`, with faces
///
/// ```text
/// (D_j x)_k = d_{j-k}^v x_k   (k < j)      (S_j x)_k = s_{j-k}^v x_k   (k <= j)
///           = d_j^h x_{k+1}   (k >= j)               = s_j^h x_{k-1}   (k > j)
/// ```
pub fn codiagonal_with_components(b: &TruncatedBisimplicialGroup) -> Result<Codiagonal> {
    if b.depth() < 2 {
        return Err(Error::DepthTooShallow {
            need: 2,
            have: b.depth(),
        });
    }
    let mut levels: Vec<TupleGroup<Comps>> = Vec::new();
    for n in 0..=2 {
        let elems = matching_tuples(b, n)?;
        if elems.is_empty() {
            return Err(Error::MatchingConditionEmpty(n));
        }
        let tg = TupleGroup::new(elems, &[0; 3], |x, y| {
            let mut z = [0u32; 3];
            for p in 0..=n {
                z[p] = b.group(p, n - p).mul(x[p] as usize, y[p] as usize) as u32;
            }
            z
        });
        levels.push(tg);
    }
    let lookup = |n: usize, key: Comps| -> Result<usize> {
        levels[n]
            .index
            .get(&key)
            .copied()
            .ok_or_else(|| Error::InvalidStructure(format!("operator leaves ∇_{n}")))
    };
    let build = |from: usize, to: usize, f: &dyn Fn(&Comps) -> Comps| -> Result<Hom> {
        let src = &levels[from];
        let map = src
            .elems
            .iter()
            .map(|x| lookup(to, f(x)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Hom::from_fn_unchecked(&src.group, &levels[to].group, |x| map[x]))
    };
    let mut faces = vec![Vec::new()];
    for n in 1..=2 {
        let mut ds = Vec::new();
        for j in 0..=n {
            ds.push(build(n, n - 1, &|x| {
                let mut z = [0u32; 3];
                for k in 0..n {
                    let v = if k < j {
                        b.dv(k, n - k, j - k).apply(x[k] as usize)
                    } else {
                        b.dh(k + 1, n - k - 1, j).apply(x[k + 1] as usize)
                    };
                    z[k] = v as u32;
                }
                z
            })?);
        }
        faces.push(ds);
    }
    let mut degens = Vec::new();
    for n in 0..2 {
        let mut ss = Vec::new();
        for j in 0..=n {
            ss.push(build(n, n + 1, &|x| {
                let mut z = [0u32; 3];
                for k in 0..=n + 1 {
                    let v = if k <= j {
                        b.sv(k, n - k, j - k).apply(x[k] as usize)
                    } else {
                        b.sh(k - 1, n + 1 - k, j).apply(x[k - 1] as usize)
                    };
                    z[k] = v as u32;
                }
                z
            })?);
        }
        degens.push(ss);
    }
    let groups = levels.iter().map(|t| t.group.clone()).collect();
    Ok(Codiagonal {
        simplicial: TruncatedSimplicialGroup::from_parts(groups, faces, degens),
        levels,
    })
}

/// Tuples `(x_0, ..., x_n)` satisfying the matching conditions, built from
/// `x_n` backwards through the fibres of the vertical `d_0`.
fn matching_tuples(b: &TruncatedBisimplicialGroup, n: usize) -> Result<Vec<Comps>> {
    let fibres: Vec<Vec<Vec<u32>>> = (0..n)
        .map(|p| {
            let g = b.group(p, n - p);
            let d0 = b.dv(p, n - p, 0);
            let mut f = vec![Vec::new(); d0.cod().order()];
            for x in g.elements() {
                f[d0.apply(x)].push(x as u32);
            }
            f
        })
        .collect();
    let mut out: Vec<Comps> = b
        .group(n, 0)
        .elements()
        .map(|x| {
            let mut c = [0u32; 3];
            c[n] = x as u32;
            c
        })
        .collect();
    for p in (0..n).rev() {
        let mut next = Vec::new();
        for c in &out {
            let y = b.dh(p + 1, n - p - 1, p + 1).apply(c[p + 1] as usize);
            for &x in &fibres[p][y] {
                let mut d = *c;
                d[p] = x;
                next.push(d);
            }
        }
        if next.len() > CODIAGONAL_ORDER_BOUND {
            return Err(Error::OrderTooLarge {
                order: next.len(),
                bound: CODIAGONAL_ORDER_BOUND,
            });
        }
        out = next;
    }
    Ok(out)
}

/// `∇` of the binerve of a square in explicit coordinates:
/// `G0 = P`, `G1 = N ⋊ (M ⋊ P)` with `(m,p)` acting on `N` through
/// `μ(m) p`, and `G2` on tuples `(l, n, m1, n1, m2, p)`.
#[derive(Clone, Debug)]
pub struct ExplicitCodiagonal {
    pub simplicial: TruncatedSimplicialGroup,
    square: CrossedSquare,
    coords: SquareCoords,
    level1: SemidirectProduct,
    mp: SemidirectProduct,
}

impl ExplicitCodiagonal {
    pub fn encode1(&self, n: usize, m: usize, p: usize) -> usize {
        self.level1.pair(n, self.mp.pair(m, p))
    }

    pub fn decode1(&self, x: usize) -> (usize, usize, usize) {
        let (n, mp) = self.level1.split(x);
        let (m, p) = self.mp.split(mp);
        (n, m, p)
    }

    pub fn encode2(&self, t: [usize; 6]) -> usize {
        let c = &self.coords;
        let radix = [c.l, c.n, c.m, c.n, c.m, c.p];
        (0..6).rev().fold(0, |acc, i| t[i] + radix[i] * acc)
    }

    pub fn decode2(&self, mut x: usize) -> [usize; 6] {
        let c = &self.coords;
        let radix = [c.l, c.n, c.m, c.n, c.m, c.p];
        let mut t = [0; 6];
        for i in 0..6 {
            t[i] = x % radix[i];
            x /= radix[i];
        }
        t
    }

    /// Big-group cells `(x0, x1)` of a level-1 element: `x0 = (m, p)` in
    /// `im s1`, `x1 = (n, μ(m) p)` in `im s2`.
    pub fn cells1(&self, x: usize) -> (u32, u32) {
        let (n, m, p) = self.decode1(x);
        let s = &self.square;
        let c = &self.coords;
        let mp = s.p().mul(s.mu.apply(m), p);
        (c.encode(0, 0, m, p) as u32, c.encode(0, n, 0, mp) as u32)
    }

    /// Cells of a level-2 element: two rows for `x0`, one cell for `x1`,
    /// two columns for `x2`.
    pub fn cells2(&self, x: usize) -> ([u32; 2], u32, [u32; 2]) {
        let [l, n, m1, n1, m2, p] = self.decode2(x);
        let s = &self.square;
        let c = &self.coords;
        let (pg, ng, mg) = (s.p(), s.n(), s.m());
        let mu_m2_p = pg.mul(s.mu.apply(m2), p);
        let x0 = [
            c.encode(0, 0, m2, p) as u32,
            c.encode(0, 0, m1, mu_m2_p) as u32,
        ];
        let x1 = c.encode(l, n, m1, mu_m2_p) as u32;
        let ln = ng.mul(s.lamp.apply(l), n);
        let base = pg.mul(s.mu.apply(mg.mul(m1, m2)), p);
        let x2 = [
            c.encode(0, ln, 0, base) as u32,
            c.encode(0, n1, 0, pg.mul(s.nu.apply(ln), base)) as u32,
        ];
        (x0, x1, x2)
    }

    /// Reads coordinates back from cells: `l, n, m1` from `x1`, `m2, p`
    /// from the first row of `x0`, `n1` from the second column of `x2`.
    fn from_cells2(&self, x0: u32, x1: u32, x2: u32) -> usize {
        let c = &self.coords;
        let (l, n, m1, _) = c.decode(x1 as usize);
        let (_, _, m2, p) = c.decode(x0 as usize);
        let (_, n1, _, _) = c.decode(x2 as usize);
        self.encode2([l, n, m1, n1, m2, p])
    }
}

pub fn explicit_codiagonal(s: &CrossedSquare) -> Result<ExplicitCodiagonal> {
    let coords = SquareCoords::of(s);
    let (l, m, n, p) = (s.l(), s.m(), s.n(), s.p());
    let order2 = l.order() * n.order() * m.order() * n.order() * m.order() * p.order();
    if order2 > CODIAGONAL_ORDER_BOUND {
        return Err(Error::OrderTooLarge {
            order: order2,
            bound: CODIAGONAL_ORDER_BOUND,
        });
    }
    let mp = semidirect(&s.act_m);
    let on_n = Action::from_fn(&mp.result, n, |x, y| {
        let (mm, pp) = mp.split(x);
        s.act_n.act(p.mul(s.mu.apply(mm), pp), y)
    })?;
    let level1 = semidirect(&on_n);
    let mut e = ExplicitCodiagonal {
        simplicial: TruncatedSimplicialGroup::constant(&Group::trivial(), 0),
        square: s.clone(),
        coords,
        level1,
        mp,
    };
    let g0 = p.clone();
    let g1 = e.level1.result.clone();
    let big = {
        // cellwise product of level-2 elements, read back through the
        // coordinates
        let bg = cat2_from_crossed_square(s)?.g;
        let cells: Vec<_> = (0..order2).map(|x| e.cells2(x)).collect();
        let mut table = Vec::with_capacity(order2 * order2);
        for a in &cells {
            for b in &cells {
                let mul = |u: u32, v: u32| bg.mul(u as usize, v as usize) as u32;
                table.push(e.from_cells2(mul(a.0[0], b.0[0]), mul(a.1, b.1), mul(a.2[1], b.2[1])) as u32);
            }
        }
        Group::from_flat_unchecked(order2, table)
    };
    let g2 = big;
    let nu_m = |nn: usize, mm: usize| s.n_on_m(nn, mm);

    let d1_0 = Hom::from_fn_unchecked(&g1, &g0, |x| {
        let (nn, mm, pp) = e.decode1(x);
        p.product([s.nu.apply(nn), s.mu.apply(mm), pp])
    });
    let d1_1 = Hom::from_fn_unchecked(&g1, &g0, |x| e.decode1(x).2);
    let s0_0 = Hom::from_fn_unchecked(&g0, &g1, |pp| e.encode1(0, 0, pp));

    let d2_0 = Hom::from_fn_unchecked(&g2, &g1, |x| {
        let [ll, nn, m1, n1, m2, pp] = e.decode2(x);
        let mm = m.mul(s.lam.apply(ll), nu_m(nn, m1));
        e.encode1(n1, mm, p.product([s.nu.apply(nn), s.mu.apply(m2), pp]))
    });
    let d2_1 = Hom::from_fn_unchecked(&g2, &g1, |x| {
        let [ll, nn, m1, n1, m2, pp] = e.decode2(x);
        e.encode1(n.product([n1, s.lamp.apply(ll), nn]), m.mul(m1, m2), pp)
    });
    let d2_2 = Hom::from_fn_unchecked(&g2, &g1, |x| {
        let [_, nn, _, _, m2, pp] = e.decode2(x);
        e.encode1(nn, m2, pp)
    });
    let s1_0 = Hom::from_fn_unchecked(&g1, &g2, |x| {
        let (nn, mm, pp) = e.decode1(x);
        e.encode2([0, 0, mm, nn, 0, pp])
    });
    let s1_1 = Hom::from_fn_unchecked(&g1, &g2, |x| {
        let (nn, mm, pp) = e.decode1(x);
        e.encode2([0, nn, 0, 0, mm, pp])
    });
    e.simplicial = TruncatedSimplicialGroup::from_parts(
        vec![g0, g1, g2],
        vec![vec![], vec![d1_0, d1_1], vec![d2_0, d2_1, d2_2]],
        vec![vec![s0_0], vec![s1_0, s1_1]],
    );
    Ok(e)
}

impl ExplicitCodiagonal {
    /// The enumerated codiagonal element matching explicit element `x` on
    /// level `n`, if its cells satisfy the matching conditions.
    pub fn to_generic(&self, bn: &Binerve, gen: &Codiagonal, n: usize, x: usize) -> Option<usize> {
        let comps: Vec<u32> = match n {
            0 => vec![bn.index_of(0, 0, &[self.coords.encode(0, 0, 0, x) as u32])? as u32],
            1 => {
                let (x0, x1) = self.cells1(x);
                vec![
                    bn.index_of(0, 1, &[x0])? as u32,
                    bn.index_of(1, 0, &[x1])? as u32,
                ]
            }
            _ => {
                let (x0, x1, x2) = self.cells2(x);
                vec![
                    bn.index_of(0, 2, &x0)? as u32,
                    bn.index_of(1, 1, &[x1])? as u32,
                    bn.index_of(2, 0, &x2)? as u32,
                ]
            }
        };
        gen.index_of(n, &comps)
    }
}

/// Compares the explicit presentation with the enumerated codiagonal of the
/// binerve. Axiom ids: `in_nabla@n`, `bijective@n`, `product@n`, `dJ@n`,
/// `sJ@n`, plus `explicit.*` and `generic.*` for the simplicial identities
/// of each side.
pub fn check_codiagonal_agreement(s: &CrossedSquare) -> Result<Report> {
    let cat2 = cat2_from_crossed_square(s)?;
    let bn = binerve_cells(&cat2, 2)?;
    let gen = codiagonal_with_components(&bn.grid)?;
    let exp = explicit_codiagonal(s)?;
    let mut r = Report::new();
    r.absorb("generic", check_simplicial(&gen.simplicial));
    r.absorb("explicit", check_simplicial(&exp.simplicial));
    let to_generic = |n: usize, x: usize| exp.to_generic(&bn, &gen, n, x);
    let (es, gs) = (&exp.simplicial, &gen.simplicial);
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for n in 0..=2 {
        let mut map = Vec::with_capacity(es.level(n).order());
        let mut hit = vec![false; gs.level(n).order()];
        for x in es.level(n).elements() {
            match to_generic(n, x) {
                Some(y) => {
                    r.check(!hit[y], &format!("bijective@{n}"), &[x]);
                    hit[y] = true;
                    map.push(y);
                }
                None => {
                    r.record(&format!("in_nabla@{n}"), &[x]);
                    map.push(0);
                }
            }
        }
        r.check(
            es.level(n).order() == gs.level(n).order(),
            &format!("bijective@{n}"),
            &[es.level(n).order(), gs.level(n).order()],
        );
        maps.push(map);
    }
    if !r.is_ok() {
        return Ok(r);
    }
    for n in 0..=2 {
        let (eg, gg, f) = (es.level(n), gs.level(n), &maps[n]);
        let id = format!("product@{n}");
        for x in eg.elements() {
            for y in eg.elements() {
                r.check(f[eg.mul(x, y)] == gg.mul(f[x], f[y]), &id, &[x, y]);
            }
        }
        if n >= 1 {
            for j in 0..=n {
                let id = format!("d{j}@{n}");
                for x in eg.elements() {
                    r.check(maps[n - 1][es.face(n, j, x)] == gs.face(n, j, f[x]), &id, &[x]);
                }
            }
        }
        if n < 2 {
            for j in 0..=n {
                let id = format!("s{j}@{n}");
                for x in eg.elements() {
                    r.check(maps[n + 1][es.degen(n, j, x)] == gs.degen(n, j, f[x]), &id, &[x]);
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::simplicial::binerve;

    fn generic(s: &CrossedSquare) -> TruncatedSimplicialGroup {
        codiagonal(&binerve(&cat2_from_crossed_square(s).unwrap(), 2).unwrap()).unwrap()
    }

    #[test]
    fn trivial_square_levels() {
        let g = generic(&corpus::square_trivial_c2());
        let orders: Vec<usize> = g.levels().iter().map(|l| l.order()).collect();
        assert_eq!(orders, vec![2, 2, 2]);
        assert!(check_simplicial(&g).is_ok());
    }

    #[test]
    fn a3_s3_levels() {
        let g = generic(&corpus::square_a3_s3());
        let orders: Vec<usize> = g.levels().iter().map(|l| l.order()).collect();
        assert_eq!(orders, vec![6, 54, 1458]);
        let r = check_simplicial(&g);
        assert!(r.is_ok(), "{r}");
    }

    #[test]
    fn explicit_agrees_with_generic() {
        for (name, s) in corpus::squares() {
            let r = check_codiagonal_agreement(&s).unwrap();
            assert!(r.is_ok(), "{name}: {r}");
        }
    }

    #[test]
    fn tampered_top_face_is_caught() {
        let mut g = generic(&corpus::square_a3_s3());
        let d1 = g.d(2, 1).clone();
        g.set_face(2, 2, d1).unwrap();
        assert!(!check_simplicial(&g).is_ok());
    }
}
