use std::collections::BTreeMap;

use super::{simplicial_identities, MAX_DEPTH};
use crate::crossed::{check_cat2, Cat2Group};
use crate::error::{Error, Result};
use crate::group::tuple::TupleGroup;
use crate::group::{Group, Hom};
use crate::report::Report;

type Pos = (usize, usize);

/// Groups `G_{p,q}` for `p + q <= depth` with horizontal operators changing
/// `p` and vertical operators changing `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBisimplicialGroup {
    depth: usize,
    groups: BTreeMap<Pos, Group>,
    /// keyed by the domain position
    hfaces: BTreeMap<Pos, Vec<Hom>>,
    hdegens: BTreeMap<Pos, Vec<Hom>>,
    vfaces: BTreeMap<Pos, Vec<Hom>>,
    vdegens: BTreeMap<Pos, Vec<Hom>>,
}

impl TruncatedBisimplicialGroup {
    /// Maps are keyed by the position of their domain. Every position with
    /// `p >= 1` needs `p + 1` horizontal faces, every position with
    /// `p + q < depth` needs `p + 1` horizontal degeneracies, and likewise
    /// vertically.
    pub fn new(
        depth: usize,
        groups: BTreeMap<Pos, Group>,
        hfaces: BTreeMap<Pos, Vec<Hom>>,
        hdegens: BTreeMap<Pos, Vec<Hom>>,
        vfaces: BTreeMap<Pos, Vec<Hom>>,
        vdegens: BTreeMap<Pos, Vec<Hom>>,
    ) -> Result<TruncatedBisimplicialGroup> {
        let b = TruncatedBisimplicialGroup {
            depth,
            groups,
            hfaces,
            hdegens,
            vfaces,
            vdegens,
        };
        b.validate_shape()?;
        Ok(b)
    }

    fn validate_shape(&self) -> Result<()> {
        let bad = |s: String| Err(Error::InvalidStructure(s));
        if self.depth > MAX_DEPTH {
            return bad(format!("depth {} exceeds {MAX_DEPTH}", self.depth));
        }
        for p in 0..=self.depth {
            for q in 0..=self.depth - p {
                let Some(g) = self.groups.get(&(p, q)) else {
                    return bad(format!("missing G_({p},{q})"));
                };
                let sets = [
                    ("horizontal face", &self.hfaces, p >= 1, (p.wrapping_sub(1), q), p + 1),
                    ("vertical face", &self.vfaces, q >= 1, (p, q.wrapping_sub(1)), q + 1),
                    ("horizontal degeneracy", &self.hdegens, p + q < self.depth, (p + 1, q), p + 1),
                    ("vertical degeneracy", &self.vdegens, p + q < self.depth, (p, q + 1), q + 1),
                ];
                for (what, maps, needed, to, count) in sets {
                    if !needed {
                        continue;
                    }
                    let Some(ms) = maps.get(&(p, q)) else {
                        return bad(format!("missing {what} maps at ({p},{q})"));
                    };
                    if ms.len() != count {
                        return bad(format!("({p},{q}) needs {count} {what} maps"));
                    }
                    for m in ms {
                        if m.dom() != g || Some(m.cod()) != self.groups.get(&to) {
                            return bad(format!("{what} at ({p},{q}) has wrong endpoints"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn group(&self, p: usize, q: usize) -> &Group {
        &self.groups[&(p, q)]
    }

    /// `d_i^h: G_{p,q} -> G_{p-1,q}`.
    pub fn dh(&self, p: usize, q: usize, i: usize) -> &Hom {
        &self.hfaces[&(p, q)][i]
    }

    /// `s_i^h: G_{p,q} -> G_{p+1,q}`.
    pub fn sh(&self, p: usize, q: usize, i: usize) -> &Hom {
        &self.hdegens[&(p, q)][i]
    }

    /// `d_j^v: G_{p,q} -> G_{p,q-1}`.
    pub fn dv(&self, p: usize, q: usize, j: usize) -> &Hom {
        &self.vfaces[&(p, q)][j]
    }

    /// `s_j^v: G_{p,q} -> G_{p,q+1}`.
    pub fn sv(&self, p: usize, q: usize, j: usize) -> &Hom {
        &self.vdegens[&(p, q)][j]
    }

    /// Replaces a horizontal face, for tamper tests and file loading.
    pub fn set_dh(&mut self, p: usize, q: usize, i: usize, d: Hom) -> Result<()> {
        let old = self.hfaces[&(p, q)][i].clone();
        self.hfaces.get_mut(&(p, q)).expect("position")[i] = d;
        if let Err(e) = self.validate_shape() {
            self.hfaces.get_mut(&(p, q)).expect("position")[i] = old;
            return Err(e);
        }
        Ok(())
    }
}

/// Row and column simplicial identities, tagged `,h q=Q` and `,v p=P`, and
/// commutation of horizontal with vertical operators, `hv.dXdY@(p,q)` etc.
pub fn check_bisimplicial(b: &TruncatedBisimplicialGroup) -> Report {
    let mut r = Report::new();
    let k = b.depth;
    for q in 0..=k {
        simplicial_identities(
            &mut r,
            k - q,
            |p| b.group(p, q).order(),
            |p, i, x| b.dh(p, q, i).apply(x),
            |p, i, x| b.sh(p, q, i).apply(x),
            &format!(",h q={q}"),
        );
    }
    for p in 0..=k {
        simplicial_identities(
            &mut r,
            k - p,
            |q| b.group(p, q).order(),
            |q, j, x| b.dv(p, q, j).apply(x),
            |q, j, x| b.sv(p, q, j).apply(x),
            &format!(",v p={p}"),
        );
    }
    for p in 0..=k {
        for q in 0..=k - p {
            let g = b.group(p, q);
            let room = k - p - q;
            for i in 0..=p {
                for j in 0..=q {
                    let mut check = |id: String, f: &dyn Fn(usize) -> (usize, usize)| {
                        for x in g.elements() {
                            let (lhs, rhs) = f(x);
                            r.check(lhs == rhs, &id, &[x]);
                        }
                    };
                    if p >= 1 && q >= 1 {
                        check(format!("hv.d{i}d{j}@({p},{q})"), &|x| {
                            (
                                b.dh(p, q - 1, i).apply(b.dv(p, q, j).apply(x)),
                                b.dv(p - 1, q, j).apply(b.dh(p, q, i).apply(x)),
                            )
                        });
                    }
                    if p >= 1 && room >= 1 {
                        check(format!("hv.d{i}s{j}@({p},{q})"), &|x| {
                            (
                                b.dh(p, q + 1, i).apply(b.sv(p, q, j).apply(x)),
                                b.sv(p - 1, q, j).apply(b.dh(p, q, i).apply(x)),
                            )
                        });
                    }
                    if q >= 1 && room >= 1 {
                        check(format!("hv.s{i}d{j}@({p},{q})"), &|x| {
                            (
                                b.sh(p, q - 1, i).apply(b.dv(p, q, j).apply(x)),
                                b.dv(p + 1, q, j).apply(b.sh(p, q, i).apply(x)),
                            )
                        });
                    }
                    if room >= 2 {
                        check(format!("hv.s{i}s{j}@({p},{q})"), &|x| {
                            (
                                b.sh(p, q + 1, i).apply(b.sv(p, q, j).apply(x)),
                                b.sv(p + 1, q, j).apply(b.sh(p, q, i).apply(x)),
                            )
                        });
                    }
                }
            }
        }
    }
    r
}

/// Cell arrays of a cat²-group nerve: position `(p, q)` holds
/// `max(p,1) × max(q,1)` cells of the big group, row-major, with rows stacked
/// vertically.
pub(crate) type Cells = [u32; 4];

/// The binerve together with the cell description of every element.
#[derive(Clone, Debug)]
pub struct Binerve {
    pub grid: TruncatedBisimplicialGroup,
    pub cat2: Cat2Group,
    tables: BTreeMap<Pos, TupleGroup<Cells>>,
}

impl Binerve {
    /// The big-group cells of element `x` at `(p, q)`.
    pub fn cells(&self, p: usize, q: usize, x: usize) -> &[u32] {
        let n = shape(p, q);
        &self.tables[&(p, q)].elems[x][..n.0 * n.1]
    }

    pub fn index_of(&self, p: usize, q: usize, cells: &[u32]) -> Option<usize> {
        let mut key = [0u32; 4];
        key[..cells.len()].copy_from_slice(cells);
        self.tables[&(p, q)].index.get(&key).copied()
    }
}

/// `(cols, rows)`.
fn shape(p: usize, q: usize) -> (usize, usize) {
    (p.max(1), q.max(1))
}

pub fn binerve(k: &Cat2Group, depth: usize) -> Result<TruncatedBisimplicialGroup> {
    Ok(binerve_cells(k, depth)?.grid)
}

/// Horizontal nerve along `(s1, t1)`, vertical along `(s2, t2)`.
///
/// `G_{0,q}` consists of `q` vertically composable cells in `im s1` and
/// `G_{p,0}` of `p` horizontally composable cells in `im s2`; `G_{0,0}` is
/// `im s1 ∩ im s2`.
pub fn binerve_cells(k: &Cat2Group, depth: usize) -> Result<Binerve> {
    if depth > MAX_DEPTH {
        return Err(Error::InvalidStructure(format!(
            "depth {depth} exceeds {MAX_DEPTH}"
        )));
    }
    let rep = check_cat2(k);
    if !rep.is_ok() {
        return Err(Error::NotCat2(rep.to_string()));
    }
    let g = &k.g;
    let (s1, t1, s2, t2) = (&k.s1, &k.t1, &k.s2, &k.t2);
    let ap = |h: &Hom, x: u32| h.apply(x as usize) as u32;
    let mut tables = BTreeMap::new();
    for p in 0..=depth {
        for q in 0..=depth - p {
            let (cols, rows) = shape(p, q);
            let allowed: Vec<u32> = g
                .elements()
                .filter(|&x| (p >= 1 || s1.apply(x) == x) && (q >= 1 || s2.apply(x) == x))
                .map(|x| x as u32)
                .collect();
            let mut out = Vec::new();
            let mut cur = [0u32; 4];
            fill(0, cols, rows, &allowed, &mut cur, &mut out, &|a, b, vertical| {
                if vertical {
                    ap(t2, a) == ap(s2, b)
                } else {
                    ap(t1, a) == ap(s1, b)
                }
            });
            let n = cols * rows;
            let tg = TupleGroup::new(out, &[0; 4], |a, b| {
                let mut c = [0u32; 4];
                for i in 0..n {
                    c[i] = g.mul(a[i] as usize, b[i] as usize) as u32;
                }
                c
            });
            tables.insert((p, q), tg);
        }
    }
    let groups: BTreeMap<Pos, Group> = tables.iter().map(|(&k, t)| (k, t.group.clone())).collect();
    let mul = |a: u32, b: u32| g.mul(a as usize, b as usize) as u32;
    let inv = |a: u32| g.inv(a as usize) as u32;
    // composite of g then h along (s, t): g s(h)^-1 h
    let compose = |s: &Hom, a: u32, b: u32| mul(mul(a, inv(ap(s, b))), b);

    let mut hfaces = BTreeMap::new();
    let mut hdegens = BTreeMap::new();
    let mut vfaces = BTreeMap::new();
    let mut vdegens = BTreeMap::new();
    for p in 0..=depth {
        for q in 0..=depth - p {
            let src = &tables[&(p, q)];
            let (cols, rows) = shape(p, q);
            let map_to = |to: Pos, f: &dyn Fn(&Cells) -> Cells| {
                let dst = &tables[&to];
                Hom::from_fn_unchecked(&src.group, &dst.group, |x| dst.get(&f(&src.elems[x])))
            };
            if p >= 1 {
                let ds = (0..=p)
                    .map(|i| {
                        map_to((p - 1, q), &|c| {
                            face_cells(c, cols, rows, p, i, false, &|x| ap(t1, x), &|x| ap(s1, x), &|a, b| compose(s1, a, b))
                        })
                    })
                    .collect();
                hfaces.insert((p, q), ds);
            }
            if q >= 1 {
                let ds = (0..=q)
                    .map(|j| {
                        map_to((p, q - 1), &|c| {
                            face_cells(c, cols, rows, q, j, true, &|x| ap(t2, x), &|x| ap(s2, x), &|a, b| compose(s2, a, b))
                        })
                    })
                    .collect();
                vfaces.insert((p, q), ds);
            }
            if p + q < depth {
                let ss = (0..=p)
                    .map(|i| {
                        map_to((p + 1, q), &|c| {
                            degen_cells(c, cols, rows, p, i, false, &|x| ap(s1, x), &|x| ap(t1, x))
                        })
                    })
                    .collect();
                hdegens.insert((p, q), ss);
                let ss = (0..=q)
                    .map(|j| {
                        map_to((p, q + 1), &|c| {
                            degen_cells(c, cols, rows, q, j, true, &|x| ap(s2, x), &|x| ap(t2, x))
                        })
                    })
                    .collect();
                vdegens.insert((p, q), ss);
            }
        }
    }
    let grid = TruncatedBisimplicialGroup::new(depth, groups, hfaces, hdegens, vfaces, vdegens)?;
    Ok(Binerve {
        grid,
        cat2: k.clone(),
        tables,
    })
}

/// Row-major backtracking over cell arrays satisfying the adjacency test
/// `adj(a, b, vertical)` between neighbours.
fn fill(
    pos: usize,
    cols: usize,
    rows: usize,
    allowed: &[u32],
    cur: &mut Cells,
    out: &mut Vec<Cells>,
    adj: &dyn Fn(u32, u32, bool) -> bool,
) {
    if pos == cols * rows {
        out.push(*cur);
        return;
    }
    let (r, c) = (pos / cols, pos % cols);
    for &x in allowed {
        if c > 0 && !adj(cur[pos - 1], x, false) {
            continue;
        }
        if r > 0 && !adj(cur[pos - cols], x, true) {
            continue;
        }
        cur[pos] = x;
        fill(pos + 1, cols, rows, allowed, cur, out, adj);
    }
    cur[pos] = 0;
}

/// Reads the array as lines along the chosen direction: columns for
/// horizontal operators, rows for vertical ones.
fn lines(c: &Cells, cols: usize, rows: usize, vertical: bool) -> Vec<Vec<u32>> {
    if vertical {
        (0..rows).map(|r| (0..cols).map(|k| c[r * cols + k]).collect()).collect()
    } else {
        (0..cols).map(|k| (0..rows).map(|r| c[r * cols + k]).collect()).collect()
    }
}

fn unlines(ls: &[Vec<u32>], vertical: bool) -> Cells {
    let mut out = [0u32; 4];
    let n_lines = ls.len();
    let len = ls[0].len();
    for (a, line) in ls.iter().enumerate() {
        for (b, &x) in line.iter().enumerate() {
            let idx = if vertical { a * len + b } else { b * n_lines + a };
            out[idx] = x;
        }
    }
    out
}

/// Face `i` along one direction of a level-`n` array (`n` arrows in that
/// direction).
#[allow(clippy::too_many_arguments)]
fn face_cells(
    c: &Cells,
    cols: usize,
    rows: usize,
    n: usize,
    i: usize,
    vertical: bool,
    target: &dyn Fn(u32) -> u32,
    source: &dyn Fn(u32) -> u32,
    compose: &dyn Fn(u32, u32) -> u32,
) -> Cells {
    let mut ls = lines(c, cols, rows, vertical);
    if n == 1 {
        let f = if i == 0 { target } else { source };
        for x in ls[0].iter_mut() {
            *x = f(*x);
        }
    } else if i == 0 {
        ls.remove(0);
    } else if i == n {
        ls.pop();
    } else {
        let merged: Vec<u32> = ls[i - 1]
            .iter()
            .zip(&ls[i])
            .map(|(&a, &b)| compose(a, b))
            .collect();
        ls[i - 1] = merged;
        ls.remove(i);
    }
    unlines(&ls, vertical)
}

/// Degeneracy `i` along one direction: at level 0 the object is its own
/// identity arrow; otherwise an identity line is inserted at position `i`.
#[allow(clippy::too_many_arguments)]
fn degen_cells(
    c: &Cells,
    cols: usize,
    rows: usize,
    n: usize,
    i: usize,
    vertical: bool,
    source: &dyn Fn(u32) -> u32,
    target: &dyn Fn(u32) -> u32,
) -> Cells {
    if n == 0 {
        return *c;
    }
    let mut ls = lines(c, cols, rows, vertical);
    let id: Vec<u32> = if i < n {
        ls[i].iter().map(|&x| source(x)).collect()
    } else {
        ls[n - 1].iter().map(|&x| target(x)).collect()
    };
    ls.insert(i, id);
    unlines(&ls, vertical)
}
