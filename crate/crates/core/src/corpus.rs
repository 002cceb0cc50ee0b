//! Small named structures used by the tests, the CLI demos and the benches.

use crate::crossed::{CrossedModule, CrossedSquare, PreCrossedModule};
use crate::group::builtin::{cyclic, dihedral, symmetric};
use crate::group::{subgroup_generated, Action, Group, Hom, Subgroup};
use crate::simplicial::{nerve_crossed_module, TruncatedSimplicialGroup};

/// `1 -> 1`, `1 -> C2` on the left and bottom, `1 -> C2` on the right.
pub fn square_trivial_c2() -> CrossedSquare {
    let (one, c2) = (Group::trivial(), cyclic(2));
    CrossedSquare::from_fn(
        Hom::identity(&one),
        Hom::identity(&one),
        Hom::trivial(&one, &c2),
        Hom::trivial(&one, &c2),
        Action::trivial(&c2, &one),
        Action::trivial(&c2, &one),
        Action::trivial(&c2, &one),
        |_, _| 0,
    )
}

/// The alternating subgroup of `S3`.
pub fn a3() -> Subgroup {
    subgroup_generated(&symmetric(3), &[3])
}

/// Commutator square of `A3, A3` inside `S3`; orders 3, 3, 3, 6.
pub fn square_a3_s3() -> CrossedSquare {
    let a = a3();
    CrossedSquare::commutator_square(&a, &a).expect("A3 is normal")
}

/// `L = N = 1`, `M = C4 -> P = C2` onto, trivial actions.
pub fn square_c4_c2() -> CrossedSquare {
    let (one, c2, c4) = (Group::trivial(), cyclic(2), cyclic(4));
    CrossedSquare::from_fn(
        Hom::trivial(&one, &c4),
        Hom::identity(&one),
        Hom::from_fn_unchecked(&c4, &c2, |x| x % 2),
        Hom::trivial(&one, &c2),
        Action::trivial(&c2, &one),
        Action::trivial(&c2, &c4),
        Action::trivial(&c2, &one),
        |_, _| 0,
    )
}

/// Two Klein subgroups of `D8` meeting in the centre.
pub fn square_klein_diagonal() -> CrossedSquare {
    let d8 = dihedral(4);
    let m = Subgroup::new(&d8, &[0, 2, 4, 6]).expect("subgroup");
    let n = Subgroup::new(&d8, &[0, 2, 5, 7]).expect("subgroup");
    CrossedSquare::commutator_square(&m, &n).expect("index-2 subgroups are normal")
}

/// Commutator square of `S3, S3` inside `S3`. Used for tamper tests.
pub fn square_full_s3() -> CrossedSquare {
    let s = Subgroup::whole(&symmetric(3));
    CrossedSquare::commutator_square(&s, &s).expect("whole group is normal")
}

pub fn xmod_a3_s3() -> CrossedModule {
    PreCrossedModule::normal_inclusion(&a3()).expect("A3 is normal")
}

/// `C4 -> C2` onto with trivial action.
pub fn xmod_c4_c2() -> CrossedModule {
    let (c2, c4) = (cyclic(2), cyclic(4));
    PreCrossedModule::new(
        Hom::from_fn_unchecked(&c4, &c2, |x| x % 2),
        Action::trivial(&c2, &c4),
    )
    .expect("shape")
}

pub fn squares() -> Vec<(&'static str, CrossedSquare)> {
    vec![
        ("trivial-c2", square_trivial_c2()),
        ("square-a3-s3", square_a3_s3()),
        ("square-c4-c2", square_c4_c2()),
        ("square-klein-diagonal", square_klein_diagonal()),
    ]
}

pub fn crossed_modules() -> Vec<(&'static str, CrossedModule)> {
    vec![("xmod-a3-s3", xmod_a3_s3()), ("xmod-c4-c2", xmod_c4_c2())]
}

pub fn nerve_a3_s3(depth: usize) -> TruncatedSimplicialGroup {
    nerve_crossed_module(&xmod_a3_s3(), depth).expect("depth within bound")
}

pub fn nerve_c4_c2(depth: usize) -> TruncatedSimplicialGroup {
    nerve_crossed_module(&xmod_c4_c2(), depth).expect("depth within bound")
}

/// `K(C2, 2)` to level 3: level `m` is the group of normalized `C2`-valued
/// 2-cocycles on the simplex `[m]`, stored as bit masks over its triangles.
/// Orders 1, 1, 2, 8.
pub fn eilenberg_maclane_c2_2() -> TruncatedSimplicialGroup {
    let triangles = |m: usize| -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..=m {
            for b in a + 1..=m {
                for c in b + 1..=m {
                    out.push([a, b, c]);
                }
            }
        }
        out
    };
    // masks satisfying the cocycle condition on every tetrahedron
    let cocycles = |m: usize| -> Vec<usize> {
        let tr = triangles(m);
        let pos = |t: [usize; 3]| tr.iter().position(|&u| u == t).expect("triangle");
        (0..1usize << tr.len())
            .filter(|&mask| {
                let mut ok = true;
                for a in 0..=m {
                    for b in a + 1..=m {
                        for c in b + 1..=m {
                            for d in c + 1..=m {
                                let faces = [[b, c, d], [a, c, d], [a, b, d], [a, b, c]];
                                let sum: usize = faces.iter().map(|&f| (mask >> pos(f)) & 1).sum();
                                ok &= sum % 2 == 0;
                            }
                        }
                    }
                }
                ok
            })
            .collect()
    };
    let masks: Vec<Vec<usize>> = (0..=3).map(cocycles).collect();
    let groups: Vec<Group> = masks
        .iter()
        .map(|ms| {
            let table: Vec<Vec<usize>> = ms
                .iter()
                .map(|a| ms.iter().map(|b| ms.iter().position(|&c| c == a ^ b).expect("closed")).collect())
                .collect();
            Group::from_table(&table).expect("xor group")
        })
        .collect();
    // pulls a cocycle on [m] back along a monotone map [k] -> [m]
    let pull = |m: usize, k: usize, f: &dyn Fn(usize) -> usize, x: usize| -> usize {
        let (src, dst) = (triangles(m), triangles(k));
        let mask = masks[m][x];
        let mut out = 0usize;
        for (i, t) in dst.iter().enumerate() {
            let img = [f(t[0]), f(t[1]), f(t[2])];
            if img[0] < img[1] && img[1] < img[2] {
                let j = src.iter().position(|&u| u == img).expect("triangle");
                out |= ((mask >> j) & 1) << i;
            }
        }
        masks[k].iter().position(|&c| c == out).expect("cocycle")
    };
    let mut faces = vec![Vec::new()];
    for m in 1..=3 {
        let ds = (0..=m)
            .map(|i| {
                Hom::from_fn(&groups[m], &groups[m - 1], |x| {
                    pull(m, m - 1, &|k| if k < i { k } else { k + 1 }, x)
                })
                .expect("restriction is additive")
            })
            .collect();
        faces.push(ds);
    }
    let mut degens = Vec::new();
    for m in 0..3 {
        let ss = (0..=m)
            .map(|i| {
                Hom::from_fn(&groups[m], &groups[m + 1], |x| {
                    pull(m, m + 1, &|k| if k <= i { k } else { k - 1 }, x)
                })
                .expect("pullback is additive")
            })
            .collect();
        degens.push(ss);
    }
    TruncatedSimplicialGroup::new(groups, faces, degens).expect("shape")
}

/// Depth-3 simplicial groups for the level-3 functors.
pub fn simplicial() -> Vec<(&'static str, TruncatedSimplicialGroup)> {
    vec![
        ("constant-s3", TruncatedSimplicialGroup::constant(&symmetric(3), 3)),
        ("constant-c2", TruncatedSimplicialGroup::constant(&cyclic(2), 3)),
        ("nerve-a3-s3-depth3", nerve_a3_s3(3)),
        ("nerve-c4-c2-depth3", nerve_c4_c2(3)),
        ("k-c2-2", eilenberg_maclane_c2_2()),
    ]
}
