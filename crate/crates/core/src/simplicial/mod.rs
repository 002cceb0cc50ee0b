//! Truncated simplicial and bisimplicial groups, Moore complexes, nerves, the
//! codiagonal and the Peiffer pairings.

mod bisimplicial;
mod codiagonal;
mod moore;
mod nerve;
mod pairing;

pub use bisimplicial::{
    binerve, binerve_cells, check_bisimplicial, Binerve, TruncatedBisimplicialGroup,
};
pub use codiagonal::{
    check_codiagonal_agreement, codiagonal, codiagonal_with_components, explicit_codiagonal,
    Codiagonal, ExplicitCodiagonal, CODIAGONAL_ORDER_BOUND,
};
pub use moore::{moore_complex, MooreComplex};
pub use nerve::{nerve_cat1, nerve_crossed_module, NerveCoords};
pub use pairing::{
    pairing_normal_subgroup, peiffer_pairing, peiffer_pairing_raw, PairingIndex,
    SUPPORTED_PAIRINGS,
};

use crate::error::{Error, Result};
use crate::group::{subgroup_generated, Group, Hom, Subgroup};
use crate::report::Report;

/// Highest level a truncated simplicial group may carry.
pub const MAX_DEPTH: usize = 3;

/// Levels `G0..Gk` with faces `d_i: Gn -> G(n-1)` and degeneracies
/// `s_i: Gn -> G(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialGroup {
    levels: Vec<Group>,
    /// `faces[n][i]` is `d_i` on level `n`; `faces[0]` is empty.
    faces: Vec<Vec<Hom>>,
    /// `degens[n][i]` is `s_i` on level `n`, for `n < depth`.
    degens: Vec<Vec<Hom>>,
}

impl TruncatedSimplicialGroup {
    /// Checks the shape of the data: `n + 1` faces from level `n >= 1`,
    /// `n + 1` degeneracies from level `n < depth`, all with the right
    /// endpoints. Simplicial identities are left to [`check_simplicial`].
    pub fn new(
        levels: Vec<Group>,
        faces: Vec<Vec<Hom>>,
        degens: Vec<Vec<Hom>>,
    ) -> Result<TruncatedSimplicialGroup> {
        let bad = |s: String| Err(Error::InvalidStructure(s));
        if levels.is_empty() || levels.len() > MAX_DEPTH + 1 {
            return bad(format!("depth must be between 0 and {MAX_DEPTH}"));
        }
        let depth = levels.len() - 1;
        if faces.len() != depth + 1 || degens.len() != depth {
            return bad("need face lists for levels 0..=depth and degeneracy lists below depth".into());
        }
        if !faces[0].is_empty() {
            return bad("level 0 has no faces".into());
        }
        for n in 1..=depth {
            if faces[n].len() != n + 1 {
                return bad(format!("level {n} needs {} faces", n + 1));
            }
            for (i, d) in faces[n].iter().enumerate() {
                if d.dom() != &levels[n] || d.cod() != &levels[n - 1] {
                    return bad(format!("d{i} on level {n} has wrong endpoints"));
                }
            }
        }
        for n in 0..depth {
            if degens[n].len() != n + 1 {
                return bad(format!("level {n} needs {} degeneracies", n + 1));
            }
            for (i, s) in degens[n].iter().enumerate() {
                if s.dom() != &levels[n] || s.cod() != &levels[n + 1] {
                    return bad(format!("s{i} on level {n} has wrong endpoints"));
                }
            }
        }
        Ok(TruncatedSimplicialGroup {
            levels,
            faces,
            degens,
        })
    }

    pub(crate) fn from_parts(
        levels: Vec<Group>,
        faces: Vec<Vec<Hom>>,
        degens: Vec<Vec<Hom>>,
    ) -> TruncatedSimplicialGroup {
        TruncatedSimplicialGroup::new(levels, faces, degens).expect("well-shaped construction")
    }

    /// Every level `G`, every map the identity.
    pub fn constant(g: &Group, depth: usize) -> TruncatedSimplicialGroup {
        let id = Hom::identity(g);
        let faces = (0..=depth).map(|n| vec![id.clone(); if n == 0 { 0 } else { n + 1 }]);
        let degens = (0..depth).map(|n| vec![id.clone(); n + 1]);
        TruncatedSimplicialGroup::from_parts(
            vec![g.clone(); depth + 1],
            faces.collect(),
            degens.collect(),
        )
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &Group {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Group] {
        &self.levels
    }

    /// `d_i` on level `n`.
    pub fn d(&self, n: usize, i: usize) -> &Hom {
        &self.faces[n][i]
    }

    /// `s_i` on level `n`.
    pub fn s(&self, n: usize, i: usize) -> &Hom {
        &self.degens[n][i]
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i].apply(x)
    }

    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degens[n][i].apply(x)
    }

    /// Replaces one face map, for tamper tests and file loading.
    pub fn set_face(&mut self, n: usize, i: usize, d: Hom) -> Result<()> {
        if d.dom() != &self.levels[n] || d.cod() != &self.levels[n - 1] {
            return Err(Error::InvalidStructure(format!(
                "d{i} on level {n} has wrong endpoints"
            )));
        }
        self.faces[n][i] = d;
        Ok(())
    }

    /// The same data cut down to levels `0..=depth`.
    pub fn truncate(&self, depth: usize) -> TruncatedSimplicialGroup {
        let depth = depth.min(self.depth());
        TruncatedSimplicialGroup {
            levels: self.levels[..=depth].to_vec(),
            faces: self.faces[..=depth].to_vec(),
            degens: self.degens[..depth].to_vec(),
        }
    }

    pub(crate) fn require_depth(&self, need: usize) -> Result<()> {
        if self.depth() < need {
            return Err(Error::DepthTooShallow {
                need,
                have: self.depth(),
            });
        }
        Ok(())
    }
}

/// Every simplicial identity expressible below the truncation. Axiom ids
/// name the identity and the domain level, e.g. `d0d1@2` for
/// `d0 d1 = d0 d0` on `G2` and `d1s1@1` for `d1 s1 = id` on `G1`.
pub fn check_simplicial(g: &TruncatedSimplicialGroup) -> Report {
    let mut r = Report::new();
    simplicial_identities(
        &mut r,
        g.depth(),
        |n| g.level(n).order(),
        |n, i, x| g.face(n, i, x),
        |n, i, x| g.degen(n, i, x),
        "",
    );
    r
}

/// Records the identities of a truncated simplicial object with levels
/// `0..=k`, using `face(n, i, x)` and `degen(n, i, x)`. `tag` is appended
/// to every axiom id.
pub(crate) fn simplicial_identities(
    r: &mut Report,
    k: usize,
    order: impl Fn(usize) -> usize,
    face: impl Fn(usize, usize, usize) -> usize,
    degen: impl Fn(usize, usize, usize) -> usize,
    tag: &str,
) {
    // d_i d_j = d_{j-1} d_i for i < j
    for n in 2..=k {
        for j in 1..=n {
            for i in 0..j {
                let id = format!("d{i}d{j}@{n}{tag}");
                for x in 0..order(n) {
                    let lhs = face(n - 1, i, face(n, j, x));
                    let rhs = face(n - 1, j - 1, face(n, i, x));
                    r.check(lhs == rhs, &id, &[x]);
                }
            }
        }
    }
    // s_i s_j = s_{j+1} s_i for i <= j
    for n in 0..k.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let id = format!("s{i}s{j}@{n}{tag}");
                for x in 0..order(n) {
                    let lhs = degen(n + 1, i, degen(n, j, x));
                    let rhs = degen(n + 1, j + 1, degen(n, i, x));
                    r.check(lhs == rhs, &id, &[x]);
                }
            }
        }
    }
    // mixed identities on G_n, through G_{n+1}
    for n in 0..k {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let id = format!("d{i}s{j}@{n}{tag}");
                for x in 0..order(n) {
                    let lhs = face(n + 1, i, degen(n, j, x));
                    let rhs = if i < j {
                        degen(n - 1, j - 1, face(n, i, x))
                    } else if i == j || i == j + 1 {
                        x
                    } else {
                        degen(n - 1, j, face(n, i - 1, x))
                    };
                    r.check(lhs == rhs, &id, &[x]);
                }
            }
        }
    }
}

/// `D_n`: the subgroup of `G_n` generated by all `s_i(G_{n-1})`.
pub fn degenerate_subgroup(g: &TruncatedSimplicialGroup, n: usize) -> Subgroup {
    if n == 0 {
        return Subgroup::trivial(g.level(0));
    }
    let mut gens: Vec<usize> = Vec::new();
    for i in 0..n {
        for x in g.level(n - 1).elements() {
            gens.push(g.degen(n - 1, i, x));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    subgroup_generated(g.level(n), &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::cyclic;

    #[test]
    fn constant_is_simplicial() {
        let g = TruncatedSimplicialGroup::constant(&cyclic(2), 3);
        assert!(check_simplicial(&g).is_ok());
        assert!(degenerate_subgroup(&g, 2).is_whole());
    }

    #[test]
    fn swapped_face_is_caught() {
        let mut g = crate::corpus::nerve_a3_s3(2);
        let d1 = g.d(2, 1).clone();
        g.set_face(2, 2, d1).unwrap();
        let r = check_simplicial(&g);
        assert!(!r.is_ok());
        assert!(r.failing_axioms().any(|(a, _)| a.ends_with("@2") || a.ends_with("@1")));
    }

    #[test]
    fn shape_errors() {
        let c2 = cyclic(2);
        let id = Hom::identity(&c2);
        let e = TruncatedSimplicialGroup::new(vec![c2.clone(), c2.clone()], vec![vec![], vec![id.clone()]], vec![vec![id]]);
        assert!(matches!(e, Err(Error::InvalidStructure(_))));
    }
}
