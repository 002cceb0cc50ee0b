use super::{moore_complex, TruncatedSimplicialGroup};
use crate::error::{Error, Result};
use crate::group::{normal_closure, Subgroup};

/// The pairings `F_{α,β}` that are implemented, as `(n, α, β)` with index
/// sets written in decreasing order.
pub const SUPPORTED_PAIRINGS: &[(usize, &[usize], &[usize])] = &[
    (2, &[1], &[0]),
    (3, &[1, 0], &[2]),
    (3, &[2, 0], &[1]),
    (3, &[0], &[2, 1]),
    (3, &[0], &[1]),
    (3, &[0], &[2]),
    (3, &[1], &[2]),
];

/// A pairing `F_{α,β}: NG_{n-#α} × NG_{n-#β} -> NG_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairingIndex {
    pub n: usize,
    /// decreasing, `s_α = s_{α[0]} ∘ ... ∘ s_{α[r-1]}`
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl PairingIndex {
    pub fn new(n: usize, alpha: &[usize], beta: &[usize]) -> Result<PairingIndex> {
        let idx = PairingIndex {
            n,
            alpha: alpha.to_vec(),
            beta: beta.to_vec(),
        };
        if !idx.is_supported() {
            return Err(Error::UnsupportedPairing(idx.to_string()));
        }
        Ok(idx)
    }

    pub fn is_supported(&self) -> bool {
        SUPPORTED_PAIRINGS
            .iter()
            .any(|&(n, a, b)| n == self.n && a == self.alpha.as_slice() && b == self.beta.as_slice())
    }

    pub fn supported_at(n: usize) -> Vec<PairingIndex> {
        SUPPORTED_PAIRINGS
            .iter()
            .filter(|p| p.0 == n)
            .map(|&(n, a, b)| PairingIndex {
                n,
                alpha: a.to_vec(),
                beta: b.to_vec(),
            })
            .collect()
    }

    /// Levels of the two arguments.
    pub fn input_levels(&self) -> (usize, usize) {
        (self.n - self.alpha.len(), self.n - self.beta.len())
    }
}

impl std::fmt::Display for PairingIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let j = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "n={} ({})({})", self.n, j(&self.alpha), j(&self.beta))
    }
}

/// `s_α x` for `x` on level `from`.
fn degenerate(g: &TruncatedSimplicialGroup, ixs: &[usize], from: usize, mut x: usize) -> usize {
    for (k, &i) in ixs.iter().rev().enumerate() {
        x = g.degen(from + k, i, x);
    }
    x
}

/// `p = p_{n-1} ∘ ... ∘ p_0` with `p_j(z) = z s_j d_j(z)^-1`.
pub(crate) fn project(g: &TruncatedSimplicialGroup, n: usize, mut z: usize) -> usize {
    let gn = g.level(n);
    for j in 0..n {
        let back = g.degen(n - 1, j, g.face(n, j, z));
        z = gn.mul(z, gn.inv(back));
    }
    z
}

/// `p[s_α x, s_β y]` without membership checks on the arguments.
pub fn peiffer_pairing_raw(g: &TruncatedSimplicialGroup, idx: &PairingIndex, x: usize, y: usize) -> usize {
    let (lx, ly) = idx.input_levels();
    let a = degenerate(g, &idx.alpha, lx, x);
    let b = degenerate(g, &idx.beta, ly, y);
    project(g, idx.n, g.level(idx.n).commutator(a, b))
}

pub fn peiffer_pairing(
    g: &TruncatedSimplicialGroup,
    idx: &PairingIndex,
    x: usize,
    y: usize,
) -> Result<usize> {
    if !idx.is_supported() {
        return Err(Error::UnsupportedPairing(idx.to_string()));
    }
    g.require_depth(idx.n)?;
    let moore = moore_complex(g);
    let (lx, ly) = idx.input_levels();
    for (level, e) in [(lx, x), (ly, y)] {
        if e >= g.level(level).order() || !moore.term(level).contains(e) {
            return Err(Error::ElementNotInMoore { level, element: e });
        }
    }
    let v = peiffer_pairing_raw(g, idx, x, y);
    if !moore.term(idx.n).contains(v) {
        return Err(Error::InvalidStructure(format!(
            "F value {v} for {idx} is outside the Moore term"
        )));
    }
    Ok(v)
}

/// `N_n`: normal closure in `G_n` of every supported `F_{α,β}` value.
pub fn pairing_normal_subgroup(g: &TruncatedSimplicialGroup, n: usize) -> Result<Subgroup> {
    let idxs = PairingIndex::supported_at(n);
    if idxs.is_empty() {
        return Err(Error::UnsupportedPairing(format!("no pairings at level {n}")));
    }
    g.require_depth(n)?;
    let moore = moore_complex(g);
    let mut gens = Vec::new();
    for idx in &idxs {
        let (lx, ly) = idx.input_levels();
        for &x in moore.term(lx).elements() {
            for &y in moore.term(ly).elements() {
                gens.push(peiffer_pairing_raw(g, idx, x, y));
            }
        }
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(normal_closure(g.level(n), &gens))
}
