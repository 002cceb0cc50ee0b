use super::TruncatedSimplicialGroup;
use crate::group::{image, intersect, kernel, Hom, Subgroup};

/// `NG_n = ∩_{i<n} ker d_i` with boundary `∂_n = d_n` restricted.
#[derive(Clone, Debug)]
pub struct MooreComplex {
    pub terms: Vec<Subgroup>,
    faces: Vec<Option<Hom>>,
}

impl MooreComplex {
    pub fn depth(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &Subgroup {
        &self.terms[n]
    }

    /// `∂_n x` for `x` in `NG_n`, as an element of `G_{n-1}`.
    pub fn boundary(&self, n: usize, x: usize) -> usize {
        self.faces[n].as_ref().expect("no boundary out of level 0").apply(x)
    }

    /// `∂_n(NG_n)` as a subgroup of `G_{n-1}`.
    pub fn boundary_image(&self, n: usize) -> Subgroup {
        let d = self.faces[n].as_ref().expect("no boundary out of level 0");
        let (_, emb) = self.terms[n].to_group();
        image(&emb.then(d))
    }

    /// `ker ∂_n ∩ NG_n` as a subgroup of `G_n`. At level 0 this is `G_0`.
    pub fn cycles(&self, n: usize) -> Subgroup {
        match &self.faces[n] {
            None => self.terms[0].clone(),
            Some(d) => intersect(&kernel(d), &self.terms[n]).expect("same parent"),
        }
    }

    /// `∂_{n-1} ∂_n = 1` at every level.
    pub fn composes_trivially(&self) -> bool {
        (2..=self.depth()).all(|n| {
            self.terms[n]
                .elements()
                .iter()
                .all(|&x| self.boundary(n - 1, self.boundary(n, x)) == 0)
        })
    }
}

pub fn moore_complex(g: &TruncatedSimplicialGroup) -> MooreComplex {
    let mut terms = Vec::new();
    let mut faces = Vec::new();
    for n in 0..=g.depth() {
        let mut t = Subgroup::whole(g.level(n));
        for i in 0..n {
            t = intersect(&t, &kernel(g.d(n, i))).expect("same parent");
        }
        terms.push(t);
        faces.push((n > 0).then(|| g.d(n, n).clone()));
    }
    MooreComplex { terms, faces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::symmetric;

    #[test]
    fn constant_complex() {
        let g = TruncatedSimplicialGroup::constant(&symmetric(3), 3);
        let m = moore_complex(&g);
        assert_eq!(m.term(0).order(), 6);
        for n in 1..=3 {
            assert!(m.term(n).is_trivial());
        }
        assert!(m.composes_trivially());
    }
}
