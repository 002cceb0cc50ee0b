//! Functor pipelines on the corpus: checker closure, path independence and
//! homotopy agreement.

use threetypes_core::corpus;
use threetypes_core::crossed::{
    cat1_from_crossed_module, cat2_from_crossed_square, check_crossed_square, check_quadratic,
    check_two_crossed,
};
use threetypes_core::functors::{
    check_pairing_congruences, quadratic_from_simplicial, quadratic_from_square,
    quadratic_from_two_crossed, square_from_simplicial, two_crossed_from_simplicial,
    two_crossed_from_square, two_crossed_from_square_via_codiagonal,
};
use threetypes_core::group::intersect;
use threetypes_core::homotopy::{
    check_pi3_comparison, homotopy_quadratic, homotopy_simplicial, homotopy_square,
    homotopy_two_crossed, signatures_isomorphic,
};
use threetypes_core::simplicial::{
    binerve, check_simplicial, codiagonal, degenerate_subgroup, moore_complex, nerve_cat1,
    pairing_normal_subgroup, TruncatedSimplicialGroup,
};

fn depth3_inputs() -> Vec<(&'static str, TruncatedSimplicialGroup)> {
    corpus::simplicial()
        .into_iter()
        .filter(|(_, g)| g.depth() == 3)
        .collect()
}

fn codiagonals() -> Vec<(&'static str, TruncatedSimplicialGroup)> {
    corpus::squares()
        .into_iter()
        .map(|(name, s)| {
            let k = cat2_from_crossed_square(&s).unwrap();
            (name, codiagonal(&binerve(&k, 2).unwrap()).unwrap())
        })
        .collect()
}

#[test]
fn square_functors_land_in_their_models() {
    for (name, s) in corpus::squares() {
        assert!(check_crossed_square(&s).is_ok(), "{name}");
        let t = two_crossed_from_square(&s);
        let r = check_two_crossed(&t);
        assert!(r.is_ok(), "{name}: {r}");
        let q = quadratic_from_square(&s).unwrap();
        let r = check_quadratic(&q);
        assert!(r.is_ok(), "{name}: {r}");
        assert_eq!(q, quadratic_from_two_crossed(&t).unwrap(), "{name}");
    }
}

#[test]
fn simplicial_functors_land_in_their_models() {
    for (name, g) in depth3_inputs() {
        let s = square_from_simplicial(&g).unwrap();
        assert!(check_crossed_square(&s).is_ok(), "{name}");
        let t = two_crossed_from_simplicial(&g).unwrap();
        assert!(check_two_crossed(&t).is_ok(), "{name}");
        let q = quadratic_from_simplicial(&g).unwrap();
        let r = check_quadratic(&q);
        assert!(r.is_ok(), "{name}: {r}");
    }
}

#[test]
fn codiagonal_route_equals_direct_route() {
    for (name, s) in corpus::squares() {
        let via = two_crossed_from_square_via_codiagonal(&s).unwrap();
        assert_eq!(via, two_crossed_from_square(&s), "{name}");
    }
}

#[test]
fn codiagonal_outputs_are_simplicial() {
    for (name, g) in codiagonals() {
        let r = check_simplicial(&g);
        assert!(r.is_ok(), "{name}: {r}");
        assert!(moore_complex(&g).composes_trivially(), "{name}");
    }
}

#[test]
fn moore_meets_degenerate_on_codiagonals_and_nerves() {
    let mut inputs = codiagonals();
    inputs.extend(depth3_inputs());
    for (name, g) in inputs {
        let ng2 = moore_complex(&g).term(2).clone();
        let d2 = degenerate_subgroup(&g, 2);
        let n2 = pairing_normal_subgroup(&g, 2).unwrap();
        let lhs = intersect(&ng2, &d2).unwrap();
        let rhs = intersect(&n2, &d2).unwrap();
        assert_eq!(lhs.elements(), rhs.elements(), "{name}");
    }
}

#[test]
fn congruences_from_the_degeneracy_argument() {
    for (name, g) in depth3_inputs() {
        let r = check_pairing_congruences(&g).unwrap();
        assert!(r.is_ok(), "{name}: {r}");
    }
}

#[test]
fn two_ways_from_simplicial_groups() {
    for (name, g) in depth3_inputs() {
        let direct = homotopy_two_crossed(&two_crossed_from_simplicial(&g).unwrap()).unwrap();
        let s = square_from_simplicial(&g).unwrap();
        let via_square = homotopy_two_crossed(&two_crossed_from_square(&s)).unwrap();
        assert!(signatures_isomorphic(&direct, &via_square, 64).unwrap(), "{name}");
    }
}

#[test]
fn two_quadratic_constructions_agree() {
    for (name, g) in depth3_inputs() {
        let a = homotopy_quadratic(&quadratic_from_simplicial(&g).unwrap()).unwrap();
        let t = two_crossed_from_simplicial(&g).unwrap();
        let b = homotopy_quadratic(&quadratic_from_two_crossed(&t).unwrap()).unwrap();
        let c = homotopy_simplicial(&g).unwrap();
        assert!(signatures_isomorphic(&a, &b, 64).unwrap(), "{name}");
        assert!(signatures_isomorphic(&a, &c, 64).unwrap(), "{name}: {a} vs {c}");
    }
}

#[test]
fn homotopy_diagram_commutes() {
    for (name, s) in corpus::squares() {
        let a = homotopy_square(&s).unwrap();
        let t = two_crossed_from_square(&s);
        let b = homotopy_two_crossed(&t).unwrap();
        let c = homotopy_quadratic(&quadratic_from_square(&s).unwrap()).unwrap();
        let d = homotopy_two_crossed(&two_crossed_from_square_via_codiagonal(&s).unwrap()).unwrap();
        assert_eq!(b, d, "{name}");
        assert!(signatures_isomorphic(&a, &b, 64).unwrap(), "{name}");
        assert!(signatures_isomorphic(&b, &c, 64).unwrap(), "{name}");
        assert!(a.higher_abelian(), "{name}");
        assert!(check_pi3_comparison(&t).unwrap().is_ok(), "{name}");
    }
}

#[test]
fn nerve_signatures() {
    let expected = [("xmod-a3-s3", "(C2, 1, 1)"), ("xmod-c4-c2", "(1, C2, 1)")];
    for ((name, x), (want_name, want)) in corpus::crossed_modules().into_iter().zip(expected) {
        assert_eq!(name, want_name);
        let g = nerve_cat1(&cat1_from_crossed_module(&x), 3).unwrap();
        assert_eq!(homotopy_simplicial(&g).unwrap().to_string(), want);
        let q = quadratic_from_simplicial(&g).unwrap();
        assert_eq!(homotopy_quadratic(&q).unwrap().to_string(), want);
    }
}
