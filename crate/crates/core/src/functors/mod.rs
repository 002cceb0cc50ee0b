//! Conversions between the models. Every output is expected to pass the
//! checker of its target model.

mod from_simplicial;
mod from_square;
mod to_quadratic;

pub use from_simplicial::{
    check_pairing_congruences, quadratic_from_simplicial, square_from_simplicial,
    two_crossed_from_simplicial, two_crossed_from_simplicial_depth2,
};
pub use from_square::{
    mapping_cone_group, mapping_cone_peiffer_commutator, p3_prime_closed_forms,
    quadratic_from_square, two_crossed_from_square, two_crossed_from_square_via_codiagonal,
    ClosedFormComparison,
};
pub use to_quadratic::quadratic_from_two_crossed;
pub(crate) use to_quadratic::p3_prime;

use crate::simplicial::TruncatedSimplicialGroup;

/// `s0 x · s1 y · s0 x⁻¹ · s1 x · s1 y⁻¹ · s1 x⁻¹` in `G2` for `x, y` in `G1`.
pub(crate) fn six_term_lifting(g: &TruncatedSimplicialGroup, x: usize, y: usize) -> usize {
    let (g1, g2) = (g.level(1), g.level(2));
    let s0 = |z: usize| g.degen(1, 0, z);
    let s1 = |z: usize| g.degen(1, 1, z);
    g2.product([
        s0(x),
        s1(y),
        s0(g1.inv(x)),
        s1(x),
        s1(g1.inv(y)),
        s1(g1.inv(x)),
    ])
}
