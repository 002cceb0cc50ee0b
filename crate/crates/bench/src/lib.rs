//! Inputs shared by the benchmarks.

use threetypes_core::corpus;
use threetypes_core::crossed::{cat2_from_crossed_square, CrossedSquare};
use threetypes_core::simplicial::{binerve, TruncatedBisimplicialGroup};

/// The corpus squares that are not trivial.
pub fn squares() -> Vec<(&'static str, CrossedSquare)> {
    corpus::squares()
        .into_iter()
        .filter(|(_, s)| s.p().order() > 2)
        .collect()
}

pub fn binerve_of(s: &CrossedSquare) -> TruncatedBisimplicialGroup {
    binerve(&cat2_from_crossed_square(s).expect("corpus square"), 2).expect("cat2")
}
