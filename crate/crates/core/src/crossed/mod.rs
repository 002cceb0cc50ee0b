//! The algebraic models: pre-crossed and crossed modules, 2-crossed modules,
//! crossed squares, quadratic modules and cat¹/cat²-groups.

mod cat;
mod precrossed;
mod quadratic;
mod square;
mod two_crossed;

pub use cat::{
    cat1_from_crossed_module, cat2_from_crossed_square, check_cat1, check_cat2,
    crossed_module_from_cat1, crossed_square_from_cat2, Cat1Group, Cat2Group, SquareCoords,
};
pub use precrossed::{
    check_crossed_module, check_precrossed, peiffer_commutator, peiffer_subgroups,
    CrossedModule, PreCrossedModule,
};
pub use quadratic::{check_quadratic, nil2_quotient, QuadraticModule};
pub use square::{check_crossed_square, CrossedSquare};
pub use two_crossed::{check_two_crossed, TwoCrossedModule};
