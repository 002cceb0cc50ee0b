use thiserror::Error;

/// Errors raised while building or converting algebraic structures.
///
/// Axiom failures of the 3-type models are not errors; they are reported as
/// [`crate::Violation`] data by the checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square or has out-of-range entries: {0}")]
    MalformedTable(String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("map is not a homomorphism: f({0}*{1}) != f({0})*f({1})")]
    NotHomomorphism(usize, usize),
    #[error("map has length {got}, expected {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("action row for actor element {0} is not an automorphism")]
    RowNotAutomorphism(usize),
    #[error("action law fails: ^({0}*{1}){2} != ^{0}(^{1}{2})")]
    NotAction(usize, usize, usize),
    #[error("subgroup is not normal: conjugate of {element} by {by} leaves it")]
    NotNormal { element: usize, by: usize },
    #[error("subgroups live in different parent groups")]
    ParentMismatch,
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("group order {order} exceeds the isomorphism bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("not a cat1-group: {0}")]
    NotCat1(String),
    #[error("not a cat2-group: {0}")]
    NotCat2(String),
    #[error("matching condition at level {0} cuts out an empty set")]
    MatchingConditionEmpty(usize),
    #[error("unsupported Peiffer pairing {0}")]
    UnsupportedPairing(String),
    #[error("element {element} is not in the Moore term NG_{level}")]
    ElementNotInMoore { level: usize, element: usize },
    #[error("simplicial group has depth {have}, need at least {need}")]
    DepthTooShallow { need: usize, have: usize },
    #[error("G_3 is not generated by degenerate elements (|D_3| = {degenerate}, |G_3| = {order})")]
    HypothesisG3NotDegenerate { degenerate: usize, order: usize },
    #[error("quadratic map is not well defined on classes: witnesses ({0}, {1}) and ({2}, {3})")]
    OmegaNotWellDefined(usize, usize, usize, usize),
    #[error("image is not normal in {context}: conjugating {element} by {by}")]
    NotNormalImage {
        context: String,
        element: usize,
        by: usize,
    },
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
