use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ch0 is zero")]
    DivisionByZeroRank,
    #[error("the two points coincide")]
    IdenticalPoints,
    #[error("the line does not meet the region where the discriminant is non-positive")]
    NoIntersection,
    #[error("the central charge vanishes")]
    ZeroCharge,
    #[error("the central charge lies outside the upper half plane")]
    OutsideUpperHalfPlane,
    #[error("tent search exceeded level {0}")]
    SearchDepthExceeded(u32),
    #[error("the zero character has no position")]
    ZeroCharacter,
    #[error("ch0 must be positive")]
    RankNotPositive,
    #[error("{0} lies inside the Le Potier cone")]
    InsideCone(String),
    #[error("no real secant of length 3 through the character")]
    NoRealSecant,
    #[error("the right-side last wall is undefined for torsion characters")]
    TorsionRightLast,
    #[error("the triangle is degenerate")]
    DegenerateTriangle,
    #[error("{0} is not primitive")]
    NotPrimitive(String),
    #[error("{0} is not a lattice character")]
    NotLattice(String),
    #[error("no positive decomposition over the flanking pair")]
    DecompositionFailed,
    #[error("not one of the standard exceptional triple forms")]
    NotAKnownTriple,
    #[error("no non-negative dimension vector for this triple")]
    NoNonnegativeSolution,
    #[error("the wall form vanishes on the first exceptional")]
    ZeroOnE1,
    #[error("there is no actual wall")]
    NoWalls,
    #[error("the line is vertical")]
    VerticalLine,
}

pub type Result<T> = std::result::Result<T, Error>;
