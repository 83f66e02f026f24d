//! q-characters of extended snake modules of type B_N, through
//! non-overlapping paths and super skew tableaux.

pub mod error;
pub mod lattice;
pub mod monomial;
pub mod path;
pub mod sl2;
pub mod snake;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Algebra, Offset, PlanePoint, SpectralPoint};
pub use monomial::{Monomial, QCharacter, Weight};
pub use path::{LetterSet, LetterSets, Path, PathModel, PathSet};
pub use snake::{PositionClass, SnakeSeq};
pub use tableau::{Letter, SkewDiagram, Tableau};
pub use verify::{Condition, ThinCriteria, Verdict, Witness};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/monomials.md")]
    mod monomials {}
    #[doc = include_str!("../../../book/src/sl2.md")]
    mod sl2 {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/snakes.md")]
    mod snakes {}
    #[doc = include_str!("../../../book/src/verifier.md")]
    mod verifier {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
