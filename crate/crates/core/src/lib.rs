//! Constructions, verifiers and bounds for (A,B)-quadruple systems and
//! (n,4,3,4)-lottery designs.
//!
//! An (A,B)-system is a family of 4-sets on `A ∪ B` such that every triple with
//! at least two points in `A` lies inside some block; `f(a,b)` is the least
//! size of one. Three of them glue into a lottery system, see [`lottery`].

pub mod absystems;
pub mod block;
pub mod combin;
pub mod designs;
pub mod error;
pub mod format;
pub mod general_r;
pub mod lottery;
pub mod oracle;
pub mod registry;

pub use block::{Block, BlockSystem};
pub use error::{Error, Result};
pub use format::DesignFile;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/designs.md")]
    mod designs {}
    #[doc = include_str!("../../../book/src/absystems.md")]
    mod absystems {}
    #[doc = include_str!("../../../book/src/lottery.md")]
    mod lottery {}
    #[doc = include_str!("../../../book/src/general_r.md")]
    mod general_r {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
