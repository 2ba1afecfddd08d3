//! Exact verification that Hecke-algebra Murphy elements are the edge
//! coefficients of double-row transfer matrices.
//!
//! Everything is computed over the rationals with Laurent-polynomial matrix
//! entries; see the guide in `book/` for a tour.

pub mod baxter;
pub mod error;
pub mod exact_ring;
pub mod hecke;
pub mod report;
pub mod tensor;
pub mod transfer;
pub mod verifier;

pub use error::{Error, Result};

// The guide's code blocks run as doc-tests: one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/hecke.md")]
    mod hecke {}
    #[doc = include_str!("../../../book/src/baxterization.md")]
    mod baxterization {}
    #[doc = include_str!("../../../book/src/transfer.md")]
    mod transfer {}
    #[doc = include_str!("../../../book/src/verifier.md")]
    mod verifier {}
}
