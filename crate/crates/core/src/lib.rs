//! Kneser-type graph families, their automorphism groups, and executable
//! checks of the structural claims made about them.
//!
//! ```
//! use kneser_sym::families::{build, FamilySpec};
//! use kneser_sym::search::automorphism_group;
//!
//! let g = build(&"H(5,2)".parse::<FamilySpec>().unwrap()).unwrap();
//! assert_eq!(automorphism_group(&g).unwrap().order(), 240u32.into());
//! ```

pub mod combinatorics;
pub mod families;
pub mod graph;
pub mod perm;
pub mod search;
pub mod theorems;

use thiserror::Error;

/// Any error raised by this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] perm::PermError),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Family(#[from] families::FamilyError),
    #[error(transparent)]
    Search(#[from] search::SearchError),
    #[error(transparent)]
    Claim(#[from] theorems::ClaimError),
}
