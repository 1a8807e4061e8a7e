//! Nerves of covers of finite simplicial complexes, carriers between
//! covers, carried simplicial maps, and exact integer homology used to
//! check nerve-theorem style equivalences.

pub mod carrier;
pub mod complex;
pub mod cover;
pub mod error;
pub mod gallery;
pub mod homology;
pub mod json;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
pub use verdict::Verdict;
