//! Set families, forbidden configurations and exact Turán-number search for
//! k-uniform paths.
//!
//! Families live on the ground set `[n] = {1..n}`; see [`family::SetFamily`].

pub mod config;
pub mod constructions;
pub mod delta;
pub mod detect;
pub mod error;
pub mod family;
pub mod graph;
pub mod kernel;
pub mod packing;
pub mod pattern;
pub mod peel;
pub mod star;
pub mod solver;
pub mod symmetry;
pub mod tree;
pub mod vertex_set;

pub use config::ForbiddenConfig;
pub use error::{Error, Result};
pub use family::{Edge, SetFamily};
pub use vertex_set::VertexSet;
