//! Finite plasmas, Dynkin systems, partitions, truncated F1-modules and their
//! deloopings, with exhaustive checks of the relations between them.

pub mod deloop;
pub mod descriptor;
pub mod dynkin;
pub mod error;
pub mod finset;
pub mod gammaset;
pub mod geometry;
pub mod partitions;
pub mod plasma;
pub mod verify;

pub use error::{Error, Result};
