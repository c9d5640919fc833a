//! Exact visibility graphs of polygons and their colourings.
//!
//! - [`geom`]: rational points, predicates, polygon validation, triangulation.
//! - [`visibility`]: closed-region visibility and visibility graphs.
//! - [`graph`]: bottleneck pairs, decomposition, the brute-force oracle.
//! - [`coloring`]: forced 3-colouring and the 4-colouring decision procedure.
//! - [`gadgets`]: hardness instance generators and their verifiers.
//! - [`io`] and [`render`]: text formats and SVG output.

mod bits;
pub mod coloring;
pub mod error;
mod exec;
pub mod gadgets;
pub mod geom;
pub mod graph;
pub mod io;
pub mod render;
pub mod visibility;

pub use bits::Bits;
pub use exec::Exec;

/// Version of the text file formats.
pub const FORMAT_VERSION: u32 = 1;
