//! The varietal hypercube `VQ_n`: adjacency oracles and builders, explicit
//! automorphism constructions with a vertex-transport algorithm, and the
//! graph analyses used to check them.
//!
//! ```
//! use vqnet::automorphism::{is_automorphism, transport};
//! use vqnet::topology::VertexLabel;
//!
//! let x: VertexLabel = "000000".parse().unwrap();
//! let y: VertexLabel = "110101".parse().unwrap();
//! let sigma = transport(x, y).unwrap();
//! assert_eq!(sigma.apply(x).unwrap(), y);
//! assert!(is_automorphism(&sigma).unwrap().is_ok());
//! ```

pub mod analysis;
pub mod automorphism;
pub mod error;
mod search;
pub mod topology;

pub use automorphism::Automorphism;
pub use error::{Error, Result};
pub use topology::{Graph, VertexLabel};
