//! Certifying recognition of probe diamond-free graphs.
//!
//! [`recognize`] answers in `O(nm)` time with either a probe/nonprobe
//! partition plus completion edges, or an ordered vertex sequence inducing
//! one of 17 forbidden subgraphs. Both kinds of answer can be checked
//! independently with [`verify`].

pub mod bench;
pub mod bipartite;
pub mod certificate;
pub mod cli;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod recognize;
pub mod roles;
pub mod split;

pub use bipartite::AuxBipartite;
pub use certificate::{verify_negative, Obstruction, Witness};
pub use error::{GraphError, ParseError, PreconditionError};
pub use graph::{parse_graph, write_graph, Format, Graph};
pub use recognize::{recognize, recognize_with_counts, verify, verify_positive, Certificate, OpCounts, Partition};
