//! Embeddings of guest graphs into hypercubes.
//!
//! The crate builds the usual guest families (hypercubes, folded hypercubes,
//! complete multipartite graphs, wheels, products of cliques), evaluates the
//! dilation, wirelength and edge congestion of an embedding into `Q_n`, computes
//! lower bounds in terms of the bisection width, constructs embeddings that attain
//! them, and certifies everything against exhaustive search at small orders.
//!
//! ```
//! use hyperembed::{constructions, metrics};
//!
//! let emb = constructions::wheel_gray_embedding(3).unwrap();
//! let report = metrics::evaluate(&emb);
//! assert_eq!(report.wirelength, 20);
//! assert_eq!(report.dilation, 3);
//! ```

pub mod bounds;
pub mod constructions;
pub mod cube;
mod error;
pub mod family;
pub mod graph;
pub mod matching;
pub mod metrics;
pub mod oracle;
pub mod table;
pub mod verify;

pub use cube::HypercubeVertex;
pub use error::{Error, Result};
pub use family::{Family, FamilyDescriptor};
pub use graph::Graph;
pub use metrics::{Embedding, MetricsReport};
