//! Word-representants of graphs and of their Cartesian and rooted products.
//!
//! Two letters `x`, `y` alternate in a word when deleting every other letter
//! leaves `xyxy…` or `yxyx…`; a word represents a graph when its letters are
//! the vertices and letters alternate exactly on edges. This crate builds
//! representants of product graphs from representants of their factors via
//! morphisms ([`cartesian`]) and occurrence-based substitutions ([`rooted`]),
//! reports each construction's length against its upper bound, and finds
//! minimum-length representants of small graphs by exhaustive search
//! ([`oracle`]).

pub mod cartesian;
pub mod error;
pub mod graph;
pub mod letter;
pub mod oracle;
pub mod products;
pub mod report;
pub mod rooted;
pub mod word;

pub use error::{Error, Result};
pub use graph::{Graph, StandardKind};
pub use letter::{Letter, PairVertex};
pub use report::{BoundReport, Construction, Factors};
pub use word::Word;
