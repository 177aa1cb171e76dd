//! Injective colorings of outerplanar graphs.
//!
//! An injective coloring gives distinct colors to any two vertices that share
//! a neighbor; its minimum palette is the chromatic number of the
//! common-neighbor graph `G^(2)`. This crate provides:
//!
//! * [`graph`]: the graph type and structural queries (girth, blocks, `G^(2)`, `G^2`),
//! * [`outerplanar`]: recognition, outer-cycle-plus-chords embeddings, faces and end faces,
//! * [`injective`]: validity checkers, exact chromatic oracles and a degree-list colorer,
//! * [`colorers`]: constructive colorers for the bounded-degree / girth classes, and a dispatcher,
//! * [`enumgen`]: exhaustive and seeded-random generation of outerplanar test graphs.

pub mod colorers;
pub mod enumgen;
pub mod graph;
pub mod injective;
pub mod outerplanar;

pub use colorers::{auto_color, ColorerOutcome};
pub use graph::{Girth, Graph};
pub use injective::{Certificate, Coloring, ListAssignment};
pub use outerplanar::{Face, OuterEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("coloring has {got} entries for {expected} vertices")]
    PartialColoring { expected: usize, got: usize },
    #[error("injective chromatic number exceeds cap {cap}")]
    ExceedsCap { cap: usize },
    #[error("no list coloring found")]
    NoColoring,
    #[error("component shape not supported by the degree-list colorer")]
    UnsupportedShape,
    #[error("internal verification failure: {0}")]
    InternalVerificationFailure(String),
    #[error("size guard: n={n} exceeds the limit {max}")]
    SizeGuard { n: usize, max: usize },
    #[error("no graph satisfying the filter was generated")]
    FilterUnsatisfiable,
    #[error("no witness found")]
    NotFound,
}

pub type Result<T> = std::result::Result<T, Error>;
