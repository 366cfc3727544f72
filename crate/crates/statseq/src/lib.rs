//! Status sequences of connected graphs: exact distance/status computation,
//! a family of tree/unicyclic pairs sharing a status sequence, closed-form
//! injectivity criteria, and isomorphism-free enumeration with exhaustive
//! same-sequence search at small orders.

pub mod canon;
pub mod codec;
pub mod construct;
pub mod enumerate;
mod error;
pub mod graph;
pub mod injective;
pub mod oracle;
pub mod prufer;
pub mod search;
pub mod status;

pub use canon::{canonical_form, canonical_form_bounded, CanonicalForm, CANON_BOUND};
pub use construct::{
    build_pair, build_tree, build_unicyclic, closed_form_status, closed_form_table,
    correspondence, ConstructionPair, Parity,
};
pub use enumerate::{
    enum_connected, enum_connected_opt_in, enum_trees, enum_unicyclic, Family, GraphStream,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphClass};
pub use injective::{even_injective, four_window_check, odd_injective, InjectivityVerdict};
pub use search::{find_pairs, verify_pair, PairReport, SearchOptions, Universe};
pub use status::{is_status_injective, status, status_sequence, StatusSequence};
