//! Finite groups, their non-commuting graphs, and the size ω(G) of a
//! largest set of pairwise non-commuting elements.
//!
//! ω(G) is computed three ways: exact maximum clique search on the
//! non-commuting graph, a cover of G by centralizers (valid in AC-groups),
//! and the closed values for minimal non-abelian groups (`p + 1` for
//! p-groups, `|Q| + 1` for the `P ⋉ Q` family).

pub mod arith;
pub mod bits;
pub mod catalog;
pub mod constructors;
pub mod error;
pub mod format;
pub mod group;
pub mod ncgraph;
pub mod omega;
pub mod perm;
pub mod report;
pub mod structure;

pub use catalog::{build_group, CatalogEntry, ExpectedKind, GroupSpec};
pub use constructors::Builder;
pub use error::{Error, Result};
pub use group::{Elem, ElementSet, GroupTable, SubgroupShape, DEFAULT_ORDER_CAP};
pub use ncgraph::{ExportFormat, NonCommutingGraph};
pub use omega::{Method, OmegaResult};
pub use perm::Perm;
pub use report::{GroupRecord, RunReport};
pub use structure::{GroupKind, StructureReport};
