//! Forest complexes of graphs, polyhedral joins, exact integral homology and
//! checks of closed-form homotopy-type predictions against brute force.

pub mod complex;
pub mod error;
pub mod formula;
pub mod graph;
pub mod homology;
pub mod verify;

pub use complex::{forest_complex, forest_complex_with_budget, polyhedral_join, PairFamily, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{lex_product, DegreeBound, Graph};
pub use homology::{reduced_betti, BettiVector};
