//! Block-diagonal matching fields for `3 × n` matrices.
//!
//! The crate builds the monomial ideals `M_a` attached to a composition `a`
//! of `n`, the weight orders that realise them as initial ideals of the
//! maximal minors, and checks the resulting Gröbner degeneration in exact
//! arithmetic. It also computes Betti numbers (from linear quotients and from
//! an independent homology oracle), the co-interval hypergraph structure, and
//! degree-wise kernels of the induced monomial Plücker maps.

pub mod algebra;
pub mod cellular;
pub mod error;
pub mod feasibility;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod matching_field;
pub mod resolution;
pub mod toric;

pub use algebra::{Family, Monomial, Polynomial, VariableId, WeightOrder};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use matching_field::{BlockStructure, GeneratorTriple};
pub use resolution::BettiTable;
pub use toric::PluckerMap;
