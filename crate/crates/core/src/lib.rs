//! Exact construction of root systems, Chevalley bases and compact real
//! forms of simple Lie algebras, and the classification of which
//! quasi-split forms have `w ∘ psi = -1` on the root system (equivalently a
//! compact inner form, a compact Cartan subgroup, discrete series).
//!
//! All arithmetic is over Q or Q(i); nothing is floating point.
//!
//! ```
//! use lieform::{classify, parse_type};
//!
//! let rec = classify(&parse_type("A3^2").unwrap()).unwrap();
//! assert!(rec.condition_v);
//! assert!(rec.witness.unwrap().passed());
//! ```

pub mod arith;
pub mod chevalley;
pub mod classifier;
pub mod cli;
pub mod compact_form;
pub mod error;
pub mod root_system;
pub mod weyl;

pub use arith::{conj, is_negative_definite, GaussianRational, Rational, SymMatrix};
pub use chevalley::{
    bracket, build_constants, chevalley_involution, diagram_action, weyl_involution, AlgebraElement, Automorphism,
    StructureConstants,
};
pub use classifier::{classify, condition_v, full_table, ClassificationRecord, ExceptionList};
pub use compact_form::{certify_compact, compact_basis, killing_gram, CompactBasis, CompactCertificate};
pub use error::{Error, Result};
pub use root_system::{cartan_matrix, generate_roots, parse_type, DynkinType, Family, Root, RootSystem};
pub use weyl::{longest_element, minus_w0, DiagramAutomorphism, WeylElement};
