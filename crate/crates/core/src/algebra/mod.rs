//! Construction of the weighted surface algebra, its biserial degeneration
//! and its string algebra as tables over a canonical basis.

mod build;
pub mod json;
mod paths;
mod quotient;
mod relations;
mod structure;
mod table;
pub mod walks;

pub use build::{
    build_algebra, build_algebra_with_cap, build_degeneration_member, build_raw, default_cap,
    expected_dimension, quotient_dimension,
};
pub use paths::PathSpace;
pub use relations::{
    canonical_basis, degeneration_relations, has_zero_relation_f, has_zero_relation_g, relations,
    AlgebraKind, CanonicalElement, Relation,
};
pub use structure::{
    cartan_matrix, gabriel_arrow_counts, gabriel_quiver, gram_matrix, integer_determinant, socle,
    socle_report, symmetric_report, symmetrizing_form, SocleReport, SymmetricReport,
    SymmetrizingForm,
};
pub use table::{AlgebraTable, BasisElement};
