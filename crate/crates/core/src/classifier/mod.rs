//! Numerical invariants, family recognition and degenerations to the
//! biserial algebra.

mod degeneration;
mod family;
mod profile;

pub use degeneration::{
    degeneration_algebra, degeneration_profile, generic_dagger_holds, same_structure,
    verify_degeneration_isomorphism, verify_with_profile, DegenerationProfile, DegenerationVerdict,
};
pub use family::{
    classify, match_family, singular_parameter_probe, triangulation_isomorphisms,
    ClassificationResult, Family, FamilyMatch, SingularParameter, SingularProbe, Witness,
};
pub use profile::{dagger_failures, is_exceptional_triple, v_profile, word_weight, VProfile};
