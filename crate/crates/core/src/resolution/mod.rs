//! Right modules, syzygies and periodic resolutions, one-sided and over the
//! enveloping algebra.

pub mod bimodule;
mod iso;
mod module;
mod simple;

pub use iso::{hom_space, modules_isomorphic, IsoVerdict};
pub use module::{
    direct_sum, is_homomorphism, kernel, projective_cover, projective_module, simple_module,
    syzygy, syzygy_with_cover, top_generators, ModuleMap, ProjectiveCover, RightModule,
};
pub use simple::{
    expected_shape, ext2_dims, omega_period_of_simple, resolution_shape, resolve_simple,
    ResolutionShape, ShapeCase, SimpleResolution,
};
