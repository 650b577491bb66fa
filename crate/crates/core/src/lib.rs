//! Weighted surface algebras of triangulation quivers.
//!
//! The crate builds the finite-dimensional algebras from quiver data, checks
//! their structure (basis, socle, symmetrizing form, Cartan matrix), computes
//! one-sided and bimodule resolutions, and classifies the algebras by their
//! degenerations to biserial algebras.

pub mod algebra;
pub mod classifier;
pub mod error;
pub mod field;
pub mod linalg;
pub mod quiver;
pub mod resolution;

pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, PrimeField, Rationals};
pub use quiver::{SpecDocument, SurfaceAlgebraSpec, TriangulationQuiver};
