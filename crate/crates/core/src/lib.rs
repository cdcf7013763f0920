//! Finite biquandles, Gauss codes of virtual links, colorings, reduced
//! Yang-Baxter cohomology and 2-cocycle invariants.

pub mod biquandle;
pub mod cli;
pub mod cohomology;
pub mod coloring;
pub mod error;
pub mod gauss;
pub mod invariant;
pub mod linalg;
pub mod presentation;
pub mod search;

pub use biquandle::{alexander_biquandle, read_biquandle, validate_biquandle, write_biquandle, Biquandle, BlockConvention, OpKind};
pub use coloring::{counting_invariant, enumerate_colorings, Coloring};
pub use error::{Error, Result};
pub use gauss::{parse_gauss_code, GaussCode, GaussEntry, Role, Sign};
pub use linalg::{Field, FieldSpec, Scalar};
pub use presentation::{knot_presentation, reduce_presentation, Presentation, Relation, Word};
