//! Composition superalgebras over small exact fields.

pub mod fields;
pub mod linalg;
pub mod abelian;
pub mod superalgebra;
pub mod constructions;
pub mod axioms;
pub mod gradings;
pub mod search;
pub mod catalog;
pub mod report;
pub mod cli;
