//! Langford and extended Skolem sequences built from smaller ones through
//! products of labeled digraphs with super edge-magic families, plus the
//! brute-force oracles used to check the resulting counting bounds.

pub mod census;
pub mod cli;
pub mod construct;
pub mod digraphs;
pub mod sem;
pub mod sequences;

pub use digraphs::{oxh_product, ArcAssignment, Digraph};
pub use sequences::{validate_extended, validate_langford, ExtendedSkolemSeq, LangfordSeq};
