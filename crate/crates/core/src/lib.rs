//! Geodesic lengths, geodesic alphabets, Parikh images and shortlex
//! normal forms in Coxeter groups, right-angled Coxeter groups and graph
//! groups, plus the word problem of free partially commutative inverse
//! monoids.
//!
//! Every algorithm has a brute-force counterpart in [`oracle`] that shares
//! no code with it.

pub mod alphabet;
pub mod coxeter;
pub mod cyclotomic;
pub mod error;
pub mod fim;
pub mod interval;
pub mod oracle;
pub mod racg;
pub mod rewriting;
pub mod traces;

pub use alphabet::{
    extend_independence, parse_group_spec, parse_word, CoxeterMatrix, ExtendedIndependence, GroupKind, GroupSpec,
    Independence, Letter, Word,
};
pub use coxeter::{CoxeterSystem, GeoMatrix, GeodesicWalker, Step};
pub use cyclotomic::{
    crr_reconstruct, cyc_is_zero_at_zeta, cyc_sign_real, CyclotomicElement, CyclotomicRing, Residues, Sign,
};
pub use error::{Error, Result};
pub use fim::{render_munn_set, InverseMonoid, MunnSet};
pub use oracle::{Oracle, RawWord};
pub use racg::{GraphGroup, IntVector, RightAngledCoxeter};
pub use rewriting::{Rule, TraceRewritingSystem};
pub use traces::{DependenceGraph, Symbol, Trace, TraceMonoid};
