//! Exact arithmetic for non-Schurian roots of three-vertex quivers.
//!
//! The crate covers Euler-form root arithmetic and sampled generic hom/ext
//! ([`quiver`]), symmetric functions ([`symfunc`]), Grassmannian Chow rings
//! ([`chow`]), the end-to-end analysis of a root given its canonical
//! exceptional decomposition ([`pipeline`]) and Kronecker decompositions and
//! gluing counts ([`gluing`]).

pub mod chow;
pub mod gluing;
pub mod pipeline;
pub mod quiver;
pub mod symfunc;

mod json;
