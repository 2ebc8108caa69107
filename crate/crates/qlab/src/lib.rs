//! Exact desk-scale analysis of unit-quadrance graphs D_q over GF(p^n).
//!
//! The graph D_q has vertex set F_q x F_q, with two points adjacent exactly
//! when the quadrance (x2-x1)^2 + (y2-y1)^2 between them equals 1. This
//! crate constructs these graphs for odd prime powers q, computes their
//! geometric, spectral, and colouring invariants exactly, and re-verifies
//! every optimum through independent certificate checkers.
//!
//! Layout:
//! * [`ffield`] - arithmetic in GF(p^n), quadratic characters, traces;
//! * [`geometry`] - quadrance, circles, and the circle-intersection law
//!   with a brute-force counting oracle;
//! * [`qgraph`] - the graph itself, structural witnesses, and exports;
//! * [`spectra`] - eigenvalues via additive characters, a dense numeric
//!   cross-check, and the ratio/Hoffman bounds;
//! * [`combinat`] - certified cliques, independent sets, vertex/edge/
//!   complete colourings, perfection, and Ramsey witnesses;
//! * [`claims`] - one checker per documented claim, the result cache,
//!   and report rendering.

pub mod bitset;
pub mod claims;
pub mod combinat;
pub mod ffield;
pub mod geometry;
pub mod qgraph;
pub mod spectra;

#[cfg(feature = "cli")]
pub mod cli;
