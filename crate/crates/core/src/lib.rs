//! Spectral characterization toolkit for jellyfish graphs and related families.
//!
//! A jellyfish graph `JFG(p, q)` is the cycle `C_q` with `p` pendant leaves
//! attached to every cycle vertex (equivalently, `q` stars `K_{1,p}` coalesced
//! at their centers with the cycle's vertices). This crate provides everything
//! needed to study such graphs through the spectra of their adjacency (`A`),
//! Laplacian (`L = D - A`) and signless Laplacian (`Q = D + A`) matrices:
//!
//! * [`graph`]: graph representation, structured-family generators, graph
//!   operations and combinatorial counting;
//! * [`graph6`]: the graph6 interchange format;
//! * [`exact`]: exact integer linear algebra: characteristic polynomials,
//!   determinants, spectral moments, spanning-tree counts;
//! * [`spectra`]: a dense symmetric eigensolver, the closed-form jellyfish
//!   `Q`-spectrum and eigenvalue bound checks;
//! * [`invariants`]: graph invariants and exact cospectrality predicates;
//! * [`search`]: exhaustive enumeration up to isomorphism and the
//!   cospectral-mate search harness.
//!
//! Cospectrality is decided exactly: two graphs are cospectral for a matrix
//! kind if and only if the integer characteristic polynomials agree
//! coefficientwise. Floating-point spectra are used for eigenvalue bounds and
//! closed-form cross-checks, never as the source of truth.

pub mod exact;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod search;
pub mod spectra;

pub use exact::{CharPoly, IntMatrix, LinalgError, MatrixKind, MomentVector};
pub use graph::{DegreeSequence, Graph, GraphError, JellyfishParams, SubgraphCounts};
pub use graph6::Graph6Error;
pub use invariants::InvariantSummary;
pub use search::{MateReport, SearchError, SearchSpec};
pub use spectra::{ClosedFormQSpectrum, Mu1Bounds, SpectraError, Spectrum};
