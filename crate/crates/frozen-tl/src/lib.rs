//! Exact computational model of the diagram algebra of crossingless
//! matchings in which every circle and every squiggle evaluates to zero.
//!
//! The crate provides:
//!
//! * [`diagram`] — canonical diagrams, enumeration with filters, and the
//!   partial composition monoid;
//! * [`algebra`] — integer linear combinations of diagrams and the graded,
//!   idempotented algebra structure;
//! * [`linalg`] — exact integer matrices, ranks and homology dimensions;
//! * [`modules`] — projective, standard and simple modules through their
//!   graded pieces, actions, multiplicities and the hom pairing;
//! * [`homology`] — the explicit resolutions, exactness certification, Ext
//!   dimensions and derived truncation functors;
//! * [`cheb`] — the Grothendieck-group shadow: Chebyshev polynomials of the
//!   second kind, the X/Y base change and the Catalan bilinear form;
//! * [`presentation`] — quiver generators, quadratic relations and Koszul
//!   linearity evidence;
//! * [`checks`] — the aggregated verification suite used by the CLI and the
//!   acceptance tests.

pub mod algebra;
pub mod cheb;
pub mod checks;
pub mod diagram;
pub mod homology;
pub mod linalg;
pub mod modules;
pub mod presentation;

pub use algebra::AlgebraElement;
pub use diagram::{enumerate, Diagram, DiagramError, EnumFilter};
pub use linalg::ExactMatrix;
pub use modules::ModuleId;
