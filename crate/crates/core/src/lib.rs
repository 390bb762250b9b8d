//! Ribbon graphs, twisted duality and vertex polynomials.
//!
//! A [`RibbonGraph`] is a signed rotation system. The [`duality`] module
//! implements partial duals and partial Petrials and the per-edge S₃ action
//! they generate; [`vertex_poly`] computes the generating functions of
//! vertex counts over the orbits of that action, and [`algebraic`] holds
//! the delta-matroid, interlace, transition and signed-intersection-graph
//! machinery that cross-checks them.

pub mod algebraic;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod poly;
pub mod ribbon;
pub mod verify;
pub mod vertex_poly;

pub use error::{Error, Result};
pub use poly::{Polynomial, Rational, RationalPolynomial};
pub use ribbon::{is_isomorphic, EdgeId, End, RibbonGraph, Side, Slot};
pub use vertex_poly::{vertex_polynomial, Method, SubgroupTag};
