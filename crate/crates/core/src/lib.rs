//! Executable workbench for the categorical semantics of differential
//! linear logic.
//!
//! The crate builds the linear simple fibration of a linear-non-linear
//! adjunction over concrete computable models — a relational model with
//! the finite-multiset exponential and an exact polynomial model — and
//! machine-checks every axiom family of the theory at desk scale: the
//! deriving-transform rules, the linear tangent functor axioms, the fibred
//! adjunction and sigma-coproduct laws, and the Cartesian differential
//! operator axioms.

pub mod cat;
pub mod config;
pub mod diff;
pub mod fib;
pub mod lnl;
pub mod mor;
pub mod poly;
pub mod rel;
pub mod term;
pub mod types;
pub mod verify;

pub use mor::{mor_equal, EqVerdict, EvalCtx, ModelError, Mor};
pub use types::{Atoms, Budget, Element, Side, TypeExpr, World};
