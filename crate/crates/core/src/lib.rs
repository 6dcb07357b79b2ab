//! Exact computations with small triangulated categories, their tilting
//! subcategories and the abelian quotient categories they produce.
//!
//! The ground objects are bound quiver algebras with monomial relations
//! ([`quiver`]). Their module categories ([`modcat`]) feed finite linear
//! category skeletons ([`lincat`]), from which stable categories
//! ([`stablecat`]), derived and cluster categories ([`derivedcat`]) and
//! quotients by tilting subcategories ([`quotient`]) are built.
//!
//! All arithmetic is exact ([`exactla`]).

pub mod cli;
pub mod corpus;
pub mod derivedcat;
pub mod exactla;
pub mod lincat;
pub mod modcat;
pub mod quiver;
pub mod quotient;
pub mod report;
pub mod stablecat;
pub mod tilting;

pub use exactla::{Field, Mat, Scalar, Subspace};
pub use quiver::{BoundQuiverAlgebra, Path, Quiver};
