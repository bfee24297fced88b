//! Exact computations for Jacobi-Jordan algebras with weighted Rota-Baxter operators:
//! axiom checks, induced structures, constraint systems and low-degree cohomology.

pub mod algebra;
pub mod catalog;
pub mod check;
pub mod cohomology;
pub mod error;
pub mod instance;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod rep;
pub mod report;
pub mod rota_baxter;

pub use algebra::{AlgebraMorphism, JjAlgebra};
pub use check::{CheckOutcome, Witness};
pub use error::{Error, Result};
pub use instance::InstanceFile;
pub use linalg::{Matrix, SubspaceBasis, Vector};
pub use rational::Rational;
pub use rep::{RbRepresentation, Representation};
pub use rota_baxter::{rb_constraint_system, PolySystem, RbOperator};
