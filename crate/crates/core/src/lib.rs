//! Leavitt path algebras of finite hypergraphs.
//!
//! The crate provides exact normal forms, nod-path bases and growth counts,
//! Gelfand-Kirillov dimension via quasi-cycles, ring-theoretic property reports,
//! and the nonstable K-theory (V-monoid, `K_0`, graded covers).

pub mod algebra;
pub mod basis;
pub mod cli;
pub mod error;
pub mod gk;
pub mod hypergraph;
pub mod letters;
pub mod lexer;
pub mod monoid;
pub mod props;
pub mod scalar;

pub use algebra::{Element, LeavittAlgebra, Word};
pub use error::{Error, Result, StepBudget};
pub use hypergraph::{EdgeId, Hypergraph, VertexId};
pub use letters::{Kind, Letter};
pub use scalar::{Field, Scalar};
