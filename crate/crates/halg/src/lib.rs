//! Exact rational computations for homotopy Lie and Leibniz algebras.
//!
//! The crate is organised bottom-up: [`graded`] supplies scalars, graded
//! spaces and sparse multilinear maps; [`coalgebra`] builds the free Zinbiel
//! and symmetric coalgebras on top; [`infinity`] checks higher structures and
//! their morphisms; [`two_term`] and [`convolution`] treat the 2-term theory
//! and its Maurer-Cartan description; [`loday`] computes Leibniz cohomology.

pub mod cli;
pub mod coalgebra;
pub mod convolution;
pub mod error;
pub mod graded;
pub mod infinity;
pub mod io;
pub mod loday;
pub mod report;
pub mod sample;
pub mod two_term;

pub use error::{HalgError, Result};
