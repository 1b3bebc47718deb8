//! Loday cohomology of Leibniz algebras over a point: the coboundary with
//! coefficients in a representation or bimodule, the shuffle algebra of scalar
//! cochains with its Cartan calculus, and the Lie quotient by squares.

pub mod algebra;
pub mod cartan;
pub mod cochain;
pub mod quotient;

pub use algebra::{Action, Bimodule, LeibnizAlgebra, Representation};
pub use cartan::{cartan_check, CARTAN_FAMILIES};
pub use cochain::{coboundary, coboundary_bimodule, contraction, lie_derivative, scalars, shuffle_product, LodayCochain};
pub use quotient::{squares_ideal, squares_ideal_quotient, SquaresQuotient};
