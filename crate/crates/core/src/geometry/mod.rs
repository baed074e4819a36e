//! Integer lattices and exact linear programming.

pub mod lattice;
pub mod linalg;
pub mod lp;
