//! Exact algebra for invertible polynomials, their matrix factorizations,
//! frame series and Coxeter data, together with a verified catalog.

// Row operations read one row while writing another.
#![allow(clippy::needless_range_loop)]

pub mod invertible;
pub mod linalg;
pub mod poly;
pub mod coxeter;
pub mod matfac;
pub mod series;
pub mod orbits;
pub mod catalog;
pub mod cli;
