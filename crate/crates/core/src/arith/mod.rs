//! Exact arithmetic: value group, rings and fields, univariate polynomials,
//! valuated fields with truncated completions, characteristic polynomials.

pub mod charpoly;
pub mod poly;
pub mod ratfunc;
pub mod ring;
pub mod valued;
pub mod value;
