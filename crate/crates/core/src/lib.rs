//! Power graphs of finite groups.
//!
//! Builds power graphs, proper power graphs and reduced graphs of cyclic
//! groups, computes exact vertex connectivity and component structure, and
//! checks the known separating-set constructions, connectivity formulas and
//! component counts against those computations.

pub mod cli;
pub mod connectivity;
pub mod groups;
pub mod numtheory;
pub mod powergraph;
pub mod theorems;
