//! Exact fusion rules for free orthogonal quantum groups, their free
//! complexifications and free products, plus non-crossing partition
//! calculus for intertwiner spaces.

pub mod cli;
pub mod complexify;
pub mod fusion_ring;
pub mod models;
pub mod partitions;
pub mod poly;
pub mod rep_ring;
pub mod selftest;
pub mod words;
