pub mod geometry;
pub mod harness;
pub mod homology;
pub mod rng;
pub mod search;
pub mod simplicial;
