//! Sampled functions, closed-form test families, involutions, and the lift
//! and restriction maps between groups and their companions.

pub mod gridfn;
pub mod involution;
pub mod lifts;
pub mod profile;

pub use gridfn::{Evaluator, GridFunction};
pub use profile::{Profile, SeparableTerm, TestFunction};
