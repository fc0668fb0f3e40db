//! Random m-out graphs and Hamilton cycles.
//!
//! The crate samples the m-out random digraph model (each vertex picks `m`
//! uniform out-neighbours with replacement) together with a split variant in
//! which the third arc of a random vertex subset is held back as a reservoir.
//! On top of that it provides:
//!
//! * exact maximum simple 2-matchings through a blossom matching on an
//!   edge-subdivision gadget, with an exhaustive Tutte–Berge style dual;
//! * Pósa rotations, END-set closure and rotation level traces;
//! * the extension–rotation procedure that turns a 2-matching into a
//!   Hamilton cycle using reservoir arcs, plus a practical all-edges variant;
//! * structural diagnostics, brute-force oracles for small graphs;
//! * rigorous grid certification of the analytic inequalities used to bound
//!   2-matching deficiency and independence number;
//! * a seeded, order-independent Monte Carlo harness.

pub mod certificates;
pub mod constants;
pub mod diagnostics;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod pipeline;
pub mod rng;
pub mod rotation;
pub mod sampler;

pub use error::{Error, Result};
pub use graph::{Digraph, Graph};
