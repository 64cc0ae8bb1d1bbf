pub mod engine;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod kernels;
pub mod oracle;
pub mod rational;
pub mod solvers;
pub mod transforms;
pub mod treewidth;

pub use error::{Error, Result};
pub use rational::Rational;
