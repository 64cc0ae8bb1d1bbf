pub mod decomposition;
pub mod dp;
pub mod elimination;
pub mod nice;

pub use decomposition::{decompose, TreeDecomposition};
pub use dp::{signature_bound, solve_tw_dp, solve_with_decomposition, DpOptions, DpStats};
pub use nice::{make_nice, NiceDecomposition, NiceKind, NiceNode};
