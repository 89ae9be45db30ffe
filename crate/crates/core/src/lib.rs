//! Computational verification that `Out(Sym_n)` is trivial for `n ≠ 6` and
//! has order two for `n = 6`, together with the explicit exceptional
//! automorphism built from antipodally labeled icosahedra and its
//! incarnations on `K_6`, the generalized quadrangle `GQ(2,2)` and
//! Tutte's 8-cage.

pub mod aut;
pub mod error;
pub mod graph;
pub mod graph_auto;
pub mod icosa;
pub mod involution;
pub mod k6;
pub mod perm;

pub use error::{Error, Result};
pub use perm::{CycleType, InvolutionClassId, Permutation};
