//! Segre invariant stratification data for moduli of principal G-bundles
//! on a smooth projective curve of genus at least 2.
//!
//! * [`lattice`]: characters, cocharacters and their pairing.
//! * [`rootdata`]: the classical groups handled, their root systems and π₁.
//! * [`parabolic`]: standard parabolics, Levi blocks, `det ι`, numerical types.
//! * [`segre`]: the Segre value of a single reduction.
//! * [`strata`]: stratum catalog for GL(r), PGL(r), SO(2n), Spin(2n).
//! * [`functor`]: central isogenies and transfer of strata.
//! * [`gl3borel`]: classification of Borel reduction types of rank-3 bundles.
//! * [`cli`]: the `segre-strata` command line.

pub mod cli;
pub mod error;
pub mod functor;
pub mod gl3borel;
pub mod lattice;
pub mod parabolic;
pub mod rootdata;
pub mod segre;
pub mod strata;

pub use error::{Error, Result};
