//! Exact combinatorics of 321-avoiding involutions and their relatives:
//! pattern-avoiding permutation classes, the Robinson-Schensted
//! correspondence, Dyck and Grand Dyck paths, integer partitions with hook
//! decompositions, and the polynomial identities tying them together, plus a
//! brute-force verification harness that checks every identity at desk scale.
//!
//! The central pipeline is the statistic-preserving composition
//!
//! ```text
//! I_n(321) --rho--> P_n --xi--> G_n --psi^{-1}--> {partitions in B_n}
//!   Des            Peak        Peak                hd
//! ```
//!
//! sending descent sets to hook decompositions and the major index to the
//! area of the Young diagram.

pub mod chain;
pub mod distribution;
pub mod error;
pub mod partition;
pub mod path;
pub mod perm;
pub mod poly;
pub mod render;
pub mod tableau;
pub mod verify;

pub use chain::{map_chain, ChainStage, TraceEntry, TraceObject};
pub use distribution::{distribution, DistributionTable, StatKind};
pub use error::{Error, Result};
pub use partition::{
    boundary_path, partition_from_boundary, psi, psi_inverse, BoxSpec, HookDecomposition, Partition,
};
pub use path::{
    dyck_to_s321, enumerate_paths, rho, rho_inverse, s321_to_dyck, xi, xi_inverse, LatticePath,
    PathKind, Step,
};
pub use perm::{enumerate, members, Backend, DescentProfile, PermClass, Permutation};
pub use poly::{QPoly, SubsetPoly};
pub use render::{render, render_with, RenderFormat, RenderObject, RenderOptions};
pub use tableau::{involution_transpose, rs_correspondence, rs_inverse, StandardTableau};
pub use verify::{run_suite, suite_names, CheckRecord, CheckStatus, VerificationReport};
