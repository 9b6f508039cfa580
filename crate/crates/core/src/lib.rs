//! Wall-crossing combinatorics of charged bipartitions.
//!
//! A charged bipartition `|λ, s⟩` is encoded as a two-row tableau
//! ([`tableau`]). Wall crossing swaps entries between the rows and sorts
//! them ([`wallcross`]), which gives the bijection `Φ^∞_s` on bipartitions
//! of a fixed size and its iterate `Θ_{e,s}` over the charges
//! `(s₁, s₂ + ke)`. [`proofstate`] evaluates the invariants behind the fact
//! that `Θ_{e,(0,e/2)}` keeps the first part of the second component of a
//! symmetric bipartition. [`classify`] turns that into certificates that
//! simple modules of rational Cherednik algebras of types B and D are
//! infinite-dimensional. [`verify`] checks the statement exhaustively for
//! small sizes.
//!
//! ```
//! use charged_bipartitions::{theta, Bipartition, Charge};
//!
//! let symmetric = Bipartition::parse("2,1", "2,1").unwrap();
//! let image = theta(&symmetric, 2, Charge::new(0, 1)).unwrap();
//! assert_eq!(image.to_string(), "∅ / 2,2,1,1");
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod partitions;
pub mod proofstate;
pub mod tableau;
pub mod verify;
pub mod wallcross;

pub use classify::{
    certify_infinite_type_b, certify_infinite_type_d, charge_to_params, Certificate, CherednikParamB, Verdict,
};
pub use error::{Error, Result};
pub use partitions::{enumerate_bipartitions, enumerate_symmetric_bipartitions, Bipartition, Partition};
pub use proofstate::{ProofChain, Statement, StatementReport};
pub use tableau::{build_tableau, to_charged_bipartition, Charge, ChargedBipartition, TwoRowTableau};
pub use verify::{run_verification, VerificationReport, VerifyConfig};
pub use wallcross::{apply_swap_sort, phi, swap_select, theta, theta_trajectory, SwapTrace};
