//! Exact symbolic calculator for families Seiberg-Witten invariants of
//! fiberwise connected sums.
//!
//! The pipeline runs bottom-up: a finite model of `H*(B)`
//! ([`ring`]), polynomials and Laurent series in the equivariant classes
//! `x` and `y` ([`poly`]), characteristic classes of virtual bundles
//! ([`classes`]), the projective bundle `P(V1 ⊕ V2)` with its circle action
//! ([`projective`]), two-component localization ([`localization`]) and
//! finally the connected-sum formula ([`sw`]). Everything is exact integer
//! arithmetic.

pub mod classes;
pub mod commands;
pub mod config;
pub mod error;
pub mod localization;
pub mod poly;
pub mod projective;
pub mod random;
pub mod report;
pub mod ring;
pub mod sw;
pub mod verify;

pub use classes::{OrientedRealBundle, VirtualBundle};
pub use commands::{run_command, RunOptions};
pub use config::{parse_config, Config};
pub use error::{Error, Result};
pub use poly::{EquivClass, LaurentClass};
pub use projective::{build_projective_model, Locus, ProjectiveModel};
pub use report::Report;
pub use ring::{ring_preset, BaseClass, Ring};
pub use sw::{MonopoleSideData, SWFunctional};
