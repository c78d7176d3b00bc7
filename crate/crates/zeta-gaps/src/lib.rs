//! Constants and bounds for large gaps between critical-line zeros of the
//! Riemann zeta function.
//!
//! The crate computes, from first principles and in exact arithmetic where
//! the quantities are exact:
//!
//! - the random-matrix moment coefficients `b(h,k)` (rational) and the
//!   arithmetic Euler-product factor `a(k)`, together with the published
//!   tables they are checked against ([`rmt`]);
//! - the analytic constants of three functional inequalities: the
//!   Brnetic-Pecaric integral `I(k)`, the Agarwal-Pang Gamma-ratio constant,
//!   and the Yang Opial factor ([`wirtinger`]);
//! - every resulting lower bound for the normalized gap quantity `Λ`,
//!   unconditional and conditional, with comparisons against the published
//!   values ([`bounds`]);
//! - numerical Hardy Z-function evaluation, critical-line zero location,
//!   gap statistics and empirical moments ([`hardy`]);
//! - randomized property checks of the three inequalities on trial
//!   functions with exact boundary zeros ([`verify`]).
//!
//! The `zeta-gaps` binary exposes all of this behind `constants`, `bounds`,
//! `zeros`, `moments` and `verify` subcommands with reproducible JSON/CSV
//! output; see [`cli`].

pub mod bounds;
pub mod cli;
pub mod hardy;
pub mod quad;
pub mod rational;
pub mod rmt;
pub mod special;
pub mod verify;
pub mod wirtinger;

pub use bounds::{GapBound, Method};
pub use quad::QuadratureResult;
pub use rational::{ExactRational, PiScaled};
pub use rmt::MomentCoefficients;
