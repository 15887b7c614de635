//! Traveling-wave fronts of scalar degenerate diffusion-convection-reaction
//! equations.
//!
//! The profile equation `(D(φ)φ')' + (c − h(φ))φ' + g(φ) = 0` for a decreasing
//! front connecting the equilibria 1 and 0 reduces, through `z(φ) = D(φ)φ'`,
//! to the singular first-order equation
//!
//! ```text
//! ż(φ) = h(φ) − c − q(φ)/z(φ),   q = D·g,   z < 0 on (0,1).
//! ```
//!
//! This crate solves that reduction numerically: it locates the critical speed
//! `c*` below which no front exists, the admissible-boundary-value threshold
//! `β(c)` and the slope-transition threshold `β̂(c)`, reconstructs the front
//! profile `φ(ξ)` by quadrature, and decides whether the front is classical or
//! sharp at each equilibrium.
//!
//! The crate is `no_std`-compatible (with `alloc`); all IO, serialization and
//! the command-line driver live in the companion `fronts-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub(crate) mod math;
pub mod model;
pub mod oracle;
pub mod poly;
pub mod profile;
pub mod singular_ode;
pub mod thresholds;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
