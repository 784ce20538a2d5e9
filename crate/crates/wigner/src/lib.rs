//! Phase-space quantum mechanics at desk scale.
//!
//! The crate represents quantum states as Wigner functions `W(x, p)` on a
//! periodic phase-space grid and provides:
//!
//! - the Wigner transform of wavefunctions and density matrices, with
//!   marginals, overlaps, and expectation values ([`transform`]);
//! - the quadratic entropy `S₂ = 1 - (2πħ)^D ∫ W²` together with its local
//!   density/flux, the Tsallis family, classical and Von Neumann reference
//!   entropies, and the flat / truncated-linear extremizers ([`entropy`]);
//! - Gaussian-kernel smoothing (Husimi construction), admissibility witness
//!   tests, and closed-form cross-checks ([`smoothing`]);
//! - exact harmonic-oscillator states used as oracles throughout the test
//!   suite ([`oscillator`]);
//! - a split-step pseudo-spectral integrator for the Wigner equation with
//!   conservation monitors ([`dynamics`]).
//!
//! Everything is built on the grid/transform layer in [`grid`], which fixes
//! the discretization conventions once: `dλ = 2 dx`, `dp = 2πħ/(npts dλ)`,
//! rectangle-rule quadrature, periodic boxes.

pub mod dynamics;
pub mod entropy;
pub mod error;
mod fft;
pub mod grid;
pub mod io;
pub mod oscillator;
pub mod smoothing;
pub mod transform;
pub mod verify;

pub use error::{Result, WignerError};
pub use grid::{convolve, fourier2, make_grid, Field2D, GridSpec, PhaseGrid, SpectralField};
