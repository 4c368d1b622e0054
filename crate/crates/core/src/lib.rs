//! Simulation toolkit for grant-free random-access user activity detection
//! over continuously time/frequency-varying channels.
//!
//! The crate is organized around the stages of the detection pipeline:
//!
//! - [`channelsim`]: sum-of-sinusoids multipath channel synthesis on an OFDM
//!   time-frequency grid, mapped to length-L channel vectors.
//! - [`pilots`]: unit-energy sub-pilot banks, hopping pattern generation
//!   (uniform-random and balanced configuration-model), pilot matrix assembly.
//! - [`subspace`]: low-dimensional channel bases (learned PCA, block-fading,
//!   bilinear, DFT), effective pilots, and approximation-error metrics.
//! - [`detector`]: covariance-based ML activity detection by coordinate
//!   descent, with and without pilot hopping.
//! - [`energy`]: the massive-MIMO energy baseline (matched-filter energies,
//!   sparse sensing matrix, NNLS / box-constrained LASSO recovery).
//! - [`wlrma`]: weighted low-rank covariance approximation solvers (EM and
//!   sequential approximation).
//! - [`harness`]: end-to-end Monte-Carlo trial engine, ROC computation,
//!   scenario configuration and persistence.

pub mod channelsim;
pub mod detector;
pub mod energy;
mod error;
pub mod harness;
pub mod io;
pub mod mat;
pub mod pilots;
pub mod subspace;
pub mod wlrma;

pub use error::{Error, Result};
