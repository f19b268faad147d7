//! Desk-scale simulator for resonant magneto-quasistatic two-coil links.
//!
//! The pipeline mirrors how a necklace transmitter and a contact-lens
//! receiver are analysed without a field solver:
//!
//! * [`geometry`] builds and poses filament models of spiral coils.
//! * [`lumped`] estimates inductance, skin-effect resistance and Q.
//! * [`coupling`] integrates fields, flux and mutual inductance between posed coils.
//! * [`circuit`] solves the series-series resonant two-mesh circuit.
//! * [`analysis`] turns spectra into bandwidth, SNR and capacity figures and
//!   runs misalignment and impedance studies.
//! * [`scenario`] ties the necklace/lens placement to a concrete link.
//!
//! World convention: `z` vertical, `x` forward (out of the face), `y` lateral.

pub mod analysis;
pub mod circuit;
pub mod coupling;
pub mod error;
pub mod geometry;
pub mod lumped;
pub mod scenario;
mod sum;

pub use error::{Error, Result};

/// Permeability of free space (H/m).
pub const MU0: f64 = 4.0e-7 * std::f64::consts::PI;

/// `MU0 / (4 pi)` (H/m).
pub const MU0_OVER_4PI: f64 = 1.0e-7;

pub type Vec3 = nalgebra::Vector3<f64>;
