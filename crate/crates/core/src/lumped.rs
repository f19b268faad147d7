//! Lumped electrical parameters of a spiral coil: inductance, skin-effect
//! resistance and quality factor.
//!
//! Two inductance estimators are provided. The modified Wheeler expression
//! takes lengths in meters and converts them to inches (factor 39.37) to
//! produce microhenries, which are then scaled to henries (factor 1e-6):
//!
//! ```text
//! L = N^2 (D_o - N(d+s))^2 / (16 D_o + 28 N(d+s)) * 39.37e-6      [H]
//! ```
//!
//! The numerator carries the mean diameter squared. With it the lens coil
//! evaluates to 0.386 uH, in line with its known 0.4 uH. Without the square
//! the result is off by a factor of about 90. The current-sheet expression is
//! pure SI and is the default estimator.
//!
//! Resistance accounts for skin effect only (proximity effect is ignored),
//! so it underestimates the true AC resistance of tightly wound coils.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::positive;
use crate::geometry::{CoilShape, CoilSpec};
use crate::{Error, Result, MU0};

/// Minimum ratio of radial depth to winding radius for which the Wheeler
/// expression is trusted.
pub const MIN_DEPTH_TO_RADIUS: f64 = 0.2;

/// Below this many turns the Wheeler expression is not trusted.
pub const MIN_TRUSTED_TURNS: u32 = 3;

/// `d / s` at or above this ratio counts as `d >> s`.
pub const MAX_DIAMETER_TO_SPACING: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validity {
    Trusted,
    LowConfidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InductanceSource {
    Wheeler,
    CurrentSheet,
    UserSupplied,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InductanceEstimate {
    pub value: f64,
    pub validity: Validity,
    pub source: InductanceSource,
}

/// Checks the Wheeler validity conditions: enough turns, `d` not much larger
/// than `s`, and a radial depth of at least 0.2 winding radii.
pub fn wheeler_validity(spec: &CoilSpec) -> Validity {
    let depth = spec.radial_depth();
    let winding_radius = 0.5 * (spec.outer_diameter() - depth);
    let few_turns = spec.turns < MIN_TRUSTED_TURNS;
    let thick_wire = spec.wire_diameter >= MAX_DIAMETER_TO_SPACING * spec.wire_spacing;
    let shallow = depth / winding_radius < MIN_DEPTH_TO_RADIUS;
    if few_turns || thick_wire || shallow {
        Validity::LowConfidence
    } else {
        Validity::Trusted
    }
}

/// Modified Wheeler inductance (H) of a flat spiral.
pub fn wheeler_inductance(spec: &CoilSpec) -> Result<InductanceEstimate> {
    spec.validate()?;
    if !matches!(spec.shape, CoilShape::FlatSpiral) {
        return Err(Error::UnsupportedShape("the Wheeler expression"));
    }
    let n = f64::from(spec.turns);
    let d_o = spec.outer_diameter();
    let depth = spec.radial_depth();
    let mean = d_o - depth;
    let value = n * n * mean * mean / (16.0 * d_o + 28.0 * depth) * 39.37 / 1e6;
    Ok(InductanceEstimate {
        value,
        validity: wheeler_validity(spec),
        source: InductanceSource::Wheeler,
    })
}

/// Fill ratio `(D_o - D_i) / (D_o + D_i)`.
pub fn fill_factor(spec: &CoilSpec) -> f64 {
    let (d_o, d_i) = (spec.outer_diameter(), spec.inner_diameter());
    (d_o - d_i) / (d_o + d_i)
}

/// Current-sheet inductance (H):
/// `mu0 N^2 d_avg / 2 * (ln(2.46 / gamma) + 0.2 gamma^2)`.
pub fn current_sheet_inductance(spec: &CoilSpec) -> Result<f64> {
    spec.validate()?;
    let gamma = fill_factor(spec);
    if gamma <= 0.0 {
        return Err(Error::InvalidParameter {
            field: "outer_diameter",
            reason: "outer and inner diameters coincide".into(),
        });
    }
    let n = f64::from(spec.turns);
    let d_avg = 0.5 * (spec.outer_diameter() + spec.inner_diameter());
    Ok(MU0 * n * n * d_avg / 2.0 * ((2.46 / gamma).ln() + 0.2 * gamma * gamma))
}

/// Inductance used by the rest of the pipeline: the override when given,
/// else the current-sheet value flagged by the Wheeler validity conditions.
pub fn estimate_inductance(spec: &CoilSpec, override_value: Option<f64>) -> Result<InductanceEstimate> {
    if let Some(value) = override_value {
        positive("inductance", value)?;
        return Ok(InductanceEstimate {
            value,
            validity: Validity::Trusted,
            source: InductanceSource::UserSupplied,
        });
    }
    Ok(InductanceEstimate {
        value: current_sheet_inductance(spec)?,
        validity: wheeler_validity(spec),
        source: InductanceSource::CurrentSheet,
    })
}

/// `1 / (sigma delta) = sqrt(pi f mu0 / sigma)`, the resistance of a square
/// of conductor one skin depth thick. Shared by [`skin_depth`] and
/// [`ac_resistance`].
pub fn surface_resistance(frequency: f64, conductivity: f64) -> Result<f64> {
    positive("frequency", frequency)?;
    positive("conductivity", conductivity)?;
    Ok((frequency * PI * MU0 / conductivity).sqrt())
}

/// Skin depth `1 / sqrt(pi f sigma mu0)` (m).
pub fn skin_depth(frequency: f64, conductivity: f64) -> Result<f64> {
    Ok(1.0 / (conductivity * surface_resistance(frequency, conductivity)?))
}

/// Skin-effect AC resistance (ohm): `sqrt(f pi mu0 / sigma) N (D_o - N(d+s)) / d`.
pub fn ac_resistance(spec: &CoilSpec, frequency: f64) -> Result<f64> {
    spec.validate()?;
    let rs = surface_resistance(frequency, spec.conductivity)?;
    let n = f64::from(spec.turns);
    Ok(rs * n * (spec.outer_diameter() - spec.radial_depth()) / spec.wire_diameter)
}

/// `Q = 2 pi f L / R`.
pub fn quality_factor(inductance: f64, resistance: f64, frequency: f64) -> f64 {
    TAU * frequency * inductance / resistance
}

/// Lumped model of one coil at one frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LumpedCoil {
    pub frequency: f64,
    pub inductance: f64,
    pub series_resistance: f64,
    pub quality_factor: f64,
    pub skin_depth: f64,
    pub validity: Validity,
    pub source: InductanceSource,
}

impl LumpedCoil {
    pub fn evaluate(spec: &CoilSpec, frequency: f64, inductance_override: Option<f64>) -> Result<Self> {
        let estimate = estimate_inductance(spec, inductance_override)?;
        let series_resistance = ac_resistance(spec, frequency)?;
        Ok(Self {
            frequency,
            inductance: estimate.value,
            series_resistance,
            quality_factor: quality_factor(estimate.value, series_resistance, frequency),
            skin_depth: skin_depth(frequency, spec.conductivity)?,
            validity: estimate.validity,
            source: estimate.source,
        })
    }
}
