use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid value for `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("segments_per_turn = {0} is too coarse (minimum 16)")]
    TooFewSegments(usize),

    #[error("{0} is only defined for flat spiral coils")]
    UnsupportedShape(&'static str),

    #[error("evaluation point lies within {distance:e} m of a filament (wire radius {wire_radius:e} m)")]
    SingularPoint { distance: f64, wire_radius: f64 },

    #[error("integration did not converge: estimate {estimate:e}, relative change {change:e} > tolerance {tolerance:e}")]
    NotConverged {
        estimate: f64,
        change: f64,
        tolerance: f64,
    },

    #[error("coils are too close: minimum separation {separation:e} m < wire diameter {limit:e} m")]
    SeparationViolation { separation: f64, limit: f64 },

    #[error("coupling coefficient |k| = {0} is not below 1; inductances and mutual inductance are inconsistent")]
    CouplingOutOfRange(f64),

    #[error("Im(Z11) = {0} ohm is not positive; the port is capacitive at this frequency")]
    CapacitiveRegime(f64),

    #[error("band at {level_db} dB crosses the edge of the frequency grid")]
    TruncatedBand {
        level_db: f64,
        /// Crossings that were found inside the grid.
        f_low: Option<f64>,
        f_high: Option<f64>,
    },

    #[error("spectrum is empty")]
    EmptySpectrum,
}

pub(crate) fn positive(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            field,
            reason: format!("must be a finite positive number, got {value}"),
        })
    }
}

pub(crate) fn non_negative(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            field,
            reason: format!("must be a finite non-negative number, got {value}"),
        })
    }
}
