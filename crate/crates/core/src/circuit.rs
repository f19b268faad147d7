//! Series-series resonant two-coil circuit.
//!
//! ```text
//!  Vs -- R_source -- C_tx --+           +-- C_rx --+
//!                           |           |          |
//!                    (C_p)  L_tx ~ M ~ L_rx  (C_p) R_load   V_rx across R_load
//!                           |           |          |
//!  -------------------------+           +----------+
//! ```
//!
//! Each coil is `R_esr + j w L`, optionally shunted by its parasitic
//! capacitance `C_p`. Capacitors that are absent are shorts. Amplitudes are
//! peak values; average powers carry the factor 1/2.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::positive;
use crate::geometry::CoilSpec;
use crate::lumped::ac_resistance;
use crate::sum::ordered_map;
use crate::{Error, Result};

const J: Complex64 = Complex64::new(0.0, 1.0);

/// How the coil series resistances are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum Esr {
    /// Constant resistances (ohm).
    Fixed { tx: f64, rx: f64 },
    /// Skin-effect resistance of each coil, re-evaluated at every frequency.
    SkinEffect { tx: CoilSpec, rx: CoilSpec },
}

impl Esr {
    pub fn at(&self, frequency: f64) -> Result<(f64, f64)> {
        match self {
            Esr::Fixed { tx, rx } => Ok((*tx, *rx)),
            Esr::SkinEffect { tx, rx } => Ok((ac_resistance(tx, frequency)?, ac_resistance(rx, frequency)?)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkCircuit {
    pub l_tx: f64,
    pub l_rx: f64,
    pub esr: Esr,
    pub mutual: f64,
    pub r_source: f64,
    pub r_load: f64,
    pub c_tx: Option<f64>,
    pub c_rx: Option<f64>,
    pub v_source: f64,
    pub parasitic_tx: Option<f64>,
    pub parasitic_rx: Option<f64>,
}

impl LinkCircuit {
    /// Untuned link with ideal (lossless) coils.
    pub fn untuned(l_tx: f64, l_rx: f64, mutual: f64, r_source: f64, r_load: f64) -> Self {
        Self {
            l_tx,
            l_rx,
            esr: Esr::Fixed { tx: 0.0, rx: 0.0 },
            mutual,
            r_source,
            r_load,
            c_tx: None,
            c_rx: None,
            v_source: 1.0,
            parasitic_tx: None,
            parasitic_rx: None,
        }
    }

    /// Series capacitors resonating both meshes at `f0`.
    pub fn tuned_at(self, f0: f64) -> Self {
        let c_tx = tune_capacitance(self.l_tx, f0);
        Self {
            c_tx: Some(c_tx),
            c_rx: Some(receiver_capacitance(self.l_tx, c_tx, self.l_rx)),
            ..self
        }
    }

    pub fn without_capacitors(self) -> Self {
        Self {
            c_tx: None,
            c_rx: None,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        positive("l_tx", self.l_tx)?;
        positive("l_rx", self.l_rx)?;
        positive("r_source", self.r_source)?;
        positive("r_load", self.r_load)?;
        positive("v_source", self.v_source)?;
        for (field, c) in [
            ("c_tx", self.c_tx),
            ("c_rx", self.c_rx),
            ("parasitic_tx", self.parasitic_tx),
            ("parasitic_rx", self.parasitic_rx),
        ] {
            if let Some(c) = c {
                positive(field, c)?;
            }
        }
        if let Esr::Fixed { tx, rx } = self.esr {
            crate::error::non_negative("esr_tx", tx)?;
            crate::error::non_negative("esr_rx", rx)?;
        }
        if !self.mutual.is_finite() || self.mutual * self.mutual > self.l_tx * self.l_rx {
            return Err(Error::CouplingOutOfRange(
                self.mutual.abs() / (self.l_tx * self.l_rx).sqrt(),
            ));
        }
        Ok(())
    }

    /// Resonant frequency of the transmitter mesh, if it is tuned.
    pub fn tuned_frequency(&self) -> Option<f64> {
        self.c_tx.map(|c| 1.0 / (TAU * (self.l_tx * c).sqrt()))
    }
}

/// Currents and voltages of the solved circuit for a given source amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSolution {
    pub frequency: f64,
    /// Current delivered by the source.
    pub i_source: Complex64,
    /// Voltage across the load resistor.
    pub v_load: Complex64,
    /// Impedance seen by the source, excluding `R_source`.
    pub z11: Complex64,
}

fn capacitor(c: Option<f64>, omega: f64) -> Complex64 {
    match c {
        Some(c) => Complex64::new(0.0, -1.0 / (omega * c)),
        None => Complex64::new(0.0, 0.0),
    }
}

fn parallel(a: Complex64, b: Complex64) -> Complex64 {
    a * b / (a + b)
}

/// Solve the two coupled meshes at `frequency`.
pub fn solve(link: &LinkCircuit, frequency: f64) -> Result<MeshSolution> {
    positive("frequency", frequency)?;
    let omega = TAU * frequency;
    let (esr_tx, esr_rx) = link.esr.at(frequency)?;
    let vs = Complex64::new(link.v_source, 0.0);
    let coupling = J * omega * link.mutual;

    // source side seen from the Tx coil terminals
    let z_source = link.r_source + capacitor(link.c_tx, omega);
    let (v_th, z_th) = match link.parasitic_tx {
        None => (vs, z_source),
        Some(cp) => {
            let zp = capacitor(Some(cp), omega);
            (vs * zp / (z_source + zp), parallel(z_source, zp))
        }
    };
    // load side seen from the Rx coil terminals
    let z_load_branch = capacitor(link.c_rx, omega) + link.r_load;
    let z_load_side = match link.parasitic_rx {
        None => z_load_branch,
        Some(cp) => parallel(z_load_branch, capacitor(Some(cp), omega)),
    };

    let z1 = z_th + esr_tx + J * omega * link.l_tx;
    let z2 = esr_rx + J * omega * link.l_rx + z_load_side;
    let det = z1 * z2 + omega * omega * link.mutual * link.mutual;
    let i_tx_coil = v_th * z2 / det;

    let v_load = match link.parasitic_rx {
        None => coupling * link.r_load * v_th / det,
        Some(_) => coupling * v_th / det * z_load_side * link.r_load / z_load_branch,
    };
    let i_source = match link.parasitic_tx {
        None => i_tx_coil,
        Some(cp) => {
            let v_node = v_th - z_th * i_tx_coil;
            i_tx_coil + v_node / capacitor(Some(cp), omega)
        }
    };
    Ok(MeshSolution {
        frequency,
        i_source,
        v_load,
        z11: vs / i_source - link.r_source,
    })
}

/// Voltage transfer ratio of the untuned link with the coil resistances
/// lumped into `R_source` and `R_load`:
/// `j w M R_load / ((j w L_tx + R_source)(j w L_rx + R_load) + w^2 M^2)`.
pub fn transfer_ratio_untuned(link: &LinkCircuit, frequency: f64) -> Complex64 {
    let omega = TAU * frequency;
    let numerator = J * omega * link.mutual * link.r_load;
    let denominator = (J * omega * link.l_tx + link.r_source) * (J * omega * link.l_rx + link.r_load)
        + omega * omega * link.mutual * link.mutual;
    numerator / denominator
}

/// `V_rx / V_source` from the full mesh solution.
pub fn transfer_ratio(link: &LinkCircuit, frequency: f64) -> Result<Complex64> {
    let s = solve(link, frequency)?;
    Ok(s.v_load / link.v_source)
}

/// Series capacitance resonating `inductance` at `f0`: `1 / ((2 pi f0)^2 L)`.
pub fn tune_capacitance(inductance: f64, f0: f64) -> f64 {
    let omega = TAU * f0;
    1.0 / (omega * omega * inductance)
}

/// True when a parasitic capacitance is too large for the external tuning
/// capacitor to set the resonance.
pub fn parasitic_dominates(tuning: f64, parasitic: Option<f64>) -> bool {
    parasitic.is_some_and(|cp| cp >= tuning)
}

/// Receiver capacitance with the same resonance as the transmitter:
/// `C_rx = L_tx C_tx / L_rx`.
pub fn receiver_capacitance(l_tx: f64, c_tx: f64, l_rx: f64) -> f64 {
    l_tx * c_tx / l_rx
}

/// Frequency response sampled on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub frequencies: Vec<f64>,
    /// `V_rx / V_source`.
    pub transfer: Vec<Complex64>,
    /// Input impedance excluding `R_source` (ohm).
    pub z11: Vec<Complex64>,
    /// Source amplitude the spectrum was computed for (V).
    pub v_source: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }

    /// `|H|` in dB.
    pub fn magnitude_db(&self) -> Vec<f64> {
        self.transfer.iter().map(|h| path_loss_db(*h)).collect()
    }

    /// Received voltage level in dBV.
    pub fn level_dbv(&self) -> Vec<f64> {
        let offset = 20.0 * self.v_source.log10();
        self.transfer.iter().map(|h| path_loss_db(*h) + offset).collect()
    }
}

/// Linearly spaced frequency grid including both ends.
pub fn linear_grid(start: f64, stop: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![start],
        n => (0..n)
            .map(|i| start + (stop - start) * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

/// Default sweep: 20-30 MHz, 1001 points.
pub fn default_grid() -> Vec<f64> {
    linear_grid(20e6, 30e6, 1001)
}

pub fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    for f in grid {
        positive("frequency", *f)?;
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter {
            field: "frequency grid",
            reason: "must be strictly increasing".into(),
        });
    }
    Ok(())
}

pub fn frequency_sweep(link: &LinkCircuit, grid: &[f64]) -> Result<Spectrum> {
    link.validate()?;
    validate_grid(grid)?;
    let solutions = ordered_map(grid, |f| solve(link, *f));
    let mut transfer = Vec::with_capacity(grid.len());
    let mut z11 = Vec::with_capacity(grid.len());
    for s in solutions {
        let s = s?;
        transfer.push(s.v_load / link.v_source);
        z11.push(s.z11);
    }
    Ok(Spectrum {
        frequencies: grid.to_vec(),
        transfer,
        z11,
        v_source: link.v_source,
    })
}

/// `L = Im(Z11) / (2 pi f)`; errors if the port looks capacitive.
pub fn extract_inductance(z11: Complex64, frequency: f64) -> Result<f64> {
    positive("frequency", frequency)?;
    if !(z11.im > 0.0) {
        return Err(Error::CapacitiveRegime(z11.im));
    }
    Ok(z11.im / (TAU * frequency))
}

/// `P = V^2 / R_load`, with `v` an RMS voltage (W).
pub fn received_power(v_rms: f64, r_load: f64) -> f64 {
    v_rms * v_rms / r_load
}

/// Average power dissipated in the load for a peak load voltage (W).
pub fn load_power(v_load_peak: Complex64, r_load: f64) -> f64 {
    received_power(v_load_peak.norm() / std::f64::consts::SQRT_2, r_load)
}

/// Average power delivered by the source, `(1/2) Re(V conj(I))` (W).
pub fn tx_power(link: &LinkCircuit, frequency: f64) -> Result<f64> {
    let s = solve(link, frequency)?;
    Ok(0.5 * (link.v_source * s.i_source.conj()).re)
}

/// `20 log10 |H|`; `-inf` for `H = 0`.
pub fn path_loss_db(h: Complex64) -> f64 {
    let mag = h.norm();
    if mag == 0.0 {
        f64::NEG_INFINITY
    } else {
        20.0 * mag.log10()
    }
}
