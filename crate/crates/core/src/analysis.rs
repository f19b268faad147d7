//! Link metrics derived from spectra, and parametric studies.

use serde::{Deserialize, Serialize};

use crate::circuit::{frequency_sweep, load_power, solve, LinkCircuit, Spectrum};
use crate::error::positive;
use crate::scenario::{CouplingOptions, LinkModel, Scenario};
use crate::{Error, Result};

/// Noise floor assumed for the receiver (dBV).
pub const DEFAULT_NOISE_FLOOR_DBV: f64 = -85.0;

/// How an SNR in dB converts to the linear ratio used by Shannon-Hartley.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SnrConvention {
    /// `10^(snr / 20)`: SNR read as a voltage ratio.
    #[default]
    Voltage,
    /// `10^(snr / 10)`: the usual power-ratio form.
    Power,
}

impl SnrConvention {
    pub fn linear(self, snr_db: f64) -> f64 {
        match self {
            SnrConvention::Voltage => 10f64.powf(snr_db / 20.0),
            SnrConvention::Power => 10f64.powf(snr_db / 10.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Band {
    pub f_low: f64,
    pub f_high: f64,
    pub bandwidth: f64,
}

fn peak_index(db: &[f64]) -> Result<usize> {
    (0..db.len())
        .max_by(|&a, &b| db[a].total_cmp(&db[b]))
        .ok_or(Error::EmptySpectrum)
}

fn interpolate(f0: f64, f1: f64, y0: f64, y1: f64, level: f64) -> f64 {
    f0 + (level - y0) / (y1 - y0) * (f1 - f0)
}

/// Outermost crossings of `peak - drop_db`, linearly interpolated.
pub fn band_below_peak(spectrum: &Spectrum, drop_db: f64) -> Result<Band> {
    let db = spectrum.magnitude_db();
    let f = &spectrum.frequencies;
    let peak = peak_index(&db)?;
    let level = db[peak] - drop_db;
    let above = |i: usize| db[i] >= level;

    let first = (0..db.len()).find(|&i| above(i)).unwrap_or(peak);
    let last = (0..db.len()).rev().find(|&i| above(i)).unwrap_or(peak);
    let f_low = (first > 0).then(|| interpolate(f[first - 1], f[first], db[first - 1], db[first], level));
    let f_high = (last + 1 < db.len()).then(|| interpolate(f[last], f[last + 1], db[last], db[last + 1], level));
    match (f_low, f_high) {
        (Some(f_low), Some(f_high)) => Ok(Band {
            f_low,
            f_high,
            bandwidth: f_high - f_low,
        }),
        _ => Err(Error::TruncatedBand {
            level_db: level,
            f_low,
            f_high,
        }),
    }
}

pub fn three_db_bandwidth(spectrum: &Spectrum) -> Result<Band> {
    band_below_peak(spectrum, 3.0)
}

pub fn snr_db(signal_dbv: f64, noise_floor_dbv: f64) -> f64 {
    signal_dbv - noise_floor_dbv
}

/// Shannon-Hartley capacity `BW log2(1 + SNR)` (bit/s).
pub fn channel_capacity(bandwidth: f64, snr_db: f64, convention: SnrConvention) -> Result<f64> {
    positive("bandwidth", bandwidth)?;
    Ok(bandwidth * (1.0 + convention.linear(snr_db)).log2())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapacityReport {
    pub bandwidth: f64,
    pub signal_dbv: f64,
    pub noise_floor_dbv: f64,
    pub snr_db: f64,
    pub capacity: f64,
}

impl CapacityReport {
    pub fn new(bandwidth: f64, signal_dbv: f64, noise_floor_dbv: f64, convention: SnrConvention) -> Result<Self> {
        let snr = snr_db(signal_dbv, noise_floor_dbv);
        Ok(Self {
            bandwidth,
            signal_dbv,
            noise_floor_dbv,
            snr_db: snr,
            capacity: channel_capacity(bandwidth, snr, convention)?,
        })
    }
}

fn peak_level_dbv(spectrum: &Spectrum) -> Result<(usize, f64)> {
    let levels = spectrum.level_dbv();
    let i = peak_index(&levels)?;
    Ok((i, levels[i]))
}

/// Capacity over the 3 dB band with the peak level as signal.
pub fn capacity_report(spectrum: &Spectrum, noise_floor_dbv: f64, convention: SnrConvention) -> Result<CapacityReport> {
    let band = three_db_bandwidth(spectrum)?;
    let (_, peak) = peak_level_dbv(spectrum)?;
    CapacityReport::new(band.bandwidth, peak, noise_floor_dbv, convention)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapacityRow {
    pub threshold_db: f64,
    pub signal_dbv: f64,
    /// `None` when the band runs off the grid.
    pub band: Option<Band>,
    pub capacity: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CapacityTradeoff {
    pub noise_floor_dbv: f64,
    pub rows: Vec<CapacityRow>,
    /// Row with the largest capacity.
    pub best: Option<usize>,
}

/// Trade signal level for bandwidth: for each threshold 1..=30 dB below the
/// peak, use the band at that level and the reduced signal level.
pub fn capacity_vs_bandwidth(spectrum: &Spectrum, noise_floor_dbv: f64, convention: SnrConvention) -> Result<CapacityTradeoff> {
    let (_, peak) = peak_level_dbv(spectrum)?;
    let mut rows = Vec::with_capacity(30);
    for t in 1..=30 {
        let threshold_db = f64::from(t);
        let signal_dbv = peak - threshold_db;
        let band = band_below_peak(spectrum, threshold_db).ok();
        let capacity = match band {
            Some(b) if b.bandwidth > 0.0 => Some(channel_capacity(
                b.bandwidth,
                snr_db(signal_dbv, noise_floor_dbv),
                convention,
            )?),
            _ => None,
        };
        rows.push(CapacityRow {
            threshold_db,
            signal_dbv,
            band,
            capacity,
        });
    }
    let best = (0..rows.len())
        .filter(|&i| rows[i].capacity.is_some())
        .max_by(|&a, &b| rows[a].capacity.unwrap().total_cmp(&rows[b].capacity.unwrap()));
    Ok(CapacityTradeoff {
        noise_floor_dbv,
        rows,
        best,
    })
}

/// Settings shared by the parametric studies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisOptions {
    pub grid: Vec<f64>,
    pub noise_floor_dbv: f64,
    pub convention: SnrConvention,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            grid: crate::circuit::default_grid(),
            noise_floor_dbv: DEFAULT_NOISE_FLOOR_DBV,
            convention: SnrConvention::Voltage,
        }
    }
}

/// Condensed view of one spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    /// Peak `|H|` (dB).
    pub peak_db: f64,
    pub peak_frequency: f64,
    pub bandwidth_3db: Option<f64>,
    pub capacity: Option<f64>,
    /// Average load power at the peak (W).
    pub p_rx: f64,
}

pub fn summarize(spectrum: &Spectrum, r_load: f64, options: &AnalysisOptions) -> Result<SpectrumSummary> {
    let db = spectrum.magnitude_db();
    let i = peak_index(&db)?;
    let peak_dbv = spectrum.level_dbv()[i];
    let band = three_db_bandwidth(spectrum).ok();
    let capacity = match band {
        Some(b) => Some(channel_capacity(
            b.bandwidth,
            snr_db(peak_dbv, options.noise_floor_dbv),
            options.convention,
        )?),
        None => None,
    };
    Ok(SpectrumSummary {
        peak_db: db[i],
        peak_frequency: spectrum.frequencies[i],
        bandwidth_3db: band.map(|b| b.bandwidth),
        capacity,
        p_rx: load_power(spectrum.transfer[i] * spectrum.v_source, r_load),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParameter {
    TxAngle,
    Lateral,
    Axial,
    RSource,
    RLoad,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::TxAngle => "tx_angle",
            SweepParameter::Lateral => "x_eye",
            SweepParameter::Axial => "z_eye",
            SweepParameter::RSource => "r_source",
            SweepParameter::RLoad => "r_load",
        }
    }

    pub fn unit(self) -> &'static str {
        match self {
            SweepParameter::TxAngle => "deg",
            SweepParameter::Lateral | SweepParameter::Axial => "m",
            SweepParameter::RSource | SweepParameter::RLoad => "ohm",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub value: f64,
    /// `None` when the point could not be evaluated; see `note`.
    pub summary: Option<SpectrumSummary>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub parameter: SweepParameter,
    pub rows: Vec<SweepRow>,
    /// Notes about the sweep as a whole, e.g. impractical placements.
    pub flags: Vec<String>,
}

impl SweepResult {
    pub fn unit(&self) -> &'static str {
        self.parameter.unit()
    }

    /// Rows that are missing data (failed point or truncated band).
    pub fn masked_rows(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows
            .iter()
            .filter(|r| r.summary.is_none_or(|s| s.capacity.is_none()))
    }
}

fn row(value: f64, result: Result<SpectrumSummary>) -> SweepRow {
    match result {
        Ok(s) => SweepRow {
            value,
            note: s.bandwidth_3db.is_none().then(|| "3 dB band extends past the frequency grid".to_string()),
            summary: Some(s),
        },
        Err(e) => SweepRow {
            value,
            summary: None,
            note: Some(e.to_string()),
        },
    }
}

fn check_range(parameter: SweepParameter, values: &[f64]) -> Result<()> {
    let (lo, hi) = match parameter {
        SweepParameter::TxAngle => (0.0, 90.0),
        SweepParameter::Lateral => (0.0, 0.2),
        SweepParameter::Axial => (0.05, 0.3),
        SweepParameter::RSource | SweepParameter::RLoad => (f64::MIN_POSITIVE, f64::INFINITY),
    };
    if let Some(v) = values.iter().find(|v| !(**v >= lo && **v <= hi)) {
        return Err(Error::InvalidParameter {
            field: parameter.name(),
            reason: format!("{v} {} is outside [{lo}, {hi}]", parameter.unit()),
        });
    }
    Ok(())
}

/// Move one placement parameter, recompute coupling and the tuned response at
/// each value. Tuning stays at the scenario's nominal capacitors: a worn
/// device is tuned once, not per head pose. Values are sorted ascending.
pub fn misalignment_sweep(
    sc: &Scenario,
    parameter: SweepParameter,
    values: &[f64],
    coupling: CouplingOptions,
    options: &AnalysisOptions,
) -> Result<SweepResult> {
    if !matches!(
        parameter,
        SweepParameter::TxAngle | SweepParameter::Lateral | SweepParameter::Axial
    ) {
        return Err(Error::InvalidParameter {
            field: "parameter",
            reason: format!("{} is not a placement parameter", parameter.name()),
        });
    }
    check_range(parameter, values)?;
    let model = LinkModel::new(sc, coupling)?;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);

    let mut rows = Vec::with_capacity(sorted.len());
    let mut flags = Vec::new();
    for &value in &sorted {
        let mut point = *sc;
        match parameter {
            SweepParameter::TxAngle => point.tx_angle = value,
            SweepParameter::Lateral => point.x_eye = value,
            _ => point.z_eye = value,
        }
        if !point.is_practical() && flags.is_empty() {
            flags.push("x_eye = 0 places the lens over the necklace center; not a wearable configuration".into());
        }
        let result = model.mutual(&point).and_then(|m| {
            let link = model.link(&point, m.value, true);
            summarize(&frequency_sweep(&link, &options.grid)?, link.r_load, options)
        });
        rows.push(row(value, result));
    }
    Ok(SweepResult {
        parameter,
        rows,
        flags,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImpedanceSweep {
    pub source: SweepResult,
    pub load: SweepResult,
}

/// Vary `R_source` and `R_load` one at a time, holding the other at the
/// value in `link`.
pub fn impedance_sweep(
    link: &LinkCircuit,
    r_source_values: &[f64],
    r_load_values: &[f64],
    options: &AnalysisOptions,
) -> Result<ImpedanceSweep> {
    link.validate()?;
    check_range(SweepParameter::RSource, r_source_values)?;
    check_range(SweepParameter::RLoad, r_load_values)?;
    let run = |parameter: SweepParameter, values: &[f64]| {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let rows = sorted
            .iter()
            .map(|&value| {
                let mut l = *link;
                match parameter {
                    SweepParameter::RSource => l.r_source = value,
                    _ => l.r_load = value,
                }
                row(
                    value,
                    frequency_sweep(&l, &options.grid).and_then(|s| summarize(&s, l.r_load, options)),
                )
            })
            .collect();
        SweepResult {
            parameter,
            rows,
            flags: Vec::new(),
        }
    };
    Ok(ImpedanceSweep {
        source: run(SweepParameter::RSource, r_source_values),
        load: run(SweepParameter::RLoad, r_load_values),
    })
}

/// Log-spaced load grid, 0.01 ohm to 100 kohm, 20 points per decade.
pub fn default_load_grid() -> Vec<f64> {
    (0..=140).map(|i| 10f64.powf(-2.0 + f64::from(i) / 20.0)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LoadPoint {
    pub r_load: f64,
    /// Peak load voltage (V).
    pub v_rx: f64,
    /// Average load power (W).
    pub p_rx: f64,
}

/// Load settings for alternating between powering and communicating.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualModeReport {
    pub frequency: f64,
    /// Load that maximizes received power.
    pub power_mode: LoadPoint,
    /// Smallest load reaching 95 % of the saturated voltage.
    pub comm_mode: LoadPoint,
    /// Voltage at the largest load on the grid.
    pub saturated_voltage: f64,
}

pub const COMM_MODE_FRACTION: f64 = 0.95;

pub fn dual_mode_report(link: &LinkCircuit, frequency: f64, r_load_grid: &[f64]) -> Result<DualModeReport> {
    link.validate()?;
    check_range(SweepParameter::RLoad, r_load_grid)?;
    let mut grid = r_load_grid.to_vec();
    grid.sort_by(f64::total_cmp);
    let points = grid
        .iter()
        .map(|&r_load| {
            let l = LinkCircuit { r_load, ..*link };
            let v = solve(&l, frequency)?.v_load;
            Ok(LoadPoint {
                r_load,
                v_rx: v.norm(),
                p_rx: load_power(v, r_load),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let last = *points.last().ok_or(Error::InvalidParameter {
        field: "r_load grid",
        reason: "must not be empty".into(),
    })?;
    let power_mode = *points
        .iter()
        .max_by(|a, b| a.p_rx.total_cmp(&b.p_rx))
        .unwrap_or(&last);
    let comm_mode = *points
        .iter()
        .find(|p| p.v_rx >= COMM_MODE_FRACTION * last.v_rx)
        .unwrap_or(&last);
    Ok(DualModeReport {
        frequency,
        power_mode,
        comm_mode,
        saturated_voltage: last.v_rx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{linear_grid, Esr};
    use approx::assert_relative_eq;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::TAU;

    /// `R / (R + j w L + 1 / (j w C))` sampled on `grid`.
    fn series_rlc(r: f64, l: f64, c: f64, grid: &[f64]) -> Spectrum {
        let transfer: Vec<Complex64> = grid
            .iter()
            .map(|f| {
                let w = TAU * f;
                let z = Complex64::new(r, w * l - 1.0 / (w * c));
                Complex64::new(r, 0.0) / z
            })
            .collect();
        Spectrum {
            frequencies: grid.to_vec(),
            z11: transfer.clone(),
            transfer,
            v_source: 1.0,
        }
    }

    #[test]
    fn rlc_bandwidth_is_f0_over_q() {
        let (r, l, c): (f64, f64, f64) = (10.0, 10e-6, 4e-12);
        let f0 = 1.0 / (TAU * (l * c).sqrt());
        let q = TAU * f0 * l / r;
        let s = series_rlc(r, l, c, &linear_grid(20e6, 30e6, 10001));
        let band = three_db_bandwidth(&s).unwrap();
        assert!((band.bandwidth / (f0 / q) - 1.0).abs() < 0.01);
        // the half-power points are geometrically symmetric about f0
        assert!(((band.f_low * band.f_high).sqrt() / f0 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn flat_spectrum_is_truncated() {
        let grid = linear_grid(20e6, 30e6, 11);
        let s = Spectrum {
            frequencies: grid.clone(),
            transfer: vec![Complex64::new(0.1, 0.0); 11],
            z11: vec![Complex64::new(1.0, 0.0); 11],
            v_source: 1.0,
        };
        assert!(matches!(
            three_db_bandwidth(&s),
            Err(Error::TruncatedBand {
                f_low: None,
                f_high: None,
                ..
            })
        ));
    }

    #[test]
    fn snr_examples() {
        assert_eq!(snr_db(-55.0, -85.0), 30.0);
        assert_eq!(snr_db(-85.0, -85.0), 0.0);
        assert_eq!(snr_db(-71.0, -85.0), 14.0);
    }

    #[test]
    fn capacity_examples() {
        let c = channel_capacity(1e6, 30.0, SnrConvention::Voltage).unwrap();
        assert_relative_eq!(c, 1e6 * (1.0 + 10f64.powf(1.5)).log2(), max_relative = 1e-15);
        assert_relative_eq!(c, 5.02781e6, max_relative = 1e-5);
        assert!(c >= 4.5e6);
        let p = channel_capacity(1e6, 30.0, SnrConvention::Power).unwrap();
        assert_relative_eq!(p, 9.9672e6, max_relative = 1e-4);
        assert_eq!(channel_capacity(2e6, f64::NEG_INFINITY, SnrConvention::Voltage).unwrap(), 0.0);
        assert_eq!(channel_capacity(3e5, 0.0, SnrConvention::Voltage).unwrap(), 3e5);
        assert!(channel_capacity(0.0, 10.0, SnrConvention::Voltage).is_err());
    }

    #[test]
    fn capacity_report_is_consistent() {
        let r = CapacityReport::new(1e6, -55.0, -85.0, SnrConvention::Voltage).unwrap();
        assert_eq!(r.snr_db, 30.0);
        assert_eq!(r.capacity, 1e6 * (1.0 + SnrConvention::Voltage.linear(30.0)).log2());
    }

    #[test]
    fn tradeoff_bands_nest() {
        let s = series_rlc(10.0, 10e-6, 4e-12, &linear_grid(20e6, 30e6, 2001));
        let t = capacity_vs_bandwidth(&s, -85.0, SnrConvention::Voltage).unwrap();
        assert_eq!(t.rows.len(), 30);
        let widths: Vec<f64> = t.rows.iter().filter_map(|r| r.band.map(|b| b.bandwidth)).collect();
        assert!(widths.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn tradeoff_on_single_point_is_masked() {
        let s = series_rlc(10.0, 10e-6, 4e-12, &[25e6]);
        let t = capacity_vs_bandwidth(&s, -85.0, SnrConvention::Voltage).unwrap();
        assert!(t.rows.iter().all(|r| r.capacity.is_none()));
        assert_eq!(t.best, None);
    }

    fn simple_link() -> LinkCircuit {
        LinkCircuit {
            esr: Esr::Fixed { tx: 6.0, rx: 0.55 },
            ..LinkCircuit::untuned(35e-6, 0.38e-6, 3e-10, 50.0, 1000.0).tuned_at(26e6)
        }
    }

    #[test]
    fn source_resistance_lowers_voltage() {
        let link = simple_link();
        let sweep = impedance_sweep(&link, &[10.0, 25.0, 50.0, 100.0, 200.0], &[1000.0], &AnalysisOptions::default()).unwrap();
        let peaks: Vec<f64> = sweep.source.rows.iter().map(|r| r.summary.unwrap().peak_db).collect();
        assert!(peaks.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn load_voltage_saturates() {
        let link = simple_link();
        let loads: Vec<f64> = default_load_grid();
        let sweep = impedance_sweep(&link, &[50.0], &loads, &AnalysisOptions::default()).unwrap();
        let volts: Vec<f64> = sweep
            .load
            .rows
            .iter()
            .map(|r| 10f64.powf(r.summary.unwrap().peak_db / 20.0))
            .collect();
        assert!(volts.windows(2).all(|w| w[1] >= w[0] * (1.0 - 1e-12)));
        let at = |r: f64| {
            let l = LinkCircuit { r_load: r, ..link };
            solve(&l, 26e6).unwrap().v_load.norm()
        };
        assert!(at(1e4) - at(1e3) < 0.1 * at(1e4));
    }

    #[test]
    fn load_power_peaks_inside_grid() {
        let link = simple_link();
        let report = dual_mode_report(&link, 26e6, &default_load_grid()).unwrap();
        let grid = default_load_grid();
        assert!(report.power_mode.r_load > grid[0]);
        assert!(report.power_mode.r_load < *grid.last().unwrap());
        assert!(report.power_mode.p_rx >= report.comm_mode.p_rx);
        // unimodal: power rises then falls
        let powers: Vec<f64> = grid
            .iter()
            .map(|&r| {
                let l = LinkCircuit { r_load: r, ..link };
                load_power(solve(&l, 26e6).unwrap().v_load, r)
            })
            .collect();
        let top = powers.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
        assert!(powers[..=top].windows(2).all(|w| w[1] >= w[0]));
        assert!(powers[top..].windows(2).all(|w| w[1] <= w[0]));
        for p in [report.power_mode, report.comm_mode] {
            assert_relative_eq!(p.p_rx, p.v_rx * p.v_rx / (2.0 * p.r_load), max_relative = 1e-12);
        }
    }

    #[test]
    fn comm_mode_sits_at_nineteen_coil_resistances() {
        // At resonance the receive mesh is a divider R_load / (ESR_rx + R_load)
        // driven by an almost constant j w M I_tx, so 95 % of saturation is
        // reached at R_load = 19 ESR_rx, far below the load used in practice.
        let link = simple_link();
        let grid = default_load_grid();
        let report = dual_mode_report(&link, 26e6, &grid).unwrap();
        let expected = 19.0 * 0.55;
        let step = grid[1] / grid[0];
        assert!(report.comm_mode.r_load >= 0.99 * expected, "{}", report.comm_mode.r_load);
        assert!(report.comm_mode.r_load <= 1.01 * expected * step, "{}", report.comm_mode.r_load);
    }

    #[test]
    fn rejects_out_of_range_placements() {
        let r = misalignment_sweep(
            &Scenario::nominal(),
            SweepParameter::TxAngle,
            &[95.0],
            CouplingOptions::default(),
            &AnalysisOptions::default(),
        );
        assert!(r.is_err());
    }

    proptest! {
        #[test]
        fn capacity_monotone_in_snr(bw in 1e3..1e8f64, a in -40.0..60.0f64, d in 0.01..20.0f64) {
            for conv in [SnrConvention::Voltage, SnrConvention::Power] {
                let lo = channel_capacity(bw, a, conv).unwrap();
                let hi = channel_capacity(bw, a + d, conv).unwrap();
                prop_assert!(hi > lo);
                let double = channel_capacity(2.0 * bw, a, conv).unwrap();
                prop_assert!((double - 2.0 * lo).abs() <= 1e-12 * double);
            }
        }
    }
}
