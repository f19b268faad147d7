//! Browser bindings for the interactive demo page.
//!
//! Three operations are exposed: the tuned/untuned spectrum for a head pose,
//! a field-magnitude map of the necklace in the sagittal plane, and a
//! transmitter-tilt sweep with capacity. Each `#[wasm_bindgen]` function is a
//! thin wrapper over a plain Rust function so the numerics are testable
//! natively.

use mqslink_core::analysis::{misalignment_sweep, summarize, AnalysisOptions, SweepParameter};
use mqslink_core::circuit::{default_grid, frequency_sweep};
use mqslink_core::coupling::{field_map as core_field_map, GridAxis, Plane, PlaneGrid};
use mqslink_core::geometry::{apply_pose, build_filament_coil};
use mqslink_core::scenario::{scenario_poses, CouplingOptions, LinkModel, Scenario};
use wasm_bindgen::prelude::*;

/// The browser trades a little accuracy for responsiveness.
const SEGMENTS_PER_TURN: usize = 96;

fn options() -> CouplingOptions {
    CouplingOptions {
        segments_per_turn: SEGMENTS_PER_TURN,
        ..CouplingOptions::default()
    }
}

fn pose(tx_angle: f64, x_eye: f64, z_eye: f64) -> Scenario {
    Scenario {
        tx_angle,
        x_eye,
        z_eye,
        ..Scenario::nominal()
    }
}

fn js_error(e: mqslink_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct SpectrumView {
    frequencies: Vec<f64>,
    tuned_db: Vec<f64>,
    untuned_db: Vec<f64>,
    mutual: f64,
    peak_db: f64,
    peak_frequency: f64,
    bandwidth_3db: f64,
    capacity: f64,
}

#[wasm_bindgen]
impl SpectrumView {
    #[wasm_bindgen(getter)]
    pub fn frequencies(&self) -> Vec<f64> {
        self.frequencies.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn tuned_db(&self) -> Vec<f64> {
        self.tuned_db.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn untuned_db(&self) -> Vec<f64> {
        self.untuned_db.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn mutual(&self) -> f64 {
        self.mutual
    }
    #[wasm_bindgen(getter)]
    pub fn peak_db(&self) -> f64 {
        self.peak_db
    }
    #[wasm_bindgen(getter)]
    pub fn peak_frequency(&self) -> f64 {
        self.peak_frequency
    }
    /// NaN when the band runs off the frequency grid.
    #[wasm_bindgen(getter)]
    pub fn bandwidth_3db(&self) -> f64 {
        self.bandwidth_3db
    }
    /// NaN when the bandwidth is undefined.
    #[wasm_bindgen(getter)]
    pub fn capacity(&self) -> f64 {
        self.capacity
    }
}

/// Tuned and untuned `|H|` over 20–30 MHz. Angles in degrees, distances in
/// metres, resistances in ohms.
pub fn compute_spectrum(
    tx_angle: f64,
    x_eye: f64,
    z_eye: f64,
    r_source: f64,
    r_load: f64,
) -> mqslink_core::Result<SpectrumView> {
    let mut sc = pose(tx_angle, x_eye, z_eye);
    sc.circuit.r_source = r_source;
    sc.circuit.r_load = r_load;
    let model = LinkModel::new(&sc, options())?;
    let m = model.mutual(&sc)?.value;
    let grid = default_grid();
    let tuned = frequency_sweep(&model.link(&sc, m, true), &grid)?;
    let untuned = frequency_sweep(&model.link(&sc, m, false), &grid)?;
    let summary = summarize(&tuned, r_load, &AnalysisOptions::default())?;
    Ok(SpectrumView {
        tuned_db: tuned.magnitude_db(),
        untuned_db: untuned.magnitude_db(),
        frequencies: grid,
        mutual: m,
        peak_db: summary.peak_db,
        peak_frequency: summary.peak_frequency,
        bandwidth_3db: summary.bandwidth_3db.unwrap_or(f64::NAN),
        capacity: summary.capacity.unwrap_or(f64::NAN),
    })
}

#[wasm_bindgen]
pub fn spectrum(tx_angle: f64, x_eye: f64, z_eye: f64, r_source: f64, r_load: f64) -> Result<SpectrumView, JsError> {
    compute_spectrum(tx_angle, x_eye, z_eye, r_source, r_load).map_err(js_error)
}

/// `log10 |B|` (tesla, 1 A drive) of the tilted necklace on an `n x n` grid
/// of the `y = 0` plane spanning `x, z` in `[-half_width, half_width]`.
/// Row-major with `z` outer; NaN marks points on the wire.
pub fn compute_field_map(tx_angle: f64, half_width: f64, n: usize) -> mqslink_core::Result<Vec<f64>> {
    let sc = pose(tx_angle, Scenario::nominal().x_eye, Scenario::nominal().z_eye);
    sc.validate()?;
    if !(half_width > 0.0 && half_width.is_finite()) || !(2..=256).contains(&n) {
        return Err(mqslink_core::Error::InvalidParameter {
            field: "grid",
            reason: format!("need half_width > 0 and 2 <= n <= 256, got {half_width} and {n}"),
        });
    }
    let (tx_pose, _) = scenario_poses(&sc);
    let coil = apply_pose(&build_filament_coil(&sc.tx, SEGMENTS_PER_TURN)?, &tx_pose);
    let axis = GridAxis {
        min: -half_width,
        max: half_width,
        count: n,
    };
    let grid = PlaneGrid {
        plane: Plane::Xz,
        offset: 0.0,
        u: axis,
        v: axis,
    };
    Ok(core_field_map(&coil, 1.0, &grid)
        .iter()
        .map(|s| s.b.map_or(f64::NAN, |b| b.norm().log10()))
        .collect())
}

#[wasm_bindgen]
pub fn field_map(tx_angle: f64, half_width: f64, n: usize) -> Result<Vec<f64>, JsError> {
    compute_field_map(tx_angle, half_width, n).map_err(js_error)
}

/// Tilt sweep from 0 to 90 degrees in `step` increments. Returns interleaved
/// `[angle, peak_db, capacity_bps, ...]` with NaN for undefined capacity.
pub fn compute_angle_sweep(x_eye: f64, z_eye: f64, step: f64) -> mqslink_core::Result<Vec<f64>> {
    if !(1.0..=90.0).contains(&step) {
        return Err(mqslink_core::Error::InvalidParameter {
            field: "step",
            reason: format!("{step} deg is outside [1, 90]"),
        });
    }
    let count = (90.0 / step).floor() as usize;
    let angles: Vec<f64> = (0..=count).map(|i| (i as f64 * step).min(90.0)).collect();
    let sc = pose(0.0, x_eye, z_eye);
    let sweep = misalignment_sweep(&sc, SweepParameter::TxAngle, &angles, options(), &AnalysisOptions::default())?;
    Ok(sweep
        .rows
        .iter()
        .flat_map(|r| {
            [
                r.value,
                r.summary.map_or(f64::NAN, |s| s.peak_db),
                r.summary.and_then(|s| s.capacity).unwrap_or(f64::NAN),
            ]
        })
        .collect())
}

#[wasm_bindgen]
pub fn angle_sweep(x_eye: f64, z_eye: f64, step: f64) -> Result<Vec<f64>, JsError> {
    compute_angle_sweep(x_eye, z_eye, step).map_err(js_error)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nominal_spectrum_shows_resonant_gain() {
        let s = compute_spectrum(40.0, 0.092, 0.150, 50.0, 1000.0).unwrap();
        assert_eq!(s.frequencies.len(), s.tuned_db.len());
        assert_eq!(s.frequencies.len(), s.untuned_db.len());
        assert!((s.peak_frequency - 26e6).abs() < 0.1e6);
        let i = s.frequencies.iter().position(|f| *f == s.peak_frequency).unwrap();
        assert!(s.tuned_db[i] - s.untuned_db[i] > 20.0);
        assert!(s.capacity > 0.0);
    }

    #[test]
    fn spectrum_rejects_bad_load() {
        assert!(compute_spectrum(40.0, 0.092, 0.150, 50.0, -1.0).is_err());
    }

    #[test]
    fn field_decays_away_from_the_coil() {
        let n = 41;
        let map = compute_field_map(0.0, 0.2, n).unwrap();
        assert_eq!(map.len(), n * n);
        // untilted loop: the centre of the z = 0 row sees more field than the far corner
        let centre = map[(n / 2) * n + n / 2];
        let corner = map[0];
        assert!(centre > corner + 1.0, "{centre} vs {corner}");
        assert!(compute_field_map(0.0, 0.0, n).is_err());
    }

    #[test]
    fn angle_sweep_is_interleaved() {
        let rows = compute_angle_sweep(0.092, 0.150, 30.0).unwrap();
        assert_eq!(rows.len(), 4 * 3);
        let angles: Vec<f64> = rows.chunks(3).map(|r| r[0]).collect();
        assert_eq!(angles, [0.0, 30.0, 60.0, 90.0]);
        assert!(rows.chunks(3).all(|r| r[1].is_finite()));
        assert!(compute_angle_sweep(0.092, 0.150, 0.0).is_err());
    }
}
