//! CSV and JSON emitters.
//!
//! Floats are written with 17 significant digits in exponent form, which
//! round-trips every `f64` and does not depend on locale. Missing or
//! non-finite values become empty cells.

use std::io::Write;
use std::path::Path;

use mqslink_core::analysis::{CapacityTradeoff, SweepResult};
use mqslink_core::circuit::Spectrum;
use mqslink_core::coupling::FieldSample;

#[derive(Debug, thiserror::Error)]
#[error("{path}: {source}")]
pub struct OutputError {
    pub path: String,
    pub source: std::io::Error,
}

pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

fn cell(x: Option<f64>) -> String {
    x.map_or_else(String::new, format_float)
}

fn table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    // writing to a Vec cannot fail
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

pub fn spectrum_csv(spectrum: &Spectrum) -> Vec<u8> {
    let db = spectrum.magnitude_db();
    table(
        &["frequency_hz", "h_real", "h_imag", "h_mag_db", "z11_real_ohm", "z11_imag_ohm"],
        (0..spectrum.len()).map(|i| {
            let (h, z) = (spectrum.transfer[i], spectrum.z11[i]);
            vec![
                format_float(spectrum.frequencies[i]),
                format_float(h.re),
                format_float(h.im),
                format_float(db[i]),
                format_float(z.re),
                format_float(z.im),
            ]
        }),
    )
}

pub fn sweep_csv(sweep: &SweepResult) -> Vec<u8> {
    table(
        &["param", "param_unit", "peak_db", "peak_freq_hz", "bw3db_hz", "capacity_bps", "p_rx_w"],
        sweep.rows.iter().map(|r| {
            let s = r.summary;
            vec![
                format_float(r.value),
                sweep.unit().to_string(),
                cell(s.map(|s| s.peak_db)),
                cell(s.map(|s| s.peak_frequency)),
                cell(s.and_then(|s| s.bandwidth_3db)),
                cell(s.and_then(|s| s.capacity)),
                cell(s.map(|s| s.p_rx)),
            ]
        }),
    )
}

pub fn capacity_csv(tradeoff: &CapacityTradeoff) -> Vec<u8> {
    table(
        &["threshold_db", "signal_dbv", "f_low_hz", "f_high_hz", "bw_hz", "capacity_bps"],
        tradeoff.rows.iter().map(|r| {
            vec![
                format_float(r.threshold_db),
                format_float(r.signal_dbv),
                cell(r.band.map(|b| b.f_low)),
                cell(r.band.map(|b| b.f_high)),
                cell(r.band.map(|b| b.bandwidth)),
                cell(r.capacity),
            ]
        }),
    )
}

pub fn field_map_csv(samples: &[FieldSample]) -> Vec<u8> {
    table(
        &["x", "y", "z", "Bx", "By", "Bz"],
        samples.iter().map(|s| {
            let p = s.position;
            vec![
                format_float(p.x),
                format_float(p.y),
                format_float(p.z),
                cell(s.b.map(|b| b.x)),
                cell(s.b.map(|b| b.y)),
                cell(s.b.map(|b| b.z)),
            ]
        }),
    )
}

/// Write `bytes` to `path` through a temporary file in the same directory,
/// so an existing file is either fully replaced or left untouched.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), OutputError> {
    let context = |source| OutputError {
        path: path.display().to_string(),
        source,
    };
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(context)?;
    tmp.write_all(bytes).map_err(context)?;
    tmp.as_file().sync_all().map_err(context)?;
    tmp.persist(path).map_err(|e| context(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use mqslink_core::analysis::{SpectrumSummary, SweepParameter, SweepRow};
    use num_complex::Complex64;

    #[test]
    fn three_point_spectrum_has_four_lines() {
        let s = Spectrum {
            frequencies: vec![1e6, 2e6, 3e6],
            transfer: vec![Complex64::new(0.1, -0.2); 3],
            z11: vec![Complex64::new(50.0, 1.0); 3],
            v_source: 1.0,
        };
        let text = String::from_utf8(spectrum_csv(&s)).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "frequency_hz,h_real,h_imag,h_mag_db,z11_real_ohm,z11_imag_ohm");
        let first: f64 = lines[1].split(',').next().unwrap().parse().unwrap();
        assert_eq!(first, 1e6);
    }

    #[test]
    fn masked_row_has_empty_cells() {
        let sweep = SweepResult {
            parameter: SweepParameter::TxAngle,
            rows: vec![
                SweepRow {
                    value: 10.0,
                    summary: Some(SpectrumSummary {
                        peak_db: -60.0,
                        peak_frequency: 26e6,
                        bandwidth_3db: None,
                        capacity: None,
                        p_rx: 1e-9,
                    }),
                    note: None,
                },
                SweepRow {
                    value: 20.0,
                    summary: None,
                    note: Some("failed".into()),
                },
            ],
            flags: vec![],
        };
        let text = String::from_utf8(sweep_csv(&sweep)).unwrap();
        assert!(!text.contains("NaN") && !text.contains("inf"));
        let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
        assert_eq!(rows[0][1], "deg");
        assert_eq!(rows[0][5], "");
        assert_eq!(rows[1][2..], ["", "", "", "", ""]);
    }

    #[test]
    fn floats_round_trip() {
        for x in [0.1, 1.0 / 3.0, 6.02214076e23, -1e-300, f64::MIN_POSITIVE] {
            assert_eq!(format_float(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(format_float(f64::NAN), "");
        assert_eq!(format_float(f64::NEG_INFINITY), "");
    }

    #[test]
    fn atomic_write_replaces_whole_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.csv");
        write_atomic(&path, b"first").unwrap();
        write_atomic(&path, b"second").unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), b"second");
        let missing = dir.path().join("no/such/dir/a.csv");
        let err = write_atomic(&missing, b"x").unwrap_err();
        assert!(err.to_string().contains("a.csv"));
    }
}
