//! Scenario files: TOML with unit-tagged values.
//!
//! ```toml
//! [transmitter]
//! turns = 5
//! inner_radius = "60 mm"
//! inductance = "35 uH"        # optional override
//!
//! [placement]
//! z_eye = "150 mm"
//!
//! [[request]]
//! kind = "spectrum"
//! tuned = true
//! output = "tuned.csv"
//! ```
//!
//! The sections `transmitter`, `receiver`, `placement` and `circuit` are
//! required unless defaults are allowed; keys omitted inside a section take
//! the nominal necklace/lens values. Unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};
use toml::{Spanned, Value};

use mqslink_core::analysis::{default_load_grid, SnrConvention, SweepParameter, DEFAULT_NOISE_FLOOR_DBV};
use mqslink_core::coupling::{CouplingMethod, GridAxis, Plane, PlaneGrid};
use mqslink_core::geometry::{CoilShape, CoilSpec, DEFAULT_SPHERE_RADIUS};
use mqslink_core::scenario::{CouplingOptions, EsrMode, Scenario};

use crate::units::{parse_quantity, Dimension};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Fill missing required sections from the nominal scenario.
    pub allow_defaults: bool,
}

/// Frequency grid and link-budget settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisSettings {
    pub f_start: f64,
    pub f_stop: f64,
    pub points: usize,
    pub noise_floor_dbv: f64,
    pub snr_convention: SnrConvention,
}

impl Default for AnalysisSettings {
    fn default() -> Self {
        Self {
            f_start: 20e6,
            f_stop: 30e6,
            points: 1001,
            noise_floor_dbv: DEFAULT_NOISE_FLOOR_DBV,
            snr_convention: SnrConvention::Voltage,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoilRole {
    Tx,
    Rx,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum RequestKind {
    /// Lumped coil parameters, coupling and tuning summary (JSON).
    Link,
    Spectrum {
        tuned: bool,
    },
    Sweep {
        parameter: SweepParameter,
        values: Vec<f64>,
    },
    /// Capacity against the level below peak used to define the band.
    Capacity,
    DualMode {
        frequency: f64,
        loads: Vec<f64>,
    },
    FieldMap {
        coil: CoilRole,
        current: f64,
        grid: PlaneGrid,
    },
}

impl RequestKind {
    pub fn name(&self) -> &'static str {
        match self {
            RequestKind::Link => "link",
            RequestKind::Spectrum { .. } => "spectrum",
            RequestKind::Sweep { .. } => "sweep",
            RequestKind::Capacity => "capacity",
            RequestKind::DualMode { .. } => "dual_mode",
            RequestKind::FieldMap { .. } => "field_map",
        }
    }

    fn extension(&self) -> &'static str {
        match self {
            RequestKind::Link | RequestKind::DualMode { .. } => "json",
            _ => "csv",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Request {
    /// Output file name, relative to the output directory.
    pub output: String,
    #[serde(flatten)]
    pub kind: RequestKind,
}

/// Fully validated configuration, all values in SI (angles in degrees).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub coupling: CouplingOptions,
    pub analysis: AnalysisSettings,
    pub output_dir: Option<String>,
    pub requests: Vec<Request>,
}

impl ScenarioConfig {
    /// The nominal scenario with no requests.
    pub fn nominal() -> Self {
        Self {
            scenario: Scenario::nominal(),
            coupling: CouplingOptions::default(),
            analysis: AnalysisSettings::default(),
            output_dir: None,
            requests: Vec::new(),
        }
    }
}

type Field = Option<Spanned<Value>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    transmitter: Option<RawCoil>,
    receiver: Option<RawCoil>,
    placement: Option<RawPlacement>,
    circuit: Option<RawCircuit>,
    coupling: Option<RawCoupling>,
    analysis: Option<RawAnalysis>,
    output: Option<RawOutput>,
    #[serde(default)]
    request: Vec<Spanned<RawRequest>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoil {
    turns: Field,
    inner_radius: Field,
    wire_diameter: Field,
    wire_spacing: Field,
    shape: Option<Spanned<String>>,
    sphere_radius: Field,
    conductivity: Field,
    parasitic_capacitance: Field,
    inductance: Field,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlacement {
    x_eye: Field,
    z_eye: Field,
    tx_angle: Field,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCircuit {
    r_source: Field,
    r_load: Field,
    tuned_frequency: Field,
    v_source: Field,
    esr: Option<Spanned<String>>,
    esr_tx: Field,
    esr_rx: Field,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoupling {
    method: Option<Spanned<String>>,
    tolerance: Field,
    segments_per_turn: Field,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAnalysis {
    f_start: Field,
    f_stop: Field,
    points: Field,
    noise_floor: Field,
    snr_convention: Option<Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    dir: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRequest {
    kind: Spanned<String>,
    output: Option<String>,
    tuned: Option<bool>,
    parameter: Option<Spanned<String>>,
    start: Field,
    stop: Field,
    step: Field,
    values: Option<Vec<Spanned<Value>>>,
    frequency: Field,
    coil: Option<Spanned<String>>,
    current: Field,
    plane: Option<Spanned<String>>,
    offset: Field,
    u_min: Field,
    u_max: Field,
    u_count: Field,
    v_min: Field,
    v_max: Field,
    v_count: Field,
}

/// Maps byte offsets to 1-based line numbers.
struct Lines<'a>(&'a str);

impl Lines<'_> {
    fn at(&self, offset: usize) -> usize {
        self.0[..offset.min(self.0.len())].matches('\n').count() + 1
    }

    fn last(&self) -> usize {
        self.at(self.0.len())
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ConfigError> {
        Err(ConfigError::Invalid {
            line: self.at(offset),
            message: message.into(),
        })
    }

    fn quantity(&self, key: &str, field: &Spanned<Value>, dimension: Dimension) -> Result<f64, ConfigError> {
        let offset = field.span().start;
        match field.get_ref() {
            Value::String(s) => parse_quantity(s, dimension)
                .or_else(|e| self.error(offset, format!("{key}: {e}"))),
            Value::Integer(_) | Value::Float(_) => self.error(
                offset,
                format!(
                    "{key}: untagged number; write it with a unit, e.g. \"{} {}\"",
                    field.get_ref(),
                    dimension.canonical_unit()
                ),
            ),
            other => self.error(offset, format!("{key}: expected a quantity string, got {}", other.type_str())),
        }
    }

    fn opt_quantity(&self, key: &str, field: &Field, dimension: Dimension) -> Result<Option<f64>, ConfigError> {
        field.as_ref().map(|f| self.quantity(key, f, dimension)).transpose()
    }

    fn positive(&self, key: &str, field: &Field, dimension: Dimension, default: f64) -> Result<f64, ConfigError> {
        self.checked(key, field, dimension, default, |v| v > 0.0, "must be positive")
    }

    fn non_negative(&self, key: &str, field: &Field, dimension: Dimension, default: f64) -> Result<f64, ConfigError> {
        self.checked(key, field, dimension, default, |v| v >= 0.0, "must not be negative")
    }

    fn checked(
        &self,
        key: &str,
        field: &Field,
        dimension: Dimension,
        default: f64,
        ok: impl Fn(f64) -> bool,
        reason: &str,
    ) -> Result<f64, ConfigError> {
        match field {
            None => Ok(default),
            Some(f) => {
                let v = self.quantity(key, f, dimension)?;
                if ok(v) {
                    Ok(v)
                } else {
                    self.error(f.span().start, format!("{key}: {reason}"))
                }
            }
        }
    }

    fn count(&self, key: &str, field: &Field, default: usize, min: usize) -> Result<usize, ConfigError> {
        let Some(f) = field else { return Ok(default) };
        match f.get_ref() {
            Value::Integer(n) if *n >= min as i64 => Ok(*n as usize),
            Value::Integer(_) => self.error(f.span().start, format!("{key}: must be at least {min}")),
            _ => self.error(f.span().start, format!("{key}: expected an integer count")),
        }
    }

    fn choice<T: Copy>(
        &self,
        key: &str,
        field: &Option<Spanned<String>>,
        options: &[(&str, T)],
        default: T,
    ) -> Result<T, ConfigError> {
        let Some(f) = field else { return Ok(default) };
        options
            .iter()
            .find(|(name, _)| *name == f.get_ref().as_str())
            .map(|(_, v)| *v)
            .map_or_else(
                || {
                    let names: Vec<&str> = options.iter().map(|(n, _)| *n).collect();
                    self.error(
                        f.span().start,
                        format!("{key}: {:?} is not one of {}", f.get_ref(), names.join(", ")),
                    )
                },
                Ok,
            )
    }
}

pub fn parse_config(path: &Path, options: ParseOptions) -> Result<ScenarioConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_config_str(&text, options)
}

pub fn parse_config_str(text: &str, options: ParseOptions) -> Result<ScenarioConfig, ConfigError> {
    let lines = Lines(text);
    let raw: RawConfig = toml::from_str(text).map_err(|e| ConfigError::Invalid {
        line: e.span().map_or(1, |s| lines.at(s.start)),
        message: e.message().to_string(),
    })?;

    if !options.allow_defaults {
        for (name, present) in [
            ("transmitter", raw.transmitter.is_some()),
            ("receiver", raw.receiver.is_some()),
            ("placement", raw.placement.is_some()),
            ("circuit", raw.circuit.is_some()),
        ] {
            if !present {
                return Err(ConfigError::Invalid {
                    line: lines.last(),
                    message: format!("missing section [{name}]"),
                });
            }
        }
    }

    let nominal = Scenario::nominal();
    let (tx, tx_l) = coil(&lines, "transmitter", raw.transmitter.as_ref(), nominal.tx, nominal.circuit.tx_inductance)?;
    let (rx, rx_l) = coil(&lines, "receiver", raw.receiver.as_ref(), nominal.rx, nominal.circuit.rx_inductance)?;

    let mut scenario = Scenario {
        tx,
        rx,
        ..nominal
    };
    scenario.circuit.tx_inductance = tx_l;
    scenario.circuit.rx_inductance = rx_l;
    if let Some(p) = &raw.placement {
        scenario.x_eye = lines.non_negative("placement.x_eye", &p.x_eye, Dimension::Length, nominal.x_eye)?;
        scenario.z_eye = lines.non_negative("placement.z_eye", &p.z_eye, Dimension::Length, nominal.z_eye)?;
        scenario.tx_angle = lines
            .opt_quantity("placement.tx_angle", &p.tx_angle, Dimension::Angle)?
            .unwrap_or(nominal.tx_angle);
    }
    if let Some(c) = &raw.circuit {
        let n = nominal.circuit;
        let circuit = &mut scenario.circuit;
        circuit.r_source = lines.positive("circuit.r_source", &c.r_source, Dimension::Resistance, n.r_source)?;
        circuit.r_load = lines.positive("circuit.r_load", &c.r_load, Dimension::Resistance, n.r_load)?;
        circuit.tuned_frequency = lines.positive(
            "circuit.tuned_frequency",
            &c.tuned_frequency,
            Dimension::Frequency,
            n.tuned_frequency,
        )?;
        circuit.v_source = lines.positive("circuit.v_source", &c.v_source, Dimension::Voltage, n.v_source)?;
        let fixed = lines.choice("circuit.esr", &c.esr, &[("skin_effect", false), ("fixed", true)], false)?;
        circuit.esr = if fixed {
            let at = c.esr.as_ref().map_or(0, |s| s.span().start);
            let (Some(_), Some(_)) = (&c.esr_tx, &c.esr_rx) else {
                return lines.error(at, "circuit.esr = \"fixed\" needs esr_tx and esr_rx");
            };
            EsrMode::Fixed {
                tx: lines.non_negative("circuit.esr_tx", &c.esr_tx, Dimension::Resistance, 0.0)?,
                rx: lines.non_negative("circuit.esr_rx", &c.esr_rx, Dimension::Resistance, 0.0)?,
            }
        } else {
            if let Some(f) = c.esr_tx.as_ref().or(c.esr_rx.as_ref()) {
                return lines.error(f.span().start, "esr_tx/esr_rx require circuit.esr = \"fixed\"");
            }
            EsrMode::SkinEffect
        };
    }

    let mut coupling = CouplingOptions::default();
    if let Some(c) = &raw.coupling {
        coupling.method = lines.choice(
            "coupling.method",
            &c.method,
            &[("neumann", CouplingMethod::Neumann), ("flux", CouplingMethod::Flux)],
            coupling.method,
        )?;
        coupling.tolerance = lines.positive("coupling.tolerance", &c.tolerance, Dimension::Ratio, coupling.tolerance)?;
        coupling.segments_per_turn = lines.count(
            "coupling.segments_per_turn",
            &c.segments_per_turn,
            coupling.segments_per_turn,
            mqslink_core::geometry::MIN_SEGMENTS_PER_TURN,
        )?;
    }

    let mut analysis = AnalysisSettings::default();
    if let Some(a) = &raw.analysis {
        analysis.f_start = lines.positive("analysis.f_start", &a.f_start, Dimension::Frequency, analysis.f_start)?;
        analysis.f_stop = lines.positive("analysis.f_stop", &a.f_stop, Dimension::Frequency, analysis.f_stop)?;
        analysis.points = lines.count("analysis.points", &a.points, analysis.points, 1)?;
        analysis.noise_floor_dbv = lines
            .opt_quantity("analysis.noise_floor", &a.noise_floor, Dimension::Level)?
            .unwrap_or(analysis.noise_floor_dbv);
        analysis.snr_convention = lines.choice(
            "analysis.snr_convention",
            &a.snr_convention,
            &[("voltage", SnrConvention::Voltage), ("power", SnrConvention::Power)],
            analysis.snr_convention,
        )?;
        if analysis.f_stop < analysis.f_start || (analysis.points > 1 && analysis.f_stop == analysis.f_start) {
            let at = a.f_stop.as_ref().or(a.f_start.as_ref()).map_or(0, |f| f.span().start);
            return lines.error(at, "analysis.f_stop must exceed analysis.f_start");
        }
    }

    scenario
        .validate()
        .or_else(|e| lines.error(0, format!("scenario: {e}")))?;

    let mut requests = Vec::with_capacity(raw.request.len());
    for (index, r) in raw.request.iter().enumerate() {
        let kind = request(&lines, r.get_ref(), &scenario)?;
        let output = r
            .get_ref()
            .output
            .clone()
            .unwrap_or_else(|| format!("{:02}_{}.{}", index + 1, kind.name(), kind.extension()));
        if output.is_empty() || Path::new(&output).components().count() != 1 || output == "report.json" {
            return lines.error(
                r.span().start,
                format!("request output {output:?} must be a plain file name other than report.json"),
            );
        }
        if requests.iter().any(|q: &Request| q.output == output) {
            return lines.error(r.span().start, format!("output {output:?} is used by two requests"));
        }
        requests.push(Request { output, kind });
    }

    Ok(ScenarioConfig {
        scenario,
        coupling,
        analysis,
        output_dir: raw.output.and_then(|o| o.dir),
        requests,
    })
}

fn coil(
    lines: &Lines,
    section: &str,
    raw: Option<&RawCoil>,
    default: CoilSpec,
    default_inductance: Option<f64>,
) -> Result<(CoilSpec, Option<f64>), ConfigError> {
    let Some(c) = raw else {
        return Ok((default, default_inductance));
    };
    let key = |k: &str| format!("{section}.{k}");
    let turns = lines.count(&key("turns"), &c.turns, default.turns as usize, 1)?;
    let helical = lines.choice(
        &key("shape"),
        &c.shape,
        &[("flat_spiral", false), ("helical", true)],
        matches!(default.shape, CoilShape::Helical { .. }),
    )?;
    let shape = if helical {
        CoilShape::Helical {
            sphere_radius: lines.positive(&key("sphere_radius"), &c.sphere_radius, Dimension::Length, DEFAULT_SPHERE_RADIUS)?,
        }
    } else {
        if let Some(f) = &c.sphere_radius {
            return lines.error(f.span().start, format!("{}: only valid with shape = \"helical\"", key("sphere_radius")));
        }
        CoilShape::FlatSpiral
    };
    let spec = CoilSpec {
        turns: u32::try_from(turns).or_else(|_| lines.error(0, format!("{}: too large", key("turns"))))?,
        inner_radius: lines.positive(&key("inner_radius"), &c.inner_radius, Dimension::Length, default.inner_radius)?,
        wire_diameter: lines.positive(&key("wire_diameter"), &c.wire_diameter, Dimension::Length, default.wire_diameter)?,
        wire_spacing: lines.non_negative(&key("wire_spacing"), &c.wire_spacing, Dimension::Length, default.wire_spacing)?,
        shape,
        conductivity: lines.positive(&key("conductivity"), &c.conductivity, Dimension::Conductivity, default.conductivity)?,
        parasitic_capacitance: match &c.parasitic_capacitance {
            None => default.parasitic_capacitance,
            field => Some(lines.positive(&key("parasitic_capacitance"), field, Dimension::Capacitance, 0.0)?),
        },
    };
    let inductance = match &c.inductance {
        None => default_inductance,
        field => Some(lines.positive(&key("inductance"), field, Dimension::Inductance, 0.0)?),
    };
    let at = c.turns.as_ref().or(c.inner_radius.as_ref()).map_or(0, |f| f.span().start);
    spec.validate()
        .or_else(|e| lines.error(at, format!("[{section}]: {e}")))?;
    Ok((spec, inductance))
}

const SWEEP_PARAMETERS: [(&str, SweepParameter); 5] = [
    ("tx_angle", SweepParameter::TxAngle),
    ("x_eye", SweepParameter::Lateral),
    ("z_eye", SweepParameter::Axial),
    ("r_source", SweepParameter::RSource),
    ("r_load", SweepParameter::RLoad),
];

fn sweep_dimension(p: SweepParameter) -> Dimension {
    match p {
        SweepParameter::TxAngle => Dimension::Angle,
        SweepParameter::Lateral | SweepParameter::Axial => Dimension::Length,
        SweepParameter::RSource | SweepParameter::RLoad => Dimension::Resistance,
    }
}

fn request(lines: &Lines, r: &RawRequest, scenario: &Scenario) -> Result<RequestKind, ConfigError> {
    let at = r.kind.span().start;
    let kind = r.kind.get_ref().as_str();
    // keys each kind accepts besides `kind` and `output`
    let allowed: &[&str] = match kind {
        "link" | "capacity" => &[],
        "spectrum" => &["tuned"],
        "sweep" => &["parameter", "start", "stop", "step", "values"],
        "dual_mode" => &["frequency"],
        "field_map" => &[
            "coil", "current", "plane", "offset", "u_min", "u_max", "u_count", "v_min", "v_max", "v_count",
        ],
        other => {
            return lines.error(
                at,
                format!("unknown request kind {other:?} (link, spectrum, sweep, capacity, dual_mode, field_map)"),
            )
        }
    };
    let present = [
        ("tuned", r.tuned.is_some()),
        ("parameter", r.parameter.is_some()),
        ("start", r.start.is_some()),
        ("stop", r.stop.is_some()),
        ("step", r.step.is_some()),
        ("values", r.values.is_some()),
        ("frequency", r.frequency.is_some()),
        ("coil", r.coil.is_some()),
        ("current", r.current.is_some()),
        ("plane", r.plane.is_some()),
        ("offset", r.offset.is_some()),
        ("u_min", r.u_min.is_some()),
        ("u_max", r.u_max.is_some()),
        ("u_count", r.u_count.is_some()),
        ("v_min", r.v_min.is_some()),
        ("v_max", r.v_max.is_some()),
        ("v_count", r.v_count.is_some()),
    ];
    if let Some((key, _)) = present.iter().find(|(k, p)| *p && !allowed.contains(k)) {
        return lines.error(at, format!("key {key:?} is not valid for a {kind} request"));
    }

    Ok(match kind {
        "link" => RequestKind::Link,
        "capacity" => RequestKind::Capacity,
        "spectrum" => RequestKind::Spectrum {
            tuned: r.tuned.unwrap_or(true),
        },
        "dual_mode" => RequestKind::DualMode {
            frequency: lines.positive(
                "frequency",
                &r.frequency,
                Dimension::Frequency,
                scenario.circuit.tuned_frequency,
            )?,
            loads: default_load_grid(),
        },
        "sweep" => {
            let Some(p) = &r.parameter else {
                return lines.error(at, "sweep request needs a parameter");
            };
            let parameter = lines.choice("parameter", &r.parameter, &SWEEP_PARAMETERS, SweepParameter::TxAngle)?;
            let dim = sweep_dimension(parameter);
            let values = match (&r.values, &r.start, &r.stop, &r.step) {
                (Some(values), None, None, None) => values
                    .iter()
                    .map(|v| lines.quantity("values", v, dim))
                    .collect::<Result<Vec<_>, _>>()?,
                (None, Some(start), Some(stop), Some(step)) => {
                    let start_v = lines.quantity("start", start, dim)?;
                    let stop_v = lines.quantity("stop", stop, dim)?;
                    let step_v = lines.quantity("step", step, dim)?;
                    if !(step_v > 0.0) || stop_v < start_v {
                        return lines.error(step.span().start, "need step > 0 and stop >= start");
                    }
                    let n = ((stop_v - start_v) / step_v + 1e-9).floor() as usize + 1;
                    (0..n).map(|i| start_v + i as f64 * step_v).collect()
                }
                _ => return lines.error(at, "sweep request needs either values or start/stop/step"),
            };
            if values.is_empty() {
                return lines.error(p.span().start, "sweep has no values");
            }
            RequestKind::Sweep { parameter, values }
        }
        _ => {
            let plane = lines.choice(
                "plane",
                &r.plane,
                &[("xy", Plane::Xy), ("xz", Plane::Xz), ("yz", Plane::Yz)],
                Plane::Xz,
            )?;
            let axis = |min: &Field, max: &Field, count: &Field, lo: f64, hi: f64| -> Result<GridAxis, ConfigError> {
                let axis = GridAxis {
                    min: lines.opt_quantity("min", min, Dimension::Length)?.unwrap_or(lo),
                    max: lines.opt_quantity("max", max, Dimension::Length)?.unwrap_or(hi),
                    count: lines.count("count", count, 41, 1)?,
                };
                if axis.max < axis.min {
                    return lines.error(at, "field map axis max is below min");
                }
                Ok(axis)
            };
            RequestKind::FieldMap {
                coil: lines.choice("coil", &r.coil, &[("tx", CoilRole::Tx), ("rx", CoilRole::Rx)], CoilRole::Tx)?,
                current: lines
                    .opt_quantity("current", &r.current, Dimension::Current)?
                    .unwrap_or(1.0),
                grid: PlaneGrid {
                    plane,
                    offset: lines.opt_quantity("offset", &r.offset, Dimension::Length)?.unwrap_or(0.0),
                    u: axis(&r.u_min, &r.u_max, &r.u_count, -0.1, 0.1)?,
                    v: axis(&r.v_min, &r.v_max, &r.v_count, -0.1, 0.2)?,
                },
            }
        }
    })
}

/// Nominal scenario file, as printed by `mqslink defaults`.
pub const DEFAULT_CONFIG: &str = r#"# Necklace transmitter to contact-lens receiver, nominal placement.
# Every physical value carries its unit.

[transmitter]
turns = 5
inner_radius = "60 mm"
wire_diameter = "0.137 mm"
wire_spacing = "0.5 mm"
shape = "flat_spiral"
conductivity = "5.8e7 S/m"
# The current-sheet estimate for this coil is unreliable; use the measured value.
inductance = "35 uH"

[receiver]
turns = 5
inner_radius = "4 mm"
wire_diameter = "0.137 mm"
wire_spacing = "0.5 mm"
shape = "flat_spiral"
conductivity = "5.8e7 S/m"

[placement]
x_eye = "92 mm"
z_eye = "150 mm"
tx_angle = "40 deg"

[circuit]
r_source = "50 ohm"
r_load = "1 kohm"
tuned_frequency = "26 MHz"
v_source = "1 V"
esr = "skin_effect"

[coupling]
method = "neumann"
tolerance = "0.1 %"
segments_per_turn = 720

[analysis]
f_start = "20 MHz"
f_stop = "30 MHz"
points = 1001
noise_floor = "-85 dBV"
snr_convention = "voltage"

[output]
dir = "mqslink-out"

[[request]]
kind = "link"
output = "link.json"

[[request]]
kind = "spectrum"
tuned = true
output = "spectrum_tuned.csv"

[[request]]
kind = "spectrum"
tuned = false
output = "spectrum_untuned.csv"

[[request]]
kind = "capacity"
output = "capacity.csv"

[[request]]
kind = "sweep"
parameter = "tx_angle"
start = "0 deg"
stop = "90 deg"
step = "10 deg"
output = "sweep_tx_angle.csv"
"#;
