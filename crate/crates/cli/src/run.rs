//! Execute the requests of a scenario file and record what happened.

use std::cell::OnceCell;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use mqslink_core::analysis::{
    capacity_report, capacity_vs_bandwidth, dual_mode_report, impedance_sweep, misalignment_sweep, summarize,
    AnalysisOptions, SweepParameter, SweepResult,
};
use mqslink_core::circuit::{frequency_sweep, linear_grid, load_power, parasitic_dominates, solve, tx_power, LinkCircuit};
use mqslink_core::coupling::{field_map, CouplingResult, MutualInductance};
use mqslink_core::geometry::CoilSpec;
use mqslink_core::lumped::{current_sheet_inductance, wheeler_inductance, wheeler_validity, InductanceEstimate, InductanceSource, LumpedCoil, Validity};
use mqslink_core::scenario::LinkModel;

use crate::config::{CoilRole, Request, RequestKind, ScenarioConfig};
use crate::output::{capacity_csv, field_map_csv, spectrum_csv, sweep_csv, write_atomic, OutputError};

pub const SCHEMA_VERSION: u32 = 1;
pub const REPORT_FILE: &str = "report.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// Output written, but some points could not be evaluated.
    Partial,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RequestReport {
    pub index: usize,
    pub kind: String,
    pub status: Status,
    pub outputs: Vec<String>,
    pub warnings: Vec<String>,
    pub error: Option<String>,
    pub elapsed_s: f64,
    pub summary: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub artifact: String,
    pub config_digest: String,
    pub requests: Vec<RequestReport>,
    pub warnings: Vec<String>,
    pub elapsed_s: f64,
}

impl RunReport {
    /// 0 when every request produced output, 1 when any failed outright.
    pub fn exit_code(&self) -> i32 {
        if self.requests.iter().any(|r| r.status == Status::Failed) {
            1
        } else {
            0
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Output(#[from] OutputError),
    #[error("cannot start {threads} worker threads: {reason}")]
    ThreadPool { threads: usize, reason: String },
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub out_dir: PathBuf,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

/// SHA-256 of the normalized (SI) configuration, hex encoded.
pub fn config_digest(config: &ScenarioConfig) -> String {
    let canonical = serde_json::to_vec(config).expect("config serializes");
    hex::encode(Sha256::digest(&canonical))
}

/// Run every request in order, write outputs and `report.json` into
/// `options.out_dir`. Individual request failures are recorded in the
/// report, not returned as errors.
pub fn run_scenario(config: &ScenarioConfig, options: &RunOptions) -> Result<RunReport, RunError> {
    std::fs::create_dir_all(&options.out_dir).map_err(|source| OutputError {
        path: options.out_dir.display().to_string(),
        source,
    })?;
    let report = match options.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| RunError::ThreadPool {
                threads,
                reason: e.to_string(),
            })?
            .install(|| execute(config, &options.out_dir))?,
        None => execute(config, &options.out_dir)?,
    };
    let json = serde_json::to_vec_pretty(&report).expect("report serializes");
    write_atomic(&options.out_dir.join(REPORT_FILE), &json)?;
    Ok(report)
}

struct Outcome {
    files: Vec<(String, Vec<u8>)>,
    warnings: Vec<String>,
    summary: Option<Value>,
    partial: bool,
}

impl Outcome {
    fn file(name: &str, bytes: Vec<u8>) -> Self {
        Self {
            files: vec![(name.to_string(), bytes)],
            warnings: Vec::new(),
            summary: None,
            partial: false,
        }
    }
}

struct Context<'a> {
    config: &'a ScenarioConfig,
    model: Result<LinkModel, String>,
    mutual: OnceCell<Result<MutualInductance, String>>,
    options: AnalysisOptions,
}

impl Context<'_> {
    fn model(&self) -> Result<&LinkModel, String> {
        self.model.as_ref().map_err(Clone::clone)
    }

    fn mutual(&self) -> Result<MutualInductance, String> {
        self.mutual
            .get_or_init(|| {
                let model = self.model()?;
                model
                    .mutual(&self.config.scenario)
                    .map_err(|e| format!("mutual inductance: {e}"))
            })
            .clone()
    }

    fn link(&self, tuned: bool) -> Result<LinkCircuit, String> {
        let m = self.mutual()?;
        Ok(self.model()?.link(&self.config.scenario, m.value, tuned))
    }
}

fn execute(config: &ScenarioConfig, out_dir: &Path) -> Result<RunReport, RunError> {
    let start = Instant::now();
    let a = &config.analysis;
    let ctx = Context {
        config,
        model: LinkModel::new(&config.scenario, config.coupling).map_err(|e| e.to_string()),
        mutual: OnceCell::new(),
        options: AnalysisOptions {
            grid: linear_grid(a.f_start, a.f_stop, a.points),
            noise_floor_dbv: a.noise_floor_dbv,
            convention: a.snr_convention,
        },
    };
    let mut warnings = Vec::new();
    if !config.scenario.is_practical() {
        warnings.push("x_eye = 0 places the lens over the necklace center; not a wearable configuration".into());
    }

    let mut requests = Vec::with_capacity(config.requests.len());
    for (index, request) in config.requests.iter().enumerate() {
        let t = Instant::now();
        log::info!("request {} ({}) -> {}", index + 1, request.kind.name(), request.output);
        let mut report = RequestReport {
            index,
            kind: request.kind.name().to_string(),
            status: Status::Ok,
            outputs: Vec::new(),
            warnings: Vec::new(),
            error: None,
            elapsed_s: 0.0,
            summary: None,
        };
        match handle(&ctx, request) {
            Ok(outcome) => {
                for (name, bytes) in &outcome.files {
                    write_atomic(&out_dir.join(name), bytes)?;
                    report.outputs.push(name.clone());
                }
                report.warnings = outcome.warnings;
                report.summary = outcome.summary;
                if outcome.partial {
                    report.status = Status::Partial;
                }
            }
            Err(e) => {
                log::error!("request {} ({}) failed: {e}", index + 1, request.kind.name());
                report.status = Status::Failed;
                report.error = Some(e);
            }
        }
        for w in &report.warnings {
            log::warn!("request {}: {w}", index + 1);
        }
        report.elapsed_s = t.elapsed().as_secs_f64();
        requests.push(report);
    }

    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        artifact: format!("mqslink {}", env!("CARGO_PKG_VERSION")),
        config_digest: config_digest(config),
        requests,
        warnings,
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}

fn handle(ctx: &Context, request: &Request) -> Result<Outcome, String> {
    let options = &ctx.options;
    let sc = &ctx.config.scenario;
    let err = |e: mqslink_core::Error| e.to_string();
    match &request.kind {
        RequestKind::Link => link_summary(ctx, &request.output),
        RequestKind::Spectrum { tuned } => {
            let link = ctx.link(*tuned)?;
            let spectrum = frequency_sweep(&link, &options.grid).map_err(err)?;
            let summary = summarize(&spectrum, link.r_load, options).map_err(err)?;
            let mut out = Outcome::file(&request.output, spectrum_csv(&spectrum));
            if summary.bandwidth_3db.is_none() {
                out.warnings.push(
                    "3 dB band extends past the frequency grid; bandwidth_3db and capacity are null in the summary"
                        .into(),
                );
            }
            out.summary = Some(json!(summary));
            Ok(out)
        }
        RequestKind::Capacity => {
            let link = ctx.link(true)?;
            let spectrum = frequency_sweep(&link, &options.grid).map_err(err)?;
            let tradeoff = capacity_vs_bandwidth(&spectrum, options.noise_floor_dbv, options.convention).map_err(err)?;
            let mut out = Outcome::file(&request.output, capacity_csv(&tradeoff));
            for row in tradeoff.rows.iter().filter(|r| r.capacity.is_none()) {
                out.warnings.push(format!(
                    "threshold {} dB: band extends past the frequency grid; row masked",
                    row.threshold_db
                ));
            }
            let three_db = capacity_report(&spectrum, options.noise_floor_dbv, options.convention).ok();
            out.summary = Some(json!({
                "three_db": three_db,
                "best": tradeoff.best.map(|i| tradeoff.rows[i]),
            }));
            Ok(out)
        }
        RequestKind::Sweep { parameter, values } => {
            let sweep = match parameter {
                SweepParameter::RSource | SweepParameter::RLoad => {
                    let link = ctx.link(true)?;
                    let (sources, loads) = if *parameter == SweepParameter::RSource {
                        (values.as_slice(), std::slice::from_ref(&link.r_load))
                    } else {
                        (std::slice::from_ref(&link.r_source), values.as_slice())
                    };
                    let both = impedance_sweep(&link, sources, loads, options).map_err(err)?;
                    if *parameter == SweepParameter::RSource {
                        both.source
                    } else {
                        both.load
                    }
                }
                _ => misalignment_sweep(sc, *parameter, values, ctx.config.coupling, options).map_err(err)?,
            };
            Ok(sweep_outcome(&request.output, &sweep))
        }
        RequestKind::DualMode { frequency, loads } => {
            let link = ctx.link(true)?;
            let report = dual_mode_report(&link, *frequency, loads).map_err(err)?;
            let bytes = serde_json::to_vec_pretty(&report).expect("report serializes");
            let mut out = Outcome::file(&request.output, bytes);
            out.summary = Some(json!(report));
            Ok(out)
        }
        RequestKind::FieldMap { coil, current, grid } => {
            let (tx, rx) = ctx.model()?.posed_coils(sc);
            let source = match coil {
                CoilRole::Tx => tx,
                CoilRole::Rx => rx,
            };
            let samples = field_map(&source, *current, grid);
            let masked = samples.iter().filter(|s| s.b.is_none()).count();
            let mut out = Outcome::file(&request.output, field_map_csv(&samples));
            if masked > 0 {
                out.warnings.push(format!(
                    "{masked} of {} samples lie on a conductor; their field cells are empty",
                    samples.len()
                ));
            }
            out.summary = Some(json!({ "samples": samples.len(), "masked": masked }));
            Ok(out)
        }
    }
}

fn sweep_outcome(name: &str, sweep: &SweepResult) -> Outcome {
    let mut out = Outcome::file(name, sweep_csv(sweep));
    out.warnings.extend(sweep.flags.iter().cloned());
    for row in &sweep.rows {
        if let Some(note) = &row.note {
            out.warnings.push(format!(
                "{} = {} {}: {note}",
                sweep.parameter.name(),
                row.value,
                sweep.unit()
            ));
        }
    }
    let failed = sweep.rows.iter().filter(|r| r.summary.is_none()).count();
    out.partial = failed > 0;
    out.summary = Some(json!({
        "parameter": sweep.parameter,
        "rows": sweep.rows.len(),
        "masked": sweep.masked_rows().count(),
        "failed": failed,
    }));
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CoilSummary {
    turns: u32,
    inner_radius_m: f64,
    outer_diameter_m: f64,
    /// Parameters used by the circuit, at the tuned frequency.
    lumped: LumpedCoil,
    current_sheet: InductanceEstimate,
    /// Not defined for helical coils.
    wheeler: Option<InductanceEstimate>,
}

fn coil_summary(
    role: &str,
    spec: &CoilSpec,
    used: &InductanceEstimate,
    frequency: f64,
    warnings: &mut Vec<String>,
) -> Result<CoilSummary, String> {
    let override_value = (used.source == InductanceSource::UserSupplied).then_some(used.value);
    let lumped = LumpedCoil::evaluate(spec, frequency, override_value).map_err(|e| e.to_string())?;
    let sheet = current_sheet_inductance(spec).map_err(|e| e.to_string())?;
    let current_sheet = InductanceEstimate {
        value: sheet,
        validity: wheeler_validity(spec),
        source: InductanceSource::CurrentSheet,
    };
    if current_sheet.validity == Validity::LowConfidence {
        let using = match used.source {
            InductanceSource::UserSupplied => format!("the supplied {:e} H is used instead", used.value),
            _ => "it is used as is".into(),
        };
        warnings.push(format!(
            "{role}: current-sheet inductance {sheet:e} H is low-confidence for this geometry; {using}"
        ));
    }
    Ok(CoilSummary {
        turns: spec.turns,
        inner_radius_m: spec.inner_radius,
        outer_diameter_m: spec.outer_diameter(),
        lumped,
        current_sheet,
        wheeler: wheeler_inductance(spec).ok(),
    })
}

fn link_summary(ctx: &Context, name: &str) -> Result<Outcome, String> {
    let sc = &ctx.config.scenario;
    let model = ctx.model()?;
    let f0 = sc.circuit.tuned_frequency;
    let mut warnings = Vec::new();
    let transmitter = coil_summary("transmitter", &sc.tx, &model.l_tx, f0, &mut warnings)?;
    let receiver = coil_summary("receiver", &sc.rx, &model.l_rx, f0, &mut warnings)?;
    let mutual = ctx.mutual()?;
    let coupling = CouplingResult::new(&mutual, model.l_tx.value, model.l_rx.value).map_err(|e| e.to_string())?;
    let link = ctx.link(true)?;
    for (role, tuning, parasitic) in [
        ("transmitter", link.c_tx, link.parasitic_tx),
        ("receiver", link.c_rx, link.parasitic_rx),
    ] {
        if let Some(c) = tuning {
            if parasitic_dominates(c, parasitic) {
                warnings.push(format!(
                    "{role}: parasitic capacitance exceeds the {c:e} F tuning capacitor; the coil self-resonates below the tuned frequency"
                ));
            }
        }
    }
    let solution = solve(&link, f0).map_err(|e| e.to_string())?;
    let summary = json!({
        "transmitter": transmitter,
        "receiver": receiver,
        "coupling": coupling,
        "tuned_frequency_hz": f0,
        "c_tx_f": link.c_tx,
        "c_rx_f": link.c_rx,
        "tx_power_w": tx_power(&link, f0).map_err(|e| e.to_string())?,
        "p_rx_w": load_power(solution.v_load, link.r_load),
        "v_rx_v": solution.v_load.norm(),
        "practical": sc.is_practical(),
    });
    let bytes = serde_json::to_vec_pretty(&summary).expect("summary serializes");
    let mut out = Outcome::file(name, bytes);
    out.warnings = warnings;
    out.summary = Some(summary);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{parse_config_str, ParseOptions};

    fn small_config(requests: &str) -> ScenarioConfig {
        let text = format!(
            "[coupling]\nsegments_per_turn = 64\n[analysis]\npoints = 101\n{requests}"
        );
        parse_config_str(&text, ParseOptions { allow_defaults: true }).unwrap()
    }

    #[test]
    fn digest_tracks_normalized_values() {
        let a = small_config("");
        let b = parse_config_str(
            "[coupling]\nsegments_per_turn = 64\n[analysis]\npoints = 101\nf_start = \"20000 kHz\"\n",
            ParseOptions { allow_defaults: true },
        )
        .unwrap();
        assert_eq!(config_digest(&a), config_digest(&b));
        assert_eq!(config_digest(&a).len(), 64);
        let mut c = a.clone();
        c.scenario.z_eye = 0.151;
        assert_ne!(config_digest(&a), config_digest(&c));
    }

    #[test]
    fn every_request_is_reported_once() {
        let config = small_config(
            "[[request]]\nkind = \"link\"\n[[request]]\nkind = \"spectrum\"\n[[request]]\nkind = \"dual_mode\"\n\
             [[request]]\nkind = \"field_map\"\nu_count = 3\nv_count = 3\n",
        );
        let dir = tempfile::tempdir().unwrap();
        let report = run_scenario(
            &config,
            &RunOptions {
                out_dir: dir.path().to_path_buf(),
                threads: Some(2),
            },
        )
        .unwrap();
        assert_eq!(report.requests.len(), 4);
        assert_eq!(report.exit_code(), 0);
        for (i, r) in report.requests.iter().enumerate() {
            assert_eq!(r.index, i);
            assert_eq!(r.status, Status::Ok);
            assert!(dir.path().join(&r.outputs[0]).exists());
        }
        // the necklace's current-sheet value is flagged in the link summary
        assert!(report.requests[0].warnings.iter().any(|w| w.starts_with("transmitter")));
        let text = std::fs::read_to_string(dir.path().join(REPORT_FILE)).unwrap();
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn failed_request_sets_exit_code() {
        let config = small_config(
            "[[request]]\nkind = \"sweep\"\nparameter = \"tx_angle\"\nvalues = [\"95 deg\"]\n\
             [[request]]\nkind = \"field_map\"\nu_count = 2\nv_count = 2\n",
        );
        let dir = tempfile::tempdir().unwrap();
        let report = run_scenario(
            &config,
            &RunOptions {
                out_dir: dir.path().to_path_buf(),
                threads: None,
            },
        )
        .unwrap();
        assert_eq!(report.requests[0].status, Status::Failed);
        assert!(report.requests[0].error.as_deref().unwrap().contains("tx_angle"));
        assert!(report.requests[0].outputs.is_empty());
        assert_eq!(report.requests[1].status, Status::Ok);
        assert_eq!(report.exit_code(), 1);
    }
}
