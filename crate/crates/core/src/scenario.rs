//! Necklace/lens placement and the link it produces.
//!
//! The transmitter is centered at the origin and tilted by `tx_angle` about
//! the lateral `y` axis. The receiver sits at `(x_eye, 0, z_eye)` with its
//! axis along `+x`, i.e. perpendicular to the untilted transmitter axis.

use serde::{Deserialize, Serialize};

use crate::circuit::{receiver_capacitance, tune_capacitance, Esr, LinkCircuit};
use crate::coupling::{mutual_inductance, CouplingMethod, MutualInductance, DEFAULT_TOLERANCE};
use crate::error::{non_negative, positive};
use crate::geometry::{apply_pose, build_filament_coil, CoilSpec, FilamentCoil, Pose, DEFAULT_SEGMENTS_PER_TURN};
use crate::lumped::{estimate_inductance, InductanceEstimate};
use crate::{Error, Result, Vec3};

/// Where coil series resistance comes from.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum EsrMode {
    /// Skin-effect resistance, recomputed per frequency.
    #[default]
    SkinEffect,
    /// Fixed resistances (ohm).
    Fixed { tx: f64, rx: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircuitValues {
    pub r_source: f64,
    pub r_load: f64,
    pub tuned_frequency: f64,
    pub v_source: f64,
    /// Inductance overrides (H). Without them the current-sheet estimate is used.
    pub tx_inductance: Option<f64>,
    pub rx_inductance: Option<f64>,
    pub esr: EsrMode,
}

impl Default for CircuitValues {
    fn default() -> Self {
        Self {
            r_source: 50.0,
            r_load: 1000.0,
            tuned_frequency: 26e6,
            v_source: 1.0,
            tx_inductance: Some(35e-6),
            rx_inductance: None,
            esr: EsrMode::SkinEffect,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub tx: CoilSpec,
    pub rx: CoilSpec,
    /// Forward offset of the lens from the necklace center (m).
    pub x_eye: f64,
    /// Height of the lens above the necklace center (m).
    pub z_eye: f64,
    /// Necklace tilt (deg).
    pub tx_angle: f64,
    pub circuit: CircuitValues,
}

impl Scenario {
    /// 5-turn 60 mm necklace, 5-turn 4 mm lens, 92 mm forward, 150 mm up,
    /// 40 deg tilt, 50 ohm source, 1 kohm load, tuned to 26 MHz.
    pub fn nominal() -> Self {
        Self {
            tx: CoilSpec::necklace(),
            rx: CoilSpec::lens(),
            x_eye: 0.092,
            z_eye: 0.150,
            tx_angle: 40.0,
            circuit: CircuitValues::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.tx.validate()?;
        self.rx.validate()?;
        non_negative("x_eye", self.x_eye)?;
        non_negative("z_eye", self.z_eye)?;
        if !self.tx_angle.is_finite() {
            return Err(Error::InvalidParameter {
                field: "tx_angle",
                reason: "must be finite".into(),
            });
        }
        let c = &self.circuit;
        positive("r_source", c.r_source)?;
        positive("r_load", c.r_load)?;
        positive("tuned_frequency", c.tuned_frequency)?;
        positive("v_source", c.v_source)?;
        if let EsrMode::Fixed { tx, rx } = c.esr {
            non_negative("esr_tx", tx)?;
            non_negative("esr_rx", rx)?;
        }
        Ok(())
    }

    /// Configurations with the lens directly above the necklace center are
    /// geometrically possible but not wearable.
    pub fn is_practical(&self) -> bool {
        self.x_eye > 0.0
    }

    pub fn inductances(&self) -> Result<(InductanceEstimate, InductanceEstimate)> {
        Ok((
            estimate_inductance(&self.tx, self.circuit.tx_inductance)?,
            estimate_inductance(&self.rx, self.circuit.rx_inductance)?,
        ))
    }
}

/// Transmitter and receiver placements for `sc`.
pub fn scenario_poses(sc: &Scenario) -> (Pose, Pose) {
    (
        Pose::tilted(Vec3::zeros(), sc.tx_angle),
        Pose::tilted(Vec3::new(sc.x_eye, 0.0, sc.z_eye), 90.0),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingOptions {
    pub method: CouplingMethod,
    pub tolerance: f64,
    pub segments_per_turn: usize,
}

impl Default for CouplingOptions {
    fn default() -> Self {
        Self {
            method: CouplingMethod::Neumann,
            tolerance: DEFAULT_TOLERANCE,
            segments_per_turn: DEFAULT_SEGMENTS_PER_TURN,
        }
    }
}

/// Discretized coils and inductances of a scenario, reusable while only the
/// placement changes.
#[derive(Debug, Clone)]
pub struct LinkModel {
    tx_coil: FilamentCoil,
    rx_coil: FilamentCoil,
    pub l_tx: InductanceEstimate,
    pub l_rx: InductanceEstimate,
    pub options: CouplingOptions,
}

impl LinkModel {
    pub fn new(sc: &Scenario, options: CouplingOptions) -> Result<Self> {
        sc.validate()?;
        let (l_tx, l_rx) = sc.inductances()?;
        Ok(Self {
            tx_coil: build_filament_coil(&sc.tx, options.segments_per_turn)?,
            rx_coil: build_filament_coil(&sc.rx, options.segments_per_turn)?,
            l_tx,
            l_rx,
            options,
        })
    }

    /// Coils placed according to `sc`.
    pub fn posed_coils(&self, sc: &Scenario) -> (FilamentCoil, FilamentCoil) {
        let (tx_pose, rx_pose) = scenario_poses(sc);
        (apply_pose(&self.tx_coil, &tx_pose), apply_pose(&self.rx_coil, &rx_pose))
    }

    pub fn mutual(&self, sc: &Scenario) -> Result<MutualInductance> {
        sc.validate()?;
        let (tx, rx) = self.posed_coils(sc);
        mutual_inductance(&tx, &rx, self.options.method, self.options.tolerance)
    }

    /// Circuit for `sc` with mutual inductance `mutual`. When `tuned`, both
    /// meshes resonate at the scenario's tuned frequency using this model's
    /// inductances.
    pub fn link(&self, sc: &Scenario, mutual: f64, tuned: bool) -> LinkCircuit {
        let c = &sc.circuit;
        let esr = match c.esr {
            EsrMode::SkinEffect => Esr::SkinEffect { tx: sc.tx, rx: sc.rx },
            EsrMode::Fixed { tx, rx } => Esr::Fixed { tx, rx },
        };
        let (c_tx, c_rx) = if tuned {
            let c_tx = tune_capacitance(self.l_tx.value, c.tuned_frequency);
            (Some(c_tx), Some(receiver_capacitance(self.l_tx.value, c_tx, self.l_rx.value)))
        } else {
            (None, None)
        };
        LinkCircuit {
            l_tx: self.l_tx.value,
            l_rx: self.l_rx.value,
            esr,
            mutual,
            r_source: c.r_source,
            r_load: c.r_load,
            c_tx,
            c_rx,
            v_source: c.v_source,
            parasitic_tx: sc.tx.parasitic_capacitance,
            parasitic_rx: sc.rx.parasitic_capacitance,
        }
    }
}
