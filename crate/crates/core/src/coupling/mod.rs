//! Fields, flux and mutual inductance between posed filament coils.
//!
//! Two independent routes to the mutual inductance are provided: the Neumann
//! double line integral over both closed current paths, and the flux of the
//! transmitter's Biot-Savart field through the receiver's turns. The
//! closed-form coaxial-loop result in [`coaxial_mutual_oracle`] validates
//! both.
//!
//! Self-inductance is not computed here; see [`crate::lumped`].

mod biot_savart;
mod elliptic;
mod flux;
mod neumann;
mod quadrature;

use serde::{Deserialize, Serialize};

pub use biot_savart::{b_field, field_map, FieldSample, GridAxis, Plane, PlaneGrid};
pub use elliptic::{coaxial_mutual_oracle, complete_elliptic};
pub use flux::{flux_through, FluxEstimate};

use crate::error::positive;
use crate::geometry::FilamentCoil;
use crate::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CouplingMethod {
    #[default]
    Neumann,
    Flux,
}

/// Mutual inductance between two coils, signed by the winding orientations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MutualInductance {
    pub value: f64,
    pub method: CouplingMethod,
    pub convergence_estimate: f64,
}

pub fn mutual_inductance(
    tx: &FilamentCoil,
    rx: &FilamentCoil,
    method: CouplingMethod,
    tolerance: f64,
) -> Result<MutualInductance> {
    positive("tolerance", tolerance)?;
    let (value, convergence_estimate) = match method {
        CouplingMethod::Neumann => {
            let est = neumann::neumann(tx, rx, tolerance)?;
            (est.mutual, est.convergence_estimate)
        }
        CouplingMethod::Flux => {
            let est = flux::flux_through(tx, rx, 1.0, tolerance)?;
            (est.flux, est.convergence_estimate)
        }
    };
    Ok(MutualInductance {
        value,
        method,
        convergence_estimate,
    })
}

/// Mutual inductance together with the coupling coefficient it implies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingResult {
    pub mutual: f64,
    pub k: f64,
    pub method: CouplingMethod,
    pub convergence_estimate: f64,
}

impl CouplingResult {
    pub fn new(mutual: &MutualInductance, l_tx: f64, l_rx: f64) -> Result<Self> {
        Ok(Self {
            mutual: mutual.value,
            k: coupling_coefficient(mutual.value, l_tx, l_rx)?,
            method: mutual.method,
            convergence_estimate: mutual.convergence_estimate,
        })
    }
}

/// `k = |M| / sqrt(L_tx L_rx)`; errors when `k >= 1`.
pub fn coupling_coefficient(mutual: f64, l_tx: f64, l_rx: f64) -> Result<f64> {
    positive("l_tx", l_tx)?;
    positive("l_rx", l_rx)?;
    let k = mutual.abs() / (l_tx * l_rx).sqrt();
    if !(k < 1.0) {
        return Err(Error::CouplingOutOfRange(k));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{apply_pose, build_filament_coil, CoilSpec, Pose};
    use crate::Vec3;
    use approx::assert_relative_eq;

    fn single_loop(r: f64, segments: usize) -> FilamentCoil {
        let spec = CoilSpec {
            turns: 1,
            inner_radius: r,
            ..CoilSpec::lens()
        };
        build_filament_coil(&spec, segments).unwrap()
    }

    #[test]
    fn coupling_coefficient_examples() {
        assert_eq!(coupling_coefficient(0.0, 35e-6, 0.4e-6).unwrap(), 0.0);
        let k = coupling_coefficient(1e-6, 35e-6, 0.4e-6).unwrap();
        assert_relative_eq!(k, 1e-6 / 14e-12f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(k, 0.267, max_relative = 1e-3);
        assert_eq!(
            coupling_coefficient(-1e-6, 0.4e-6, 35e-6).unwrap(),
            coupling_coefficient(1e-6, 35e-6, 0.4e-6).unwrap()
        );
        assert!(matches!(
            coupling_coefficient(1e-6, 1e-6, 1e-6),
            Err(Error::CouplingOutOfRange(_))
        ));
        assert!(coupling_coefficient(1e-9, 0.0, 1e-6).is_err());
    }

    #[test]
    fn unit_loops_match_oracle() {
        let a = single_loop(1.0, 720);
        let b = apply_pose(&single_loop(1.0, 720), &Pose::tilted(Vec3::new(0.0, 0.0, 1.0), 0.0));
        let m = mutual_inductance(&a, &b, CouplingMethod::Neumann, 1e-6).unwrap();
        let oracle = coaxial_mutual_oracle(1.0, 1.0, 1.0).unwrap();
        assert!((m.value / oracle - 1.0).abs() < 1e-3);
    }

    #[test]
    fn perpendicular_loop_on_axis_has_no_coupling() {
        let tx = single_loop(0.06, 720);
        let rx = apply_pose(
            &single_loop(0.005, 360),
            &Pose::tilted(Vec3::new(0.0, 0.0, 0.15), 90.0),
        );
        let aligned = apply_pose(
            &single_loop(0.005, 360),
            &Pose::tilted(Vec3::new(0.0, 0.0, 0.15), 0.0),
        );
        let reference = mutual_inductance(&tx, &aligned, CouplingMethod::Neumann, 1e-4)
            .unwrap()
            .value;
        for method in [CouplingMethod::Neumann, CouplingMethod::Flux] {
            let m = mutual_inductance(&tx, &rx, method, 1e-4).unwrap().value;
            assert!(m.abs() < 1e-9 * reference.abs(), "{method:?}: {m:e}");
        }
    }

    #[test]
    fn touching_coils_are_rejected() {
        let a = single_loop(0.01, 64);
        let b = apply_pose(&single_loop(0.01, 64), &Pose::tilted(Vec3::new(0.0, 0.0, 1e-5), 0.0));
        assert!(matches!(
            mutual_inductance(&a, &b, CouplingMethod::Neumann, 1e-3),
            Err(Error::SeparationViolation { .. })
        ));
    }

    #[test]
    fn refinement_change_is_bounded_by_estimate() {
        let tx = build_filament_coil(&CoilSpec::necklace(), 32).unwrap();
        let rx = apply_pose(
            &build_filament_coil(&CoilSpec::lens(), 32).unwrap(),
            &Pose::tilted(Vec3::new(0.05, 0.0, 0.03), 90.0),
        );
        let coarse = neumann::neumann(&tx, &rx, 1e-3).unwrap();
        let fine = neumann::neumann(&tx, &rx, coarse.convergence_estimate * 0.5).unwrap();
        let change = ((fine.mutual - coarse.mutual) / fine.mutual).abs();
        assert!(change < coarse.convergence_estimate, "{change:e} vs {:e}", coarse.convergence_estimate);
    }

    /// Vector area `1/2 closed-integral r x dl` of a closed path.
    fn vector_area(coil: &FilamentCoil) -> Vec3 {
        let p = coil.circuit_points();
        p.windows(2)
            .map(|w| 0.5 * (w[0] - coil.center()).cross(&(w[1] - w[0])))
            .sum()
    }

    #[test]
    fn distant_coils_match_dipole_coupling() {
        let tx = single_loop(0.01, 360);
        let rx = apply_pose(
            &build_filament_coil(&CoilSpec::lens(), 360).unwrap(),
            &Pose::about_axis(Vec3::new(1.4, 0.5, 1.5), Vec3::new(1.0, -2.0, 0.5), 35.0),
        );
        let (m1, m2) = (vector_area(&tx), vector_area(&rx));
        let r = rx.center() - tx.center();
        let d = r.norm();
        assert!(d > 100.0 * 2.0 * tx.extent().max(rx.extent()));
        let u = r / d;
        let dipole = crate::MU0_OVER_4PI / d.powi(3) * (3.0 * m1.dot(&u) * m2.dot(&u) - m1.dot(&m2));
        let m = mutual_inductance(&tx, &rx, CouplingMethod::Neumann, 1e-5).unwrap().value;
        assert!((m / dipole - 1.0).abs() < 1e-3, "{m:e} vs {dipole:e}");
    }

    fn scaled(spec: CoilSpec, a: f64) -> CoilSpec {
        CoilSpec {
            inner_radius: a * spec.inner_radius,
            wire_diameter: a * spec.wire_diameter,
            wire_spacing: a * spec.wire_spacing,
            ..spec
        }
    }

    #[test]
    fn mutual_scales_with_geometry() {
        let at = |a: f64| {
            let tx = apply_pose(
                &build_filament_coil(&scaled(CoilSpec::necklace(), a), 90).unwrap(),
                &Pose::tilted(Vec3::zeros(), 40.0),
            );
            let rx = apply_pose(
                &build_filament_coil(&scaled(CoilSpec::lens(), a), 90).unwrap(),
                &Pose::tilted(a * Vec3::new(0.092, 0.0, 0.150), 90.0),
            );
            mutual_inductance(&tx, &rx, CouplingMethod::Neumann, 1e-4).unwrap().value
        };
        let (m1, m3) = (at(1.0), at(3.0));
        assert!((m3 / (3.0 * m1) - 1.0).abs() < 5e-3, "{m1:e} {m3:e}");
    }

    #[test]
    fn methods_agree_at_nominal_placement() {
        let tx = apply_pose(
            &build_filament_coil(&CoilSpec::necklace(), 180).unwrap(),
            &Pose::tilted(Vec3::zeros(), 40.0),
        );
        let rx = apply_pose(
            &build_filament_coil(&CoilSpec::lens(), 180).unwrap(),
            &Pose::tilted(Vec3::new(0.092, 0.0, 0.150), 90.0),
        );
        let n = mutual_inductance(&tx, &rx, CouplingMethod::Neumann, 1e-4).unwrap().value;
        let f = mutual_inductance(&tx, &rx, CouplingMethod::Flux, 1e-4).unwrap().value;
        assert!((n / f - 1.0).abs() < 1e-2, "{n:e} vs {f:e}");
        let back = mutual_inductance(&rx, &tx, CouplingMethod::Neumann, 1e-4).unwrap().value;
        assert!((back / n - 1.0).abs() < 5e-3);
    }

    #[test]
    fn closely_stacked_coils_have_k_below_one() {
        let spec = CoilSpec::lens();
        let l = crate::lumped::current_sheet_inductance(&spec).unwrap();
        let a = build_filament_coil(&spec, 180).unwrap();
        let b = apply_pose(&a, &Pose::tilted(Vec3::new(0.0, 0.0, 1e-3), 0.0));
        let m = mutual_inductance(&a, &b, CouplingMethod::Neumann, 1e-4).unwrap();
        let k = coupling_coefficient(m.value, l, l).unwrap();
        assert!(k > 0.3 && k < 1.0, "{k}");
    }
}
