//! Flux of one coil's field through the turns of another.
//!
//! Each receiver turn spans the planar region `rho < r(theta)` at the turn's
//! height in the receiver's local frame. Summed over turns this is exactly
//! the region bounded by the spiral closed by its return lead, so the linked
//! flux equals the line integral of the vector potential around the closed
//! receiver path.

use std::f64::consts::TAU;

use super::biot_savart::b_field_of_path;
use super::quadrature::gauss_legendre;
use crate::geometry::FilamentCoil;
use crate::sum::{ordered_map, sum};
use crate::{Error, Result, Vec3};

const THETA_ORDER: usize = 4;
const BASE_PANELS: usize = 8;
const BASE_RADIAL_ORDER: usize = 4;
const MAX_LEVEL: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxEstimate {
    /// Total flux linked by all receiver turns (Wb).
    pub flux: f64,
    /// Relative change between the last two refinement levels.
    pub convergence_estimate: f64,
}

/// Quadrature points and weights (area element already applied) for the
/// spanning surfaces of `coil` at refinement `level`.
fn surface_rule(coil: &FilamentCoil, level: u32) -> (Vec<Vec3>, Vec<f64>) {
    let panels = BASE_PANELS << level;
    let radial = BASE_RADIAL_ORDER << level;
    let (tx, tw) = gauss_legendre(THETA_ORDER);
    let (rx, rw) = gauss_legendre(radial);
    let pose = coil.pose();
    let panel_width = TAU / panels as f64;

    let mut points = Vec::new();
    let mut weights = Vec::new();
    for surface in coil.surfaces() {
        for p in 0..panels {
            let theta0 = p as f64 * panel_width;
            for (xt, wt) in tx.iter().zip(&tw) {
                let theta = theta0 + 0.5 * panel_width * (xt + 1.0);
                let w_theta = 0.5 * panel_width * wt;
                let outer = surface.radius_at(theta);
                let (s, c) = theta.sin_cos();
                for (xr, wr) in rx.iter().zip(&rw) {
                    let rho = 0.5 * outer * (xr + 1.0);
                    let w_rho = 0.5 * outer * wr;
                    let local = Vec3::new(rho * c, rho * s, surface.height);
                    points.push(pose.rotation * local + pose.center);
                    weights.push(w_theta * w_rho * rho);
                }
            }
        }
    }
    (points, weights)
}

/// Flux through the turns of `rx` due to `current` (A) in `tx`, refined until
/// successive levels differ by less than `tolerance` (relative).
pub fn flux_through(tx: &FilamentCoil, rx: &FilamentCoil, current: f64, tolerance: f64) -> Result<FluxEstimate> {
    let path = tx.circuit_points();
    let wire_radius = tx.wire_radius();
    let normal = rx.axis();

    let mut previous: Option<f64> = None;
    let mut change = f64::INFINITY;
    let mut flux = 0.0;
    for level in 0..=MAX_LEVEL {
        let (points, weights) = surface_rule(rx, level);
        let fields = ordered_map(&points, |p| {
            b_field_of_path(&path, wire_radius, current, p)
        });
        let mut terms = Vec::with_capacity(points.len());
        let mut magnitude = Vec::with_capacity(points.len());
        for (b, w) in fields.into_iter().zip(&weights) {
            let b = b?;
            terms.push(b.dot(&normal) * w);
            magnitude.push(b.norm() * w);
        }
        flux = sum(terms);
        let scale = sum(magnitude);
        if let Some(prev) = previous {
            let diff = (flux - prev).abs();
            change = if diff == 0.0 {
                0.0
            } else {
                diff / flux.abs().max(1e-9 * scale)
            };
            if change < tolerance {
                return Ok(FluxEstimate {
                    flux,
                    convergence_estimate: change,
                });
            }
        }
        previous = Some(flux);
    }
    Err(Error::NotConverged {
        estimate: flux,
        change,
        tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::b_field;
    use crate::geometry::{apply_pose, build_filament_coil, CoilSpec, Pose};
    use std::f64::consts::PI;

    fn loop_of_radius(r: f64) -> FilamentCoil {
        let spec = CoilSpec {
            turns: 1,
            inner_radius: r,
            ..CoilSpec::lens()
        };
        build_filament_coil(&spec, 720).unwrap()
    }

    #[test]
    fn small_concentric_loop_sees_center_field() {
        let tx = loop_of_radius(0.1);
        let rx = loop_of_radius(0.004);
        let est = flux_through(&tx, &rx, 1.0, 1e-6).unwrap();
        let b0 = b_field(&tx, 1.0, &Vec3::zeros()).unwrap().z;
        let approx = b0 * PI * 0.004 * 0.004;
        assert!((est.flux / approx - 1.0).abs() < 0.01);
    }

    #[test]
    fn zero_current_gives_zero_flux() {
        let tx = loop_of_radius(0.1);
        let rx = apply_pose(&loop_of_radius(0.01), &Pose::tilted(Vec3::new(0.05, 0.0, 0.1), 30.0));
        let est = flux_through(&tx, &rx, 0.0, 1e-6).unwrap();
        assert_eq!(est.flux, 0.0);
    }

    #[test]
    fn reversing_current_flips_flux() {
        let tx = build_filament_coil(&CoilSpec::necklace(), 90).unwrap();
        let rx = apply_pose(
            &build_filament_coil(&CoilSpec::lens(), 90).unwrap(),
            &Pose::tilted(Vec3::new(0.092, 0.0, 0.15), 90.0),
        );
        let a = flux_through(&tx, &rx, 1.0, 1e-6).unwrap();
        let b = flux_through(&tx, &rx, -1.0, 1e-6).unwrap();
        assert_eq!(a.flux, -b.flux);
        assert!(a.convergence_estimate < 1e-6);
    }

    #[test]
    fn spiral_surfaces_cover_expected_area() {
        // uniform-field limit: flux / B equals the summed turn areas
        let rx = build_filament_coil(&CoilSpec::lens(), 360).unwrap();
        let (_, weights) = surface_rule(&rx, 2);
        let area: f64 = weights.iter().sum();
        let expected: f64 = rx.surfaces().iter().map(|s| s.area()).sum();
        assert!((area / expected - 1.0).abs() < 1e-12);
    }
}
