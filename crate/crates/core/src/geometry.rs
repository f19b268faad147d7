//! Coil descriptions, filament discretization and rigid placement.
//!
//! A coil is wound as an Archimedean spiral in its local `z = 0` plane. The
//! radius grows by one pitch (`wire_diameter + wire_spacing`) per turn and
//! passes through the nominal turn radius halfway around each turn, so the
//! mean radius of turn `i` is `inner_radius + i * pitch`. Helical (lens)
//! coils use the same winding projected onto a sphere.
//!
//! Multi-turn windings are open curves. Field and coupling code closes them
//! with a straight return lead from the outer end back to the inner start,
//! the path a crossover connection takes on a real flat spiral.

use std::f64::consts::{PI, TAU};

use nalgebra::{Rotation3, Unit};
use serde::{Deserialize, Serialize};

use crate::error::{non_negative, positive};
use crate::sum::Accumulator;
use crate::{Error, Result, Vec3};

/// Conductivity of annealed copper (S/m).
pub const COPPER_CONDUCTIVITY: f64 = 5.8e7;

/// Bare diameter of 36 AWG wire (m).
pub const AWG36_DIAMETER: f64 = 0.137e-3;

pub const DEFAULT_SEGMENTS_PER_TURN: usize = 720;
pub const MIN_SEGMENTS_PER_TURN: usize = 16;

/// Default lens curvature for helical receivers (m). Assumed, not measured.
pub const DEFAULT_SPHERE_RADIUS: f64 = 0.012;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CoilShape {
    FlatSpiral,
    /// Winding projected onto a sphere of the given radius (m).
    Helical { sphere_radius: f64 },
}

/// Geometric and material description of a multi-turn spiral coil. Lengths in
/// meters, conductivity in S/m.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoilSpec {
    pub turns: u32,
    pub inner_radius: f64,
    pub wire_diameter: f64,
    pub wire_spacing: f64,
    pub shape: CoilShape,
    pub conductivity: f64,
    pub parasitic_capacitance: Option<f64>,
}

impl CoilSpec {
    /// Flat copper spiral of 36 AWG wire with 0.5 mm spacing.
    pub fn awg36_spiral(turns: u32, inner_radius: f64) -> Self {
        Self {
            turns,
            inner_radius,
            wire_diameter: AWG36_DIAMETER,
            wire_spacing: 0.5e-3,
            shape: CoilShape::FlatSpiral,
            conductivity: COPPER_CONDUCTIVITY,
            parasitic_capacitance: None,
        }
    }

    /// The necklace transmitter: 5 turns, 60 mm inner radius.
    pub fn necklace() -> Self {
        Self::awg36_spiral(5, 60e-3)
    }

    /// The contact-lens receiver: 5 turns, 4 mm inner radius.
    pub fn lens() -> Self {
        Self::awg36_spiral(5, 4e-3)
    }

    pub fn validate(&self) -> Result<()> {
        if self.turns == 0 {
            return Err(Error::InvalidParameter {
                field: "turns",
                reason: "must be at least 1".into(),
            });
        }
        positive("inner_radius", self.inner_radius)?;
        positive("wire_diameter", self.wire_diameter)?;
        non_negative("wire_spacing", self.wire_spacing)?;
        positive("conductivity", self.conductivity)?;
        if let Some(c) = self.parasitic_capacitance {
            positive("parasitic_capacitance", c)?;
        }
        if self.turns > 1 && self.inner_radius <= 0.5 * self.pitch() {
            return Err(Error::InvalidParameter {
                field: "inner_radius",
                reason: format!(
                    "must exceed half the winding pitch ({} m) for a multi-turn spiral",
                    0.5 * self.pitch()
                ),
            });
        }
        if let CoilShape::Helical { sphere_radius } = self.shape {
            positive("sphere_radius", sphere_radius)?;
            if self.max_winding_radius() >= sphere_radius {
                return Err(Error::InvalidParameter {
                    field: "sphere_radius",
                    reason: format!(
                        "winding reaches radius {} m, which does not fit on a sphere of radius {sphere_radius} m",
                        self.max_winding_radius()
                    ),
                });
            }
        }
        Ok(())
    }

    /// Radial advance per turn, `d + s`.
    pub fn pitch(&self) -> f64 {
        self.wire_diameter + self.wire_spacing
    }

    /// Radial depth of the winding, `N (d + s)`.
    pub fn radial_depth(&self) -> f64 {
        f64::from(self.turns) * self.pitch()
    }

    pub fn inner_diameter(&self) -> f64 {
        2.0 * self.inner_radius
    }

    pub fn outer_diameter(&self) -> f64 {
        2.0 * self.inner_radius + 2.0 * self.radial_depth()
    }

    /// Largest radius the spiral centerline reaches.
    fn max_winding_radius(&self) -> f64 {
        if self.turns == 1 {
            self.inner_radius
        } else {
            self.inner_radius + (f64::from(self.turns) - 0.5) * self.pitch()
        }
    }
}

/// Per-turn radii: `inner_radius + i (d + s)` for `i = 0..N`.
pub fn turn_radii(spec: &CoilSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    let pitch = spec.pitch();
    Ok((0..spec.turns)
        .map(|i| spec.inner_radius + f64::from(i) * pitch)
        .collect())
}

/// Rigid placement: points are rotated about the local origin, then
/// translated to `center`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub center: Vec3,
    pub rotation: Rotation3<f64>,
}

impl Pose {
    pub fn identity() -> Self {
        Self {
            center: Vec3::zeros(),
            rotation: Rotation3::identity(),
        }
    }

    /// Coil plane tilted about the world `y` axis. At 0 deg the coil plane is
    /// horizontal and its axis points along `+z`; positive angles lean the
    /// axis toward `+x`.
    pub fn tilted(center: Vec3, tilt_deg: f64) -> Self {
        Self::about_axis(center, Vec3::y(), tilt_deg)
    }

    pub fn about_axis(center: Vec3, axis: Vec3, angle_deg: f64) -> Self {
        let rotation = Rotation3::from_axis_angle(&Unit::new_normalize(axis), angle_deg.to_radians());
        Self { center, rotation }
    }

    /// Coil axis in the world frame.
    pub fn axis(&self) -> Vec3 {
        self.rotation * Vec3::z()
    }

    /// Angle between the coil axis and world `z`, in degrees.
    pub fn tilt_deg(&self) -> f64 {
        self.axis().z.clamp(-1.0, 1.0).acos().to_degrees()
    }

    /// `self` applied after `inner`.
    pub fn compose(&self, inner: &Pose) -> Pose {
        Pose {
            center: self.rotation * inner.center + self.center,
            rotation: self.rotation * inner.rotation,
        }
    }

    fn is_identity(&self) -> bool {
        self.center == Vec3::zeros() && self.rotation == Rotation3::identity()
    }
}

impl Default for Pose {
    fn default() -> Self {
        Self::identity()
    }
}

/// Spanning surface of one turn, in the coil's local frame: the region
/// `rho < r(theta)` of the plane `z = height`, with `r` growing linearly from
/// `r_start` at `theta = 0` to `r_end` at `theta = 2 pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurnSurface {
    pub r_start: f64,
    pub r_end: f64,
    pub height: f64,
}

impl TurnSurface {
    pub fn radius_at(&self, theta: f64) -> f64 {
        self.r_start + (self.r_end - self.r_start) * theta / TAU
    }

    /// Area of the spanned region, `(1/2) integral r(theta)^2 dtheta`.
    pub fn area(&self) -> f64 {
        let (a, b) = (self.r_start, self.r_end);
        PI * (a * a + a * b + b * b) / 3.0
    }
}

/// Polyline model of a posed coil.
#[derive(Debug, Clone, PartialEq)]
pub struct FilamentCoil {
    points: Vec<Vec3>,
    turn_radii: Vec<f64>,
    wire_length: f64,
    wire_radius: f64,
    pose: Pose,
    surfaces: Vec<TurnSurface>,
}

impl FilamentCoil {
    /// Winding vertices in the world frame. Segment `i` runs from
    /// `points[i]` to `points[i + 1]`.
    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn segment_count(&self) -> usize {
        self.points.len() - 1
    }

    pub fn segments(&self) -> impl Iterator<Item = (Vec3, Vec3)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    /// Whether the winding itself is a closed loop (single-turn coils).
    pub fn is_closed(&self) -> bool {
        self.points.first() == self.points.last()
    }

    /// Vertices of the closed current path: the winding plus, for open
    /// windings, the straight return lead back to the start.
    pub fn circuit_points(&self) -> Vec<Vec3> {
        let mut path = self.points.clone();
        if !self.is_closed() {
            path.push(self.points[0]);
        }
        path
    }

    pub fn turn_radii(&self) -> &[f64] {
        &self.turn_radii
    }

    /// Length of the winding, excluding the return lead (m).
    pub fn wire_length(&self) -> f64 {
        self.wire_length
    }

    pub fn wire_radius(&self) -> f64 {
        self.wire_radius
    }

    /// Accumulated placement of the local winding frame.
    pub fn pose(&self) -> &Pose {
        &self.pose
    }

    pub fn surfaces(&self) -> &[TurnSurface] {
        &self.surfaces
    }

    pub fn center(&self) -> Vec3 {
        self.pose.center
    }

    pub fn axis(&self) -> Vec3 {
        self.pose.axis()
    }

    /// Largest distance of any vertex from the coil center.
    pub fn extent(&self) -> f64 {
        self.points
            .iter()
            .map(|p| (p - self.pose.center).norm())
            .fold(0.0, f64::max)
    }
}

/// Discretize `spec` with `segments_per_turn` straight segments per turn.
pub fn build_filament_coil(spec: &CoilSpec, segments_per_turn: usize) -> Result<FilamentCoil> {
    if segments_per_turn < MIN_SEGMENTS_PER_TURN {
        return Err(Error::TooFewSegments(segments_per_turn));
    }
    spec.validate()?;
    Ok(wind(spec, segments_per_turn))
}

fn wind(spec: &CoilSpec, segments_per_turn: usize) -> FilamentCoil {
    let turns = spec.turns as usize;
    let pitch = spec.pitch();
    let r0 = spec.inner_radius;
    let sag = |rho: f64| match spec.shape {
        CoilShape::FlatSpiral => 0.0,
        CoilShape::Helical { sphere_radius } => {
            -(sphere_radius - (sphere_radius * sphere_radius - rho * rho).sqrt())
        }
    };
    let radius_at = |k: usize| {
        if turns == 1 {
            r0
        } else {
            r0 + pitch * (k as f64 / segments_per_turn as f64 - 0.5)
        }
    };

    let total = turns * segments_per_turn;
    let mut points = Vec::with_capacity(total + 1);
    for k in 0..=total {
        let phase = TAU * (k % segments_per_turn) as f64 / segments_per_turn as f64;
        let rho = radius_at(k);
        points.push(Vec3::new(rho * phase.cos(), rho * phase.sin(), sag(rho)));
    }
    if turns == 1 {
        points[total] = points[0];
    }

    let surfaces = (0..turns)
        .map(|i| {
            let ks = i * segments_per_turn..(i + 1) * segments_per_turn;
            let height = ks.clone().map(|k| points[k].z).sum::<f64>() / segments_per_turn as f64;
            TurnSurface {
                r_start: radius_at(ks.start),
                r_end: radius_at(ks.end),
                height,
            }
        })
        .collect();

    let mut length = Accumulator::default();
    for w in points.windows(2) {
        length.add((w[1] - w[0]).norm());
    }

    FilamentCoil {
        turn_radii: (0..spec.turns)
            .map(|i| r0 + f64::from(i) * pitch)
            .collect(),
        wire_length: length.value(),
        wire_radius: 0.5 * spec.wire_diameter,
        pose: Pose::identity(),
        surfaces,
        points,
    }
}

/// Rotate then translate every point of `coil`.
pub fn apply_pose(coil: &FilamentCoil, pose: &Pose) -> FilamentCoil {
    if pose.is_identity() {
        return coil.clone();
    }
    FilamentCoil {
        points: coil
            .points
            .iter()
            .map(|p| pose.rotation * p + pose.center)
            .collect(),
        pose: pose.compose(&coil.pose),
        ..coil.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn mm(v: &[f64]) -> Vec<f64> {
        v.iter().map(|x| x * 1e3).collect()
    }

    #[test]
    fn lens_turn_radii() {
        let radii = mm(&turn_radii(&CoilSpec::lens()).unwrap());
        let expected = [4.0, 4.637, 5.274, 5.911, 6.548];
        for (r, e) in radii.iter().zip(expected) {
            assert_relative_eq!(*r, e, max_relative = 1e-12);
        }
    }

    #[test]
    fn single_turn_radius() {
        let spec = CoilSpec {
            turns: 1,
            inner_radius: 1.0,
            ..CoilSpec::lens()
        };
        assert_eq!(turn_radii(&spec).unwrap(), vec![1.0]);
    }

    #[test]
    fn necklace_outer_diameter() {
        let spec = CoilSpec::necklace();
        let radii = turn_radii(&spec).unwrap();
        assert_relative_eq!(*radii.last().unwrap(), 62.548e-3, max_relative = 1e-12);
        // independent recomputation: D_i + 2 N (d + s) = 120 + 2 * 5 * 0.637 mm
        let by_hand = 120.0e-3 + 10.0 * (0.137e-3 + 0.5e-3);
        assert_relative_eq!(spec.outer_diameter(), by_hand, max_relative = 1e-12);
        assert_relative_eq!(spec.outer_diameter(), 126.37e-3, max_relative = 1e-12);
        let from_radii = 2.0 * (radii.last().unwrap() + spec.pitch());
        assert_relative_eq!(from_radii, spec.outer_diameter(), max_relative = 1e-15);
    }

    #[test]
    fn rejects_invalid_specs() {
        let bad = CoilSpec {
            turns: 0,
            ..CoilSpec::lens()
        };
        assert!(matches!(
            bad.validate(),
            Err(Error::InvalidParameter { field: "turns", .. })
        ));
        let bad = CoilSpec {
            conductivity: 0.0,
            ..CoilSpec::lens()
        };
        assert!(bad.validate().is_err());
        let bad = CoilSpec {
            wire_spacing: -1e-3,
            ..CoilSpec::lens()
        };
        assert!(bad.validate().is_err());
        let bad = CoilSpec {
            shape: CoilShape::Helical { sphere_radius: 5e-3 },
            ..CoilSpec::lens()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn lens_filament_matches_circumference_sum() {
        let spec = CoilSpec::lens();
        let coil = build_filament_coil(&spec, 360).unwrap();
        assert_eq!(coil.segment_count(), 1800);
        let analytic: f64 = turn_radii(&spec).unwrap().iter().map(|r| TAU * r).sum();
        assert!((coil.wire_length() / analytic - 1.0).abs() < 1e-3);
    }

    #[test]
    fn rejects_coarse_discretization() {
        assert_eq!(
            build_filament_coil(&CoilSpec::lens(), 15),
            Err(Error::TooFewSegments(15))
        );
    }

    #[test]
    fn four_segment_loop_is_inscribed_square() {
        let spec = CoilSpec {
            turns: 1,
            inner_radius: 0.5,
            ..CoilSpec::lens()
        };
        let coil = wind(&spec, 4);
        assert_eq!(coil.segment_count(), 4);
        assert!(coil.is_closed());
        for (a, b) in coil.segments() {
            assert_relative_eq!(a.norm(), 0.5, max_relative = 1e-12);
            assert_relative_eq!((b - a).norm(), 0.5 * 2f64.sqrt(), max_relative = 1e-12);
        }
    }

    #[test]
    fn helical_projection_keeps_radii() {
        let flat = build_filament_coil(&CoilSpec::lens(), 360).unwrap();
        let helical = build_filament_coil(
            &CoilSpec {
                shape: CoilShape::Helical {
                    sphere_radius: DEFAULT_SPHERE_RADIUS,
                },
                ..CoilSpec::lens()
            },
            360,
        )
        .unwrap();
        assert_eq!(flat.turn_radii(), helical.turn_radii());
        for (f, h) in flat.points().iter().zip(helical.points()) {
            assert_relative_eq!(f.xy().norm(), h.xy().norm(), max_relative = 1e-12);
            assert!(h.z < 0.0);
        }
        // sag increases outward
        let heights: Vec<f64> = helical.surfaces().iter().map(|s| s.height).collect();
        assert!(heights.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn identity_pose_is_bitwise_noop() {
        let coil = build_filament_coil(&CoilSpec::lens(), 64).unwrap();
        let posed = apply_pose(&coil, &Pose::identity());
        assert_eq!(coil, posed);
    }

    #[test]
    fn quarter_turns_compose() {
        let coil = build_filament_coil(&CoilSpec::necklace(), 64).unwrap();
        let quarter = Pose::about_axis(Vec3::zeros(), Vec3::x(), 90.0);
        let half = Pose::about_axis(Vec3::zeros(), Vec3::x(), 180.0);
        let twice = apply_pose(&apply_pose(&coil, &quarter), &quarter);
        let once = apply_pose(&coil, &half);
        for (a, b) in twice.points().iter().zip(once.points()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn translation_moves_centroid() {
        let spec = CoilSpec {
            turns: 1,
            inner_radius: 1.0,
            ..CoilSpec::lens()
        };
        let coil = build_filament_coil(&spec, 720).unwrap();
        let offset = Vec3::new(0.092, 0.0, 0.150);
        let posed = apply_pose(&coil, &Pose::tilted(offset, 0.0));
        // vertex centroid of the closed loop, excluding the repeated endpoint
        let centroid = |c: &FilamentCoil| {
            let pts = &c.points()[..c.segment_count()];
            pts.iter().sum::<Vec3>() / pts.len() as f64
        };
        let shift = centroid(&posed) - centroid(&coil);
        assert!((shift - offset).norm() < 1e-12);
    }

    #[test]
    fn rotation_is_proper() {
        let pose = Pose::tilted(Vec3::zeros(), 40.0);
        let det = pose.rotation.matrix().determinant();
        assert!((det - 1.0).abs() < 1e-12);
        assert_relative_eq!(pose.tilt_deg(), 40.0, max_relative = 1e-12);
    }

    fn arb_spec() -> impl Strategy<Value = CoilSpec> {
        (1u32..6, 2e-3..0.1f64, 0.05e-3..0.5e-3f64, 0.0..1e-3f64).prop_map(
            |(turns, inner_radius, wire_diameter, wire_spacing)| CoilSpec {
                turns,
                inner_radius,
                wire_diameter,
                wire_spacing,
                shape: CoilShape::FlatSpiral,
                conductivity: COPPER_CONDUCTIVITY,
                parasitic_capacitance: None,
            },
        )
    }

    fn arb_pose() -> impl Strategy<Value = Pose> {
        (
            prop::array::uniform3(-0.5..0.5f64),
            prop::array::uniform3(-1.0..1.0f64),
            -180.0..180.0f64,
        )
            .prop_filter("axis must be nonzero", |(_, a, _)| {
                Vec3::from(*a).norm() > 1e-3
            })
            .prop_map(|(c, a, angle)| Pose::about_axis(Vec3::from(c), Vec3::from(a), angle))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn posed_coils_stay_connected_and_rigid(spec in arb_spec(), pose in arb_pose()) {
            let coil = build_filament_coil(&spec, 32).unwrap();
            let posed = apply_pose(&coil, &pose);
            // connectivity: consecutive segments share endpoints
            let segs: Vec<_> = posed.segments().collect();
            for w in segs.windows(2) {
                prop_assert!((w[0].1 - w[1].0).norm() < 1e-12);
            }
            // segment lengths preserved
            for ((a, b), (c, d)) in coil.segments().zip(posed.segments()) {
                let before = (b - a).norm();
                let after = (d - c).norm();
                prop_assert!((after - before).abs() <= 1e-12 * before.max(1e-3));
            }
            // total length equals sum of segment lengths
            let total: f64 = posed.segments().map(|(a, b)| (b - a).norm()).sum();
            prop_assert!((total - posed.wire_length()).abs() <= 1e-9 * total);
            // pairwise distances preserved on a subsample
            let pts = coil.points();
            let moved = posed.points();
            let step = (pts.len() / 17).max(1);
            for i in (0..pts.len()).step_by(step) {
                for j in (0..pts.len()).step_by(step * 3 + 1) {
                    let before = (pts[i] - pts[j]).norm();
                    let after = (moved[i] - moved[j]).norm();
                    prop_assert!((after - before).abs() <= 1e-12 * before.max(1e-2));
                }
            }
            // radii step by one pitch
            let radii = posed.turn_radii();
            for w in radii.windows(2) {
                prop_assert!(w[1] > w[0]);
                prop_assert!(((w[1] - w[0]) - spec.pitch()).abs() < 1e-12);
            }
        }

        #[test]
        fn length_converges_with_refinement(spec in arb_spec()) {
            let coarse = build_filament_coil(&spec, 180).unwrap().wire_length();
            let fine = build_filament_coil(&spec, 360).unwrap().wire_length();
            prop_assert!(((fine - coarse) / fine).abs() < 5e-4);
        }
    }
}
