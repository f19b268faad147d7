//! Biot-Savart field of polyline filaments.

use serde::{Deserialize, Serialize};

use crate::geometry::FilamentCoil;
use crate::sum::{ordered_map, VecAccumulator};
use crate::{Error, Result, Vec3, MU0_OVER_4PI};

/// Field of a unit current along the straight segment `a -> b` at `p`,
/// without the `mu0 / 4pi` factor. Errors if `p` is within `wire_radius` of
/// the segment.
#[inline]
pub(crate) fn segment_kernel(a: &Vec3, b: &Vec3, p: &Vec3, wire_radius: f64) -> Result<Vec3> {
    let r1 = a - p;
    let r2 = b - p;
    let dl = b - a;
    let t = (-r1.dot(&dl) / dl.norm_squared()).clamp(0.0, 1.0);
    let distance = (r1 + t * dl).norm();
    if distance < wire_radius || distance == 0.0 {
        return Err(Error::SingularPoint {
            distance,
            wire_radius,
        });
    }
    let n1 = r1.norm();
    let n2 = r2.norm();
    let denom = n1 * n2 * (n1 * n2 + r1.dot(&r2));
    Ok(r1.cross(&r2) * ((n1 + n2) / denom))
}

/// Field of `current` (A) flowing along the closed circuit path of `coil`,
/// evaluated at `point` (T).
pub fn b_field(coil: &FilamentCoil, current: f64, point: &Vec3) -> Result<Vec3> {
    let path = coil.circuit_points();
    b_field_of_path(&path, coil.wire_radius(), current, point)
}

pub(crate) fn b_field_of_path(path: &[Vec3], wire_radius: f64, current: f64, point: &Vec3) -> Result<Vec3> {
    let mut acc = VecAccumulator::default();
    for w in path.windows(2) {
        acc.add(&segment_kernel(&w[0], &w[1], point, wire_radius)?);
    }
    Ok(acc.value() * (MU0_OVER_4PI * current))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Plane {
    /// `u = x`, `v = y`, `z = offset`.
    Xy,
    /// `u = x`, `v = z`, `y = offset`.
    Xz,
    /// `u = y`, `v = z`, `x = offset`.
    Yz,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn value(&self, i: usize) -> f64 {
        if self.count <= 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.count - 1) as f64
        }
    }
}

/// Axis-aligned planar sampling grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneGrid {
    pub plane: Plane,
    pub offset: f64,
    pub u: GridAxis,
    pub v: GridAxis,
}

impl PlaneGrid {
    /// Sample positions, row-major (`v` outer, `u` inner).
    pub fn points(&self) -> Vec<Vec3> {
        let mut out = Vec::with_capacity(self.u.count * self.v.count);
        for j in 0..self.v.count {
            let v = self.v.value(j);
            for i in 0..self.u.count {
                let u = self.u.value(i);
                out.push(match self.plane {
                    Plane::Xy => Vec3::new(u, v, self.offset),
                    Plane::Xz => Vec3::new(u, self.offset, v),
                    Plane::Yz => Vec3::new(self.offset, u, v),
                });
            }
        }
        out
    }
}

/// One field-map sample. `b` is `None` where the point is too close to a
/// filament to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub position: Vec3,
    pub b: Option<Vec3>,
}

/// Sample the field of `coil` over `grid`.
pub fn field_map(coil: &FilamentCoil, current: f64, grid: &PlaneGrid) -> Vec<FieldSample> {
    let path = coil.circuit_points();
    let radius = coil.wire_radius();
    ordered_map(&grid.points(), |p| FieldSample {
        position: *p,
        b: b_field_of_path(&path, radius, current, p).ok(),
    })
}
