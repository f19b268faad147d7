//! Neumann double line integral over closed polyline paths.

use crate::geometry::FilamentCoil;
use crate::sum::{ordered_map, sum};
use crate::{Error, Result, Vec3, MU0_OVER_4PI};

const MAX_LEVEL: u32 = 4;

/// Midpoints and direction vectors of `path` with every segment split into
/// `2^level` equal pieces, as structure-of-arrays.
struct Elements {
    mid: [Vec<f64>; 3],
    dl: [Vec<f64>; 3],
}

impl Elements {
    fn new(path: &[Vec3], level: u32) -> Self {
        let pieces = 1usize << level;
        let n = (path.len() - 1) * pieces;
        let mut mid = [
            Vec::with_capacity(n),
            Vec::with_capacity(n),
            Vec::with_capacity(n),
        ];
        let mut dl = [
            Vec::with_capacity(n),
            Vec::with_capacity(n),
            Vec::with_capacity(n),
        ];
        for w in path.windows(2) {
            let step = (w[1] - w[0]) / pieces as f64;
            for k in 0..pieces {
                let m = w[0] + step * (k as f64 + 0.5);
                for c in 0..3 {
                    mid[c].push(m[c]);
                    dl[c].push(step[c]);
                }
            }
        }
        Self { mid, dl }
    }

    fn len(&self) -> usize {
        self.mid[0].len()
    }
}

/// Per-source-element partial sums: `(sum dl.dl'/r, sum |dl||dl'|/r, min r)`.
fn row_sums(a: &Elements, b: &Elements) -> Vec<(f64, f64, f64)> {
    let rows: Vec<usize> = (0..a.len()).collect();
    ordered_map(&rows, |&i| {
        let (xi, yi, zi) = (a.mid[0][i], a.mid[1][i], a.mid[2][i]);
        let (dxi, dyi, dzi) = (a.dl[0][i], a.dl[1][i], a.dl[2][i]);
        let len_i = (dxi * dxi + dyi * dyi + dzi * dzi).sqrt();
        let (mut signed, mut absolute, mut closest) = (0.0, 0.0, f64::INFINITY);
        for j in 0..b.len() {
            let rx = b.mid[0][j] - xi;
            let ry = b.mid[1][j] - yi;
            let rz = b.mid[2][j] - zi;
            let r = (rx * rx + ry * ry + rz * rz).sqrt();
            let (dxj, dyj, dzj) = (b.dl[0][j], b.dl[1][j], b.dl[2][j]);
            let dot = dxi * dxj + dyi * dyj + dzi * dzj;
            let len_j = (dxj * dxj + dyj * dyj + dzj * dzj).sqrt();
            signed += dot / r;
            absolute += len_i * len_j / r;
            closest = closest.min(r);
        }
        (signed, absolute, closest)
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct NeumannEstimate {
    pub mutual: f64,
    pub convergence_estimate: f64,
}

pub(crate) fn neumann(tx: &FilamentCoil, rx: &FilamentCoil, tolerance: f64) -> Result<NeumannEstimate> {
    let tx_path = tx.circuit_points();
    let rx_path = rx.circuit_points();
    let limit = 2.0 * tx.wire_radius().max(rx.wire_radius());

    let mut previous: Option<f64> = None;
    let mut change = f64::INFINITY;
    let mut mutual = 0.0;
    for level in 0..=MAX_LEVEL {
        let a = Elements::new(&tx_path, level);
        let b = Elements::new(&rx_path, level);
        let rows = row_sums(&a, &b);
        if level == 0 {
            let separation = rows.iter().map(|r| r.2).fold(f64::INFINITY, f64::min);
            if separation <= limit {
                return Err(Error::SeparationViolation { separation, limit });
            }
        }
        mutual = MU0_OVER_4PI * sum(rows.iter().map(|r| r.0));
        let scale = MU0_OVER_4PI * sum(rows.iter().map(|r| r.1));
        if let Some(prev) = previous {
            let diff = (mutual - prev).abs();
            change = if diff == 0.0 {
                0.0
            } else {
                diff / mutual.abs().max(1e-9 * scale)
            };
            if change < tolerance {
                return Ok(NeumannEstimate {
                    mutual,
                    convergence_estimate: change,
                });
            }
        }
        previous = Some(mutual);
    }
    Err(Error::NotConverged {
        estimate: mutual,
        change,
        tolerance,
    })
}
