//! Complete elliptic integrals and the coaxial-loop mutual inductance.

use std::f64::consts::FRAC_PI_2;

use crate::error::positive;
use crate::{Error, Result, MU0};

/// Complete elliptic integrals `(K(m), E(m))` of parameter `m = k^2`, by the
/// arithmetic-geometric mean. Valid for `0 <= m < 1`.
pub fn complete_elliptic(m: f64) -> (f64, f64) {
    debug_assert!((0.0..1.0).contains(&m), "parameter out of range: {m}");
    let mut a = 1.0;
    let mut b = (1.0 - m).sqrt();
    let mut c = m.sqrt();
    let mut weight = 0.5;
    let mut deficit = weight * c * c;
    for _ in 0..64 {
        if c.abs() <= 1e-17 * a {
            break;
        }
        let a_next = 0.5 * (a + b);
        let b_next = (a * b).sqrt();
        c = 0.5 * (a - b);
        a = a_next;
        b = b_next;
        weight *= 2.0;
        deficit += weight * c * c;
    }
    let k = FRAC_PI_2 / a;
    (k, k * (1.0 - deficit))
}

/// Mutual inductance (H) of two coaxial circular loops of radii `r1`, `r2`
/// whose planes are `z` apart (Maxwell's formula).
pub fn coaxial_mutual_oracle(r1: f64, r2: f64, z: f64) -> Result<f64> {
    positive("r1", r1)?;
    positive("r2", r2)?;
    if z == 0.0 && r1 == r2 {
        return Err(Error::InvalidParameter {
            field: "z",
            reason: "coincident loops have no finite mutual inductance".into(),
        });
    }
    let m = 4.0 * r1 * r2 / ((r1 + r2).powi(2) + z * z);
    let k = m.sqrt();
    let (kk, ee) = complete_elliptic(m);
    Ok(MU0 * (r1 * r2).sqrt() * ((2.0 / k - k) * kk - 2.0 / k * ee))
}
