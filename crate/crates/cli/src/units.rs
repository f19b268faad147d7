//! Unit-tagged quantities such as `"150 mm"` or `"-85 dBV"`.
//!
//! Every physical value in a config file is a string holding a number, one
//! or more spaces, and a unit. Values are converted to SI on load; angles are
//! kept in degrees and levels in dBV.

use std::fmt;

/// Conversion to SI. Decimal prefixes shift the exponent of the written
/// number before it is parsed, so "0.137 mm" gives exactly the double of the
/// literal 0.137e-3 rather than 0.137 * 1e-3.
#[derive(Debug, Clone, Copy)]
enum Scale {
    Pow10(i32),
    Factor(f64),
}

impl Scale {
    fn apply(self, number: &str) -> Option<f64> {
        match self {
            Scale::Pow10(shift) => {
                let (mantissa, exponent) = match number.find(['e', 'E']) {
                    Some(i) => (&number[..i], number[i + 1..].parse::<i32>().ok()?),
                    None => (number, 0),
                };
                format!("{mantissa}e{}", exponent.checked_add(shift)?).parse().ok()
            }
            Scale::Factor(f) => number.parse::<f64>().ok().map(|v| v * f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Length,
    Frequency,
    Resistance,
    Inductance,
    Capacitance,
    Angle,
    Voltage,
    Current,
    Conductivity,
    Level,
    Ratio,
}

impl Dimension {
    fn units(self) -> &'static [(&'static str, Scale)] {
        match self {
            Dimension::Length => &[("m", Scale::Pow10(0)), ("cm", Scale::Pow10(-2)), ("mm", Scale::Pow10(-3)), ("um", Scale::Pow10(-6)), ("µm", Scale::Pow10(-6))],
            Dimension::Frequency => &[("Hz", Scale::Pow10(0)), ("kHz", Scale::Pow10(3)), ("MHz", Scale::Pow10(6)), ("GHz", Scale::Pow10(9))],
            Dimension::Resistance => &[
                ("ohm", Scale::Pow10(0)),
                ("mohm", Scale::Pow10(-3)),
                ("kohm", Scale::Pow10(3)),
                ("Mohm", Scale::Pow10(6)),
                ("Ω", Scale::Pow10(0)),
                ("mΩ", Scale::Pow10(-3)),
                ("kΩ", Scale::Pow10(3)),
                ("MΩ", Scale::Pow10(6)),
            ],
            Dimension::Inductance => &[("H", Scale::Pow10(0)), ("mH", Scale::Pow10(-3)), ("uH", Scale::Pow10(-6)), ("µH", Scale::Pow10(-6)), ("nH", Scale::Pow10(-9))],
            Dimension::Capacitance => &[
                ("F", Scale::Pow10(0)),
                ("uF", Scale::Pow10(-6)),
                ("µF", Scale::Pow10(-6)),
                ("nF", Scale::Pow10(-9)),
                ("pF", Scale::Pow10(-12)),
                ("fF", Scale::Pow10(-15)),
            ],
            Dimension::Angle => &[("deg", Scale::Pow10(0)), ("rad", Scale::Factor(180.0 / std::f64::consts::PI))],
            Dimension::Voltage => &[("V", Scale::Pow10(0)), ("mV", Scale::Pow10(-3))],
            Dimension::Current => &[("A", Scale::Pow10(0)), ("mA", Scale::Pow10(-3))],
            Dimension::Conductivity => &[("S/m", Scale::Pow10(0)), ("MS/m", Scale::Pow10(6))],
            Dimension::Level => &[("dBV", Scale::Pow10(0))],
            Dimension::Ratio => &[("%", Scale::Pow10(-2)), ("ppm", Scale::Pow10(-6))],
        }
    }

    /// Unit used when writing values back out.
    pub fn canonical_unit(self) -> &'static str {
        self.units()[0].0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Dimension::Length => "length",
            Dimension::Frequency => "frequency",
            Dimension::Resistance => "resistance",
            Dimension::Inductance => "inductance",
            Dimension::Capacitance => "capacitance",
            Dimension::Angle => "angle",
            Dimension::Voltage => "voltage",
            Dimension::Current => "current",
            Dimension::Conductivity => "conductivity",
            Dimension::Level => "level",
            Dimension::Ratio => "ratio",
        };
        f.write_str(name)
    }
}

/// Parse `"<number> <unit>"` into the SI value for `dimension`.
pub fn parse_quantity(text: &str, dimension: Dimension) -> Result<f64, String> {
    let mut parts = text.split_whitespace();
    let (Some(number), Some(unit), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(format!(
            "expected \"<number> <unit>\" for a {dimension}, got {text:?} (accepted units: {})",
            accepted(dimension)
        ));
    };
    if number.parse::<f64>().is_err() {
        return Err(format!("{number:?} is not a number"));
    }
    let scale = dimension
        .units()
        .iter()
        .find(|(u, _)| *u == unit)
        .map(|(_, s)| *s)
        .ok_or_else(|| {
            format!(
                "unit {unit:?} is not a {dimension} unit (accepted: {})",
                accepted(dimension)
            )
        })?;
    match scale.apply(number) {
        Some(v) if v.is_finite() => Ok(v),
        _ => Err(format!("{number:?} is not a finite number")),
    }
}

fn accepted(dimension: Dimension) -> String {
    dimension
        .units()
        .iter()
        .map(|(u, _)| *u)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn converts_to_si() {
        assert_eq!(parse_quantity("150 mm", Dimension::Length).unwrap(), 0.150);
        assert_eq!(parse_quantity("26 MHz", Dimension::Frequency).unwrap(), 26e6);
        assert_eq!(parse_quantity("1 kohm", Dimension::Resistance).unwrap(), 1000.0);
        assert_eq!(parse_quantity("1 kΩ", Dimension::Resistance).unwrap(), 1000.0);
        assert_eq!(parse_quantity("35 uH", Dimension::Inductance).unwrap(), 35e-6);
        assert_eq!(parse_quantity("-85 dBV", Dimension::Level).unwrap(), -85.0);
        assert_eq!(parse_quantity("40 deg", Dimension::Angle).unwrap(), 40.0);
        assert_eq!(parse_quantity("0.1 %", Dimension::Ratio).unwrap(), 1e-3);
        assert_eq!(parse_quantity("5.8e7 S/m", Dimension::Conductivity).unwrap(), 5.8e7);
        assert_eq!(parse_quantity("0.137 mm", Dimension::Length).unwrap(), 0.137e-3);
        assert_eq!(parse_quantity("1.07 pF", Dimension::Capacitance).unwrap(), 1.07e-12);
    }

    #[test]
    fn rejects_missing_or_wrong_units() {
        assert!(parse_quantity("150", Dimension::Length).is_err());
        assert!(parse_quantity("150 MHz", Dimension::Length).is_err());
        assert!(parse_quantity("abc mm", Dimension::Length).is_err());
        assert!(parse_quantity("1 mm extra", Dimension::Length).is_err());
        assert!(parse_quantity("inf mm", Dimension::Length).is_err());
    }
}
