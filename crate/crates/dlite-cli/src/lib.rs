//! Library backing the `dlite` binary: figure-data emission, measure
//! comparison on user-supplied distribution pairs, and the randomized
//! property suite. Kept as a library so the test suites can drive the
//! same code the binary runs.

pub mod compare;
pub mod figures;
pub mod verify;

/// Shortest round-trip decimal representation, capped at 12 significant
/// digits (values needing more switch to scientific notation). Locale
/// independent, `.` decimal separator, so output files are byte-stable.
pub fn format_value(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    debug_assert!(!v.is_nan());
    let shortest = format!("{v}");
    if significant_digits(&shortest) <= 12 {
        shortest
    } else {
        format!("{:.11e}", v)
    }
}

fn significant_digits(s: &str) -> usize {
    let mantissa = match s.find(['e', 'E']) {
        Some(idx) => &s[..idx],
        None => s,
    };
    mantissa
        .chars()
        .filter(char::is_ascii_digit)
        .skip_while(|&c| c == '0')
        .count()
}

#[cfg(test)]
mod tests {
    use super::format_value;

    #[test]
    fn plain_values_stay_shortest() {
        assert_eq!(format_value(0.0), "0");
        assert_eq!(format_value(-0.0), "0");
        assert_eq!(format_value(1.0), "1");
        assert_eq!(format_value(0.25), "0.25");
        assert_eq!(format_value(10000.0), "10000");
        assert_eq!(format_value(f64::INFINITY), "inf");
        assert_eq!(format_value(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn long_values_cap_at_twelve_digits() {
        let v = 0.26895093981335155;
        let s = format_value(v);
        assert_eq!(s, "2.68950939813e-1");
        let parsed: f64 = s.parse().unwrap();
        assert!((parsed - v).abs() < 1e-12);
        // ln 2 needs 17 digits for round-trip, so it is capped too.
        assert_eq!(format_value(std::f64::consts::LN_2), "6.93147180560e-1");
    }

    #[test]
    fn round_trip_when_short() {
        for v in [0.5, 0.01, 3.0, 123.456] {
            assert_eq!(format_value(v).parse::<f64>().unwrap(), v);
        }
    }
}
