//! Locale-free numeric output with 12 significant digits.

/// Significant digits for every printed number.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Round `x` to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("scientific notation parses back")
}

/// Shortest decimal that rounds `x` to 12 significant digits, without
/// trailing zeros: `0.0625`, `0.222222222222`, `0.72`, `0`.
pub fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let r = round_sig(x);
    // -0 prints as "0"
    if r == 0.0 {
        return "0".to_string();
    }
    let a = r.abs();
    if (1e-6..1e15).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}
