/// Significant digits for every number written by the CLI.
pub const SIG_DIGITS: i32 = 9;

/// Fixed-point rendering with [`SIG_DIGITS`] significant digits, trailing
/// zeros trimmed. Negative zero prints as `0`.
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (SIG_DIGITS - 1 - exp).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// `x` rounded to [`SIG_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    sig(x).parse().unwrap_or(x)
}
