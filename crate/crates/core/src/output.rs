//! Locale-independent number and CSV formatting shared by the front ends.

use crate::quadrature::EvalResult;
use crate::{Error, Result};

pub const CSV_HEADER: &str = "nu,x,value,err_est,method";

/// Significant digits kept in printed values.
pub const SIG_DIGITS: usize = 15;

/// Rounds to [`SIG_DIGITS`] significant digits.
pub fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{:.*e}", SIG_DIGITS - 1, v).parse().unwrap_or(v)
}

/// Shortest round-trip representation of `v` rounded to 15 significant
/// digits. Plain decimal notation for exponents in `[-5, 15)`, otherwise
/// `1.5e-7` style. Negative zero prints as `0`.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if v.is_nan() {
        return "NaN".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let r = round_sig(v);
    let exp = r.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// The `value,err_est,method` cells of one evaluation. A non-converged
/// point keeps the error estimate of its partial result and leaves the
/// value empty; any other failure leaves both empty.
pub fn result_cells(r: &Result<EvalResult>) -> String {
    match r {
        Ok(e) => format!("{},{},{}", format_number(e.value), format_number(e.err_est), e.method),
        Err(Error::NonConverged { partial }) => format!(",{},NON_CONVERGED", format_number(partial.err_est)),
        Err(_) => ",,ERROR".to_string(),
    }
}

/// One CSV data row without the line terminator.
pub fn csv_row(nu: f64, x: f64, r: &Result<EvalResult>) -> String {
    format!("{},{},{}", format_number(nu), format_number(x), result_cells(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::Method;

    #[test]
    fn numbers_are_shortest_and_capped() {
        assert_eq!(format_number((-1.0f64).exp()), "0.367879441171442");
        assert_eq!(format_number(0.1 + 0.2), "0.3");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(2.0), "2");
        assert_eq!(format_number(-5.0), "-5");
        assert_eq!(format_number(0.05), "0.05");
        assert_eq!(format_number(1.5e-7), "1.5e-7");
        assert_eq!(format_number(1e20), "1e20");
        assert_eq!(format_number(123456.0), "123456");
    }

    #[test]
    fn failed_points_leave_the_value_empty() {
        let partial = EvalResult::new(0.1, 1e-3, Method::QuadOsc, 10);
        let r = Err(Error::NonConverged { partial });
        assert_eq!(csv_row(1.0, 0.5, &r), "1,0.5,,0.001,NON_CONVERGED");
        assert_eq!(csv_row(0.0, 1.0, &Err(Error::Pole(1.0))), "0,1,,,ERROR");
        assert_eq!(
            csv_row(0.0, 1.0, &Ok(EvalResult::new(0.5, 0.0, Method::Closed, 1))),
            "0,1,0.5,0,CLOSED"
        );
    }
}
