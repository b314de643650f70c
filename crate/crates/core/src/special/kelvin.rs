use super::gamma::factorial;
use crate::{Error, Result};

/// Derivatives `(ber'(x), bei'(x))` of the Kelvin functions of order zero.
pub fn kelvin_ber_bei_prime(x: f64) -> Result<(f64, f64)> {
    if !(0.0..=20.0).contains(&x) {
        return Err(if x > 20.0 {
            Error::Unsupported(format!("Kelvin series at x = {x} > 20"))
        } else {
            Error::Domain(format!("Kelvin functions need x >= 0, got {x}"))
        });
    }
    let h = 0.5 * x;
    let mut ber = 0.0;
    let mut bei = 0.0;
    for k in 0..40u32 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let f2 = factorial(2 * k);
        let f21 = factorial(2 * k + 1);
        if k >= 1 {
            ber += sign * 2.0 * k as f64 * h.powi(4 * k as i32 - 1) / (f2 * f2);
        }
        let t = sign * (2 * k + 1) as f64 * h.powi(4 * k as i32 + 1) / (f21 * f21);
        bei += t;
        if k > 2 && t.abs() < 1e-18 * bei.abs().max(1e-300) {
            break;
        }
    }
    Ok((ber, bei))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(kelvin_ber_bei_prime(0.0).unwrap(), (0.0, 0.0));
        let (_, bei) = kelvin_ber_bei_prime(0.1).unwrap();
        assert!((bei - 0.05).abs() < 1e-6);
        let (ber, bei) = kelvin_ber_bei_prime(1.0).unwrap();
        assert!((ber + 0.062_445_752_179_030_96).abs() < 1e-14, "{ber}");
        assert!((bei - 0.497_396_511_468_097_33).abs() < 1e-14, "{bei}");
        let (ber, bei) = kelvin_ber_bei_prime(8.0).unwrap();
        assert!((ber - 38.311_325_700_898_02).abs() < 1e-10, "{ber}");
        assert!((bei + 7.660_318_413_649_827).abs() < 1e-10, "{bei}");
    }

    #[test]
    fn out_of_range() {
        assert!(kelvin_ber_bei_prime(21.0).is_err());
        assert!(kelvin_ber_bei_prime(-1.0).is_err());
    }
}
