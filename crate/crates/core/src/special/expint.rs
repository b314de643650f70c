use super::EULER_GAMMA;
use crate::quadrature::CompensatedSum;
use crate::{Error, Result};

const SERIES_LIMIT: f64 = 40.0;

fn ei_series(x: f64) -> f64 {
    // γ + ln|x| + Σ x^k / (k·k!)
    let mut sum = CompensatedSum::default();
    let mut term = 1.0;
    for k in 1..500 {
        term *= x / k as f64;
        let t = term / k as f64;
        sum.add(t);
        if t.abs() < 1e-17 * sum.value().abs() {
            break;
        }
    }
    EULER_GAMMA + x.abs().ln() + sum.value()
}

fn ei_asymptotic(x: f64) -> f64 {
    // e^x/x Σ k!/x^k, truncated at the smallest term.
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..(x as usize) {
        let next = term * k as f64 / x;
        if next.abs() > term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term < 1e-17 {
            break;
        }
    }
    x.exp() / x * sum
}

fn e1_continued_fraction(x: f64) -> f64 {
    e1_continued_fraction_scaled(x) * (-x).exp()
}

/// e^x E_1(x) for x > 1 by the modified Lentz continued fraction.
fn e1_continued_fraction_scaled(x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h
}

/// Exponential integral Ei(x), principal value for x > 0 and −E_1(−x) for
/// x < 0.
pub fn exp_integral_ei(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::Singular(0.0));
    }
    if x.is_nan() {
        return Err(Error::Domain("Ei of NaN".into()));
    }
    if x > 0.0 {
        if x <= SERIES_LIMIT {
            Ok(ei_series(x))
        } else {
            Ok(ei_asymptotic(x))
        }
    } else if x >= -1.0 {
        Ok(ei_series(x))
    } else {
        Ok(-e1_continued_fraction(-x))
    }
}

/// E_1(x) = −Ei(−x) for x > 0.
pub fn exp_integral_e1(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("E_1 requires x > 0, got {x}")));
    }
    exp_integral_ei(-x).map(|v| -v)
}

/// e^{−x}·Ei(x) for x > 0, computed without overflow for large x.
pub fn scaled_ei(x: f64) -> Result<f64> {
    if x > SERIES_LIMIT {
        let mut sum = 1.0;
        let mut term = 1.0;
        for k in 1..(x as usize) {
            let next = term * k as f64 / x;
            if next > term {
                break;
            }
            term = next;
            sum += term;
            if term < 1e-17 {
                break;
            }
        }
        return Ok(sum / x);
    }
    Ok((-x).exp() * exp_integral_ei(x)?)
}

/// e^x·E_1(x) for x > 0, computed without overflow for large x.
pub fn scaled_e1(x: f64) -> Result<f64> {
    if x > 1.0 {
        Ok(e1_continued_fraction_scaled(x))
    } else {
        Ok(x.exp() * exp_integral_e1(x)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert!((exp_integral_ei(1.0).unwrap() - 1.895_117_816_355_936_8).abs() < 1e-14);
        assert!((exp_integral_ei(-1.0).unwrap() + 0.219_383_934_395_520_3).abs() < 1e-15);
        assert!((exp_integral_ei(0.01).unwrap() + 4.017_929_465_426_669).abs() < 1e-12);
        assert!((exp_integral_ei(-5.0).unwrap() + 0.001_148_295_591_275_325_8).abs() < 1e-17);
        assert!((exp_integral_ei(10.0).unwrap() / 2_492.228_976_241_877_8 - 1.0).abs() < 1e-13);
        assert!((exp_integral_ei(50.0).unwrap() / 1.058_563_689_713_169_1e20 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn switch_is_continuous() {
        let a = ei_series(40.0);
        let b = ei_asymptotic(40.0);
        assert!((a / b - 1.0).abs() < 1e-12);
        let a = ei_series(-1.25);
        let b = -e1_continued_fraction(1.25);
        assert!((a / b - 1.0).abs() < 1e-13);
    }

    #[test]
    fn singular_at_zero() {
        assert!(matches!(exp_integral_ei(0.0), Err(Error::Singular(_))));
    }

    #[test]
    fn scaled_matches() {
        for x in [0.5, 5.0, 39.0] {
            let s = scaled_ei(x).unwrap();
            assert!((s / ((-x).exp() * exp_integral_ei(x).unwrap()) - 1.0).abs() < 1e-14);
        }
        assert!((scaled_ei(60.0).unwrap() * 60.0 - 1.0 - 1.0 / 60.0).abs() < 1e-3);
        for x in [0.5, 2.0, 30.0] {
            let s = scaled_e1(x).unwrap();
            assert!((s / (x.exp() * exp_integral_e1(x).unwrap()) - 1.0).abs() < 1e-14);
        }
        assert!((scaled_e1(1e4).unwrap() * 1e4 - 1.0 + 1e-4).abs() < 1e-7);
    }
}
