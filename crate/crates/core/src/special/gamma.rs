use std::f64::consts::PI;

use crate::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.trunc()
}

fn lanczos(x: f64) -> f64 {
    // Γ(x) for x ≥ 0.5.
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

/// The gamma function Γ(x).
///
/// Positive integers up to 171 are computed as exact products; other
/// arguments use a Lanczos approximation (g = 7, 9 terms) with reflection
/// for `x < 0.5`.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x == x.trunc() && x <= 171.0 {
        let mut p = 1.0;
        let mut k = 2.0;
        while k < x {
            p *= k;
            k += 1.0;
        }
        return Ok(p);
    }
    if x < 0.5 {
        let s = (PI * x).sin();
        return Ok(PI / (s * lanczos(1.0 - x)));
    }
    if x > 171.7 {
        return Ok(f64::INFINITY);
    }
    if x > 140.0 {
        // Split the power to avoid overflowing t^(x-1/2) before the product.
        let h = gamma_half_split(x);
        return Ok(h);
    }
    Ok(lanczos(x))
}

fn gamma_half_split(x: f64) -> f64 {
    let xm = x - 1.0;
    let t = xm + LANCZOS_G + 0.5;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (xm + i as f64);
    }
    let half = t.powf(0.5 * (xm + 0.5));
    (2.0 * PI).sqrt() * half * ((-t).exp() * half) * a
}

/// 1/Γ(x), which is entire: zero at the non-positive integers.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    match gamma(x) {
        Ok(g) => 1.0 / g,
        Err(_) => f64::NAN,
    }
}

/// Pochhammer symbol (a)_n = a (a+1) … (a+n−1).
pub fn pochhammer(a: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |p, k| p * (a + k as f64))
}

/// n! as a float.
pub fn factorial(n: u32) -> f64 {
    (2..=n).fold(1.0, |p, k| p * k as f64)
}

/// Binomial coefficient C(n, k) as a float.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |p, i| p * (n - i) as f64 / (i + 1) as f64)
}

/// Digamma ψ(n) for a positive integer n.
pub fn digamma_int(n: u32) -> f64 {
    assert!(n >= 1);
    -super::EULER_GAMMA + (1..n).map(|k| 1.0 / k as f64).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert!((gamma(0.5).unwrap() - super::super::SQRT_PI).abs() < 1e-15);
        assert!((gamma(-0.5).unwrap() + 2.0 * super::super::SQRT_PI).abs() < 1e-14);
        assert!((gamma(1.5).unwrap() - 0.886_226_925_452_758).abs() < 1e-15);
    }

    #[test]
    fn poles() {
        assert!(matches!(gamma(0.0), Err(Error::Pole(_))));
        assert!(matches!(gamma(-3.0), Err(Error::Pole(_))));
        assert_eq!(rgamma(-2.0), 0.0);
    }

    #[test]
    fn large_arguments() {
        let g = gamma(150.5).unwrap();
        let ratio = g / gamma(149.5).unwrap();
        assert!((ratio / 149.5 - 1.0).abs() < 1e-13);
        assert!((gamma(170.0).unwrap() / factorial(169) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn recurrence_holds() {
        for i in 0..50 {
            let x = -4.9 + 0.37 * i as f64;
            if (x - x.round()).abs() < 1e-3 {
                continue;
            }
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert!((lhs / rhs - 1.0).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(6, 2), 15.0);
        assert_eq!(binomial(3, 5), 0.0);
        assert_eq!(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5);
        assert!((digamma_int(1) + super::super::EULER_GAMMA).abs() < 1e-16);
    }
}
