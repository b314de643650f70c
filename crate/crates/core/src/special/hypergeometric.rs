use crate::quadrature::CompensatedSum;
use crate::{Error, Result};

fn nonpositive_integer(v: f64) -> Option<u32> {
    (v <= 0.0 && v == v.trunc() && v > -1e6).then_some((-v) as u32)
}

/// Plain power series of M(a, b, x); no transformation.
pub(crate) fn kummer_series(a: f64, b: f64, x: f64) -> Result<f64> {
    let terminate = nonpositive_integer(a);
    if let Some(nb) = nonpositive_integer(b) {
        match terminate {
            Some(na) if na <= nb => {}
            _ => return Err(Error::Pole(b)),
        }
    }
    let mut sum = CompensatedSum::default();
    let mut term = 1.0;
    sum.add(term);
    let max_k = terminate.map_or(5000, |n| n as usize);
    let mut peak: f64 = 1.0;
    for k in 0..max_k {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * x / (kf + 1.0);
        sum.add(term);
        peak = peak.max(term.abs());
        if terminate.is_none() && term.abs() < 1e-17 * sum.value().abs() && kf > x.abs() - b {
            break;
        }
    }
    Ok(sum.value())
}

/// Kummer's confluent hypergeometric function M(a, b, x) = ₁F₁(a; b; x).
///
/// Negative arguments of non-polynomial cases go through Kummer's
/// transformation M(a, b, x) = e^x M(b − a, b, −x) so that the series has
/// positive terms.
pub fn hyp_kummer_m(a: f64, b: f64, x: f64) -> Result<f64> {
    if x < 0.0 && nonpositive_integer(a).is_none() && nonpositive_integer(b).is_none() {
        return Ok(x.exp() * kummer_series(b - a, b, -x)?);
    }
    kummer_series(a, b, x)
}

fn gauss_series(a: f64, b: f64, c: f64, z: f64, terms: Option<u32>) -> f64 {
    let mut sum = CompensatedSum::default();
    let mut term = 1.0;
    sum.add(term);
    let max_k = terms.map_or(20_000, |n| n as usize);
    for k in 0..max_k {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum.add(term);
        if terms.is_none() && term.abs() < 1e-17 * sum.value().abs() {
            break;
        }
    }
    sum.value()
}

/// Gauss hypergeometric function ₂F₁(a, b; c; z) for real arguments.
///
/// Terminating series are summed for any z. Otherwise the series is used for
/// `|z| ≤ 0.95`, after the Pfaff transformation `z → z/(z−1)` when z < −1/2.
pub fn hyp_gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let na = nonpositive_integer(a);
    let nb = nonpositive_integer(b);
    let terms = match (na, nb) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    if let Some(nc) = nonpositive_integer(c) {
        if terms.map_or(true, |n| n > nc) {
            return Err(Error::Pole(c));
        }
    }
    if let Some(n) = terms {
        return Ok(gauss_series(a, b, c, z, Some(n)));
    }
    if z < -0.5 {
        let w = z / (z - 1.0);
        if w.abs() > 0.95 {
            return Err(Error::Domain(format!("2F1 argument {z} too far from the origin")));
        }
        // Keep a terminating numerator parameter if the transform creates one.
        return Ok((1.0 - z).powf(-a) * hyp_gauss_2f1(a, c - b, c, w)?);
    }
    if z.abs() > 0.95 {
        return Err(Error::Domain(format!("2F1 argument {z} too close to 1")));
    }
    Ok(gauss_series(a, b, c, z, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kummer_examples() {
        assert_eq!(hyp_kummer_m(0.3, 1.7, 0.0).unwrap(), 1.0);
        assert!((hyp_kummer_m(1.0, 1.0, 1.0).unwrap() - std::f64::consts::E).abs() < 1e-15);
        assert_eq!(hyp_kummer_m(-1.0, 2.0, 2.0).unwrap(), 0.0);
        assert!((hyp_kummer_m(0.5, 1.5, -2.0).unwrap() - 0.598_144_006_661_304).abs() < 1e-14);
        assert!((hyp_kummer_m(-2.0, -3.0, 1.5).unwrap() - 2.375).abs() < 1e-15);
        assert!(matches!(hyp_kummer_m(1.0, -2.0, 1.0), Err(Error::Pole(_))));
    }

    #[test]
    fn kummer_large_argument() {
        // M(1, 2, x) = (e^x - 1)/x
        for x in [-30.0f64, -5.0, 10.0, 30.0] {
            let want = (x.exp() - 1.0) / x;
            let got = hyp_kummer_m(1.0, 2.0, x).unwrap();
            assert!(((got - want) / want).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(hyp_gauss_2f1(1.0, 2.0, 3.0, 0.0).unwrap(), 1.0);
        assert!((hyp_gauss_2f1(1.0, 1.0, 2.0, 0.5).unwrap() - 4f64.ln()).abs() < 1e-14);
        assert!((hyp_gauss_2f1(-1.0, 3.0, 2.0, 0.25).unwrap() - 0.625).abs() < 1e-15);
        // 2F1(1,1;2;z) = -ln(1-z)/z also for z < 0 through the Pfaff branch.
        for z in [-0.7f64, -4.5, -15.0] {
            let want = -(1.0 - z).ln() / z;
            assert!((hyp_gauss_2f1(1.0, 1.0, 2.0, z).unwrap() - want).abs() < 1e-13, "z={z}");
        }
        assert!(matches!(hyp_gauss_2f1(1.0, 1.0, 2.0, 0.99), Err(Error::Domain(_))));
        assert!(matches!(hyp_gauss_2f1(1.0, 1.0, -1.0, 0.2), Err(Error::Pole(_))));
    }
}
