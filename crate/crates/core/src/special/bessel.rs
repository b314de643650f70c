use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::gamma::{digamma_int, rgamma};
use super::EULER_GAMMA;
use crate::{Error, Result};

/// The four Bessel families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BesselKind {
    J,
    Y,
    I,
    K,
}

impl fmt::Display for BesselKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BesselKind::J => "J",
            BesselKind::Y => "Y",
            BesselKind::I => "I",
            BesselKind::K => "K",
        };
        f.write_str(s)
    }
}

impl FromStr for BesselKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" | "j" => Ok(BesselKind::J),
            "Y" | "y" => Ok(BesselKind::Y),
            "I" | "i" => Ok(BesselKind::I),
            "K" | "k" => Ok(BesselKind::K),
            _ => Err(Error::Domain(format!("unknown Bessel kind `{s}`"))),
        }
    }
}

fn as_integer(nu: f64) -> Option<i32> {
    (nu == nu.trunc() && nu.abs() < 1000.0).then_some(nu as i32)
}

fn as_half_integer(nu: f64) -> Option<i32> {
    // Returns k for nu = k + 1/2.
    let k = nu - 0.5;
    (k == k.trunc() && k.abs() < 1000.0).then_some(k as i32)
}

fn unsupported(kind: BesselKind, order: f64) -> Error {
    let what = match kind {
        BesselKind::J => "Bessel J",
        BesselKind::Y => "Bessel Y",
        BesselKind::I => "Bessel I",
        BesselKind::K => "Bessel K",
    };
    Error::UnsupportedOrder { what, order }
}

/// Bessel function of the given kind, order `nu`, at `x`.
///
/// Supported orders: integers for all four kinds, half-integers for I and K.
/// Y and K need `x > 0`; J and I of integer order accept negative `x`.
pub fn bessel(kind: BesselKind, nu: f64, x: f64) -> Result<f64> {
    if x.is_nan() || nu.is_nan() {
        return Err(Error::Domain("NaN argument".into()));
    }
    match kind {
        BesselKind::J => {
            let n = as_integer(nu).ok_or_else(|| unsupported(kind, nu))?;
            let sign = |m: i32, s: bool| if s && m % 2 != 0 { -1.0 } else { 1.0 };
            let m = n.abs();
            let v = bessel_j_int(m as u32, x.abs());
            Ok(v * sign(m, n < 0) * sign(m, x < 0.0))
        }
        BesselKind::Y => {
            let n = as_integer(nu).ok_or_else(|| unsupported(kind, nu))?;
            if x <= 0.0 {
                return Err(Error::Domain(format!("Y requires x > 0, got {x}")));
            }
            let m = n.unsigned_abs();
            let v = bessel_y_int(m, x);
            Ok(if n < 0 && m % 2 == 1 { -v } else { v })
        }
        BesselKind::I => {
            if let Some(n) = as_integer(nu) {
                let m = n.unsigned_abs();
                let v = bessel_i_series(m as f64, x.abs());
                return Ok(if x < 0.0 && m % 2 == 1 { -v } else { v });
            }
            let k = as_half_integer(nu).ok_or_else(|| unsupported(kind, nu))?;
            if x < 0.0 {
                return Err(Error::Domain(format!("half-integer I requires x >= 0, got {x}")));
            }
            if k >= 0 {
                return Ok(bessel_i_series(nu, x));
            }
            // I_{-m-1/2} = I_{m+1/2} + (2/π)(-1)^m K_{m+1/2}
            let m = (-k - 1) as u32;
            let mu = m as f64 + 0.5;
            if x == 0.0 {
                return Ok(if m == 0 { f64::INFINITY } else { f64::NAN });
            }
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            Ok(bessel_i_series(mu, x) + 2.0 / PI * sign * bessel_k_half(m, x))
        }
        BesselKind::K => {
            if x <= 0.0 {
                return Err(Error::Domain(format!("K requires x > 0, got {x}")));
            }
            if let Some(n) = as_integer(nu) {
                return Ok(bessel_k_int(n.unsigned_abs(), x));
            }
            let k = as_half_integer(nu).ok_or_else(|| unsupported(kind, nu))?;
            // K_{-ν} = K_ν
            let m = if k >= 0 { k as u32 } else { (-k - 1) as u32 };
            Ok(bessel_k_half(m, x))
        }
    }
}

/// J_0, J_1, …, J_{n_max} at `x ≥ 0` by Miller's backward recurrence,
/// normalised with J_0 + 2ΣJ_{2k} = 1.
pub(crate) fn bessel_j_sequence(n_max: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; n_max + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }
    let big = n_max.max(x.ceil() as usize);
    let mut start = big + 30 + (50.0 * big as f64).sqrt() as usize;
    start += start % 2;
    let mut jp1 = 0.0;
    let mut j = 1e-300;
    let mut norm = 0.0;
    let mut tmp = vec![0.0; start + 1];
    tmp[start] = j;
    for k in (1..=start).rev() {
        let jm1 = 2.0 * k as f64 / x * j - jp1;
        jp1 = j;
        j = jm1;
        tmp[k - 1] = j;
        if j.abs() > 1e250 {
            for v in tmp.iter_mut().skip(k - 1) {
                *v *= 1e-250;
            }
            j *= 1e-250;
            jp1 *= 1e-250;
        }
    }
    for (k, v) in tmp.iter().enumerate() {
        if k == 0 {
            norm += v;
        } else if k % 2 == 0 {
            norm += 2.0 * v;
        }
    }
    for k in 0..=n_max {
        out[k] = tmp[k] / norm;
    }
    out
}

fn bessel_j_int(n: u32, x: f64) -> f64 {
    bessel_j_sequence(n as usize, x)[n as usize]
}

fn bessel_y01(x: f64) -> (f64, f64) {
    let n_terms = (x.ceil() as usize + 30 + (50.0 * x).sqrt() as usize) | 1;
    let j = bessel_j_sequence(2 * n_terms + 2, x);
    let l = (x / 2.0).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    for k in 1..=n_terms {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s0 += sign * j[2 * k] / k as f64;
        s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k as f64;
    }
    let y0 = 2.0 / PI * l * j[0] - 4.0 / PI * s0;
    let y1 = -2.0 / PI * (j[0] / x - l * j[1]) + 2.0 / PI * s1;
    (y0, y1)
}

fn bessel_y_int(n: u32, x: f64) -> f64 {
    let (mut ym, mut y) = bessel_y01(x);
    if n == 0 {
        return ym;
    }
    for k in 1..n {
        let next = 2.0 * k as f64 / x * y - ym;
        ym = y;
        y = next;
    }
    y
}

/// I_ν(x) by its power series, for any real ν and x > 0; all terms are
/// positive for ν ≥ 0.
pub(crate) fn bessel_i_series(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    let q = 0.25 * x * x;
    let lead = (0.5 * x).powf(nu);
    let mut sum = 0.0;
    let mut fact = 1.0;
    for k in 0..1000 {
        if k > 0 {
            fact *= q / k as f64;
        }
        let term = lead * fact * rgamma(k as f64 + nu + 1.0);
        sum += term;
        if k as f64 > -nu && term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn bessel_k01(x: f64) -> (f64, f64) {
    if x <= 2.0 {
        let q = 0.25 * x * x;
        let l = (0.5 * x).ln();
        let i0 = bessel_i_series(0.0, x);
        let i1 = bessel_i_series(1.0, x);
        let mut s0 = 0.0;
        let mut s1 = 0.0;
        let mut t0 = 1.0; // q^k/(k!)^2
        let mut t1 = 1.0; // q^k/(k!(k+1)!)
        for k in 0..60u32 {
            if k > 0 {
                t0 *= q / (k as f64 * k as f64);
                t1 *= q / (k as f64 * (k as f64 + 1.0));
            }
            s0 += digamma_int(k + 1) * t0;
            s1 += (digamma_int(k + 1) + digamma_int(k + 2)) * t1;
            if t0 < 1e-18 {
                break;
            }
        }
        let k0 = -l * i0 + s0;
        let k1 = 1.0 / x + l * i1 - 0.25 * x * s1;
        return (k0, k1);
    }
    let (k0, k1) = bessel_k01_cf(x);
    let e = (-x).exp();
    (k0 * e, k1 * e)
}

// Steed's continued fraction for e^x K_0 and e^x K_1, x > 2.
fn bessel_k01_cf(x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        a -= 2.0 * (i - 1) as f64;
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * x)).sqrt() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

/// `(e^x K_0(x), e^x K_1(x))` for `x > 0`, finite for arguments where the
/// unscaled values underflow.
pub fn bessel_k01_scaled(x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("K requires x > 0, got {x}")));
    }
    if x <= 2.0 {
        let (k0, k1) = bessel_k01(x);
        return Ok((k0 * x.exp(), k1 * x.exp()));
    }
    Ok(bessel_k01_cf(x))
}

fn bessel_k_int(n: u32, x: f64) -> f64 {
    let (mut km, mut k) = bessel_k01(x);
    if n == 0 {
        return km;
    }
    for j in 1..n {
        let next = km + 2.0 * j as f64 / x * k;
        km = k;
        k = next;
    }
    k
}

/// K_{m+1/2}(x) from the elementary K_{1/2} and upward recurrence.
fn bessel_k_half(m: u32, x: f64) -> f64 {
    let mut km = (PI / (2.0 * x)).sqrt() * (-x).exp();
    if m == 0 {
        return km;
    }
    let mut k = km * (1.0 + 1.0 / x);
    for j in 1..m {
        let nu = j as f64 + 0.5;
        let next = km + 2.0 * nu / x * k;
        km = k;
        k = next;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use BesselKind::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn reference_values() {
        // Values from an arbitrary-precision library.
        let cases = [
            (J, 0.0, 1.0, 0.765_197_686_557_966_6),
            (J, 1.0, 2.5, 0.497_094_102_464_274_3),
            (J, 5.0, 10.0, -0.234_061_528_186_793_7),
            (J, 2.0, 45.0, -0.114_558_721_589_859_68),
            (Y, 0.0, 1.0, 0.088_256_964_215_676_96),
            (Y, 1.0, 0.3, -2.293_105_138_388_529),
            (Y, 3.0, 30.0, -0.068_035_690_253_198_72),
            (I, 0.0, 1.0, 1.266_065_877_752_008_4),
            (I, 1.0, 20.0, 42_454_973.385_127_78),
            (I, 1.5, 2.0, 1.099_473_188_633_11),
            (K, 0.0, 1.0, 0.421_024_438_240_708_3),
            (K, 1.0, 0.2, 4.775_972_543_220_472),
            (K, 0.0, 3.0, 0.034_739_504_386_279_4),
            (K, 2.0, 5.0, 0.005_308_943_712_223_46),
            (K, 0.5, 1.0, 0.461_068_504_447_894_4),
            (K, 2.5, 4.0, 0.022_237_897_617_178_104),
        ];
        for (kind, nu, x, want) in cases {
            let got = bessel(kind, nu, x).unwrap();
            assert!(rel(got, want) < 1e-12, "{kind}_{nu}({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn edge_cases() {
        assert_eq!(bessel(J, 0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel(J, 3.0, 0.0).unwrap(), 0.0);
        assert!(matches!(bessel(K, 0.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(bessel(Y, 1.0, -1.0), Err(Error::Domain(_))));
        assert!(matches!(bessel(J, 0.3, 1.0), Err(Error::UnsupportedOrder { .. })));
        assert!((bessel(J, 1.0, -2.0).unwrap() + bessel(J, 1.0, 2.0).unwrap()).abs() < 1e-16);
    }

    #[test]
    fn k_recurrence() {
        for i in 0..40 {
            let x = 0.5 + 19.5 * i as f64 / 39.0;
            let k0 = bessel(K, 0.0, x).unwrap();
            let k1 = bessel(K, 1.0, x).unwrap();
            let k2 = bessel(K, 2.0, x).unwrap();
            let res = (k2 - k0 - 2.0 / x * k1).abs();
            assert!(res <= 1e-10 * k2, "x={x}");
        }
    }

    #[test]
    fn k_branches_agree() {
        let (a0, a1) = bessel_k01(2.0);
        let (b0, b1) = bessel_k01(2.0 + 1e-12);
        assert!(rel(a0, b0) < 1e-11 && rel(a1, b1) < 1e-11);
    }

    #[test]
    fn wronskians() {
        for x in [0.1, 1.0, 3.7, 12.0, 33.0, 50.0] {
            let j0 = bessel(J, 0.0, x).unwrap();
            let j1 = bessel(J, 1.0, x).unwrap();
            let y0 = bessel(Y, 0.0, x).unwrap();
            let y1 = bessel(Y, 1.0, x).unwrap();
            assert!(
                (j1 * y0 - j0 * y1 - 2.0 / (PI * x)).abs() < 1e-13 * (1.0 / x).max(1.0),
                "x={x}"
            );
            let i0 = bessel(I, 0.0, x.min(20.0)).unwrap();
            let i1 = bessel(I, 1.0, x.min(20.0)).unwrap();
            let k0 = bessel(K, 0.0, x.min(20.0)).unwrap();
            let k1 = bessel(K, 1.0, x.min(20.0)).unwrap();
            let xm = x.min(20.0);
            assert!(rel(i0 * k1 + i1 * k0, 1.0 / xm) < 1e-13, "x={x}");
        }
    }

    #[test]
    fn negative_half_integer_i() {
        // I_{-1/2}(x) = sqrt(2/(πx)) cosh x
        for x in [0.3, 1.0, 4.0] {
            let want = (2.0 / (PI * x)).sqrt() * x.cosh();
            assert!(rel(bessel(I, -0.5, x).unwrap(), want) < 1e-13);
        }
    }
}
