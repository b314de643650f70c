use super::{EvalResult, Method};
use crate::{Error, Result};

const STEPS: usize = 7;

/// Derivative of order 1 to 4 of `f` at `x` by central differences on the
/// steps `h0·2^{−j}`, `j = 0..6`, Richardson-extrapolated in powers of `h²`.
///
/// The returned value is the tableau entry whose neighbours agree best
/// (Ridders' selection), so the extrapolation stops before the rounding
/// noise of the smallest steps takes over.
pub fn derivative_richardson<F: Fn(f64) -> f64>(f: F, x: f64, order: u32, h0: f64) -> Result<EvalResult> {
    if !(1..=4).contains(&order) {
        return Err(Error::UnsupportedOrder {
            what: "finite-difference derivative",
            order: order as f64,
        });
    }
    if !(h0 > 0.0 && h0.is_finite()) {
        return Err(Error::Domain(format!("step h0 = {h0} must be positive")));
    }
    let even = order % 2 == 0;
    let fx = if even { f(x) } else { 0.0 };
    let mut evals = usize::from(even);
    let mut table = [[0.0f64; STEPS]; STEPS];
    let mut best = f64::NAN;
    let mut best_err = f64::INFINITY;
    let mut h = h0;
    for j in 0..STEPS {
        let (fp, fm) = (f(x + h), f(x - h));
        evals += 2;
        table[j][0] = match order {
            1 => (fp - fm) / (2.0 * h),
            2 => (fp - 2.0 * fx + fm) / (h * h),
            _ => {
                let (fp2, fm2) = (f(x + 2.0 * h), f(x - 2.0 * h));
                evals += 2;
                if order == 3 {
                    (fp2 - 2.0 * fp + 2.0 * fm - fm2) / (2.0 * h * h * h)
                } else {
                    (fp2 - 4.0 * fp + 6.0 * fx - 4.0 * fm + fm2) / (h * h * h * h)
                }
            }
        };
        if !table[j][0].is_finite() {
            return Err(Error::NonFinite(x + h));
        }
        let mut factor = 1.0;
        for m in 1..=j {
            factor *= 4.0;
            table[j][m] = (factor * table[j][m - 1] - table[j - 1][m - 1]) / (factor - 1.0);
            let err = (table[j][m] - table[j][m - 1])
                .abs()
                .max((table[j][m] - table[j - 1][m - 1]).abs());
            if err <= best_err {
                best_err = err;
                best = table[j][m];
            }
        }
        h *= 0.5;
    }
    if best_err > 1e-4 * best.abs().max(1.0) {
        return Err(Error::Unstable);
    }
    Ok(EvalResult::new(best, best_err, Method::Richardson, evals))
}

/// Default step for [`derivative_richardson`] at `x`.
pub fn default_step(x: f64) -> f64 {
    1e-2 * x.abs().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential() {
        let e1 = (-1f64).exp();
        let d1 = derivative_richardson(|x: f64| (-x).exp(), 1.0, 1, default_step(1.0)).unwrap();
        assert!((d1.value + e1).abs() < 1e-11);
        let d2 = derivative_richardson(|x: f64| (-x).exp(), 1.0, 2, default_step(1.0)).unwrap();
        assert!((d2.value - e1).abs() < 1e-9);
    }

    #[test]
    fn k2_slope() {
        let d = derivative_richardson(|x: f64| 2.0 * x * (-x).exp(), 2.0, 1, default_step(2.0)).unwrap();
        assert!((d.value + 2.0 * (-2f64).exp()).abs() < 1e-11);
    }

    #[test]
    fn quartic_exact() {
        let p = |x: f64| 3.0 * x.powi(4) - 2.0 * x.powi(3) + x - 5.0;
        let d1 = derivative_richardson(p, 1.5, 1, 0.1).unwrap();
        assert!((d1.value - (12.0 * 1.5f64.powi(3) - 6.0 * 2.25 + 1.0)).abs() < 1e-9);
        let d2 = derivative_richardson(p, 1.5, 2, 0.1).unwrap();
        assert!((d2.value - (36.0 * 2.25 - 12.0 * 1.5)).abs() < 1e-9);
        let d3 = derivative_richardson(p, 1.5, 3, 0.1).unwrap();
        assert!((d3.value - (72.0 * 1.5 - 12.0)).abs() < 1e-7);
        let d4 = derivative_richardson(p, 1.5, 4, 0.1).unwrap();
        assert!((d4.value - 72.0).abs() < 1e-5);
    }

    #[test]
    fn high_orders_of_exponential() {
        let d3 = derivative_richardson(|x: f64| (2.0 * x).exp(), 0.5, 3, 0.1).unwrap();
        assert!((d3.value - 8.0 * 1f64.exp()).abs() < 1e-7, "{d3:?}");
        let d4 = derivative_richardson(|x: f64| (2.0 * x).exp(), 0.5, 4, 0.1).unwrap();
        assert!((d4.value - 16.0 * 1f64.exp()).abs() < 1e-5, "{d4:?}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            derivative_richardson(|x| x, 0.0, 5, 0.1),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert!(matches!(
            derivative_richardson(|x| x, 0.0, 1, 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn kink_is_unstable() {
        let r = derivative_richardson(|x: f64| (x.abs() * 1e6).sin(), 0.0, 2, 0.1);
        assert!(matches!(r, Err(Error::Unstable)), "{r:?}");
    }
}
