/// Generalized Laguerre polynomial L_n^{(α)}(x) by the three-term recurrence.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial H_n(x).
pub fn hermite(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_laguerre() {
        assert_eq!(laguerre(0, 0.7, 3.0), 1.0);
        assert_eq!(laguerre(1, 0.0, 2.0), -1.0);
        assert_eq!(laguerre(2, 0.0, 2.0), -1.0);
        for x in [-1.0, 0.3, 2.5, 7.0] {
            let a: f64 = 1.5;
            let l2 = 0.5 * (x * x - 2.0 * (a + 2.0) * x + (a + 1.0) * (a + 2.0));
            assert!((laguerre(2, a, x) - l2).abs() < 1e-12);
            let l3 = (-x * x * x + 3.0 * (a + 3.0) * x * x - 3.0 * (a + 2.0) * (a + 3.0) * x
                + (a + 1.0) * (a + 2.0) * (a + 3.0))
                / 6.0;
            assert!((laguerre(3, a, x) - l3).abs() < 1e-12);
        }
    }

    #[test]
    fn low_degree_hermite() {
        assert_eq!(hermite(0, 4.0), 1.0);
        assert_eq!(hermite(1, 3.0), 6.0);
        assert_eq!(hermite(2, 1.0), 2.0);
        for x in [-1.3, 0.0, 0.4, 2.0] {
            assert!((hermite(3, x) - (8.0 * x * x * x - 12.0 * x)).abs() < 1e-12);
            assert!((hermite(4, x) - (16.0 * x.powi(4) - 48.0 * x * x + 12.0)).abs() < 1e-11);
        }
    }
}
