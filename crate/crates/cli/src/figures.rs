//! The data behind the twelve figures.
//!
//! Figures 1 to 4 hold integer orders, 5 to 8 half-integer orders, both on
//! `x ∈ [−5, 10]` with step 0.05. Figures 9 to 12 hold `∂/∂ν` over
//! `ν ∈ [−10, 10]` with step 0.1 at three fixed arguments.

use std::io::Write;
use std::path::Path;

use bateman::{derivative_nu, EvalResult, FunctionId, QuadConfig};

use crate::args::FiguresArgs;
use crate::commands::{csv_text, evaluate, evaluate_grid, quad_config, write_file};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Value,
    OrderDerivative,
}

#[derive(Debug, Clone)]
pub struct Figure {
    pub number: u32,
    pub function: FunctionId,
    pub quantity: Quantity,
    pub orders: Vec<f64>,
    pub xs: Vec<f64>,
}

impl Figure {
    pub fn file_name(&self) -> String {
        format!("fig{:02}.csv", self.number)
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        self.orders
            .iter()
            .flat_map(|&nu| self.xs.iter().map(move |&x| (nu, x)))
            .collect()
    }

    fn eval(&self, nu: f64, x: f64, cfg: &QuadConfig) -> bateman::Result<EvalResult> {
        match self.quantity {
            Quantity::Value => evaluate(self.function, nu, x, 0.0, 0.0, cfg),
            Quantity::OrderDerivative => derivative_nu(self.function, nu, x, 1, cfg),
        }
    }
}

// Grid points are integer multiples divided once, so x and −x are exact
// negatives of each other.
fn argument_grid() -> Vec<f64> {
    (-100..=200).map(|k| k as f64 / 20.0).collect()
}

fn order_grid() -> Vec<f64> {
    (-100..=100).map(|k| k as f64 / 10.0).collect()
}

pub fn figures() -> Vec<Figure> {
    let xs = argument_grid();
    let ints: Vec<f64> = (0..=6).map(|n| n as f64).collect();
    let neg_ints: Vec<f64> = (0..=6).rev().map(|n| 0.0 - n as f64).collect();
    let halves: Vec<f64> = (0..=5).map(|n| n as f64 + 0.5).collect();
    let neg_halves: Vec<f64> = (0..=5).rev().map(|n| -(n as f64 + 0.5)).collect();
    let value = |number, function, orders: &Vec<f64>| Figure {
        number,
        function,
        quantity: Quantity::Value,
        orders: orders.clone(),
        xs: xs.clone(),
    };
    let deriv = |number, function, xs: &[f64]| Figure {
        number,
        function,
        quantity: Quantity::OrderDerivative,
        orders: order_grid(),
        xs: xs.to_vec(),
    };
    let (k, h) = (FunctionId::BatemanK, FunctionId::HavelockH);
    vec![
        value(1, k, &ints),
        value(2, k, &neg_ints),
        value(3, h, &ints),
        value(4, h, &neg_ints),
        value(5, k, &halves),
        value(6, k, &neg_halves),
        value(7, h, &halves),
        value(8, h, &neg_halves),
        deriv(9, k, &[0.5, 1.0, 2.0]),
        deriv(10, k, &[-2.0, -1.0, -0.5]),
        deriv(11, h, &[0.5, 1.0, 2.0]),
        deriv(12, h, &[-2.0, -1.0, -0.5]),
    ]
}

/// Parsed `value` cells of a figure CSV keyed by the `nu` and `x` text.
fn values(csv: &str) -> Vec<(f64, f64, String)> {
    csv.lines()
        .skip(1)
        .filter_map(|l| {
            let mut c = l.split(',');
            let nu = c.next()?.parse().ok()?;
            let x = c.next()?.parse().ok()?;
            Some((nu, x, c.next()?.to_string()))
        })
        .collect()
}

/// Checks `reflected(−n, x) = sign · base(n, −x)` on every shared grid
/// point, comparing the printed cells exactly. Returns the number of
/// pairs compared.
pub fn check_reflection(base: &str, reflected: &str, sign: f64) -> Result<usize, String> {
    let table: std::collections::HashMap<(u64, u64), String> = values(base)
        .into_iter()
        .map(|(nu, x, v)| ((nu.to_bits(), x.to_bits()), v))
        .collect();
    let mut compared = 0;
    for (nu, x, v) in values(reflected) {
        let key = ((0.0 - nu).to_bits(), (0.0 - x).to_bits());
        let Some(b) = table.get(&key) else { continue };
        let expected = if sign < 0.0 && !b.is_empty() {
            match b.strip_prefix('-') {
                Some(pos) => pos.to_string(),
                None if b == "0" => b.clone(),
                None => format!("-{b}"),
            }
        } else {
            b.clone()
        };
        if v != expected {
            return Err(format!("nu = {nu}, x = {x}: {v} but reflection gives {expected}"));
        }
        compared += 1;
    }
    Ok(compared)
}

pub fn run(a: &FiguresArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = quad_config(&a.common)?;
    if let Some(bad) = a.only.iter().find(|n| !(1..=12).contains(*n)) {
        return Err(CliError::Usage(format!("no figure {bad}; figures are 1 to 12")));
    }
    let selected: Vec<Figure> = figures()
        .into_iter()
        .filter(|f| a.only.is_empty() || a.only.contains(&f.number))
        .collect();
    let mut written = Vec::new();
    for fig in &selected {
        let points = fig.points();
        let results = evaluate_grid(&points, a.common.parallelism, |nu, x| fig.eval(nu, x, &cfg));
        let text = csv_text(&points, &results);
        let path = a.out_dir.join(fig.file_name());
        write_file(&path, &text)?;
        let missing = results.iter().filter(|r| r.is_err()).count();
        writeln!(
            out,
            "wrote {} ({} rows, {} without value)",
            path.display(),
            points.len(),
            missing
        )
        .map_err(|e| CliError::io("<stdout>", e))?;
        written.push((fig.number, text));
    }
    let lookup = |n: u32| written.iter().find(|(m, _)| *m == n).map(|(_, t)| t.as_str());
    for (base, reflected, sign) in [(1, 2, 1.0), (3, 4, -1.0)] {
        let base_text = match lookup(base) {
            Some(t) => t.to_string(),
            None => match std::fs::read_to_string(Path::new(&a.out_dir).join(format!("fig{base:02}.csv"))) {
                Ok(t) => t,
                Err(_) => continue,
            },
        };
        let Some(refl) = lookup(reflected) else { continue };
        let n = check_reflection(&base_text, refl, sign).map_err(|e| {
            CliError::AssertFailed(format!("fig{reflected:02} is not the reflection of fig{base:02}: {e}"))
        })?;
        writeln!(out, "fig{reflected:02} reflects fig{base:02} on {n} points")
            .map_err(|e| CliError::io("<stdout>", e))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_have_documented_sizes() {
        let f = figures();
        assert_eq!(f.len(), 12);
        assert_eq!(f[0].xs.len(), 301);
        assert_eq!(f[0].orders, vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(f[5].orders.len(), 6);
        assert_eq!(f[8].orders.len(), 201);
        assert!(f[0].xs.contains(&1.0) && f[0].xs.contains(&-1.0));
    }

    #[test]
    fn reflection_compares_cells() {
        let base = "nu,x,value,err_est,method\n2,1,0.5,0,CLOSED\n2,-1,0,0,CLOSED\n";
        let good = "nu,x,value,err_est,method\n-2,-1,0.5,0,CLOSED\n-2,1,0,0,CLOSED\n";
        assert_eq!(check_reflection(base, good, 1.0), Ok(2));
        let odd = "nu,x,value,err_est,method\n-2,-1,-0.5,0,CLOSED\n-2,1,0,0,CLOSED\n";
        assert_eq!(check_reflection(base, odd, -1.0), Ok(2));
        assert!(check_reflection(base, odd, 1.0).is_err());
    }
}
