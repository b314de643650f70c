//! Classical special functions needed by the Bateman and Havelock
//! evaluators. Only the orders and domains the crate actually uses are
//! supported; everything else is rejected with an error.

mod bessel;
mod constants;
mod expint;
mod gamma;
mod hypergeometric;
mod kelvin;
mod orthopoly;
mod struve;
mod whittaker;

pub(crate) use bessel::bessel_i_series;
pub use bessel::{bessel, bessel_k01_scaled, BesselKind};
pub use constants::{MathConstants, EULER_GAMMA, SQRT_PI};
pub use expint::{exp_integral_e1, exp_integral_ei, scaled_e1, scaled_ei};
pub use gamma::{binomial, factorial, gamma, pochhammer, rgamma};
pub use hypergeometric::{hyp_gauss_2f1, hyp_kummer_m};
pub use kelvin::kelvin_ber_bei_prime;
pub use orthopoly::{hermite, laguerre};
pub(crate) use struve::series as struve_series;
pub use struve::{struve, StruveKind};
pub use whittaker::{whittaker_w, whittaker_w_with};
