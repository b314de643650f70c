/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// √π.
pub const SQRT_PI: f64 = 1.772_453_850_905_516;

/// The numerical constants used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathConstants {
    pub euler_gamma: f64,
    pub pi: f64,
    pub sqrt_pi: f64,
}

impl MathConstants {
    pub const VALUES: MathConstants = MathConstants {
        euler_gamma: EULER_GAMMA,
        pi: std::f64::consts::PI,
        sqrt_pi: SQRT_PI,
    };
}

impl Default for MathConstants {
    fn default() -> Self {
        Self::VALUES
    }
}
