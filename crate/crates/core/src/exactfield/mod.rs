//! Exact arithmetic in ℚ(√2,√5)(√φ).

mod rational;
mod tower;

pub use rational::Rational;
pub use tower::{ts_from_parts, ts_inv, ts_mul, ts_sign, TowerScalar};
