//! Exact arithmetic in cyclotomic fields Q(ζ_m).

mod angle;
mod elem;
mod poly;
mod text;

pub use angle::{unit_from_angle, Angle, RationalAngle, MAX_ANGLE_DENOMINATOR};
pub use elem::CycloElem;
pub use poly::{
    cyclotomic_polynomial, divisors, is_prime, lcm, prime_factors, totient, IntPoly,
};
pub use text::MAX_PARSE_CONDUCTOR;
