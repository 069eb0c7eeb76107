use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::elem::CycloElem;
use crate::error::{Error, Result};

/// Largest denominator accepted when parsing an angle.
pub const MAX_ANGLE_DENOMINATOR: u64 = 1 << 20;

/// η = 2π·num/den with the fraction reduced and 0 ≤ num/den < 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalAngle {
    num: u64,
    den: u64,
}

impl RationalAngle {
    /// Any fraction of a full turn; reduced modulo 1.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("angle denominator is zero".into()));
        }
        let (num, den) = (num as i128, den as i128);
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if den > MAX_ANGLE_DENOMINATOR as i128 {
            return Err(Error::Parse(format!(
                "angle denominator {den} exceeds {MAX_ANGLE_DENOMINATOR}"
            )));
        }
        let den = den as u64;
        let num = num.rem_euclid(den as i128) as u64;
        let g = num.gcd(&den);
        Ok(RationalAngle {
            num: num / g,
            den: den / g,
        })
    }

    pub fn zero() -> Self {
        RationalAngle { num: 0, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    /// Conductor of the field containing e^{iη}.
    pub fn conductor(&self) -> u64 {
        self.den
    }

    pub fn radians(&self) -> f64 {
        2.0 * PI * self.num as f64 / self.den as f64
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for RationalAngle {
    type Err = Error;

    /// Accepts `A/B` or a bare integer `A`, meaning η = 2π·A/B.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad angle component {t:?}: {e}")))
        };
        match s.split_once('/') {
            Some((a, b)) => RationalAngle::new(parse(a)?, parse(b)?),
            None => RationalAngle::new(parse(s)?, 1),
        }
    }
}

/// Either an exact rational fraction of a turn or a raw angle in radians.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Angle {
    Rational(RationalAngle),
    Float(f64),
}

impl Angle {
    pub fn radians(&self) -> f64 {
        match self {
            Angle::Rational(r) => r.radians(),
            Angle::Float(x) => *x,
        }
    }

    pub fn as_rational(&self) -> Option<RationalAngle> {
        match self {
            Angle::Rational(r) => Some(*r),
            Angle::Float(_) => None,
        }
    }

    pub fn turn(num: i64, den: i64) -> Result<Self> {
        RationalAngle::new(num, den).map(Angle::Rational)
    }
}

impl From<RationalAngle> for Angle {
    fn from(r: RationalAngle) -> Self {
        Angle::Rational(r)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Rational(r) => write!(f, "2π·{r}"),
            Angle::Float(x) => write!(f, "{x} rad"),
        }
    }
}

/// e^{iη} as an element of Q(ζ_b) where η = 2π·a/b.
pub fn unit_from_angle(angle: &Angle) -> Result<CycloElem> {
    match angle {
        Angle::Rational(r) => Ok(CycloElem::zeta_pow(r.den, r.num as i64)),
        Angle::Float(_) => Err(Error::NumericAngle),
    }
}
