//! Exact string form of cyclotomic elements, e.g. `1 + (-1/2)ζ6^1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::elem::CycloElem;
use super::poly::lcm;
use crate::error::{Error, Result};

/// Largest conductor accepted by the parser.
pub const MAX_PARSE_CONDUCTOR: u64 = 4096;

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let m = self.conductor();
        let mut first = true;
        for (j, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "ζ{m}^{j}")?;
            } else if (-c.clone()).is_one() {
                write!(f, "-ζ{m}^{j}")?;
            } else {
                write!(f, "({c})ζ{m}^{j}")?;
            }
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let d = int(b)?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(int(a)?, d))
        }
        None => Ok(BigRational::from_integer(int(s)?)),
    }
}

fn parse_term(term: &str) -> Result<(BigRational, u64, u64)> {
    let term = term.trim();
    let Some((coef, power)) = term.split_once('ζ') else {
        return Ok((parse_rational(term)?, 1, 0));
    };
    let coef = coef.trim();
    let c = match coef {
        "" => BigRational::one(),
        "-" => -BigRational::one(),
        _ => match coef.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            Some(inner) => parse_rational(inner)?,
            None => parse_rational(coef)?,
        },
    };
    let (m, j) = match power.split_once('^') {
        Some((m, j)) => (m, j),
        None => (power, "1"),
    };
    let m: u64 = m
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad conductor {m:?}: {e}")))?;
    let j: u64 = j
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad exponent {j:?}: {e}")))?;
    if m == 0 || m > MAX_PARSE_CONDUCTOR {
        return Err(Error::Parse(format!(
            "conductor {m} outside 1..={MAX_PARSE_CONDUCTOR}"
        )));
    }
    Ok((c, m, j % m))
}

impl FromStr for CycloElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let terms = s
            .split('+')
            .map(parse_term)
            .collect::<Result<Vec<_>>>()?;
        let conductor = terms.iter().try_fold(1u64, |acc, &(_, m, _)| {
            let l = lcm(acc, m);
            if l > MAX_PARSE_CONDUCTOR {
                Err(Error::Parse(format!(
                    "combined conductor {l} exceeds {MAX_PARSE_CONDUCTOR}"
                )))
            } else {
                Ok(l)
            }
        })?;
        let mut acc = CycloElem::zero(conductor);
        for (c, m, j) in terms {
            let t = CycloElem::zeta_pow(m, j as i64) * CycloElem::from_rational(1, &c);
            acc = acc + t;
        }
        Ok(acc.lift(conductor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(CycloElem::from_ratio_in(1, 3, 4).to_string(), "3/4");
        assert_eq!(CycloElem::zeta(6).div_int(2).to_string(), "(1/2)ζ6^1");
        assert_eq!((-CycloElem::zeta(4)).to_string(), "-ζ4^1");
        assert_eq!(CycloElem::zero(5).to_string(), "0");
        let e = CycloElem::one(6) + CycloElem::zeta(6).div_int(-2);
        assert_eq!(e.to_string(), "1 + (-1/2)ζ6^1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/4", "(1/2)ζ6^1", "-ζ4^1", "0", "1 + (-1/2)ζ6^1", "(7)ζ5^3"] {
            let e: CycloElem = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
    }

    #[test]
    fn parse_reduces() {
        // ζ4^2 = −1 and ζ3^3 = 1
        assert_eq!("ζ4^2".parse::<CycloElem>().unwrap(), CycloElem::from_int(-1));
        assert!("ζ3^3".parse::<CycloElem>().unwrap().is_one());
        assert_eq!(
            "ζ4 + ζ3".parse::<CycloElem>().unwrap(),
            CycloElem::zeta(4) + CycloElem::zeta(3)
        );
    }

    #[test]
    fn parse_rejects() {
        for s in ["", "ζ0^1", "1/0", "(1/2ζ3", "ζ5000^1", "ζ4096 + ζ4095", "abc"] {
            assert!(s.parse::<CycloElem>().is_err(), "{s:?} should fail");
        }
    }
}
