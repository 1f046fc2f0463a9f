//! Exact weights of the form `q * sqrt(r)` with `q` rational and `r` a
//! square-free positive integer.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Weight;

#[derive(Debug, Clone, PartialEq)]
pub enum ExactWeight {
    /// `coeff * sqrt(radicand)`; zero is stored with radicand 1.
    Surd {
        coeff: BigRational,
        radicand: BigInt,
    },
    /// Result of adding values from different `sqrt` classes; exactness is lost.
    Float(f64),
}

impl ExactWeight {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        ExactWeight::Surd {
            coeff: q,
            radicand: BigInt::one(),
        }
    }

    /// `q * sqrt(r)` for a nonnegative rational `r`, in canonical form.
    pub fn from_rational_sqrt(q: BigRational, r: BigRational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if q.is_zero() || r.is_zero() {
            return Some(Self::zero());
        }
        // sqrt(a/b) = sqrt(a*b) / b
        let (a, b) = (r.numer().clone(), r.denom().clone());
        let (square, free) = split_square(a * &b);
        let coeff = q * BigRational::new(square, b);
        Some(ExactWeight::Surd {
            coeff,
            radicand: free,
        })
    }

    pub fn sqrt_of_integer(r: u64) -> Self {
        Self::from_rational_sqrt(BigRational::one(), BigRational::from_integer(r.into()))
            .expect("nonnegative")
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ExactWeight::Surd { .. })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactWeight::Surd { coeff, .. } => coeff.is_zero(),
            ExactWeight::Float(v) => *v == 0.0,
        }
    }

    /// The rational value when the radicand is 1.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactWeight::Surd { coeff, radicand } if radicand.is_one() => Some(coeff),
            _ => None,
        }
    }

    /// Exact sum, or `None` when the operands live in different `sqrt` classes.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        match (self, other) {
            (
                ExactWeight::Surd {
                    coeff: c1,
                    radicand: r1,
                },
                ExactWeight::Surd {
                    coeff: c2,
                    radicand: r2,
                },
            ) if r1 == r2 => {
                let coeff = c1 + c2;
                if coeff.is_zero() {
                    Some(Self::zero())
                } else {
                    Some(ExactWeight::Surd {
                        coeff,
                        radicand: r1.clone(),
                    })
                }
            }
            _ => None,
        }
    }
}

/// Writes `v = s^2 * f` with `f` square-free and returns `(s, f)`.
fn split_square(v: BigInt) -> (BigInt, BigInt) {
    debug_assert!(v.sign() != Sign::Minus);
    let mut rest = v;
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest {
        let mut count = 0u32;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= &d;
        }
        if count % 2 == 1 {
            free *= &d;
        }
        d += 1u32;
    }
    (square, free * rest)
}

impl Weight for ExactWeight {
    fn is_zero_weight(&self) -> bool {
        self.is_zero()
    }

    fn to_f64(&self) -> f64 {
        match self {
            ExactWeight::Surd { coeff, radicand } => {
                let c = ToPrimitive::to_f64(coeff).unwrap_or(f64::NAN);
                if radicand.is_one() {
                    c
                } else {
                    c * radicand.to_f64().unwrap_or(f64::NAN).sqrt()
                }
            }
            ExactWeight::Float(v) => *v,
        }
    }

    fn is_finite_weight(&self) -> bool {
        match self {
            ExactWeight::Surd { .. } => true,
            ExactWeight::Float(v) => v.is_finite(),
        }
    }
}

impl Add for ExactWeight {
    type Output = ExactWeight;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
            .unwrap_or_else(|| ExactWeight::Float(self.to_f64() + rhs.to_f64()))
    }
}

impl Mul for ExactWeight {
    type Output = ExactWeight;

    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (
                ExactWeight::Surd {
                    coeff: c1,
                    radicand: r1,
                },
                ExactWeight::Surd {
                    coeff: c2,
                    radicand: r2,
                },
            ) => {
                if c1.is_zero() || c2.is_zero() {
                    return ExactWeight::zero();
                }
                // r1, r2 square-free: r1*r2 = g^2 * (r1/g)(r2/g)
                let g = r1.gcd(&r2);
                let radicand = (&r1 / &g) * (&r2 / &g);
                ExactWeight::Surd {
                    coeff: c1 * c2 * BigRational::from_integer(g),
                    radicand,
                }
            }
            (a, b) => ExactWeight::Float(a.to_f64() * b.to_f64()),
        }
    }
}

impl Neg for ExactWeight {
    type Output = ExactWeight;

    fn neg(self) -> Self {
        match self {
            ExactWeight::Surd { coeff, radicand } => ExactWeight::Surd {
                coeff: -coeff,
                radicand,
            },
            ExactWeight::Float(v) => ExactWeight::Float(-v),
        }
    }
}

impl fmt::Display for ExactWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactWeight::Float(v) => write!(f, "{v}"),
            ExactWeight::Surd { coeff, radicand } => {
                if radicand.is_one() {
                    write!(f, "{coeff}")
                } else if coeff.is_one() {
                    write!(f, "sqrt({radicand})")
                } else if (-coeff).is_one() {
                    write!(f, "-sqrt({radicand})")
                } else {
                    write!(f, "{coeff}*sqrt({radicand})")
                }
            }
        }
    }
}

/// Parses an integer, a fraction `a/b`, or a decimal with optional exponent.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        if b.is_zero() {
            return None;
        }
        return Some(BigRational::new(a, b));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let mut value = if scale >= 0 {
        BigRational::from_integer(all * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(all, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseExactError(pub String);

impl fmt::Display for ParseExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid exact weight `{}`", self.0)
    }
}

impl std::error::Error for ParseExactError {}

impl FromStr for ExactWeight {
    type Err = ParseExactError;

    /// Accepts `q`, `sqrt(r)`, `-sqrt(r)` and `q*sqrt(r)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseExactError(s.to_string());
        let t = s.trim();
        let Some(pos) = t.find("sqrt(") else {
            return parse_rational(t).map(Self::from_rational).ok_or_else(err);
        };
        let inner = t[pos + 5..].strip_suffix(')').ok_or_else(err)?;
        let radicand = parse_rational(inner).ok_or_else(err)?;
        let head = t[..pos].trim();
        let coeff = match head {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            _ => parse_rational(head.strip_suffix('*').ok_or_else(err)?).ok_or_else(err)?,
        };
        Self::from_rational_sqrt(coeff, radicand).ok_or_else(err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn canonical_form() {
        // 3/2 * sqrt(8/9) = 3/2 * 2/3 * sqrt(2) = sqrt(2)
        let w = ExactWeight::from_rational_sqrt(q(3, 2), q(8, 9)).unwrap();
        assert_eq!(w, ExactWeight::sqrt_of_integer(2));
        let six = ExactWeight::from_rational_sqrt(q(1, 1), q(24, 4)).unwrap();
        assert_eq!(six, ExactWeight::sqrt_of_integer(6));
        assert_eq!(ExactWeight::sqrt_of_integer(18).to_string(), "3*sqrt(2)");
        assert_eq!(ExactWeight::sqrt_of_integer(16).to_string(), "4");
        assert_eq!(ExactWeight::sqrt_of_integer(0), ExactWeight::zero());
        assert!(ExactWeight::from_rational_sqrt(q(1, 1), q(-1, 1)).is_none());
    }

    #[test]
    fn products_stay_exact() {
        let p = ExactWeight::sqrt_of_integer(6) * ExactWeight::sqrt_of_integer(10);
        assert_eq!(
            p,
            ExactWeight::from_rational_sqrt(q(2, 1), q(15, 1)).unwrap()
        );
        let s2 = ExactWeight::sqrt_of_integer(2);
        assert_eq!(s2.clone() * s2, ExactWeight::from_integer(2));
    }

    #[test]
    fn sums_within_a_class() {
        let a = ExactWeight::sqrt_of_integer(2);
        let b: ExactWeight = "3*sqrt(2)".parse().unwrap();
        assert_eq!(a.clone() + b, "4*sqrt(2)".parse().unwrap());
        let mixed = a + ExactWeight::sqrt_of_integer(3);
        assert!(!mixed.is_exact());
        assert!((mixed.to_f64() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn parse_and_display() {
        for text in ["0", "7", "-3/4", "sqrt(2)", "-sqrt(5)", "3/2*sqrt(10)"] {
            let w: ExactWeight = text.parse().unwrap();
            assert_eq!(w.to_string(), text);
        }
        let w: ExactWeight = "0.125".parse().unwrap();
        assert_eq!(w.as_rational(), Some(&q(1, 8)));
        let w: ExactWeight = "2.5e-1".parse().unwrap();
        assert_eq!(w.as_rational(), Some(&q(1, 4)));
        assert!("abc".parse::<ExactWeight>().is_err());
        assert!("sqrt(2".parse::<ExactWeight>().is_err());
        assert!("1/0".parse::<ExactWeight>().is_err());
    }
}
