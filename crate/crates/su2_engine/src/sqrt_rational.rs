use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact real number `sign * sqrt(radicand)` with a non-negative rational radicand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    sign: i8,
    radicand: BigRational,
}

fn exact_sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of a non-negative rational when it is itself rational.
pub fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = exact_sqrt_int(r.numer())?;
    let d = exact_sqrt_int(r.denom())?;
    Some(BigRational::new(n, d))
}

impl SqrtRational {
    pub fn zero() -> Self {
        Self {
            sign: 0,
            radicand: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Self {
            sign: 1,
            radicand: BigRational::one(),
        }
    }

    /// `sign * sqrt(radicand)`. Panics on a negative radicand.
    pub fn new(sign: i8, radicand: BigRational) -> Self {
        assert!(!radicand.is_negative(), "negative radicand {radicand}");
        if sign == 0 || radicand.is_zero() {
            return Self::zero();
        }
        Self {
            sign: sign.signum(),
            radicand,
        }
    }

    /// Positive square root of `num/den`.
    pub fn sqrt_frac(num: i64, den: i64) -> Self {
        Self::new(1, BigRational::new(num.into(), den.into()))
    }

    /// Signed square root: `sign(num/den) * sqrt(|num/den|)`.
    pub fn signed_sqrt_frac(num: i64, den: i64) -> Self {
        let r = BigRational::new(num.into(), den.into());
        let s = if r.is_negative() { -1 } else { 1 };
        Self::new(s, r.abs())
    }

    /// The exact rational `r` written as a surd.
    pub fn from_rational(r: BigRational) -> Self {
        let s = match r.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        };
        Self::new(s, &r * &r)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(v.into()))
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The exact square, with sign: `sign * radicand`.
    pub fn signed_square(&self) -> BigRational {
        if self.sign < 0 {
            -self.radicand.clone()
        } else {
            self.radicand.clone()
        }
    }

    /// `|x|^2`.
    pub fn square(&self) -> BigRational {
        self.radicand.clone()
    }

    pub fn abs(&self) -> Self {
        Self::new(self.sign.abs(), self.radicand.clone())
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        f64::from(self.sign) * r.sqrt()
    }

    /// Rational value if the radicand is a perfect square.
    pub fn to_rational(&self) -> Option<BigRational> {
        exact_sqrt(&self.radicand).map(|r| if self.sign < 0 { -r } else { r })
    }

    /// `sqrt(1 - x^2)` for `|x| <= 1`.
    pub fn complement(&self) -> Option<Self> {
        let rest = BigRational::one() - &self.radicand;
        (!rest.is_negative()).then(|| Self::new(1, rest))
    }

    /// Sum of two surds, when it is again a single surd.
    ///
    /// `sqrt(a) + sqrt(b)` is a surd iff `b/a` is a rational square.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        let ratio = exact_sqrt(&(&other.radicand / &self.radicand))?;
        let c = BigRational::from_integer(i64::from(self.sign).into())
            + ratio * BigRational::from_integer(i64::from(other.sign).into());
        let s = match c.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        };
        Some(Self::new(s, &c * &c * &self.radicand))
    }
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational::new(self.sign * rhs.sign, &self.radicand * &rhs.radicand)
    }
}

impl Mul for SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: SqrtRational) -> SqrtRational {
        &self * &rhs
    }
}

impl Div for &SqrtRational {
    type Output = SqrtRational;
    /// Panics on division by zero.
    fn div(self, rhs: &SqrtRational) -> SqrtRational {
        assert!(!rhs.is_zero(), "division by a zero surd");
        SqrtRational::new(self.sign * rhs.sign, &self.radicand / &rhs.radicand)
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        SqrtRational::new(-self.sign, self.radicand)
    }
}

impl Neg for &SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        -(self.clone())
    }
}

impl PartialOrd for SqrtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SqrtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.signed_square().cmp(&other.signed_square())
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let minus = if self.sign < 0 { "-" } else { "" };
        if let Some(r) = exact_sqrt(&self.radicand) {
            return write!(f, "{minus}{r}");
        }
        write!(f, "{minus}sqrt({})", self.radicand)
    }
}

impl fmt::Debug for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact sum of surds, kept as terms that pairwise do not combine.
///
/// Square roots of distinct square-free rationals are linearly independent,
/// so this form is canonical and zero only when it has no terms.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: Vec<SqrtRational>,
}

impl SurdSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_surd(x: SqrtRational) -> Self {
        let mut s = Self::new();
        s.add(&x);
        s
    }

    pub fn add(&mut self, x: &SqrtRational) {
        if x.is_zero() {
            return;
        }
        for i in 0..self.terms.len() {
            if let Some(sum) = self.terms[i].checked_add(x) {
                if sum.is_zero() {
                    self.terms.swap_remove(i);
                } else {
                    self.terms[i] = sum;
                }
                return;
            }
        }
        self.terms.push(x.clone());
    }

    pub fn add_sum(&mut self, other: &SurdSum) {
        for t in &other.terms {
            self.add(t);
        }
    }

    pub fn scale(&self, x: &SqrtRational) -> SurdSum {
        let mut out = SurdSum::new();
        for t in &self.terms {
            out.add(&(t * x));
        }
        out
    }

    pub fn mul(&self, other: &SurdSum) -> SurdSum {
        let mut out = SurdSum::new();
        for a in &self.terms {
            for b in &other.terms {
                out.add(&(a * b));
            }
        }
        out
    }

    pub fn terms(&self) -> &[SqrtRational] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single surd this sum equals, if any.
    pub fn to_surd(&self) -> Option<SqrtRational> {
        match self.terms.as_slice() {
            [] => Some(SqrtRational::zero()),
            [t] => Some(t.clone()),
            _ => None,
        }
    }

    /// Rational value, if the sum is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.to_surd()?.to_rational()
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(SqrtRational::to_f64).sum()
    }
}

impl fmt::Debug for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalisation() {
        assert!(SqrtRational::new(1, q(0, 1)).is_zero());
        assert!(SqrtRational::new(0, q(3, 1)).is_zero());
        assert_eq!(SqrtRational::sqrt_frac(2, 4), SqrtRational::sqrt_frac(1, 2));
        assert_eq!(SqrtRational::from_int(-3).signed_square(), q(-9, 1));
    }

    #[test]
    fn products_are_closed() {
        let a = SqrtRational::sqrt_frac(2, 3);
        let b = -SqrtRational::sqrt_frac(3, 8);
        assert_eq!(&a * &b, -SqrtRational::sqrt_frac(1, 4));
        assert_eq!((&a * &b).to_rational(), Some(q(-1, 2)));
        assert_eq!(&a / &a, SqrtRational::one());
    }

    #[test]
    fn like_surds_add() {
        let a = SqrtRational::sqrt_frac(1, 2);
        let b = SqrtRational::sqrt_frac(2, 1);
        // sqrt(1/2) + sqrt(2) = 3 sqrt(1/2)
        assert_eq!(a.checked_add(&b), Some(SqrtRational::sqrt_frac(9, 2)));
        assert_eq!(a.checked_add(&-a.clone()), Some(SqrtRational::zero()));
        assert_eq!(a.checked_add(&SqrtRational::sqrt_frac(1, 3)), None);
    }

    #[test]
    fn surd_sums_cancel() {
        let mut s = SurdSum::new();
        s.add(&SqrtRational::sqrt_frac(1, 2));
        s.add(&SqrtRational::sqrt_frac(1, 3));
        assert!(s.to_surd().is_none());
        s.add(&-SqrtRational::sqrt_frac(1, 12));
        s.add(&-SqrtRational::sqrt_frac(1, 12));
        s.add(&-SqrtRational::sqrt_frac(1, 8));
        assert_eq!(s.to_surd(), Some(SqrtRational::sqrt_frac(1, 8)));
        assert!((s.to_f64() - (1.0f64 / 8.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn display() {
        assert_eq!(SqrtRational::sqrt_frac(1, 4).to_string(), "1/2");
        assert_eq!((-SqrtRational::sqrt_frac(2, 3)).to_string(), "-sqrt(2/3)");
        assert_eq!(SqrtRational::zero().to_string(), "0");
    }
}
