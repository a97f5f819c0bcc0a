//! Exact arithmetic kernel: arbitrary-precision integers, rationals in
//! lowest terms, and quadratic surds `a + b·√d` over a fixed radicand.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`], re-exported here as [`Rational`]; both
//! reduce to canonical form on construction (positive denominator, gcd 1,
//! zero as 0/1). The surd type is defined in this module because the rest of
//! the crate needs exact closure under multiplication for a fixed radicand,
//! not general algebraic-number arithmetic.
//!
//! Every value is immutable and every operation is a pure function, so the
//! whole module can be used from concurrent contexts without synchronization.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Pow, Signed, Zero};
use std::error::Error;
use std::fmt;

/// Exact fraction in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Domain errors from kernel operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Square root of a negative integer.
    NegativeSqrt(BigInt),
    /// Surd operands carry different radicands.
    RadicandMismatch(BigInt, BigInt),
    /// A surd with nonzero irrational part needs a radicand that is at least
    /// 2 and not a perfect square.
    InvalidRadicand(BigInt),
    /// Input is not of the form `N` or `N/P` with a nonzero denominator.
    ParseRational(String),
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::NegativeSqrt(n) => write!(f, "isqrt of negative integer {n}"),
            ArithError::RadicandMismatch(a, b) => {
                write!(f, "radicand mismatch: sqrt({a}) vs sqrt({b})")
            }
            ArithError::InvalidRadicand(d) => {
                write!(f, "radicand {d} must be >= 2 and not a perfect square")
            }
            ArithError::ParseRational(s) => {
                write!(f, "cannot parse {s:?} as a rational (expected N or N/P, P != 0)")
            }
        }
    }
}

impl Error for ArithError {}

/// Greatest common divisor, always non-negative; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> Result<BigInt, ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeSqrt(n.clone()));
    }
    Ok(n.sqrt())
}

/// True iff `n` is the square of an integer. Negative numbers never are.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Parse `"N"` or `"N/P"` into a rational in lowest terms.
///
/// Decimal notation is deliberately rejected: it cannot represent values
/// like 1/3 exactly.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let err = || ArithError::ParseRational(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num_str.trim().parse().map_err(|_| err())?;
    let den: BigInt = den_str.trim().parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Decimal rendering of a rational, truncated toward zero, with exactly
/// `digits` fractional digits.
pub fn to_decimal_string(r: &Rational, digits: usize) -> String {
    let num_abs = r.numer().abs();
    let (int_part, rem) = num_abs.div_rem(r.denom());
    if digits == 0 {
        let sign = if r.is_negative() && !int_part.is_zero() { "-" } else { "" };
        return format!("{sign}{int_part}");
    }
    let scaled = rem * BigInt::from(10u32).pow(digits as u32) / r.denom();
    let sign = if r.is_negative() && !(int_part.is_zero() && scaled.is_zero()) {
        "-"
    } else {
        ""
    };
    format!("{sign}{int_part}.{scaled:0>digits$}")
}

/// Exact element `a + b·√d` with rational coefficients over a fixed
/// radicand `d`.
///
/// The radicand is kept exactly as given, with no reduction to the
/// squarefree part, so equality is componentwise and callers must use a
/// consistent `d` throughout a computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadraticSurd {
    /// Build `a + b·√d`. When `b != 0` the radicand must be at least 2 and
    /// not a perfect square, so the value is genuinely irrational.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self, ArithError> {
        if !b.is_zero() && (d < BigInt::from(2) || is_perfect_square(&d)) {
            return Err(ArithError::InvalidRadicand(d));
        }
        Ok(Self { a, b, d })
    }

    /// The rational `a` viewed as a surd with zero irrational part.
    pub fn from_rational(a: Rational, d: BigInt) -> Self {
        Self { a, b: Rational::zero(), d }
    }

    /// `√d` itself, i.e. `0 + 1·√d`.
    pub fn sqrt_d(d: BigInt) -> Result<Self, ArithError> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    /// Multiplicative identity `1 + 0·√d`.
    pub fn one(d: BigInt) -> Self {
        Self::from_rational(Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check_radicand(&self, other: &Self) -> Result<(), ArithError> {
        if self.d != other.d {
            return Err(ArithError::RadicandMismatch(self.d.clone(), other.d.clone()));
        }
        Ok(())
    }

    /// `(a₁ + b₁√d)(a₂ + b₂√d) = (a₁a₂ + b₁b₂d) + (a₁b₂ + a₂b₁)√d`.
    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_radicand(other)?;
        let d_rat = Rational::from_integer(self.d.clone());
        let a = &self.a * &other.a + &self.b * &other.b * d_rat;
        let b = &self.a * &other.b + &other.a * &self.b;
        Ok(Self { a, b, d: self.d.clone() })
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_radicand(other)?;
        Ok(Self {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.clone(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_radicand(other)?;
        Ok(Self {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        Self { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }

    /// Multiply both components by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        Self { a: &self.a * r, b: &self.b * r, d: self.d.clone() }
    }

    /// `a - b·√d`.
    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// Product with the conjugate: `a² - d·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    /// `k`-fold product; `k = 0` gives `1 + 0·√d`.
    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::one(self.d.clone());
        for _ in 0..k {
            acc = acc.mul(self).expect("radicands agree");
        }
        acc
    }

    /// Decimal rendering truncated to `digits` fractional digits.
    ///
    /// `√d` is approximated with twelve guard digits before the truncation,
    /// so the printed digits are correct except possibly the last one in
    /// near-tie cases. Output is deterministic for identical inputs.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        if self.b.is_zero() {
            return to_decimal_string(&self.a, digits);
        }
        let guard = digits as u32 + 12;
        let scale = BigInt::from(10u32).pow(guard);
        let root = (&self.d * &scale * &scale).sqrt();
        let approx = &self.a + &self.b * Rational::new(root, scale);
        to_decimal_string(&approx, digits)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let coeff = self.b.abs();
        let root = if coeff.is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", coeff, self.d)
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{root}")
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "{} {} {}", self.a, sign, root)
        }
    }
}
