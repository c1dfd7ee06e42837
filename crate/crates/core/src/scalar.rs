//! Dual-backend scalars.
//!
//! The exact backend works in the field `Q(i, sqrt 2)`: every constant that
//! appears in correlators, reflections, Fock normalisations and disc
//! amplitudes (rational points, `1/(sqrt 2 i)`, factorials) lives there, so
//! identities can be tested with `==`. The float backend is a plain
//! `Complex64`. Mixing the two promotes to float.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

/// Parse `"p/q"`, `"p"` or `"-p/q"` into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A real number `rational + radical * sqrt(2)` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    rational: BigRational,
    radical: BigRational,
}

impl QSqrt2 {
    pub fn new(rational: BigRational, radical: BigRational) -> Self {
        QSqrt2 { rational, radical }
    }

    pub fn from_rational(rational: BigRational) -> Self {
        QSqrt2 {
            rational,
            radical: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn sqrt2() -> Self {
        QSqrt2 {
            rational: BigRational::zero(),
            radical: BigRational::one(),
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.radical
    }

    /// `Some(q)` when the value is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.radical.is_zero().then(|| self.rational.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    /// Exact sign; `sqrt 2` is irrational so ties only happen at zero.
    pub fn signum(&self) -> Ordering {
        let a = self.rational.cmp(&BigRational::zero());
        let b = self.radical.cmp(&BigRational::zero());
        match (a, b) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            (x, y) => {
                let lhs = &self.rational * &self.rational;
                let rhs = &self.radical * &self.radical * rat(2);
                if lhs > rhs {
                    x
                } else {
                    y
                }
            }
        }
    }

    /// Conjugate in `Q(sqrt 2)` over `Q`: `a + b sqrt2 -> a - b sqrt2`.
    fn galois(&self) -> Self {
        QSqrt2 {
            rational: self.rational.clone(),
            radical: -&self.radical,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.radical.is_zero() {
            return Some(Self::from_rational(self.rational.recip()));
        }
        let norm = &self.rational * &self.rational - &self.radical * &self.radical * rat(2);
        let g = self.galois();
        Some(QSqrt2 {
            rational: g.rational / &norm,
            radical: g.radical / norm,
        })
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.radical.is_zero() {
            return a;
        }
        a + self.radical.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            rational: &self.rational + &rhs.rational,
            radical: &self.radical + &rhs.radical,
        }
    }
}

impl Sub<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            rational: &self.rational - &rhs.rational,
            radical: &self.radical - &rhs.radical,
        }
    }
}

impl Mul<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        if self.radical.is_zero() && rhs.radical.is_zero() {
            return QSqrt2::from_rational(&self.rational * &rhs.rational);
        }
        QSqrt2 {
            rational: &self.rational * &rhs.rational + &self.radical * &rhs.radical * rat(2),
            radical: &self.rational * &rhs.radical + &self.radical * &rhs.rational,
        }
    }
}

impl Div<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QSqrt2) -> QSqrt2 {
        self * &rhs.inv().expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            rational: -&self.rational,
            radical: -&self.radical,
        }
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -&self
    }
}

forward_binop!(QSqrt2, Add, add);
forward_binop!(QSqrt2, Sub, sub);
forward_binop!(QSqrt2, Mul, mul);
forward_binop!(QSqrt2, Div, div);

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            return write!(f, "{}*sqrt2", self.radical);
        }
        if self.radical.is_negative() {
            write!(f, "{}-{}*sqrt2", self.rational, -&self.radical)
        } else {
            write!(f, "{}+{}*sqrt2", self.rational, self.radical)
        }
    }
}

impl FromStr for QSqrt2 {
    type Err = String;

    /// Inverse of `Display`: `"p/q"`, `"r/s*sqrt2"` or `"p/q+r/s*sqrt2"`.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let bad = || format!("invalid rational literal {s:?}");
        let Some(head) = s.strip_suffix("*sqrt2") else {
            return parse_rational(s).map(QSqrt2::from_rational).ok_or_else(bad);
        };
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let rational = parse_rational(&head[..i]).ok_or_else(bad)?;
                let tail = head[i..].trim_start_matches('+');
                let radical = parse_rational(tail).ok_or_else(bad)?;
                Ok(QSqrt2::new(rational, radical))
            }
            None => Ok(QSqrt2::new(
                BigRational::zero(),
                parse_rational(head).ok_or_else(bad)?,
            )),
        }
    }
}

/// An element `re + i im` of `Q(i, sqrt 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactComplex {
    pub re: QSqrt2,
    pub im: QSqrt2,
}

impl ExactComplex {
    pub fn new(re: QSqrt2, im: QSqrt2) -> Self {
        ExactComplex { re, im }
    }

    pub fn from_rationals(re: BigRational, im: BigRational) -> Self {
        ExactComplex {
            re: QSqrt2::from_rational(re),
            im: QSqrt2::from_rational(im),
        }
    }

    pub fn zero() -> Self {
        ExactComplex::new(QSqrt2::zero(), QSqrt2::zero())
    }

    pub fn one() -> Self {
        ExactComplex::new(QSqrt2::one(), QSqrt2::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactComplex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> QSqrt2 {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr().inv()?;
        Some(ExactComplex::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Add<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        if self.im.is_zero() && rhs.im.is_zero() {
            return ExactComplex::new(&self.re * &rhs.re, QSqrt2::zero());
        }
        ExactComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ExactComplex) -> ExactComplex {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-&self.re, -&self.im)
    }
}

forward_binop!(ExactComplex, Add, add);
forward_binop!(ExactComplex, Sub, sub);
forward_binop!(ExactComplex, Mul, mul);
forward_binop!(ExactComplex, Div, div);

/// Numeric backend selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

/// Complex scalar with an exact (`Q(i, sqrt 2)`) or `f64` representation.
///
/// `Ord` is a canonical total order used to key linear combinations; it is
/// not a numeric comparison (see [`ComplexScalar::real_cmp`]).
// exact values are the common case; boxing them would cost an allocation per op
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum ComplexScalar {
    Exact(ExactComplex),
    Float(Complex64),
}

impl ComplexScalar {
    pub fn zero() -> Self {
        ComplexScalar::Exact(ExactComplex::zero())
    }

    pub fn one() -> Self {
        ComplexScalar::Exact(ExactComplex::one())
    }

    pub fn i() -> Self {
        ComplexScalar::Exact(ExactComplex::new(QSqrt2::zero(), QSqrt2::one()))
    }

    pub fn sqrt2() -> Self {
        ComplexScalar::Exact(ExactComplex::new(QSqrt2::sqrt2(), QSqrt2::zero()))
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(n, 1)
    }

    /// Exact real `num / den`. Panics if `den == 0`.
    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ComplexScalar::from(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Exact Gaussian rational `re + i im`.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        ComplexScalar::Exact(ExactComplex::from_rationals(re, im))
    }

    pub fn float(re: f64, im: f64) -> Self {
        ComplexScalar::Float(Complex64::new(re, im))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        ComplexScalar::from(BigRational::from_integer(n.clone()))
    }

    pub fn backend(&self) -> Backend {
        match self {
            ComplexScalar::Exact(_) => Backend::Exact,
            ComplexScalar::Float(_) => Backend::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ComplexScalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&ExactComplex> {
        match self {
            ComplexScalar::Exact(e) => Some(e),
            ComplexScalar::Float(_) => None,
        }
    }

    /// Exact zero, or float `0 + 0i`.
    pub fn is_zero(&self) -> bool {
        match self {
            ComplexScalar::Exact(e) => e.is_zero(),
            ComplexScalar::Float(c) => c.re == 0.0 && c.im == 0.0,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            ComplexScalar::Exact(e) => e.im.is_zero(),
            ComplexScalar::Float(c) => c.im == 0.0,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            ComplexScalar::Exact(e) => ComplexScalar::Exact(e.conj()),
            ComplexScalar::Float(c) => ComplexScalar::Float(c.conj()),
        }
    }

    /// `|z|^2` as a real scalar of the same backend.
    pub fn norm_sqr(&self) -> Self {
        match self {
            ComplexScalar::Exact(e) => ComplexScalar::Exact(ExactComplex::new(e.norm_sqr(), QSqrt2::zero())),
            ComplexScalar::Float(c) => ComplexScalar::float(c.norm_sqr(), 0.0),
        }
    }

    pub fn re(&self) -> Self {
        match self {
            ComplexScalar::Exact(e) => ComplexScalar::Exact(ExactComplex::new(e.re.clone(), QSqrt2::zero())),
            ComplexScalar::Float(c) => ComplexScalar::float(c.re, 0.0),
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        match self {
            ComplexScalar::Exact(e) => e.to_complex64(),
            ComplexScalar::Float(c) => *c,
        }
    }

    pub fn to_float(&self) -> Self {
        ComplexScalar::Float(self.to_complex64())
    }

    pub fn abs(&self) -> f64 {
        self.to_complex64().norm()
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            ComplexScalar::Exact(e) => e.inv().map(ComplexScalar::Exact),
            ComplexScalar::Float(c) => (!self.is_zero()).then(|| ComplexScalar::Float(c.inv())),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        Some(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert (`None` at zero).
    pub fn powi(&self, exp: i64) -> Option<Self> {
        if exp < 0 {
            return self.inv()?.powi(-exp);
        }
        if let ComplexScalar::Float(c) = self {
            return Some(ComplexScalar::Float(c.powi(exp as i32)));
        }
        let mut base = self.clone();
        let mut acc = ComplexScalar::one();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Some(acc)
    }

    /// Numeric comparison of two real scalars; `None` if either is not real.
    pub fn real_cmp(&self, other: &Self) -> Option<Ordering> {
        if !self.is_real() || !other.is_real() {
            return None;
        }
        match (self, other) {
            (ComplexScalar::Exact(a), ComplexScalar::Exact(b)) => Some(a.re.cmp(&b.re)),
            _ => self.to_complex64().re.partial_cmp(&other.to_complex64().re),
        }
    }

    /// `Some(q)` when this is an exact rational real.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            ComplexScalar::Exact(e) if e.im.is_zero() => e.re.to_rational(),
            _ => None,
        }
    }

    /// `|self - other| <= tol`, whatever the backends.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.to_complex64() - other.to_complex64()).norm() <= tol
    }
}

impl Default for ComplexScalar {
    fn default() -> Self {
        ComplexScalar::zero()
    }
}

impl From<BigRational> for ComplexScalar {
    fn from(r: BigRational) -> Self {
        ComplexScalar::Exact(ExactComplex::from_rationals(r, BigRational::zero()))
    }
}

impl From<i64> for ComplexScalar {
    fn from(n: i64) -> Self {
        ComplexScalar::integer(n)
    }
}

impl From<Complex64> for ComplexScalar {
    fn from(c: Complex64) -> Self {
        ComplexScalar::Float(c)
    }
}

impl From<ExactComplex> for ComplexScalar {
    fn from(e: ExactComplex) -> Self {
        ComplexScalar::Exact(e)
    }
}

impl From<QSqrt2> for ComplexScalar {
    fn from(r: QSqrt2) -> Self {
        ComplexScalar::Exact(ExactComplex::new(r, QSqrt2::zero()))
    }
}

impl PartialEq for ComplexScalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ComplexScalar {}

impl Ord for ComplexScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ComplexScalar::Exact(a), ComplexScalar::Exact(b)) => a.cmp(b),
            (ComplexScalar::Exact(_), ComplexScalar::Float(_)) => Ordering::Less,
            (ComplexScalar::Float(_), ComplexScalar::Exact(_)) => Ordering::Greater,
            (ComplexScalar::Float(a), ComplexScalar::Float(b)) => {
                a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
            }
        }
    }
}

impl PartialOrd for ComplexScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for ComplexScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            ComplexScalar::Exact(e) => {
                0u8.hash(state);
                e.hash(state);
            }
            ComplexScalar::Float(c) => {
                1u8.hash(state);
                c.re.to_bits().hash(state);
                c.im.to_bits().hash(state);
            }
        }
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&ComplexScalar> for &ComplexScalar {
            type Output = ComplexScalar;
            fn $method(self, rhs: &ComplexScalar) -> ComplexScalar {
                match (self, rhs) {
                    (ComplexScalar::Exact(a), ComplexScalar::Exact(b)) => ComplexScalar::Exact(a.$method(b)),
                    _ => ComplexScalar::Float(self.to_complex64().$method(rhs.to_complex64())),
                }
            }
        }
        forward_binop!(ComplexScalar, $tr, $method);
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Div<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    /// Panics on exact division by zero; float division follows IEEE.
    fn div(self, rhs: &ComplexScalar) -> ComplexScalar {
        match (self, rhs) {
            (ComplexScalar::Exact(a), ComplexScalar::Exact(b)) => ComplexScalar::Exact(a / b),
            _ => ComplexScalar::Float(self.to_complex64() / rhs.to_complex64()),
        }
    }
}
forward_binop!(ComplexScalar, Div, div);

impl Neg for &ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        match self {
            ComplexScalar::Exact(e) => ComplexScalar::Exact(-e),
            ComplexScalar::Float(c) => ComplexScalar::Float(-c),
        }
    }
}

impl Neg for ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        -&self
    }
}

impl std::iter::Sum for ComplexScalar {
    fn sum<I: Iterator<Item = ComplexScalar>>(iter: I) -> Self {
        iter.fold(ComplexScalar::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for ComplexScalar {
    fn product<I: Iterator<Item = ComplexScalar>>(iter: I) -> Self {
        iter.fold(ComplexScalar::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexScalar::Exact(e) if e.im.is_zero() => write!(f, "{}", e.re),
            ComplexScalar::Exact(e) if e.re.is_zero() => write!(f, "({})i", e.im),
            ComplexScalar::Exact(e) => write!(f, "{} + ({})i", e.re, e.im),
            ComplexScalar::Float(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QSqrt2 {
        s.parse().unwrap()
    }

    #[test]
    fn sign_of_mixed_surds() {
        assert_eq!(q("3/2-1*sqrt2").signum(), Ordering::Greater);
        assert_eq!(q("7/5-1*sqrt2").signum(), Ordering::Less);
        assert_eq!(q("-3/2+1*sqrt2").signum(), Ordering::Less);
        assert!(q("1*sqrt2") > q("141/100"));
        assert!(q("1*sqrt2") < q("142/100"));
    }

    #[test]
    fn surd_inverse_and_display_roundtrip() {
        let x = q("1/2-3/4*sqrt2");
        assert_eq!(&x * &x.inv().unwrap(), QSqrt2::one());
        assert_eq!(x.to_string(), "1/2-3/4*sqrt2");
        assert_eq!(q(&x.to_string()), x);
        assert_eq!(q("-5*sqrt2").to_string(), "-5*sqrt2");
        assert!("1/0".parse::<QSqrt2>().is_err());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = ComplexScalar::sqrt2();
        assert_eq!(&s * &s, ComplexScalar::integer(2));
        let inv = (ComplexScalar::sqrt2() * ComplexScalar::i()).inv().unwrap();
        assert_eq!(&inv * &inv.conj(), ComplexScalar::rational(1, 2));
    }

    #[test]
    fn mixed_backends_promote() {
        let x = ComplexScalar::rational(1, 2) + ComplexScalar::float(0.25, 1.0);
        assert!(!x.is_exact());
        assert!(x.approx_eq(&ComplexScalar::float(0.75, 1.0), 0.0));
    }

    #[test]
    fn powers_and_inverse() {
        let z = ComplexScalar::gaussian(BigRational::new(1.into(), 2.into()), BigRational::one());
        let z3 = z.powi(3).unwrap();
        assert_eq!(&z3 * &z.powi(-3).unwrap(), ComplexScalar::one());
        assert!(ComplexScalar::zero().powi(-1).is_none());
    }
}
