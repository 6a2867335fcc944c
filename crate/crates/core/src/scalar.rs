//! Exact scalars over ℚ or a prime field 𝔽ₚ (p an odd prime).
//!
//! Every value carries its field; mixing fields in arithmetic is a
//! programming error and panics. Public entry points validate field
//! agreement up front and return [`crate::Error`] instead.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::Error;

/// The coefficient field: ℚ or 𝔽ₚ with p an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// Prime field of the given odd prime order.
    Prime(u64),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Prime field constructor. Rejects composites and characteristic 2.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, value: m }
            }
        }
    }

    /// Parse "Q" or "Fp:<p>" (also accepts "q", "fp:<p>").
    pub fn parse(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("fp:"))
            .or_else(|| t.strip_prefix("FP:"))
        {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad field spec {s:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::Parse(format!("bad field spec {s:?}")))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Q(r.recip())
            }
            Scalar::Fp { p, value } => {
                assert!(*value != 0, "inverse of zero");
                Scalar::Fp {
                    p: *p,
                    value: mod_inv(*value, *p),
                }
            }
        }
    }

    /// Parse from the wire form: "a" or "a/b" over ℚ, a bare integer mod p over 𝔽ₚ.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Scalar, Error> {
        let t = s.trim();
        match field {
            FieldSpec::Rationals => {
                let r = if let Some((num, den)) = t.split_once('/') {
                    let n: BigInt = num
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                    let d: BigInt = den
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                    if d.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    BigRational::new(n, d)
                } else {
                    let n: BigInt = t
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
                    BigRational::from_integer(n)
                };
                Ok(Scalar::Q(r))
            }
            FieldSpec::Prime(p) => {
                let n: i64 = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad field element {s:?}")))?;
                Ok(FieldSpec::Prime(p).from_i64(n))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    // BigRational keeps the denominator positive, but be safe.
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible mod {p}");
    (t.rem_euclid(p as i128)) as u64
}

fn same_p(a: &Scalar, b: &Scalar) -> u64 {
    match (a, b) {
        (Scalar::Fp { p: pa, .. }, Scalar::Fp { p: pb, .. }) if pa == pb => *pa,
        _ => panic!("mixed-field scalar arithmetic: {a:?} vs {b:?}"),
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => {
                let p = same_p(self, rhs);
                let (Scalar::Fp { value: a, .. }, Scalar::Fp { value: b, .. }) = (self, rhs)
                else {
                    unreachable!()
                };
                Scalar::Fp {
                    p,
                    value: (a + b) % p,
                }
            }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            _ => {
                let p = same_p(self, rhs);
                let (Scalar::Fp { value: a, .. }, Scalar::Fp { value: b, .. }) = (self, rhs)
                else {
                    unreachable!()
                };
                Scalar::Fp {
                    p,
                    value: ((*a as u128 * *b as u128) % p as u128) as u64,
                }
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, value } => Scalar::Fp {
                p: *p,
                value: (p - value) % p,
            },
        }
    }
}
