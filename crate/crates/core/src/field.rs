//! Exact scalar arithmetic over Q, GF(p) and GF(p^k).
//!
//! A [`Field`] is a cheap-to-clone description of the base field and carries
//! all arithmetic. [`Scalar`] values are kept in canonical form: rationals in
//! lowest terms with positive denominator, residues in `[0, p)`, and
//! extension-field elements as coefficient vectors of length `k` with respect
//! to the power basis `1, t, ..., t^(k-1)` where `t` is a root of the minimal
//! polynomial.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
    /// GF(p^k) as GF(p)[t]/(minpoly); `minpoly` is monic, low-to-high, length k+1.
    Extension { p: u64, minpoly: Arc<[u64]> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
    Poly(Box<[u64]>),
}

/// A scalar tagged with its field, for the checked arithmetic entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldValue {
    pub field: Field,
    pub value: Scalar,
}

/// Deterministic primality test by trial division, valid for `p < 2^31`.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse modulo `p` by the extended Euclidean algorithm.
fn mod_inv(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

impl Field {
    pub fn rationals() -> Self {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("modulus {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// GF(p^k) with the given monic minimal polynomial (coefficients low to high).
    pub fn extension(p: u64, minpoly: &[u64]) -> Result<Self> {
        let base = Field::prime(p)?;
        if minpoly.len() < 3 {
            return Err(Error::InvalidField("extension degree must be at least 2".into()));
        }
        if *minpoly.last().unwrap() % p != 1 {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        let coeffs: Vec<Scalar> = minpoly.iter().map(|&c| Scalar::Residue(c % p)).collect();
        let poly = Polynomial::new(&base, coeffs);
        if !poly.is_irreducible()? {
            return Err(Error::InvalidField(format!(
                "minimal polynomial {} is reducible over GF({p})",
                poly
            )));
        }
        let reduced: Vec<u64> = minpoly.iter().map(|c| c % p).collect();
        Ok(Field::Extension { p, minpoly: reduced.into() })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) | Field::Extension { p, .. } => *p,
        }
    }

    /// Extension degree over the prime field (1 for Q and GF(p)).
    pub fn degree(&self) -> usize {
        match self {
            Field::Extension { minpoly, .. } => minpoly.len() - 1,
            _ => 1,
        }
    }

    /// Number of elements, `None` for Q.
    pub fn order(&self) -> Option<u128> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p as u128),
            Field::Extension { p, .. } => Some((*p as u128).pow(self.degree() as u32)),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Field::Rationals)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(_) => Scalar::Residue(0),
            Field::Extension { .. } => Scalar::Poly(vec![0; self.degree()].into()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Residue(v.rem_euclid(*p as i64) as u64),
            Field::Extension { p, .. } => {
                let mut c = vec![0u64; self.degree()];
                c[0] = v.rem_euclid(*p as i64) as u64;
                Scalar::Poly(c.into())
            }
        }
    }

    /// The generator `t` of an extension field (a root of the minimal polynomial).
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            Field::Extension { .. } => {
                let mut c = vec![0u64; self.degree()];
                c[1] = 1;
                Some(Scalar::Poly(c.into()))
            }
            _ => None,
        }
    }

    /// Whether `s` belongs to this field and is in canonical form.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(r)) => r.denom().is_positive(),
            (Field::Prime(p), Scalar::Residue(v)) => v < p,
            (Field::Extension { p, .. }, Scalar::Poly(c)) => {
                c.len() == self.degree() && c.iter().all(|v| v < p)
            }
            _ => false,
        }
    }

    /// Brings a value of the right shape into canonical form.
    pub fn normalize(&self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(r)) => {
                Ok(Scalar::Rational(BigRational::new(r.numer().clone(), r.denom().clone())))
            }
            (Field::Prime(p), Scalar::Residue(v)) => Ok(Scalar::Residue(v % p)),
            (Field::Extension { p, .. }, Scalar::Poly(c)) if c.len() == self.degree() => {
                Ok(Scalar::Poly(c.iter().map(|v| v % p).collect()))
            }
            _ => Err(Error::FieldMismatch(self.to_string(), format!("{s:?}"))),
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(v) => *v == 0,
            Scalar::Poly(c) => c.iter().all(|&v| v == 0),
        }
    }

    pub fn is_one(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(v) => *v == 1,
            Scalar::Poly(c) => c[0] == 1 && c[1..].iter().all(|&v| v == 0),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (_, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((x + y) % p)
            }
            (Field::Extension { p, .. }, Scalar::Poly(x), Scalar::Poly(y)) => {
                Scalar::Poly(x.iter().zip(y.iter()).map(|(u, v)| (u + v) % p).collect())
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn add_assign(&self, a: &mut Scalar, b: &Scalar) {
        match (self, a, b) {
            (_, Scalar::Rational(x), Scalar::Rational(y)) => *x += y,
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => *x = (*x + y) % p,
            (Field::Extension { p, .. }, Scalar::Poly(x), Scalar::Poly(y)) => {
                for (u, v) in x.iter_mut().zip(y.iter()) {
                    *u = (*u + v) % p;
                }
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// `acc += a * b`.
    pub fn mul_add_assign(&self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        match (self, &mut *acc, a, b) {
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(u), Scalar::Residue(v)) => {
                *x = (*x + u * v) % p;
            }
            _ => {
                let prod = self.mul(a, b);
                self.add_assign(acc, &prod);
            }
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (_, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Field::Prime(p), Scalar::Residue(x)) => Scalar::Residue((p - x) % p),
            (Field::Extension { p, .. }, Scalar::Poly(x)) => {
                Scalar::Poly(x.iter().map(|u| (p - u) % p).collect())
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (_, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(x * y % p)
            }
            (Field::Extension { p, minpoly }, Scalar::Poly(x), Scalar::Poly(y)) => {
                Scalar::Poly(poly_mul_mod(x, y, minpoly, *p).into())
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn pow(&self, a: &Scalar, mut exp: u64) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (_, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (Field::Prime(p), Scalar::Residue(x)) => Scalar::Residue(mod_inv(*x, *p).unwrap()),
            (Field::Extension { .. }, Scalar::Poly(_)) => {
                let q = self.order().unwrap();
                // a^(q-2); q - 2 fits in u64 for every field we accept in practice
                let e = u64::try_from(q - 2).map_err(|_| {
                    Error::UnsupportedField(format!("{self}: order too large for inversion"))
                })?;
                self.pow(a, e)
            }
            _ => panic!("scalar does not belong to {self}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Uniform element of a finite field, or an integer in [-10, 10] over Q.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Rationals => self.from_i64(rng.gen_range(-10..=10)),
            Field::Prime(p) => Scalar::Residue(rng.gen_range(0..*p)),
            Field::Extension { p, .. } => {
                Scalar::Poly((0..self.degree()).map(|_| rng.gen_range(0..*p)).collect())
            }
        }
    }

    /// Nonzero element drawn like [`Field::sample`].
    pub fn sample_nonzero<R: Rng>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.sample(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }

    /// Deterministic pseudo-random element for a seed.
    pub fn sample_scalar(&self, seed: u64) -> Scalar {
        self.sample(&mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// An element of multiplicative order exactly `n`, if one exists.
    pub fn primitive_root_of_unity(&self, n: u64) -> Option<Scalar> {
        let q = self.order()?;
        if n == 0 || (q - 1) % n as u128 != 0 {
            return None;
        }
        let one = self.one();
        let mut candidates: Vec<Scalar> = Vec::new();
        match self {
            Field::Prime(p) => candidates.extend((1..*p).map(Scalar::Residue)),
            Field::Extension { p, .. } => {
                let k = self.degree();
                let mut c = vec![0u64; k];
                loop {
                    // odometer over all coefficient vectors
                    let mut i = 0;
                    while i < k {
                        c[i] += 1;
                        if c[i] < *p {
                            break;
                        }
                        c[i] = 0;
                        i += 1;
                    }
                    if i == k {
                        break;
                    }
                    candidates.push(Scalar::Poly(c.clone().into()));
                }
            }
            Field::Rationals => unreachable!(),
        }
        candidates.into_iter().find(|x| {
            self.pow(x, n) == one && (1..n).filter(|d| n % d == 0).all(|d| self.pow(x, d) != one)
        })
    }

    /// Multiplicative order of a nonzero element (brute force, finite fields only).
    pub fn multiplicative_order(&self, a: &Scalar) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let one = self.one();
        let mut x = a.clone();
        for k in 1..=self.order().unwrap_or(1 << 20).min(1 << 20) as u64 {
            if x == one {
                return Some(k);
            }
            x = self.mul(&x, a);
        }
        None
    }

    /// A square root, if one exists in the field.
    pub fn sqrt(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        match (self, a) {
            (Field::Rationals, Scalar::Rational(r)) => {
                if r.is_negative() {
                    return None;
                }
                let n = r.numer().sqrt();
                let d = r.denom().sqrt();
                (&n * &n == *r.numer() && &d * &d == *r.denom())
                    .then(|| Scalar::Rational(BigRational::new(n, d)))
            }
            (Field::Prime(p), Scalar::Residue(x)) => {
                if *p == 2 {
                    return Some(Scalar::Residue(*x));
                }
                if mod_pow(*x, (p - 1) / 2, *p) != 1 {
                    return None;
                }
                (1..*p).find(|y| y * y % p == *x).map(Scalar::Residue)
            }
            _ => {
                let q = self.order()?;
                if q > 1 << 16 {
                    return None;
                }
                let k = self.degree();
                let p = self.characteristic();
                let mut c = vec![0u64; k];
                loop {
                    let y = Scalar::Poly(c.clone().into());
                    if self.mul(&y, &y) == *a {
                        return Some(y);
                    }
                    let mut i = 0;
                    while i < k {
                        c[i] += 1;
                        if c[i] < p {
                            break;
                        }
                        c[i] = 0;
                        i += 1;
                    }
                    if i == k {
                        return None;
                    }
                }
            }
        }
    }

    pub fn format_scalar(&self, s: &Scalar) -> String {
        match s {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue(v) => v.to_string(),
            Scalar::Poly(c) => c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
        }
    }

    /// Parses "a", "a/b" over Q, a (possibly negative) integer over GF(p), and
    /// "c0,c1,..." over GF(p^k). A bare integer is accepted over GF(p^k) as a
    /// prime-field element.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::Parse(format!("cannot parse scalar {t:?} over {self}"));
        match self {
            Field::Rationals => {
                let (n, d) = match t.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (t, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime(p) => {
                let v: i128 = t.parse().map_err(|_| bad())?;
                Ok(Scalar::Residue(v.rem_euclid(*p as i128) as u64))
            }
            Field::Extension { p, .. } => {
                let parts: Vec<&str> = t.split(',').collect();
                let k = self.degree();
                if parts.len() == 1 {
                    let v: i128 = parts[0].trim().parse().map_err(|_| bad())?;
                    let mut c = vec![0u64; k];
                    c[0] = v.rem_euclid(*p as i128) as u64;
                    return Ok(Scalar::Poly(c.into()));
                }
                if parts.len() != k {
                    return Err(bad());
                }
                let c = parts
                    .iter()
                    .map(|s| s.trim().parse::<i128>().map(|v| v.rem_euclid(*p as i128) as u64))
                    .collect::<std::result::Result<Vec<u64>, _>>()
                    .map_err(|_| bad())?;
                Ok(Scalar::Poly(c.into()))
            }
        }
    }

    /// Parses `Q`, `GFp`, or `GFp^k:c0,c1,...,ck` (monic minimal polynomial).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rationals);
        }
        let rest = t
            .strip_prefix("GF")
            .ok_or_else(|| Error::Parse(format!("unknown field {t:?}")))?;
        match rest.split_once('^') {
            None => Field::prime(rest.parse().map_err(|_| Error::Parse(format!("bad prime in {t:?}")))?),
            Some((p, tail)) => {
                let (k, poly) = tail
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("missing minimal polynomial in {t:?}")))?;
                let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad prime in {t:?}")))?;
                let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad degree in {t:?}")))?;
                let coeffs = poly
                    .split(',')
                    .map(|c| c.trim().parse::<i64>().map(|v| v.rem_euclid(p as i64) as u64))
                    .collect::<std::result::Result<Vec<u64>, _>>()
                    .map_err(|_| Error::Parse(format!("bad minimal polynomial in {t:?}")))?;
                if coeffs.len() != k + 1 {
                    return Err(Error::Parse(format!("minimal polynomial in {t:?} must have {} coefficients", k + 1)));
                }
                Field::extension(p, &coeffs)
            }
        }
    }

    /// Small integer value of a scalar when it has one (used in reports).
    pub fn to_i64(&self, s: &Scalar) -> Option<i64> {
        match s {
            Scalar::Rational(r) if r.denom().is_one() => r.numer().to_i64(),
            Scalar::Residue(v) => Some(*v as i64),
            _ => None,
        }
    }

    fn check(&self, v: &FieldValue) -> Result<()> {
        if &v.field != self {
            return Err(Error::FieldMismatch(self.to_string(), v.field.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF{p}"),
            Field::Extension { p, minpoly } => {
                let c: Vec<String> = minpoly.iter().map(|v| v.to_string()).collect();
                write!(f, "GF{p}^{}:{}", minpoly.len() - 1, c.join(","))
            }
        }
    }
}

fn poly_mul_mod(x: &[u64], y: &[u64], minpoly: &[u64], p: u64) -> Vec<u64> {
    let k = x.len();
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + a * b) % p;
        }
    }
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for (i, &m) in minpoly[..k].iter().enumerate() {
            let idx = d - k + i;
            prod[idx] = (prod[idx] + (p - m % p) * c) % p;
        }
    }
    prod.truncate(k);
    prod
}

impl FieldValue {
    pub fn new(field: &Field, value: Scalar) -> Result<Self> {
        let value = field.normalize(&value)?;
        Ok(FieldValue { field: field.clone(), value })
    }

    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        Ok(FieldValue { field: field.clone(), value: field.parse_scalar(text)? })
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_scalar(&self.value))
    }
}

pub fn field_add(a: &FieldValue, b: &FieldValue) -> Result<FieldValue> {
    a.field.check(b)?;
    Ok(FieldValue { field: a.field.clone(), value: a.field.add(&a.value, &b.value) })
}

pub fn field_mul(a: &FieldValue, b: &FieldValue) -> Result<FieldValue> {
    a.field.check(b)?;
    Ok(FieldValue { field: a.field.clone(), value: a.field.mul(&a.value, &b.value) })
}

pub fn field_neg(a: &FieldValue) -> FieldValue {
    FieldValue { field: a.field.clone(), value: a.field.neg(&a.value) }
}

pub fn field_inv(a: &FieldValue) -> Result<FieldValue> {
    Ok(FieldValue { field: a.field.clone(), value: a.field.inv(&a.value)? })
}

pub fn sample_scalar(field: &Field, seed: u64) -> FieldValue {
    FieldValue { field: field.clone(), value: field.sample_scalar(seed) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn prime_field_addition_wraps() {
        let f = gf(7);
        let r = field_add(&FieldValue::parse(&f, "3").unwrap(), &FieldValue::parse(&f, "5").unwrap()).unwrap();
        assert_eq!(r.value, Scalar::Residue(1));
    }

    #[test]
    fn rational_addition_is_exact() {
        let q = Field::rationals();
        let r = field_add(&FieldValue::parse(&q, "1/2").unwrap(), &FieldValue::parse(&q, "1/3").unwrap()).unwrap();
        assert_eq!(r.to_string(), "5/6");
    }

    #[test]
    fn zero_absorbs() {
        let f = gf(7);
        for x in 0..7 {
            assert!(f.is_zero(&f.mul(&f.zero(), &Scalar::Residue(x))));
        }
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = FieldValue::parse(&gf(7), "3").unwrap();
        let b = FieldValue::parse(&gf(11), "3").unwrap();
        assert!(matches!(field_add(&a, &b), Err(Error::FieldMismatch(..))));
        assert!(matches!(field_mul(&a, &b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn inverses() {
        // extended Euclid: 3 * 5 = 15 = 2*7 + 1
        let f = gf(7);
        assert_eq!(f.inv(&Scalar::Residue(3)).unwrap(), Scalar::Residue(5));
        let q = Field::rationals();
        let r = field_inv(&FieldValue::parse(&q, "-2/3").unwrap()).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gf4_inverse_of_generator_by_exhaustion() {
        let f = Field::extension(2, &[1, 1, 1]).unwrap();
        let t = f.generator().unwrap();
        let one = f.one();
        let mut found = Vec::new();
        for a in 0..2u64 {
            for b in 0..2u64 {
                let y = Scalar::Poly(vec![a, b].into());
                if f.mul(&t, &y) == one {
                    found.push(y);
                }
            }
        }
        assert_eq!(found, vec![Scalar::Poly(vec![1, 1].into())]);
        assert_eq!(f.inv(&t).unwrap(), found[0]);
    }

    #[test]
    fn reducible_minpoly_rejected() {
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert!(Field::extension(2, &[1, 0, 1]).is_err());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_covers_residues() {
        let f = gf(7);
        assert_eq!(f.sample_scalar(0), f.sample_scalar(0));
        let mut seen = std::collections::BTreeSet::new();
        for seed in 0..49 {
            if let Scalar::Residue(v) = f.sample_scalar(seed) {
                seen.insert(v);
            }
        }
        assert_eq!(seen.len(), 7);
        let q = Field::rationals();
        for seed in 0..50 {
            let v = q.to_i64(&q.sample_scalar(seed)).unwrap();
            assert!((-10..=10).contains(&v));
        }
    }

    #[test]
    fn parse_and_format_round_trip() {
        let f = Field::parse("GF2^2:1,1,1").unwrap();
        assert_eq!(f.to_string(), "GF2^2:1,1,1");
        let s = f.parse_scalar("1,1").unwrap();
        assert_eq!(f.format_scalar(&s), "1,1");
        assert_eq!(Field::parse("GF7").unwrap(), gf(7));
        assert_eq!(gf(7).parse_scalar("-1").unwrap(), Scalar::Residue(6));
    }

    #[test]
    fn roots_of_unity() {
        let f = gf(13);
        let q = f.primitive_root_of_unity(4).unwrap();
        assert_eq!(f.multiplicative_order(&q), Some(4));
        assert!(gf(7).primitive_root_of_unity(4).is_none());
        assert_eq!(gf(11).sqrt(&Scalar::Residue(4)).map(|s| gf(11).mul(&s, &s)), Some(Scalar::Residue(4)));
        assert!(gf(7).sqrt(&Scalar::Residue(3)).is_none());
    }
}
