//! Univariate polynomials over an exact field, with factorization over
//! finite fields (square-free, distinct-degree and Cantor–Zassenhaus
//! equal-degree splitting) and rational-root splitting over Q.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Scalar>,
}

/// Monic irreducible factors with multiplicities and the leading unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(Polynomial, usize)>,
}

/// Result of splitting a rational polynomial by the rational root theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFactorization {
    pub unit: Scalar,
    /// Monic linear factors with multiplicities.
    pub linear: Vec<(Polynomial, usize)>,
    /// Monic cofactor without rational roots (possibly reducible).
    pub remainder: Polynomial,
}

impl Polynomial {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn from_i64(field: &Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(field, vec![])
    }

    pub fn one(field: &Field) -> Self {
        Self::new(field, vec![field.one()])
    }

    /// The monomial `x`.
    pub fn x(field: &Field) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `x - c`.
    pub fn linear(field: &Field, root: &Scalar) -> Self {
        Self::new(field, vec![field.neg(root), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.leading()).unwrap();
        self.scale(&inv)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::new(f, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        self.add(&Self::new(f, other.coeffs.iter().map(|a| f.neg(a)).collect()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                f.mul_add_assign(&mut c[i + j], a, b);
            }
        }
        Self::new(f, c)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder; panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = &self.field;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Self::zero(f), self.clone());
        }
        let dd = divisor.deg();
        let lead_inv = f.inv(&divisor.leading()).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&c, d);
                rem[k + j] = f.sub(&rem[k + j], &t);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| f.mul(a, &f.from_i64(i as i64)))
            .collect();
        Self::new(f, c)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// `self^e mod modulus` for a big exponent.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(&self.field).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    fn require_finite(&self) -> Result<(BigUint, u64)> {
        match self.field.order() {
            Some(q) => Ok((BigUint::from(q), self.field.characteristic())),
            None => Err(Error::UnsupportedField(self.field.to_string())),
        }
    }

    /// Irreducibility test over a finite field.
    pub fn is_irreducible(&self) -> Result<bool> {
        self.require_finite()?;
        if self.deg() == 0 {
            return Ok(false);
        }
        let fac = self.factor_over_prime_field()?;
        Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
    }

    /// Complete factorization over GF(p) or GF(p^k).
    pub fn factor_over_prime_field(&self) -> Result<Factorization> {
        self.require_finite()?;
        if self.is_zero() {
            return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
        }
        let unit = self.leading();
        let mut factors = Vec::new();
        for (sq, mult) in self.monic().square_free()? {
            for (deg, part) in sq.distinct_degree()? {
                for irr in part.equal_degree(deg)? {
                    factors.push((irr, mult));
                }
            }
        }
        factors.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)).then(a.1.cmp(&b.1)));
        Ok(Factorization { unit, factors })
    }

    /// Square-free decomposition of a monic polynomial: pairs (square-free part, multiplicity).
    fn square_free(&self) -> Result<Vec<(Polynomial, usize)>> {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let mut out = Vec::new();
        if self.deg() == 0 {
            return Ok(out);
        }
        let d = self.derivative();
        let mut c = self.gcd(&d);
        let mut w = self.div_exact(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if !fac.is_one() {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w);
            i += 1;
        }
        if !c.is_one() {
            // c is a polynomial in x^p; take the p-th root coefficientwise
            let root_exp = f.order().unwrap() / p as u128;
            let coeffs = c
                .coeffs
                .iter()
                .step_by(p)
                .map(|a| f.pow(a, root_exp as u64))
                .collect();
            let root = Polynomial::new(f, coeffs);
            for (g, m) in root.square_free()? {
                out.push((g, m * p));
            }
        }
        Ok(out)
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    fn distinct_degree(&self) -> Result<Vec<(usize, Polynomial)>> {
        let (q, _) = self.require_finite()?;
        let f = &self.field;
        let mut out = Vec::new();
        let mut h = self.clone();
        let x = Polynomial::x(f);
        let mut xq = x.clone();
        let mut d = 1;
        while h.deg() >= 2 * d {
            xq = xq.pow_mod(&q, &h);
            let g = h.gcd(&xq.sub(&x));
            if !g.is_one() {
                h = h.div_exact(&g);
                xq = xq.rem(&h);
                out.push((d, g));
            }
            d += 1;
        }
        if h.deg() > 0 {
            out.push((h.deg(), h));
        }
        Ok(out)
    }

    /// Cantor–Zassenhaus splitting of a product of distinct degree-`d` irreducibles.
    fn equal_degree(&self, d: usize) -> Result<Vec<Polynomial>> {
        let (q, p) = self.require_finite()?;
        let f = &self.field;
        if self.deg() == d {
            return Ok(vec![self.monic()]);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ self.deg() as u64);
        let n = self.deg();
        loop {
            let a = Polynomial::new(f, (0..n).map(|_| f.sample(&mut rng)).collect());
            if a.deg() == 0 {
                continue;
            }
            let b = if p == 2 {
                // trace map a + a^2 + ... + a^(2^(k d - 1)) with q = 2^k
                let k = f.degree();
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..k * d {
                    t = t.mul(&t).rem(self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
                a.pow_mod(&e, self).sub(&Polynomial::one(f))
            };
            let g = self.gcd(&b);
            if !g.is_one() && g.deg() < n {
                let mut out = g.equal_degree(d)?;
                out.extend(self.div_exact(&g).equal_degree(d)?);
                return Ok(out);
            }
        }
    }

    /// Splits off every linear factor of a rational polynomial by the rational
    /// root theorem and returns the remaining cofactor unfactored.
    pub fn rational_partial_factor(&self) -> Result<PartialFactorization> {
        if self.field != Field::Rationals {
            return Err(Error::UnsupportedField(self.field.to_string()));
        }
        if self.is_zero() {
            return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
        }
        let f = &self.field;
        let unit = self.leading();
        let mut rest = self.monic();
        let mut linear: Vec<(Polynomial, usize)> = Vec::new();
        let push = |linear: &mut Vec<(Polynomial, usize)>, root: &Scalar| {
            let lf = Polynomial::linear(f, root);
            match linear.iter_mut().find(|(p, _)| *p == lf) {
                Some(e) => e.1 += 1,
                None => linear.push((lf, 1)),
            }
        };
        let zero = f.zero();
        while rest.deg() > 0 && f.is_zero(&rest.coeffs[0]) {
            push(&mut linear, &zero);
            rest = rest.div_exact(&Polynomial::x(f));
        }
        'outer: while rest.deg() > 0 {
            let ints = integer_coefficients(&rest);
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            let (Some(num_divs), Some(den_divs)) = (small_divisors(&a0), small_divisors(&an)) else {
                break;
            };
            for n in &num_divs {
                for d in &den_divs {
                    for sign in [1i64, -1] {
                        let r = Scalar::Rational(BigRational::new(
                            BigInt::from(*n) * sign,
                            BigInt::from(*d),
                        ));
                        if f.is_zero(&rest.eval(&r)) {
                            push(&mut linear, &r);
                            rest = rest.div_exact(&Polynomial::linear(f, &r));
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        linear.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)));
        Ok(PartialFactorization { unit, linear, remainder: rest })
    }
}

fn integer_coefficients(p: &Polynomial) -> Vec<BigInt> {
    let rats: Vec<BigRational> = p
        .coeffs
        .iter()
        .map(|c| match c {
            Scalar::Rational(r) => r.clone(),
            _ => unreachable!(),
        })
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    rats.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

/// Positive divisors of a small nonzero integer; `None` when too large to enumerate.
fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64().filter(|&v| v > 0 && v <= 1 << 40)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

fn poly_key(p: &Polynomial) -> (usize, String) {
    (p.coeffs.len(), format!("{p}"))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(fmt, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| {
                let cs = self.field.format_scalar(c);
                let cs = if cs.contains(',') { format!("({cs})") } else { cs };
                match i {
                    0 => cs,
                    1 => format!("{cs}*x"),
                    _ => format!("{cs}*x^{i}"),
                }
            })
            .collect();
        write!(fmt, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf7() -> Field {
        Field::prime(7).unwrap()
    }

    fn product(fac: &Factorization, field: &Field) -> Polynomial {
        let mut acc = Polynomial::new(field, vec![fac.unit.clone()]);
        for (p, m) in &fac.factors {
            acc = acc.mul(&p.pow(*m));
        }
        acc
    }

    #[test]
    fn x2_minus_1_over_gf7() {
        let f = gf7();
        let p = Polynomial::from_i64(&f, &[-1, 0, 1]);
        let fac = p.factor_over_prime_field().unwrap();
        let expect = vec![
            (Polynomial::from_i64(&f, &[1, 1]), 1),
            (Polynomial::from_i64(&f, &[-1, 1]), 1),
        ];
        let mut got = fac.factors.clone();
        got.sort_by_key(|(p, _)| format!("{p}"));
        let mut exp = expect.clone();
        exp.sort_by_key(|(p, _)| format!("{p}"));
        assert_eq!(got, exp);
    }

    #[test]
    fn x2_plus_1_irreducible_over_gf7() {
        let f = gf7();
        let p = Polynomial::from_i64(&f, &[1, 0, 1]);
        // oracle: no root among the 7 residues
        assert!((0..7).all(|r| !f.is_zero(&p.eval(&f.from_i64(r)))));
        assert!(p.is_irreducible().unwrap());
    }

    #[test]
    fn x3_minus_1_over_gf7_splits_at_cube_roots() {
        let f = gf7();
        let p = Polynomial::from_i64(&f, &[-1, 0, 0, 1]);
        let fac = p.factor_over_prime_field().unwrap();
        let mut roots: Vec<i64> = fac
            .factors
            .iter()
            .map(|(q, m)| {
                assert_eq!((q.degree(), *m), (Some(1), 1));
                f.to_i64(&f.neg(&q.coeffs()[0])).unwrap()
            })
            .collect();
        roots.sort();
        assert_eq!(roots, vec![1, 2, 4]);
    }

    #[test]
    fn repeated_and_inseparable_factors() {
        let f = Field::prime(3).unwrap();
        // (x+1)^3 (x^2+1)^2 over GF(3); (x+1)^3 = x^3 + 1 has zero derivative
        let a = Polynomial::from_i64(&f, &[1, 1]).pow(3);
        let b = Polynomial::from_i64(&f, &[1, 0, 1]).pow(2);
        let p = a.mul(&b).scale(&f.from_i64(2));
        let fac = p.factor_over_prime_field().unwrap();
        assert_eq!(product(&fac, &f), p);
        assert_eq!(fac.factors.len(), 2);
    }

    #[test]
    fn factor_over_gf4_and_gf2() {
        let f2 = Field::prime(2).unwrap();
        let p = Polynomial::from_i64(&f2, &[0, 1, 0, 0, 1]); // x^4 + x = x (x+1)(x^2+x+1)
        let fac = p.factor_over_prime_field().unwrap();
        assert_eq!(fac.factors.len(), 3);
        assert_eq!(product(&fac, &f2), p);
        let f4 = Field::extension(2, &[1, 1, 1]).unwrap();
        let q = Polynomial::from_i64(&f4, &[1, 1, 1]); // splits over GF(4)
        let fac = q.factor_over_prime_field().unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(product(&fac, &f4), q);
    }

    #[test]
    fn rational_partial_factorization() {
        let q = Field::rationals();
        let r = Polynomial::from_i64(&q, &[-1, 0, 1]).rational_partial_factor().unwrap();
        assert_eq!(r.linear.len(), 2);
        assert!(r.remainder.is_one());
        let r = Polynomial::from_i64(&q, &[1, 0, 1]).rational_partial_factor().unwrap();
        assert!(r.linear.is_empty());
        assert_eq!(r.remainder, Polynomial::from_i64(&q, &[1, 0, 1]));
        let r = Polynomial::from_i64(&q, &[0, -1, 0, 1]).rational_partial_factor().unwrap();
        assert_eq!(r.linear.len(), 3);
        let r = Polynomial::from_i64(&q, &[-1, 0, 4]).rational_partial_factor().unwrap();
        assert_eq!(r.linear.len(), 2);
        assert!(Polynomial::from_i64(&gf7(), &[1, 1]).rational_partial_factor().is_err());
        assert!(Polynomial::from_i64(&q, &[1, 1]).factor_over_prime_field().is_err());
    }
}
