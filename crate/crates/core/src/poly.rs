//! Dense univariate polynomials over a [`Ring`], quotient arithmetic modulo
//! `z^n - 1`, and division by polynomials with a unit leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{RTheta, Ring, ThetaParam, Z2, Z4};
use crate::syntax::{self, SyntaxError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient {0} of the divisor is not a unit")]
    NonUnitLeading(String),
    #[error("polynomials over different rings: {0} and {1}")]
    RingMismatch(String, String),
    #[error("degree {degree} does not fit in length {n}")]
    LengthMismatch { degree: usize, n: usize },
    #[error("code length must be positive")]
    ZeroLength,
    #[error("coefficient {value} at z^{power} is not an element of {ring}")]
    BadCoefficient { value: String, power: usize, ring: &'static str },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

/// A polynomial with coefficients in `ring`, lowest degree first, with no
/// trailing zero coefficients. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

pub type BinPoly = Poly<Z2>;
pub type Z4Poly = Poly<Z4>;
pub type RPoly = Poly<ThetaParam>;

impl<R: Ring> Poly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|&c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Poly { ring, coeffs }
    }

    pub fn zero(ring: R) -> Self {
        Poly { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c * z^deg`.
    pub fn monomial(ring: R, c: R::Elem, deg: usize) -> Self {
        let mut coeffs = vec![ring.zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(ring, coeffs)
    }

    pub fn ring(&self) -> R {
        self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).copied().unwrap_or(self.ring.zero())
    }

    pub fn leading(&self) -> Option<R::Elem> {
        self.coeffs.last().copied()
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(format!("{:?}", self.ring), format!("{:?}", other.ring)))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let r = self.ring;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(r, (0..len).map(|i| r.add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        self.checked_add(&other.neg_poly())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let r = self.ring;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(r));
        }
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(out[i + j], r.mul(a, b));
            }
        }
        Ok(Self::new(r, out))
    }

    pub fn neg_poly(&self) -> Self {
        let r = self.ring;
        Self::new(r, self.coeffs.iter().map(|&c| r.neg(c)).collect())
    }

    pub fn scale(&self, c: R::Elem) -> Self {
        let r = self.ring;
        Self::new(r, self.coeffs.iter().map(|&x| r.mul(c, x)).collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ring.zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(self.ring, coeffs)
    }

    /// `z^deg(f) f(1/z)`; the zero polynomial maps to itself.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(self.ring, c)
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal() == *self
    }

    /// Applies `f` to every coefficient, landing in `ring`.
    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(R::Elem) -> S::Elem) -> Poly<S> {
        Poly::new(ring, self.coeffs.iter().map(|&c| f(c)).collect())
    }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit; the remainder has degree below that of the divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        self.check_ring(d)?;
        let r = self.ring;
        let (Some(dd), Some(lc)) = (d.degree(), d.leading()) else {
            return Err(PolyError::DivisionByZero);
        };
        let inv = r.inv(lc).ok_or_else(|| PolyError::NonUnitLeading(lc.to_string()))?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![r.zero(); rem.len().saturating_sub(dd)];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if r.is_zero(c) {
                continue;
            }
            let q = r.mul(c, inv);
            quo[i - dd] = q;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = r.sub(rem[i - dd + j], r.mul(q, dc));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(r, quo), Self::new(r, rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, PolyError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Text form such as `3*z^3 + z + 2`; `0` for the zero polynomial.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut cs = c.to_string();
            if cs.contains('+') {
                cs = format!("({cs})");
            }
            match (i, cs.as_str()) {
                (0, _) => write!(f, "{cs}")?,
                (1, "1") => write!(f, "z")?,
                (1, _) => write!(f, "{cs}*z")?,
                (_, "1") => write!(f, "z^{i}")?,
                _ => write!(f, "{cs}*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

macro_rules! forward_ops {
    ($($tr:ident $method:ident $checked:ident;)*) => {$(
        impl<R: Ring> $tr<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;

            /// Panics if the operands live over different rings; see the
            /// `checked_*` methods for a fallible version.
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                self.$checked(rhs).expect("polynomial operands over different rings")
            }
        }

        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;

            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_ops! {
    Add add checked_add;
    Sub sub checked_sub;
    Mul mul checked_mul;
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        self.neg_poly()
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        self.neg_poly()
    }
}

impl BinPoly {
    /// Bit `i` of `mask` is the coefficient of `z^i`.
    pub fn from_mask(mask: u64) -> Self {
        Poly::new(Z2, (0..64).map(|i| ((mask >> i) & 1) as u8).collect())
    }

    /// Inverse of [`BinPoly::from_mask`]; `None` if the degree exceeds 63.
    pub fn to_mask(&self) -> Option<u64> {
        if self.coeffs.len() > 64 {
            return None;
        }
        Some(self.coeffs.iter().enumerate().fold(0, |m, (i, &c)| m | ((c as u64) << i)))
    }

    /// `z^n + 1`, which is `z^n - 1` over Z2.
    pub fn xn_minus_one(n: usize) -> Self {
        &Poly::monomial(Z2, 1, n) + &Poly::one(Z2)
    }

    pub fn divides(&self, other: &BinPoly) -> Result<bool, PolyError> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn gcd(&self, other: &BinPoly) -> BinPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor over a field");
            a = b;
            b = r;
        }
        a
    }

    /// The Z4 polynomial with the same 0/1 coefficients.
    pub fn lift(&self) -> Z4Poly {
        self.map(Z4, |c| c)
    }

    /// Parses text syntax, reading every coefficient mod 2.
    pub fn parse(s: &str) -> Result<Self, PolyError> {
        let c = syntax::parse_expression(s)?;
        let mut out = Vec::with_capacity(c.len());
        for (i, x) in c.into_iter().enumerate() {
            if x.b != 0 {
                return Err(PolyError::BadCoefficient { value: x.to_string(), power: i, ring: "Z2" });
            }
            out.push(x.a & 1);
        }
        Ok(Poly::new(Z2, out))
    }
}

impl Z4Poly {
    /// Coefficients mod 2.
    pub fn residue(&self) -> BinPoly {
        self.map(Z2, |c| c & 1)
    }

    /// The binary polynomial `(f - residue(f)) / 2` read off the high bits.
    pub fn high_bits(&self) -> BinPoly {
        self.map(Z2, |c| (c >> 1) & 1)
    }

    /// `f` viewed in `R_theta` with zero `v`-part.
    pub fn embed(&self, theta: ThetaParam) -> RPoly {
        self.map(theta, RTheta::scalar)
    }

    pub fn parse(s: &str) -> Result<Self, PolyError> {
        let c = syntax::parse_expression(s)?;
        let mut out = Vec::with_capacity(c.len());
        for (i, x) in c.into_iter().enumerate() {
            if x.b != 0 {
                return Err(PolyError::BadCoefficient { value: x.to_string(), power: i, ring: "Z4" });
            }
            out.push(x.a);
        }
        Ok(Poly::new(Z4, out))
    }
}

impl RPoly {
    pub fn parse(theta: ThetaParam, s: &str) -> Result<Self, PolyError> {
        Ok(Poly::new(theta, syntax::parse_expression(s)?))
    }

    /// Applies `phi_theta` coefficientwise.
    pub fn phi(&self) -> Z4Poly {
        let t = self.ring;
        self.map(Z4, |c| t.phi(c))
    }
}

impl Serialize for BinPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl Serialize for Z4Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl Serialize for RPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PolyRepr {
    Coeffs(Vec<u8>),
    Text(String),
}

impl<'de> Deserialize<'de> for BinPoly {
    /// Accepts a coefficient array (lowest degree first, entries 0 or 1) or
    /// a string in text syntax.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match PolyRepr::deserialize(d)? {
            PolyRepr::Coeffs(c) => {
                if let Some((i, v)) = c.iter().enumerate().find(|(_, &v)| v > 1) {
                    return Err(D::Error::custom(format!("binary coefficient {v} at z^{i}")));
                }
                Ok(Poly::new(Z2, c))
            }
            PolyRepr::Text(s) => BinPoly::parse(&s).map_err(D::Error::custom),
        }
    }
}

impl<'de> Deserialize<'de> for Z4Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match PolyRepr::deserialize(d)? {
            PolyRepr::Coeffs(c) => {
                if let Some((i, v)) = c.iter().enumerate().find(|(_, &v)| v > 3) {
                    return Err(D::Error::custom(format!("Z4 coefficient {v} at z^{i}")));
                }
                Ok(Poly::new(Z4, c))
            }
            PolyRepr::Text(s) => Z4Poly::parse(&s).map_err(D::Error::custom),
        }
    }
}

/// Arithmetic in `ring[z] / (z^n - 1)`. Results are always reduced to
/// degree below `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientContext<R: Ring> {
    n: usize,
    ring: R,
}

impl<R: Ring> QuotientContext<R> {
    pub fn new(n: usize, ring: R) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::ZeroLength);
        }
        Ok(QuotientContext { n, ring })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> R {
        self.ring
    }

    /// Folds exponents mod `n`.
    pub fn reduce(&self, p: &Poly<R>) -> Poly<R> {
        let r = self.ring;
        let mut out = vec![r.zero(); self.n.min(p.coeffs.len())];
        for (i, &c) in p.coeffs.iter().enumerate() {
            let j = i % self.n;
            out[j] = r.add(out[j], c);
        }
        Poly::new(r, out)
    }

    pub fn add(&self, p: &Poly<R>, q: &Poly<R>) -> Result<Poly<R>, PolyError> {
        Ok(self.reduce(&p.checked_add(q)?))
    }

    pub fn sub(&self, p: &Poly<R>, q: &Poly<R>) -> Result<Poly<R>, PolyError> {
        Ok(self.reduce(&p.checked_sub(q)?))
    }

    pub fn mul(&self, p: &Poly<R>, q: &Poly<R>) -> Result<Poly<R>, PolyError> {
        Ok(self.reduce(&p.checked_mul(q)?))
    }

    /// `z^e p` for a possibly negative exponent `e`, read mod `n`.
    pub fn shift(&self, p: &Poly<R>, e: i64) -> Poly<R> {
        let k = e.rem_euclid(self.n as i64) as usize;
        self.reduce(&p.shift(k))
    }

    /// The word reversal `(c_0, ..., c_{n-1}) -> (c_{n-1}, ..., c_0)`.
    pub fn reverse(&self, p: &Poly<R>) -> Result<Poly<R>, PolyError> {
        if let Some(d) = p.degree().filter(|&d| d >= self.n) {
            return Err(PolyError::LengthMismatch { degree: d, n: self.n });
        }
        Ok(Poly::new(self.ring, (0..self.n).map(|i| p.coeff(self.n - 1 - i)).collect()))
    }

    /// Every word of length `n` with all coefficients equal to `c`.
    pub fn constant_word(&self, c: R::Elem) -> Poly<R> {
        Poly::new(self.ring, vec![c; self.n])
    }
}

/// `a` divides `b` in `Z2[z]/(z^n - 1)` with `0` read as `z^n - 1`.
///
/// For divisors of `z^n - 1` this is divisibility of the representatives.
pub fn divides_mod_xn(a: &BinPoly, b: &BinPoly, n: usize) -> bool {
    let xn = BinPoly::xn_minus_one(n);
    let a = if a.is_zero() { xn.clone() } else { a.clone() };
    let b = if b.is_zero() { xn } else { b.clone() };
    a.divides(&b).expect("nonzero divisor")
}

/// `deg(f)` with `deg(0)` read as `n`, the convention for generators of
/// cyclic codes where `0` stands for `z^n - 1`.
pub fn generator_degree<R: Ring>(f: &Poly<R>, n: usize) -> usize {
    f.degree().unwrap_or(n)
}

/// All monic divisors of `z^n - 1` over Z2 of degree below `n`, by
/// exhaustive search, in increasing order of their bit masks.
pub fn binary_divisors_of_xn_minus_one(n: usize) -> Vec<BinPoly> {
    assert!((1..=20).contains(&n), "divisor search is limited to n <= 20");
    let xn = BinPoly::xn_minus_one(n);
    (1u64..(1 << n))
        .map(BinPoly::from_mask)
        .filter(|d| d.divides(&xn).unwrap())
        .collect()
}
