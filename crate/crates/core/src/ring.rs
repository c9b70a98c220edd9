//! Exact arithmetic in Z2, Z4 and the sixteen-element rings `Z4 + vZ4` with
//! `v^2 = theta`.
//!
//! Only the eight values of `theta` for which `Z4 + vZ4` is a non-chain ring
//! are admitted. Each one carries a precomputed 16x16 multiplication table
//! (built at compile time) and the distinguished element `k_theta` such that
//! `R_theta / <k_theta>` is isomorphic to Z4.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{self, SyntaxError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("non-chain θ required: v^2 = {0} makes Z4+vZ4 a chain ring")]
    ChainRingTheta(RTheta),
    #[error("invalid complement pair (u, t) = ({u}, {t}): {reason}")]
    InvalidComplementPair {
        u: RTheta,
        t: RTheta,
        reason: &'static str,
    },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("expected an element of R_theta, got polynomial {0:?}")]
    NotAnElement(String),
}

/// A commutative ring with identity whose elements are small `Copy` values.
///
/// Ring values are passed explicitly because the multiplication of
/// `R_theta` depends on `theta`.
pub trait Ring: Copy + Eq + Hash + fmt::Debug {
    type Elem: Copy + Eq + Hash + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn neg(&self, x: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn inv(&self, x: Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem {
        self.add(x, self.neg(y))
    }

    fn is_zero(&self, x: Self::Elem) -> bool {
        x == self.zero()
    }
}

/// The field with two elements; elements are `0` and `1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2;

/// Integers modulo 4; elements are `0..4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4;

impl Ring for Z2 {
    type Elem = u8;

    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn add(&self, x: u8, y: u8) -> u8 {
        (x ^ y) & 1
    }
    fn neg(&self, x: u8) -> u8 {
        x & 1
    }
    fn mul(&self, x: u8, y: u8) -> u8 {
        x & y & 1
    }
    fn inv(&self, x: u8) -> Option<u8> {
        (x & 1 == 1).then_some(1)
    }
}

impl Ring for Z4 {
    type Elem = u8;

    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn add(&self, x: u8, y: u8) -> u8 {
        (x + y) & 3
    }
    fn neg(&self, x: u8) -> u8 {
        (4 - (x & 3)) & 3
    }
    fn mul(&self, x: u8, y: u8) -> u8 {
        (x * y) & 3
    }
    fn inv(&self, x: u8) -> Option<u8> {
        // 1 and 3 are their own inverses.
        (x & 1 == 1).then_some(x & 3)
    }
}

/// The element `a + b*v` of `Z4 + vZ4`, with `a, b` in `0..4`.
///
/// Ordering is lexicographic on `(a, b)`. The JSON form is `[a, b]`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u8; 2]", try_from = "[u8; 2]")]
pub struct RTheta {
    pub a: u8,
    pub b: u8,
}

impl RTheta {
    pub const ZERO: RTheta = RTheta { a: 0, b: 0 };
    pub const ONE: RTheta = RTheta { a: 1, b: 0 };
    pub const NU: RTheta = RTheta { a: 0, b: 1 };

    /// Builds `a + b*v`, reducing both parts mod 4.
    pub const fn new(a: u8, b: u8) -> Self {
        RTheta { a: a & 3, b: b & 3 }
    }

    /// The constant `c` of Z4 viewed in `R_theta`.
    pub const fn scalar(c: u8) -> Self {
        RTheta::new(c, 0)
    }

    /// All sixteen elements in lexicographic order.
    pub fn all() -> impl Iterator<Item = RTheta> {
        (0..16u8).map(RTheta::from_index)
    }

    pub const fn index(self) -> usize {
        (self.a as usize) * 4 + self.b as usize
    }

    pub const fn from_index(i: u8) -> Self {
        RTheta::new(i >> 2, i & 3)
    }

    pub const fn add(self, o: RTheta) -> RTheta {
        RTheta::new(self.a + o.a, self.b + o.b)
    }

    pub const fn neg(self) -> RTheta {
        RTheta::new(4 - self.a, 4 - self.b)
    }

    pub const fn sub(self, o: RTheta) -> RTheta {
        self.add(o.neg())
    }

    pub const fn scale(self, c: u8) -> RTheta {
        RTheta::new(self.a * (c & 3), self.b * (c & 3))
    }
}

impl From<RTheta> for [u8; 2] {
    fn from(x: RTheta) -> Self {
        [x.a, x.b]
    }
}

impl TryFrom<[u8; 2]> for RTheta {
    type Error = String;

    fn try_from([a, b]: [u8; 2]) -> Result<Self, Self::Error> {
        if a > 3 || b > 3 {
            return Err(format!("ring element [{a}, {b}] has a component outside 0..4"));
        }
        Ok(RTheta { a, b })
    }
}

impl fmt::Display for RTheta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "v"),
            (0, b) => write!(f, "{b}*v"),
            (a, 1) => write!(f, "{a}+v"),
            (a, b) => write!(f, "{a}+{b}*v"),
        }
    }
}

impl fmt::Debug for RTheta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RTheta {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = syntax::parse_expression(s)?;
        match terms.as_slice() {
            [] => Ok(RTheta::ZERO),
            [c] => Ok(*c),
            _ => Err(RingError::NotAnElement(s.to_string())),
        }
    }
}

/// The eight values of `v^2` giving a non-chain ring, in a fixed order.
const NON_CHAIN: [RTheta; 8] = [
    RTheta::new(0, 0),
    RTheta::new(0, 1),
    RTheta::new(0, 2),
    RTheta::new(0, 3),
    RTheta::new(1, 0),
    RTheta::new(3, 2),
    RTheta::new(2, 1),
    RTheta::new(2, 3),
];

/// `k_theta = kappa + v`; this is `kappa` for each entry of `NON_CHAIN`.
const KAPPA: [u8; 8] = [0, 0, 0, 0, 1, 1, 2, 2];

const fn mul_raw(x: RTheta, y: RTheta, theta: RTheta) -> RTheta {
    let bd = x.b * y.b;
    RTheta::new(x.a * y.a + bd * theta.a, x.a * y.b + x.b * y.a + bd * theta.b)
}

const fn build_tables() -> [[[RTheta; 16]; 16]; 8] {
    let mut out = [[[RTheta::ZERO; 16]; 16]; 8];
    let mut t = 0;
    while t < 8 {
        let mut i = 0;
        while i < 16 {
            let mut j = 0;
            while j < 16 {
                out[t][i][j] = mul_raw(
                    RTheta::from_index(i as u8),
                    RTheta::from_index(j as u8),
                    NON_CHAIN[t],
                );
                j += 1;
            }
            i += 1;
        }
        t += 1;
    }
    out
}

static MUL_TABLES: [[[RTheta; 16]; 16]; 8] = build_tables();

/// One of the eight admissible values of `v^2`; also the ring `R_theta`
/// itself when used through the [`Ring`] trait.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaParam(u8);

impl ThetaParam {
    /// Fails with [`RingError::ChainRingTheta`] for the eight chain-ring values.
    pub fn new(theta: RTheta) -> Result<Self, RingError> {
        NON_CHAIN
            .iter()
            .position(|&t| t == theta)
            .map(|i| ThetaParam(i as u8))
            .ok_or(RingError::ChainRingTheta(theta))
    }

    /// All eight parameters: `0, v, 2v, 3v, 1, 3+2v, 2+v, 2+3v`.
    pub fn all() -> impl Iterator<Item = ThetaParam> {
        (0..8).map(ThetaParam)
    }

    pub fn theta(self) -> RTheta {
        NON_CHAIN[self.0 as usize]
    }

    pub fn k_theta(self) -> RTheta {
        RTheta::new(self.kappa(), 1)
    }

    /// The Z4 part of `k_theta`: `k_theta = kappa + v`.
    pub fn kappa(self) -> u8 {
        KAPPA[self.0 as usize]
    }

    /// The scalar `s` with `k_theta^2 = s * k_theta`.
    pub fn k_square_scalar(self) -> u8 {
        let k = self.k_theta();
        let k2 = self.mul(k, k);
        // k * c = c*kappa + c*v, so the v-part of k^2 is the scalar.
        debug_assert_eq!(k2, k.scale(k2.b));
        k2.b
    }

    /// `phi_theta(x) = x mod k_theta` as an element of Z4.
    ///
    /// Writing `x = a + b*v = (a - kappa*b) + b*k_theta` shows the image is
    /// `a - kappa*b`.
    pub fn phi(self, x: RTheta) -> u8 {
        (x.a + 4 * 3 - self.kappa() * x.b) & 3
    }

    pub fn is_unit(self, x: RTheta) -> bool {
        self.inv(x).is_some()
    }

    pub fn units(self) -> impl Iterator<Item = RTheta> {
        RTheta::all().filter(move |&x| self.is_unit(x))
    }
}

impl Ring for ThetaParam {
    type Elem = RTheta;

    fn zero(&self) -> RTheta {
        RTheta::ZERO
    }
    fn one(&self) -> RTheta {
        RTheta::ONE
    }
    fn add(&self, x: RTheta, y: RTheta) -> RTheta {
        x.add(y)
    }
    fn neg(&self, x: RTheta) -> RTheta {
        x.neg()
    }
    fn mul(&self, x: RTheta, y: RTheta) -> RTheta {
        MUL_TABLES[self.0 as usize][x.index()][y.index()]
    }
    fn inv(&self, x: RTheta) -> Option<RTheta> {
        RTheta::all().find(|&y| self.mul(x, y) == RTheta::ONE)
    }
}

impl fmt::Display for ThetaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.theta())
    }
}

impl fmt::Debug for ThetaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThetaParam({})", self.theta())
    }
}

impl FromStr for ThetaParam {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ThetaParam::new(s.parse()?)
    }
}

impl Serialize for ThetaParam {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.theta().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ThetaParam {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let theta = RTheta::deserialize(deserializer)?;
        ThetaParam::new(theta).map_err(serde::de::Error::custom)
    }
}

/// A pair `(u, t)` with `u^2 = 1` and `u*t = t`, defining the complement
/// `x -> u^-1 (t - x)`, i.e. the unique `y` with `x + u*y = t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplementPair {
    u: RTheta,
    t: RTheta,
    theta: ThetaParam,
}

impl ComplementPair {
    pub fn new(theta: ThetaParam, u: RTheta, t: RTheta) -> Result<Self, RingError> {
        if theta.mul(u, u) != RTheta::ONE {
            return Err(RingError::InvalidComplementPair { u, t, reason: "u^2 != 1" });
        }
        if theta.mul(u, t) != t {
            return Err(RingError::InvalidComplementPair { u, t, reason: "u*t != t" });
        }
        Ok(ComplementPair { u, t, theta })
    }

    pub fn u(&self) -> RTheta {
        self.u
    }

    pub fn t(&self) -> RTheta {
        self.t
    }

    pub fn theta(&self) -> ThetaParam {
        self.theta
    }

    /// `u^-1`, which is `u` itself because `u^2 = 1`.
    pub fn u_inverse(&self) -> RTheta {
        debug_assert_eq!(self.theta.mul(self.u, self.u), RTheta::ONE);
        self.u
    }

    pub fn complement(&self, x: RTheta) -> RTheta {
        self.theta.mul(self.u_inverse(), self.t.sub(x))
    }
}

impl fmt::Display for ComplementPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.t)
    }
}

/// Every valid complement pair of `R_theta`, found by scanning all
/// 16 x 16 candidates, ordered lexicographically on `(u.a, u.b, t.a, t.b)`.
pub fn enumerate_complement_pairs(theta: ThetaParam) -> Vec<ComplementPair> {
    RTheta::all()
        .flat_map(|u| RTheta::all().map(move |t| (u, t)))
        .filter_map(|(u, t)| ComplementPair::new(theta, u, t).ok())
        .collect()
}
