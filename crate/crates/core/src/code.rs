//! Cyclic codes over `R_theta` given by ten binary polynomials `g_ij`, and
//! cyclic codes over Z4 given by `(g + 2p, 2a)`.
//!
//! A code over `R_theta` of length `n` is generated by
//!
//! ```text
//! g_1 = g11 + 2 g12 + k (g13 + 2 g14)
//! g_2 = 2 g22 + k (g23 + 2 g24)
//! g_3 = k (g33 + 2 g34)
//! g_4 = 2 k g44
//! ```
//!
//! with `k = k_theta`. A zero `g_jj` stands for `z^n - 1`, i.e. the whole
//! `j`-th generator is absent. Codewords are embedded in `Z4^{2n}` as
//! `[a_0 .. a_{n-1} | b_0 .. b_{n-1}]` for `sum (a_i + b_i v) z^i`.
//!
//! Every element of `R_theta` is uniquely `x + k y` with `x = phi(.)` and
//! `y` its `v`-part, so a code is also a submodule of pairs `(x, y)`. Its
//! projection on `x` is the residue code `phi(C)` and its intersection with
//! `x = 0` is the torsion code `{y : k y in C}`. The canonical generators
//! record both Z4 codes and, modulo the torsion, the `y` paired with the
//! two generators of the residue code.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::howell::{HowellForm, ModuleError, Z4Matrix, Z4Vector};
use crate::poly::{divides_mod_xn, generator_degree, BinPoly, PolyError, Poly, RPoly, Z4Poly};
use crate::ring::{RTheta, Ring, ThetaParam, Z2, Z4};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("code length must be positive")]
    ZeroLength,
    #[error("constraint violated: {divisor} = {divisor_value} must divide {dividend} = {dividend_value}")]
    Divisibility {
        divisor: String,
        divisor_value: String,
        dividend: String,
        dividend_value: String,
    },
    #[error("constraint violated: deg {poly} = {degree} must be below deg {bound_poly} = {bound}")]
    Degree {
        poly: &'static str,
        degree: usize,
        bound_poly: &'static str,
        bound: usize,
    },
    #[error("constraint violated: {poly} must be 0 because {generator} = 0")]
    DroppedGenerator { poly: &'static str, generator: &'static str },
    #[error("unknown generator name {0:?}; expected one of 11, 12, 13, 14, 22, 23, 24, 33, 34, 44")]
    UnknownGenerator(String),
    #[error("word {word} has degree {degree}, but the code length is {n}")]
    LengthMismatch { word: String, degree: usize, n: usize },
    #[error("word over v^2 = {got} used with a code over v^2 = {expected}")]
    ThetaMismatch { expected: String, got: String },
    #[error("canonical extraction failed at {step}")]
    Extraction { step: &'static str },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// Names of the ten binary polynomials, in storage order.
pub const GENERATOR_NAMES: [&str; 10] = ["g11", "g12", "g13", "g14", "g22", "g23", "g24", "g33", "g34", "g44"];

/// The ten binary polynomials presenting a code over `R_theta`.
///
/// Construction reduces every polynomial mod `z^n - 1` and checks the
/// divisibility, degree and dropped-generator constraints; it does not check
/// that the presentation is the unique canonical one (see
/// [`CyclicCode::is_canonical`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalGenerators {
    n: usize,
    theta: ThetaParam,
    g: [BinPoly; 10],
}

impl CanonicalGenerators {
    /// `g` lists the polynomials in the order of [`GENERATOR_NAMES`].
    pub fn new(n: usize, theta: ThetaParam, g: [BinPoly; 10]) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        let xn = BinPoly::xn_minus_one(n);
        let g = g.map(|p| if p.degree().is_some_and(|d| d >= n) { p.rem(&xn).expect("nonzero") } else { p });
        let out = CanonicalGenerators { n, theta, g };
        out.validate()?;
        Ok(out)
    }

    /// Builds from `(name, polynomial)` pairs such as `("g22", z^2 + 1)`;
    /// unnamed polynomials are zero.
    pub fn from_named<'a>(
        n: usize,
        theta: ThetaParam,
        named: impl IntoIterator<Item = (&'a str, BinPoly)>,
    ) -> Result<Self, CodeError> {
        let mut g: [BinPoly; 10] = std::array::from_fn(|_| BinPoly::zero(Z2));
        for (name, p) in named {
            let key = if name.starts_with('g') { name.to_string() } else { format!("g{name}") };
            let i = GENERATOR_NAMES
                .iter()
                .position(|&x| x == key)
                .ok_or_else(|| CodeError::UnknownGenerator(name.to_string()))?;
            g[i] = p;
        }
        Self::new(n, theta, g)
    }

    fn validate(&self) -> Result<(), CodeError> {
        let n = self.n;
        let xn = BinPoly::xn_minus_one(n);
        let div = |a: &'static str, b: &'static str| -> Result<(), CodeError> {
            let (pa, pb) = (self.get(a), self.get(b));
            if divides_mod_xn(pa, pb, n) {
                Ok(())
            } else {
                Err(CodeError::Divisibility {
                    divisor: a.into(),
                    divisor_value: pa.to_string(),
                    dividend: b.into(),
                    dividend_value: pb.to_string(),
                })
            }
        };
        for top in ["g11", "g33"] {
            let p = self.get(top);
            if !p.is_zero() && !p.divides(&xn).expect("nonzero") {
                return Err(CodeError::Divisibility {
                    divisor: top.into(),
                    divisor_value: p.to_string(),
                    dividend: format!("z^{n}-1"),
                    dividend_value: xn.to_string(),
                });
            }
        }
        div("g22", "g11")?;
        div("g44", "g33")?;
        for (p, gen) in [("g12", "g11"), ("g13", "g11"), ("g14", "g11"), ("g23", "g22"), ("g24", "g22"), ("g34", "g33")] {
            if self.get(gen).is_zero() && !self.get(p).is_zero() {
                return Err(CodeError::DroppedGenerator { poly: p, generator: gen });
            }
        }
        for (p, bound) in [("g12", "g22"), ("g13", "g33"), ("g14", "g44"), ("g23", "g33"), ("g24", "g44"), ("g34", "g44")] {
            if let Some(d) = self.get(p).degree() {
                let b = generator_degree(self.get(bound), n);
                if d >= b {
                    return Err(CodeError::Degree { poly: p, degree: d, bound_poly: bound, bound: b });
                }
            }
        }
        for (lead, off, low) in [("g11", "g12", "g22"), ("g33", "g34", "g44")] {
            let pg = self.get(lead);
            if pg.is_zero() {
                continue;
            }
            let (h, e) = cofactor_and_lift_error(pg, n);
            let w = &e + &(self.get(off) * &h);
            if !w.is_zero() && !divides_mod_xn(self.get(low), &w, n) {
                return Err(CodeError::Divisibility {
                    divisor: low.into(),
                    divisor_value: self.get(low).to_string(),
                    dividend: format!("{off}*(z^{n}-1)/{lead} + ({lead}*(z^{n}-1)/{lead} - (z^{n}-1))/2"),
                    dividend_value: w.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> ThetaParam {
        self.theta
    }

    /// Looks up `g11`, ..., `g44` by name.
    pub fn get(&self, name: &str) -> &BinPoly {
        let i = GENERATOR_NAMES.iter().position(|&x| x == name).unwrap_or_else(|| panic!("unknown generator {name}"));
        &self.g[i]
    }

    pub fn polys(&self) -> &[BinPoly; 10] {
        &self.g
    }

    /// `g13 + 2 g14` over Z4.
    pub fn offset1(&self) -> Z4Poly {
        pair(self.get("g13"), self.get("g14"))
    }

    /// `g23 + 2 g24` over Z4.
    pub fn offset2(&self) -> Z4Poly {
        pair(self.get("g23"), self.get("g24"))
    }

    /// The four generators over `R_theta`, reduced mod `z^n - 1`.
    pub fn generators(&self) -> [RPoly; 4] {
        let t = self.theta;
        let k = t.k_theta();
        let kmul = |p: &Z4Poly| p.embed(t).scale(k);
        let g = |s: &str| self.get(s);
        [
            &pair(g("g11"), g("g12")).embed(t) + &kmul(&self.offset1()),
            &g("g22").lift().scale(2).embed(t) + &kmul(&self.offset2()),
            kmul(&pair(g("g33"), g("g34"))),
            kmul(&g("g44").lift().scale(2)),
        ]
        .map(|p| reduce_word(&p, self.n))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }
}

impl fmt::Debug for CanonicalGenerators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, theta={}", self.n, self.theta)?;
        for (name, p) in GENERATOR_NAMES.iter().zip(&self.g) {
            if !p.is_zero() {
                write!(f, ", {name}={p}")?;
            }
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeFile {
    n: usize,
    theta: ThetaParam,
    g: BTreeMap<String, BinPoly>,
}

impl Serialize for CanonicalGenerators {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let g = GENERATOR_NAMES.iter().zip(&self.g).map(|(name, p)| (name[1..].to_string(), p.clone())).collect();
        CodeFile { n: self.n, theta: self.theta, g }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CanonicalGenerators {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = CodeFile::deserialize(d)?;
        let named: Vec<(&str, BinPoly)> = f.g.iter().map(|(k, p)| (k.as_str(), p.clone())).collect();
        CanonicalGenerators::from_named(f.n, f.theta, named).map_err(serde::de::Error::custom)
    }
}

/// For a binary divisor `g` of `z^n - 1`, the binary cofactor
/// `h = (z^n - 1)/g` and `e` with `g h = z^n - 1 + 2e` over Z4, where `g`
/// and `h` carry their 0/1 lifts.
///
/// A Z4 code `<g + 2p, 2a>` has residue code `<g>` and torsion code `<a>`
/// exactly when `a | e + p h`; `e = 0` when the lift of `g` divides
/// `z^n - 1` over Z4.
pub fn cofactor_and_lift_error(g: &BinPoly, n: usize) -> (BinPoly, BinPoly) {
    let h = BinPoly::xn_minus_one(n).div_rem(g).expect("nonzero").0;
    let xn = &Poly::monomial(Z4, 1, n) - &Poly::one(Z4);
    let d = &(&g.lift() * &h.lift()) - &xn;
    debug_assert!(d.residue().is_zero(), "g must divide z^n - 1");
    (h, d.high_bits())
}

fn pair(g: &BinPoly, p: &BinPoly) -> Z4Poly {
    &g.lift() + &p.lift().scale(2)
}

fn reduce_word<R: Ring>(p: &Poly<R>, n: usize) -> Poly<R> {
    crate::poly::QuotientContext::new(n, p.ring()).expect("n > 0").reduce(p)
}

fn check_word(s: &RPoly, n: usize, theta: ThetaParam) -> Result<(), CodeError> {
    if s.ring() != theta {
        return Err(CodeError::ThetaMismatch { expected: theta.to_string(), got: s.ring().to_string() });
    }
    if let Some(d) = s.degree().filter(|&d| d >= n) {
        return Err(CodeError::LengthMismatch { word: s.to_string(), degree: d, n });
    }
    Ok(())
}

/// `sum (a_i + b_i v) z^i` as `[a | b]`.
pub fn word_to_vector(s: &RPoly, n: usize) -> Z4Vector {
    let mut v = Z4Vector::zeros(2 * n);
    for (i, c) in s.coeffs().iter().enumerate() {
        v.set(i, c.a);
        v.set(n + i, c.b);
    }
    v
}

pub fn vector_to_word(v: &Z4Vector, n: usize, theta: ThetaParam) -> RPoly {
    Poly::new(theta, (0..n).map(|i| RTheta::new(v.get(i), v.get(n + i))).collect())
}

/// `sum (x_i + k y_i) z^i` as `[x | y]`.
fn word_to_xy(s: &RPoly, n: usize) -> Z4Vector {
    let t = s.ring();
    let mut v = Z4Vector::zeros(2 * n);
    for (i, &c) in s.coeffs().iter().enumerate() {
        v.set(i, t.phi(c));
        v.set(n + i, c.b);
    }
    v
}

pub fn z4_to_vector(p: &Z4Poly, n: usize) -> Z4Vector {
    let mut v = Z4Vector::zeros(n);
    for (i, &c) in p.coeffs().iter().enumerate() {
        v.set(i, c);
    }
    v
}

pub fn vector_to_z4(v: &Z4Vector) -> Z4Poly {
    Poly::new(Z4, v.entries())
}

/// All `z^i g` and `v z^i g`, for `g` among `gens`, under `embed`.
fn closure_rows(gens: &[RPoly], n: usize, embed: fn(&RPoly, usize) -> Z4Vector) -> Z4Matrix {
    let mut m = Z4Matrix::new(2 * n);
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let nu = Poly::constant(g.ring(), RTheta::NU);
        let g = reduce_word(g, n);
        let ng = reduce_word(&(&g * &nu), n);
        for i in 0..n {
            for h in [&g, &ng] {
                m.push(embed(&reduce_word(&h.shift(i), n), n)).expect("width");
            }
        }
    }
    m
}

/// The Howell form of the code generated by `gens` in `[a | b]` coordinates.
pub fn module_of(gens: &[RPoly], n: usize) -> HowellForm {
    closure_rows(gens, n, word_to_vector).howellize()
}

/// The Howell form of the code generated by `gens` in `[x | y]` coordinates.
fn xy_module_of(gens: &[RPoly], n: usize) -> HowellForm {
    closure_rows(gens, n, word_to_xy).howellize()
}

/// The Z4 cyclic code `{y : k y in <gens>}` as a Howell form over `Z4^n`.
pub fn torsion_module_of(gens: &[RPoly], n: usize) -> HowellForm {
    xy_module_of(gens, n).tail_after(n)
}

fn binary_gcd_generator<'a>(rows: impl Iterator<Item = &'a Z4Vector>, n: usize) -> BinPoly {
    let xn = BinPoly::xn_minus_one(n);
    let g = rows.fold(xn.clone(), |acc, r| acc.gcd(&vector_to_z4(r).residue()));
    if g == xn {
        BinPoly::zero(Z2)
    } else {
        g
    }
}

/// The canonical `(g, p, a)` of the Z4 cyclic code with Howell form `e`:
/// the code is `<g + 2p, 2a>` with `a | g | z^n - 1` and `deg p < deg a`.
fn z4_triple(e: &HowellForm, n: usize) -> Result<(BinPoly, BinPoly, BinPoly), CodeError> {
    let g = binary_gcd_generator(e.rows().iter(), n);
    // Rows (h | 0) for h in E and (2 e_i | e_i): the elements with first
    // block zero are exactly (0 | w) with 2w in E.
    let mut m = Z4Matrix::new(2 * n);
    for h in e.rows() {
        m.push(h.concat(&Z4Vector::zeros(n)))?;
    }
    for i in 0..n {
        let mut r = Z4Vector::zeros(2 * n);
        r.set(i, 2);
        r.set(n + i, 1);
        m.push(r)?;
    }
    let aug = m.howellize();
    let a = binary_gcd_generator(aug.tail_after(n).rows().iter(), n);
    if g.is_zero() {
        return Ok((g, BinPoly::zero(Z2), a));
    }
    if a.is_zero() {
        return Err(CodeError::Extraction { step: "Z4 torsion of a nonzero residue code" });
    }
    // (g | 0) = e + (2w | w) + (0 | r) with e in E gives g + 2r = e' in E.
    let (r, _) = aug.reduce(&z4_to_vector(&g.lift(), n).concat(&Z4Vector::zeros(n)))?;
    if !r.slice(0, n).is_zero() {
        return Err(CodeError::Extraction { step: "lift of the Z4 residue generator" });
    }
    let p = vector_to_z4(&r.slice(n, n)).residue().rem(&a)?;
    Ok((g, p, a))
}

/// Reduces `y` modulo the Z4 code `<g + 2p, 2a>` to the representative
/// `r0 + 2 r1` with `deg r0 < deg g` and `deg r1 < deg a`.
fn reduce_offset(y: &Z4Poly, g: &BinPoly, p: &BinPoly, a: &BinPoly) -> Result<(BinPoly, BinPoly), CodeError> {
    let r = if g.is_zero() { y.clone() } else { y.rem(&pair(g, p))? };
    let r1 = if a.is_zero() { r.high_bits() } else { r.high_bits().rem(a)? };
    Ok((r.residue(), r1))
}

/// Canonical generators of the code generated by `raw` over `R_theta`.
///
/// Every polynomial in `raw` must live over `theta`; exponents are read
/// mod `z^n - 1`.
pub fn canonicalize(raw: &[RPoly], n: usize, theta: ThetaParam) -> Result<CanonicalGenerators, CodeError> {
    if n == 0 {
        return Err(CodeError::ZeroLength);
    }
    for s in raw {
        if s.ring() != theta {
            return Err(CodeError::ThetaMismatch { expected: theta.to_string(), got: s.ring().to_string() });
        }
    }
    canonical_from_xy(&xy_module_of(raw, n), n, theta)
}

fn canonical_from_xy(xy: &HowellForm, n: usize, theta: ThetaParam) -> Result<CanonicalGenerators, CodeError> {
    let (g11, g12, g22) = z4_triple(&xy.head(n), n)?;
    let (g33, g34, g44) = z4_triple(&xy.tail_after(n), n)?;
    // The y paired with a given x in the residue code: reduce (x | 0) to
    // (0 | r), so that (x | -r) is in the code.
    let offset = |x: Z4Poly| -> Result<(BinPoly, BinPoly), CodeError> {
        let (r, _) = xy.reduce(&z4_to_vector(&x, n).concat(&Z4Vector::zeros(n)))?;
        if !r.slice(0, n).is_zero() {
            return Err(CodeError::Extraction { step: "pairing a residue generator with its torsion offset" });
        }
        reduce_offset(&-vector_to_z4(&r.slice(n, n)), &g33, &g34, &g44)
    };
    let zero = || (BinPoly::zero(Z2), BinPoly::zero(Z2));
    let (g13, g14) = if g11.is_zero() { zero() } else { offset(pair(&g11, &g12))? };
    let (g23, g24) = if g22.is_zero() { zero() } else { offset(g22.lift().scale(2))? };
    CanonicalGenerators::new(n, theta, [g11, g12, g13, g14, g22, g23, g24, g33, g34, g44])
}

/// A cyclic code over Z4, `<g + 2p, 2a>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Code {
    n: usize,
    g: BinPoly,
    p: BinPoly,
    a: BinPoly,
    module: HowellForm,
}

impl Z4Code {
    /// Checks `a | g | z^n - 1`, `deg p < deg a`, `a | e + p h` (see
    /// [`cofactor_and_lift_error`]), and `p = 0` when `g = 0`, with `0`
    /// standing for `z^n - 1`.
    pub fn new(n: usize, g: BinPoly, p: BinPoly, a: BinPoly) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        let gens = CanonicalGenerators::from_named(n, ThetaParam::all().next().unwrap(), [
            ("g11", g.clone()),
            ("g12", p.clone()),
            ("g22", a.clone()),
        ])
        .map_err(|e| match e {
            CodeError::Divisibility { divisor, divisor_value, dividend, dividend_value } => CodeError::Divisibility {
                divisor: divisor.replace("g22", "a").replace("g11", "g"),
                divisor_value,
                dividend: dividend.replace("g11", "g").replace("g12", "p"),
                dividend_value,
            },
            other => other,
        })?;
        let g = gens.get("g11").clone();
        let p = gens.get("g12").clone();
        let a = gens.get("g22").clone();
        let module = Self::module_of(&[pair(&g, &p), a.lift().scale(2)], n);
        Ok(Z4Code { n, g, p, a, module })
    }

    /// The Howell form of the Z4 cyclic code generated by `gens`.
    pub fn module_of(gens: &[Z4Poly], n: usize) -> HowellForm {
        let mut m = Z4Matrix::new(n);
        for g in gens {
            let g = reduce_word(g, n);
            for i in 0..n {
                m.push(z4_to_vector(&reduce_word(&g.shift(i), n), n)).expect("width");
            }
        }
        m.howellize()
    }

    /// The canonical presentation of the code with Howell form `module`.
    pub fn from_module(module: HowellForm) -> Result<Self, CodeError> {
        let n = module.width();
        let (g, p, a) = z4_triple(&module, n)?;
        Z4Code::new(n, g, p, a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> &BinPoly {
        &self.g
    }

    pub fn p(&self) -> &BinPoly {
        &self.p
    }

    pub fn a(&self) -> &BinPoly {
        &self.a
    }

    pub fn module(&self) -> &HowellForm {
        &self.module
    }

    pub fn log2_size(&self) -> u32 {
        self.module.log2_size()
    }

    pub fn member(&self, w: &Z4Poly) -> Result<bool, CodeError> {
        Ok(self.certificate(w)?.is_some())
    }

    pub fn certificate(&self, w: &Z4Poly) -> Result<Option<Vec<u8>>, CodeError> {
        if let Some(d) = w.degree().filter(|&d| d >= self.n) {
            return Err(CodeError::LengthMismatch { word: w.to_string(), degree: d, n: self.n });
        }
        Ok(self.module.certificate(&z4_to_vector(w, self.n))?)
    }
}

impl fmt::Display for Z4Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, 2*({})>", pair(&self.g, &self.p), self.a)
    }
}

/// A cyclic code over `R_theta` with its embedded module.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    gens: CanonicalGenerators,
    generators: [RPoly; 4],
    module: HowellForm,
    canonical: CanonicalGenerators,
    phi_image: Z4Code,
    torsion: Z4Code,
}

impl CyclicCode {
    pub fn build(gens: CanonicalGenerators) -> Result<Self, CodeError> {
        let n = gens.n;
        let generators = gens.generators();
        let module = module_of(&generators, n);
        let canonical = canonical_from_xy(&xy_module_of(&generators, n), n, gens.theta)?;
        let g = |s: &str| gens.get(s).clone();
        let phi_image = Z4Code::new(n, g("g11"), g("g12"), g("g22"))?;
        let torsion = Z4Code::new(n, g("g33"), g("g34"), g("g44"))?;
        Ok(CyclicCode { gens, generators, module, canonical, phi_image, torsion })
    }

    pub fn n(&self) -> usize {
        self.gens.n
    }

    pub fn theta(&self) -> ThetaParam {
        self.gens.theta
    }

    pub fn gens(&self) -> &CanonicalGenerators {
        &self.gens
    }

    pub fn generators(&self) -> &[RPoly; 4] {
        &self.generators
    }

    pub fn module(&self) -> &HowellForm {
        &self.module
    }

    pub fn log2_size(&self) -> u32 {
        self.module.log2_size()
    }

    /// The unique canonical presentation of this code.
    pub fn canonical_generators(&self) -> &CanonicalGenerators {
        &self.canonical
    }

    /// Whether the given presentation is the canonical one, i.e. whether
    /// `<g33 + 2 g34, 2 g44>` is the whole torsion code.
    pub fn is_canonical(&self) -> bool {
        self.canonical == self.gens
    }

    /// The residue code `<g11 + 2 g12, 2 g22>`.
    pub fn phi_image(&self) -> &Z4Code {
        &self.phi_image
    }

    /// The Z4 code `<g33 + 2 g34, 2 g44>` read off the presentation.
    pub fn torsion_code(&self) -> &Z4Code {
        &self.torsion
    }

    /// `{y : k y in C}`, computed from the module.
    pub fn true_torsion(&self) -> Z4Code {
        let c = &self.canonical;
        Z4Code::new(self.n(), c.get("g33").clone(), c.get("g34").clone(), c.get("g44").clone())
            .expect("canonical generators are valid")
    }

    pub fn quotient(&self) -> crate::poly::QuotientContext<ThetaParam> {
        crate::poly::QuotientContext::new(self.n(), self.theta()).expect("n > 0")
    }

    pub fn member(&self, s: &RPoly) -> Result<bool, CodeError> {
        Ok(self.certificate(s)?.is_some())
    }

    /// Multipliers of the Howell rows reproducing `s`, if `s` is in the code.
    pub fn certificate(&self, s: &RPoly) -> Result<Option<Vec<u8>>, CodeError> {
        check_word(s, self.n(), self.theta())?;
        Ok(self.module.certificate(&word_to_vector(s, self.n()))?)
    }

    /// The code rebuilt from its canonical presentation.
    pub fn canonicalized(&self) -> CyclicCode {
        if self.is_canonical() {
            return self.clone();
        }
        CyclicCode::build(self.canonical.clone()).expect("canonical generators are valid")
    }
}
