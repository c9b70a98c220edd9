//! Reversibility of cyclic codes over Z4 and over `R_theta`.
//!
//! A code over Z4 `<g + 2p, 2a>` is reversible iff `g` and `a` are
//! self-reciprocal and `a | z^l p* - p` with `l = deg g - deg p`.
//!
//! A code over `R_theta` in four-generator form is reversible iff
//!
//! * (i) `g11`, `g22`, `g33`, `g44` are self-reciprocal,
//! * (ii) `g44 | z^alpha g34* - g34`,
//! * (iii) `2 (z^beta g12* - g12) + k (z^gamma o1* - o1)` is in the code,
//! * (iv) `z^delta o2* - o2` is in the torsion code `<g33 + 2 g34, 2 g44>`,
//!
//! where `o1 = g13 + 2 g14`, `o2 = g23 + 2 g24`, `alpha = deg g33 - deg g34`,
//! `beta = deg g11 - deg g12`, `gamma = deg g11 - deg o1` and
//! `delta = deg g22 - deg o2`. The degree of the zero polynomial is taken as
//! 0 here, and exponents are applied modulo `n`, so a negative or zero
//! exponent is allowed.
//!
//! For the canonical presentation these four conditions decide
//! reversibility exactly. For other presentations a `true` verdict still
//! proves reversibility but a `false` verdict may not; see
//! [`is_reversible`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, CyclicCode, Z4Code};
use crate::poly::{BinPoly, Poly, QuotientContext, RPoly};
use crate::ring::{ThetaParam, Z2, Z4};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReversibilityError {
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// One condition of the decision procedure with its evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub holds: bool,
    /// For (i), the generators that are not self-reciprocal. For (ii) to
    /// (iv), the tested polynomial in text syntax.
    pub witness: Vec<String>,
    /// For (iii) and (iv), multipliers of the Howell rows of the relevant
    /// module reproducing the tested polynomial, when it is a member.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<u8>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    pub i: Condition,
    pub ii: Condition,
    pub iii: Condition,
    pub iv: Condition,
}

impl Default for Condition {
    fn default() -> Self {
        Condition { holds: true, witness: Vec::new(), certificate: None }
    }
}

/// Degree gaps; `None` when the corresponding generator is absent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exponents {
    pub alpha: Option<i64>,
    pub beta: Option<i64>,
    pub gamma: Option<i64>,
    pub delta: Option<i64>,
}

impl Exponents {
    pub fn as_array(&self) -> [Option<i64>; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReversibilityReport {
    pub verdict: bool,
    pub conditions: Conditions,
    pub exponents: Exponents,
    /// Whether `alpha, beta, gamma > 0` and `delta >= 0` wherever the
    /// offset polynomial involved is nonzero.
    pub exponent_bounds_hold: bool,
    /// Whether the presentation was canonical; only then is a `false`
    /// verdict conclusive.
    pub canonical: bool,
}

fn deg0<R: crate::ring::Ring>(p: &Poly<R>) -> i64 {
    p.degree().unwrap_or(0) as i64
}

/// `z^e f* - f` in the quotient ring.
fn gap<R: crate::ring::Ring>(ctx: &QuotientContext<R>, f: &Poly<R>, e: i64) -> Poly<R> {
    ctx.sub(&ctx.shift(&f.reciprocal(), e), f).expect("same ring")
}

/// Decides reversibility of the Z4 cyclic code `<g + 2p, 2a>`.
pub fn z4_reversible(g: &BinPoly, p: &BinPoly, a: &BinPoly, n: usize) -> Result<bool, ReversibilityError> {
    let code = Z4Code::new(n, g.clone(), p.clone(), a.clone())?;
    Ok(z4_reversible_code(&code))
}

fn z4_reversible_code(code: &Z4Code) -> bool {
    let (g, p, a) = (code.g(), code.p(), code.a());
    if !g.is_self_reciprocal() || !a.is_self_reciprocal() {
        return false;
    }
    if p.is_zero() {
        return true;
    }
    let ctx = QuotientContext::new(code.n(), Z2).expect("n > 0");
    let w = gap(&ctx, p, deg0(g) - deg0(p));
    crate::poly::divides_mod_xn(a, &w, code.n())
}

/// Evaluates the four conditions on the presentation held by `c`.
pub fn check_reversibility(c: &CyclicCode) -> ReversibilityReport {
    let gens = c.gens();
    let n = c.n();
    let theta = c.theta();
    let g = |s: &str| gens.get(s).clone();
    let mut ex = Exponents::default();
    let mut bounds = true;

    let failing: Vec<String> = ["g11", "g22", "g33", "g44"]
        .into_iter()
        .filter(|s| !gens.get(s).is_self_reciprocal())
        .map(|s| format!("{s} = {}", gens.get(s)))
        .collect();
    let cond_i = Condition { holds: failing.is_empty(), witness: failing, certificate: None };

    let bctx = QuotientContext::new(n, Z2).expect("n > 0");
    let (g33, g34, g44) = (g("g33"), g("g34"), g("g44"));
    let cond_ii = if g33.is_zero() {
        Condition::default()
    } else {
        let alpha = deg0(&g33) - deg0(&g34);
        ex.alpha = Some(alpha);
        bounds &= g34.is_zero() || alpha > 0;
        let w = gap(&bctx, &g34, alpha);
        let holds = w.is_zero() || crate::poly::divides_mod_xn(&g44, &w, n);
        Condition { holds, witness: vec![w.to_string()], certificate: None }
    };

    let zctx = QuotientContext::new(n, Z4).expect("n > 0");
    let rctx = c.quotient();
    let (g11, g12) = (g("g11"), g("g12"));
    let cond_iii = if g11.is_zero() {
        Condition::default()
    } else {
        let o1 = gens.offset1();
        let beta = deg0(&g11) - deg0(&g12);
        let gamma = deg0(&g11) - deg0(&o1);
        ex.beta = Some(beta);
        ex.gamma = Some(gamma);
        bounds &= (g12.is_zero() || beta > 0) && (o1.is_zero() || gamma > 0);
        let t1 = gap(&zctx, &g12.lift(), beta).scale(2).embed(theta);
        let t2 = gap(&zctx, &o1, gamma).embed(theta).scale(theta.k_theta());
        let w = rctx.add(&t1, &t2).expect("same ring");
        let certificate = c.certificate(&w).expect("word of length n over theta");
        Condition { holds: certificate.is_some(), witness: vec![w.to_string()], certificate }
    };

    let g22 = g("g22");
    let cond_iv = if g22.is_zero() {
        Condition::default()
    } else {
        let o2 = gens.offset2();
        let delta = deg0(&g22) - deg0(&o2);
        ex.delta = Some(delta);
        bounds &= o2.is_zero() || delta >= 0;
        let w = gap(&zctx, &o2, delta);
        let certificate = c.torsion_code().certificate(&w).expect("word of length n");
        Condition { holds: certificate.is_some(), witness: vec![w.to_string()], certificate }
    };

    let verdict = cond_i.holds && cond_ii.holds && cond_iii.holds && cond_iv.holds;
    ReversibilityReport {
        verdict,
        conditions: Conditions { i: cond_i, ii: cond_ii, iii: cond_iii, iv: cond_iv },
        exponents: ex,
        exponent_bounds_hold: bounds,
        canonical: c.is_canonical(),
    }
}

/// Decides reversibility of `c`, passing to the canonical presentation when
/// the given one is not canonical.
pub fn is_reversible(c: &CyclicCode) -> bool {
    let r = check_reversibility(c);
    if r.verdict || r.canonical {
        return r.verdict;
    }
    check_reversibility(&c.canonicalized()).verdict
}

/// Reversibility of the torsion code `<g33 + 2 g34, 2 g44>`; true whenever
/// `c` is reversible and the presentation is canonical.
pub fn torsion_reversible_consequence(c: &CyclicCode) -> bool {
    z4_reversible_code(c.torsion_code())
}

/// Reversibility of the residue code `<g11 + 2 g12, 2 g22>`; true whenever
/// `c` is reversible.
pub fn phi_reversible_consequence(c: &CyclicCode) -> bool {
    z4_reversible_code(c.phi_image())
}

/// Parses a witness polynomial back over `theta`.
pub fn parse_witness(theta: ThetaParam, w: &str) -> Result<RPoly, crate::poly::PolyError> {
    RPoly::parse(theta, w)
}
