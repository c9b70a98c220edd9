//! Reverse complements and the reversible-complement decision.
//!
//! For a pair `(u, t)` the reverse complement of a word replaces
//! `(s_0, ..., s_{n-1})` by `(c(s_{n-1}), ..., c(s_0))` with
//! `c(x) = u^-1 (t - x)`. Since this equals `c(0)...c(0) - u^-1 s^r`, a code
//! is closed under it iff the code is reversible and contains the constant
//! word with every coefficient `u^-1 t`.

use serde::{Deserialize, Serialize};

use crate::code::CyclicCode;
use crate::poly::{PolyError, Poly, QuotientContext, RPoly};
use crate::reversibility;
use crate::ring::{enumerate_complement_pairs, ComplementPair, RTheta, Ring, ThetaParam};

/// The reverse complement of a word of length `ctx.n()`.
pub fn reverse_complement(s: &RPoly, ctx: &QuotientContext<ThetaParam>, cp: &ComplementPair) -> Result<RPoly, PolyError> {
    let r = ctx.reverse(s)?;
    Ok(Poly::new(ctx.ring(), (0..ctx.n()).map(|i| cp.complement(r.coeff(i))).collect()))
}

/// The reverse complement of the zero word: every coefficient is `u^-1 t`.
pub fn zero_reverse_complement(n: usize, theta: ThetaParam, cp: &ComplementPair) -> RPoly {
    let c = theta.mul(cp.u_inverse(), cp.t());
    Poly::new(theta, vec![c; n])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub u: RTheta,
    pub t: RTheta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RevCompReport {
    pub pair: PairJson,
    pub reversible: bool,
    pub zero_word_in_code: bool,
    pub verdict: bool,
}

/// Decides whether `c` is closed under the `(u, t)` reverse complement.
pub fn check_rev_comp(c: &CyclicCode, cp: &ComplementPair) -> RevCompReport {
    rev_comp_with(c, cp, reversibility::is_reversible(c))
}

fn rev_comp_with(c: &CyclicCode, cp: &ComplementPair, reversible: bool) -> RevCompReport {
    let w = zero_reverse_complement(c.n(), c.theta(), cp);
    let zero_word_in_code = c.member(&w).expect("word of length n over theta");
    RevCompReport {
        pair: PairJson { u: cp.u(), t: cp.t() },
        reversible,
        zero_word_in_code,
        verdict: reversible && zero_word_in_code,
    }
}

/// One report per valid pair, in the order of [`enumerate_complement_pairs`].
pub fn check_all_pairs(c: &CyclicCode) -> Vec<RevCompReport> {
    check_pairs(c, &enumerate_complement_pairs(c.theta()))
}

/// Reports for the given pairs, deciding reversibility once.
pub fn check_pairs(c: &CyclicCode, pairs: &[ComplementPair]) -> Vec<RevCompReport> {
    let reversible = reversibility::is_reversible(c);
    pairs.iter().map(|cp| rev_comp_with(c, cp, reversible)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CanonicalGenerators;
    use crate::corpus;

    fn el(s: &str) -> RTheta {
        s.parse().unwrap()
    }

    #[test]
    fn zero_word_examples() {
        let t: ThetaParam = "2*v".parse().unwrap();
        let cp = ComplementPair::new(t, RTheta::ONE, RTheta::NU).unwrap();
        assert_eq!(zero_reverse_complement(4, t, &cp), RPoly::parse(t, "v*z^3 + v*z^2 + v*z + v").unwrap());
        let t: ThetaParam = "3+2*v".parse().unwrap();
        let cp = ComplementPair::new(t, el("3+2*v"), el("2")).unwrap();
        assert_eq!(zero_reverse_complement(3, t, &cp), RPoly::parse(t, "2*z^2 + 2*z + 2").unwrap());
        let cp = ComplementPair::new(t, RTheta::ONE, RTheta::ZERO).unwrap();
        assert!(zero_reverse_complement(3, t, &cp).is_zero());
    }

    #[test]
    fn double_reverse_complement_is_identity() {
        for t in ThetaParam::all() {
            let ctx = QuotientContext::new(2, t).unwrap();
            for cp in enumerate_complement_pairs(t) {
                for x in RTheta::all() {
                    for y in RTheta::all() {
                        let s = Poly::new(t, vec![x, y]);
                        let r = reverse_complement(&s, &ctx, &cp).unwrap();
                        assert_eq!(reverse_complement(&r, &ctx, &cp).unwrap(), s);
                    }
                }
            }
        }
    }

    #[test]
    fn identity_with_reversal() {
        let t: ThetaParam = "1".parse().unwrap();
        let ctx = QuotientContext::new(3, t).unwrap();
        let s = RPoly::parse(t, "(2+v)*z^2 + 3*v").unwrap();
        for cp in enumerate_complement_pairs(t) {
            let lhs = reverse_complement(&s, &ctx, &cp).unwrap();
            let rhs = &zero_reverse_complement(3, t, &cp) - &ctx.reverse(&s).unwrap().scale(cp.u_inverse());
            assert_eq!(lhs, rhs);
        }
        assert!(reverse_complement(&RPoly::parse(t, "z^3").unwrap(), &ctx, &enumerate_complement_pairs(t)[0]).is_err());
    }

    #[test]
    fn example1_all_pairs() {
        let c = CyclicCode::build(corpus::example("ex1").unwrap().gens).unwrap();
        let reports = check_all_pairs(&c);
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.verdict));
    }

    #[test]
    fn zero_code_needs_t_zero() {
        let t: ThetaParam = "0".parse().unwrap();
        let c = CyclicCode::build(CanonicalGenerators::from_named(3, t, []).unwrap()).unwrap();
        for r in check_all_pairs(&c) {
            assert!(r.reversible);
            assert_eq!(r.verdict, r.pair.t == RTheta::ZERO);
        }
    }
}
