//! Text syntax for ring elements and polynomials.
//!
//! Expressions are sums and products of integer literals, `v` (or `ν`) and
//! powers `z^k`, with parentheses, e.g. `3*z^3 + 1*z + 2`, `(1+2*v)*z^2 + 3`
//! or `z-1`. The result is a list of `a + b*v` coefficients indexed by the
//! power of `z`. Products containing `v^2` are rejected unless they vanish
//! mod 4, since their value would depend on `theta`.

use thiserror::Error;

use crate::ring::RTheta;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse {input:?} at byte {pos}: {reason}")]
pub struct SyntaxError {
    pub input: String,
    pub pos: usize,
    pub reason: String,
}

/// A polynomial in `z` whose coefficients are `c0 + c1*v`, kept mod 4.
#[derive(Clone, Debug, Default)]
struct Value(Vec<[u8; 2]>);

impl Value {
    fn constant(c: [u8; 2]) -> Self {
        Value(vec![c])
    }

    fn monomial(deg: usize) -> Self {
        let mut v = vec![[0, 0]; deg + 1];
        v[deg] = [1, 0];
        Value(v)
    }

    fn add(mut self, o: &Value, sign: u8) -> Self {
        if self.0.len() < o.0.len() {
            self.0.resize(o.0.len(), [0, 0]);
        }
        for (x, y) in self.0.iter_mut().zip(&o.0) {
            x[0] = (x[0] + sign * y[0]) & 3;
            x[1] = (x[1] + sign * y[1]) & 3;
        }
        self
    }

    fn mul(&self, o: &Value) -> Result<Value, &'static str> {
        if self.0.is_empty() || o.0.is_empty() {
            return Ok(Value::default());
        }
        let mut out = vec![[0u8; 2]; self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            for (j, y) in o.0.iter().enumerate() {
                if (x[1] * y[1]) & 3 != 0 {
                    return Err("v^2 depends on theta and is not allowed");
                }
                let c = &mut out[i + j];
                c[0] = (c[0] + x[0] * y[0]) & 3;
                c[1] = (c[1] + x[0] * y[1] + x[1] * y[0]) & 3;
            }
        }
        Ok(Value(out))
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<(usize, char)>,
    i: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> SyntaxError {
        let pos = self.chars.get(self.i).map_or(self.input.len(), |c| c.0);
        SyntaxError { input: self.input.to_string(), pos, reason: reason.into() }
    }

    fn peek(&mut self) -> Option<char> {
        while let Some(&(_, c)) = self.chars.get(self.i) {
            if c.is_whitespace() {
                self.i += 1;
            } else {
                return Some(c);
            }
        }
        None
    }

    fn bump(&mut self) {
        self.i += 1;
    }

    fn integer(&mut self) -> Result<u64, SyntaxError> {
        self.peek();
        let start = self.i;
        let mut v: u64 = 0;
        while let Some(&(_, c)) = self.chars.get(self.i) {
            let Some(d) = c.to_digit(10) else { break };
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.err("integer too large"))?;
            self.i += 1;
        }
        if self.i == start {
            return Err(self.err("expected an integer"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Value, SyntaxError> {
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                3
            }
            Some('+') => {
                self.bump();
                1
            }
            _ => 1,
        };
        let mut acc = Value::default();
        loop {
            let t = self.term()?;
            acc = acc.add(&t, sign);
            sign = match self.peek() {
                Some('+') => 1,
                Some('-') => 3,
                _ => return Ok(acc),
            };
            self.bump();
        }
    }

    fn term(&mut self) -> Result<Value, SyntaxError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f).map_err(|e| self.err(e))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, SyntaxError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(v)
            }
            Some('v') | Some('ν') => {
                self.bump();
                Ok(Value::constant([0, 1]))
            }
            Some('z') | Some('x') => {
                self.bump();
                let deg = if self.peek() == Some('^') {
                    self.bump();
                    self.integer()?
                } else {
                    1
                };
                let deg = usize::try_from(deg)
                    .ok()
                    .filter(|&d| d <= 1 << 20)
                    .ok_or_else(|| self.err("exponent too large"))?;
                Ok(Value::monomial(deg))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(Value::constant([(v % 4) as u8, 0]))
            }
            Some(c) => Err(self.err(format!("unexpected character {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses an expression into its coefficients by power of `z`, with
/// trailing zeros removed.
pub fn parse_expression(input: &str) -> Result<Vec<RTheta>, SyntaxError> {
    let mut p = Parser { input, chars: input.char_indices().collect(), i: 0 };
    if p.peek().is_none() {
        return Err(p.err("empty expression"));
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    let mut out: Vec<RTheta> = v.0.into_iter().map(|[a, b]| RTheta::new(a, b)).collect();
    while out.last() == Some(&RTheta::ZERO) {
        out.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(s: &str) -> Vec<(u8, u8)> {
        parse_expression(s).unwrap().iter().map(|c| (c.a, c.b)).collect()
    }

    #[test]
    fn plain_polynomials() {
        assert_eq!(coeffs("3*z^3 + 1*z + 2"), vec![(2, 0), (1, 0), (0, 0), (3, 0)]);
        assert_eq!(coeffs("z-1"), vec![(3, 0), (1, 0)]);
        assert_eq!(coeffs("z^2+z^2"), vec![(0, 0), (0, 0), (2, 0)]);
        assert_eq!(coeffs("0"), vec![]);
    }

    #[test]
    fn coefficients_with_v() {
        assert_eq!(coeffs("(1+2*v)*z^2 + 3"), vec![(3, 0), (0, 0), (1, 2)]);
        assert_eq!(coeffs("2*v*z"), vec![(0, 0), (0, 2)]);
        assert_eq!(coeffs("-(1+v)"), vec![(3, 3)]);
        assert_eq!(coeffs("2*v*2*v"), vec![]);
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["", "z^", "3*", "(z+1", "v*v", "z+1)", "y", "1 2"] {
            assert!(parse_expression(s).is_err(), "{s:?} should fail");
        }
    }
}
