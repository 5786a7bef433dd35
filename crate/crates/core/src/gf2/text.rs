//! Canonical polynomial text and an expression parser.
//!
//! Canonical form: terms joined by `+` in descending monomial order, each term
//! a `*`-joined list of `name^exp` factors (exponent omitted when 1) in
//! variable declaration order, `1` for the constant term and `0` for the zero
//! polynomial. The parser accepts a superset: parentheses, repeated factors,
//! powers of subexpressions and named polynomials supplied by the caller.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MAX_VARS};
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Named, ordered variables with degrees. Declaration order fixes the
/// monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Self::weighted(names, &vec![1; names.len()])
    }

    pub fn weighted<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Self {
        assert_eq!(names.len(), weights.len());
        assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        Self { names: names.iter().map(|s| s.as_ref().to_string()).collect(), weights: weights.to_vec() }
    }

    pub fn n_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        self.index_of(name).map(Polynomial::var).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn format_monomial(&self, m: Monomial) -> String {
        let factors: Vec<String> = (0..self.n_vars())
            .filter_map(|i| match m.exponent(i) {
                0 => None,
                1 => Some(self.names[i].clone()),
                e => Some(format!("{}^{}", self.names[i], e)),
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Canonical text of `p`.
    pub fn format(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        p.terms().iter().map(|&m| self.format_monomial(m)).collect::<Vec<_>>().join("+")
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        self.parse_with(s, &HashMap::new())
    }

    /// Parses an expression; identifiers resolve to ring variables first and
    /// then to entries of `symbols`.
    pub fn parse_with(&self, s: &str, symbols: &HashMap<String, Polynomial>) -> Result<Polynomial> {
        parse_expr(s, &|name: &str| self.index_of(name).map(Polynomial::var).or_else(|| symbols.get(name).cloned()))
    }
}

/// Parses `s` resolving identifiers through `lookup`.
pub fn parse_expr(s: &str, lookup: &dyn Fn(&str) -> Option<Polynomial>) -> Result<Polynomial> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, lookup };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    lookup: &'a dyn Fn(&str) -> Option<Polynomial>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        // minus is plus in characteristic two
        while matches!(self.peek(), Some(b'+' | b'-')) {
            self.pos += 1;
            acc += self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                // integer literals are field elements
                let n = self.integer()?;
                Ok(if n % 2 == 1 { Polynomial::one() } else { Polynomial::zero() })
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || matches!(self.src[self.pos], b'_' | b'\''))
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                (self.lookup)(name).ok_or_else(|| Error::UnknownName(name.to_string()))
            }
            Some(_) => Err(Error::parse(self.pos, "unexpected character")),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_output() {
        let r = Ring::new(&["w", "t"]);
        let p = r.parse("w^2+t*w+t^2").unwrap();
        assert_eq!(r.format(&p), "w^2+w*t+t^2");
        assert_eq!(r.format(&Polynomial::zero()), "0");
        assert_eq!(r.format(&Polynomial::one()), "1");
        assert_eq!(r.format(&r.parse("1 + w + 1").unwrap()), "w");
    }

    #[test]
    fn parentheses_and_symbols() {
        let r = Ring::new(&["w", "t", "z"]);
        let mut syms = HashMap::new();
        syms.insert("d2".to_string(), r.parse("w^2+w*t+t^2").unwrap());
        let a = r.parse_with("t*(t+w) + w^2", &syms).unwrap();
        assert_eq!(a, syms["d2"]);
        let b = r.parse_with("(w+t)^2", &syms).unwrap();
        assert_eq!(r.format(&b), "w^2+t^2");
    }

    #[test]
    fn parse_errors() {
        let r = Ring::new(&["x"]);
        assert!(matches!(r.parse("x+"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("y"), Err(Error::UnknownName(_))));
        assert!(matches!(r.parse("(x"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x x"), Err(Error::Parse { .. })));
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(exps in proptest::collection::vec((0u32..6, 0u32..6, 0u32..6), 0..12)) {
            let r = Ring::new(&["x1", "y1", "z1"]);
            let p = Polynomial::from_terms(exps.into_iter().map(|(a, b, c)| Monomial::from_exponents(&[a, b, c])));
            let text = r.format(&p);
            prop_assert_eq!(r.parse(&text).unwrap(), p);
        }
    }
}
