//! Canonical text form of polynomials: `3*x^2*y-z+1`.

use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

impl PolyRing {
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names()[i].clone()),
                _ => parts.push(format!("{}^{}", self.names()[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format(&self, f: &Poly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms().iter().enumerate() {
            let v = self.field().symmetric(*c);
            if v < 0 {
                s.push('-');
            } else if k > 0 {
                s.push('+');
            }
            let a = v.unsigned_abs();
            if m.is_one() {
                s.push_str(&a.to_string());
            } else {
                if a != 1 {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&self.format_monomial(m));
            }
        }
        s
    }

    /// Parses a polynomial expression (`+ - * ^`, parentheses, integer
    /// constants, variable names of this ring).
    pub fn parse(&self, text: &str) -> Result<Poly> {
        self.parse_at(text, 1, 1)
    }

    /// Like [`parse`](Self::parse) but reports positions relative to
    /// `(line, col)` of an enclosing document.
    pub fn parse_at(&self, text: &str, line: usize, col: usize) -> Result<Poly> {
        let mut p = ExprParser {
            ring: self,
            chars: text.char_indices().collect(),
            pos: 0,
            line,
            col,
            text,
        };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(f)
    }
}

struct ExprParser<'a> {
    ring: &'a PolyRing,
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    col: usize,
    text: &'a str,
}

impl ExprParser<'_> {
    fn err(&self, msg: &str) -> Error {
        // columns count characters, lines may be embedded in the fragment
        let upto = self
            .chars
            .get(self.pos)
            .map(|c| c.0)
            .unwrap_or(self.text.len());
        let before = &self.text[..upto];
        let nl = before.matches('\n').count();
        let col = match before.rfind('\n') {
            Some(i) => before[i + 1..].chars().count() + 1,
            None => self.col + before.chars().count(),
        };
        Error::Parse {
            line: self.line + nl,
            col,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn expr(&mut self) -> Result<Poly> {
        let r = self.ring;
        let mut acc = if self.peek() == Some('-') {
            self.pos += 1;
            r.neg(&self.term()?)
        } else {
            if self.peek() == Some('+') {
                self.pos += 1;
            }
            self.term()?
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = r.add(&acc, &self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = r.sub(&acc, &self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = self.ring.mul(&acc, &self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            let Some(d) = c.to_digit(10) else { break };
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.err("integer literal too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let f = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some('-') => {
                self.pos += 1;
                let f = self.power()?;
                Ok(self.ring.neg(&f))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let p = self.ring.field().characteristic() as u64;
                Ok(self.ring.constant((v % p) as i64))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while let Some(&(_, c)) = self.chars.get(self.pos) {
                    if c.is_alphanumeric() || c == '_' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::standard(&["x", "y", "z", "t"], 32003).unwrap()
    }

    #[test]
    fn generator_round_trips() {
        let r = ring();
        let f = r.parse("x*t+y*t+t^2").unwrap();
        assert_eq!(r.format(&f), "x*t+y*t+t^2");
        assert_eq!(r.parse(&r.format(&f)).unwrap(), f);
        let one = r.one();
        assert_eq!(r.mul(&f, &one), f);
    }

    #[test]
    fn negative_and_scaled_terms() {
        let r = ring();
        let f = r.parse("(x+y)*(x-y)").unwrap();
        assert_eq!(r.format(&f), "x^2-y^2");
        let g = r.parse("-3*x*y + 2 - 32003*z").unwrap();
        assert_eq!(r.format(&g), "-3*x*y+2");
        assert_eq!(r.format(&Poly::zero()), "0");
    }

    #[test]
    fn reports_positions() {
        let r = ring();
        match r.parse("x + w") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (1, 5)),
            other => panic!("{other:?}"),
        }
        assert!(r.parse("x +").is_err());
        assert!(r.parse("(x").is_err());
    }
}
