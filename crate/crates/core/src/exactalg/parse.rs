use std::str::FromStr;

use num_bigint::BigInt;

use super::rational::RationalFunction;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Int(digits.parse().expect("digits")));
        } else if ch == 'u' {
            let start = i + 1;
            i = start;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(Error::Parse(format!("expected variable index after 'u' at {start}")));
            }
            let digits: String = chars[start..i].iter().collect();
            let v = digits
                .parse()
                .map_err(|_| Error::Parse(format!("variable index too large: u{digits}")))?;
            out.push(Token::Var(v));
        } else if "+-*/^()".contains(ch) {
            out.push(Token::Op(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {ch:?} at {i}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expect_op(&mut self, c: char) -> Result<()> {
        if self.peek_op() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{c}' at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' { &acc * &rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek_op() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = match self.tokens.get(self.pos) {
            Some(Token::Int(k)) => u32::try_from(k.clone())
                .map_err(|_| Error::Parse(format!("exponent too large: {k}")))?,
            _ => return Err(Error::Parse(format!("expected exponent at token {}", self.pos))),
        };
        self.pos += 1;
        let p = base.pow(e);
        if negative {
            p.inverse()
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(k) => Ok(RationalFunction::integer(k)),
            Token::Var(v) => Ok(RationalFunction::var(v)),
            Token::Op('(') => {
                let inner = self.expr()?;
                self.expect_op(')')?;
                Ok(inner)
            }
            Token::Op(c) => Err(Error::Parse(format!("unexpected '{c}'"))),
        }
    }
}

/// Parses the canonical text form (and any expression over `+ - * / ^`,
/// parentheses, integers and variables `u<index>`).
pub fn parse_rational(s: &str) -> Result<RationalFunction> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(value)
}

impl FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings_roundtrip() {
        for s in [
            "(u1*u2*u4*u5 + u3^2 + 2*u3 + 1)/(u3*u4*u5)",
            "(u3^2 + 2*u3 + 1)/(u1*u2)",
            "-u2/u1",
            "u2/(3*u1)",
            "17",
            "0",
        ] {
            let f = parse_rational(s).unwrap();
            assert_eq!(f.to_string(), s);
        }
    }

    #[test]
    fn unreduced_input_is_canonicalized() {
        let f = parse_rational("(u1*u2 + u1*u3)/u1").unwrap();
        assert_eq!(f.to_string(), "u3 + u2");
        let g = parse_rational("(1+u3)^2/(u1*u2)").unwrap();
        assert_eq!(g.to_string(), "(u3^2 + 2*u3 + 1)/(u1*u2)");
    }

    #[test]
    fn malformed_input() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("u").is_err());
        assert!(parse_rational("(u1").is_err());
        assert!(parse_rational("u1 u2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}
