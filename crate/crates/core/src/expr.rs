//! Tiny recursive-descent parser for noncommutative polynomial expressions
//! such as `x0*x3 - x1*x2`, `2*x0^2 + 1/2*x1*x1` or `(x0 + x1)*(x0 - x1)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{parse_scalar, Scalar};

/// Noncommutative polynomial: word (generator indices) -> coefficient.
pub type WordPoly = BTreeMap<Vec<usize>, Scalar>;

pub fn parse_expression(src: &str, generators: &[String]) -> Result<WordPoly> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        generators,
    };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("unexpected trailing input in {src:?}")));
    }
    Ok(out)
}

/// Parses a homogeneous expression of the given degree into a coefficient
/// vector over all words of that length (index = base-`g` digits of the word).
pub fn parse_homogeneous(src: &str, generators: &[String], degree: usize) -> Result<Vec<Scalar>> {
    let poly = parse_expression(src, generators)?;
    let g = generators.len();
    let mut v = vec![Scalar::zero(); g.pow(degree as u32)];
    for (word, c) in poly {
        if word.len() != degree {
            return Err(Error::Invalid(format!(
                "expression {src:?} is not homogeneous of degree {degree}"
            )));
        }
        let idx = word.iter().fold(0, |acc, &i| acc * g + i);
        v[idx] += c;
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            // a rational literal p/q binds tighter than division would
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else if c == '−' {
            out.push(Token::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    generators: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<WordPoly> {
        let mut acc = if self.eat_op('-') {
            negate(&self.term()?)
        } else {
            self.eat_op('+');
            self.term()?
        };
        loop {
            if self.eat_op('+') {
                acc = add(&acc, &self.term()?);
            } else if self.eat_op('-') {
                acc = add(&acc, &negate(&self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<WordPoly> {
        let mut acc = self.power()?;
        while self.eat_op('*') {
            acc = mul(&acc, &self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<WordPoly> {
        let base = self.atom()?;
        if self.eat_op('^') {
            let n = match self.tokens.get(self.pos) {
                Some(Token::Num(s)) => s
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent {s:?}")))?,
                _ => return Err(Error::Parse("expected exponent after '^'".into())),
            };
            self.pos += 1;
            let mut out = one();
            for _ in 0..n {
                out = mul(&out, &base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<WordPoly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(s)) => {
                self.pos += 1;
                let c = parse_scalar(&s)?;
                Ok(constant(c))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .generators
                    .iter()
                    .position(|g| *g == name)
                    .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
                let mut p = WordPoly::new();
                p.insert(vec![idx], Scalar::from_integer(1.into()));
                Ok(p)
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat_op(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(negate(&self.power()?))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn one() -> WordPoly {
    constant(Scalar::from_integer(1.into()))
}

fn constant(c: Scalar) -> WordPoly {
    let mut p = WordPoly::new();
    if !c.is_zero() {
        p.insert(Vec::new(), c);
    }
    p
}

fn negate(a: &WordPoly) -> WordPoly {
    a.iter().map(|(w, c)| (w.clone(), -c)).collect()
}

fn add(a: &WordPoly, b: &WordPoly) -> WordPoly {
    let mut out = a.clone();
    for (w, c) in b {
        let e = out.entry(w.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            out.remove(w);
        }
    }
    out
}

fn mul(a: &WordPoly, b: &WordPoly) -> WordPoly {
    let mut out = WordPoly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend(wb);
            let e = out.entry(w.clone()).or_insert_with(Scalar::zero);
            *e += ca * cb;
            if e.is_zero() {
                out.remove(&w);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{ratio, scalar};

    fn gens() -> Vec<String> {
        (0..4).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn parses_quadric() {
        let v = parse_homogeneous("x0*x3-x1*x2", &gens(), 2).unwrap();
        assert_eq!(v[3], scalar(1));
        assert_eq!(v[4 + 2], scalar(-1));
        assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 2);
    }

    #[test]
    fn powers_and_rationals() {
        let v = parse_homogeneous("2*x0^2 + 1/2*x1*x1 - x2^2", &gens(), 2).unwrap();
        assert_eq!(v[0], scalar(2));
        assert_eq!(v[5], ratio(1, 2));
        assert_eq!(v[10], scalar(-1));
    }

    #[test]
    fn products_are_noncommutative() {
        let p = parse_expression("(x0+x1)*(x0-x1)", &gens()).unwrap();
        assert_eq!(p.get(&vec![0, 1]), Some(&scalar(-1)));
        assert_eq!(p.get(&vec![1, 0]), Some(&scalar(1)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_expression("x9*x0", &gens()).is_err());
        assert!(parse_homogeneous("x0 + x1*x2", &gens(), 2).is_err());
        assert!(parse_expression("x0 $ x1", &gens()).is_err());
    }
}
