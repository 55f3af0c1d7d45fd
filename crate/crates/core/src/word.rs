//! Word expressions in named generators.
//!
//! ```text
//! expr := term ('*' term)*
//! term := atom ('^' signed-integer)?
//! atom := name | '(' expr ')'
//! ```
//!
//! Products are left-associative and exponents bind tighter than products.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Gen(String),
    Product(Box<Word>, Box<Word>),
    Power(Box<Word>, i64),
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::WordParse {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expr(&mut self) -> Result<Word> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = Word::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            return Ok(Word::Power(Box::new(base), e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            return self.fail(&["integer"]);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().or_else(|_| {
            self.pos = start;
            self.fail(&["integer"])
        })
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.fail(&["')'", "'*'", "'^'"]);
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Word::Gen(name.to_string()))
            }
            _ => self.fail(&["name", "'('"]),
        }
    }
}

/// Parses a word expression; positions in errors are byte offsets.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let w = p.expr()?;
    if p.peek().is_some() {
        return p.fail(&["'*'", "'^'", "end of input"]);
    }
    Ok(w)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(n) => write!(f, "{n}"),
            Word::Product(l, r) => match **r {
                Word::Product(..) => write!(f, "{l}*({r})"),
                _ => write!(f, "{l}*{r}"),
            },
            Word::Power(b, e) => match **b {
                Word::Gen(_) => write!(f, "{b}^{e}"),
                _ => write!(f, "({b})^{e}"),
            },
        }
    }
}

impl Word {
    pub fn generators(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Word::Gen(n) => out.push(n),
            Word::Product(l, r) => {
                l.collect(out);
                r.collect(out);
            }
            Word::Power(b, _) => b.collect(out),
        }
    }

    /// Evaluates the word exactly.
    pub fn eval<S: Scalar>(&self, gens: &BTreeMap<String, Matrix<S>>) -> Result<Matrix<S>> {
        match self {
            Word::Gen(n) => gens
                .get(n)
                .cloned()
                .ok_or_else(|| Error::UnknownGenerator(n.clone())),
            Word::Product(l, r) => l.eval(gens)?.try_mul(&r.eval(gens)?),
            Word::Power(b, e) => b.eval(gens)?.pow(*e),
        }
    }
}

/// `members[0]^e0 * members[1]^e1 * ...`, skipping zero exponents.
pub fn monomial_word(members: &[Word], exponents: &[i64]) -> Option<Word> {
    members
        .iter()
        .zip(exponents)
        .filter(|(_, &e)| e != 0)
        .map(|(w, &e)| {
            if e == 1 {
                w.clone()
            } else {
                Word::Power(Box::new(w.clone()), e)
            }
        })
        .reduce(|acc, w| Word::Product(Box::new(acc), Box::new(w)))
}

/// Parses and evaluates in one step.
pub fn word_eval<S: Scalar>(expr: &str, gens: &BTreeMap<String, Matrix<S>>) -> Result<Matrix<S>> {
    parse_word(expr)?.eval(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QMatrix;

    fn gen(n: &str) -> Box<Word> {
        Box::new(Word::Gen(n.into()))
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_word("a*b^-2").unwrap(),
            Word::Product(gen("a"), Box::new(Word::Power(gen("b"), -2)))
        );
        assert_eq!(
            parse_word("(a*b)^3").unwrap(),
            Word::Power(Box::new(Word::Product(gen("a"), gen("b"))), 3)
        );
        match parse_word("a**b") {
            Err(Error::WordParse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_word("a^").is_err());
        assert!(parse_word("(a").is_err());
        assert!(parse_word("").is_err());
    }

    #[test]
    fn render_reparses() {
        for s in ["a", "a*b^-2", "(a*b)^3", "a*(b*c)", "((a^2)^3)^-1", "a^0"] {
            let w = parse_word(s).unwrap();
            assert_eq!(parse_word(&w.to_string()).unwrap(), w, "{s}");
        }
    }

    #[test]
    fn evaluation() {
        let mut gens = BTreeMap::new();
        gens.insert("a".to_string(), QMatrix::from_i64(&[&[1, 1], &[0, 1]]));
        gens.insert("b".to_string(), QMatrix::from_i64(&[&[1, 0], &[1, 1]]));
        assert_eq!(word_eval("a", &gens).unwrap(), gens["a"]);
        assert!(word_eval("a*a^-1", &gens).unwrap().is_identity());
        assert_eq!(
            word_eval("a^2*b", &gens).unwrap(),
            QMatrix::from_i64(&[&[3, 2], &[1, 1]])
        );
        assert_eq!(
            word_eval("c", &gens),
            Err(Error::UnknownGenerator("c".into()))
        );
    }

    #[test]
    fn monomials() {
        let names = vec![Word::Gen("a".into()), Word::Gen("b".into())];
        assert_eq!(
            monomial_word(&names, &[2, -1]).unwrap().to_string(),
            "a^2*b^-1"
        );
        assert_eq!(monomial_word(&names, &[1, 0]).unwrap().to_string(), "a");
        assert!(monomial_word(&names, &[0, 0]).is_none());
        let center = parse_word("a*b*a^-1*b^-1").unwrap();
        let w = monomial_word(&[Word::Gen("c".into()), center.clone()], &[1, 1]).unwrap();
        assert_eq!(w.to_string(), "c*(a*b*a^-1*b^-1)");
        assert_eq!(
            monomial_word(&[center], &[3]).unwrap().to_string(),
            "(a*b*a^-1*b^-1)^3"
        );
    }
}
