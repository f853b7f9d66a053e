//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*'? factor)*
//! factor   := base ('^' uint)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Juxtaposition only multiplies when the left side ends in `)` or a
//! variable and the right side starts with `(` or a variable.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::MAX_EXPONENT;
use super::{AmbientRing, ExprError, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(ExprError::Syntax {
                    position: start,
                    expected: "a number, variable, operator or parenthesis".into(),
                    found: format!("`{}`", src[start..].chars().next().unwrap_or(' ')),
                })
            }
        };
        out.push((start, tok));
        i += c.len_utf8();
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ambient: &'a Arc<AmbientRing>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ExprError {
        ExprError::Syntax {
            position: self.offset(),
            expected: expected.into(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ExprError> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.bump();
                -self.term()?
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ExprError> {
        let (mut acc, mut ends_juxtaposable) = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let (f, j) = self.factor()?;
                    acc = &acc * &f;
                    ends_juxtaposable = j;
                }
                Tok::LParen | Tok::Ident(_) if ends_juxtaposable => {
                    let (f, j) = self.factor()?;
                    acc = &acc * &f;
                    ends_juxtaposable = j;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// Returns the factor and whether it ends in `)` or a variable (possibly
    /// followed by an exponent), which permits implicit multiplication.
    fn factor(&mut self) -> Result<(Polynomial, bool), ExprError> {
        let (base, juxt) = self.base()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let k = match self.bump() {
                Tok::Int(n) => n,
                _ => {
                    self.pos -= 1;
                    return Err(self.error("an unsigned integer exponent"));
                }
            };
            if k >= BigInt::from(MAX_EXPONENT) {
                return Err(ExprError::ExponentOverflow);
            }
            let k: u32 = k.try_into().map_err(|_| ExprError::ExponentOverflow)?;
            let p = base.pow(k);
            if p.terms().any(|(m, _)| m.exponents().iter().any(|&e| u64::from(e) >= MAX_EXPONENT)) {
                return Err(ExprError::ExponentOverflow);
            }
            return Ok((p, juxt));
        }
        Ok((base, juxt))
    }

    fn base(&mut self) -> Result<(Polynomial, bool), ExprError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let mut value = Rational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        Tok::Int(d) if !d.is_zero() => value /= Rational::from_integer(d),
                        Tok::Int(_) => {
                            self.pos -= 1;
                            return Err(self.error("a non-zero denominator"));
                        }
                        _ => {
                            self.pos -= 1;
                            return Err(self.error("an unsigned integer denominator"));
                        }
                    }
                }
                Ok((Polynomial::constant(self.ambient, value), false))
            }
            Tok::Ident(name) => {
                let p = Polynomial::var_named(self.ambient, &name)
                    .ok_or_else(|| ExprError::UnknownVariable { name: name.clone() })?;
                self.bump();
                Ok((p, true))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok((inner, true))
            }
            _ => Err(self.error("a number, variable or `(`")),
        }
    }
}

/// Parses `src` into expanded normal form over `ambient`.
pub fn parse(src: &str, ambient: &Arc<AmbientRing>) -> Result<Polynomial, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, ambient };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("an operator or end of input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Monomial;

    fn ring() -> Arc<AmbientRing> {
        AmbientRing::new(&["x1", "x2"]).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn simple_difference() {
        let r = ring();
        let p = parse("x1^2 - x2^3", &r).unwrap();
        let expected = Polynomial::from_terms(
            &r,
            [(Monomial::new(vec![2, 0]), q(1)), (Monomial::new(vec![0, 3]), q(-1))],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn squared_binomial_plus_x1() {
        let r = ring();
        let p = parse("(x1^2 - x2^3)^2 + x1", &r).unwrap();
        assert_eq!(p.num_terms(), 4);
        let expected = parse("x1^4 - 2*x1^2*x2^3 + x2^6 + x1", &r).unwrap();
        assert_eq!(p, expected);
        assert_eq!(parse("x1 + (x1^2 - x2^3)^2", &r).unwrap(), p);
    }

    #[test]
    fn rationals_and_juxtaposition() {
        let r = ring();
        let p = parse("3/4 x1 x2 + (x1)(x2) - 1/4*x1*x2", &r);
        // `3/4 x1` juxtaposes a number with a variable, which is not allowed.
        assert!(matches!(p, Err(ExprError::Syntax { .. })));
        let p = parse("x1 x2 + (x1)(x2) - 3/2*x1*x2", &r).unwrap();
        assert_eq!(p, parse("1/2*x1*x2", &r).unwrap());
        assert_eq!(parse("x1(x2 + 1)", &r).unwrap(), parse("x1*x2 + x1", &r).unwrap());
    }

    #[test]
    fn errors_carry_position() {
        let r = ring();
        match parse("x1 + * x2", &r) {
            Err(ExprError::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        match parse("(x1 + x2", &r) {
            Err(ExprError::Syntax { position, expected, .. }) => {
                assert_eq!(position, 8);
                assert!(expected.contains(')'));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("x3 + 1", &r), Err(ExprError::UnknownVariable { name }) if name == "x3"));
        assert!(matches!(parse("x1^", &r), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("1/0", &r), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("x1 2", &r), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("x1^4294967296", &r), Err(ExprError::ExponentOverflow)));
    }

    #[test]
    fn unary_sign_and_zero() {
        let r = ring();
        assert_eq!(parse("-x1 + x1", &r).unwrap(), Polynomial::zero(&r));
        assert_eq!(parse("0", &r).unwrap().to_string(), "0");
        assert_eq!(parse("-(x1 - 1)", &r).unwrap().to_string(), "-x1 + 1");
    }

    #[test]
    fn canonical_printing_is_graded_lex() {
        let r = ring();
        let p = parse("x1 + (x1^2 - x2^3)^2", &r).unwrap();
        assert_eq!(p.to_string(), "x2^6 - 2*x1^2*x2^3 + x1^4 + x1");
        let p = parse("-3/2*x1*x2 + 7", &r).unwrap();
        assert_eq!(p.to_string(), "-3/2*x1*x2 + 7");
    }
}
