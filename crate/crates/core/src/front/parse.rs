//! Expression parser.
//!
//! Grammar (products need an explicit `*`, `i` is the imaginary unit):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | 'i' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NCPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Integer(BigInt),
    ImaginaryUnit,
    Generator(u16),
    Neg(Box<ExprAst>),
    Sum(Box<ExprAst>, Box<ExprAst>),
    Difference(Box<ExprAst>, Box<ExprAst>),
    Product(Box<ExprAst>, Box<ExprAst>),
    /// Division by a scalar; the byte offset is kept for error reporting.
    Quotient(Box<ExprAst>, Box<ExprAst>, usize),
    Power(Box<ExprAst>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
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
}

fn err(pos: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k];
        let start = k;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                k += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                let n: BigInt = text[start..k].parse().expect("digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                    k += 1;
                }
                out.push((Tok::Ident(text[start..k].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(err(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
        k += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, o)| o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = ExprAst::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = ExprAst::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = ExprAst::Product(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.offset();
                    lhs = ExprAst::Quotient(Box::new(lhs), Box::new(self.unary()?), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<ExprAst> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(ExprAst::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<ExprAst> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let e = u32::try_from(n).map_err(|_| err(at, "exponent too large"))?;
                Ok(ExprAst::Power(Box::new(base), e))
            }
            _ => Err(err(at, "exponent must be a nonnegative integer literal")),
        }
    }

    fn atom(&mut self) -> Result<ExprAst> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(ExprAst::Integer(n)),
            Some(Tok::Ident(name)) if name == "i" => Ok(ExprAst::ImaginaryUnit),
            Some(Tok::Ident(name)) => match self.alphabet.index_of(&name) {
                Some(g) => Ok(ExprAst::Generator(g)),
                None => Err(err(at, format!("unknown identifier `{name}`"))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(close, "expected `)`")),
                }
            }
            Some(t) => Err(err(at, format!("unexpected token {}", describe(&t)))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

/// Parses `text` into an AST over `alphabet`.
pub fn parse_ast(text: &str, alphabet: &Alphabet) -> Result<ExprAst> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let ast = p.expr()?;
    if p.pos < p.toks.len() {
        let at = p.offset();
        let t = p.bump().expect("token");
        let message = match t {
            Tok::Ident(_) | Tok::Int(_) | Tok::LParen => {
                format!(
                    "expected an operator before {} (products need `*`)",
                    describe(&t)
                )
            }
            _ => format!("unexpected token {}", describe(&t)),
        };
        return Err(err(at, message));
    }
    Ok(ast)
}

/// Lowers an AST to a canonical polynomial.
pub fn lower(ast: &ExprAst) -> Result<NCPoly> {
    Ok(match ast {
        ExprAst::Integer(n) => NCPoly::constant(GaussianRational::from_rational(
            Rational::from_integer(n.clone()),
        )),
        ExprAst::ImaginaryUnit => NCPoly::constant(GaussianRational::i()),
        ExprAst::Generator(g) => NCPoly::generator(*g),
        ExprAst::Neg(a) => -lower(a)?,
        ExprAst::Sum(a, b) => &lower(a)? + &lower(b)?,
        ExprAst::Difference(a, b) => &lower(a)? - &lower(b)?,
        ExprAst::Product(a, b) => &lower(a)? * &lower(b)?,
        ExprAst::Quotient(a, b, at) => {
            let d = lower(b)?
                .as_scalar()
                .ok_or_else(|| err(*at, "division by a non-scalar"))?;
            if d.is_zero() {
                return Err(err(*at, "division by zero"));
            }
            lower(a)?.scale(&d.inv()?)
        }
        ExprAst::Power(a, e) => {
            let base = lower(a)?;
            let mut acc = NCPoly::one();
            for _ in 0..*e {
                acc = &acc * &base;
            }
            acc
        }
    })
}

/// Parses `text` over `alphabet` into a canonical polynomial.
pub fn parse_expr(text: &str, alphabet: &Alphabet) -> Result<NCPoly> {
    lower(&parse_ast(text, alphabet)?)
}

/// Parses an expression with no generators.
pub fn parse_scalar(text: &str) -> Result<GaussianRational> {
    let empty = Alphabet::new(Vec::<String>::new())?;
    parse_expr(text, &empty)?
        .as_scalar()
        .ok_or_else(|| err(0, "not a scalar"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::GaussianRational as G;
    use crate::freealg::Word;

    fn sl2() -> Alphabet {
        Alphabet::new(["E", "F", "H"]).unwrap()
    }

    #[test]
    fn racah_image_of_a_expands_freely() {
        let a = sl2();
        let p = parse_expr("(E+F-2)*(E+F+2)/16", &a).unwrap();
        // E^2, EF, FE, F^2 at 1/16, constant -1/4; the linear terms cancel.
        assert_eq!(p.len(), 5);
        assert_eq!(p.coefficient(&Word::empty()), G::frac(-1, 4));
        assert_eq!(
            p.coefficient(&Word::from_letters(vec![1, 0])),
            G::frac(1, 16)
        );
    }

    #[test]
    fn simple_forms() {
        let a = sl2();
        let h = a.gen("H");
        assert_eq!(
            parse_expr("H^2 - 4", &a).unwrap(),
            &(&h * &h) - &NCPoly::constant(G::from(4))
        );
        let j = Alphabet::new(["J_1", "J_2", "J_3"]).unwrap();
        let r = parse_expr("J_1*J_2 + J_2*J_1 - J_3", &j).unwrap();
        let expected =
            &crate::freealg::anticommutator(&j.gen("J_1"), &j.gen("J_2")) - &j.gen("J_3");
        assert_eq!(r, expected);
    }

    #[test]
    fn imaginary_unit_and_unary_minus() {
        let so3 = Alphabet::new(["I_1", "I_2", "I_3"]).unwrap();
        let p = parse_expr("-(I_1-i)*(I_1+i)/4", &so3).unwrap();
        let expected = parse_expr("-I_1^2/4 - 1/4", &so3).unwrap();
        assert_eq!(p, expected);
        assert_eq!(
            parse_expr("-H^2", &sl2()).unwrap(),
            -&parse_expr("H*H", &sl2()).unwrap()
        );
    }

    #[test]
    fn errors_carry_positions() {
        let a = sl2();
        let cases = [
            ("E + X", 4),
            ("2E", 1),
            ("E $ F", 2),
            ("E^-1", 2),
            ("E/F", 2),
            ("E/(1-1)", 2),
            ("(E + F", 6),
            ("E +", 3),
        ];
        for (text, at) in cases {
            match parse_expr(text, &a) {
                Err(Error::Parse { pos, .. }) => assert_eq!(pos, at, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn scalars() {
        assert_eq!(
            parse_scalar("1/2 + 3/4*i").unwrap(),
            G::new(crate::arith::rational(1, 2), crate::arith::rational(3, 4))
        );
        assert!(parse_scalar("E").is_err());
    }
}
