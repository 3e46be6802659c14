use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Monomial, MonomialOrder, MultiPoly, VarContext};
use crate::error::{Error, Result};

fn write_monomial(f: &mut fmt::Formatter<'_>, ctx: &VarContext, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ctx.names()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, self.context(), m)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '^' | '(' | ')' => {
                out.push(match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Int(s.parse().expect("digits")));
            }
            _ if c.is_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Name(chars[start..i].iter().collect()));
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ctx: &'a VarContext,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Token> {
        self.pos += 1;
        self.tokens.get(self.pos - 1)
    }

    fn sum(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.ctx);
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Token::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let term = self.product()?;
            acc = if sign < 0 { &acc - &term } else { &acc + &term };
            match self.peek() {
                Some(Token::Plus) => sign = 1,
                Some(Token::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.bump() {
            Some(Token::Int(e)) => {
                let e: u32 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                Ok(base.pow(e))
            }
            _ => Err(Error::Parse("expected integer exponent".into())),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let ctx = self.ctx;
        match self.bump() {
            Some(Token::Int(v)) => Ok(MultiPoly::constant(ctx, v.clone())),
            Some(Token::Name(n)) => {
                let i = ctx.index_of(n).ok_or_else(|| Error::Parse(format!("unknown variable {n:?}")))?;
                Ok(MultiPoly::var(ctx, i))
            }
            Some(Token::Open) => {
                let inner = self.sum()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(Error::Parse("missing ')'".into())),
                }
            }
            Some(Token::Minus) => Ok(-self.atom()?),
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

impl MultiPoly {
    /// Parses sums of signed products of integers and variables of `ctx`,
    /// with `^` exponents and parentheses. Accepts everything `Display` emits.
    pub fn parse(text: &str, ctx: &VarContext) -> Result<Self> {
        let mut p = Parser { tokens: tokenize(text)?, pos: 0, ctx };
        if p.tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let poly = p.sum()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
        }
        Ok(poly.with_order(MonomialOrder::default()))
    }

    /// `parse` in a given monomial order.
    pub fn parse_with_order(text: &str, ctx: &VarContext, order: MonomialOrder) -> Result<Self> {
        Ok(Self::parse(text, ctx)?.with_order(order))
    }
}
