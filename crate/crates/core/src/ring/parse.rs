//! Parser for the text rendering: integers, variables, `+ - * / ^` and
//! parentheses, with `*` optional between factors.

use super::int::Int;
use super::poly::{LaurentPoly, VariableContext};
use super::ratfunc::RatFunc;
use super::render::Naming;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Int),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| Error::Parse(format!("bad integer {text}")))?));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let ident: String = chars[start..i].iter().filter(|&&c| c != '_').collect();
            out.push(Tok::Ident(ident));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ctx: VariableContext,
    naming: &'a Naming,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.checked_mul(&self.unary()?)?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                acc = acc.checked_div(&d)?;
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                acc = acc.checked_mul(&self.power()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let negative = self.eat('-');
        let k = match self.toks.get(self.pos) {
            Some(Tok::Num(k)) => k.as_i64().and_then(|k| i32::try_from(k).ok()),
            _ => None,
        }
        .ok_or_else(|| Error::Parse("expected an integer exponent".into()))?;
        self.pos += 1;
        if paren && !self.eat(')') {
            return Err(Error::Parse("missing ')' after exponent".into()));
        }
        let k = if negative { -k } else { k };
        if k < 0 && base.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        base.pow(k)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(c)) => {
                self.pos += 1;
                Ok(RatFunc::constant(self.ctx, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let v = self
                    .naming
                    .lookup(&self.ctx, &name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable '{name}'")))?;
                Ok(RatFunc::var(self.ctx, v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses a rational function written with the given variable names.
pub fn parse_ratfunc(s: &str, ctx: VariableContext, naming: &Naming) -> Result<RatFunc> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, ctx, naming };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(r)
}

/// Parses a Laurent polynomial; fails if the expression has a genuine
/// denominator.
pub fn parse_poly(s: &str, ctx: VariableContext, naming: &Naming) -> Result<LaurentPoly> {
    parse_ratfunc(s, ctx, naming)?
        .into_laurent()
        .map_err(|_| Error::Parse("expression is not a Laurent polynomial".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_rendered_text() {
        let c = VariableContext::new(3, true, true).unwrap();
        let r = parse_ratfunc("(1 + y*t3/(u t1)) / (1 - t3/(u*t1)) - 2t2^-1", c, &Naming::Standard).unwrap();
        let text = Naming::Standard.ratfunc(&r);
        assert_eq!(parse_ratfunc(&text, c, &Naming::Standard).unwrap(), r);
        let p = parse_poly("(t1 - t2)^2", c, &Naming::Standard).unwrap();
        assert_eq!(Naming::Standard.poly(&p), "t1^2 - 2*t1*t2 + t2^2");
    }

    #[test]
    fn rejects_garbage() {
        let c = VariableContext::plain(2);
        assert!(parse_ratfunc("t1 +", c, &Naming::Standard).is_err());
        assert!(parse_ratfunc("t3", c, &Naming::Standard).is_err());
        assert!(parse_ratfunc("1/(t1 - t1)", c, &Naming::Standard).is_err());
        assert!(parse_poly("1/(t1 - t2)", c, &Naming::Standard).is_err());
    }
}
