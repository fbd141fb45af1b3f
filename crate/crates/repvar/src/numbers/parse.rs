//! Text syntax for field elements and Laurent polynomials.
//!
//! Grammar: integers, `p/q`, `zeta(N)^k`, `t`, `t^-1`, with `+ - * /` and
//! parentheses. A parse happens inside a field context Q(zeta_N); any
//! `zeta(M)` must satisfy M | N so that the value embeds.

use super::{CyclotomicNumber, LaurentPoly, NumberError};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Zeta,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_tok(&mut self) -> Result<(Tok, usize), NumberError> {
        let save = self.pos;
        let t = self.next_tok()?;
        let at = self.pos;
        self.pos = save;
        Ok((t.0, at.min(t.1)))
    }

    fn next_tok(&mut self) -> Result<(Tok, usize), NumberError> {
        self.skip_ws();
        let at = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, at));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: i64 = text.parse().map_err(|_| NumberError::Syntax {
                    pos: start,
                    msg: format!("integer literal `{text}` out of range"),
                })?;
                return Ok((Tok::Int(n), at));
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return match word {
                    "zeta" => Ok((Tok::Zeta, at)),
                    "t" => Ok((Tok::T, at)),
                    _ => Err(NumberError::Syntax {
                        pos: start,
                        msg: format!("unknown symbol `{word}`"),
                    }),
                };
            }
            _ => {
                return Err(NumberError::Syntax {
                    pos: at,
                    msg: format!("unexpected character `{}`", c as char),
                })
            }
        };
        self.pos += 1;
        Ok((tok, at))
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    context_order: u32,
}

impl<'a> Parser<'a> {
    fn expect(&mut self, want: Tok) -> Result<(), NumberError> {
        let (t, at) = self.lex.next_tok()?;
        if t == want {
            Ok(())
        } else {
            Err(NumberError::Syntax {
                pos: at,
                msg: format!("expected {want:?}, found {t:?}"),
            })
        }
    }

    fn signed_int(&mut self) -> Result<i64, NumberError> {
        let (t, at) = self.lex.next_tok()?;
        match t {
            Tok::Int(n) => Ok(n),
            Tok::Minus => {
                let (t2, at2) = self.lex.next_tok()?;
                match t2 {
                    Tok::Int(n) => Ok(-n),
                    _ => Err(NumberError::Syntax {
                        pos: at2,
                        msg: "expected integer after `-`".into(),
                    }),
                }
            }
            _ => Err(NumberError::Syntax {
                pos: at,
                msg: "expected integer".into(),
            }),
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, NumberError> {
        let mut acc = self.term()?;
        loop {
            let (t, _) = self.lex.peek_tok()?;
            match t {
                Tok::Plus => {
                    self.lex.next_tok()?;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.lex.next_tok()?;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, NumberError> {
        let mut acc = self.factor()?;
        loop {
            let (t, at) = self.lex.peek_tok()?;
            match t {
                Tok::Star => {
                    self.lex.next_tok()?;
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    self.lex.next_tok()?;
                    let rhs = self.factor()?;
                    if rhs.is_zero() {
                        return Err(NumberError::DivisionByZero);
                    }
                    acc = acc.div_exact(&rhs).ok_or(NumberError::Syntax {
                        pos: at,
                        msg: "division is not exact in K[t, t^-1]".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly, NumberError> {
        let (t, at) = self.lex.next_tok()?;
        let base = match t {
            Tok::Minus => return Ok(-self.factor()?),
            Tok::Int(n) => LaurentPoly::int(n),
            Tok::T => LaurentPoly::variable(),
            Tok::Zeta => {
                self.expect(Tok::LParen)?;
                let order = self.signed_int()?;
                self.expect(Tok::RParen)?;
                if order < 1 {
                    return Err(NumberError::Syntax {
                        pos: at,
                        msg: "zeta order must be positive".into(),
                    });
                }
                let order = order as u32;
                if !self.context_order.is_multiple_of(order) {
                    return Err(NumberError::UnrepresentableInput {
                        found: order,
                        context: self.context_order,
                    });
                }
                LaurentPoly::constant(CyclotomicNumber::zeta(order))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                inner
            }
            other => {
                return Err(NumberError::Syntax {
                    pos: at,
                    msg: format!("unexpected token {other:?}"),
                })
            }
        };
        let (t, _) = self.lex.peek_tok()?;
        if t == Tok::Caret {
            self.lex.next_tok()?;
            let e = self.signed_int()?;
            if e >= 0 {
                return Ok(base.pow(e as u32));
            }
            // negative powers exist only for units of the Laurent ring
            let inv = LaurentPoly::one()
                .div_exact(&base)
                .ok_or(NumberError::Syntax {
                    pos: self.lex.pos,
                    msg: "negative power of a non-unit".into(),
                })?;
            return Ok(inv.pow(e.unsigned_abs() as u32));
        }
        Ok(base)
    }
}

/// Parse a Laurent polynomial in the context field Q(zeta_N).
pub fn parse_laurent(text: &str, context_order: u32) -> Result<LaurentPoly, NumberError> {
    let mut p = Parser {
        lex: Lexer::new(text),
        context_order,
    };
    let out = p.expr()?;
    let (t, at) = p.lex.next_tok()?;
    if t != Tok::End {
        return Err(NumberError::Syntax {
            pos: at,
            msg: format!("trailing input {t:?}"),
        });
    }
    Ok(out)
}

/// Parse a field element: a Laurent expression without the variable t.
pub fn parse_field_element(text: &str, context_order: u32) -> Result<CyclotomicNumber, NumberError> {
    let p = parse_laurent(text, context_order)?;
    if p.is_zero() {
        return Ok(CyclotomicNumber::int(0));
    }
    if p.lowest_exponent() != 0 || p.highest_exponent() != 0 {
        return Err(NumberError::Syntax {
            pos: 0,
            msg: "expected a field element, found the variable t".into(),
        });
    }
    Ok(p.coeff(0))
}
