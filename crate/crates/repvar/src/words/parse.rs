//! Parser for the presentation grammar.
//!
//! ```text
//! gens x, y;
//! rel x^2 = y^3;
//! ab x=3, y=2;
//! ```
//!
//! Word expressions use juxtaposition for products, `^` for integer
//! exponents, `[u,v]` for commutators and parentheses for grouping. `1`
//! denotes the empty word. A relator written `u = v` is stored as the
//! single word `u v^-1`. Lines may carry `#` comments.

use super::{Presentation, Word, WordError};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Comma,
    Semi,
    Equals,
    Caret,
    LBracket,
    RBracket,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, WordError> {
    let bytes = src.as_bytes();
    let mut out = vec![];
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            _ if c.is_ascii_whitespace() => i += 1,
            b',' => {
                out.push((Tok::Comma, i));
                i += 1;
            }
            b';' => {
                out.push((Tok::Semi, i));
                i += 1;
            }
            b'=' => {
                out.push((Tok::Equals, i));
                i += 1;
            }
            b'^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            b'[' => {
                out.push((Tok::LBracket, i));
                i += 1;
            }
            b']' => {
                out.push((Tok::RBracket, i));
                i += 1;
            }
            b'(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            b'-' | b'0'..=b'9' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let n: i64 = text.parse().map_err(|_| WordError::Syntax {
                    pos: start,
                    msg: format!("bad integer `{text}`"),
                })?;
                out.push((Tok::Int(n), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Tok::Name(src[start..i].to_string()), start));
            }
            _ => {
                return Err(WordError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{}`", c as char),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.idx)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<(), WordError> {
        let pos = self.pos();
        match self.next() {
            Some(t) if &t == want => Ok(()),
            other => Err(WordError::Syntax {
                pos,
                msg: format!("expected {what}, found {other:?}"),
            }),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), WordError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Name(n)) if n == word => Ok(()),
            other => Err(WordError::Syntax {
                pos,
                msg: format!("expected `{word}`, found {other:?}"),
            }),
        }
    }

    fn name(&mut self) -> Result<(String, usize), WordError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Name(n)) => Ok((n, pos)),
            other => Err(WordError::Syntax {
                pos,
                msg: format!("expected a name, found {other:?}"),
            }),
        }
    }

    fn int(&mut self) -> Result<i64, WordError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            other => Err(WordError::Syntax {
                pos,
                msg: format!("expected an integer, found {other:?}"),
            }),
        }
    }

    fn word_expr(&mut self, names: &[String]) -> Result<Word, WordError> {
        let mut acc = Word::identity();
        let mut any = false;
        while matches!(
            self.peek(),
            Some(Tok::Name(_)) | Some(Tok::LBracket) | Some(Tok::LParen) | Some(Tok::Int(1))
        ) {
            acc = acc.mul(&self.word_factor(names)?);
            any = true;
        }
        if !any {
            return Err(WordError::Syntax {
                pos: self.pos(),
                msg: "expected a word".into(),
            });
        }
        Ok(acc)
    }

    fn word_factor(&mut self, names: &[String]) -> Result<Word, WordError> {
        let pos = self.pos();
        let base = match self.next() {
            Some(Tok::Name(n)) => match names.iter().position(|g| g == &n) {
                Some(i) => Word::generator(i),
                None => return Err(WordError::UnknownGenerator { name: n, pos }),
            },
            Some(Tok::Int(1)) => Word::identity(),
            Some(Tok::LBracket) => {
                let u = self.word_expr(names)?;
                self.expect(&Tok::Comma, "`,` in commutator")?;
                let v = self.word_expr(names)?;
                self.expect(&Tok::RBracket, "`]`")?;
                Word::commutator(&u, &v)
            }
            Some(Tok::LParen) => {
                let w = self.word_expr(names)?;
                self.expect(&Tok::RParen, "`)`")?;
                w
            }
            other => {
                return Err(WordError::Syntax {
                    pos,
                    msg: format!("expected a word, found {other:?}"),
                })
            }
        };
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let e = self.int()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

/// Parse the presentation grammar described in the module docs.
pub fn parse_presentation(text: &str) -> Result<Presentation, WordError> {
    let mut p = Parser {
        toks: lex(text)?,
        idx: 0,
        end: text.len(),
    };

    p.keyword("gens")?;
    let mut names = vec![];
    loop {
        let (n, pos) = p.name()?;
        if names.contains(&n) {
            let _ = pos;
            return Err(WordError::DuplicateGenerator { name: n });
        }
        names.push(n);
        match p.peek() {
            Some(Tok::Comma) => {
                p.next();
            }
            _ => break,
        }
    }
    p.expect(&Tok::Semi, "`;` after generators")?;

    p.keyword("rel")?;
    let mut relators = vec![];
    if p.peek() != Some(&Tok::Semi) {
        loop {
            let lhs = p.word_expr(&names)?;
            let relator = if p.peek() == Some(&Tok::Equals) {
                p.next();
                let rhs = p.word_expr(&names)?;
                lhs.mul(&rhs.inverse())
            } else {
                lhs
            };
            relators.push(relator);
            match p.peek() {
                Some(Tok::Comma) => {
                    p.next();
                }
                _ => break,
            }
        }
    }
    p.expect(&Tok::Semi, "`;` after relators")?;

    let mut abelianization = None;
    if let Some(Tok::Name(n)) = p.peek() {
        if n == "ab" {
            p.next();
            let mut phi = vec![0i64; names.len()];
            loop {
                let (n, pos) = p.name()?;
                let idx = names
                    .iter()
                    .position(|g| g == &n)
                    .ok_or(WordError::UnknownGenerator { name: n, pos })?;
                p.expect(&Tok::Equals, "`=` in ab clause")?;
                phi[idx] = p.int()?;
                match p.peek() {
                    Some(Tok::Comma) => {
                        p.next();
                    }
                    _ => break,
                }
            }
            p.expect(&Tok::Semi, "`;` after ab clause")?;
            abelianization = Some(phi);
        }
    }

    if p.idx != p.toks.len() {
        return Err(WordError::Syntax {
            pos: p.pos(),
            msg: "trailing input after presentation".into(),
        });
    }

    Presentation::new(names, relators, abelianization)
}
