//! Recursive-descent parser for word expressions.
//!
//! ```text
//! word  := atom+
//! atom  := base power?
//! base  := 'c' digit | '(' word ')' | '[' word ',' word ']'
//! power := '^' signed-integer
//! ```
//!
//! Whitespace is ignored. `[x,y]` denotes `x y x^-1 y^-1`. A blank input is
//! the identity.

use super::{MCGWord, WordError, NUM_GENERATORS};

/// Upper bound on `Σ|e|` for parsed words.
pub const MAX_WORD_LENGTH: u64 = 1_000_000;

pub fn parse_word(text: &str) -> Result<MCGWord, WordError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Ok(MCGWord::identity());
    }
    let w = p.word()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(w)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> WordError {
        WordError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), WordError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(match self.peek() {
                Some(found) => format!("expected '{c}', found '{found}'"),
                None => format!("expected '{c}', found end of input"),
            }))
        }
    }

    fn word(&mut self) -> Result<MCGWord, WordError> {
        let mut w = self.atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('c') | Some('(') | Some('[') => {
                    let a = self.atom()?;
                    w = w.concat(&a);
                    check_length(&w, self.pos)?;
                }
                _ => return Ok(w),
            }
        }
    }

    fn atom(&mut self) -> Result<MCGWord, WordError> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let exponent = self.signed_integer()?;
        if base.length().saturating_mul(exponent.unsigned_abs()) > MAX_WORD_LENGTH {
            return Err(self.error(format!("word longer than {MAX_WORD_LENGTH} letters")));
        }
        Ok(base.pow(exponent))
    }

    fn base(&mut self) -> Result<MCGWord, WordError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('c') => {
                self.pos += 1;
                let digits = self.digits();
                if digits.is_empty() {
                    return Err(self.error("expected generator index after 'c'"));
                }
                match digits.parse::<u64>() {
                    Ok(i) if (1..=NUM_GENERATORS as u64).contains(&i) => {
                        MCGWord::generator(i as u8)
                    }
                    _ => Err(WordError::BadGenerator {
                        position: start,
                        generator: format!("c{digits}"),
                    }),
                }
            }
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(',')?;
                let y = self.word()?;
                self.expect(']')?;
                Ok(MCGWord::commutator(&x, &y))
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn signed_integer(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let mut negative = false;
        match self.peek() {
            Some('-') => {
                negative = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected integer exponent"));
        }
        let magnitude: i64 = digits
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -magnitude } else { magnitude })
    }
}

fn check_length(w: &MCGWord, position: usize) -> Result<(), WordError> {
    if w.length() > MAX_WORD_LENGTH {
        Err(WordError::Parse {
            position,
            message: format!("word longer than {MAX_WORD_LENGTH} letters"),
        })
    } else {
        Ok(())
    }
}
