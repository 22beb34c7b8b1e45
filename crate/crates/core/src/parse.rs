//! Text syntax for words.
//!
//! ```text
//! word   := factor ( ('*' | whitespace) factor )*
//! factor := atom [ '^' ( integer | '(' word ')' | atom ) ]
//! atom   := 'x' digits | '1' | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! `a^(b)` conjugates with `b · a · b⁻¹` and `[a,b]` is `a⁻¹ b⁻¹ a b`. The
//! atom `1` stands for the empty word.

use thiserror::Error;

use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

/// Parses `text` in a free group of the given rank.
pub fn parse_word(text: &str, rank: usize) -> Result<Word, ParseError> {
    let mut parser = Parser::new(text, Some(rank));
    parser.finish()
}

/// Parses `text`, taking the rank to be the largest generator index used
/// (at least `min_rank`).
pub fn parse_word_inferred(text: &str, min_rank: usize) -> Result<Word, ParseError> {
    let probe = Parser::new(text, None).max_index()?;
    parse_word(text, probe.max(min_rank).max(1))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    rank: Option<usize>,
}

impl Parser {
    fn new(text: &str, rank: Option<usize>) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, rank }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.pos + 1, message: message.into() })
    }

    fn max_index(mut self) -> Result<usize, ParseError> {
        let mut max = 0;
        while self.pos < self.chars.len() {
            if self.chars[self.pos] == 'x' {
                self.pos += 1;
                let index = self.digits()?;
                max = max.max(index as usize);
            } else {
                self.pos += 1;
            }
        }
        Ok(max)
    }

    fn finish(&mut self) -> Result<Word, ParseError> {
        let word = self.word()?;
        self.skip_ws();
        if self.pos < self.chars.len() {
            return self.error(format!("unexpected '{}'", self.chars[self.pos]));
        }
        Ok(word)
    }

    fn rank(&self) -> usize {
        self.rank.unwrap_or(usize::MAX)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut acc = Word::empty(self.rank());
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') if !first => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some('x' | '1' | '(' | '[') => {}
                _ if first => return self.error("expected a word"),
                _ => return Ok(acc),
            }
            let factor = self.factor()?;
            acc = if first { factor } else { &acc * &factor };
            first = false;
        }
    }

    fn factor(&mut self) -> Result<Word, ParseError> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.pos += 1;
        self.skip_ws();
        match self.peek() {
            Some('-' | '+' | '0'..='9') => {
                let exp = self.integer()?;
                Ok(atom.pow(exp))
            }
            Some('(' | 'x' | '[') => {
                let by = self.atom()?;
                Ok(atom.conjugated_by(&by).expect("ranks agree within one parse"))
            }
            _ => self.error("expected an exponent or a conjugating word"),
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('x') => {
                let start = self.pos;
                self.pos += 1;
                let index = self.digits()?;
                if index == 0 || index as usize > self.rank() {
                    self.pos = start;
                    return self.error(format!(
                        "generator x{index} outside rank {}",
                        self.rank()
                    ));
                }
                Ok(Word::free_reduce([Letter::pos(index)], self.rank()).expect("index checked"))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Word::empty(self.rank()))
            }
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                Ok(a.commutator(&b).expect("ranks agree within one parse"))
            }
            _ => self.error("expected a generator, '1', '(' or '['"),
        }
    }

    fn digits(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().or_else(|_| {
            self.pos = start;
            self.error("generator index too large")
        })
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        match s.parse::<i64>() {
            Ok(v) if v.unsigned_abs() <= 10_000 => Ok(v),
            _ => {
                self.pos = start;
                self.error("invalid exponent")
            }
        }
    }
}
