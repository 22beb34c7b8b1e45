//! Text file formats for presentations and automorphisms.
//!
//! Presentation:
//!
//! ```text
//! rank 4
//! relator x1^2 x2^2 x3^2 x4^2
//! ```
//!
//! Automorphism (one line per generator, any order):
//!
//! ```text
//! rank 2
//! x1 -> x1 x2
//! x2 -> x2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::automorphisms::Endomorphism;
use crate::parse::parse_word;
use crate::small_cancellation::Presentation;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, column, message: message.into() })
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Strips `keyword` and following whitespace, returning the rest and the
/// column where it starts.
fn keyword<'a>(line: &'a str, keyword: &str) -> Option<(&'a str, usize)> {
    let indent = line.len() - line.trim_start().len();
    let rest = line.trim_start().strip_prefix(keyword)?;
    if !rest.starts_with(char::is_whitespace) {
        return None;
    }
    let gap = rest.len() - rest.trim_start().len();
    Some((rest.trim_start(), indent + keyword.len() + gap + 1))
}

fn parse_rank(lines: &mut dyn Iterator<Item = (usize, &str)>) -> Result<usize, FormatError> {
    let Some((no, line)) = lines.next() else {
        return err(1, 1, "missing `rank <n>` line");
    };
    let Some((rest, col)) = keyword(line, "rank") else {
        return err(no, 1, "expected `rank <n>`");
    };
    match rest.trim().parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => err(no, col, "rank must be a positive integer"),
    }
}

fn word_at(text: &str, rank: usize, line: usize, column: usize) -> Result<Word, FormatError> {
    parse_word(text, rank).or_else(|e| err(line, column + e.column - 1, e.message))
}

pub fn parse_presentation(text: &str) -> Result<Presentation, FormatError> {
    let mut lines = content_lines(text);
    let rank = parse_rank(&mut lines)?;
    let Some((no, line)) = lines.next() else {
        return err(2, 1, "missing `relator <word>` line");
    };
    let Some((rest, col)) = keyword(line, "relator") else {
        return err(no, 1, "expected `relator <word>`");
    };
    let relator = word_at(rest, rank, no, col)?;
    if let Some((extra, _)) = lines.next() {
        return err(extra, 1, "unexpected content after the relator");
    }
    Presentation::new(rank, relator).or_else(|e| err(no, col, e.to_string()))
}

pub fn write_presentation(p: &Presentation) -> String {
    format!("rank {}\nrelator {}\n", p.rank(), p.relator())
}

pub fn parse_endomorphism(text: &str) -> Result<Endomorphism, FormatError> {
    let mut lines = content_lines(text);
    let rank = parse_rank(&mut lines)?;
    let mut images: Vec<Option<Word>> = vec![None; rank];
    let mut last_line = 1;
    for (no, line) in lines {
        last_line = no;
        let Some((lhs, rhs)) = line.split_once("->") else {
            return err(no, 1, "expected `x<i> -> <word>`");
        };
        let lhs_t = lhs.trim();
        let index = lhs_t
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| (1..=rank).contains(&i));
        let Some(index) = index else {
            return err(no, 1, format!("`{lhs_t}` is not a generator of rank {rank}"));
        };
        if images[index - 1].is_some() {
            return err(no, 1, format!("x{index} is defined twice"));
        }
        let col = lhs.len() + 2 + (rhs.len() - rhs.trim_start().len()) + 1;
        images[index - 1] = Some(word_at(rhs.trim(), rank, no, col)?);
    }
    let mut out = Vec::with_capacity(rank);
    for (k, img) in images.into_iter().enumerate() {
        match img {
            Some(w) => out.push(w),
            None => return err(last_line, 1, format!("no image given for x{}", k + 1)),
        }
    }
    Ok(Endomorphism::new(rank, out).expect("images share the declared rank"))
}

pub fn write_endomorphism(e: &Endomorphism) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rank {}", e.rank());
    out.push_str(&e.to_string());
    out
}
