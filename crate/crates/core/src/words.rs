//! Words in a free group of finite rank.
//!
//! A [`Word`] is always freely reduced. Letters carry their generator index
//! and a sign, and every word remembers the rank of its ambient free group so
//! that words from different groups are never silently mixed.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {index} is outside rank {rank}")]
    IndexOutOfRange { index: u32, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("subword length {length} exceeds cyclic word length {max}")]
    LengthOutOfRange { length: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator `x_index` or its inverse. Ordered by index, then sign, with
/// the positive letter first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(index: u32) -> Letter {
        Letter { index, sign: Sign::Pos }
    }

    pub fn neg(index: u32) -> Letter {
        Letter { index, sign: Sign::Neg }
    }

    /// `x_i` for positive `i`, `x_|i|^-1` for negative `i`.
    pub fn from_signed(i: i32) -> Letter {
        assert!(i != 0, "letter 0 does not exist");
        if i > 0 {
            Letter::pos(i as u32)
        } else {
            Letter::neg(i.unsigned_abs())
        }
    }

    pub fn inverse(self) -> Letter {
        Letter { index: self.index, sign: self.sign.flip() }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }

    /// Dense position among the `2n` letters: `x1, x1', x2, x2', ...`.
    pub fn slot(self) -> usize {
        2 * (self.index as usize - 1) + usize::from(self.sign == Sign::Neg)
    }

    pub fn from_slot(slot: usize) -> Letter {
        let index = (slot / 2 + 1) as u32;
        if slot.is_multiple_of(2) {
            Letter::pos(index)
        } else {
            Letter::neg(index)
        }
    }

    /// All `2n` letters of rank `n` in canonical order.
    pub fn all(rank: usize) -> impl Iterator<Item = Letter> {
        (0..2 * rank).map(Letter::from_slot)
    }
}

impl fmt::Display for Letter {
    /// `x3` or `x3'`; the prime marks an inverse letter.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "x{}", self.index),
            Sign::Neg => write!(f, "x{}'", self.index),
        }
    }
}

/// A freely reduced word over `x_1, ..., x_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .cmp(&other.letters)
            .then(self.rank.cmp(&other.rank))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_rank(left: usize, right: usize) -> Result<(), WordError> {
    if left == right {
        Ok(())
    } else {
        Err(WordError::RankMismatch { left, right })
    }
}

impl Word {
    pub fn empty(rank: usize) -> Word {
        Word { rank, letters: Vec::new() }
    }

    pub fn generator(index: u32, rank: usize) -> Result<Word, WordError> {
        Word::free_reduce([Letter::pos(index)], rank)
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn free_reduce<I>(raw: I, rank: usize) -> Result<Word, WordError>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut letters: Vec<Letter> = Vec::new();
        for letter in raw {
            if letter.index == 0 || letter.index as usize > rank {
                return Err(WordError::IndexOutOfRange { index: letter.index, rank });
            }
            push_reducing(&mut letters, letter);
        }
        Ok(Word { rank, letters })
    }

    /// Shorthand used throughout the tests: `[1, -2]` is `x1 x2^-1`.
    pub fn from_signed(signed: &[i32], rank: usize) -> Result<Word, WordError> {
        Word::free_reduce(signed.iter().map(|&i| Letter::from_signed(i)), rank)
    }

    /// Wraps letters already known to be reduced and in range.
    pub(crate) fn from_reduced(letters: Vec<Letter>, rank: usize) -> Word {
        debug_assert!(letters.windows(2).all(|p| !p[0].is_inverse_of(p[1])));
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index as usize <= rank));
        Word { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn multiply(&self, other: &Word) -> Result<Word, WordError> {
        check_rank(self.rank, other.rank)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reducing(&mut letters, l);
        }
        Ok(Word { rank: self.rank, letters })
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty(self.rank);
        for _ in 0..exponent.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `self^by = by · self · by⁻¹`.
    ///
    /// The exponent notation conjugates on the left: `x^y = y x y⁻¹`. This is
    /// the opposite of the `y⁻¹ x y` convention common elsewhere.
    pub fn conjugated_by(&self, by: &Word) -> Result<Word, WordError> {
        check_rank(self.rank, by.rank)?;
        Ok(&(by * self) * &by.inverse())
    }

    /// `[self, other] = self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Word) -> Result<Word, WordError> {
        check_rank(self.rank, other.rank)?;
        let left = &self.inverse() * &other.inverse();
        Ok(&(&left * self) * other)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) => self.len() == 1 || !a.is_inverse_of(b),
            _ => true,
        }
    }

    /// Strips matching ends so that `self = conjugator · core · conjugator⁻¹`.
    pub fn cyclic_reduce(&self) -> CyclicReduction {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].is_inverse_of(self.letters[n - 1 - k]) {
            k += 1;
        }
        CyclicReduction {
            core: Word::from_reduced(self.letters[k..n - k].to_vec(), self.rank),
            conjugator: Word::from_reduced(self.letters[..k].to_vec(), self.rank),
        }
    }

    /// Contiguous subword `[start, end)`.
    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word::from_reduced(self.letters[start..end].to_vec(), self.rank)
    }

    /// Left rotation by `k`; only meaningful for cyclically reduced words.
    pub fn rotate(&self, k: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(k % self.len());
        }
        Word::from_reduced(letters, self.rank)
    }

    pub fn abelianize(&self) -> AbelianVector {
        let mut counts = vec![0i64; self.rank];
        for l in &self.letters {
            counts[l.index as usize - 1] += l.sign.as_i64();
        }
        AbelianVector(counts)
    }

    /// Same letters viewed in a larger free group.
    pub fn widen(&self, rank: usize) -> Result<Word, WordError> {
        if rank < self.rank {
            if let Some(l) = self.letters.iter().find(|l| l.index as usize > rank) {
                return Err(WordError::IndexOutOfRange { index: l.index, rank });
            }
        }
        Ok(Word { rank, letters: self.letters.clone() })
    }

    /// Maximal runs of a single generator, as `(index, exponent)`.
    pub fn syllables(&self) -> Vec<(u32, i64)> {
        let mut out: Vec<(u32, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((index, exp)) if *index == l.index => *exp += l.sign.as_i64(),
                _ => out.push((l.index, l.sign.as_i64())),
            }
        }
        out
    }
}

fn push_reducing(letters: &mut Vec<Letter>, letter: Letter) {
    if letters.last().is_some_and(|&last| last.is_inverse_of(letter)) {
        letters.pop();
    } else {
        letters.push(letter);
    }
}

impl Mul for &Word {
    type Output = Word;

    /// Panics on rank mismatch; use [`Word::multiply`] for checked products.
    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs).expect("multiplying words of different rank")
    }
}

impl fmt::Display for Word {
    /// Syllable form accepted by the word parser, e.g. `x1^2 x2^-1`. The
    /// empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (k, (index, exp)) in self.syllables().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if exp == 1 {
                write!(f, "x{index}")?;
            } else {
                write!(f, "x{index}^{exp}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Result of [`Word::cyclic_reduce`]: `word = conjugator · core · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicReduction {
    /// Cyclically reduced, in the rotation read off the original word.
    pub core: Word,
    pub conjugator: Word,
}

impl CyclicReduction {
    pub fn cyclic(&self) -> CyclicWord {
        CyclicWord::from_cyclically_reduced(self.core.clone())
    }
}

/// A conjugacy class of the free group, stored as the lexicographically least
/// rotation of a cyclically reduced word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    core: Word,
}

impl CyclicWord {
    /// Cyclically reduces `w` and canonicalizes the rotation.
    pub fn new(w: &Word) -> CyclicWord {
        CyclicWord::from_cyclically_reduced(w.cyclic_reduce().core)
    }

    fn from_cyclically_reduced(core: Word) -> CyclicWord {
        debug_assert!(core.is_cyclically_reduced());
        let best = (0..core.len().max(1))
            .map(|k| core.rotate(k))
            .min()
            .unwrap_or(core);
        CyclicWord { core: best }
    }

    pub fn as_word(&self) -> &Word {
        &self.core
    }

    pub fn rank(&self) -> usize {
        self.core.rank
    }

    pub fn len(&self) -> usize {
        self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::from_cyclically_reduced(self.core.inverse())
    }

    /// Every rotation as a linear word, duplicates included.
    pub fn rotations(&self) -> Vec<Word> {
        (0..self.len()).map(|k| self.core.rotate(k)).collect()
    }

    /// Distinct length-`length` reads around the circle.
    pub fn subwords(&self, length: usize) -> Result<BTreeSet<Word>, WordError> {
        let n = self.len();
        if length > n {
            return Err(WordError::LengthOutOfRange { length, max: n });
        }
        if n == 0 {
            return Ok(BTreeSet::from([Word::empty(self.rank())]));
        }
        Ok((0..n)
            .map(|start| {
                let letters = (0..length)
                    .map(|k| self.core.letters[(start + k) % n])
                    .collect();
                Word::from_reduced(letters, self.rank())
            })
            .collect())
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.core.fmt(f)
    }
}

/// Image of a word in `Z^n`: signed exponent sum per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianVector(pub Vec<i64>);

impl AbelianVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Whether `self` is an integer multiple of `other`.
    pub fn is_multiple_of(&self, other: &AbelianVector) -> bool {
        if other.is_zero() {
            return self.is_zero();
        }
        let (k, &pivot) = other.0.iter().enumerate().find(|(_, c)| **c != 0).unwrap();
        if self.0[k] % pivot != 0 {
            return false;
        }
        let factor = self.0[k] / pivot;
        self.0.iter().zip(&other.0).all(|(a, b)| *a == factor * b)
    }
}

impl Add for &AbelianVector {
    type Output = AbelianVector;

    fn add(self, rhs: &AbelianVector) -> AbelianVector {
        AbelianVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}
