//! One-relator presentations and metric small cancellation.
//!
//! A [`Presentation`] fixes a rank and a cyclically reduced relator `r`. Its
//! symmetrized set is every rotation of `r` and `r⁻¹`; a piece is a common
//! prefix of two distinct elements of that set. The condition `C'(λ)` says
//! every piece is shorter than `λ|r|`. Under `C'(1/6)` Dehn's algorithm
//! decides membership in the normal closure of `r`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::whitehead::WhiteheadGraph;
use crate::words::{CyclicWord, Letter, Word};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("relator must be nonempty")]
    EmptyRelator,
    #[error("relator {0} is not cyclically reduced")]
    NotCyclicallyReduced(Word),
    #[error("relator has rank {relator} but the presentation has rank {rank}")]
    RankMismatch { rank: usize, relator: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SmallCancellationError {
    /// Dehn's algorithm only decides membership under `C'(1/6)`.
    #[error("relator does not satisfy C'(1/6); membership cannot be decided")]
    NotCPrimeSixth,
}

/// A rotation of `r^exponent`, shifted left by `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorRotation {
    pub word: Word,
    pub exponent: i8,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    rank: usize,
    relator: Word,
    symmetrized: Vec<RelatorRotation>,
    /// Range of `symmetrized` starting with each letter, indexed by slot.
    by_first: Vec<std::ops::Range<usize>>,
}

impl Presentation {
    pub fn new(rank: usize, relator: Word) -> Result<Presentation, PresentationError> {
        if rank < 2 {
            return Err(PresentationError::RankTooSmall(rank));
        }
        if relator.rank() != rank {
            return Err(PresentationError::RankMismatch { rank, relator: relator.rank() });
        }
        if relator.is_empty() {
            return Err(PresentationError::EmptyRelator);
        }
        if !relator.is_cyclically_reduced() {
            return Err(PresentationError::NotCyclicallyReduced(relator));
        }
        let mut symmetrized: Vec<RelatorRotation> = Vec::new();
        let mut seen = BTreeSet::new();
        for (exponent, base) in [(1i8, relator.clone()), (-1, relator.inverse())] {
            for offset in 0..base.len() {
                let word = base.rotate(offset);
                if seen.insert(word.clone()) {
                    symmetrized.push(RelatorRotation { word, exponent, offset });
                }
            }
        }
        symmetrized.sort_by(|a, b| a.word.cmp(&b.word));
        let mut by_first = vec![0..0; 2 * rank];
        for (k, e) in symmetrized.iter().enumerate() {
            let slot = e.word.first().expect("nonempty").slot();
            if by_first[slot].is_empty() {
                by_first[slot] = k..k + 1;
            } else {
                by_first[slot].end = k + 1;
            }
        }
        Ok(Presentation { rank, relator, symmetrized, by_first })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The relator as given.
    pub fn relator(&self) -> &Word {
        &self.relator
    }

    pub fn cyclic_relator(&self) -> CyclicWord {
        CyclicWord::new(&self.relator)
    }

    pub fn relator_len(&self) -> usize {
        self.relator.len()
    }

    /// Distinct rotations of `r` and `r⁻¹`, sorted.
    pub fn symmetrized_set(&self) -> BTreeSet<Word> {
        self.symmetrized.iter().map(|e| e.word.clone()).collect()
    }

    pub fn symmetrized(&self) -> &[RelatorRotation] {
        &self.symmetrized
    }

    /// Longest common prefix of two distinct symmetrized elements.
    pub fn max_piece_length(&self) -> usize {
        // Sorted order puts the longest common prefix between neighbours.
        self.symmetrized
            .windows(2)
            .map(|p| common_prefix(p[0].word.letters(), p[1].word.letters()))
            .max()
            .unwrap_or(0)
    }

    pub fn piece_analysis(&self) -> PieceAnalysis {
        let m = self.max_piece_length();
        let len = self.relator_len();
        let lower = Rational::new(m as i64, len as i64);
        let upper = Rational::new(1, 6);
        PieceAnalysis {
            relator_length: len,
            max_piece: m,
            feasible_lambda: (6 * m < len).then_some((lower, upper)),
        }
    }

    /// `C'(λ)`: every piece is strictly shorter than `λ|r|`.
    pub fn satisfies_c_prime(&self, lambda: Rational) -> bool {
        Rational::from_integer(self.max_piece_length() as i64)
            < lambda * Rational::from_integer(self.relator_len() as i64)
    }

    fn require_dehn(&self) -> Result<(), SmallCancellationError> {
        if self.satisfies_c_prime(Rational::new(1, 6)) {
            Ok(())
        } else {
            Err(SmallCancellationError::NotCPrimeSixth)
        }
    }

    /// Runs Dehn's algorithm on `w`, keeping every step.
    pub fn dehn_reduce(&self, w: &Word) -> Result<DehnTrace, SmallCancellationError> {
        self.require_dehn()?;
        let rel_len = self.relator_len();
        let mut steps = Vec::new();
        let mut current = w.clone();
        loop {
            let red = current.cyclic_reduce();
            if !red.conjugator.is_empty() {
                steps.push(DehnStep::Conjugate {
                    by: red.conjugator.clone(),
                    result: red.core.clone(),
                });
                current = red.core;
            }
            let Some(hit) = self.leftmost_long_overlap(&current) else {
                break;
            };
            let start = if hit.position + hit.length > current.len() {
                // Fragment wraps around: rotate it to the front first.
                let head = current.subword(0, hit.position);
                let rotated = current.rotate(hit.position);
                steps.push(DehnStep::Conjugate { by: head, result: rotated.clone() });
                current = rotated;
                0
            } else {
                hit.position
            };
            let element = &self.symmetrized[hit.element];
            let fragment = element.word.subword(0, hit.length);
            let replacement = element.word.subword(hit.length, rel_len).inverse();
            let before = current.subword(0, start);
            let after = current.subword(start + hit.length, current.len());
            let next = &(&before * &replacement) * &after;
            debug_assert!(next.len() < current.len());
            steps.push(DehnStep::Rewrite {
                position: start,
                fragment,
                replacement,
                relator: element.clone(),
                result: next.clone(),
            });
            current = next;
        }
        Ok(DehnTrace { input: w.clone(), steps, residual: current })
    }

    /// Leftmost start (reading cyclically) of a prefix of a symmetrized
    /// element longer than half the relator; longest such prefix there.
    fn leftmost_long_overlap(&self, w: &Word) -> Option<Overlap> {
        self.leftmost_long_overlap_letters(w.letters())
    }

    fn leftmost_long_overlap_letters(&self, letters: &[Letter]) -> Option<Overlap> {
        let n = letters.len();
        let rel_len = self.relator_len();
        for position in 0..n {
            let mut best: Option<Overlap> = None;
            for element in self.by_first[letters[position].slot()].clone() {
                let target = self.symmetrized[element].word.letters();
                let mut length = 0;
                while length < n.min(rel_len) && letters[(position + length) % n] == target[length] {
                    length += 1;
                }
                if 2 * length > rel_len && best.as_ref().is_none_or(|b| length > b.length) {
                    best = Some(Overlap { position, length, element });
                }
            }
            if best.is_some() {
                return best;
            }
        }
        None
    }

    /// Membership in the normal closure of the relator.
    pub fn in_normal_closure(&self, w: &Word) -> Result<bool, SmallCancellationError> {
        Ok(self.dehn_residual(w)?.is_empty())
    }

    /// The residual of [`Presentation::dehn_reduce`] without recording a
    /// trace. Same strategy, same result.
    pub fn dehn_residual(&self, w: &Word) -> Result<Word, SmallCancellationError> {
        self.require_dehn()?;
        let mut cur: Vec<Letter> = w.letters().to_vec();
        let mut scratch: Vec<Letter> = Vec::with_capacity(cur.len());
        loop {
            let mut lo = 0;
            let mut hi = cur.len();
            while hi - lo >= 2 && cur[lo].is_inverse_of(cur[hi - 1]) {
                lo += 1;
                hi -= 1;
            }
            if lo > 0 {
                cur.truncate(hi);
                cur.drain(..lo);
            }
            let Some(hit) = self.leftmost_long_overlap_letters(&cur) else {
                break;
            };
            if hit.position + hit.length > cur.len() {
                cur.rotate_left(hit.position);
            }
            let start = if hit.position + hit.length > cur.len() { 0 } else { hit.position };
            let element = self.symmetrized[hit.element].word.letters();
            scratch.clear();
            let replacement = element[hit.length..].iter().rev().map(|l| l.inverse());
            let pieces = cur[..start].iter().copied().chain(replacement);
            for l in pieces.chain(cur[start + hit.length..].iter().copied()) {
                if scratch.last().is_some_and(|&p| p.is_inverse_of(l)) {
                    scratch.pop();
                } else {
                    scratch.push(l);
                }
            }
            std::mem::swap(&mut cur, &mut scratch);
        }
        Ok(Word::from_reduced(cur, self.rank))
    }

    /// Longest subword of `w` that is also a subword of some rotation of
    /// `r^{±1}`; the leftmost one on ties.
    pub fn longest_relator_fragment(&self, w: &Word) -> (Word, usize) {
        let letters = w.letters();
        let mut best = (0usize, 0usize);
        for start in 0..letters.len() {
            for rot in &self.symmetrized {
                let len = common_prefix(&letters[start..], rot.word.letters());
                if len > best.1 {
                    best = (start, len);
                }
            }
        }
        (w.subword(best.0, best.0 + best.1), best.1)
    }

    /// Checks the hypotheses under which every automorphism inducing the
    /// identity on the quotient is conjugation by a relator element: rank at
    /// least 3, a feasible `C'(λ)` with `λ ≤ 1/6`, and 2-connected Whitehead
    /// graphs for all long cyclic subwords of the relator.
    pub fn hypothesis_check(&self) -> HypothesisReport {
        let pieces = self.piece_analysis();
        let rank_ok = self.rank >= 3;
        let mut lengths = Vec::new();
        let mut lambda_witness = None;
        if pieces.feasible_lambda.is_some() {
            let m = pieces.max_piece as i64;
            let len = pieces.relator_length as i64;
            // Just above m/|r|: every ℓ ≥ (1 - 3λ)|r| is then ℓ ≥ |r| - 3m.
            let lambda = Rational::new(6 * m + 1, 6 * len);
            debug_assert!(self.satisfies_c_prime(lambda));
            lambda_witness = Some(lambda);
            let cyclic = self.cyclic_relator();
            let shortest = pieces.relator_length.saturating_sub(3 * pieces.max_piece);
            for length in shortest..=pieces.relator_length {
                let subwords = cyclic.subwords(length).expect("length within relator");
                let failures: Vec<Word> = subwords
                    .iter()
                    .filter(|s| !WhiteheadGraph::of_word(s).is_two_connected())
                    .cloned()
                    .collect();
                lengths.push(LengthVerdict { length, subwords: subwords.len(), failures });
            }
        }
        let mut failed = Vec::new();
        if !rank_ok {
            failed.push(FailedCondition::RankBelowThree);
        }
        if pieces.feasible_lambda.is_none() {
            failed.push(FailedCondition::NoFeasibleLambda);
        }
        if let Some(bad) = lengths.iter().find(|l| !l.failures.is_empty()) {
            failed.push(FailedCondition::SubwordNotTwoConnected {
                length: bad.length,
                witness: bad.failures[0].clone(),
            });
        }
        HypothesisReport {
            rank: self.rank,
            relator: self.relator.clone(),
            rank_ok,
            pieces,
            lambda_witness,
            lengths,
            failed,
        }
    }
}

struct Overlap {
    position: usize,
    length: usize,
    element: usize,
}

fn common_prefix<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceAnalysis {
    pub relator_length: usize,
    pub max_piece: usize,
    /// `(m/|r|, 1/6]`, present iff `6m < |r|`.
    #[serde(serialize_with = "serialize_interval")]
    pub feasible_lambda: Option<(Rational, Rational)>,
}

fn serialize_interval<S: serde::Serializer>(
    v: &Option<(Rational, Rational)>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some((lo, hi)) => s.collect_str(&format_args!("({lo}, {hi}]")),
        None => s.serialize_none(),
    }
}

fn serialize_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DehnStep {
    /// `before = by · result · by⁻¹`.
    Conjugate { by: Word, result: Word },
    /// `fragment` at `position` replaced by `replacement`; the relator
    /// rotation used is `fragment · replacement⁻¹`.
    Rewrite {
        position: usize,
        fragment: Word,
        replacement: Word,
        relator: RelatorRotation,
        result: Word,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DehnTrace {
    pub input: Word,
    pub steps: Vec<DehnStep>,
    pub residual: Word,
}

/// `conjugator · r^exponent · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorConjugate {
    pub conjugator: Word,
    pub exponent: i8,
}

impl RelatorConjugate {
    pub fn evaluate(&self, relator: &Word) -> Word {
        let base = if self.exponent > 0 { relator.clone() } else { relator.inverse() };
        base.conjugated_by(&self.conjugator).expect("same rank")
    }
}

impl DehnTrace {
    pub fn rewrites(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, DehnStep::Rewrite { .. }))
            .count()
    }

    /// Rewrites the trace as `input = c_1 ⋯ c_k · g·residual·g⁻¹`, each `c_j`
    /// a conjugate of `r^{±1}`. Returns the factors and `g`.
    pub fn relator_product(&self) -> (Vec<RelatorConjugate>, Word) {
        let rank = self.input.rank();
        let mut outer = Word::empty(rank);
        let mut current = self.input.clone();
        let mut factors = Vec::new();
        for step in &self.steps {
            match step {
                DehnStep::Conjugate { by, result } => {
                    outer = &outer * by;
                    current = result.clone();
                }
                DehnStep::Rewrite { position, relator, result, .. } => {
                    // current = P·u·t⁻¹·Q with u = a⁻¹·r^ε·a, a the rotation head.
                    let base_len = relator.word.len();
                    let prefix = current.subword(0, *position);
                    let a = relator.word.subword(base_len - relator.offset, base_len);
                    let conj = &(&outer * &prefix) * &a.inverse();
                    factors.push(RelatorConjugate { conjugator: conj, exponent: relator.exponent });
                    current = result.clone();
                }
            }
        }
        (factors, outer)
    }

    /// Multiplies the relator product back out and compares with the input.
    pub fn replays(&self, p: &Presentation) -> bool {
        let (factors, outer) = self.relator_product();
        let mut product = Word::empty(self.input.rank());
        for f in &factors {
            product = &product * &f.evaluate(p.relator());
        }
        let tail = self.residual.conjugated_by(&outer).expect("same rank");
        let lengths_drop = self.steps.iter().all(|s| match s {
            DehnStep::Rewrite { fragment, replacement, .. } => replacement.len() < fragment.len(),
            DehnStep::Conjugate { .. } => true,
        });
        lengths_drop && &product * &tail == self.input
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthVerdict {
    pub length: usize,
    pub subwords: usize,
    pub failures: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum FailedCondition {
    RankBelowThree,
    NoFeasibleLambda,
    SubwordNotTwoConnected { length: usize, witness: Word },
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailedCondition::RankBelowThree => f.write_str("rank is below 3"),
            FailedCondition::NoFeasibleLambda => {
                f.write_str("no λ ≤ 1/6 with C'(λ): 6·(max piece) ≥ |r|")
            }
            FailedCondition::SubwordNotTwoConnected { length, witness } => write!(
                f,
                "Whitehead graph of the length-{length} subword {witness} is not 2-connected"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub rank: usize,
    pub relator: Word,
    pub rank_ok: bool,
    pub pieces: PieceAnalysis,
    #[serde(serialize_with = "serialize_rational")]
    pub lambda_witness: Option<Rational>,
    pub lengths: Vec<LengthVerdict>,
    pub failed: Vec<FailedCondition>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[i32], rank: usize) -> Word {
        Word::from_signed(s, rank).unwrap()
    }

    fn pres(s: &[i32], rank: usize) -> Presentation {
        Presentation::new(rank, w(s, rank)).unwrap()
    }

    fn squares(n: usize, p: usize) -> Presentation {
        let base: Vec<i32> = (1..=n as i32).flat_map(|i| [i, i]).collect();
        let r: Vec<i32> = base.iter().copied().cycle().take(base.len() * p).collect();
        pres(&r, n)
    }

    fn commutators(p: usize) -> Presentation {
        let base = [-1, -2, 1, 2, -3, -4, 3, 4];
        let r: Vec<i32> = base.iter().copied().cycle().take(8 * p).collect();
        pres(&r, 4)
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Presentation::new(1, w(&[1], 1)), Err(PresentationError::RankTooSmall(1)));
        assert_eq!(Presentation::new(2, Word::empty(2)), Err(PresentationError::EmptyRelator));
        assert!(matches!(
            Presentation::new(2, w(&[1, 2, -1], 2)),
            Err(PresentationError::NotCyclicallyReduced(_))
        ));
        assert!(matches!(
            Presentation::new(3, w(&[1, 2], 2)),
            Err(PresentationError::RankMismatch { .. })
        ));
    }

    #[test]
    fn symmetrized_set_sizes() {
        let p = pres(&[1, 2], 2);
        let expected: BTreeSet<Word> =
            [w(&[1, 2], 2), w(&[2, 1], 2), w(&[-2, -1], 2), w(&[-1, -2], 2)].into();
        assert_eq!(p.symmetrized_set(), expected);
        assert_eq!(pres(&[1, 2, 1, 2], 2).symmetrized_set().len(), 4);
        assert_eq!(squares(3, 1).symmetrized_set().len(), 12);
        assert_eq!(squares(3, 2).symmetrized_set().len(), 12);
    }

    #[test]
    fn rotation_records_reproduce_words() {
        let p = squares(3, 2);
        for e in p.symmetrized() {
            let base = if e.exponent > 0 { p.relator().clone() } else { p.relator().inverse() };
            assert_eq!(base.rotate(e.offset), e.word);
        }
    }

    #[test]
    fn max_pieces() {
        assert_eq!(squares(3, 1).max_piece_length(), 1);
        assert_eq!(squares(3, 2).max_piece_length(), 1);
        assert_eq!(pres(&[1, 2, 1, 2], 2).max_piece_length(), 0);
        assert_eq!(commutators(1).max_piece_length(), 1);
        // x1 x2 x1 x2^-1: the piece x1 appears in two rotations
        assert_eq!(pres(&[1, 2, 1, -2], 2).max_piece_length(), 1);
    }

    #[test]
    fn c_prime_examples() {
        assert!(!squares(3, 1).satisfies_c_prime(Rational::new(1, 6)));
        assert!(squares(4, 1).satisfies_c_prime(Rational::new(1, 6)));
        assert!(squares(3, 2).satisfies_c_prime(Rational::new(1, 9)));
        assert!(!squares(3, 2).satisfies_c_prime(Rational::new(1, 12)));
    }

    #[test]
    fn piece_analysis_interval() {
        let a = squares(4, 1).piece_analysis();
        assert_eq!(a.max_piece, 1);
        assert_eq!(a.feasible_lambda, Some((Rational::new(1, 8), Rational::new(1, 6))));
        assert_eq!(squares(3, 1).piece_analysis().feasible_lambda, None);
    }

    #[test]
    fn dehn_examples() {
        let p = squares(4, 1);
        let t = p.dehn_reduce(p.relator()).unwrap();
        assert!(t.residual.is_empty());
        assert!(t.replays(&p));

        let x1 = w(&[1], 4);
        let t = p.dehn_reduce(&x1).unwrap();
        assert_eq!(t.residual, x1);
        assert!(t.steps.is_empty());

        // φ(x1)·x1⁻¹ for the rank-4 nonorientable example
        let t = p.dehn_reduce(&w(&[-1, -4, -4, -3, -3, -2, -2, -1], 4)).unwrap();
        assert!(t.residual.is_empty());
        assert!(t.replays(&p));
    }

    #[test]
    fn dehn_refuses_without_c_prime_sixth() {
        let p = squares(3, 1);
        assert_eq!(p.dehn_reduce(p.relator()), Err(SmallCancellationError::NotCPrimeSixth));
        assert_eq!(p.in_normal_closure(p.relator()), Err(SmallCancellationError::NotCPrimeSixth));
    }

    #[test]
    fn dehn_conjugates_and_products() {
        let p = squares(4, 1);
        let g = w(&[2, -3, 1, 1], 4);
        let c = p.relator().conjugated_by(&g).unwrap();
        assert!(p.in_normal_closure(&c).unwrap());
        let d = p.relator().inverse().conjugated_by(&w(&[-4, 2], 4)).unwrap();
        let prod = &c * &d;
        let t = p.dehn_reduce(&prod).unwrap();
        assert!(t.residual.is_empty());
        assert!(t.replays(&p));
        // abelian obstruction
        assert!(!p.in_normal_closure(&w(&[1, 2], 4)).unwrap());
        // nonzero residual still replays
        let t = p.dehn_reduce(&(&c * &w(&[3], 4))).unwrap();
        assert!(!t.residual.is_empty());
        assert!(t.replays(&p));
    }

    #[test]
    fn relator_product_of_wrapping_fragment() {
        let p = squares(4, 1);
        // rotation of r that starts mid-square wraps inside the loop
        let rot = p.relator().rotate(3);
        let t = p.dehn_reduce(&rot).unwrap();
        assert!(t.residual.is_empty());
        let (factors, _) = t.relator_product();
        assert_eq!(factors.len(), 1);
        assert!(t.replays(&p));
    }

    #[test]
    fn residual_fast_path_matches_trace() {
        let p = squares(4, 1);
        let r = p.relator().clone();
        let g = w(&[3, -1, 2], 4);
        let samples = [
            &r.conjugated_by(&g).unwrap() * &w(&[2, 2, 4], 4),
            &(&r * &r.inverse().conjugated_by(&w(&[4], 4)).unwrap()) * &w(&[-1], 4),
            w(&[1, 1, 2, 2, 3, -4, -4, -3, -3, -2], 4),
            r.rotate(5).inverse(),
        ];
        for s in &samples {
            assert_eq!(p.dehn_residual(s).unwrap(), p.dehn_reduce(s).unwrap().residual);
        }
    }

    #[test]
    fn fragments() {
        let p = squares(4, 1);
        assert_eq!(p.longest_relator_fragment(p.relator()), (p.relator().clone(), 8));
        assert_eq!(p.longest_relator_fragment(&w(&[1], 4)), (w(&[1], 4), 1));
        // leftmost wins on ties
        let (frag, len) = p.longest_relator_fragment(&w(&[1, 1, 3, 2, 2], 4));
        assert_eq!((frag, len), (w(&[1, 1], 4), 2));
        // fragments of r⁻¹ count
        let (_, len) = p.longest_relator_fragment(&w(&[-2, -2, -1, -1, -4], 4));
        assert_eq!(len, 5);
        assert_eq!(p.longest_relator_fragment(&Word::empty(4)).1, 0);
    }

    #[test]
    fn hypothesis_check_passes_for_powers() {
        for p in [squares(3, 2), squares(4, 2), commutators(2)] {
            let report = p.hypothesis_check();
            assert!(report.passed(), "{:?}", report.failed);
            let lambda = report.lambda_witness.unwrap();
            assert!(lambda <= Rational::new(1, 6));
            assert!(p.satisfies_c_prime(lambda));
            let (first, last) = (report.lengths.first().unwrap(), report.lengths.last().unwrap());
            assert_eq!(first.length, p.relator_len() - 3 * report.pieces.max_piece);
            assert_eq!(last.length, p.relator_len());
        }
    }

    #[test]
    fn hypothesis_check_failures() {
        let report = squares(3, 1).hypothesis_check();
        assert_eq!(report.failed, vec![FailedCondition::NoFeasibleLambda]);
        assert!(report.lengths.is_empty());

        let report = commutators(1).hypothesis_check();
        assert!(!report.passed());
        assert!(report.failed.iter().any(|f| matches!(f, FailedCondition::SubwordNotTwoConnected { .. })));

        let report = pres(&[1, 1, 2, 2, 1, 1, 2, 2], 2).hypothesis_check();
        assert!(report.failed.contains(&FailedCondition::RankBelowThree));
    }

    #[test]
    fn failure_witnesses_are_genuine() {
        let report = commutators(1).hypothesis_check();
        for l in &report.lengths {
            for f in &l.failures {
                assert_eq!(f.len(), l.length);
                assert!(!WhiteheadGraph::of_word(f).is_two_connected());
            }
        }
    }
}
