//! Primitivity via Whitehead minimization.
//!
//! A word is primitive when it belongs to some free basis, equivalently
//! when its automorphism orbit contains a generator. Whitehead's
//! peak-reduction theorem says that greedily applying length-reducing
//! Whitehead moves to a cyclic word reaches the minimum length of its orbit,
//! so a word is primitive exactly when greedy descent ends at length 1.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::automorphisms::Endomorphism;
use crate::whitehead::WhiteheadGraph;
use crate::words::{CyclicWord, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimitivityError {
    #[error("the empty word is never primitive")]
    EmptyWord,
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("expected rank 2, got {0}")]
    NotRankTwo(usize),
    #[error("{0} is not cyclically reduced")]
    NotCyclicallyReduced(Word),
    #[error("need a word of length at least 2, got {0}")]
    TooShort(Word),
}

/// A generator of `Aut(F_n)` in Whitehead's sense.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WhiteheadMove {
    /// Type I: `x_i ↦ images[i-1]`, a signed permutation of the generators.
    Permutation(Vec<Letter>),
    /// Type II: for `x ∉ {a, a⁻¹}`, `x ↦ [a⁻¹ if x⁻¹ ∈ A] · x · [a if x ∈ A]`,
    /// with `a ∈ A` and `a⁻¹ ∉ A`; `a` itself is fixed.
    Multiplier { multiplier: Letter, set: BTreeSet<Letter> },
}

impl WhiteheadMove {
    /// Every Type II move of rank `n` except the two that act trivially on
    /// cyclic words (`A = {a}` and `A` = everything but `a⁻¹`).
    pub fn multipliers(rank: usize) -> Vec<WhiteheadMove> {
        let mut out = Vec::new();
        for a in Letter::all(rank) {
            let others: Vec<Letter> = Letter::all(rank).filter(|l| l.index != a.index).collect();
            let full = (1u64 << others.len()) - 1;
            for mask in 1..full {
                let mut set: BTreeSet<Letter> = others
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &l)| l)
                    .collect();
                set.insert(a);
                out.push(WhiteheadMove::Multiplier { multiplier: a, set });
            }
        }
        out
    }

    /// All `2^n · n!` signed permutations.
    pub fn permutations(rank: usize) -> Vec<WhiteheadMove> {
        let mut perms: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..rank {
            let mut next = Vec::new();
            for p in &perms {
                for i in (1..=rank as u32).filter(|i| !p.contains(i)) {
                    let mut q = p.clone();
                    q.push(i);
                    next.push(q);
                }
            }
            perms = next;
        }
        let mut out = Vec::new();
        for p in perms {
            for signs in 0u32..(1 << rank) {
                let images = p
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| if signs >> k & 1 == 1 { Letter::neg(i) } else { Letter::pos(i) })
                    .collect();
                out.push(WhiteheadMove::Permutation(images));
            }
        }
        out
    }

    fn letter_image(&self, x: Letter, out: &mut Vec<Letter>) {
        match self {
            WhiteheadMove::Permutation(images) => {
                let img = images[x.index as usize - 1];
                out.push(if x.sign == crate::words::Sign::Pos { img } else { img.inverse() });
            }
            WhiteheadMove::Multiplier { multiplier: a, set } => {
                if x.index == a.index {
                    out.push(x);
                    return;
                }
                if set.contains(&x.inverse()) {
                    out.push(a.inverse());
                }
                out.push(x);
                if set.contains(&x) {
                    out.push(*a);
                }
            }
        }
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut raw = Vec::with_capacity(w.len() * 3);
        for &x in w.letters() {
            self.letter_image(x, &mut raw);
        }
        Word::free_reduce(raw, w.rank()).expect("moves preserve rank")
    }

    pub fn apply_cyclic(&self, c: &CyclicWord) -> CyclicWord {
        CyclicWord::new(&self.apply(c.as_word()))
    }

    pub fn as_endomorphism(&self, rank: usize) -> Endomorphism {
        let images = (1..=rank as u32)
            .map(|i| self.apply(&Word::generator(i, rank).expect("index in range")))
            .collect();
        Endomorphism::new(rank, images).expect("rank-consistent images")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizationStep {
    pub mv: WhiteheadMove,
    /// Cyclic length after the move.
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizationTrace {
    pub start: CyclicWord,
    pub steps: Vec<MinimizationStep>,
    pub minimal: CyclicWord,
}

impl MinimizationTrace {
    /// The composite automorphism; it carries the start to a conjugate of the
    /// minimal word.
    pub fn automorphism(&self) -> Endomorphism {
        let rank = self.start.rank();
        self.steps.iter().fold(Endomorphism::identity(rank), |acc, s| {
            s.mv.as_endomorphism(rank).compose(&acc).expect("same rank")
        })
    }
}

/// Greedy Whitehead descent: apply the move that shortens the cyclic word
/// most (first in enumeration order on ties) until none does.
pub fn whitehead_minimize(w: &Word) -> MinimizationTrace {
    let start = CyclicWord::new(w);
    let moves = WhiteheadMove::multipliers(w.rank());
    let mut current = start.clone();
    let mut steps = Vec::new();
    while current.len() > 1 {
        let best = moves
            .iter()
            .map(|mv| (mv, mv.apply_cyclic(&current)))
            .filter(|(_, image)| image.len() < current.len())
            .min_by_key(|(_, image)| image.len());
        let Some((mv, image)) = best else { break };
        steps.push(MinimizationStep { mv: mv.clone(), length: image.len() });
        current = image;
    }
    MinimizationTrace { start, steps, minimal: current }
}

pub fn is_primitive(w: &Word) -> Result<bool, PrimitivityError> {
    if w.rank() < 2 {
        return Err(PrimitivityError::RankTooSmall(w.rank()));
    }
    if w.is_empty() {
        return Err(PrimitivityError::EmptyWord);
    }
    Ok(whitehead_minimize(w).minimal.len() == 1)
}

/// True when the cyclic Whitehead graph of `w` is not 2-connected, the
/// necessary condition every cyclically reduced primitive word meets.
pub fn cut_vertex_condition(w: &Word) -> Result<bool, PrimitivityError> {
    if !w.is_cyclically_reduced() {
        return Err(PrimitivityError::NotCyclicallyReduced(w.clone()));
    }
    if w.len() < 2 {
        return Err(PrimitivityError::TooShort(w.clone()));
    }
    Ok(!WhiteheadGraph::of_cyclic(&CyclicWord::new(w)).is_two_connected())
}

/// Rank-2 necessary condition for primitivity: in the syllable form
/// `x1^{k1} x2^{l1} ⋯ x1^{km} x2^{lm}` of the cyclic word, one of the
/// generators has all its exponents equal to 1, or all equal to -1.
///
/// A single syllable `x_i^k` passes only for `k = ±1`.
pub fn f2_necessary_condition(w: &Word) -> Result<bool, PrimitivityError> {
    if w.rank() != 2 {
        return Err(PrimitivityError::NotRankTwo(w.rank()));
    }
    if w.is_empty() {
        return Err(PrimitivityError::EmptyWord);
    }
    let core = w.cyclic_reduce().core;
    let syllables = cyclic_syllables(&core);
    if syllables.len() == 1 {
        return Ok(syllables[0].1.abs() == 1);
    }
    let uniform = |index: u32| {
        let exps: Vec<i64> = syllables.iter().filter(|s| s.0 == index).map(|s| s.1).collect();
        exps.iter().all(|&e| e == 1) || exps.iter().all(|&e| e == -1)
    };
    Ok(uniform(1) || uniform(2))
}

/// Syllables of a cyclically reduced word read around the circle.
fn cyclic_syllables(core: &Word) -> Vec<(u32, i64)> {
    let letters = core.letters();
    let Some(k) = (0..letters.len()).find(|&k| {
        let prev = letters[(k + letters.len() - 1) % letters.len()];
        prev.index != letters[k].index
    }) else {
        return core.syllables();
    };
    core.rotate(k).syllables()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub max_c_length: usize,
    /// Freely reduced `c` of rank 2 with zero abelianization.
    pub total_c: usize,
    /// `x1·c` not cyclically reduced.
    pub reducible: usize,
    /// Of those, how many are primitive, and how many of the primitive ones
    /// cyclically reduce to `x1`.
    pub reducible_primitive: usize,
    pub reducible_primitive_conjugate_to_x1: usize,
    pub cyclically_reduced: usize,
    pub primitive: usize,
    /// Nonempty `c` with `x1·c` cyclically reduced and primitive.
    pub counterexamples: Vec<Word>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
            && self.reducible_primitive == self.reducible_primitive_conjugate_to_x1
    }
}

/// All freely reduced words of rank `rank` with at most `max_len` letters,
/// shortest first.
pub fn reduced_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty(rank)];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in Letter::all(rank) {
                if w.last().is_some_and(|last| last.is_inverse_of(l)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| Word::free_reduce(v.iter().copied(), rank).unwrap()));
        frontier = next;
    }
    out
}

/// Checks, for every commutator-subgroup element `c` with `|c| ≤ max_c_length`,
/// that `x1·c` is primitive and cyclically reduced only when `c` is trivial.
/// In `F_2` the quotient by the commutator subgroup is exactly `Z²`, so `c`
/// lies in `[F_2, F_2]` iff its abelianization vanishes.
pub fn verify_x1_times_commutator(max_c_length: usize) -> SweepReport {
    let x1 = Word::generator(1, 2).expect("rank 2");
    let mut report = SweepReport {
        max_c_length,
        total_c: 0,
        reducible: 0,
        reducible_primitive: 0,
        reducible_primitive_conjugate_to_x1: 0,
        cyclically_reduced: 0,
        primitive: 0,
        counterexamples: Vec::new(),
    };
    for c in reduced_words(2, max_c_length) {
        if !c.abelianize().is_zero() {
            continue;
        }
        report.total_c += 1;
        let u = &x1 * &c;
        let primitive = is_primitive(&u).expect("x1·c is nonempty");
        if u.is_cyclically_reduced() {
            report.cyclically_reduced += 1;
            if primitive {
                report.primitive += 1;
                if !c.is_empty() {
                    report.counterexamples.push(c);
                }
            }
        } else {
            report.reducible += 1;
            if primitive {
                report.reducible_primitive += 1;
                if u.cyclic_reduce().core == x1 {
                    report.reducible_primitive_conjugate_to_x1 += 1;
                }
            }
        }
    }
    report
}
