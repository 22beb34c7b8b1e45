//! Endomorphisms and automorphisms of a free group.
//!
//! An [`Endomorphism`] is the tuple of images of the generators. An
//! [`Automorphism`] additionally carries an inverse tuple that has been
//! checked by composition, so it can only be built through the constructors
//! here: [`certify_automorphism`], [`Automorphism::sweep`],
//! [`Automorphism::inner_by`] and composition.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::small_cancellation::{Presentation, SmallCancellationError};
use crate::words::{Letter, Sign, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("expected {expected} images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("generator index {index} must lie in 2..={rank}")]
    SweepIndex { index: u32, rank: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    rank: usize,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<Endomorphism, MapError> {
        if images.len() != rank {
            return Err(MapError::WrongImageCount { expected: rank, got: images.len() });
        }
        for w in &images {
            if w.rank() != rank {
                return Err(WordError::RankMismatch { left: rank, right: w.rank() }.into());
            }
        }
        Ok(Endomorphism { rank, images })
    }

    pub fn identity(rank: usize) -> Endomorphism {
        let images = (1..=rank as u32)
            .map(|i| Word::generator(i, rank).expect("index in range"))
            .collect();
        Endomorphism { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `x_index`.
    pub fn image(&self, index: u32) -> &Word {
        &self.images[index as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| {
            w.len() == 1 && w.letters()[0] == Letter::pos(i as u32 + 1)
        })
    }

    fn letter_image(&self, l: Letter) -> Word {
        let w = &self.images[l.index as usize - 1];
        match l.sign {
            Sign::Pos => w.clone(),
            Sign::Neg => w.inverse(),
        }
    }

    /// Substitutes images for letters and reduces.
    pub fn apply(&self, w: &Word) -> Result<Word, MapError> {
        if w.rank() != self.rank {
            return Err(WordError::RankMismatch { left: self.rank, right: w.rank() }.into());
        }
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &Word) -> Word {
        let mut out = Word::empty(self.rank);
        for &l in w.letters() {
            out = &out * &self.letter_image(l);
        }
        out
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &Endomorphism) -> Result<Endomorphism, MapError> {
        if inner.rank != self.rank {
            return Err(WordError::RankMismatch { left: self.rank, right: inner.rank }.into());
        }
        Ok(Endomorphism {
            rank: self.rank,
            images: inner.images.iter().map(|w| self.apply_unchecked(w)).collect(),
        })
    }

    /// Column `i` is the abelianized image of `x_i`.
    pub fn abelian_matrix(&self) -> AbelianMatrix {
        let columns: Vec<Vec<i64>> = self.images.iter().map(|w| w.abelianize().0).collect();
        AbelianMatrix { columns }
    }

    /// `g` with `self(x_i) = g·x_i·g⁻¹` for every `i`, if there is one.
    ///
    /// `self(x_1)` must cyclically reduce to `x_1`, say `self(x_1) = g₀·x_1·g₀⁻¹`
    /// with `g₀` not ending in `x_1^{±1}`. The conjugators of `x_1` onto that
    /// word are exactly `g₀·x_1^k`. For such `g`,
    /// `g·x_2·g⁻¹ = g₀·x_1^k·x_2·x_1^-k·g₀⁻¹` has reduced length at least
    /// `2|k| + 1 - 2|g₀|`, so matching `self(x_2)` forces
    /// `|k| ≤ |self(x_2)| + |g₀| + 2`. Every candidate in that window is
    /// checked against all generators; the centre of `F_n` is trivial for
    /// `n ≥ 2`, so at most one survives.
    pub fn find_conjugator(&self) -> InnerSearch {
        if !self.abelian_matrix().is_identity() {
            return InnerSearch::NotInner(NotInnerReason::AbelianMatrix);
        }
        if self.rank == 1 {
            return InnerSearch::Inner(Word::empty(1));
        }
        let x1 = Word::generator(1, self.rank).expect("rank ≥ 1");
        let red = self.images[0].cyclic_reduce();
        if red.core != x1 {
            return InnerSearch::NotInner(NotInnerReason::NotConjugateToGenerator(1));
        }
        let g0 = red.conjugator;
        let bound = (self.images[1].len() + g0.len() + 2) as i64;
        for k in -bound..=bound {
            let g = &g0 * &x1.pow(k);
            let fits = self.images.iter().enumerate().all(|(i, img)| {
                let xi = Word::generator(i as u32 + 1, self.rank).expect("index in range");
                &xi.conjugated_by(&g).expect("same rank") == img
            });
            if fits {
                return InnerSearch::Inner(g);
            }
        }
        InnerSearch::NotInner(NotInnerReason::NoConjugator)
    }
}

impl fmt::Display for Endomorphism {
    /// The automorphism file body: one `x<i> -> <word>` line per generator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            writeln!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianMatrix {
    /// `columns[j][i]`: exponent sum of `x_{i+1}` in the image of `x_{j+1}`.
    pub columns: Vec<Vec<i64>>,
}

impl AbelianMatrix {
    pub fn is_identity(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(j, col)| col.iter().enumerate().all(|(i, &v)| v == i64::from(i == j)))
    }

    /// Matrix product `self · other` (the matrix of `self ∘ other`).
    pub fn product(&self, other: &AbelianMatrix) -> AbelianMatrix {
        let n = self.columns.len();
        let columns = other
            .columns
            .iter()
            .map(|col| {
                (0..n)
                    .map(|i| (0..n).map(|k| self.columns[k][i] * col[k]).sum())
                    .collect()
            })
            .collect();
        AbelianMatrix { columns }
    }

    /// Exact integer determinant by fraction-free elimination.
    pub fn determinant(&self) -> i64 {
        let n = self.columns.len();
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| i128::from(self.columns[j][i])).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            if p != k {
                m.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        if n == 0 {
            1
        } else {
            (sign * m[n - 1][n - 1]) as i64
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InnerSearch {
    Inner(Word),
    NotInner(NotInnerReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotInnerReason {
    /// The abelianization is not the identity matrix.
    AbelianMatrix,
    /// The image of this generator is not conjugate to it.
    NotConjugateToGenerator(u32),
    /// Every candidate conjugator failed some generator.
    NoConjugator,
}

/// An endomorphism together with a verified two-sided inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    forward: Endomorphism,
    inverse: Endomorphism,
}

impl Automorphism {
    fn from_verified(forward: Endomorphism, inverse: Endomorphism) -> Automorphism {
        assert!(
            forward.compose(&inverse).is_ok_and(|e| e.is_identity())
                && inverse.compose(&forward).is_ok_and(|e| e.is_identity()),
            "inverse failed verification"
        );
        Automorphism { forward, inverse }
    }

    pub fn identity(rank: usize) -> Automorphism {
        Automorphism {
            forward: Endomorphism::identity(rank),
            inverse: Endomorphism::identity(rank),
        }
    }

    /// `x_1 ↦ x_1·x_index^k`, other generators fixed.
    pub fn sweep(rank: usize, index: u32, k: i64) -> Result<Automorphism, MapError> {
        if index < 2 || index as usize > rank {
            return Err(MapError::SweepIndex { index, rank });
        }
        let build = |k: i64| {
            let mut e = Endomorphism::identity(rank);
            let xi = Word::generator(index, rank).expect("index checked");
            e.images[0] = &e.images[0] * &xi.pow(k);
            e
        };
        Ok(Automorphism::from_verified(build(k), build(-k)))
    }

    /// Conjugation `x_i ↦ g·x_i·g⁻¹`.
    pub fn inner_by(g: &Word) -> Automorphism {
        let rank = g.rank();
        let build = |g: &Word| Endomorphism {
            rank,
            images: Endomorphism::identity(rank)
                .images
                .iter()
                .map(|x| x.conjugated_by(g).expect("same rank"))
                .collect(),
        };
        Automorphism::from_verified(build(g), build(&g.inverse()))
    }

    pub fn forward(&self) -> &Endomorphism {
        &self.forward
    }

    pub fn inverse_map(&self) -> &Endomorphism {
        &self.inverse
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism { forward: self.inverse.clone(), inverse: self.forward.clone() }
    }

    pub fn rank(&self) -> usize {
        self.forward.rank
    }

    pub fn apply(&self, w: &Word) -> Result<Word, MapError> {
        self.forward.apply(w)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Automorphism) -> Result<Automorphism, MapError> {
        let forward = self.forward.compose(&inner.forward)?;
        let inverse = inner.inverse.compose(&self.inverse)?;
        Ok(Automorphism::from_verified(forward, inverse))
    }

    /// `self · other · self⁻¹ · other⁻¹` in composition order.
    pub fn commutator(&self, other: &Automorphism) -> Result<Automorphism, MapError> {
        self.compose(other)?
            .compose(&self.inverse())?
            .compose(&other.inverse())
    }

    pub fn find_conjugator(&self) -> InnerSearch {
        self.forward.find_conjugator()
    }

    /// Decides where `self` sits relative to `Stab(R) ⊇ Ker(ρ) ⊇ Inn_R`.
    pub fn classify_kernel(&self, p: &Presentation) -> Result<KernelVerdict, SmallCancellationError> {
        let r = p.relator();
        // Stab: both directions send r into R, so the image of R is R.
        if !p.in_normal_closure(&self.forward.apply_unchecked(r))?
            || !p.in_normal_closure(&self.inverse.apply_unchecked(r))?
        {
            return Ok(KernelVerdict::NotInStab);
        }
        for i in 1..=self.rank() as u32 {
            let xi = Word::generator(i, self.rank()).expect("index in range");
            let quotient = self.forward.image(i) * &xi.inverse();
            if !p.in_normal_closure(&quotient)? {
                return Ok(KernelVerdict::NotInKernel);
            }
        }
        Ok(match self.find_conjugator() {
            InnerSearch::NotInner(_) => KernelVerdict::NonInnerKernelElement,
            InnerSearch::Inner(g) => {
                if p.in_normal_closure(&g)? {
                    KernelVerdict::InnerByR(g)
                } else {
                    KernelVerdict::InnerNotByR(g)
                }
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "conjugator")]
pub enum KernelVerdict {
    NotInStab,
    NotInKernel,
    InnerByR(Word),
    InnerNotByR(Word),
    NonInnerKernelElement,
}

impl KernelVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            KernelVerdict::NotInStab => "NotInStab",
            KernelVerdict::NotInKernel => "NotInKernel",
            KernelVerdict::InnerByR(_) => "InnerByR",
            KernelVerdict::InnerNotByR(_) => "InnerNotByR",
            KernelVerdict::NonInnerKernelElement => "NonInnerKernelElement",
        }
    }

    pub fn conjugator(&self) -> Option<&Word> {
        match self {
            KernelVerdict::InnerByR(g) | KernelVerdict::InnerNotByR(g) => Some(g),
            _ => None,
        }
    }

    pub fn in_kernel(&self) -> bool {
        !matches!(self, KernelVerdict::NotInStab | KernelVerdict::NotInKernel)
    }
}

/// Refusal from [`certify_automorphism`]: the Nielsen-reduced image tuple,
/// which is not a signed permutation of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotAnAutomorphism {
    pub reduced: Vec<Word>,
}

impl fmt::Display for NotAnAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("not an automorphism; Nielsen-reduced images: ")?;
        for (k, w) in self.reduced.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// `u_target ← u_target·u_other^exponent` (right) or `u_other^exponent·u_target` (left).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct NielsenMove {
    target: usize,
    other: usize,
    exponent: i64,
    left: bool,
}

impl NielsenMove {
    fn apply(self, tuple: &[Word]) -> Word {
        let factor = tuple[self.other].pow(self.exponent);
        if self.left {
            &factor * &tuple[self.target]
        } else {
            &tuple[self.target] * &factor
        }
    }

    /// The elementary automorphism `ν` with `U ∘ ν` equal to the moved tuple.
    fn as_endomorphism(self, rank: usize) -> Endomorphism {
        let mut e = Endomorphism::identity(rank);
        let moved = self.apply(&e.images);
        e.images[self.target] = moved;
        e
    }
}

/// Nielsen-reduces the image tuple of `e`. Succeeds when the tuple reduces to
/// a signed permutation of the generators, in which case the recorded moves
/// assemble the inverse.
///
/// Each round applies the elementary move that shortens the tuple most, ties
/// going to the lowest `(target, other, exponent, side)`. When no move
/// shortens the tuple, a breadth-first search over length-preserving moves
/// looks for a tuple that can be shortened. A basis always admits such a
/// non-increasing path, so exhausting the plateau proves `e` is not onto.
pub fn certify_automorphism(e: &Endomorphism) -> Result<Automorphism, NotAnAutomorphism> {
    let rank = e.rank;
    let mut tuple = e.images.clone();
    let mut moves: Vec<NielsenMove> = Vec::new();
    loop {
        if tuple.iter().any(Word::is_empty) {
            return Err(NotAnAutomorphism { reduced: tuple });
        }
        if is_signed_permutation(&tuple) {
            break;
        }
        if let Some((mv, moved)) = best_shortening(&tuple) {
            tuple[mv.target] = moved;
            moves.push(mv);
            continue;
        }
        match plateau_escape(&tuple) {
            Some(path) => {
                for mv in path {
                    tuple[mv.target] = mv.apply(&tuple);
                    moves.push(mv);
                }
            }
            None => return Err(NotAnAutomorphism { reduced: tuple }),
        }
    }
    // Terminal tuple must be x_{σ(i)}^{e_i} with σ a permutation.
    let mut seen = vec![false; rank];
    let mut perm_inverse = vec![Word::empty(rank); rank];
    for (i, w) in tuple.iter().enumerate() {
        if w.len() != 1 || seen[w.letters()[0].index as usize - 1] {
            return Err(NotAnAutomorphism { reduced: tuple });
        }
        let l = w.letters()[0];
        seen[l.index as usize - 1] = true;
        let xi = Word::generator(i as u32 + 1, rank).expect("index in range");
        perm_inverse[l.index as usize - 1] = match l.sign {
            Sign::Pos => xi,
            Sign::Neg => xi.inverse(),
        };
    }
    // e ∘ ν_1 ∘ ... ∘ ν_k = π, so e⁻¹ = ν_1 ∘ ... ∘ ν_k ∘ π⁻¹.
    let mut nielsen = Endomorphism::identity(rank);
    for mv in &moves {
        nielsen = nielsen.compose(&mv.as_endomorphism(rank)).expect("same rank");
    }
    let inverse = nielsen
        .compose(&Endomorphism { rank, images: perm_inverse })
        .expect("same rank");
    Ok(Automorphism::from_verified(e.clone(), inverse))
}

fn elementary_moves(rank: usize) -> impl Iterator<Item = NielsenMove> {
    (0..rank).flat_map(move |target| {
        (0..rank).filter(move |&o| o != target).flat_map(move |other| {
            [1, -1].into_iter().flat_map(move |exponent| {
                [false, true].map(|left| NielsenMove { target, other, exponent, left })
            })
        })
    })
}

fn best_shortening(tuple: &[Word]) -> Option<(NielsenMove, Word)> {
    let mut best: Option<(usize, NielsenMove, Word)> = None;
    for mv in elementary_moves(tuple.len()) {
        let moved = mv.apply(tuple);
        let old = tuple[mv.target].len();
        if moved.len() < old && best.as_ref().is_none_or(|b| old - moved.len() > b.0) {
            best = Some((old - moved.len(), mv, moved));
        }
    }
    best.map(|(_, mv, moved)| (mv, moved))
}

fn is_signed_permutation(tuple: &[Word]) -> bool {
    let mut seen = vec![false; tuple.len()];
    tuple.iter().all(|w| {
        w.len() == 1 && !std::mem::replace(&mut seen[w.letters()[0].index as usize - 1], true)
    })
}

/// Tuples of one total length form a finite set; this caps the search well
/// above anything the certification tests meet.
const PLATEAU_LIMIT: usize = 200_000;

/// Moves leading from `tuple`, through tuples of the same total length, to
/// one where some move shortens.
fn plateau_escape(tuple: &[Word]) -> Option<Vec<NielsenMove>> {
    use std::collections::{HashMap, VecDeque};

    let mut parent: HashMap<Vec<Word>, Option<(Vec<Word>, NielsenMove)>> = HashMap::new();
    parent.insert(tuple.to_vec(), None);
    let mut queue = VecDeque::from([tuple.to_vec()]);
    while let Some(state) = queue.pop_front() {
        if best_shortening(&state).is_some() {
            let mut path = Vec::new();
            let mut cursor = state;
            while let Some(Some((prev, mv))) = parent.get(&cursor) {
                path.push(*mv);
                cursor = prev.clone();
            }
            path.reverse();
            return Some(path);
        }
        for mv in elementary_moves(state.len()) {
            let moved = mv.apply(&state);
            if moved.len() != state[mv.target].len() {
                continue;
            }
            let mut next = state.clone();
            next[mv.target] = moved;
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((state.clone(), mv)));
                queue.push_back(next);
            }
        }
        if parent.len() > PLATEAU_LIMIT {
            return None;
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleKind {
    /// `x_1 ↦ x_1·r^{-x_1^{-2}}` for `r = x_1²⋯x_n²`.
    NonorientablePhi,
    /// The three-factor variant moving `x_1` and `x_n`.
    NonorientablePsi,
    /// `x_1 ↦ x_1·r` for `r = [x_1,x_2]⋯[x_{n-1},x_n]`.
    OrientablePhi,
    /// `x_1 ↦ r^{[x_2,x_1]}·x_1`, `x_2 ↦ x_2^{r^{[x_2,x_1]}}`.
    OrientablePsi,
}

impl ExampleKind {
    pub const ALL: [ExampleKind; 4] = [
        ExampleKind::NonorientablePhi,
        ExampleKind::NonorientablePsi,
        ExampleKind::OrientablePhi,
        ExampleKind::OrientablePsi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleKind::NonorientablePhi => "nonorientable-phi",
            ExampleKind::NonorientablePsi => "nonorientable-psi",
            ExampleKind::OrientablePhi => "orientable-phi",
            ExampleKind::OrientablePsi => "orientable-psi",
        }
    }

    pub fn from_name(name: &str) -> Option<ExampleKind> {
        ExampleKind::ALL.into_iter().find(|k| k.name() == name)
    }

    fn orientable(self) -> bool {
        matches!(self, ExampleKind::OrientablePhi | ExampleKind::OrientablePsi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExampleError {
    #[error("{kind} needs an even rank n ≥ 4, got {rank}")]
    OrientableRank { kind: &'static str, rank: usize },
    #[error("{kind} needs rank n ≥ 2, got {rank}")]
    NonorientableRank { kind: &'static str, rank: usize },
    #[error("power must be at least 1")]
    Power,
    #[error("{0}")]
    NotAnAutomorphism(String),
}

/// `x_1²x_2²⋯x_n²` or `[x_1,x_2]⋯[x_{n-1},x_n]`.
pub fn surface_relator(orientable: bool, rank: usize) -> Word {
    let g = |i: usize| Word::generator(i as u32, rank).expect("index in range");
    let mut r = Word::empty(rank);
    if orientable {
        for i in (1..rank).step_by(2) {
            r = &r * &g(i).commutator(&g(i + 1)).expect("same rank");
        }
    } else {
        for i in 1..=rank {
            r = &r * &g(i).pow(2);
        }
    }
    r
}

/// The relator `base^power` and the image tuple of the example map, built
/// from that relator. Not certified.
pub fn example_endomorphism(
    kind: ExampleKind,
    rank: usize,
    power: u32,
) -> Result<(Presentation, Endomorphism), ExampleError> {
    if kind.orientable() && (rank < 4 || !rank.is_multiple_of(2)) {
        return Err(ExampleError::OrientableRank { kind: kind.name(), rank });
    }
    if !kind.orientable() && rank < 2 {
        return Err(ExampleError::NonorientableRank { kind: kind.name(), rank });
    }
    if power == 0 {
        return Err(ExampleError::Power);
    }
    let r = surface_relator(kind.orientable(), rank).pow(i64::from(power));
    let p = Presentation::new(rank, r.clone()).expect("surface relators are cyclically reduced");
    let g = |i: usize| Word::generator(i as u32, rank).expect("index in range");
    let conj = |w: &Word, by: &Word| w.conjugated_by(by).expect("same rank");
    let r_inv = r.inverse();
    let x1 = g(1);
    let mut images = Endomorphism::identity(rank).images;
    match kind {
        ExampleKind::NonorientablePhi => {
            // r^{-x_1^{-2}} = x_1^{-2}·r⁻¹·x_1^{2}
            images[0] = &x1 * &conj(&r_inv, &x1.pow(-2));
        }
        ExampleKind::NonorientablePsi => {
            let xn = g(rank);
            let a = conj(&r_inv, &x1.pow(-2));
            let b = conj(&r_inv, &xn.pow(-2));
            let c = conj(&r, &x1.pow(-2));
            images[0] = &(&(&a * &x1) * &b) * &c;
            images[rank - 1] = &(&a * &xn) * &c;
        }
        ExampleKind::OrientablePhi => {
            images[0] = &x1 * &r;
        }
        ExampleKind::OrientablePsi => {
            let s = conj(&r, &g(2).commutator(&x1).expect("same rank"));
            images[0] = &s * &x1;
            images[1] = conj(&g(2), &s);
        }
    }
    Ok((p, Endomorphism { rank, images }))
}

/// Builds one of the four example families and certifies it.
pub fn example_automorphism(
    kind: ExampleKind,
    rank: usize,
    power: u32,
) -> Result<(Presentation, Automorphism), ExampleError> {
    let (p, e) = example_endomorphism(kind, rank, power)?;
    let a = certify_automorphism(&e).map_err(|n| ExampleError::NotAnAutomorphism(n.to_string()))?;
    Ok((p, a))
}
