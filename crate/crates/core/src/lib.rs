//! Combinatorial tools for one-relator groups `F_n / ⟨⟨r⟩⟩`.
//!
//! * [`words`]: reduced and cyclic words, conjugation, commutators.
//! * [`whitehead`]: Whitehead graphs and their 2-connectivity.
//! * [`small_cancellation`]: pieces, `C'(λ)`, Dehn's algorithm, the
//!   hypothesis checker for relators whose automorphism kernel is inner.
//! * [`automorphisms`]: endomorphisms, certified automorphisms, conjugator
//!   extraction and kernel classification.
//! * [`primitivity`]: Whitehead minimization and primitivity tests.
//!
//! Conjugation follows `x^y = y·x·y⁻¹` and commutators `[x,y] = x⁻¹y⁻¹xy`.

pub mod automorphisms;
pub mod formats;
pub mod parse;
pub mod primitivity;
pub mod small_cancellation;
pub mod whitehead;
pub mod words;

pub use automorphisms::{
    certify_automorphism, example_automorphism, Automorphism, Endomorphism, ExampleKind, KernelVerdict,
};
pub use parse::{parse_word, parse_word_inferred, ParseError};
pub use small_cancellation::{Presentation, Rational};
pub use whitehead::WhiteheadGraph;
pub use words::{CyclicWord, Letter, Sign, Word};
