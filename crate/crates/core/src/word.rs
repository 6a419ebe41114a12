//! Words over the ring `Z_q`.
//!
//! A [`Word`] carries its alphabet size, so ring arithmetic never mixes two
//! alphabets. Positions are 1-based wherever they cross the public API.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single alphabet symbol, always in `0..q`.
pub type Symbol = u16;

/// Largest supported alphabet size.
pub const MAX_Q: u32 = 1 << 16;

/// The ring `Z_q` used as the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Alphabet {
    q: u32,
}

impl Alphabet {
    pub fn new(q: u32) -> Result<Self> {
        if !(2..=MAX_Q).contains(&q) {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Alphabet { q })
    }

    pub fn size(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(self, a: Symbol, b: Symbol) -> Symbol {
        ((a as u32 + b as u32) % self.q) as Symbol
    }

    #[inline]
    pub fn sub(self, a: Symbol, b: Symbol) -> Symbol {
        ((a as u32 + self.q - b as u32) % self.q) as Symbol
    }

    #[inline]
    pub fn neg(self, a: Symbol) -> Symbol {
        ((self.q - a as u32) % self.q) as Symbol
    }

    #[inline]
    pub fn mul(self, a: Symbol, b: Symbol) -> Symbol {
        ((a as u64 * b as u64) % self.q as u64) as Symbol
    }

    pub fn check(self, symbol: u32) -> Result<Symbol> {
        if symbol < self.q {
            Ok(symbol as Symbol)
        } else {
            Err(Error::SymbolOutOfRange { symbol, q: self.q })
        }
    }

    /// Nonzero symbols `1..q`.
    pub fn nonzero(self) -> impl Iterator<Item = Symbol> {
        (1..self.q).map(|a| a as Symbol)
    }
}

/// A finite string over `Z_q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        for &s in &symbols {
            alphabet.check(s as u32)?;
        }
        Ok(Word { alphabet, symbols })
    }

    /// Builds a word from symbols already known to be in range.
    pub(crate) fn from_raw(alphabet: Alphabet, symbols: Vec<Symbol>) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as u32) < alphabet.size()));
        Word { alphabet, symbols }
    }

    pub fn zeros(alphabet: Alphabet, len: usize) -> Self {
        Word::from_raw(alphabet, vec![0; len])
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word::from_raw(alphabet, Vec::new())
    }

    /// Parses the textual form: a digit string for `q <= 10`, otherwise
    /// comma-separated decimal integers.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let text = text.trim();
        let symbols = if alphabet.size() <= 10 {
            text.chars()
                .map(|c| {
                    let d = c.to_digit(10).ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))?;
                    alphabet.check(d)
                })
                .collect::<Result<Vec<_>>>()?
        } else if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|part| {
                    let v: u32 = part.trim().parse().map_err(|_| Error::Parse(format!("bad symbol {part:?}")))?;
                    alphabet.check(v)
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word::from_raw(alphabet, symbols))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn q(&self) -> u32 {
        self.alphabet.size()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Result<Symbol> {
        if i == 0 || i > self.len() {
            return Err(Error::PositionOutOfRange { pos: i, len: self.len() });
        }
        Ok(self.symbols[i - 1])
    }

    /// `|u|_a`: number of occurrences of `a`.
    pub fn count_symbol(&self, a: Symbol) -> usize {
        self.symbols.iter().filter(|&&s| s == a).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.count_symbol(0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.len() - self.count_zeros()
    }

    pub fn hamming_distance(&self, other: &Word) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(self.symbols.iter().zip(&other.symbols).filter(|(a, b)| a != b).count())
    }

    pub(crate) fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.q() != other.q() {
            return Err(Error::AlphabetMismatch { left: self.q(), right: other.q() });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    /// `u + a·e_i` for a 1-based position `i`.
    pub fn add_scaled_unit(&self, i: usize, a: Symbol) -> Result<Word> {
        if i == 0 || i > self.len() {
            return Err(Error::PositionOutOfRange { pos: i, len: self.len() });
        }
        let a = self.alphabet.check(a as u32)?;
        let mut symbols = self.symbols.clone();
        symbols[i - 1] = self.alphabet.add(symbols[i - 1], a);
        Ok(Word::from_raw(self.alphabet, symbols))
    }

    /// Elementwise difference `self - other`.
    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let al = self.alphabet;
        let symbols = self.symbols.iter().zip(&other.symbols).map(|(&a, &b)| al.sub(a, b)).collect();
        Ok(Word::from_raw(al, symbols))
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.q() != other.q() {
            return Err(Error::AlphabetMismatch { left: self.q(), right: other.q() });
        }
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Word::from_raw(self.alphabet, symbols))
    }

    /// Subword on the 0-based half-open range.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word::from_raw(self.alphabet, self.symbols[range].to_vec())
    }

    /// True when `0^k` occurs as a substring.
    pub fn contains_zero_run(&self, k: usize) -> bool {
        longest_zero_run(&self.symbols) >= k
    }

    pub fn blocks(&self, k: usize) -> Result<BlockView> {
        BlockView::new(self.clone(), k)
    }
}

pub(crate) fn longest_zero_run(symbols: &[Symbol]) -> usize {
    let mut best = 0;
    let mut run = 0;
    for &s in symbols {
        if s == 0 {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q() <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (idx, s) in self.symbols.iter().enumerate() {
                if idx > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(q={}, \"{}\")", self.q(), self)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses with a default alphabet inferred as the smallest `q <= 10` that
/// fits; prefer [`Word::parse`] when `q` is known.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let max = s
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("unexpected character {c:?}"))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(0);
        Word::parse(s, Alphabet::new((max + 1).max(2))?)
    }
}

/// Partition of a word into consecutive length-`k` blocks; the last block is
/// shorter when `k` does not divide the length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockView {
    parent: Word,
    k: usize,
}

impl BlockView {
    pub fn new(parent: Word, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("block length must be positive".into()));
        }
        Ok(BlockView { parent, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parent(&self) -> &Word {
        &self.parent
    }

    pub fn count(&self) -> usize {
        self.parent.len().div_ceil(self.k)
    }

    /// Block `B_t` for a 1-based block index `t`.
    pub fn block(&self, t: usize) -> Option<&[Symbol]> {
        if t == 0 || t > self.count() {
            return None;
        }
        let start = (t - 1) * self.k;
        let end = (start + self.k).min(self.parent.len());
        Some(&self.parent.symbols()[start..end])
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Symbol]> {
        self.parent.symbols().chunks(self.k)
    }

    pub fn to_words(&self) -> Vec<Word> {
        let al = self.parent.alphabet();
        self.iter().map(|b| Word::from_raw(al, b.to_vec())).collect()
    }
}
