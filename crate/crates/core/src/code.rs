//! Enumerated codes: an ordered codeword list plus a hash index.

use std::collections::HashMap;

use serde::Serialize;

use crate::correct::{CijlSpec, EccSpec};
use crate::detect::DetectCodeSpec;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// Which construction produced a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CodeSpec {
    Detect(DetectCodeSpec),
    Cijl(CijlSpec),
    WBlock { kind: &'static str, q: u32, k: usize, n: usize },
    Ecc(EccSpec),
    Explicit { kind: &'static str, q: u32, n: usize, size: usize },
}

#[derive(Debug, Clone)]
pub struct Code {
    spec: CodeSpec,
    alphabet: Alphabet,
    words: Vec<Word>,
    index: HashMap<Vec<Symbol>, usize>,
}

impl Code {
    /// Keeps `words` in the given order, repeats included; lookups resolve
    /// to the first occurrence.
    pub fn new(spec: CodeSpec, alphabet: Alphabet, words: Vec<Word>) -> Result<Self> {
        let mut index = HashMap::with_capacity(words.len());
        for (pos, w) in words.iter().enumerate() {
            if w.q() != alphabet.size() {
                return Err(Error::AlphabetMismatch { left: w.q(), right: alphabet.size() });
            }
            index.entry(w.symbols().to_vec()).or_insert(pos);
        }
        Ok(Code { spec, alphabet, words, index })
    }

    /// A code given by an explicit word list.
    pub fn explicit(alphabet: Alphabet, words: Vec<Word>) -> Result<Self> {
        let n = words.first().map_or(0, Word::len);
        let spec = CodeSpec::Explicit { kind: "explicit", q: alphabet.size(), n, size: words.len() };
        Code::new(spec, alphabet, words)
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.q() == self.alphabet.size() && self.index.contains_key(w.symbols())
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        if w.q() != self.alphabet.size() {
            return None;
        }
        self.index.get(w.symbols()).copied()
    }

    pub(crate) fn position_of_symbols(&self, s: &[Symbol]) -> Option<usize> {
        self.index.get(s).copied()
    }
}
