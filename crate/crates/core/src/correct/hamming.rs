//! Shortened Hamming codes over prime fields and their cosets.

use serde::Serialize;

use super::field::{inv, is_prime};
use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HammingCode {
    pub q: u32,
    pub r: usize,
    pub n: usize,
    /// Parity-check columns, each of length `r`.
    pub columns: Vec<Vec<Symbol>>,
    /// Syndrome shared by the words of this coset.
    pub syndrome_target: Vec<Symbol>,
}

/// Smallest `r` with `(q^r - 1)/(q - 1) >= n`.
pub fn hamming_redundancy(q: u32, n: usize) -> usize {
    let (mut r, mut len) = (0usize, 0u128);
    while len < n as u128 {
        len = len * q as u128 + 1;
        r += 1;
    }
    r.max(1)
}

/// The first `n` normalized vectors of `F_q^r` in lexicographic order
/// (first coordinate most significant), normalized meaning the first
/// nonzero entry is 1.
fn normalized_columns(q: u32, r: usize, n: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::with_capacity(n);
    let total = (q as u64).pow(r as u32);
    for code in 1..total {
        if out.len() == n {
            break;
        }
        let mut v = vec![0 as Symbol; r];
        let mut c = code;
        for slot in v.iter_mut().rev() {
            *slot = (c % q as u64) as Symbol;
            c /= q as u64;
        }
        if v.iter().find(|&&s| s != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// `[n, n - r, 3]` shortened Hamming code with `r` as small as possible.
pub fn shortened_hamming(q: u32, n: usize) -> Result<HammingCode> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("a Hamming code needs length at least 1".into()));
    }
    let r = hamming_redundancy(q, n);
    Ok(HammingCode { q, r, n, columns: normalized_columns(q, r, n), syndrome_target: vec![0; r] })
}

impl HammingCode {
    /// Unshortened redundancy fixed at `r`; needs `n <= (q^r - 1)/(q - 1)`.
    pub fn with_redundancy(q: u32, r: usize, n: usize) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if n == 0 || r == 0 || hamming_redundancy(q, n) > r {
            return Err(Error::InvalidParameter(format!("no Hamming code of length {n} with {r} checks over F_{q}")));
        }
        Ok(HammingCode { q, r, n, columns: normalized_columns(q, r, n), syndrome_target: vec![0; r] })
    }

    /// Same code with columns cyclically shifted left by `shift`.
    pub fn rotated(&self, shift: usize) -> Self {
        let mut columns = self.columns.clone();
        columns.rotate_left(shift % self.n.max(1));
        HammingCode { columns, ..self.clone() }
    }

    /// The coset whose syndrome encodes `index` in base `q`.
    pub fn coset(&self, index: usize) -> Result<Self> {
        let count = (self.q as u128).pow(self.r as u32);
        if index as u128 >= count {
            return Err(Error::InvalidParameter(format!("coset index {index} is not below {count}")));
        }
        let mut target = vec![0 as Symbol; self.r];
        let mut c = index;
        for slot in target.iter_mut().rev() {
            *slot = (c % self.q as usize) as Symbol;
            c /= self.q as usize;
        }
        Ok(HammingCode { syndrome_target: target, ..self.clone() })
    }

    pub fn coset_count(&self) -> u128 {
        (self.q as u128).pow(self.r as u32)
    }

    pub(crate) fn syndrome_symbols(&self, x: &[Symbol]) -> Vec<Symbol> {
        let q = self.q as u64;
        let mut s = vec![0u64; self.r];
        for (col, &xi) in self.columns.iter().zip(x) {
            if xi != 0 {
                for (acc, &h) in s.iter_mut().zip(col) {
                    *acc = (*acc + h as u64 * xi as u64) % q;
                }
            }
        }
        s.into_iter().map(|v| v as Symbol).collect()
    }

    fn check(&self, x: &Word) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch { left: x.len(), right: self.n });
        }
        if x.q() != self.q {
            return Err(Error::AlphabetMismatch { left: x.q(), right: self.q });
        }
        Ok(())
    }

    pub fn is_member(&self, x: &Word) -> Result<bool> {
        self.check(x)?;
        Ok(self.syndrome_symbols(x.symbols()) == self.syndrome_target)
    }

    /// Location and value of the single error explaining `x`, if any:
    /// `Ok(None)` for a member, `Ok(Some((i, a)))` when `x - a e_i` is a
    /// member (0-based `i`), `Err` when no single error explains `x`.
    pub(crate) fn locate(&self, x: &[Symbol]) -> std::result::Result<Option<(usize, Symbol)>, ()> {
        let q = self.q;
        let s: Vec<Symbol> = self
            .syndrome_symbols(x)
            .iter()
            .zip(&self.syndrome_target)
            .map(|(&a, &b)| ((a as u32 + q - b as u32) % q) as Symbol)
            .collect();
        let Some(lead) = s.iter().position(|&c| c != 0) else {
            return Ok(None);
        };
        // columns are normalized, so the error value is the leading entry
        let a = s[lead];
        let a_inv = inv(a, q) as u32;
        let normalized: Vec<Symbol> = s.iter().map(|&c| (c as u32 * a_inv % q) as Symbol).collect();
        match self.columns.iter().position(|col| *col == normalized) {
            Some(i) => Ok(Some((i, a))),
            None => Err(()),
        }
    }
}

pub fn syndrome(code: &HammingCode, x: &Word) -> Result<Vec<Symbol>> {
    code.check(x)?;
    Ok(code.syndrome_symbols(x.symbols()))
}

/// Base-`q` value of the syndrome, first coordinate most significant.
pub fn coset_index(code: &HammingCode, x: &Word) -> Result<usize> {
    Ok(syndrome(code, x)?.iter().fold(0usize, |acc, &s| acc * code.q as usize + s as usize))
}
