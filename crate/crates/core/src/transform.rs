//! The k-discrete-derivative transform and everything built on it.
//!
//! `phi(x) = (x_1..x_k, x_{k+1..n} - x_{1..n-k})`. A tandem duplication of
//! length `k` leaves the head untouched and inserts `0^k` into the tail, so
//! the duplication root is obtained by reducing every zero run of the tail
//! modulo `k` and inverting the transform.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// `(head, tail)` view of a word in the transform domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransformPair {
    head: Word,
    tail: Word,
    k: usize,
}

impl TransformPair {
    pub fn new(head: Word, tail: Word, k: usize) -> Result<Self> {
        if head.len() != k {
            return Err(Error::LengthMismatch { left: head.len(), right: k });
        }
        if head.q() != tail.q() {
            return Err(Error::AlphabetMismatch { left: head.q(), right: tail.q() });
        }
        Ok(TransformPair { head, tail, k })
    }

    /// Splits a full transform-domain word into head and tail.
    pub fn from_word(full: &Word, k: usize) -> Result<Self> {
        if full.len() < k {
            return Err(Error::WordTooShort { len: full.len(), k });
        }
        Ok(TransformPair { head: full.slice(0..k), tail: full.slice(k..full.len()), k })
    }

    pub fn head(&self) -> &Word {
        &self.head
    }

    pub fn tail(&self) -> &Word {
        &self.tail
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The concatenation `head · tail`.
    pub fn to_word(&self) -> Word {
        let mut s = self.head.symbols().to_vec();
        s.extend_from_slice(self.tail.symbols());
        Word::from_raw(self.head.alphabet(), s)
    }
}

impl fmt::Display for TransformPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.head, self.tail)
    }
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("duplication length k must be at least 1".into()));
    }
    Ok(())
}

pub(crate) fn tail_symbols(al: Alphabet, x: &[Symbol], k: usize) -> Vec<Symbol> {
    (k..x.len()).map(|i| al.sub(x[i], x[i - k])).collect()
}

/// Forward recurrence `x_{k+i} = tail_i + x_i`.
pub(crate) fn inverse_symbols(al: Alphabet, head: &[Symbol], tail: &[Symbol]) -> Vec<Symbol> {
    let mut x = Vec::with_capacity(head.len() + tail.len());
    x.extend_from_slice(head);
    for (i, &t) in tail.iter().enumerate() {
        let prev = x[i];
        x.push(al.add(t, prev));
    }
    x
}

pub(crate) fn mu_symbols(z: &[Symbol], k: usize) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(z.len());
    let mut run = 0usize;
    for &s in z {
        if s == 0 {
            run += 1;
        } else {
            out.extend(std::iter::repeat_n(0, run % k));
            run = 0;
            out.push(s);
        }
    }
    out.extend(std::iter::repeat_n(0, run % k));
    out
}

/// Root of a raw symbol slice; the caller guarantees `x.len() >= k >= 1`.
pub(crate) fn root_symbols(al: Alphabet, x: &[Symbol], k: usize) -> Vec<Symbol> {
    let tail = tail_symbols(al, x, k);
    inverse_symbols(al, &x[..k], &mu_symbols(&tail, k))
}

pub(crate) fn is_rll_symbols(z: &[Symbol], k: usize) -> bool {
    crate::word::longest_zero_run(z) < k
}

pub fn phi(x: &Word, k: usize) -> Result<TransformPair> {
    check_k(k)?;
    if x.len() < k {
        return Err(Error::WordTooShort { len: x.len(), k });
    }
    let al = x.alphabet();
    Ok(TransformPair { head: x.slice(0..k), tail: Word::from_raw(al, tail_symbols(al, x.symbols(), k)), k })
}

pub fn phi_inv(pair: &TransformPair) -> Word {
    let al = pair.head.alphabet();
    Word::from_raw(al, inverse_symbols(al, pair.head.symbols(), pair.tail.symbols()))
}

/// Inverse transform of a full transform-domain word.
pub fn phi_inv_word(full: &Word, k: usize) -> Result<Word> {
    check_k(k)?;
    Ok(phi_inv(&TransformPair::from_word(full, k)?))
}

/// Replaces each maximal zero run of length `m` by one of length `m mod k`.
pub fn mu(z: &Word, k: usize) -> Result<Word> {
    check_k(k)?;
    Ok(Word::from_raw(z.alphabet(), mu_symbols(z.symbols(), k)))
}

/// Duplication root: the word left after removing every tandem repeat of
/// length `k`.
pub fn root(x: &Word, k: usize) -> Result<Word> {
    check_k(k)?;
    if x.len() < k {
        return Err(Error::WordTooShort { len: x.len(), k });
    }
    Ok(Word::from_raw(x.alphabet(), root_symbols(x.alphabet(), x.symbols(), k)))
}

/// No `0^k` substring.
pub fn is_rll(z: &Word, k: usize) -> bool {
    is_rll_symbols(z.symbols(), k)
}

pub fn is_irreducible(x: &Word, k: usize) -> Result<bool> {
    Ok(is_rll(phi(x, k)?.tail(), k))
}

/// Coefficients `a` with `v - u = sum a_i eps_i`, by the sweep
/// `a_i = (v_i - u_i) + a_{i-k}`.
pub fn epsilon_coefficients(u: &Word, v: &Word, k: usize) -> Result<Vec<Symbol>> {
    check_k(k)?;
    u.check_compatible(v)?;
    let al = u.alphabet();
    let mut a: Vec<Symbol> = Vec::with_capacity(u.len());
    for i in 0..u.len() {
        let d = al.sub(v.symbols()[i], u.symbols()[i]);
        let carry = if i >= k { a[i - k] } else { 0 };
        a.push(al.add(d, carry));
    }
    Ok(a)
}

/// Substitution distance: number of nonzero coordinates of `v - u` in the
/// `eps_i` basis.
pub fn sigma_distance(u: &Word, v: &Word, k: usize) -> Result<usize> {
    Ok(epsilon_coefficients(u, v, k)?.iter().filter(|&&a| a != 0).count())
}

/// `eps_i = phi(e_i)`: `e_i - e_{i+k}` when `i <= n-k`, else `e_i`.
pub fn epsilon_word(i: usize, n: usize, k: usize, alphabet: Alphabet) -> Result<Word> {
    check_k(k)?;
    if i == 0 || i > n {
        return Err(Error::PositionOutOfRange { pos: i, len: n });
    }
    let mut s = vec![0; n];
    s[i - 1] = 1;
    if i + k <= n {
        s[i + k - 1] = alphabet.neg(1);
    }
    Ok(Word::from_raw(alphabet, s))
}
