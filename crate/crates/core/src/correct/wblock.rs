//! The W constraint and a block code inside it.
//!
//! Splitting a word into blocks of `k`, the last two symbols of every block
//! (0-based positions `i` with `i mod k >= k - 2`) are markers and must be
//! nonzero. Every window of `k` consecutive symbols then covers two markers,
//! so the word is in W. The encoder is a bijection from payload words onto
//! that set: markers carry payload values `0..q-1` shifted up by one.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// Every window of `k` symbols has weight at least 2.
pub fn is_w(z: &Word, k: usize) -> Result<bool> {
    if k == 0 || z.len() < k {
        return Err(Error::WordTooShort { len: z.len(), k });
    }
    Ok(z.symbols().windows(k).all(|w| w.iter().filter(|&&c| c != 0).count() >= 2))
}

pub(crate) fn is_marker(i: usize, k: usize) -> bool {
    i % k >= k - 2
}

/// Number of markers in a word of length `n`: `⌊n/k⌋ + ⌊(n+1)/k⌋`.
pub fn marker_count(n: usize, k: usize) -> usize {
    n / k + (n + 1) / k
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("the block code needs k >= 3, got {k}")));
    }
    Ok(())
}

/// Shifts marker payloads up by one; the caller has validated `k`.
pub(crate) fn pack(al: Alphabet, payload: &[Symbol], k: usize) -> Result<Vec<Symbol>> {
    payload
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            if !is_marker(i, k) {
                Ok(s)
            } else if u32::from(s) + 1 < al.size() {
                Ok(s + 1)
            } else {
                Err(Error::InvalidParameter(format!(
                    "payload position {} is a marker slot and takes values 0..={}, got {s}",
                    i + 1,
                    al.size() - 2
                )))
            }
        })
        .collect()
}

/// `None` if some marker is zero.
pub(crate) fn unpack(z: &[Symbol], k: usize) -> Option<Vec<Symbol>> {
    z.iter()
        .enumerate()
        .map(|(i, &s)| match (is_marker(i, k), s) {
            (false, _) => Some(s),
            (true, 0) => None,
            (true, _) => Some(s - 1),
        })
        .collect()
}

pub fn w_block_encode(payload: &Word, k: usize) -> Result<Word> {
    check_k(k)?;
    if payload.len() < k {
        return Err(Error::WordTooShort { len: payload.len(), k });
    }
    Word::new(payload.alphabet(), pack(payload.alphabet(), payload.symbols(), k)?)
}

pub fn w_block_decode(z: &Word, k: usize) -> Result<Word> {
    check_k(k)?;
    let s = unpack(z.symbols(), k).ok_or_else(|| Error::InvalidParameter(format!("{z} has a zero marker")))?;
    Word::new(z.alphabet(), s)
}

/// Size of the payload space (and of the code) for length `n`:
/// `q^(n - markers) (q - 1)^markers`.
pub fn w_block_code_size(q: u32, k: usize, n: usize) -> BigUint {
    let markers = marker_count(n, k) as u32;
    BigUint::from(q).pow(n as u32 - markers) * BigUint::from(q - 1).pow(markers)
}

/// Every payload word of length `len`, in lexicographic order.
pub fn w_block_payloads(al: Alphabet, k: usize, len: usize, cap: usize) -> Result<Vec<Word>> {
    check_k(k)?;
    w_block_payloads_unchecked(al, k, len, cap)
}

pub(crate) fn w_block_payloads_unchecked(al: Alphabet, k: usize, len: usize, cap: usize) -> Result<Vec<Word>> {
    let size = w_block_code_size(al.size(), k, len);
    if size > BigUint::from(cap) {
        return Err(Error::ResourceCap { cap });
    }
    let radix: Vec<u32> = (0..len).map(|i| if is_marker(i, k) { al.size() - 1 } else { al.size() }).collect();
    let mut out = Vec::new();
    let mut s = vec![0 as Symbol; len];
    if radix.contains(&0) {
        return Ok(out);
    }
    loop {
        out.push(Word::from_raw(al, s.clone()));
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            s[i] += 1;
            if u32::from(s[i]) < radix[i] {
                break;
            }
            s[i] = 0;
        }
    }
}
