//! Exhaustive word generators, guarded by a size cap.

use crate::error::{Error, Result};
use crate::transform::{check_k, inverse_symbols};
use crate::word::{Alphabet, Symbol, Word};

fn guard(count: u128, cap: usize) -> Result<()> {
    if count > cap as u128 {
        return Err(Error::ResourceCap { cap });
    }
    Ok(())
}

/// All of `Σ^n` in lexicographic order.
pub fn all_words(al: Alphabet, n: usize, cap: usize) -> Result<Vec<Word>> {
    let total = (al.size() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    guard(total, cap)?;
    let mut out = Vec::with_capacity(total as usize);
    let mut s = vec![0 as Symbol; n];
    loop {
        out.push(Word::from_raw(al, s.clone()));
        // odometer increment from the right
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            s[i] += 1;
            if u32::from(s[i]) < al.size() {
                break;
            }
            s[i] = 0;
        }
    }
}

/// `rll(m)`: words of length `m` without a run of `k` zeros, in
/// lexicographic order.
pub fn rll_words(al: Alphabet, m: usize, k: usize, cap: usize) -> Result<Vec<Word>> {
    check_k(k)?;
    let mut out = Vec::new();
    let mut s = Vec::with_capacity(m);
    rll_fill(al, m, k, 0, &mut s, &mut out, cap)?;
    Ok(out)
}

fn rll_fill(
    al: Alphabet,
    m: usize,
    k: usize,
    run: usize,
    s: &mut Vec<Symbol>,
    out: &mut Vec<Word>,
    cap: usize,
) -> Result<()> {
    if s.len() == m {
        out.push(Word::from_raw(al, s.clone()));
        return guard(out.len() as u128, cap);
    }
    for c in 0..al.size() as Symbol {
        let next_run = if c == 0 { run + 1 } else { 0 };
        if next_run < k {
            s.push(c);
            rll_fill(al, m, k, next_run, s, out, cap)?;
            s.pop();
        }
    }
    Ok(())
}

/// `Irr(n)` for `n >= k`: every head in `Σ^k` followed by every RLL tail.
/// Ordered by tail, then head.
pub fn irreducible_words(al: Alphabet, n: usize, k: usize, cap: usize) -> Result<Vec<Word>> {
    check_k(k)?;
    if n < k {
        return Err(Error::WordTooShort { len: n, k });
    }
    let tails = rll_words(al, n - k, k, cap)?;
    let heads = all_words(al, k, cap)?;
    guard(tails.len() as u128 * heads.len() as u128, cap)?;
    let mut out = Vec::with_capacity(tails.len() * heads.len());
    for z in &tails {
        for y in &heads {
            out.push(Word::from_raw(al, inverse_symbols(al, y.symbols(), z.symbols())));
        }
    }
    Ok(out)
}
