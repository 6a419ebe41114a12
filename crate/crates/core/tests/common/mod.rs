//! Independent reference implementations shared by the integration tests.
//! None of them go through the transform.
#![allow(dead_code)]

use dupcode::{Alphabet, Symbol, Word};

/// Every word of length `n` over `Z_q`, in lexicographic order.
pub fn all_words(q: u32, n: usize) -> impl Iterator<Item = Word> {
    let al = Alphabet::new(q).unwrap();
    let total = (q as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut s = vec![0 as Symbol; n];
        for slot in s.iter_mut().rev() {
            *slot = (code % q as u64) as Symbol;
            code /= q as u64;
        }
        Word::new(al, s).unwrap()
    })
}

/// Root by repeatedly deleting the second half of any tandem repeat `ww`
/// with `|w| = k`. The result does not depend on the deletion order.
pub fn root_by_deletion(x: &[Symbol], k: usize) -> Vec<Symbol> {
    let mut s = x.to_vec();
    'outer: loop {
        for i in 0..(s.len() + 1).saturating_sub(2 * k) {
            if s[i..i + k] == s[i + k..i + 2 * k] {
                s.drain(i + k..i + 2 * k);
                continue 'outer;
            }
        }
        return s;
    }
}

pub fn root_word(x: &Word, k: usize) -> Word {
    Word::new(x.alphabet(), root_by_deletion(x.symbols(), k)).unwrap()
}

/// No window of `k` zeros, checked window by window.
pub fn rll_by_windows(z: &[Symbol], k: usize) -> bool {
    k > 0 && !z.windows(k).any(|w| w.iter().all(|&c| c == 0))
}

/// `x` admits no tandem repeat of length `k`.
pub fn irreducible_by_windows(x: &[Symbol], k: usize) -> bool {
    (0..(x.len() + 1).saturating_sub(2 * k)).all(|i| x[i..i + k] != x[i + k..i + 2 * k])
}

/// Duplication-domain tail computed directly from the definition.
pub fn tail_direct(x: &Word, k: usize) -> Word {
    let q = x.q() as i64;
    let s = x.symbols();
    let t = (k..s.len()).map(|i| ((s[i] as i64 - s[i - k] as i64).rem_euclid(q)) as Symbol).collect();
    Word::new(x.alphabet(), t).unwrap()
}
