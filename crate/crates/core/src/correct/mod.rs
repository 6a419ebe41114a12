//! Substitution handling: Hamming cosets on top of the detecting codes,
//! the W constraint, and the single-substitution-correcting code.

pub mod ecc;
pub mod field;
pub mod hamming;
pub mod wblock;

use serde::Serialize;

use crate::code::{Code, CodeSpec};
use crate::detect::{aux_member, DetectCodeSpec};
use crate::enumerate::{all_words, rll_words};
use crate::error::{Error, Result};
use crate::transform::{inverse_symbols, tail_symbols};
use crate::word::{Alphabet, Word};

pub use ecc::{ecc_decode, ecc_encode, EccCode, EccDecodeReport, EccSpec, EccStatus, SlotKind};
pub use field::is_prime;
pub use hamming::{coset_index, hamming_redundancy, shortened_hamming, syndrome, HammingCode};
pub use wblock::{is_w, marker_count, w_block_code_size, w_block_decode, w_block_encode, w_block_payloads};

/// `C_{i,j,ℓ}`: members of `C_{i,j}` whose full transform word lies in
/// the `ℓ`-th coset of the shortened Hamming code of length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CijlSpec {
    pub kind: &'static str,
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub l: usize,
    /// Hamming redundancy, so `l < q^r`.
    pub r: usize,
}

impl CijlSpec {
    pub fn new(q: u32, k: usize, n: usize, i: usize, j: usize, l: usize) -> Result<Self> {
        DetectCodeSpec::cij(q, k, n, i, j)?;
        let h = shortened_hamming(q, n)?;
        h.coset(l)?;
        Ok(CijlSpec { kind: "cijl", q, k, n, i, j, l, r: h.r })
    }

    pub fn cij(&self) -> DetectCodeSpec {
        DetectCodeSpec::cij(self.q, self.k, self.n, self.i, self.j).expect("validated on construction")
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.q).expect("validated on construction")
    }

    pub fn hamming(&self) -> HammingCode {
        shortened_hamming(self.q, self.n).expect("validated on construction")
    }
}

/// The coset index of `φ(x)` read as one word of length `|x|`.
pub fn transform_coset(x: &Word, k: usize) -> Result<usize> {
    let h = shortened_hamming(x.q(), x.len())?;
    let full = crate::transform::phi(x, k)?.to_word();
    coset_index(&h, &full)
}

pub fn cijl_member(x: &Word, spec: &CijlSpec) -> Result<bool> {
    if !crate::detect::cij_member(x, &spec.cij())? {
        return Ok(false);
    }
    Ok(transform_coset(x, spec.k)? == spec.l)
}

/// All of `C_{i,j,ℓ}`, sorted.
pub fn enumerate_cijl(spec: &CijlSpec, cap: usize) -> Result<Code> {
    let al = spec.alphabet();
    let k = spec.k;
    let params = spec.cij().aux_params();
    let h = spec.hamming().coset(spec.l)?;
    let heads = all_words(al, k, cap)?;
    let mut words = Vec::new();
    let mut seen = 0usize;
    for z in rll_words(al, spec.n - k, k, cap)?.into_iter().filter(|z| aux_member(z, &params)) {
        for y in &heads {
            let mut full = y.symbols().to_vec();
            full.extend_from_slice(z.symbols());
            if h.syndrome_symbols(&full) == h.syndrome_target {
                words.push(Word::from_raw(al, inverse_symbols(al, y.symbols(), z.symbols())));
            }
        }
        seen += heads.len();
        if seen > cap {
            return Err(Error::ResourceCap { cap });
        }
    }
    words.sort_unstable();
    Code::new(CodeSpec::Cijl(*spec), al, words)
}

/// The `(i, j, ℓ)` class of an irreducible word, `None` when reducible.
pub fn cijl_class(x: &Word, k: usize) -> Result<Option<(usize, usize, usize)>> {
    let Some((i, j)) = crate::detect::cij_class(x, k)? else {
        return Ok(None);
    };
    debug_assert!(crate::transform::is_rll_symbols(&tail_symbols(x.alphabet(), x.symbols(), k), k));
    Ok(Some((i, j, transform_coset(x, k)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::irreducible_words;

    #[test]
    fn cosets_partition_cij() {
        let al = Alphabet::new(2).unwrap();
        let (k, n) = (2, 7);
        let irr = irreducible_words(al, n, k, 10_000).unwrap();
        let r = shortened_hamming(2, n).unwrap().r;
        let mut total = 0;
        for i in 0..3 {
            for j in 0..3 {
                for l in 0..(1usize << r) {
                    let spec = CijlSpec::new(2, k, n, i, j, l).unwrap();
                    let code = enumerate_cijl(&spec, 10_000).unwrap();
                    for c in code.words() {
                        assert!(cijl_member(c, &spec).unwrap());
                        assert_eq!(cijl_class(c, k).unwrap(), Some((i, j, l)));
                    }
                    total += code.len();
                }
            }
        }
        assert_eq!(total, irr.len());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(CijlSpec::new(4, 2, 7, 0, 0, 0).is_err());
        assert!(CijlSpec::new(2, 2, 7, 0, 0, 8).is_err());
        assert!(CijlSpec::new(2, 2, 7, 3, 0, 0).is_err());
    }
}
