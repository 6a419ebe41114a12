//! A code correcting any number of `k`-duplications plus one substitution.
//!
//! Codewords are built in the transform domain. The head is `1^k`. The tail
//! follows one marker pattern throughout (positions `i mod k >= k - 2` are
//! nonzero), which keeps it in W:
//!
//! * the first `I = N - r` tail slots carry a block-encoded payload;
//! * the next free slots hold parity, chosen so the symbol-domain word lies
//!   in a shortened Hamming code;
//! * every other slot is a cushion fixed to 1.
//!
//! The Hamming code needs one column per symbol of the whole codeword, so
//! its check count `r_h` can exceed the nominal `r`; it is the least value
//! for which the resulting length fits.

use serde::Serialize;

use super::field::solve;
use super::hamming::{hamming_redundancy, HammingCode};
use super::wblock::{is_marker, pack, unpack};
use crate::error::{Error, Result};
use crate::transform::{inverse_symbols, tail_symbols};
use crate::word::{Alphabet, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SlotKind {
    /// Payload symbol stored as is.
    Info,
    /// Payload symbol stored plus one.
    InfoMarker,
    Parity,
    Cushion,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EccSpec {
    pub kind: &'static str,
    pub q: u32,
    pub k: usize,
    pub r: usize,
    /// `(q^r - 1)/(q - 1)`.
    pub big_n: usize,
    /// Payload length, `N - r`.
    pub info_len: usize,
    /// Checks of the Hamming code applied to the codeword.
    pub hamming_r: usize,
    pub n: usize,
    /// Role of every tail slot (length `n - k`).
    pub layout: Vec<SlotKind>,
    /// Left rotation applied to the Hamming columns.
    pub column_shift: usize,
}

/// An [`EccSpec`] together with its parity-check data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccCode {
    spec: EccSpec,
    alphabet: Alphabet,
    hamming: HammingCode,
    parity_slots: Vec<usize>,
    /// `H · φ⁻¹(0, e_p)` for each parity slot `p`, as rows of the system.
    parity_matrix: Vec<Vec<Symbol>>,
}

fn tail_layout(k: usize, info_len: usize, parity: usize) -> Vec<SlotKind> {
    let mut layout = Vec::new();
    let mut placed = 0;
    let mut i = 0;
    while placed < parity || i < info_len {
        let kind = match (i < info_len, is_marker(i, k)) {
            (true, false) => SlotKind::Info,
            (true, true) => SlotKind::InfoMarker,
            (false, true) => SlotKind::Cushion,
            (false, false) => {
                placed += 1;
                SlotKind::Parity
            }
        };
        layout.push(kind);
        i += 1;
    }
    layout
}

impl EccCode {
    pub fn new(q: u32, k: usize, r: usize) -> Result<Self> {
        let alphabet = Alphabet::new(q)?;
        if !super::field::is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if k < 3 {
            return Err(Error::InvalidParameter(format!("the correcting code needs k >= 3, got {k}")));
        }
        if r < 2 {
            return Err(Error::InvalidParameter(format!("the correcting code needs r >= 2, got {r}")));
        }
        let big_n = ((q as u128).pow(r as u32) - 1) / (q as u128 - 1);
        let big_n = usize::try_from(big_n).map_err(|_| Error::InvalidParameter("r too large".into()))?;
        let info_len = big_n - r;
        let mut hamming_r = r;
        let layout = loop {
            let layout = tail_layout(k, info_len, hamming_r);
            if hamming_redundancy(q, k + layout.len()) <= hamming_r {
                break layout;
            }
            hamming_r += 1;
        };
        let n = k + layout.len();
        let parity_slots: Vec<usize> =
            layout.iter().enumerate().filter(|(_, &s)| s == SlotKind::Parity).map(|(i, _)| i).collect();
        let base = HammingCode::with_redundancy(q, hamming_r, n)?;
        for shift in 0..n {
            let hamming = base.rotated(shift);
            let parity_matrix = parity_system(&hamming, alphabet, k, n, &parity_slots);
            let probe = vec![0; hamming_r];
            if solve(parity_matrix.clone(), probe, q).is_some() {
                let spec = EccSpec { kind: "ecc", q, k, r, big_n, info_len, hamming_r, n, layout, column_shift: shift };
                return Ok(EccCode { spec, alphabet, hamming, parity_slots, parity_matrix });
            }
        }
        Err(Error::SingularParity)
    }

    pub fn spec(&self) -> &EccSpec {
        &self.spec
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn hamming(&self) -> &HammingCode {
        &self.hamming
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    /// Every payload, in lexicographic order.
    pub fn payloads(&self, cap: usize) -> Result<Vec<Word>> {
        super::wblock::w_block_payloads_unchecked(self.alphabet, self.spec.k, self.spec.info_len, cap)
    }
}

/// Row-major `r_h x r_h` matrix whose column `c` is the syndrome of the
/// symbol-domain word with tail `e_{p_c}` and zero head.
fn parity_system(h: &HammingCode, al: Alphabet, k: usize, n: usize, slots: &[usize]) -> Vec<Vec<Symbol>> {
    let cols: Vec<Vec<Symbol>> = slots
        .iter()
        .map(|&p| {
            let mut tail = vec![0; n - k];
            tail[p] = 1;
            h.syndrome_symbols(&inverse_symbols(al, &vec![0; k], &tail))
        })
        .collect();
    (0..h.r).map(|row| cols.iter().map(|c| c[row]).collect()).collect()
}

pub fn ecc_encode(payload: &Word, code: &EccCode) -> Result<Word> {
    let spec = &code.spec;
    if payload.q() != spec.q {
        return Err(Error::AlphabetMismatch { left: payload.q(), right: spec.q });
    }
    if payload.len() != spec.info_len {
        return Err(Error::LengthMismatch { left: payload.len(), right: spec.info_len });
    }
    Ok(Word::from_raw(code.alphabet, encode_symbols(code, payload.symbols())?))
}

fn encode_symbols(code: &EccCode, payload: &[Symbol]) -> Result<Vec<Symbol>> {
    let spec = &code.spec;
    let al = code.alphabet;
    let mut tail: Vec<Symbol> = spec.layout.iter().map(|&s| Symbol::from(s == SlotKind::Cushion)).collect();
    tail[..spec.info_len].copy_from_slice(&pack(al, payload, spec.k)?);
    let head = vec![1 as Symbol; spec.k];
    let s0 = code.hamming.syndrome_symbols(&inverse_symbols(al, &head, &tail));
    let rhs: Vec<Symbol> = s0.iter().map(|&s| al.neg(s)).collect();
    let parity = solve(code.parity_matrix.clone(), rhs, spec.q).ok_or(Error::SingularParity)?;
    for (&p, v) in code.parity_slots.iter().zip(parity) {
        tail[p] = v;
    }
    Ok(inverse_symbols(al, &head, &tail))
}

/// Whether `y` arises from `c` through one duplication and at most one
/// substitution, before or after it.
fn within_one_step(al: Alphabet, c: &[Symbol], y: &[Symbol], k: usize) -> bool {
    let dup = |x: &[Symbol], pos: usize| {
        let mut out = x[..pos + k].to_vec();
        out.extend_from_slice(&x[pos..]);
        out
    };
    let close = |a: &[Symbol], b: &[Symbol]| a.iter().zip(b).filter(|(s, t)| s != t).count() <= 1;
    if (0..=c.len() - k).any(|pos| close(&dup(c, pos), y)) {
        return true;
    }
    let mut x = c.to_vec();
    for i in 0..c.len() {
        for a in al.nonzero() {
            x[i] = al.add(c[i], a);
            if (0..=c.len() - k).any(|pos| dup(&x, pos) == y) {
                return true;
            }
        }
        x[i] = c[i];
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EccStatus {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccDecodeReport {
    pub status: EccStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<Word>,
    /// Zero runs removed before the Hamming step.
    pub dedup_steps: usize,
    /// 1-based symbol position fixed by the Hamming step.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected_position: Option<usize>,
}

impl EccDecodeReport {
    fn error(dedup_steps: usize) -> Self {
        EccDecodeReport { status: EccStatus::Error, payload: None, dedup_steps, corrected_position: None }
    }

    pub fn is_ok(&self) -> bool {
        self.status == EccStatus::Ok
    }
}

/// Removes the leftmost `0^k` while the tail is longer than `target`.
fn dedup(v: &mut Vec<Symbol>, k: usize, target: usize) -> usize {
    let mut steps = 0;
    while v.len() > target {
        let Some(start) = v.windows(k).position(|w| w.iter().all(|&c| c == 0)) else {
            break;
        };
        v.drain(start..start + k);
        steps += 1;
    }
    steps
}

/// Hamming-corrects the candidate and reads back the payload.
fn finish(code: &EccCode, head: &[Symbol], tail: &[Symbol]) -> Option<(Vec<Symbol>, Option<usize>)> {
    let spec = &code.spec;
    let al = code.alphabet;
    let mut x = inverse_symbols(al, head, tail);
    let fix = code.hamming.locate(&x).ok()?;
    if let Some((i, a)) = fix {
        x[i] = al.sub(x[i], a);
    }
    if x[..spec.k].iter().any(|&c| c != 1) {
        return None;
    }
    let z = tail_symbols(al, &x, spec.k);
    for (&c, &kind) in z.iter().zip(&spec.layout) {
        let ok = match kind {
            SlotKind::Cushion => c == 1,
            SlotKind::InfoMarker => c != 0,
            SlotKind::Info | SlotKind::Parity => true,
        };
        if !ok {
            return None;
        }
    }
    let payload = unpack(&z[..spec.info_len], spec.k)?;
    Some((payload, fix.map(|(i, _)| i + 1)))
}

/// Recovers the payload from a word that went through any number of
/// duplications and at most one substitution.
///
/// Candidates: the tail deduplicated down to `n - k`, or, when a
/// substitution blocks that, the tails obtained by clearing the lone
/// nonzero symbol of some weight-1 window and deduplicating again. Every
/// candidate that survives Hamming correction and the layout checks must
/// name the same payload.
pub fn ecc_decode(y: &Word, code: &EccCode) -> EccDecodeReport {
    let spec = &code.spec;
    let (k, n) = (spec.k, spec.n);
    if y.q() != spec.q || y.len() < n || !(y.len() - n).is_multiple_of(k) {
        return EccDecodeReport::error(0);
    }
    let al = code.alphabet;
    let head = &y.symbols()[..k];
    let mut v = tail_symbols(al, y.symbols(), k);
    let target = n - k;
    let steps = dedup(&mut v, k, target);

    let mut candidates: Vec<(Vec<Symbol>, usize)> = Vec::new();
    if v.len() == target {
        candidates.push((v.clone(), steps));
    } else {
        let mut tried = vec![false; v.len()];
        for w in 0..=v.len() - k {
            let window = &v[w..w + k];
            if window.iter().filter(|&&c| c != 0).count() != 1 {
                continue;
            }
            let j = w + window.iter().position(|&c| c != 0).expect("weight one");
            if std::mem::replace(&mut tried[j], true) {
                continue;
            }
            // v - v_j ε_j in tail coordinates
            let mut u = v.clone();
            let a = u[j];
            u[j] = 0;
            if j + k < u.len() {
                u[j + k] = al.add(u[j + k], a);
            }
            let extra = dedup(&mut u, k, target);
            if u.len() == target {
                candidates.push((u, steps + extra));
            }
        }
    }

    let mut decoded: Vec<(Vec<Symbol>, usize, Option<usize>)> = Vec::new();
    for (tail, s) in &candidates {
        if let Some((payload, pos)) = finish(code, head, tail) {
            decoded.push((payload, *s, pos));
        }
    }
    if decoded.iter().any(|d| d.0 != decoded[0].0) {
        // Several weight-1 windows can overlap one broken zero run. Keep
        // the codewords from which the once-duplicated word is reachable.
        let received = inverse_symbols(al, head, &v);
        decoded.retain(|(payload, ..)| {
            let c = encode_symbols(code, payload).expect("payload read back from a codeword");
            within_one_step(al, &c, &received, k)
        });
        if decoded.is_empty() || decoded.iter().any(|d| d.0 != decoded[0].0) {
            return EccDecodeReport::error(steps);
        }
    }
    let best = decoded.into_iter().next();
    match best {
        Some((payload, s, pos)) => EccDecodeReport {
            status: EccStatus::Ok,
            payload: Some(Word::from_raw(al, payload)),
            dedup_steps: s,
            corrected_position: pos,
        },
        None => EccDecodeReport::error(steps),
    }
}
