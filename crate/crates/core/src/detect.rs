//! Codes detecting one substitution hidden in a noisy duplication.
//!
//! The auxiliary codes split a word into blocks of `k` symbols, numbered
//! from 1, and constrain weighted sums of the zero counts of the blocks in
//! each residue class mod 4. Intersected with RLL tails they give the
//! 1ND-detecting family `C_{i,j}`.

use serde::Serialize;

use crate::code::{Code, CodeSpec};
use crate::enumerate::{all_words, irreducible_words, rll_words};
use crate::error::{Error, Result};
use crate::transform::{check_k, inverse_symbols, is_rll_symbols, root_symbols, tail_symbols};
use crate::word::{Alphabet, Symbol, Word};

/// Smallest odd integer larger than `k - 1`.
pub fn p_of_k(k: usize) -> usize {
    2 * k.saturating_sub(1).div_ceil(2) + 1
}

/// Zero counts `[Z_0, Z_1, Z_2, Z_3]`, with block `t` (1-based) feeding
/// `Z_{t mod 4}`.
pub(crate) fn z_sums(s: &[Symbol], k: usize) -> [usize; 4] {
    let mut z = [0; 4];
    for (i, chunk) in s.chunks(k).enumerate() {
        z[(i + 1) % 4] += chunk.iter().filter(|&&c| c == 0).count();
    }
    z
}

/// `Z_l(x)` for `l` in `0..4`.
pub fn z_sum(x: &Word, l: usize, k: usize) -> Result<usize> {
    check_k(k)?;
    if l > 3 {
        return Err(Error::InvalidParameter(format!("residue class {l} is not in 0..4")));
    }
    Ok(z_sums(x.symbols(), k)[l])
}

/// `((Z_0 + 2 Z_2) mod p, (Z_1 + 2 Z_3) mod p)`: the pair `(i, j)` whose
/// auxiliary code contains `z`.
pub fn aux_residues(z: &Word, k: usize) -> Result<(usize, usize)> {
    check_k(k)?;
    Ok(residues(z.symbols(), k))
}

fn residues(s: &[Symbol], k: usize) -> (usize, usize) {
    let p = p_of_k(k);
    let z = z_sums(s, k);
    ((z[0] + 2 * z[2]) % p, (z[1] + 2 * z[3]) % p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AuxParams {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub p: usize,
    pub i: usize,
    pub j: usize,
}

impl AuxParams {
    pub fn new(q: u32, k: usize, n: usize, i: usize, j: usize) -> Result<Self> {
        Alphabet::new(q)?;
        check_k(k)?;
        let p = p_of_k(k);
        if i >= p || j >= p {
            return Err(Error::InvalidParameter(format!("residues ({i}, {j}) must lie in 0..{p}")));
        }
        Ok(AuxParams { q, k, n, p, i, j })
    }
}

/// Membership in the auxiliary code: both weighted zero sums hit `(i, j)`.
pub fn aux_member(z: &Word, params: &AuxParams) -> bool {
    z.q() == params.q && z.len() == params.n && residues(z.symbols(), params.k) == (params.i, params.j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DetectKind {
    /// Auxiliary code over `rll(n)`; codewords are transform-domain tails.
    Aux,
    /// `C_{i,j}`.
    Cij,
    /// The constructive subcode of `C_{0,0}`.
    C3,
    /// All irreducible words of length `n`.
    Irreducible,
}

/// Where the constructive code reads its correction sums from.
///
/// `SymbolDomain` and `TransformDomain` take `ζ_l = Z_l` over
/// `φ^{-1}(0^k y)` and over `0^k y`, and emit the blocks as
/// `B_0 B_1 B_2 B_3`. With blocks numbered from 1 neither lands in
/// `C_{0,0}`: `B_0` sits in block 1, which feeds `Z_1`, not `Z_0`.
/// `Aligned` takes `ζ_l = Z_l(y)` and emits `B_1 B_2 B_3 B_0`, so block
/// `t` of the tail carries `B_{t mod 4}` and every block of `y` keeps its
/// residue class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaReading {
    SymbolDomain,
    TransformDomain,
    #[default]
    Aligned,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DetectCodeSpec {
    pub kind: DetectKind,
    pub q: u32,
    pub k: usize,
    /// Codeword length (for `Aux`, the tail length).
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub zeta: ZetaReading,
}

impl DetectCodeSpec {
    pub fn aux(q: u32, k: usize, n: usize, i: usize, j: usize) -> Result<Self> {
        Self::build(DetectKind::Aux, q, k, n, i, j)
    }

    pub fn cij(q: u32, k: usize, n: usize, i: usize, j: usize) -> Result<Self> {
        Self::build(DetectKind::Cij, q, k, n, i, j)
    }

    pub fn c3(q: u32, k: usize, n: usize, zeta: ZetaReading) -> Result<Self> {
        let mut spec = Self::build(DetectKind::C3, q, k, n, 0, 0)?;
        spec.zeta = zeta;
        Ok(spec)
    }

    pub fn irreducible(q: u32, k: usize, n: usize) -> Result<Self> {
        Self::build(DetectKind::Irreducible, q, k, n, 0, 0)
    }

    fn build(kind: DetectKind, q: u32, k: usize, n: usize, i: usize, j: usize) -> Result<Self> {
        AuxParams::new(q, k, n, i, j)?;
        let spec = DetectCodeSpec { kind, q, k, n, i, j, zeta: ZetaReading::default() };
        match kind {
            DetectKind::Cij | DetectKind::Irreducible if n < k => Err(Error::WordTooShort { len: n, k }),
            DetectKind::C3 => {
                if k < 2 || q as usize + k < 4 {
                    return Err(Error::InvalidParameter(format!(
                        "the constructive code needs k >= 2 and q + k >= 4, got q={q}, k={k}"
                    )));
                }
                if n < 5 * k {
                    return Err(Error::InvalidParameter(format!(
                        "the constructive code needs n >= 5k, got n={n}, k={k}"
                    )));
                }
                Ok(spec)
            }
            _ => Ok(spec),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.q).expect("validated on construction")
    }

    pub fn aux_params(&self) -> AuxParams {
        let tail = if self.kind == DetectKind::Aux { self.n } else { self.n - self.k };
        AuxParams { q: self.q, k: self.k, n: tail, p: p_of_k(self.k), i: self.i, j: self.j }
    }
}

/// The `(i, j)` with `x ∈ C_{i,j}`, or `None` when `x` is reducible.
pub fn cij_class(x: &Word, k: usize) -> Result<Option<(usize, usize)>> {
    check_k(k)?;
    if x.len() < k {
        return Err(Error::WordTooShort { len: x.len(), k });
    }
    let z = tail_symbols(x.alphabet(), x.symbols(), k);
    Ok(is_rll_symbols(&z, k).then(|| residues(&z, k)))
}

pub fn cij_member(x: &Word, spec: &DetectCodeSpec) -> Result<bool> {
    if x.len() != spec.n {
        return Err(Error::LengthMismatch { left: x.len(), right: spec.n });
    }
    if x.q() != spec.q {
        return Err(Error::AlphabetMismatch { left: x.q(), right: spec.q });
    }
    Ok(cij_class(x, spec.k)? == Some((spec.i, spec.j)))
}

/// Block lengths of zeros `[β_0, β_1, β_2, β_3]` for the tail `y`.
pub fn construct3_betas(y: &Word, k: usize, reading: ZetaReading) -> Result<[usize; 4]> {
    check_k(k)?;
    let al = y.alphabet();
    let zeta = match reading {
        ZetaReading::Aligned => z_sums(y.symbols(), k),
        ZetaReading::TransformDomain | ZetaReading::SymbolDomain => {
            let mut full = vec![0; k];
            full.extend_from_slice(y.symbols());
            if reading == ZetaReading::SymbolDomain {
                full = inverse_symbols(al, &full[..k], &full[k..]);
            }
            z_sums(&full, k)
        }
    };
    let p = p_of_k(k);
    let mut beta = [0; 4];
    for i in 0..2 {
        let target = (p - (zeta[i] + 2 * zeta[i + 2]) % p) % p;
        beta[i + 2] = target / 2;
        beta[i] = target - 2 * beta[i + 2];
    }
    if let Some(&bad) = beta.iter().find(|&&b| b >= k) {
        return Err(Error::BetaOutOfRange { beta: bad, k });
    }
    Ok(beta)
}

fn c3_tail(y: &Word, k: usize, reading: ZetaReading) -> Result<Vec<Symbol>> {
    let beta = construct3_betas(y, k, reading)?;
    let order: [usize; 4] = match reading {
        ZetaReading::Aligned => [1, 2, 3, 0],
        _ => [0, 1, 2, 3],
    };
    let mut z = Vec::with_capacity(4 * k + y.len());
    for b in order.map(|i| beta[i]) {
        z.extend(std::iter::repeat_n(0, b));
        z.extend(std::iter::repeat_n(1, k - b));
    }
    z.extend_from_slice(y.symbols());
    Ok(z)
}

/// Codeword `φ^{-1}(head · B-blocks · y)` of length `5k + |y|`.
pub fn construct3_encode(head: &Word, y: &Word, k: usize, reading: ZetaReading) -> Result<Word> {
    check_k(k)?;
    if k < 2 {
        return Err(Error::InvalidParameter("the constructive code needs k >= 2".into()));
    }
    if head.len() != k {
        return Err(Error::LengthMismatch { left: head.len(), right: k });
    }
    if head.q() != y.q() {
        return Err(Error::AlphabetMismatch { left: head.q(), right: y.q() });
    }
    if !is_rll_symbols(y.symbols(), k) {
        return Err(Error::NotRll { k });
    }
    let z = c3_tail(y, k, reading)?;
    Ok(Word::from_raw(head.alphabet(), inverse_symbols(head.alphabet(), head.symbols(), &z)))
}

/// Inverts [`construct3_encode`], returning `(head, y)`.
pub fn construct3_decode(c: &Word, k: usize, reading: ZetaReading) -> Result<(Word, Word)> {
    check_k(k)?;
    if c.len() < 5 * k {
        return Err(Error::WordTooShort { len: c.len(), k: 5 * k });
    }
    let al = c.alphabet();
    let z = tail_symbols(al, c.symbols(), k);
    let head = c.slice(0..k);
    let y = Word::from_raw(al, z[4 * k..].to_vec());
    let rebuilt = construct3_encode(&head, &y, k, reading)
        .map_err(|_| Error::InvalidParameter(format!("{c} is not a codeword")))?;
    if &rebuilt != c {
        return Err(Error::InvalidParameter(format!("{c} is not a codeword")));
    }
    Ok((head, y))
}

pub fn enumerate_code(spec: &DetectCodeSpec, cap: usize) -> Result<Code> {
    let al = spec.alphabet();
    let k = spec.k;
    let mut words = match spec.kind {
        DetectKind::Aux => {
            let params = spec.aux_params();
            let mut all = rll_words(al, spec.n, k, cap)?;
            all.retain(|z| aux_member(z, &params));
            all
        }
        DetectKind::Cij => {
            let params = spec.aux_params();
            let heads = all_words(al, k, cap)?;
            let mut out = Vec::new();
            for z in rll_words(al, spec.n - k, k, cap)?.into_iter().filter(|z| aux_member(z, &params)) {
                for y in &heads {
                    out.push(Word::from_raw(al, inverse_symbols(al, y.symbols(), z.symbols())));
                }
                if out.len() > cap {
                    return Err(Error::ResourceCap { cap });
                }
            }
            out
        }
        DetectKind::C3 => {
            let heads = all_words(al, k, cap)?;
            let mut out = Vec::new();
            for y in rll_words(al, spec.n - 5 * k, k, cap)? {
                for head in &heads {
                    out.push(construct3_encode(head, &y, k, spec.zeta)?);
                }
                if out.len() > cap {
                    return Err(Error::ResourceCap { cap });
                }
            }
            out
        }
        DetectKind::Irreducible => irreducible_words(al, spec.n, k, cap)?,
    };
    words.sort_unstable();
    Code::new(CodeSpec::Detect(*spec), al, words)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "codeword", rename_all = "snake_case")]
pub enum DecodeOutcome {
    Decoded(Word),
    DetectedError,
}

/// Outputs the codeword with the same root as `y`, if any.
pub fn detect_decode(y: &Word, code: &Code, k: usize) -> DecodeOutcome {
    if k == 0 || y.len() < k || y.q() != code.alphabet().size() {
        return DecodeOutcome::DetectedError;
    }
    let r = root_symbols(y.alphabet(), y.symbols(), k);
    match code.position_of_symbols(&r) {
        Some(i) => DecodeOutcome::Decoded(code.words()[i].clone()),
        None => DecodeOutcome::DetectedError,
    }
}
