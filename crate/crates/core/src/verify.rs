//! Bounded certification of code properties.
//!
//! Every check compares roots rather than raw descendant sets. Descendant
//! sets are closed under further exact duplication, so two of them meet
//! exactly when their root sets meet.
//!
//! Horizons count duplications: `t_max = 2` explores up to two
//! duplications (for restricted noise, the noisy one included) together
//! with the single error. After reaching `t_max` the enumeration takes one
//! more duplication as a confirmation step; the run is `HorizonInconclusive`
//! when that step still produced new roots for some codeword.

use std::collections::HashMap;

use serde::Serialize;

use crate::channel::cone::unrestricted_layer;
use crate::channel::{
    apply_event, error_root_closure, ChannelEvent, ClosureConfig, EventTrace, NoiseModel, DEFAULT_CAP,
};
use crate::code::{Code, CodeSpec};
use crate::correct::{ecc_decode, ecc_encode, EccCode};
use crate::error::{Error, Result};
use crate::transform::root_symbols;
use crate::word::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Property {
    #[serde(rename = "dup")]
    Duplication,
    #[serde(rename = "1nd")]
    OneNoisyDetect,
    #[serde(rename = "1s-detect")]
    OneSubDetect,
    #[serde(rename = "1s-correct")]
    OneSubCorrect,
}

/// Two channel runs whose outputs share a root (or, for `decoded`, a run
/// the decoder got wrong).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub first: EventTrace,
    pub second: EventTrace,
    pub shared_root: Word,
    /// What the decoder returned for `first`, when the failure is a decode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decoded: Option<Option<Word>>,
}

impl Witness {
    /// Replays both traces and checks the claimed collision.
    pub fn replays(&self, k: usize) -> bool {
        let root = |t: &EventTrace| {
            t.replay(k).map(|y| Word::from_raw(y.alphabet(), root_symbols(y.alphabet(), y.symbols(), k)))
        };
        match (root(&self.first), root(&self.second)) {
            (Ok(a), Ok(b)) => a == self.shared_root && (self.decoded.is_some() || b == self.shared_root),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum VerifyStatus {
    Certified,
    CounterexampleFound(Box<Witness>),
    HorizonInconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub property: Property,
    pub params: CodeSpec,
    pub k: usize,
    pub horizon: usize,
    pub pairs_checked: u64,
    pub words_checked: u64,
    #[serde(flatten)]
    pub status: VerifyStatus,
}

impl VerifyReport {
    pub fn is_certified(&self) -> bool {
        self.status == VerifyStatus::Certified
    }

    /// Process exit code: 0 certified, 2 counterexample, 3 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            VerifyStatus::Certified => 0,
            VerifyStatus::CounterexampleFound(_) => 2,
            VerifyStatus::HorizonInconclusive => 3,
        }
    }
}

fn root_word(w: &Word, k: usize) -> Word {
    if w.len() < k {
        return w.clone();
    }
    Word::from_raw(w.alphabet(), root_symbols(w.alphabet(), w.symbols(), k))
}

fn pairs(n: usize) -> u64 {
    (n as u64) * (n.saturating_sub(1) as u64) / 2
}

/// First index with each root; `Err` with the colliding pair otherwise.
fn root_index(code: &Code, k: usize) -> std::result::Result<HashMap<Vec<Symbol>, usize>, (usize, usize)> {
    let mut index = HashMap::with_capacity(code.len());
    for (i, c) in code.words().iter().enumerate() {
        if let Some(&j) = index.get(root_word(c, k).symbols()) {
            return Err((j, i));
        }
        index.insert(root_word(c, k).into_symbols(), i);
    }
    Ok(index)
}

fn collision(code: &Code, k: usize, a: usize, b: usize) -> Box<Witness> {
    let (x, y) = (&code.words()[a], &code.words()[b]);
    Box::new(Witness {
        first: EventTrace::new(x.clone()),
        second: EventTrace::new(y.clone()),
        shared_root: root_word(x, k),
        decoded: None,
    })
}

fn report(property: Property, code: &Code, k: usize, horizon: usize, words: u64, status: VerifyStatus) -> VerifyReport {
    VerifyReport {
        property,
        params: code.spec().clone(),
        k,
        horizon,
        pairs_checked: pairs(code.len()),
        words_checked: words,
        status,
    }
}

/// Pairwise distinct roots, which by the root characterization means
/// disjoint duplication descendant sets. Exact, no horizon involved.
pub fn verify_duplication_code(code: &Code, k: usize) -> Result<VerifyReport> {
    crate::transform::check_k(k)?;
    let status = match root_index(code, k) {
        Ok(_) => VerifyStatus::Certified,
        Err((a, b)) => VerifyStatus::CounterexampleFound(collision(code, k, a, b)),
    };
    Ok(report(Property::Duplication, code, k, 0, code.len() as u64, status))
}

/// Runs `f` over the codewords on all cores, returning results in order.
fn parallel_map<T: Send>(words: &[Word], f: impl Fn(&Word) -> T + Sync) -> Vec<T> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(words.len().max(1));
    let chunk = words.len().div_ceil(threads).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> =
            words.chunks(chunk).map(|part| s.spawn(|| part.iter().map(&f).collect::<Vec<T>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn verify_error_roots(property: Property, code: &Code, k: usize, t_max: usize, cap: usize) -> Result<VerifyReport> {
    crate::transform::check_k(k)?;
    let index = match root_index(code, k) {
        Ok(index) => index,
        Err((a, b)) => {
            let status = VerifyStatus::CounterexampleFound(collision(code, k, a, b));
            return Ok(report(property, code, k, t_max, code.len() as u64, status));
        }
    };
    let (model, max_horizon) = match property {
        Property::OneNoisyDetect => {
            if t_max == 0 {
                return Err(Error::InvalidParameter("restricted noise needs t_max >= 1".into()));
            }
            (NoiseModel::Restricted, t_max)
        }
        _ => (NoiseModel::Unrestricted, t_max + 1),
    };
    let config = ClosureConfig { cap, ..ClosureConfig::new(model, max_horizon) };
    let results = parallel_map(code.words(), |c| {
        if c.len() < k {
            return Ok((None, true, 0));
        }
        let closure = error_root_closure(c, k, &config)?;
        let own = index[root_word(c, k).symbols()];
        let hit = closure.roots.iter().find_map(|(r, events)| match index.get(r.symbols()) {
            Some(&other) if other != own => Some((other, events.clone())),
            _ => None,
        });
        let stable = closure.growth.len() < 2 || closure.stabilized;
        Ok((hit, stable, closure.roots.len() as u64))
    });
    let mut words = 0;
    let mut all_stable = true;
    for (i, r) in results.into_iter().enumerate() {
        let (hit, stable, count) = r?;
        words += count;
        all_stable &= stable;
        if let Some((other, events)) = hit {
            let c = &code.words()[i];
            let w = Box::new(Witness {
                first: EventTrace { origin: c.clone(), events },
                second: EventTrace::new(code.words()[other].clone()),
                shared_root: root_word(&code.words()[other], k),
                decoded: None,
            });
            return Ok(report(property, code, k, t_max, words, VerifyStatus::CounterexampleFound(w)));
        }
    }
    let status = if all_stable { VerifyStatus::Certified } else { VerifyStatus::HorizonInconclusive };
    Ok(report(property, code, k, t_max, words, status))
}

/// Distinct roots, and no codeword's root reachable from another codeword
/// through duplications with one noisy copy.
pub fn verify_1nd(code: &Code, k: usize, t_max: usize) -> Result<VerifyReport> {
    verify_error_roots(Property::OneNoisyDetect, code, k, t_max, DEFAULT_CAP)
}

/// As [`verify_1nd`] with one substitution anywhere, at any stage.
pub fn verify_1s_detect(code: &Code, k: usize, t_max: usize) -> Result<VerifyReport> {
    verify_error_roots(Property::OneSubDetect, code, k, t_max, DEFAULT_CAP)
}

pub fn verify_with_cap(property: Property, code: &Code, k: usize, t_max: usize, cap: usize) -> Result<VerifyReport> {
    match property {
        Property::Duplication => verify_duplication_code(code, k),
        Property::OneSubCorrect => verify_1s_correct_with(code, k, t_max, cap, None),
        p => verify_error_roots(p, code, k, t_max, cap),
    }
}

/// Disjointness of `D^{*,≤1}` cones, through their root sets.
pub fn verify_1s_correct(code: &Code, k: usize, t_max: usize) -> Result<VerifyReport> {
    verify_1s_correct_with(code, k, t_max, DEFAULT_CAP, None)
}

/// A decoder under test maps a received word to a codeword.
pub type Decoder<'a> = &'a (dyn Fn(&Word) -> Option<Word> + Sync);

/// [`verify_1s_correct`] plus a sweep checking that `decoder` maps every
/// word of `D^{t,p}(c)`, `t <= t_max`, `p <= 1`, back to `c`.
pub fn verify_1s_correct_with(
    code: &Code,
    k: usize,
    t_max: usize,
    cap: usize,
    decoder: Option<Decoder<'_>>,
) -> Result<VerifyReport> {
    crate::transform::check_k(k)?;
    let property = Property::OneSubCorrect;
    if let Err((a, b)) = root_index(code, k) {
        let status = VerifyStatus::CounterexampleFound(collision(code, k, a, b));
        return Ok(report(property, code, k, t_max, code.len() as u64, status));
    }
    let config =
        ClosureConfig { include_error_free: true, cap, ..ClosureConfig::new(NoiseModel::Unrestricted, t_max + 1) };
    let closures = parallel_map(code.words(), |c| error_root_closure(c, k, &config));
    let mut owner: HashMap<&Word, (usize, &Vec<ChannelEvent>)> = HashMap::new();
    let mut words = 0u64;
    let mut all_stable = true;
    let closures: Vec<_> = closures.into_iter().collect::<Result<_>>()?;
    for (i, closure) in closures.iter().enumerate() {
        words += closure.roots.len() as u64;
        all_stable &= closure.stabilized;
        for (r, events) in &closure.roots {
            if let Some(&(j, other)) = owner.get(r) {
                if j != i {
                    let w = Box::new(Witness {
                        first: EventTrace { origin: code.words()[i].clone(), events: events.clone() },
                        second: EventTrace { origin: code.words()[j].clone(), events: other.clone() },
                        shared_root: r.clone(),
                        decoded: None,
                    });
                    return Ok(report(property, code, k, t_max, words, VerifyStatus::CounterexampleFound(w)));
                }
            }
            owner.insert(r, (i, events));
        }
    }
    if let Some(decode) = decoder {
        let sweeps = parallel_map(code.words(), |c| decoder_sweep(c, k, t_max, cap, decode));
        for s in sweeps {
            let (count, failure) = s?;
            words += count;
            if let Some(w) = failure {
                return Ok(report(property, code, k, t_max, words, VerifyStatus::CounterexampleFound(w)));
            }
        }
    }
    let status = if all_stable { VerifyStatus::Certified } else { VerifyStatus::HorizonInconclusive };
    Ok(report(property, code, k, t_max, words, status))
}

fn decoder_sweep(
    c: &Word,
    k: usize,
    t_max: usize,
    cap: usize,
    decode: Decoder<'_>,
) -> Result<(u64, Option<Box<Witness>>)> {
    let mut count = 0u64;
    for t in 0..=t_max {
        for p in 0..=1 {
            let layer = unrestricted_layer(c, k, t, p, Vec::<ChannelEvent>::new(), cap)?;
            let mut failures: Vec<(Vec<ChannelEvent>, Vec<Symbol>)> = Vec::new();
            for (y, events) in layer {
                count += 1;
                let y = Word::from_raw(c.alphabet(), y);
                if decode(&y).as_ref() != Some(c) {
                    failures.push((events, y.into_symbols()));
                }
            }
            if let Some((events, y)) = failures.into_iter().min() {
                let y = Word::from_raw(c.alphabet(), y);
                let trace = EventTrace { origin: c.clone(), events };
                let w = Witness {
                    first: trace.clone(),
                    second: trace,
                    shared_root: root_word(&y, k),
                    decoded: Some(decode(&y)),
                };
                return Ok((count, Some(Box::new(w))));
            }
        }
    }
    Ok((count, None))
}

/// Codewords of an [`EccCode`], in payload order.
pub fn ecc_codewords(code: &EccCode, cap: usize) -> Result<Code> {
    let words = code.payloads(cap)?.iter().map(|p| ecc_encode(p, code)).collect::<Result<Vec<_>>>()?;
    Code::new(CodeSpec::Ecc(code.spec().clone()), code.alphabet(), words)
}

/// [`verify_1s_correct_with`] on an [`EccCode`], sweeping its decoder.
pub fn verify_ecc(code: &EccCode, t_max: usize, cap: usize) -> Result<VerifyReport> {
    let words = ecc_codewords(code, cap)?;
    let decode = |y: &Word| ecc_decode(y, code).payload.map(|p| ecc_encode(&p, code).expect("decoded payloads encode"));
    verify_1s_correct_with(&words, code.spec().k, t_max, cap, Some(&decode))
}

/// Applies `events` in order, for witness inspection.
pub fn replay(origin: &Word, events: &[ChannelEvent], k: usize) -> Result<Word> {
    events.iter().try_fold(origin.clone(), |w, &e| apply_event(&w, e, k))
}
