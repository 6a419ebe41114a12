//! Bounded descendant cones and the roots reachable through one error.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::{duplicate, ChannelEvent};
use crate::error::{Error, Result};
use crate::transform::{check_k, root_symbols};
use crate::word::{Alphabet, Symbol, Word};

pub const DEFAULT_CAP: usize = 10_000_000;

/// What rides along with each enumerated word: nothing, or the
/// lexicographically smallest event list reaching it. Keeping the smallest
/// makes witnesses independent of hash iteration order.
pub(crate) trait Tag: Clone {
    fn extend(&self, e: ChannelEvent) -> Self;
    fn prefer(&self, other: &Self) -> bool;
}

impl Tag for () {
    fn extend(&self, _: ChannelEvent) {}
    fn prefer(&self, _: &()) -> bool {
        false
    }
}

impl Tag for Vec<ChannelEvent> {
    fn extend(&self, e: ChannelEvent) -> Self {
        let mut v = self.clone();
        v.push(e);
        v
    }
    fn prefer(&self, other: &Self) -> bool {
        self < other
    }
}

pub(crate) type Layer<T> = HashMap<Vec<Symbol>, T>;

fn insert<T: Tag>(layer: &mut Layer<T>, word: Vec<Symbol>, tag: T, cap: usize) -> Result<()> {
    match layer.entry(word) {
        Entry::Occupied(mut slot) => {
            if tag.prefer(slot.get()) {
                slot.insert(tag);
            }
        }
        Entry::Vacant(slot) => {
            slot.insert(tag);
            if layer.len() > cap {
                return Err(Error::ResourceCap { cap });
            }
        }
    }
    Ok(())
}

fn seed<T: Tag>(x: &Word, tag: T) -> Layer<T> {
    HashMap::from([(x.symbols().to_vec(), tag)])
}

pub(crate) fn dup_step<T: Tag>(src: &Layer<T>, k: usize, out: &mut Layer<T>, cap: usize) -> Result<()> {
    for (w, tag) in src {
        for pos in 0..(w.len() + 1).saturating_sub(k) {
            insert(out, duplicate(w, pos, k), tag.extend(ChannelEvent::Duplication { pos }), cap)?;
        }
    }
    Ok(())
}

pub(crate) fn noisy_step<T: Tag>(al: Alphabet, src: &Layer<T>, k: usize, out: &mut Layer<T>, cap: usize) -> Result<()> {
    for (w, tag) in src {
        for pos in 0..(w.len() + 1).saturating_sub(k) {
            let base = duplicate(w, pos, k);
            for offset in 1..=k {
                let at = pos + k + offset - 1;
                for value in al.nonzero() {
                    let mut s = base.clone();
                    s[at] = al.add(s[at], value);
                    let e = ChannelEvent::NoisyDuplication { pos, offset, value };
                    insert(out, s, tag.extend(e), cap)?;
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn sub_step<T: Tag>(al: Alphabet, src: &Layer<T>, out: &mut Layer<T>, cap: usize) -> Result<()> {
    for (w, tag) in src {
        for i in 0..w.len() {
            for value in al.nonzero() {
                let mut s = w.clone();
                s[i] = al.add(s[i], value);
                insert(out, s, tag.extend(ChannelEvent::Substitution { pos: i + 1, value }), cap)?;
            }
        }
    }
    Ok(())
}

fn check_cone_args(x: &Word, k: usize, t: usize, p: usize) -> Result<()> {
    check_k(k)?;
    if p > 1 {
        return Err(Error::InvalidParameter(format!("at most one error is modelled, got p={p}")));
    }
    if t > 0 && x.len() < k {
        return Err(Error::WordTooShort { len: x.len(), k });
    }
    Ok(())
}

/// `layers[s]` holds words after the current number of duplications with
/// exactly `s` noisy ones.
pub(crate) fn restricted_layer<T: Tag>(x: &Word, k: usize, t: usize, p: usize, tag: T, cap: usize) -> Result<Layer<T>> {
    check_cone_args(x, k, t, p)?;
    if t < p {
        return Err(Error::InvalidParameter(format!("t={t} duplications cannot include p={p} noisy ones")));
    }
    let al = x.alphabet();
    let mut clean = seed(x, tag);
    let mut noisy: Layer<T> = HashMap::new();
    for _ in 0..t {
        let mut next_noisy = HashMap::new();
        if p == 1 {
            dup_step(&noisy, k, &mut next_noisy, cap)?;
            noisy_step(al, &clean, k, &mut next_noisy, cap)?;
        }
        let mut next_clean = HashMap::new();
        dup_step(&clean, k, &mut next_clean, cap)?;
        clean = next_clean;
        noisy = next_noisy;
    }
    Ok(if p == 1 { noisy } else { clean })
}

/// `t` duplications and `p` substitutions, interleaved in every order.
pub(crate) fn unrestricted_layer<T: Tag>(
    x: &Word,
    k: usize,
    t: usize,
    p: usize,
    tag: T,
    cap: usize,
) -> Result<Layer<T>> {
    check_cone_args(x, k, t, p)?;
    let al = x.alphabet();
    // grid[d] = words after d duplications and `s` substitutions, built row
    // by row over s
    let mut prev_row: Vec<Layer<T>> = Vec::new();
    for s in 0..=p {
        let mut row: Vec<Layer<T>> = Vec::with_capacity(t + 1);
        for d in 0..=t {
            let mut cell = if s == 0 && d == 0 { seed(x, tag.clone()) } else { HashMap::new() };
            if d > 0 {
                dup_step(&row[d - 1], k, &mut cell, cap)?;
            }
            if s > 0 {
                sub_step(al, &prev_row[d], &mut cell, cap)?;
            }
            row.push(cell);
        }
        prev_row = row;
    }
    Ok(prev_row.pop().unwrap_or_default())
}

fn to_words<T>(al: Alphabet, layer: Layer<T>) -> BTreeSet<Word> {
    layer.into_keys().map(|s| Word::from_raw(al, s)).collect()
}

/// `D^{t(p)}(x)`: `t` duplications of which exactly `p` are noisy.
pub fn descendants_restricted(x: &Word, k: usize, t: usize, p: usize, cap: usize) -> Result<BTreeSet<Word>> {
    Ok(to_words(x.alphabet(), restricted_layer(x, k, t, p, (), cap)?))
}

/// `D^{t,p}(x)`: `t` duplications and `p` substitutions at any stage.
pub fn descendants_unrestricted(x: &Word, k: usize, t: usize, p: usize, cap: usize) -> Result<BTreeSet<Word>> {
    Ok(to_words(x.alphabet(), unrestricted_layer(x, k, t, p, (), cap)?))
}

/// Roots of `words`, optionally only those of length `length_filter`.
/// Words shorter than `k` are their own roots.
pub fn root_set<'a>(
    words: impl IntoIterator<Item = &'a Word>,
    k: usize,
    length_filter: Option<usize>,
) -> Result<BTreeSet<Word>> {
    check_k(k)?;
    Ok(words
        .into_iter()
        .map(|w| {
            if w.len() < k {
                w.clone()
            } else {
                Word::from_raw(w.alphabet(), root_symbols(w.alphabet(), w.symbols(), k))
            }
        })
        .filter(|r| length_filter.is_none_or(|n| r.len() == n))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseModel {
    /// The error is a substitution inside a freshly inserted copy.
    Restricted,
    /// The error is a substitution anywhere, at any stage.
    Unrestricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HorizonSchedule {
    /// Compare horizons `h-1` and `h`.
    Linear,
    /// Compare horizons `h/2` and `h` at `h = 1, 2, 4, ...`.
    Doubling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureConfig {
    pub model: NoiseModel,
    /// Largest number of exact duplications preceding the error.
    pub max_horizon: usize,
    /// Stop at the first checkpoint where the root set stopped growing.
    pub stop_when_stable: bool,
    pub schedule: HorizonSchedule,
    /// Also count `rt(x)` itself (error-free outcome).
    pub include_error_free: bool,
    pub cap: usize,
}

impl ClosureConfig {
    pub fn new(model: NoiseModel, max_horizon: usize) -> Self {
        ClosureConfig {
            model,
            max_horizon,
            stop_when_stable: false,
            schedule: HorizonSchedule::Linear,
            include_error_free: false,
            cap: DEFAULT_CAP,
        }
    }
}

/// Roots reachable from `x` by exact duplications and one error.
///
/// Because exact duplications never change a root, the error can always be
/// taken as the last event: horizon `h` means `h` exact duplications and
/// then the error. For the restricted model, the cumulative set through
/// horizon `h` is `rt(D^{h+1 (1)}(x))`; for the unrestricted model it is
/// `rt(D^{h,1}(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootClosure {
    /// Root to the smallest event list realising it.
    pub roots: BTreeMap<Word, Vec<ChannelEvent>>,
    /// Last horizon enumerated.
    pub horizon: usize,
    /// Whether the final checkpoint added no new root.
    pub stabilized: bool,
    /// Cumulative root count after each horizon `0..=horizon`.
    pub growth: Vec<usize>,
}

pub fn error_root_closure(x: &Word, k: usize, config: &ClosureConfig) -> Result<RootClosure> {
    check_k(k)?;
    if x.len() < k {
        return Err(Error::WordTooShort { len: x.len(), k });
    }
    let al = x.alphabet();
    let cap = config.cap;
    let mut roots: HashMap<Vec<Symbol>, Vec<ChannelEvent>> = HashMap::new();
    if config.include_error_free {
        roots.insert(root_symbols(al, x.symbols(), k), Vec::new());
    }
    let mut clean: Layer<Vec<ChannelEvent>> = seed(x, Vec::new());
    let mut growth = Vec::new();
    let mut stabilized = false;
    let mut h = 0;
    loop {
        let mut errored = HashMap::new();
        match config.model {
            NoiseModel::Restricted => noisy_step(al, &clean, k, &mut errored, cap)?,
            NoiseModel::Unrestricted => sub_step(al, &clean, &mut errored, cap)?,
        }
        for (w, trace) in errored {
            let r = root_symbols(al, &w, k);
            match roots.entry(r) {
                Entry::Occupied(mut slot) => {
                    if trace < *slot.get() {
                        slot.insert(trace);
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(trace);
                }
            }
        }
        growth.push(roots.len());
        if h >= 1 {
            let prev = match config.schedule {
                HorizonSchedule::Linear => h - 1,
                HorizonSchedule::Doubling => h / 2,
            };
            stabilized = growth[prev] == growth[h];
        }
        let checkpoint = match config.schedule {
            HorizonSchedule::Linear => h >= 1,
            HorizonSchedule::Doubling => h.is_power_of_two(),
        };
        if h >= config.max_horizon || (config.stop_when_stable && checkpoint && stabilized) {
            break;
        }
        let mut next = HashMap::new();
        dup_step(&clean, k, &mut next, cap)?;
        clean = next;
        h += 1;
    }
    Ok(RootClosure {
        roots: roots.into_iter().map(|(r, t)| (Word::from_raw(al, r), t)).collect(),
        horizon: h,
        stabilized,
        growth,
    })
}
