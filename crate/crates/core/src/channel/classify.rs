//! Closed-form prediction of how one substitution moves the duplication root.
//!
//! Everything happens in the transform domain. A substitution `+a` at
//! symbol `i` adds `a` to tail coordinate `i-k` and `-a` to tail coordinate
//! `i` (when those exist), so its effect on `mu(tail)` depends only on the
//! zero runs around the touched coordinates. Tail indices below are 0-based.

use serde::Serialize;

use super::{duplicate, ChannelEvent};
use crate::error::{Error, Result};
use crate::transform::{check_k, tail_symbols};
use crate::word::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbiguousCase {
    /// The noisy symbol splits its zero run without wrapping, and `-b`
    /// cancels the symbol after it, which merges two runs into a multiple
    /// of `k`.
    C1,
    /// The split wraps around a multiple of `k`, and `-b` neither
    /// creates nor destroys a reduced block.
    C2,
    /// The noisy copy sits in the last `k` symbols, so only `+b` lands in
    /// the tail, and the split run keeps its reduced length.
    TrailingRun,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NotAmbiguousReason {
    /// Only `+b` lands in the tail and it lengthens the root.
    TrailingCopy { growth: usize },
    /// `+b` and `-b` are separated by zeros only.
    ZeroGap { growth: usize },
    /// The run analysis changes the root length by `delta`.
    RunShift { delta: isize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum NoisyClass {
    RootUnchanged,
    NotAmbiguous(NotAmbiguousReason),
    Ambiguous(AmbiguousCase),
}

impl NoisyClass {
    pub fn is_ambiguous(&self) -> bool {
        matches!(self, NoisyClass::Ambiguous(_))
    }

    /// Predicted `|rt(x')| - |rt(x)|`.
    pub fn root_length_change(&self) -> isize {
        match *self {
            NoisyClass::NotAmbiguous(NotAmbiguousReason::TrailingCopy { growth })
            | NoisyClass::NotAmbiguous(NotAmbiguousReason::ZeroGap { growth }) => growth as isize,
            NoisyClass::NotAmbiguous(NotAmbiguousReason::RunShift { delta }) => delta,
            _ => 0,
        }
    }
}

fn zeros_left(z: &[Symbol], t: usize) -> usize {
    z[..t].iter().rev().take_while(|&&c| c == 0).count()
}

fn zeros_right(z: &[Symbol], t: usize) -> usize {
    z[t + 1..].iter().take_while(|&&c| c == 0).count()
}

/// Reduced length of a zero run, i.e. its length under `mu`.
fn red(len: usize, k: usize) -> isize {
    (len % k) as isize
}

/// Change of `|mu(z)|` when only `z[t]` becomes `new`.
fn single_delta(z: &[Symbol], t: usize, new: Symbol, k: usize) -> isize {
    let (l1, l2) = (zeros_left(z, t), zeros_right(z, t));
    let split = red(l1, k) + 1 + red(l2, k);
    let merged = red(l1 + 1 + l2, k);
    match (z[t] == 0, new == 0) {
        (true, false) => split - merged,
        (false, true) => merged - split,
        _ => 0,
    }
}

/// Classifies the substitution carried by a noisy duplication of `x`.
pub fn classify_noisy_substitution(x: &Word, event: ChannelEvent, k: usize) -> Result<NoisyClass> {
    check_k(k)?;
    if k < 2 {
        return Err(Error::InvalidParameter("the classifier needs k >= 2".into()));
    }
    let ChannelEvent::NoisyDuplication { pos, offset, value } = event else {
        return Err(Error::InvalidParameter(format!("{event} is not a noisy duplication")));
    };
    // validates the event
    super::apply_event(x, event, k)?;
    let al = x.alphabet();
    let xd = duplicate(x.symbols(), pos, k);
    let z = tail_symbols(al, &xd, k);
    let b = value;
    // tail coordinates receiving +b and -b
    let t0 = pos + offset - 1;
    let tb = t0 + k;

    if tb >= z.len() {
        let growth = single_delta(&z, t0, b, k);
        return Ok(if growth == 0 {
            NoisyClass::Ambiguous(AmbiguousCase::TrailingRun)
        } else {
            NoisyClass::NotAmbiguous(NotAmbiguousReason::TrailingCopy { growth: growth as usize })
        });
    }

    let b_prime = z[tb];
    if z[t0 + 1..tb].iter().all(|&c| c == 0) {
        if b_prime == b {
            return Ok(NoisyClass::RootUnchanged);
        }
        let growth = if b_prime != 0 {
            k
        } else {
            let (l1, m2) = (zeros_left(&z, t0), zeros_right(&z, tb));
            let after = red(l1, k) + 1 + (k as isize - 1) + 1 + red(m2, k);
            (after - red(l1 + k + 1 + m2, k)) as usize
        };
        return Ok(NoisyClass::NotAmbiguous(NotAmbiguousReason::ZeroGap { growth }));
    }

    // The run holding t0 contains the whole inserted copy, so it is at
    // least k long; it ends before tb because a nonzero separates them.
    let run_start = t0 - zeros_left(&z, t0);
    let run_end = t0 + zeros_right(&z, t0);
    let m = (run_end - run_start + 1) % k;
    let i = tb - run_end;
    let (m1, m2) = (zeros_left(&z, tb), zeros_right(&z, tb));
    let merges = (m1 + m2 + 1) / k > m2 / k;
    let k = k as isize;
    let class = if i <= (k as usize) - m {
        if b_prime == b && merges {
            NoisyClass::Ambiguous(AmbiguousCase::C1)
        } else if b_prime == 0 && merges {
            NoisyClass::NotAmbiguous(NotAmbiguousReason::RunShift { delta: 2 * k })
        } else {
            NoisyClass::NotAmbiguous(NotAmbiguousReason::RunShift { delta: k })
        }
    } else if b_prime == b && merges {
        NoisyClass::NotAmbiguous(NotAmbiguousReason::RunShift { delta: -k })
    } else if b_prime == 0 && merges {
        NoisyClass::NotAmbiguous(NotAmbiguousReason::RunShift { delta: k })
    } else {
        NoisyClass::Ambiguous(AmbiguousCase::C2)
    };
    Ok(class)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubstitutionRegion {
    /// Position within the first `k` symbols: the head changes.
    Head,
    /// Position within the last `k` symbols but past the head: one tail
    /// coordinate changes.
    TailEnd,
    /// Two tail coordinates change, `k` apart; `zero_gap` when only zeros
    /// lie strictly between them.
    Interior { zero_gap: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SubstitutionOutcome {
    RootUnchanged,
    LengthChange {
        delta: isize,
    },
    /// Same root length, and the transformed roots are within Hamming
    /// distance `max_distance`.
    Local {
        max_distance: usize,
    },
    /// Same root length, and the root tails differ by one k-switch.
    Switch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SubstitutionAnalysis {
    pub region: SubstitutionRegion,
    pub outcome: SubstitutionOutcome,
}

impl SubstitutionAnalysis {
    /// Root changes while its length does not.
    pub fn is_ambiguous(&self) -> bool {
        matches!(self.outcome, SubstitutionOutcome::Local { .. } | SubstitutionOutcome::Switch)
    }
}

fn length_or(delta: isize, same: SubstitutionOutcome) -> SubstitutionOutcome {
    if delta == 0 {
        same
    } else {
        SubstitutionOutcome::LengthChange { delta }
    }
}

/// Predicts the root change caused by adding `value` at 1-based `pos`.
pub fn classify_substitution(x: &Word, pos: usize, value: Symbol, k: usize) -> Result<SubstitutionAnalysis> {
    check_k(k)?;
    if value == 0 {
        return Err(Error::ZeroValue);
    }
    let al = x.alphabet();
    al.check(value as u32)?;
    let n = x.len();
    if pos == 0 || pos > n {
        return Err(Error::PositionOutOfRange { pos, len: n });
    }
    if n < k {
        return Err(Error::WordTooShort { len: n, k });
    }
    let z = tail_symbols(al, x.symbols(), k);
    let a = value;

    if pos <= k {
        let outcome = if pos + k <= n {
            let t = pos - 1;
            length_or(single_delta(&z, t, al.sub(z[t], a), k), SubstitutionOutcome::Local { max_distance: 2 })
        } else {
            SubstitutionOutcome::Local { max_distance: 1 }
        };
        return Ok(SubstitutionAnalysis { region: SubstitutionRegion::Head, outcome });
    }
    if pos + k > n {
        let t = pos - k - 1;
        let outcome =
            length_or(single_delta(&z, t, al.add(z[t], a), k), SubstitutionOutcome::Local { max_distance: 1 });
        return Ok(SubstitutionAnalysis { region: SubstitutionRegion::TailEnd, outcome });
    }

    let (t1, t2) = (pos - k - 1, pos - 1);
    let (a1, a2) = (z[t1], z[t2]);
    let (n1, n2) = (al.add(a1, a), al.sub(a2, a));
    let zero_gap = z[t1 + 1..t2].iter().all(|&c| c == 0);
    let outcome = if zero_gap {
        interior_zero_gap(&z, t1, t2, [a1, a2, n1, n2], k)
    } else {
        let left = single_delta(&z, t1, n1, k);
        let right = single_delta(&z, t2, n2, k);
        match (left, right) {
            (0, 0) => SubstitutionOutcome::Local { max_distance: 2 },
            _ => length_or(left + right, SubstitutionOutcome::Switch),
        }
    };
    Ok(SubstitutionAnalysis { region: SubstitutionRegion::Interior { zero_gap }, outcome })
}

/// Both touched coordinates border the same stretch of `k-1` zeros, so
/// their runs interact.
fn interior_zero_gap(
    z: &[Symbol],
    t1: usize,
    t2: usize,
    [a1, a2, n1, n2]: [Symbol; 4],
    k: usize,
) -> SubstitutionOutcome {
    let (m1, m4) = (zeros_left(z, t1), zeros_right(z, t2));
    let kk = k as isize;
    // mu-length of the window when both ends are nonzero versus when the
    // whole window is one zero run
    let apart = red(m1, k) + 1 + (kk - 1) + 1 + red(m4, k);
    let joined = red(m1 + m4 + k + 1, k);
    match (a1 != 0, a2 != 0, n1 != 0, n2 != 0) {
        (true, true, true, true) => SubstitutionOutcome::Local { max_distance: 2 },
        (true, true, true, false) | (true, true, false, true) => SubstitutionOutcome::LengthChange { delta: -kk },
        (true, true, false, false) => length_or(joined - apart, SubstitutionOutcome::Local { max_distance: 2 }),
        (true, false, true, _) | (false, true, _, true) => SubstitutionOutcome::LengthChange { delta: kk },
        // the nonzero symbol hops k places along its zero run
        (true, false, false, _) | (false, true, _, false) => SubstitutionOutcome::RootUnchanged,
        (false, false, _, _) => SubstitutionOutcome::LengthChange { delta: apart - joined },
    }
}
