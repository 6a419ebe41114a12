//! The duplication/substitution channel.
//!
//! Duplication positions are 0-based template starts: `Duplication { pos }`
//! copies `x[pos..pos+k]` (0-based) and inserts the copy right after the
//! template. Substitution positions are 1-based symbol indices. A noisy
//! duplication adds `value` at offset `1..=k` inside the freshly inserted copy.

mod classify;
pub(crate) mod cone;
mod kswitch;
mod simulate;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

pub use classify::{
    classify_noisy_substitution, classify_substitution, AmbiguousCase, NoisyClass, NotAmbiguousReason,
    SubstitutionAnalysis, SubstitutionOutcome, SubstitutionRegion,
};
pub use cone::{
    descendants_restricted, descendants_unrestricted, error_root_closure, root_set, ClosureConfig, HorizonSchedule,
    NoiseModel, RootClosure, DEFAULT_CAP,
};
pub use kswitch::{differ_by_k_switch, k_switch_variants, KSwitchDirection, KSwitchError};
pub use simulate::{simulate, Noise};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChannelEvent {
    Duplication { pos: usize },
    NoisyDuplication { pos: usize, offset: usize, value: Symbol },
    Substitution { pos: usize, value: Symbol },
}

pub fn apply_event(x: &Word, event: ChannelEvent, k: usize) -> Result<Word> {
    crate::transform::check_k(k)?;
    let al = x.alphabet();
    match event {
        ChannelEvent::Duplication { pos } => {
            check_template(x.len(), pos, k)?;
            Ok(Word::from_raw(al, duplicate(x.symbols(), pos, k)))
        }
        ChannelEvent::NoisyDuplication { pos, offset, value } => {
            check_template(x.len(), pos, k)?;
            if offset == 0 || offset > k {
                return Err(Error::InvalidParameter(format!("offset {offset} is outside 1..={k}")));
            }
            check_value(al, value)?;
            let mut s = duplicate(x.symbols(), pos, k);
            let at = pos + k + offset - 1;
            s[at] = al.add(s[at], value);
            Ok(Word::from_raw(al, s))
        }
        ChannelEvent::Substitution { pos, value } => {
            check_value(al, value)?;
            x.add_scaled_unit(pos, value)
        }
    }
}

fn check_template(len: usize, pos: usize, k: usize) -> Result<()> {
    if len < k || pos > len - k {
        return Err(Error::PositionOutOfRange { pos, len });
    }
    Ok(())
}

fn check_value(al: Alphabet, value: Symbol) -> Result<()> {
    if value == 0 {
        return Err(Error::ZeroValue);
    }
    al.check(value as u32)?;
    Ok(())
}

pub(crate) fn duplicate(x: &[Symbol], pos: usize, k: usize) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(x.len() + k);
    out.extend_from_slice(&x[..pos + k]);
    out.extend_from_slice(&x[pos..pos + k]);
    out.extend_from_slice(&x[pos + k..]);
    out
}

impl fmt::Display for ChannelEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ChannelEvent::Duplication { pos } => write!(f, "DUP pos={pos}"),
            ChannelEvent::NoisyDuplication { pos, offset, value } => {
                write!(f, "NDUP pos={pos} off={offset} val={value}")
            }
            ChannelEvent::Substitution { pos, value } => write!(f, "SUB pos={pos} val={value}"),
        }
    }
}

impl FromStr for ChannelEvent {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let mut parts = line.split_whitespace();
        let tag = parts.next().ok_or_else(|| Error::Parse("empty event line".into()))?;
        let mut pos = None;
        let mut off = None;
        let mut val = None;
        for part in parts {
            let (key, value) = part.split_once('=').ok_or_else(|| Error::Parse(format!("malformed field {part:?}")))?;
            let value: usize = value.parse().map_err(|_| Error::Parse(format!("bad number in {part:?}")))?;
            match key {
                "pos" => pos = Some(value),
                "off" => off = Some(value),
                "val" => val = Some(value),
                _ => return Err(Error::Parse(format!("unknown field {key:?}"))),
            }
        }
        let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Error::Parse(format!("missing {name}")));
        let symbol = |v: usize| Symbol::try_from(v).map_err(|_| Error::Parse(format!("value {v} too large")));
        match tag {
            "DUP" => Ok(ChannelEvent::Duplication { pos: need(pos, "pos")? }),
            "NDUP" => Ok(ChannelEvent::NoisyDuplication {
                pos: need(pos, "pos")?,
                offset: need(off, "off")?,
                value: symbol(need(val, "val")?)?,
            }),
            "SUB" => Ok(ChannelEvent::Substitution { pos: need(pos, "pos")?, value: symbol(need(val, "val")?)? }),
            other => Err(Error::Parse(format!("unknown event {other:?}"))),
        }
    }
}

/// An origin word plus the events applied to it, in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EventTrace {
    pub origin: Word,
    pub events: Vec<ChannelEvent>,
}

impl EventTrace {
    pub fn new(origin: Word) -> Self {
        EventTrace { origin, events: Vec::new() }
    }

    pub fn replay(&self, k: usize) -> Result<Word> {
        self.events.iter().try_fold(self.origin.clone(), |x, &e| apply_event(&x, e, k))
    }

    /// Parses the line-oriented event list; blank lines and `#` comments are
    /// skipped.
    pub fn parse_events(origin: Word, text: &str) -> Result<Self> {
        let events = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(EventTrace { origin, events })
    }
}

impl fmt::Display for EventTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}
