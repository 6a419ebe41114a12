//! Seeded random channel runs.
//!
//! Stream discipline, all draws from one `ChaCha8Rng::seed_from_u64(seed)`
//! through `gen_range` on `u64` ranges, in this order:
//!
//! 1. restricted noise: index of the noisy duplication in `0..t`;
//!    unrestricted noise: stage of the substitution in `0..=t` (the number
//!    of duplications preceding it);
//! 2. for each step, the substitution first if it is due at this stage
//!    (position in `1..=len`, value in `1..q`), then the duplication start
//!    in `0..=len-k`, then for the noisy step its offset in `1..=k` and
//!    value in `1..q`;
//! 3. a substitution due after the last duplication.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{apply_event, ChannelEvent, EventTrace};
use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Noise {
    None,
    Restricted,
    Unrestricted,
}

fn draw(rng: &mut ChaCha8Rng, lo: usize, hi_inclusive: usize) -> usize {
    rng.gen_range(lo as u64..=hi_inclusive as u64) as usize
}

fn draw_value(rng: &mut ChaCha8Rng, q: u32) -> Symbol {
    rng.gen_range(1..q as u64) as Symbol
}

/// Applies `t` uniformly random duplications plus the requested noise.
pub fn simulate(x: &Word, k: usize, t: usize, noise: Noise, seed: u64) -> Result<(Word, EventTrace)> {
    crate::transform::check_k(k)?;
    if t > 0 && x.len() < k {
        return Err(Error::WordTooShort { len: x.len(), k });
    }
    if noise == Noise::Restricted && t == 0 {
        return Err(Error::InvalidParameter("restricted noise needs at least one duplication".into()));
    }
    if noise == Noise::Unrestricted && x.is_empty() {
        return Err(Error::InvalidParameter("cannot substitute in an empty word".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = x.q();
    let noisy_step = (noise == Noise::Restricted).then(|| draw(&mut rng, 0, t - 1));
    let sub_stage = (noise == Noise::Unrestricted).then(|| draw(&mut rng, 0, t));

    let mut trace = EventTrace::new(x.clone());
    let mut current = x.clone();
    let mut push = |current: &mut Word, e: ChannelEvent| -> Result<()> {
        *current = apply_event(current, e, k)?;
        trace.events.push(e);
        Ok(())
    };
    for step in 0..=t {
        if sub_stage == Some(step) {
            let pos = draw(&mut rng, 1, current.len());
            let value = draw_value(&mut rng, q);
            push(&mut current, ChannelEvent::Substitution { pos, value })?;
        }
        if step == t {
            break;
        }
        let pos = draw(&mut rng, 0, current.len() - k);
        let e = if noisy_step == Some(step) {
            let offset = draw(&mut rng, 1, k);
            let value = draw_value(&mut rng, q);
            ChannelEvent::NoisyDuplication { pos, offset, value }
        } else {
            ChannelEvent::Duplication { pos }
        };
        push(&mut current, e)?;
    }
    Ok((current, trace))
}
