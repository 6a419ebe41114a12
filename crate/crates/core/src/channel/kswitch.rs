use std::collections::BTreeSet;

use serde::Serialize;

use crate::word::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KSwitchDirection {
    /// `u v w 0^|v| x -> u 0^|v| w v x`
    NonzeroBlockFirst,
    /// `u 0^|v| w v x -> u v w 0^|v| x`
    ZeroBlockFirst,
}

/// One k-switch rewrite: the block `v` at `u_len` trades places with the
/// all-zero block `k` positions away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct KSwitchError {
    pub u_len: usize,
    pub v_len: usize,
    pub w_len: usize,
    pub direction: KSwitchDirection,
}

impl KSwitchError {
    /// Applies the rewrite, or returns `None` when `z` does not have the
    /// required shape at this location.
    pub fn apply(&self, z: &[Symbol]) -> Option<Vec<Symbol>> {
        let (s, len) = (self.u_len, self.v_len);
        let k = self.v_len + self.w_len;
        if len == 0 || self.w_len == 0 || s + k + len > z.len() {
            return None;
        }
        let (block, zeros) = match self.direction {
            KSwitchDirection::NonzeroBlockFirst => (s, s + k),
            KSwitchDirection::ZeroBlockFirst => (s + k, s),
        };
        let v = &z[block..block + len];
        if v.iter().all(|&c| c == 0) || z[zeros..zeros + len].iter().any(|&c| c != 0) {
            return None;
        }
        let mut out = z.to_vec();
        out.copy_within(block..block + len, zeros);
        out[block..block + len].fill(0);
        Some(out)
    }
}

fn all_switches(n: usize, k: usize) -> impl Iterator<Item = KSwitchError> {
    (1..k).flat_map(move |v_len| {
        (0..(n + 1).saturating_sub(k + v_len)).flat_map(move |u_len| {
            [KSwitchDirection::NonzeroBlockFirst, KSwitchDirection::ZeroBlockFirst]
                .into_iter()
                .map(move |direction| KSwitchError { u_len, v_len, w_len: k - v_len, direction })
        })
    })
}

/// Every word reachable from `z` by a single k-switch error. Empty for
/// `k < 2`.
pub fn k_switch_variants(z: &Word, k: usize) -> BTreeSet<Word> {
    all_switches(z.len(), k).filter_map(|e| e.apply(z.symbols())).map(|s| Word::from_raw(z.alphabet(), s)).collect()
}

/// The switch turning `a` into `b`, if there is one.
pub fn differ_by_k_switch(a: &Word, b: &Word, k: usize) -> Option<KSwitchError> {
    if a.len() != b.len() || a.q() != b.q() || a == b {
        return None;
    }
    all_switches(a.len(), k).find(|e| e.apply(a.symbols()).as_deref() == Some(b.symbols()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn w(s: &str, q: u32) -> Word {
        Word::parse(s, Alphabet::new(q).unwrap()).unwrap()
    }

    #[test]
    fn hand_examples() {
        let z = w("11200", 3);
        let variants = k_switch_variants(&z, 3);
        assert!(variants.contains(&w("00211", 3)));
        assert!(k_switch_variants(&w("1111", 2), 2).is_empty());
        assert!(k_switch_variants(&w("0000", 2), 2).is_empty());
        assert!(k_switch_variants(&w("1000", 2), 1).is_empty());
        let e = differ_by_k_switch(&z, &w("00211", 3), 3).unwrap();
        assert_eq!((e.u_len, e.v_len, e.w_len), (0, 2, 1));
        assert_eq!(e.direction, KSwitchDirection::NonzeroBlockFirst);
    }

    #[test]
    fn variants_by_definition() {
        // k=2: v and its zero partner are single symbols two apart.
        let got = k_switch_variants(&w("1010", 2), 2);
        let want: BTreeSet<Word> = [].into_iter().collect();
        assert_eq!(got, want);
        let got = k_switch_variants(&w("10001", 2), 2);
        let want: BTreeSet<Word> = ["00101", "10100"].iter().map(|s| w(s, 2)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn symmetric() {
        let al = Alphabet::new(3).unwrap();
        for n in 0..7usize {
            for code in 0..3usize.pow(n as u32) {
                let mut c = code;
                let s: Vec<Symbol> = (0..n)
                    .map(|_| {
                        let d = (c % 3) as Symbol;
                        c /= 3;
                        d
                    })
                    .collect();
                let z = Word::new(al, s).unwrap();
                for k in 2..4 {
                    for v in k_switch_variants(&z, k) {
                        assert_ne!(v, z);
                        assert_eq!(v.count_zeros(), z.count_zeros());
                        assert!(k_switch_variants(&v, k).contains(&z), "{z} {v} k={k}");
                    }
                }
            }
        }
    }
}
