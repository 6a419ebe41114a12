//! Linear algebra over a prime field `Z_q`.

use crate::word::Symbol;

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

pub(crate) fn inv(a: Symbol, q: u32) -> Symbol {
    // Fermat: a^(q-2)
    let (mut base, mut exp, mut acc) = (a as u64 % q as u64, q as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        exp >>= 1;
    }
    acc as Symbol
}

/// Solves `m · x = b` for square `m` (row-major); `None` when singular.
pub(crate) fn solve(mut m: Vec<Vec<Symbol>>, mut b: Vec<Symbol>, q: u32) -> Option<Vec<Symbol>> {
    let n = b.len();
    let qq = q as u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        let scale = inv(m[col][col], q) as u64;
        for v in m[col].iter_mut() {
            *v = (*v as u64 * scale % qq) as Symbol;
        }
        b[col] = (b[col] as u64 * scale % qq) as Symbol;
        for r in 0..n {
            let f = m[r][col] as u64;
            if r == col || f == 0 {
                continue;
            }
            let pivot_row = m[col].clone();
            for (v, &p) in m[r].iter_mut().zip(&pivot_row) {
                *v = ((*v as u64 + qq * qq - f * p as u64) % qq) as Symbol;
            }
            b[r] = ((b[r] as u64 + qq * qq - f * b[col] as u64) % qq) as Symbol;
        }
    }
    Some(b)
}
