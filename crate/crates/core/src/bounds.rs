//! Exact counts and the size, redundancy and rate bounds built on them.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::channel::{error_root_closure, ClosureConfig, HorizonSchedule, NoiseModel, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::transform::{check_k, is_rll_symbols, tail_symbols};
use crate::word::Word;

fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    Ok(())
}

/// `|rll(m)|`: words of length `m` over `Z_q` without `0^k`.
///
/// Dynamic programming over the length of the trailing zero run.
pub fn rll_count(q: u32, k: usize, m: usize) -> Result<BigUint> {
    check_q(q)?;
    check_k(k)?;
    // state[s] = words ending in exactly s zeros, s < k
    let mut state = vec![BigUint::zero(); k];
    state[0] = BigUint::one();
    for _ in 0..m {
        let total: BigUint = state.iter().sum();
        let mut next = vec![BigUint::zero(); k];
        next[0] = total * (q - 1);
        next[1..].clone_from_slice(&state[..k - 1]);
        state = next;
    }
    Ok(state.into_iter().sum())
}

/// `|Irr(n)| = q^k |rll(n - k)|`.
pub fn irr_count(q: u32, k: usize, n: usize) -> Result<BigUint> {
    check_k(k)?;
    if n < k {
        return Err(Error::WordTooShort { len: n, k });
    }
    Ok(BigUint::from(q).pow(k as u32) * rll_count(q, k, n - k)?)
}

/// `M = Σ_{i=1}^{⌊n/k⌋} q^k |rll(n - ik)|`, the number of irreducible
/// words having a duplication descendant of length `n`.
pub fn big_m(q: u32, k: usize, n: usize) -> Result<BigUint> {
    check_q(q)?;
    check_k(k)?;
    let head = BigUint::from(q).pow(k as u32);
    let mut total = BigUint::zero();
    for i in 1..=n / k {
        total += &head * rll_count(q, k, n - i * k)?;
    }
    Ok(total)
}

/// `M / (4(n - k))`, needs `n >= 2k >= 4`.
pub fn gv_lower(q: u32, k: usize, n: usize) -> Result<BigRational> {
    if k < 2 || n < 2 * k {
        return Err(Error::InvalidParameter(format!("needs n >= 2k >= 4, got n={n}, k={k}")));
    }
    Ok(BigRational::new(big_m(q, k, n)?.into(), BigUint::from(4 * (n - k)).into()))
}

/// `M / (2(k + 1)^2)`, needs `n >= k >= 2`.
pub fn psquared_lower(q: u32, k: usize, n: usize) -> Result<BigRational> {
    if k < 2 || n < k {
        return Err(Error::InvalidParameter(format!("needs n >= k >= 2, got n={n}, k={k}")));
    }
    Ok(BigRational::new(big_m(q, k, n)?.into(), BigUint::from(2 * (k + 1) * (k + 1)).into()))
}

/// Result of [`v_exact`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VCount {
    pub value: usize,
    /// Exact duplications explored before the noisy one.
    pub horizon: usize,
    pub stabilized: bool,
}

fn check_irreducible_input(x: &Word, k: usize) -> Result<()> {
    check_k(k)?;
    if k < 2 || x.len() < 2 * k {
        return Err(Error::InvalidParameter(format!("needs |x| >= 2k >= 4, got |x|={}, k={k}", x.len())));
    }
    if !is_rll_symbols(&tail_symbols(x.alphabet(), x.symbols(), k), k) {
        return Err(Error::InvalidParameter(format!("{x} is not irreducible")));
    }
    Ok(())
}

/// `V(x) = |rt(D^{*(≤1)}(x)) ∩ Σ^n|`, enumerated with a doubling horizon
/// up to `t_max`.
pub fn v_exact(x: &Word, k: usize, t_max: usize) -> Result<VCount> {
    v_exact_with_cap(x, k, t_max, DEFAULT_CAP)
}

pub fn v_exact_with_cap(x: &Word, k: usize, t_max: usize, cap: usize) -> Result<VCount> {
    check_irreducible_input(x, k)?;
    let config = ClosureConfig {
        schedule: HorizonSchedule::Doubling,
        include_error_free: true,
        stop_when_stable: true,
        cap,
        ..ClosureConfig::new(NoiseModel::Restricted, t_max)
    };
    let closure = error_root_closure(x, k, &config)?;
    let value = closure.roots.keys().filter(|r| r.len() == x.len()).count();
    Ok(VCount { value, horizon: closure.horizon, stabilized: closure.stabilized })
}

/// `(n - k)(q - 1) - wt(φ̄(x))(q - 2)`.
pub fn v_bound(x: &Word, k: usize) -> Result<usize> {
    check_irreducible_input(x, k)?;
    let q = x.q() as usize;
    let wt = tail_symbols(x.alphabet(), x.symbols(), k).iter().filter(|&&c| c != 0).count();
    Ok((x.len() - k) * (q - 1) - wt * (q - 2))
}

/// Natural logarithm of a positive big integer.
fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().expect("fits").ln() + shift as f64 * std::f64::consts::LN_2
}

/// `r(C) = n - log_q |C|`.
pub fn redundancy(size: &BigUint, n: usize, q: u32) -> Result<f64> {
    if size.is_zero() {
        return Err(Error::InvalidParameter("an empty code has no redundancy".into()));
    }
    Ok(n as f64 - ln_big(size) / (q as f64).ln())
}

/// `R(C) = log_q |C| / n`.
pub fn rate(size: &BigUint, n: usize, q: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("rate needs n >= 1".into()));
    }
    Ok(1.0 - redundancy(size, n, q)? / n as f64)
}

fn log_q_ratio(q: u32) -> f64 {
    let q = q as f64;
    (q / (q - 1.0)).ln() / q.ln()
}

/// `n (2/k) log_q(q/(q-1))`, the redundancy bound for `W ∩ Σ^n`.
pub fn w_redundancy_bound(q: u32, k: usize, n: usize) -> f64 {
    n as f64 * 2.0 / k as f64 * log_q_ratio(q)
}

/// The bound above as a multiple of `log_q(q/(q-1))`: exactly `2n/k`.
pub fn w_redundancy_bound_units(k: usize, n: usize) -> BigRational {
    BigRational::new(BigUint::from(2 * n).into(), BigUint::from(k).into())
}

/// Writes `n - log_q size` as `c · log_q(q/(q-1))` with rational `c`, when
/// `size = q^a (q-1)^b` has that shape (`n - a = b`, or `q = 2`).
pub fn redundancy_in_units(size: &BigUint, n: usize, q: u32) -> Option<BigRational> {
    if size.is_zero() {
        return None;
    }
    let strip = |mut v: BigUint, p: u32| {
        let mut e = 0usize;
        if p < 2 {
            return (v, 0);
        }
        while (&v % p).is_zero() {
            v /= p;
            e += 1;
        }
        (v, e)
    };
    let (rest, a) = strip(size.clone(), q);
    let (rest, b) = strip(rest, q - 1);
    if !rest.is_one() || a > n {
        return None;
    }
    let units = n - a;
    (q == 2 || units == b).then(|| BigRational::from_integer(units.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateBounds {
    /// `1 - (2/k) log_q(q/(q-1))`, the achievable rate of the W code family.
    pub lower: f64,
    /// `1 - (q-1) log_q(e) / q^(k+2)`, the upper bound for 1S-correcting codes.
    pub upper: f64,
}

pub fn ecc_rate_bound(q: u32, k: usize) -> RateBounds {
    let qf = q as f64;
    RateBounds {
        lower: 1.0 - 2.0 / k as f64 * log_q_ratio(q),
        upper: 1.0 - (qf - 1.0) * std::f64::consts::E.ln() / qf.ln() / qf.powi(k as i32 + 2),
    }
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// An exact rational with a decimal approximation for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exact(pub BigRational);

impl Exact {
    pub fn approx(&self) -> f64 {
        self.0.numer().to_f64().unwrap_or(f64::NAN) / self.0.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Exact", 2)?;
        st.serialize_field("exact", &self.0.to_string())?;
        st.serialize_field("approx", &self.approx())?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RllEntry {
    pub m: usize,
    #[serde(serialize_with = "decimal")]
    pub count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub rll_counts: Vec<RllEntry>,
    #[serde(serialize_with = "decimal")]
    pub irr_count: BigUint,
    #[serde(rename = "M", serialize_with = "decimal")]
    pub big_m: BigUint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gv_lower: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psquared_lower: Option<Exact>,
    pub rates: BTreeMap<String, f64>,
}

/// Everything above for one parameter triple; bounds outside their
/// domain are left out.
pub fn bound_report(q: u32, k: usize, n: usize) -> Result<BoundReport> {
    let irr = irr_count(q, k, n)?;
    let rll_counts = (0..=n - k).map(|m| Ok(RllEntry { m, count: rll_count(q, k, m)? })).collect::<Result<_>>()?;
    let mut rates = BTreeMap::new();
    rates.insert("irreducible_rate".to_string(), rate(&irr, n, q)?);
    rates.insert("irreducible_redundancy".to_string(), redundancy(&irr, n, q)?);
    rates.insert("w_redundancy_bound".to_string(), w_redundancy_bound(q, k, n));
    let rb = ecc_rate_bound(q, k);
    rates.insert("ecc_rate_lower".to_string(), rb.lower);
    rates.insert("ecc_rate_upper".to_string(), rb.upper);
    Ok(BoundReport {
        q,
        k,
        n,
        rll_counts,
        irr_count: irr,
        big_m: big_m(q, k, n)?,
        gv_lower: gv_lower(q, k, n).ok().map(Exact),
        psquared_lower: psquared_lower(q, k, n).ok().map(Exact),
        rates,
    })
}

/// One CSV row: `n,rll,irr,M,gv_lower,psquared_lower`, where `rll` is
/// `|rll(n - k)|` and missing bounds are empty.
pub fn bound_csv_row(report: &BoundReport) -> String {
    let fmt = |e: &Option<Exact>| e.as_ref().map_or(String::new(), |e| e.0.to_string());
    let rll = report.rll_counts.last().map_or(String::new(), |e| e.count.to_string());
    format!(
        "{},{},{},{},{},{}",
        report.n,
        rll,
        report.irr_count,
        report.big_m,
        fmt(&report.gv_lower),
        fmt(&report.psquared_lower)
    )
}

pub const BOUND_CSV_HEADER: &str = "n,rll,irr,M,gv_lower,psquared_lower";
