//! Exact binomials and factorials.

use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)`, zero when `k > n`. Panics on `u64` overflow, which cannot
/// happen for the `n ≤ 62` range this crate works in.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// Signed-argument binomial: zero whenever `n < 0`, `k < 0` or `k > n`.
pub fn binomial_i(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// All `k`-subsets of `{0..n}` as bit masks, ascending numerically.
pub fn k_subsets(n: u32, k: u32) -> Vec<u32> {
    assert!(n <= 32);
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    // Gosper's hack
    let limit: u64 = 1u64 << n;
    let mut x: u64 = (1u64 << k) - 1;
    while x < limit {
        out.push(x as u32);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}
