//! Deterministic pairwise summation.
//!
//! Every reduction in the engines goes through these helpers so that a sum
//! is always evaluated in the same association order, independent of how
//! many worker threads produced its terms.

use num_complex::Complex64;

/// Block length below which terms are accumulated left to right.
const BLOCK: usize = 64;

/// Pairwise sum of the terms `term(0) .. term(n - 1)`.
///
/// The index range is split in halves recursively until blocks of at most
/// [`BLOCK`] terms remain; blocks are summed sequentially.
pub fn pairwise_sum_by<F>(n: usize, term: F) -> Complex64
where
    F: Fn(usize) -> Complex64,
{
    fn rec<F: Fn(usize) -> Complex64>(lo: usize, hi: usize, term: &F) -> Complex64 {
        if hi - lo <= BLOCK {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in lo..hi {
                acc += term(i);
            }
            acc
        } else {
            let mid = lo + (hi - lo) / 2;
            rec(lo, mid, term) + rec(mid, hi, term)
        }
    }
    if n == 0 {
        return Complex64::new(0.0, 0.0);
    }
    rec(0, n, &term)
}

pub fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    pairwise_sum_by(values.len(), |i| values[i])
}

/// Real-valued variant used by the error metrics.
pub fn pairwise_sum_real(values: &[f64]) -> f64 {
    fn rec(v: &[f64]) -> f64 {
        if v.len() <= BLOCK {
            v.iter().sum()
        } else {
            let (a, b) = v.split_at(v.len() / 2);
            rec(a) + rec(b)
        }
    }
    rec(values)
}

/// Left-to-right accumulation, selected when the pairwise flag is off.
pub fn sequential_sum_by<F>(n: usize, term: F) -> Complex64
where
    F: Fn(usize) -> Complex64,
{
    (0..n).fold(Complex64::new(0.0, 0.0), |acc, i| acc + term(i))
}
