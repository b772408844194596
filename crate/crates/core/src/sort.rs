//! The two sorting algorithms used for empirical complexity measurements.

use alloc::vec::Vec;
use core::fmt;

use crate::rng::Xorshift64Star;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SortAlgorithm {
    Insertion,
    Merge,
}

impl SortAlgorithm {
    pub const ALL: [SortAlgorithm; 2] = [SortAlgorithm::Insertion, SortAlgorithm::Merge];

    pub fn label(self) -> &'static str {
        match self {
            SortAlgorithm::Insertion => "insertion",
            SortAlgorithm::Merge => "merge",
        }
    }

    pub fn sort(self, v: &mut [u64]) {
        match self {
            SortAlgorithm::Insertion => insertion_sort(v),
            SortAlgorithm::Merge => merge_sort(v),
        }
    }
}

impl fmt::Display for SortAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn insertion_sort(v: &mut [u64]) {
    for i in 1..v.len() {
        let x = v[i];
        let mut j = i;
        while j > 0 && v[j - 1] > x {
            v[j] = v[j - 1];
            j -= 1;
        }
        v[j] = x;
    }
}

/// Top-down merge sort with one scratch buffer.
pub fn merge_sort(v: &mut [u64]) {
    let mut scratch = v.to_vec();
    merge_rec(v, &mut scratch);
}

fn merge_rec(v: &mut [u64], scratch: &mut [u64]) {
    let n = v.len();
    if n < 2 {
        return;
    }
    let mid = n / 2;
    merge_rec(&mut v[..mid], &mut scratch[..mid]);
    merge_rec(&mut v[mid..], &mut scratch[mid..]);
    scratch[..n].copy_from_slice(v);
    let (left, right) = scratch[..n].split_at(mid);
    let (mut i, mut j) = (0, 0);
    for slot in v.iter_mut() {
        if j >= right.len() || (i < left.len() && left[i] <= right[j]) {
            *slot = left[i];
            i += 1;
        } else {
            *slot = right[j];
            j += 1;
        }
    }
}

/// `n` uniform random 64-bit integers; the same `(n, seed)` always gives
/// the same array.
pub fn random_input(n: usize, seed: u64) -> Vec<u64> {
    let mut rng = Xorshift64Star::stream(seed, n as u64);
    (0..n).map(|_| rng.next_u64()).collect()
}

/// Sorts a copy of `input` with `algorithm` and checks it against the
/// standard library sort.
pub fn checked_sort(algorithm: SortAlgorithm, input: &[u64]) -> Result<Vec<u64>> {
    let mut got = input.to_vec();
    algorithm.sort(&mut got);
    let mut reference = input.to_vec();
    reference.sort_unstable();
    if got != reference {
        return Err(Error::Correctness { algorithm: algorithm.label(), size: input.len() });
    }
    Ok(got)
}
