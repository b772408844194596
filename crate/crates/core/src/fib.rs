//! Three ways to compute Fibonacci numbers, each reporting how much work it
//! did. Indexing starts at `fib(0) = 0`, `fib(1) = 1`.

use core::fmt;
use core::str::FromStr;

use crate::error::range;
use crate::{Error, Result};

/// Largest index whose value fits in a `u64`.
pub const MAX_N: u32 = 92;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FibStrategy {
    /// `fib(n-1) + fib(n-2)`; work counted in calls.
    StackRecursive,
    /// Accumulator recursion; work counted in calls.
    TailRecursive,
    /// A loop; work counted in iterations.
    Iterative,
}

impl FibStrategy {
    pub const ALL: [FibStrategy; 3] =
        [FibStrategy::StackRecursive, FibStrategy::TailRecursive, FibStrategy::Iterative];

    pub fn label(self) -> &'static str {
        match self {
            FibStrategy::StackRecursive => "stack_recursive",
            FibStrategy::TailRecursive => "tail_recursive",
            FibStrategy::Iterative => "iterative",
        }
    }
}

impl fmt::Display for FibStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FibStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FibStrategy::ALL
            .into_iter()
            .find(|st| st.label() == s)
            .ok_or_else(|| range("fibonacci strategy", alloc::format!("unknown strategy {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FibResult {
    pub n: u32,
    pub value: u64,
    /// Calls for the recursive strategies, loop iterations for the iterative one.
    pub op_count: u64,
}

/// Computes `fib(n)` with the given strategy.
///
/// Work done: stack recursive `2 * fib(n + 1) - 1` calls, tail recursive `n`
/// calls, iterative `max(n - 1, 0)` iterations. The stack-recursive strategy
/// is exponential, so large `n` takes correspondingly long.
pub fn fibonacci(n: u32, strategy: FibStrategy) -> Result<FibResult> {
    if n > MAX_N {
        return Err(range("fibonacci index", alloc::format!("{n} > {MAX_N}")));
    }
    let mut ops = 0;
    let value = match strategy {
        FibStrategy::StackRecursive => stack(n, &mut ops),
        FibStrategy::TailRecursive if n == 0 => 0,
        FibStrategy::TailRecursive => tail(n, 0, 1, &mut ops),
        FibStrategy::Iterative => iterative(n, &mut ops),
    };
    Ok(FibResult { n, value, op_count: ops })
}

fn stack(n: u32, calls: &mut u64) -> u64 {
    *calls += 1;
    if n < 2 {
        return n as u64;
    }
    stack(n - 1, calls) + stack(n - 2, calls)
}

fn tail(k: u32, a: u64, b: u64, calls: &mut u64) -> u64 {
    *calls += 1;
    if k == 1 {
        return b;
    }
    tail(k - 1, b, a + b, calls)
}

fn iterative(n: u32, iterations: &mut u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 2..=n {
        (a, b) = (b, a + b);
        *iterations += 1;
    }
    b
}
