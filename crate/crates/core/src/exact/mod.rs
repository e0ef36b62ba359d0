//! Exact, certificate-producing combinatorial invariants.

mod connectivity;
mod independence;
mod partition;
mod toughness;

use std::cmp::Ordering;
use std::fmt;

pub use connectivity::{vertex_connectivity, ConnectivityCertificate};
pub use independence::{independence_number, IndependenceCertificate};
pub use partition::{balanced_component_split, subset_with_sum};
pub use toughness::{toughness, ToughnessCertificate};

/// Non-negative rational stored unreduced; comparisons cross-multiply.
#[derive(Clone, Copy, Debug, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        Ratio { num, den }
    }

    pub fn reduced(self) -> Self {
        let g = gcd(self.num, self.den);
        Ratio {
            num: self.num / g,
            den: self.den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        write!(f, "{}/{}", r.num, r.den)
    }
}

/// Toughness value; complete graphs have τ = ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tau {
    Finite(Ratio),
    Infinite,
}

impl Tau {
    pub fn to_f64(self) -> f64 {
        match self {
            Tau::Finite(r) => r.to_f64(),
            Tau::Infinite => f64::INFINITY,
        }
    }

    pub fn finite(self) -> Option<Ratio> {
        match self {
            Tau::Finite(r) => Some(r),
            Tau::Infinite => None,
        }
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tau::Finite(r) => r.fmt(f),
            Tau::Infinite => f.write_str("inf"),
        }
    }
}

/// k-subsets of `0..n` as bitmasks, in increasing numeric order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u128 << n;
    let mut next = (k <= n).then(|| (1u128 << k) - 1);
    std::iter::from_fn(move || {
        let x = next?;
        if x >= limit {
            return None;
        }
        next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            Some((((r ^ x) >> 2) / c) | r)
        };
        Some(x as u64)
    })
}
