use std::fmt;

use super::Partition;

/// Permutation of `0..n` in one-line notation: `p[x]` is the image of `x`.
/// Composition is of functions, `(σ∘τ)(x) = σ(τ(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// `None` unless `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// The adjacent transposition `(i, i+1)`, zero-based.
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(i, i + 1);
        Self(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Self(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.0.len()];
        let mut lengths = Vec::new();
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        Partition::new(lengths)
    }

    /// Indices `i_1, …, i_k` with `self = s_{i_1} ∘ … ∘ s_{i_k}` where `s_i`
    /// swaps `i` and `i+1`; found by bubble sort, so `k` is the inversion
    /// number.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut a = self.0.clone();
        let mut swaps = Vec::new();
        // each swap of positions j, j+1 right-multiplies by s_j
        while let Some(j) = (0..a.len().saturating_sub(1)).find(|&j| a[j] > a[j + 1]) {
            a.swap(j, j + 1);
            swaps.push(j);
        }
        swaps.reverse();
        swaps
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            out.push(Self(p.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                break;
            };
            let j = (i + 1..n)
                .rev()
                .find(|&j| p[j] > p[i])
                .expect("successor exists");
            p.swap(i, j);
            p[i + 1..].reverse();
        }
        out
    }

    /// A permutation with the given cycle type: consecutive blocks cycled.
    pub fn with_cycle_type(mu: &Partition) -> Self {
        let mut images = Vec::new();
        let mut start = 0;
        for &len in mu.parts() {
            let len = len as usize;
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Self(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
