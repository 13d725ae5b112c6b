use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

/// Integer partition in canonical form: parts weakly decreasing, all positive.
///
/// Ordered reverse-lexicographically, so `[6] < [5,1] < … < [1^6]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition(Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid partition '{0}'")]
pub struct PartitionParseError(pub String);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// All partitions of `n`, in canonical (reverse-lexicographic) order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                go(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// Hook lengths of all boxes, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.0[j] - i as u32 - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Multiplicities `m_k` of each part size `k`.
    pub fn part_multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centralizer order `z_μ = Π k^{m_k} m_k!` of a permutation of cycle
    /// type `μ`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (k, m) in self.part_multiplicities() {
            for i in 1..=m {
                z *= BigInt::from(k) * BigInt::from(i);
            }
        }
        z
    }

    /// Compact label with exponents, e.g. `[3,1^3]`, `[2^3]`.
    pub fn compact_label(&self) -> String {
        let body: Vec<String> = self
            .part_multiplicities()
            .into_iter()
            .map(|(k, m)| {
                if m == 1 {
                    k.to_string()
                } else {
                    format!("{k}^{m}")
                }
            })
            .collect();
        format!("[{}]", body.join(","))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Accepts `[4,2]`, `(2,1^4)`, `3,1,1,1` and exponent shorthand `[2^3]`.
impl FromStr for Partition {
    type Err = PartitionParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionParseError(s.to_string());
        let body = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let (k, m) = match tok.split_once('^') {
                Some((k, m)) => (k.trim(), m.trim().parse::<u32>().map_err(|_| err())?),
                None => (tok, 1),
            };
            let k: u32 = k.parse().map_err(|_| err())?;
            if k == 0 {
                return Err(err());
            }
            parts.extend(std::iter::repeat_n(k, m as usize));
        }
        if parts.is_empty() {
            return Err(err());
        }
        Ok(Partition::new(parts))
    }
}
