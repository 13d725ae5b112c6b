use std::collections::HashMap;
use std::fmt;

use crate::algebra::{LaurentPoly, SquareMatrix};

use super::JonesError;

/// Largest boundary size accepted by the enumerator.
pub const MAX_POINTS: usize = 12;

/// Non-crossing perfect matching of the points `1..=n`, stored as sorted
/// `(i, j)` pairs with `i < j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinkPattern {
    pairs: Vec<(usize, usize)>,
}

impl LinkPattern {
    /// `None` unless `pairs` is a non-crossing perfect matching of `1..=n`.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Option<Self> {
        let mut seen = vec![false; n + 1];
        let mut normalized = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (i, j) = (a.min(b), a.max(b));
            if i == 0 || j > n || i == j || seen[i] || seen[j] {
                return None;
            }
            seen[i] = true;
            seen[j] = true;
            normalized.push((i, j));
        }
        if seen[1..].iter().any(|s| !s) {
            return None;
        }
        normalized.sort_unstable();
        let p = Self { pairs: normalized };
        p.is_non_crossing().then_some(p)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn num_points(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn partner(&self, point: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(i, j)| {
            if i == point {
                Some(j)
            } else if j == point {
                Some(i)
            } else {
                None
            }
        })
    }

    pub fn has_cup(&self, i: usize) -> bool {
        self.pairs.contains(&(i, i + 1))
    }

    pub fn is_non_crossing(&self) -> bool {
        self.pairs
            .iter()
            .all(|&(a, b)| self.pairs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Pattern obtained by capping points `i, i+1` and joining their former
    /// partners. Requires `(i, i+1)` not already paired.
    fn capped(&self, i: usize) -> LinkPattern {
        let j = self.partner(i).expect("perfect matching");
        let k = self.partner(i + 1).expect("perfect matching");
        let mut pairs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .copied()
            .filter(|&(a, b)| a != i && b != i && a != i + 1 && b != i + 1)
            .collect();
        pairs.push((i, i + 1));
        pairs.push((j.min(k), j.max(k)));
        pairs.sort_unstable();
        LinkPattern { pairs }
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, (i, j)) in self.pairs.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

fn check_points(n: usize) -> Result<(), JonesError> {
    if n % 2 == 1 {
        return Err(JonesError::OddN { n });
    }
    if n == 0 || n > MAX_POINTS {
        return Err(JonesError::UnsupportedN { n });
    }
    Ok(())
}

/// All non-crossing perfect matchings of `1..=n`, lexicographically sorted.
pub fn enumerate_link_patterns(n: usize) -> Result<Vec<LinkPattern>, JonesError> {
    check_points(n)?;
    fn matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let first = points[0];
        let mut out = Vec::new();
        // the partner of `first` must leave an even number of points inside
        for k in (1..points.len()).step_by(2) {
            let inside = &points[1..k];
            let outside = &points[k + 1..];
            for a in matchings(inside) {
                for b in matchings(outside) {
                    let mut m = vec![(first, points[k])];
                    m.extend(a.iter().copied());
                    m.extend(b.iter().copied());
                    out.push(m);
                }
            }
        }
        out
    }
    let points: Vec<usize> = (1..=n).collect();
    let mut out: Vec<LinkPattern> = matchings(&points)
        .into_iter()
        .map(|mut pairs| {
            pairs.sort_unstable();
            LinkPattern { pairs }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Loop value `δ = −(u^m + u^{−m})`.
pub fn loop_value(m: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(m, -1), (-m, -1)])
}

/// Matrix of the Temperley–Lieb cup generator `E_i` on the link-pattern
/// basis of `n` points, with loop value `δ = −(u^m + u^{−m})`.
///
/// Column `p` holds the image of pattern `p`: `δ·p` when `p` already pairs
/// `(i, i+1)`, otherwise the capped pattern with coefficient 1.
pub fn tl_generator(i: usize, n: usize, m: i64) -> Result<SquareMatrix<LaurentPoly>, JonesError> {
    let patterns = enumerate_link_patterns(n)?;
    if i == 0 || i >= n {
        return Err(JonesError::IndexRange { index: i, n });
    }
    let index: HashMap<&LinkPattern, usize> =
        patterns.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let d = patterns.len();
    let delta = loop_value(m);
    let mut out = SquareMatrix::zero(d, &LaurentPoly::zero());
    for (col, p) in patterns.iter().enumerate() {
        if p.has_cup(i) {
            out.set(col, col, delta.clone());
        } else {
            let row = index[&p.capped(i)];
            let prev = out.get(row, col).clone();
            out.set(row, col, &prev + &LaurentPoly::one());
        }
    }
    Ok(out)
}

pub fn catalan(k: u64) -> u64 {
    (0..k).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}
