use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::Partition;

/// Largest `n` for which tables are built.
pub const MAX_DEGREE: u32 = 8;

/// Conjugacy classes of `S_n` as `(cycle type, size)` with size `n!/z_μ`,
/// in canonical partition order.
pub fn conjugacy_classes(n: u32) -> Vec<(Partition, u64)> {
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    Partition::all(n)
        .into_iter()
        .map(|mu| {
            let size = (&factorial / mu.centralizer_order())
                .to_u64()
                .expect("class size fits");
            (mu, size)
        })
        .collect()
}

pub fn conjugacy_classes_s6() -> Vec<(Partition, u64)> {
    conjugacy_classes(6)
}

/// Character value `χ_λ(μ)` by the Murnaghan–Nakayama rule.
///
/// Works on beta-sets: with `β_i = λ_i + (ℓ − i)`, removing a rim hook of
/// length `r` moves one bead from `β` to `β − r` (which must be free); the
/// sign is `(−1)` to the number of beads strictly between.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "partitions of different sizes");
    let len = lambda.num_parts();
    let beta: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i) as u32)
        .collect();
    mn_beta(&beta, mu.parts())
}

fn mn_beta(beta: &[u32], hooks: &[u32]) -> i64 {
    let Some((&r, rest)) = hooks.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.to_vec();
        next[idx] = target;
        total += sign * mn_beta(&next, rest);
    }
    total
}

/// Character table of `S_n`: rows are irreducibles `λ`, columns classes
/// `μ`, both in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: u32,
    classes: Vec<(Partition, u64)>,
    irreps: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        assert!(
            (1..=MAX_DEGREE).contains(&n),
            "degree {n} outside 1..={MAX_DEGREE}"
        );
        let classes = conjugacy_classes(n);
        let irreps = Partition::all(n);
        let values = irreps
            .iter()
            .map(|l| classes.iter().map(|(mu, _)| mn_character(l, mu)).collect())
            .collect();
        Self {
            n,
            classes,
            irreps,
            values,
        }
    }

    pub fn s6() -> Self {
        Self::new(6)
    }

    /// Table with arbitrary values; used to exercise downstream checks.
    pub fn from_values(n: u32, values: Vec<Vec<i64>>) -> Self {
        let mut t = Self::new(n);
        assert_eq!(values.len(), t.values.len());
        t.values = values;
        t
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn group_order(&self) -> u64 {
        self.classes.iter().map(|(_, s)| s).sum()
    }

    pub fn classes(&self) -> &[(Partition, u64)] {
        &self.classes
    }

    pub fn irreps(&self) -> &[Partition] {
        &self.irreps
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[i64]> {
        let i = self.irreps.iter().position(|l| l == lambda)?;
        Some(&self.values[i])
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        let j = self.classes.iter().position(|(m, _)| m == mu)?;
        self.row(lambda).map(|r| r[j])
    }

    fn identity_column(&self) -> usize {
        self.classes.len() - 1
    }

    /// `χ_λ(1)`, the dimension of each irreducible.
    pub fn dimensions(&self) -> Vec<i64> {
        let c = self.identity_column();
        self.values.iter().map(|r| r[c]).collect()
    }

    /// `Σ_μ |C_μ| χ_λ(μ) χ_λ'(μ) = |G|·[λ = λ']` for all pairs.
    pub fn rows_orthogonal(&self) -> bool {
        let order = self.group_order() as i128;
        for (a, ra) in self.values.iter().enumerate() {
            for (b, rb) in self.values.iter().enumerate() {
                let s: i128 = self
                    .classes
                    .iter()
                    .zip(ra.iter().zip(rb))
                    .map(|((_, size), (x, y))| *size as i128 * *x as i128 * *y as i128)
                    .sum();
                if s != if a == b { order } else { 0 } {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_λ χ_λ(μ) χ_λ(ν) = z_μ·[μ = ν]` for all pairs of classes.
    pub fn columns_orthogonal(&self) -> bool {
        let order = self.group_order() as i128;
        for (a, (_, size_a)) in self.classes.iter().enumerate() {
            for b in 0..self.classes.len() {
                let s: i128 = self
                    .values
                    .iter()
                    .map(|r| r[a] as i128 * r[b] as i128)
                    .sum();
                let expected = if a == b { order / *size_a as i128 } else { 0 };
                if s != expected {
                    return false;
                }
            }
        }
        true
    }

    pub fn export(&self) -> CharacterTableDoc {
        CharacterTableDoc {
            n: self.n,
            group_order: self.group_order(),
            classes: self
                .classes
                .iter()
                .map(|(mu, size)| ClassDoc {
                    cycle_type: mu.to_string(),
                    size: *size,
                })
                .collect(),
            rows: self
                .irreps
                .iter()
                .zip(&self.values)
                .map(|(l, r)| RowDoc {
                    partition: l.to_string(),
                    values: r.clone(),
                })
                .collect(),
            rows_orthogonal: self.rows_orthogonal(),
            columns_orthogonal: self.columns_orthogonal(),
        }
    }

    /// Plain-text table, one labelled row per irreducible.
    pub fn render(&self) -> String {
        let labels: Vec<String> = self.irreps.iter().map(Partition::compact_label).collect();
        let width = labels.iter().map(String::len).max().unwrap_or(0);
        let mut out = format!("{:width$} |", "");
        for (mu, _) in &self.classes {
            out.push_str(&format!(" {:>8}", mu.compact_label()));
        }
        out.push('\n');
        for (label, row) in labels.iter().zip(&self.values) {
            out.push_str(&format!("{label:width$} |"));
            for v in row {
                out.push_str(&format!(" {v:>8}"));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTableDoc {
    pub n: u32,
    pub group_order: u64,
    pub classes: Vec<ClassDoc>,
    pub rows: Vec<RowDoc>,
    pub rows_orthogonal: bool,
    pub columns_orthogonal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub cycle_type: String,
    pub size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    pub partition: String,
    pub values: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jones::syt_count_brute_force;
    use crate::reptheory::Permutation;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn class_sizes() {
        let classes = conjugacy_classes_s6();
        assert_eq!(classes.len(), 11);
        assert_eq!(classes.iter().map(|(_, s)| s).sum::<u64>(), 720);
        let size = |l: &str| classes.iter().find(|(m, _)| *m == p(l)).unwrap().1;
        assert_eq!(size("[1^6]"), 1);
        assert_eq!(size("[2,1^4]"), 15);
        // brute-force count of every class
        let all = Permutation::all(6);
        for (mu, s) in &classes {
            assert_eq!(
                all.iter().filter(|q| q.cycle_type() == *mu).count() as u64,
                *s
            );
        }
    }

    #[test]
    fn trivial_and_sign_rows() {
        let t = CharacterTable::s6();
        assert!(t.row(&p("[6]")).unwrap().iter().all(|&v| v == 1));
        for (mu, _) in t.classes() {
            // sign character: (−1)^(n − number of cycles)
            let sign = if (6 - mu.num_parts()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(t.value(&p("[1^6]"), mu), Some(sign));
        }
    }

    #[test]
    fn orthogonality_and_dimensions() {
        for n in 1..=MAX_DEGREE {
            let t = CharacterTable::new(n);
            assert!(t.rows_orthogonal(), "rows, n = {n}");
            assert!(t.columns_orthogonal(), "columns, n = {n}");
            let dims: Vec<i64> = t
                .irreps()
                .iter()
                .map(|l| syt_count_brute_force(l) as i64)
                .collect();
            assert_eq!(t.dimensions(), dims);
        }
    }

    #[test]
    fn corrupted_table_fails_orthogonality() {
        let mut values = CharacterTable::s6().values().to_vec();
        values[3][2] += 1;
        let t = CharacterTable::from_values(6, values);
        assert!(!t.rows_orthogonal());
    }

    #[test]
    fn export_is_labelled_in_order() {
        let doc = CharacterTable::s6().export();
        assert_eq!(doc.rows[0].partition, "[6]");
        assert_eq!(doc.rows[10].partition, "[1,1,1,1,1,1]");
        assert_eq!(doc.classes[10].size, 1);
        assert!(doc.rows_orthogonal && doc.columns_orthogonal);
    }
}
