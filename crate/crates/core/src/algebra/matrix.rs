use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Ring;

/// Dense square matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SquareMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R> SquareMatrix<R> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    /// `None` unless `rows` is a nonempty square array.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Option<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> + '_ {
        self.entries.chunks(self.dim)
    }

    pub fn map<S>(&self, f: impl FnMut(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<R: Clone> SquareMatrix<R> {
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    /// Deletes row `r` and column `c`.
    fn minor(&self, r: usize, c: usize) -> Self {
        let n = self.dim - 1;
        Self::from_fn(n, |i, j| {
            let si = if i < r { i } else { i + 1 };
            let sj = if j < c { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }
}

impl<R: Ring> SquareMatrix<R> {
    /// Identity matrix, with constants taken from `proto`'s ring.
    pub fn identity(dim: usize, proto: &R) -> Self {
        Self::scalar(dim, proto.one_like())
    }

    pub fn zero(dim: usize, proto: &R) -> Self {
        Self::scalar(dim, proto.zero_like())
    }

    pub fn scalar(dim: usize, value: R) -> Self {
        let zero = value.zero_like();
        Self::from_fn(
            dim,
            |i, j| if i == j { value.clone() } else { zero.clone() },
        )
    }

    pub fn diagonal(values: Vec<R>) -> Self {
        let dim = values.len();
        let zero = values[0].zero_like();
        Self::from_fn(dim, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                zero.clone()
            }
        })
    }

    fn proto(&self) -> &R {
        &self.entries[0]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg_ref)
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|a| a.mul_ref(s))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let zero = self.proto().zero_like();
        let mut entries = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero_elem() {
                        let slot = &mut entries[i * n + j];
                        *slot = slot.add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Self { dim: n, entries }
    }

    /// `AB − BA`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero_elem)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let a = self.get(i, j);
                if i == j {
                    a.is_one_elem()
                } else {
                    a.is_zero_elem()
                }
            })
        })
    }

    pub fn trace(&self) -> R {
        (1..self.dim).fold(self.get(0, 0).clone(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    /// Division-free determinant by dynamic programming over column subsets.
    ///
    /// `partial[S]` is the signed sum over injections of the first `|S|` rows
    /// onto the columns in `S`; placing the next row in column `j` adds one
    /// inversion for every already-used column greater than `j`.
    /// `O(2^n · n)` ring operations.
    pub fn determinant(&self) -> R {
        let n = self.dim;
        assert!(
            n <= 20,
            "subset determinant is exponential in the dimension"
        );
        let zero = self.proto().zero_like();
        let mut partial: Vec<Option<R>> = vec![None; 1 << n];
        partial[0] = Some(self.proto().one_like());
        for mask in 0usize..(1 << n) {
            let Some(value) = partial[mask].take() else {
                continue;
            };
            let row = mask.count_ones() as usize;
            if row == n {
                partial[mask] = Some(value);
                continue;
            }
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let a = self.get(row, j);
                if a.is_zero_elem() {
                    continue;
                }
                let mut term = value.mul_ref(a);
                if (mask >> (j + 1)).count_ones() % 2 == 1 {
                    term = term.neg_ref();
                }
                let slot = &mut partial[mask | (1 << j)];
                *slot = Some(match slot.take() {
                    Some(prev) => prev.add_ref(&term),
                    None => term,
                });
            }
        }
        partial[(1 << n) - 1].take().unwrap_or(zero)
    }

    /// Determinant as the signed sum over all `n!` permutations, one product
    /// of entries per permutation. Independent of [`Self::determinant`].
    pub fn determinant_leibniz(&self) -> R {
        let n = self.dim;
        assert!(
            n <= 8,
            "permutation-sum determinant is factorial in the dimension"
        );
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = self.proto().zero_like();
        let mut emit = |perm: &[usize]| {
            let mut inversions = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if perm[a] > perm[b] {
                        inversions += 1;
                    }
                }
            }
            let mut prod = self.proto().one_like();
            for (i, &p) in perm.iter().enumerate() {
                prod = prod.mul_ref(self.get(i, p));
            }
            total = if inversions % 2 == 0 {
                total.add_ref(&prod)
            } else {
                total.sub_ref(&prod)
            };
        };
        heap_permutations(&mut perm, n, &mut emit);
        total
    }

    /// Classical adjugate, `adj(A)·A = det(A)·I`.
    pub fn adjugate(&self) -> Self {
        let n = self.dim;
        if n == 1 {
            return Self::identity(1, self.proto());
        }
        Self::from_fn(n, |i, j| {
            let d = self.minor(j, i).determinant();
            if (i + j) % 2 == 0 {
                d
            } else {
                d.neg_ref()
            }
        })
    }

    /// Inverse as adjugate times the inverse determinant; `None` unless the
    /// determinant is a unit of the ring.
    pub fn inverse(&self) -> Option<Self> {
        let det_inv = self.determinant().unit_inverse()?;
        Some(self.adjugate().scale(&det_inv))
    }

    /// `self^e` for `e ≥ 0`, or a power of the inverse for `e < 0`.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Some(base.pow_unsigned(e.unsigned_abs()))
    }

    pub fn pow_unsigned(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.dim, self.proto());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rank over the fraction field by division-free elimination: each
    /// pivot step replaces `row_i` with `pivot·row_i − a_i·row_pivot`.
    /// Entries grow with the dimension, so this suits small matrices over
    /// integral domains such as `Z[u, u^-1]`.
    pub fn rank(&self) -> usize {
        let n = self.dim;
        let mut rows = self.to_rows();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero_elem()) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            let pivot = pivot_row[col].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                let factor = row[col].clone();
                if factor.is_zero_elem() {
                    continue;
                }
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = pivot.mul_ref(x).sub_ref(&factor.mul_ref(y));
                }
            }
            rank += 1;
        }
        rank
    }
}

fn heap_permutations(perm: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        emit(perm);
        return;
    }
    heap_permutations(perm, k - 1, emit);
    for i in 0..k - 1 {
        if k.is_multiple_of(2) {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
        heap_permutations(perm, k - 1, emit);
    }
}

/// Exact rank of a rational matrix: rows are cleared of denominators and
/// reduced by Bareiss fraction-free elimination over the integers.
pub fn rational_rank(m: &SquareMatrix<BigRational>) -> usize {
    let n = m.dim();
    let mut rows: Vec<Vec<BigInt>> = m
        .rows()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            r.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !Zero::is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..n {
            let factor = rows[r][col].clone();
            let (top, bottom) = rows.split_at_mut(r);
            for (v, p) in bottom[0].iter_mut().zip(&top[rank]) {
                *v = (&pivot * &*v - &factor * p) / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

impl<R: fmt::Display> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
