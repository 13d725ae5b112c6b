use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{Permutation, RepTheoryError};
use crate::algebra::{Sign, SquareMatrix};
use crate::jones::RepDefinition;

/// `φ^(0)(c_i)`: the generator images at `u = ε`, i.e. the constant terms of
/// their `h`-expansions.
pub fn degree0_generators(rep: &RepDefinition, eps: Sign) -> Vec<SquareMatrix<BigRational>> {
    rep.generators()
        .iter()
        .map(|g| g.map(|p| BigRational::from_integer(p.eval_sign(eps))))
        .collect()
}

/// Representation of `S_{k+1}` through `(i, i+1) ↦ g_i` for `k` involutions
/// satisfying the Coxeter relations.
#[derive(Clone, Debug)]
pub struct SymmetricAction {
    gens: Vec<SquareMatrix<BigRational>>,
}

impl SymmetricAction {
    /// Checks `g_i² = I`, `(g_i g_{i+1})³ = I` and `(g_i g_j)² = I` for
    /// `|i − j| ≥ 2`.
    pub fn new(gens: Vec<SquareMatrix<BigRational>>) -> Result<Self, RepTheoryError> {
        for (i, g) in gens.iter().enumerate() {
            if !g.mul(g).is_identity() {
                return Err(RepTheoryError::NotInvolutive { generator: i + 1 });
            }
        }
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let power = if j == i + 1 { 3 } else { 2 };
                if !gens[i].mul(&gens[j]).pow_unsigned(power).is_identity() {
                    return Err(RepTheoryError::CoxeterFailure { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Self { gens })
    }

    pub fn from_rep(rep: &RepDefinition, eps: Sign) -> Result<Self, RepTheoryError> {
        Self::new(degree0_generators(rep, eps))
    }

    /// Degree of the permuted set, one more than the number of generators.
    pub fn degree(&self) -> usize {
        self.gens.len() + 1
    }

    pub fn dim(&self) -> usize {
        self.gens[0].dim()
    }

    pub fn generators(&self) -> &[SquareMatrix<BigRational>] {
        &self.gens
    }

    /// Image of `σ`, as the product along its adjacent-transposition word.
    pub fn matrix(&self, sigma: &Permutation) -> SquareMatrix<BigRational> {
        assert_eq!(sigma.degree(), self.degree(), "permutation degree");
        sigma.adjacent_word().iter().fold(
            SquareMatrix::identity(self.dim(), &BigRational::one()),
            |acc, &i| acc.mul(&self.gens[i]),
        )
    }

    /// Every group element with its matrix, permutations in lexicographic order.
    pub fn elements(&self) -> Vec<(Permutation, SquareMatrix<BigRational>)> {
        Permutation::all(self.degree())
            .into_iter()
            .map(|p| {
                let m = self.matrix(&p);
                (p, m)
            })
            .collect()
    }

    /// Order of the matrix group generated by the images, by breadth-first
    /// closure; `None` once more than `cap` elements are found.
    pub fn closure_order(&self, cap: usize) -> Option<usize> {
        let id = SquareMatrix::identity(self.dim(), &BigRational::one());
        let mut seen = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(m) = queue.pop_front() {
            for g in &self.gens {
                let next = m.mul(g);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push_back(next);
                }
            }
        }
        Some(seen.len())
    }
}

/// `s6_matrix(σ, φ^(0))`: the image of a permutation of six points.
pub fn s6_matrix(
    sigma: &Permutation,
    rep0: &[SquareMatrix<BigRational>],
) -> Result<SquareMatrix<BigRational>, RepTheoryError> {
    Ok(SymmetricAction::new(rep0.to_vec())?.matrix(sigma))
}

/// Integer form of a rational matrix, if every entry is integral and fits.
pub(crate) fn to_i64_matrix(m: &SquareMatrix<BigRational>) -> Option<Vec<i64>> {
    m.entries()
        .iter()
        .map(|q| q.is_integer().then(|| q.to_integer().to_i64()).flatten())
        .collect()
}

pub(crate) fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
