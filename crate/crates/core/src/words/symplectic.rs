//! Action of the mapping class group on `H_1(Σ_2; Z)` in the symplectic
//! basis `(A1, B1, A2, B2)` with `⟨A_i, B_j⟩ = δ_ij`.

use num_bigint::BigInt;
use num_traits::One;

use super::{GeneratorImages, MCGWord, WordError, NUM_GENERATORS};
use crate::algebra::SquareMatrix;

/// Homology classes of the chain curves: `A1, B1, A1 + A2, B2, A2`.
pub const CHAIN_CLASSES: [[i64; 4]; 5] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [1, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 0, 1, 0],
];

/// `⟨x, y⟩ = xᵀ J y`.
pub fn pairing(x: &[i64; 4], y: &[i64; 4]) -> i64 {
    x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]
}

/// Gram matrix `J` of the intersection form.
pub fn symplectic_form() -> SquareMatrix<BigInt> {
    let e = |x: [i64; 4]| x.map(BigInt::from).to_vec();
    SquareMatrix::from_rows(vec![
        e([0, 1, 0, 0]),
        e([-1, 0, 0, 0]),
        e([0, 0, 0, 1]),
        e([0, 0, -1, 0]),
    ])
    .expect("4x4")
}

/// Integer 4×4 matrix acting on homology.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix(SquareMatrix<BigInt>);

impl SymplecticMatrix {
    /// Wraps `m` after checking `mᵀ J m = J`.
    pub fn new(m: SquareMatrix<BigInt>) -> Option<Self> {
        let s = Self(m);
        (s.0.dim() == 4 && s.is_symplectic()).then_some(s)
    }

    pub fn identity() -> Self {
        Self(SquareMatrix::identity(4, &BigInt::one()))
    }

    pub fn matrix(&self) -> &SquareMatrix<BigInt> {
        &self.0
    }

    pub fn into_matrix(self) -> SquareMatrix<BigInt> {
        self.0
    }

    pub fn is_symplectic(&self) -> bool {
        let j = symplectic_form();
        self.0.transpose().mul(&j).mul(&self.0) == j
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self(self.0.mul(&rhs.0))
    }

    /// `M^{-1} = -J Mᵀ J` for symplectic `M`.
    pub fn inverse(&self) -> Self {
        let j = symplectic_form();
        Self(j.mul(&self.0.transpose()).mul(&j).neg())
    }
}

/// Transvection `x ↦ x + ⟨x, v_i⟩ v_i` along the `i`-th chain class.
pub fn symplectic_generator(index: usize) -> Result<SymplecticMatrix, WordError> {
    if !(1..=NUM_GENERATORS as usize).contains(&index) {
        return Err(WordError::IndexRange { index });
    }
    let v = CHAIN_CLASSES[index - 1];
    // column j of the matrix is T(e_j) = e_j + ⟨e_j, v⟩ v
    let m = SquareMatrix::from_fn(4, |i, j| {
        let mut e = [0i64; 4];
        e[j] = 1;
        let delta = if i == j { 1 } else { 0 };
        BigInt::from(delta + pairing(&e, &v) * v[i])
    });
    Ok(SymplecticMatrix(m))
}

/// The five transvections as generator images for word evaluation.
pub fn symplectic_images() -> GeneratorImages<BigInt> {
    let gens = (1..=NUM_GENERATORS as usize)
        .map(|i| {
            symplectic_generator(i)
                .expect("index in range")
                .into_matrix()
        })
        .collect();
    GeneratorImages::new(gens).expect("transvections are unimodular")
}

pub fn symplectic_image(w: &MCGWord) -> SymplecticMatrix {
    thread_local! {
        static IMAGES: GeneratorImages<BigInt> = symplectic_images();
    }
    IMAGES.with(|images| SymplecticMatrix(images.evaluate(w)))
}

/// Membership in the Torelli group: the homology action is trivial.
pub fn is_torelli(w: &MCGWord) -> bool {
    symplectic_image(w).is_identity()
}

/// Class of `w` in `H_1(M_2) = Z/10`: every generator maps to 1.
pub fn abelianization_class(w: &MCGWord) -> u8 {
    w.exponent_sum().rem_euclid(10) as u8
}
