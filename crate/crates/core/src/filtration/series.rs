use num_rational::BigRational;
use num_traits::One;

use super::CaseTag;
use crate::algebra::{laurent_matrix_to_series, SquareMatrix, TruncSeries};
use crate::jones::RepDefinition;
use crate::words::MCGWord;

/// `ρ(w)` with `u = ε·e^h` substituted, truncated at `h^order`. The word is
/// evaluated over Laurent polynomials first and substituted once.
pub fn word_series(
    rep: &RepDefinition,
    w: &MCGWord,
    eps: CaseTag,
    order: usize,
) -> SquareMatrix<TruncSeries> {
    laurent_matrix_to_series(&rep.images().evaluate(w), eps.sign(), order)
}

/// Series of `ρ(c_i)^{±1}`.
pub fn generator_series(
    rep: &RepDefinition,
    index: u8,
    inverse: bool,
    eps: CaseTag,
    order: usize,
) -> SquareMatrix<TruncSeries> {
    let images = rep.images();
    let m = if inverse {
        images.generator_inverse(index)
    } else {
        images.generator(index)
    };
    laurent_matrix_to_series(m, eps.sign(), order)
}

/// Same value as [`word_series`], computed as a product of per-generator
/// series matrices (substitute first, multiply second).
pub fn word_series_factored(
    rep: &RepDefinition,
    w: &MCGWord,
    eps: CaseTag,
    order: usize,
) -> SquareMatrix<TruncSeries> {
    let proto = TruncSeries::constant(order, BigRational::one());
    let mut acc = SquareMatrix::identity(rep.dim(), &proto);
    for l in w.letters() {
        let g = generator_series(rep, l.generator, l.exponent < 0, eps, order);
        acc = acc.mul(&g.pow_unsigned(l.exponent.unsigned_abs()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Sign;
    use crate::jones::build_rep;

    #[test]
    fn identity_words() {
        let rep = build_rep(Sign::Plus, -4, 5);
        for eps in CaseTag::BOTH {
            assert!(word_series(&rep, &MCGWord::identity(), eps, 6).is_identity());
            assert!(word_series(&rep, &"c1 c1^-1".parse().unwrap(), eps, 6).is_identity());
            let g = generator_series(&rep, 3, false, eps, 6);
            let gi = generator_series(&rep, 3, true, eps, 6);
            assert!(g.mul(&gi).is_identity());
        }
    }

    #[test]
    fn evaluate_then_substitute_agrees_with_product() {
        let rep = build_rep(Sign::Minus, -4, 5);
        for text in ["c1 c2^-1 c5^3", "(c1 c2)^6", "[c3, c4^-2] c1"] {
            let w: MCGWord = text.parse().unwrap();
            for eps in CaseTag::BOTH {
                assert_eq!(
                    word_series(&rep, &w, eps, 5),
                    word_series_factored(&rep, &w, eps, 5),
                    "{text}"
                );
            }
        }
    }
}
