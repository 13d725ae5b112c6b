use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{analyze, word_series, CaseTag, FiltrationError};
use crate::algebra::{
    constant_term_matrix, rational_to_string, series_coefficient_matrix, SquareMatrix, TruncSeries,
};
use crate::jones::RepDefinition;
use crate::words::MCGWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LeadingOutcome {
    /// Coefficient at the predicted depth equals the predicted matrix.
    Matches,
    /// Predicted matrix is zero and the series vanishes there too: the word
    /// lies strictly deeper.
    Deeper,
    Mismatch,
}

/// Result of comparing a series against a predicted leading term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub outcome: LeadingOutcome,
    pub depth: usize,
    pub expected: Vec<Vec<String>>,
    pub actual: Vec<Vec<String>>,
}

impl PropertyCheck {
    pub fn holds(&self) -> bool {
        self.outcome != LeadingOutcome::Mismatch
    }
}

fn render(m: &SquareMatrix<BigRational>) -> Vec<Vec<String>> {
    m.rows()
        .map(|r| r.iter().map(rational_to_string).collect())
        .collect()
}

/// Reads `series` at valuation `k`: all coefficients of `h^1..h^{k-1}` must
/// vanish, and the `h^k` coefficient is compared with `expected`.
pub fn compare_leading(
    series: &SquareMatrix<TruncSeries>,
    k: usize,
    expected: &SquareMatrix<BigRational>,
) -> PropertyCheck {
    let shallower = !constant_term_matrix(series).is_identity()
        || (1..k).any(|j| !series_coefficient_matrix(series, j).is_zero());
    let actual = series_coefficient_matrix(series, k);
    let outcome = if shallower || actual != *expected {
        LeadingOutcome::Mismatch
    } else if expected.is_zero() {
        LeadingOutcome::Deeper
    } else {
        LeadingOutcome::Matches
    };
    PropertyCheck {
        outcome,
        depth: k,
        expected: render(expected),
        actual: render(&actual),
    }
}

fn require_order(order: usize, needed: usize) -> Result<(), FiltrationError> {
    if order < needed {
        Err(FiltrationError::OrderTooSmall { order, needed })
    } else {
        Ok(())
    }
}

/// `Δ_k(xy) = Δ_k(x) + Δ_k(y)` for words of equal depth `k`.
pub fn check_delta_additivity(
    rep: &RepDefinition,
    x: &MCGWord,
    y: &MCGWord,
    eps: CaseTag,
    order: usize,
) -> Result<PropertyCheck, FiltrationError> {
    let rx = analyze(rep, x, eps, order)?;
    let ry = analyze(rep, y, eps, order)?;
    if rx.depth != ry.depth {
        return Err(FiltrationError::DepthMismatch {
            x: rx.word,
            jx: rx.depth,
            y: ry.word,
            jy: ry.depth,
        });
    }
    let series = word_series(rep, &x.concat(y), eps, order);
    Ok(compare_leading(&series, rx.depth, &rx.delta.add(&ry.delta)))
}

/// `Δ_k(x^n) = n·Δ_k(x)`.
pub fn check_power(
    rep: &RepDefinition,
    x: &MCGWord,
    n: i64,
    eps: CaseTag,
    order: usize,
) -> Result<PropertyCheck, FiltrationError> {
    let rx = analyze(rep, x, eps, order)?;
    let series = word_series(rep, &x.pow(n), eps, order);
    let scale = BigRational::from_integer(n.into());
    Ok(compare_leading(&series, rx.depth, &rx.delta.scale(&scale)))
}

/// `Δ_k(g x g^{-1}) = φ^(0)(g) Δ_k(x) φ^(0)(g)^{-1}`.
pub fn check_equivariance(
    rep: &RepDefinition,
    g: &MCGWord,
    x: &MCGWord,
    eps: CaseTag,
    order: usize,
) -> Result<PropertyCheck, FiltrationError> {
    let rx = analyze(rep, x, eps, order)?;
    let g0 = constant_term_matrix(&word_series(rep, g, eps, order));
    let g0_inv = g0.inverse().expect("degree-0 images are invertible");
    let expected = g0.mul(&rx.delta).mul(&g0_inv);
    let series = word_series(rep, &x.conjugate_by(g), eps, order);
    Ok(compare_leading(&series, rx.depth, &expected))
}

/// The commutator `[x, y]` of words of depths `j`, `k` has leading term
/// `[Δ_j(x), Δ_k(y)]` at `h^{j+k}`, or lies deeper when that vanishes.
pub fn check_bracket(
    rep: &RepDefinition,
    x: &MCGWord,
    y: &MCGWord,
    eps: CaseTag,
    order: usize,
) -> Result<PropertyCheck, FiltrationError> {
    let rx = analyze(rep, x, eps, order)?;
    let ry = analyze(rep, y, eps, order)?;
    let depth = rx.depth + ry.depth;
    require_order(order, depth)?;
    let series = word_series(rep, &MCGWord::commutator(x, y), eps, order);
    Ok(compare_leading(
        &series,
        depth,
        &rx.delta.commutator(&ry.delta),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Sign;
    use crate::jones::build_rep;

    fn w(s: &str) -> MCGWord {
        s.parse().unwrap()
    }

    #[test]
    fn additivity_and_kernel() {
        let rep = build_rep(Sign::Plus, -4, 5);
        for eps in CaseTag::BOTH {
            let x = w("(c1 c2)^6");
            assert!(check_delta_additivity(&rep, &x, &w("(c2 c3)^6"), eps, 8)
                .unwrap()
                .holds());
            let inv = check_delta_additivity(&rep, &x, &x.inverse(), eps, 8).unwrap();
            assert_eq!(inv.outcome, LeadingOutcome::Deeper);
            assert_eq!(
                check_delta_additivity(&rep, &x, &x, eps, 8)
                    .unwrap()
                    .outcome,
                LeadingOutcome::Matches
            );
        }
    }

    #[test]
    fn powers_and_inverses() {
        let rep = build_rep(Sign::Plus, -4, 5);
        let x = w("(c3 c4)^6");
        for n in [-2, -1, 2, 3] {
            assert_eq!(
                check_power(&rep, &x, n, CaseTag::Minus, 6).unwrap().outcome,
                LeadingOutcome::Matches
            );
        }
    }

    #[test]
    fn equivariance() {
        let rep = build_rep(Sign::Plus, -4, 5);
        for eps in CaseTag::BOTH {
            for (g, x) in [
                ("c3", "(c1 c2)^6"),
                ("", "(c1 c2)^6"),
                ("c1^2", "(c4 c5)^6"),
            ] {
                let r = check_equivariance(&rep, &w(g), &w(x), eps, 6).unwrap();
                assert_eq!(r.outcome, LeadingOutcome::Matches, "{g} {x}");
            }
        }
    }

    #[test]
    fn bracket_of_a_word_with_itself_is_deeper() {
        let rep = build_rep(Sign::Plus, -4, 5);
        let x = w("(c1 c2)^6");
        let r = check_bracket(&rep, &x, &x, CaseTag::Plus, 4).unwrap();
        assert_eq!(r.outcome, LeadingOutcome::Deeper);
        assert_eq!(
            check_bracket(&rep, &x, &x, CaseTag::Plus, 1),
            Err(FiltrationError::OrderTooSmall {
                order: 1,
                needed: 2
            })
        );
    }

    #[test]
    fn wrong_prediction_is_a_mismatch() {
        let rep = build_rep(Sign::Plus, -4, 5);
        let s = word_series(&rep, &w("(c1 c2)^6"), CaseTag::Plus, 4);
        let zero = SquareMatrix::zero(5, &BigRational::from_integer(0.into()));
        assert_eq!(
            compare_leading(&s, 1, &zero).outcome,
            LeadingOutcome::Mismatch
        );
        assert_eq!(
            compare_leading(&s, 2, &zero).outcome,
            LeadingOutcome::Mismatch
        );
    }
}
