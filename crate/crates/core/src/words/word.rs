use std::fmt;
use std::str::FromStr;

use super::{parse_word, WordError};

pub const NUM_GENERATORS: u8 = 5;

/// One syllable `c_i^e` of a word, `e ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u8,
    pub exponent: i64,
}

/// Word in the Dehn-twist generators `c1..c5`, kept freely reduced:
/// adjacent syllables on the same generator are merged and zero exponents
/// are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MCGWord {
    letters: Vec<Letter>,
}

impl MCGWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(index: u8) -> Result<Self, WordError> {
        Self::from_letters([(index, 1)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (u8, i64)>) -> Result<Self, WordError> {
        let mut w = Self::identity();
        for (generator, exponent) in letters {
            if !(1..=NUM_GENERATORS).contains(&generator) {
                return Err(WordError::IndexRange {
                    index: generator as usize,
                });
            }
            w.push(Letter {
                generator,
                exponent,
            });
        }
        Ok(w)
    }

    fn push(&mut self, letter: Letter) {
        if letter.exponent == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.generator == letter.generator => {
                last.exponent += letter.exponent;
                if last.exponent == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of syllables.
    pub fn num_letters(&self) -> usize {
        self.letters.len()
    }

    /// Length counted with multiplicity, `Σ |e|`.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exponent.unsigned_abs()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent).sum()
    }

    /// Re-applies free reduction; a no-op on any word built through this API.
    pub fn reduced(&self) -> Self {
        let mut w = Self::identity();
        for &l in &self.letters {
            w.push(l);
        }
        w
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator,
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// `g · self · g^{-1}`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.concat(self).concat(&g.inverse())
    }

    /// `[x, y] = x y x^{-1} y^{-1}`.
    pub fn commutator(x: &Self, y: &Self) -> Self {
        x.concat(y).concat(&x.inverse()).concat(&y.inverse())
    }
}

impl fmt::Display for MCGWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "c{}", l.generator)?;
            if l.exponent != 1 {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}

impl FromStr for MCGWord {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// The hyperelliptic word `c1 c2 c3 c4 c5 c5 c4 c3 c2 c1`.
pub fn hyperelliptic_word() -> MCGWord {
    MCGWord::from_letters([
        (1, 1),
        (2, 1),
        (3, 1),
        (4, 1),
        (5, 2),
        (4, 1),
        (3, 1),
        (2, 1),
        (1, 1),
    ])
    .expect("valid generators")
}
